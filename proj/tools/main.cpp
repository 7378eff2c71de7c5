// Command-line front end: verification sweeps, orbit exploration, fixed-point
// listing, and diagram rendering. Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "antipode/json_io.hpp"
#include "antipode/render.hpp"
#include "antipode/verify.hpp"

namespace {

using namespace antipode;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

Partition parse_partition(const std::string& text, const std::string& flag) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string token;
        while (std::getline(ss, token, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size() || value < 0)
                throw std::invalid_argument("malformed partition for " + flag + ": '" +
                                            text + "'");
            parts.push_back(value);
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("malformed partition for " + flag + ": " + e.what());
    }
}

TableauTuple load_tuple(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tuple file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("tuple file is not valid JSON: " + std::string(e.what()));
    }
    return tuple_from_json(j);
}

// All report output goes through one stream so --out works uniformly.
struct Output {
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw std::invalid_argument("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file ? *file : std::cout; }
    std::unique_ptr<std::ofstream> file;
};

json entry_to_json(const SweepEntry& e) {
    return json{{"lambda", partition_to_json(e.lambda)},
                {"mu", partition_to_json(e.mu)},
                {"num_vars", e.num_vars},
                {"tuple_count", e.tuple_count},
                {"fixed_count", e.fixed_count},
                {"identity_ok", e.identity_ok},
                {"elapsed_ms", e.elapsed_ms}};
}

std::string shape_label(const Partition& lambda, const Partition& mu) {
    return to_string(lambda) + "/" + to_string(mu);
}

int cmd_verify(const std::string& lambda_s, const std::string& mu_s, int vars,
               const std::string& format, const std::string& out_path,
               bool flip_sign) {
    const Partition lambda = parse_partition(lambda_s, "--lambda");
    const Partition mu = parse_partition(mu_s, "--mu");
    if (!contains(mu, lambda))
        throw std::invalid_argument("mu " + to_string(mu) + " is not contained in lambda " +
                                    to_string(lambda));
    const auto sign = flip_sign ? SignConvention::all_plus : SignConvention::alternating;
    const SweepEntry entry = verify_entry(lambda, mu, vars, sign);
    const Polynomial antipode = closed_form_antipode_poly(SkewShape(lambda, mu), vars);

    Output out(out_path);
    if (format == "json") {
        json record = entry_to_json(entry);
        record["antipode"] = polynomial_to_json(antipode);
        out.stream() << record.dump() << "\n";
    } else {
        out.stream() << "shape " << shape_label(lambda, mu) << ", " << vars
                     << " variable(s)\n"
                     << "tuples: " << entry.tuple_count
                     << "  fixed points: " << entry.fixed_count << "\n"
                     << "antipode: " << to_string(antipode) << "\n"
                     << "cancellation ladder: "
                     << (entry.identity_ok ? "OK" : "FAILED") << "\n";
    }
    return entry.identity_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(int max_size, int vars, const std::string& format,
              const std::string& out_path, bool flip_sign) {
    const auto sign = flip_sign ? SignConvention::all_plus : SignConvention::alternating;
    Output out(out_path);
    SweepReport report;
    for (const Partition& lambda : partitions_up_to(max_size)) {
        for (const Partition& mu : intermediate_partitions(Partition{}, lambda)) {
            SweepEntry e = verify_entry(lambda, mu, vars, sign);
            if (format == "json")
                out.stream() << entry_to_json(e).dump() << "\n";
            else
                out.stream() << shape_label(e.lambda, e.mu) << ": "
                             << (e.identity_ok ? "OK" : "FAILED")
                             << "  tuples=" << e.tuple_count
                             << " fixed=" << e.fixed_count << "\n";
            report.entries.push_back(std::move(e));
        }
    }
    const bool ok = report.all_ok();
    if (format != "json")
        out.stream() << "sweep: "
                     << (ok ? "all " + std::to_string(report.entries.size()) +
                                  " shapes OK"
                            : "FAILED") << "\n";
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_orbit(const std::string& path, const std::string& format,
              const std::string& out_path) {
    const TableauTuple t = load_tuple(path);
    const OrbitReport report = make_orbit_report(t);
    Output out(out_path);
    if (format == "json") {
        out.stream() << orbit_report_to_json(report).dump() << "\n";
    } else {
        out.stream() << "input:\n" << render_ascii(concat(report.input));
        if (report.cell) {
            out.stream() << "cell (" << report.cell->cell.row << ","
                         << report.cell->cell.col << ") in block "
                         << report.cell->block_index << ": "
                         << (report.cell->kind == CellKind::splittable ? "split"
                                                                       : "merge")
                         << "\noutput:\n"
                         << render_ascii(concat(report.output));
        } else {
            out.stream() << "fixed point; output equals input\n";
        }
    }
    // Self-check that a second application undoes the first.
    if (!(phi(report.output) == report.input)) {
        std::cerr << "error: applying the involution twice did not return the input\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_fixed(const std::string& lambda_s, const std::string& mu_s, int vars,
              const std::string& format, const std::string& out_path) {
    const Partition lambda = parse_partition(lambda_s, "--lambda");
    const Partition mu = parse_partition(mu_s, "--mu");
    if (!contains(mu, lambda))
        throw std::invalid_argument("mu " + to_string(mu) + " is not contained in lambda " +
                                    to_string(lambda));
    Output out(out_path);
    std::uint64_t fixed_count = 0;
    for_each_tuple(mu, lambda, vars, [&](const TableauTuple& t) {
        if (!is_fixed(t)) return;
        ++fixed_count;
        const Tableau r = fixed_to_rspp(t);
        if (format == "json") {
            out.stream() << json{{"tuple", tuple_to_json(t)},
                                 {"rspp", tableau_to_json(r)}}
                                .dump()
                         << "\n";
        } else {
            out.stream() << "fixed #" << fixed_count << ": rows [";
            for (int row = 1; row <= r.shape().row_count(); ++row) {
                if (row > 1) out.stream() << ",";
                out.stream() << "[";
                for (int col = r.shape().row_begin(row); col <= r.shape().row_end(row);
                     ++col) {
                    if (col > r.shape().row_begin(row)) out.stream() << ",";
                    out.stream() << r.value_at({row, col});
                }
                out.stream() << "]";
            }
            out.stream() << "]\n";
        }
    });
    const std::uint64_t rspp = count_rspp(SkewShape(lambda, mu), vars);
    const bool match = fixed_count == rspp;
    if (format == "json")
        out.stream() << json{{"fixed_count", fixed_count},
                             {"rspp_count", rspp},
                             {"match", match}}
                            .dump()
                     << "\n";
    else
        out.stream() << "fixed points: " << fixed_count << "  rspp count: " << rspp
                     << "  match: " << (match ? "yes" : "NO") << "\n";
    return match ? kExitOk : kExitVerificationFailed;
}

int cmd_render(const std::string& path, const std::string& format,
               const std::string& out_path) {
    const TableauTuple t = load_tuple(path);
    Output out(out_path);
    if (format == "json")
        out.stream() << tuple_to_json(t).dump() << "\n";
    else
        out.stream() << render_ascii(concat(t));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur antipode verification engine"};
    app.require_subcommand(1);

    std::string lambda_s, mu_s, file, out_path;
    std::string format = "text";
    std::string render_format = "ascii";
    int vars = 3;
    int max_size = 6;
    bool flip_sign = false;

    auto add_shape_flags = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", lambda_s, "outer partition, comma-separated parts")
            ->required();
        cmd->add_option("--mu", mu_s, "inner partition; empty string for the empty one");
        cmd->add_option("--vars", vars, "number of variables / largest entry");
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out_path, "write the report to a file");
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "check the full cancellation ladder for one shape");
    add_shape_flags(verify);
    verify->add_flag("--flip-sign", flip_sign,
                     "use (+1)^k instead of (-1)^k in the chain sum; verification "
                     "must then fail");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "verify every shape with |lambda| up to --max-size");
    sweep->add_option("--max-size", max_size, "largest |lambda| to sweep");
    sweep->add_option("--vars", vars, "number of variables / largest entry");
    sweep->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sweep->add_option("--out", out_path, "write the report to a file");
    sweep->add_flag("--flip-sign", flip_sign,
                    "use (+1)^k instead of (-1)^k in the chain sum; the sweep must "
                    "then fail");

    CLI::App* orbit = app.add_subcommand(
        "orbit", "apply the involution once to a tuple read from a JSON file");
    orbit->add_option("file", file, "tuple JSON file")->required();
    orbit->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    orbit->add_option("--out", out_path, "write the report to a file");

    CLI::App* fixed = app.add_subcommand(
        "fixed", "list the fixed tuples of a shape with their plane partitions");
    add_shape_flags(fixed);

    CLI::App* render = app.add_subcommand("render", "draw a tuple file");
    render->add_option("file", file, "tuple JSON file")->required();
    render->add_option("--format", render_format, "ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}));
    render->add_option("--out", out_path, "write the output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(lambda_s, mu_s, vars, format, out_path, flip_sign);
        if (sweep->parsed())
            return cmd_sweep(max_size, vars, format, out_path, flip_sign);
        if (orbit->parsed()) return cmd_orbit(file, format, out_path);
        if (fixed->parsed()) return cmd_fixed(lambda_s, mu_s, vars, format, out_path);
        if (render->parsed()) return cmd_render(file, render_format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
