#include "antipode/json_io.hpp"

#include <stdexcept>
#include <string>

namespace antipode {

namespace {

using nlohmann::json;

const json& expect(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (!j.is_object() || it == j.end())
        throw std::invalid_argument(std::string(what) + " is missing \"" + key + "\"");
    return *it;
}

int expect_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<std::pair<Cell, int>> cells_from_json(const json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " cells must be an array");
    std::vector<std::pair<Cell, int>> out;
    out.reserve(j.size());
    for (const json& c : j) {
        Cell cell{expect_int(expect(c, "row", what), what),
                  expect_int(expect(c, "col", what), what)};
        out.emplace_back(cell, expect_int(expect(c, "value", what), what));
    }
    return out;
}

json cell_to_json(Cell c, int value) {
    return json{{"row", c.row}, {"col", c.col}, {"value", value}};
}

}  // namespace

nlohmann::json partition_to_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw std::invalid_argument("partition must be an array of integers");
    std::vector<int> parts;
    parts.reserve(j.size());
    for (const auto& v : j) parts.push_back(expect_int(v, "partition part"));
    return Partition(std::move(parts));
}

nlohmann::json tableau_to_json(const Tableau& t) {
    nlohmann::json cells = nlohmann::json::array();
    for (Cell c : t.shape().cells()) cells.push_back(cell_to_json(c, t.value_at(c)));
    return nlohmann::json{{"lambda", partition_to_json(t.shape().outer())},
                          {"mu", partition_to_json(t.shape().inner())},
                          {"cells", std::move(cells)}};
}

Tableau tableau_from_json(const nlohmann::json& j) {
    SkewShape shape(partition_from_json(expect(j, "lambda", "tableau")),
                    partition_from_json(expect(j, "mu", "tableau")));
    auto given = cells_from_json(expect(j, "cells", "tableau"), "tableau");
    std::vector<int> vals(shape.cell_count(), 0);
    for (const auto& [cell, value] : given) {
        if (!shape.has_cell(cell))
            throw std::invalid_argument("tableau lists a cell outside the shape");
        int& slot = vals[shape.cell_index(cell)];
        if (slot != 0) throw std::invalid_argument("tableau repeats a cell");
        slot = value;
    }
    if (static_cast<int>(given.size()) != shape.cell_count())
        throw std::invalid_argument("tableau does not fill the shape");
    return Tableau(std::move(shape), std::move(vals));
}

nlohmann::json tuple_to_json(const TableauTuple& t) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const Tableau& b : t.blocks()) {
        nlohmann::json cells = nlohmann::json::array();
        for (Cell c : b.shape().cells()) cells.push_back(cell_to_json(c, b.value_at(c)));
        blocks.push_back(nlohmann::json{{"cells", std::move(cells)}});
    }
    return nlohmann::json{{"lambda", partition_to_json(t.lambda())},
                          {"mu", partition_to_json(t.mu())},
                          {"blocks", std::move(blocks)}};
}

TableauTuple tuple_from_json(const nlohmann::json& j) {
    const Partition lambda = partition_from_json(expect(j, "lambda", "tuple"));
    const Partition mu = partition_from_json(expect(j, "mu", "tuple"));
    const nlohmann::json& jblocks = expect(j, "blocks", "tuple");
    if (!jblocks.is_array())
        throw std::invalid_argument("tuple blocks must be an array");
    std::vector<std::vector<std::pair<Cell, int>>> blocks;
    blocks.reserve(jblocks.size());
    for (std::size_t i = 0; i < jblocks.size(); ++i) {
        const std::string what = "block " + std::to_string(i + 1);
        blocks.push_back(
            cells_from_json(expect(jblocks[i], "cells", what.c_str()), what.c_str()));
    }
    TableauTuple t = assemble_tuple(mu, blocks);
    if (!(t.lambda() == lambda))
        throw std::invalid_argument("blocks fill " + to_string(t.lambda()) +
                                    " but lambda is " + to_string(lambda));
    return t;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exps, coeff] : p.terms())
        terms.push_back(nlohmann::json{{"exponents", exps}, {"coeff", coeff}});
    return nlohmann::json{{"num_vars", p.num_vars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    Polynomial p(expect_int(expect(j, "num_vars", "polynomial"), "num_vars"));
    const nlohmann::json& terms = expect(j, "terms", "polynomial");
    if (!terms.is_array())
        throw std::invalid_argument("polynomial terms must be an array");
    for (const auto& t : terms) {
        const nlohmann::json& je = expect(t, "exponents", "term");
        if (!je.is_array())
            throw std::invalid_argument("term exponents must be an array");
        std::vector<int> exps;
        exps.reserve(je.size());
        for (const auto& e : je) exps.push_back(expect_int(e, "exponent"));
        const nlohmann::json& jc = expect(t, "coeff", "term");
        if (!jc.is_number_integer())
            throw std::invalid_argument("term coeff must be an integer");
        p.add_term(exps, jc.get<std::int64_t>());
    }
    return p;
}

OrbitReport make_orbit_report(const TableauTuple& t) {
    return OrbitReport{t, find_distinguished_cell(t), phi(t)};
}

nlohmann::json orbit_report_to_json(const OrbitReport& r) {
    nlohmann::json cell;
    const char* kind = "fixed";
    if (r.cell) {
        cell = nlohmann::json{{"row", r.cell->cell.row}, {"col", r.cell->cell.col}};
        kind = r.cell->kind == CellKind::splittable ? "split" : "merge";
    }
    return nlohmann::json{{"input", tuple_to_json(r.input)},
                          {"cell", std::move(cell)},
                          {"kind", kind},
                          {"output", tuple_to_json(r.output)}};
}

}  // namespace antipode
