#include "antipode/verify.hpp"

#include <chrono>

namespace antipode {

bool LadderResult::all_equal() const {
    return takeuchi == tuple_sum && tuple_sum == fixed_sum &&
           fixed_sum == rspp_signed && rspp_signed == closed_form;
}

LadderResult verify_ladder(const SkewShape& shape, int num_vars,
                           SignConvention sign) {
    const std::int64_t s = shape.cell_count() % 2 == 0 ? 1 : -1;
    TupleSweepStats stats = tuple_sweep_stats(shape, num_vars);
    const Polynomial rspp = rspp_poly(shape, num_vars);
    LadderResult r{takeuchi_antipode_poly(shape, num_vars, sign),
                   std::move(stats.signed_sum),
                   stats.fixed_sum.scaled(s),
                   rspp.scaled(s),
                   closed_form_antipode_poly(shape, num_vars),
                   stats.tuple_count,
                   stats.fixed_count,
                   static_cast<std::uint64_t>(rspp.coefficient_sum())};
    return r;
}

bool SweepReport::all_ok() const {
    for (const SweepEntry& e : entries)
        if (!e.identity_ok) return false;
    return true;
}

SweepEntry verify_entry(const Partition& lambda, const Partition& mu, int num_vars,
                        SignConvention sign) {
    const auto start = std::chrono::steady_clock::now();
    const LadderResult lr = verify_ladder(SkewShape(lambda, mu), num_vars, sign);
    const auto stop = std::chrono::steady_clock::now();
    return SweepEntry{
        lambda,
        mu,
        num_vars,
        lr.tuple_count,
        lr.fixed_count,
        lr.all_equal(),
        std::chrono::duration<double, std::milli>(stop - start).count()};
}

SweepReport run_sweep(int max_size, int num_vars, SignConvention sign) {
    SweepReport report;
    for (const Partition& lambda : partitions_up_to(max_size))
        for (const Partition& mu : intermediate_partitions(Partition{}, lambda))
            report.entries.push_back(verify_entry(lambda, mu, num_vars, sign));
    return report;
}

}  // namespace antipode
