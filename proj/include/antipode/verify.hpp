#pragma once

#include <cstdint>
#include <vector>

#include "antipode/polynomial.hpp"

namespace antipode {

// The five routes to the antipode of one skew Schur function. All must agree:
//   takeuchi    alternating chain sum of skew Schur products
//   tuple_sum   signed weight sum over all tableau tuples
//   fixed_sum   signed weight sum over the fixed tuples only
//   rspp_signed signed generating polynomial of row-strict plane partitions
//   closed_form signed skew Schur polynomial of the conjugate shape
struct LadderResult {
    Polynomial takeuchi;
    Polynomial tuple_sum;
    Polynomial fixed_sum;
    Polynomial rspp_signed;
    Polynomial closed_form;
    std::uint64_t tuple_count = 0;
    std::uint64_t fixed_count = 0;
    std::uint64_t rspp_count = 0;

    bool all_equal() const;
};

LadderResult verify_ladder(const SkewShape& shape, int num_vars,
                           SignConvention sign = SignConvention::alternating);

struct SweepEntry {
    Partition lambda;
    Partition mu;
    int num_vars = 0;
    std::uint64_t tuple_count = 0;
    std::uint64_t fixed_count = 0;
    bool identity_ok = false;
    double elapsed_ms = 0.0;
};

struct SweepReport {
    std::vector<SweepEntry> entries;

    bool all_ok() const;
};

SweepEntry verify_entry(const Partition& lambda, const Partition& mu, int num_vars,
                        SignConvention sign = SignConvention::alternating);

// Every lambda with |lambda| <= max_size and every mu contained in it, in
// (lambda, mu) order.
SweepReport run_sweep(int max_size, int num_vars,
                      SignConvention sign = SignConvention::alternating);

}  // namespace antipode
