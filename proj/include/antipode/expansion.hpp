#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "antipode/tableau.hpp"

namespace antipode {

// Strict chain of partitions mu = step(0) < step(1) < ... < step(k) = lambda,
// each step properly contained in the next. k = 0 is the trivial chain.
class Chain {
public:
    explicit Chain(std::vector<Partition> steps);

    int length() const { return static_cast<int>(steps_.size()) - 1; }  // k
    const Partition& step(int i) const { return steps_[i]; }
    const std::vector<Partition>& steps() const { return steps_; }
    const Partition& mu() const { return steps_.front(); }
    const Partition& lambda() const { return steps_.back(); }

    bool operator==(const Chain&) const = default;

private:
    std::vector<Partition> steps_;
};

// All strict chains from mu to lambda, depth-first over intermediate
// partitions in lexicographic order. mu = lambda yields exactly the
// length-0 chain.
void for_each_chain(const Partition& mu, const Partition& lambda,
                    const std::function<void(const Chain&)>& visit);
std::vector<Chain> enumerate_chains(const Partition& mu, const Partition& lambda);

// One term of the expanded alternating sum: a chain together with one
// nonempty SSYT block per step. Block i (1-based) fills step(i)/step(i-1).
class TableauTuple {
public:
    TableauTuple(Chain chain, std::vector<Tableau> blocks);

    int length() const { return static_cast<int>(blocks_.size()); }
    const Chain& chain() const { return chain_; }
    const std::vector<Tableau>& blocks() const { return blocks_; }
    const Partition& mu() const { return chain_.mu(); }
    const Partition& lambda() const { return chain_.lambda(); }
    SkewShape shape() const { return SkewShape(lambda(), mu()); }
    int cell_count() const { return lambda().size() - mu().size(); }

    // Multiplicity of entry v at index v-1; no trailing zeros.
    const std::vector<int>& content() const { return content_; }
    int max_entry() const { return static_cast<int>(content_.size()); }

    // Product of the blocks' weight monomials.
    Monomial weight(int num_vars) const;

    bool operator==(const TableauTuple&) const = default;

private:
    Chain chain_;
    std::vector<Tableau> blocks_;
    std::vector<int> content_;
};

// The concatenation of a tuple's blocks: one filling of lambda/mu plus the
// 1-based index of the block each cell came from (parallel to the row-major
// cell order).
struct ConcatTableau {
    Tableau tableau;
    std::vector<int> block_index;

    bool operator==(const ConcatTableau&) const = default;
};

ConcatTableau concat(const TableauTuple& t);

// Inverse of concat; the tuple is recoverable from values plus block indices.
TableauTuple tuple_from_concat(const ConcatTableau& ct);

// Build a tuple from per-block (cell, value) lists in chain order, growing
// the chain upward from mu. Throws std::invalid_argument with a message
// naming the violated invariant ("block 2 violates semistandardness", ...).
TableauTuple assemble_tuple(
    const Partition& mu,
    const std::vector<std::vector<std::pair<Cell, int>>>& blocks);

// All tuples over all chains from mu to lambda with entries <= max_entry,
// each exactly once, streamed in deterministic order.
void for_each_tuple(const Partition& mu, const Partition& lambda, int max_entry,
                    const std::function<void(const TableauTuple&)>& visit);
std::vector<TableauTuple> enumerate_tuples(const Partition& mu,
                                           const Partition& lambda, int max_entry);

// Sum over chains of the product of per-block SSYT counts. Independent
// cross-check for the streamed enumeration.
std::uint64_t count_tuples(const Partition& mu, const Partition& lambda,
                           int max_entry);

}  // namespace antipode
