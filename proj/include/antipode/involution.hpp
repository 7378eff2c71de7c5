#pragma once

#include <compare>
#include <optional>

#include "antipode/expansion.hpp"

namespace antipode {

enum class CellKind { splittable, mergeable };

// The cell a split or merge step acts on, with the 1-based block holding it.
struct DistinguishedCell {
    Cell cell;
    CellKind kind = CellKind::splittable;
    int block_index = 0;

    bool operator==(const DistinguishedCell&) const = default;
};

// Total order on the cells of a filling, ascending by (value, column, -row):
// smaller entry first, then smaller column, then larger row. Distinct cells
// never compare equal (cells sharing value and column differ in row).
std::strong_ordering compare_cells(const Tableau& t, Cell a, Cell b);

// A cell of block i is splittable when the block has more than one cell and
// the cell is the block's maximum; it is mergeable when i > 1, the block is a
// singleton, the union with block i-1 is semistandard, and the cell exceeds
// every cell of block i-1. Returns the largest such cell, or nothing.
std::optional<DistinguishedCell> find_distinguished_cell(const TableauTuple& t);

// One split or merge at the distinguished cell; identity when there is none.
// Self-inverse, changes the length by exactly 1 off fixed points, and never
// touches any cell's entry.
TableauTuple phi(const TableauTuple& t);

// Fixed points of phi: every block a singleton and, listing the cells
// c_1 < c_2 < ... < c_n in the cell order, block i holds c_{n-i+1}.
bool is_fixed(const TableauTuple& t);

// The concatenation of a fixed tuple is a row-strict plane partition.
Tableau fixed_to_rspp(const TableauTuple& t);

// Inverse direction: block i is the singleton on the (n-i+1)-st cell in the
// cell order of the given row-strict plane partition.
TableauTuple rspp_to_fixed(const Tableau& r);

}  // namespace antipode
