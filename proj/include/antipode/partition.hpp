#pragma once

#include <compare>
#include <string>
#include <vector>

namespace antipode {

// Integer partition in canonical form: weakly decreasing positive parts,
// no trailing zeros. The empty partition is Partition{}.
class Partition {
public:
    Partition() = default;

    // Strips trailing zeros, then requires parts[i] >= parts[i+1] >= 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Number of cells of the Young diagram.
    int size() const;

    // 1-based row length; 0 beyond the last row.
    int part(int row) const {
        return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Matrix coordinates, English notation: row 1 is the top row, column 1 the
// leftmost; rows grow downward.
struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;  // row-major
};

// mu_i <= lambda_i for all i (missing rows count as 0).
bool contains(const Partition& mu, const Partition& lambda);

// Transpose of the Young diagram: conjugate(lambda)_j = #{i : lambda_i >= j}.
Partition conjugate(const Partition& lambda);

// All nu with mu contained in nu contained in lambda, in lexicographic order
// of the part vectors. Throws if mu is not contained in lambda.
std::vector<Partition> intermediate_partitions(const Partition& mu,
                                               const Partition& lambda);

// All partitions of exactly n, lexicographically ascending.
std::vector<Partition> partitions_of(int n);

// All partitions of size 0..max_size, size-major then lexicographic.
std::vector<Partition> partitions_up_to(int max_size);

// Skew shape lambda/mu: the cells of lambda's diagram not in mu's.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int cell_count() const { return offsets_.back(); }
    int row_count() const { return outer_.length(); }

    // Column range of a row's cells; the row is empty iff begin > end.
    int row_begin(int row) const { return inner_.part(row) + 1; }
    int row_end(int row) const { return outer_.part(row); }

    bool has_cell(Cell c) const;

    // Row-major position of c among cells(); pre: has_cell(c).
    int cell_index(Cell c) const;

    // Row ascending, column ascending; length equals cell_count().
    std::vector<Cell> cells() const;

    bool operator==(const SkewShape& o) const {
        return outer_ == o.outer_ && inner_ == o.inner_;
    }

private:
    Partition outer_;
    Partition inner_;
    std::vector<int> offsets_;  // offsets_[r] = number of cells in rows 1..r
};

SkewShape conjugate(const SkewShape& shape);

// "(4,3)", "()" — used in diagnostics.
std::string to_string(const Partition& p);

}  // namespace antipode
