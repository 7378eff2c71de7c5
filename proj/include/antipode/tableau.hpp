#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "antipode/partition.hpp"

namespace antipode {

// Exponent vector of a monomial in a fixed number of variables.
struct Monomial {
    std::vector<int> exponents;

    int num_vars() const { return static_cast<int>(exponents.size()); }
    bool operator==(const Monomial&) const = default;
};

// A filling of a skew shape by positive integers, stored in row-major order.
class Tableau {
public:
    Tableau(SkewShape shape, std::vector<int> values);

    const SkewShape& shape() const { return shape_; }
    const std::vector<int>& values() const { return values_; }
    int value_at(Cell c) const { return values_[shape_.cell_index(c)]; }
    int cell_count() const { return shape_.cell_count(); }

    bool operator==(const Tableau&) const = default;

private:
    SkewShape shape_;
    std::vector<int> values_;
};

// Rows weakly increase left to right, columns strictly increase top to bottom.
// Cells separated by the inner shape are not compared.
bool is_ssyt(const Tableau& t);

// Rows strictly decrease left to right, columns weakly decrease top to bottom.
bool is_rspp(const Tableau& t);

using TableauVisitor = std::function<void(const Tableau&)>;
using ValuesVisitor = std::function<void(const std::vector<int>&)>;

// Every SSYT (resp. RSPP) of the shape with entries in {1..max_entry}, each
// exactly once, in lexicographic order of the row-major value vector. The
// empty shape yields a single empty filling.
void for_each_ssyt(const SkewShape& shape, int max_entry, const TableauVisitor& visit);
void for_each_rspp(const SkewShape& shape, int max_entry, const TableauVisitor& visit);

// Same streams, but handing out only the row-major value vector.
void for_each_ssyt_values(const SkewShape& shape, int max_entry, const ValuesVisitor& visit);
void for_each_rspp_values(const SkewShape& shape, int max_entry, const ValuesVisitor& visit);

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry);
std::vector<Tableau> enumerate_rspp(const SkewShape& shape, int max_entry);

std::uint64_t count_ssyt(const SkewShape& shape, int max_entry);
std::uint64_t count_rspp(const SkewShape& shape, int max_entry);

// Exponent of variable v = number of cells holding v. Entries above num_vars
// are rejected.
Monomial weight_monomial(const Tableau& t, int num_vars);

}  // namespace antipode
