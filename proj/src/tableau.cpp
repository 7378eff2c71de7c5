#include "antipode/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace antipode {

Tableau::Tableau(SkewShape shape, std::vector<int> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != shape_.cell_count())
        throw std::invalid_argument("tableau values do not match the cell count");
    for (int v : values_)
        if (v < 1) throw std::invalid_argument("tableau entries must be positive");
}

namespace {

// Shared row/column scan; cmp_row and cmp_col decide admissibility of a
// (left, here) resp. (above, here) pair.
template <class RowOk, class ColOk>
bool check_filling(const Tableau& t, RowOk row_ok, ColOk col_ok) {
    const SkewShape& s = t.shape();
    for (int r = 1; r <= s.row_count(); ++r) {
        for (int c = s.row_begin(r); c <= s.row_end(r); ++c) {
            int v = t.value_at({r, c});
            if (c > s.row_begin(r) && !row_ok(t.value_at({r, c - 1}), v)) return false;
            if (s.has_cell({r - 1, c}) && !col_ok(t.value_at({r - 1, c}), v)) return false;
        }
    }
    return true;
}

enum class FillRule { ssyt, rspp };

// Depth-first fill in row-major order. Constraints only look left and up, so
// each leaf is a valid filling and every valid filling is reached once.
void fill_values(const SkewShape& shape, int max_entry, FillRule rule,
                 const ValuesVisitor& visit) {
    if (max_entry < 1) throw std::invalid_argument("max_entry must be positive");
    const std::vector<Cell> cells = shape.cells();
    std::vector<int> vals(cells.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            visit(vals);
            return;
        }
        const Cell c = cells[idx];
        const bool has_left = shape.has_cell({c.row, c.col - 1});
        const bool has_up = shape.has_cell({c.row - 1, c.col});
        int lo = 1, hi = max_entry;
        if (rule == FillRule::ssyt) {
            if (has_left) lo = std::max(lo, vals[idx - 1]);
            if (has_up) lo = std::max(lo, vals[shape.cell_index({c.row - 1, c.col})] + 1);
        } else {
            if (has_left) hi = std::min(hi, vals[idx - 1] - 1);
            if (has_up) hi = std::min(hi, vals[shape.cell_index({c.row - 1, c.col})]);
        }
        for (int v = lo; v <= hi; ++v) {
            vals[idx] = v;
            self(self, idx + 1);
        }
        vals[idx] = 0;
    };
    rec(rec, 0);
}

std::uint64_t count_fillings(const SkewShape& shape, int max_entry, FillRule rule) {
    std::uint64_t n = 0;
    fill_values(shape, max_entry, rule, [&](const std::vector<int>&) { ++n; });
    return n;
}

}  // namespace

bool is_ssyt(const Tableau& t) {
    return check_filling(
        t, [](int left, int here) { return left <= here; },
        [](int up, int here) { return up < here; });
}

bool is_rspp(const Tableau& t) {
    return check_filling(
        t, [](int left, int here) { return left > here; },
        [](int up, int here) { return up >= here; });
}

void for_each_ssyt_values(const SkewShape& shape, int max_entry,
                          const ValuesVisitor& visit) {
    fill_values(shape, max_entry, FillRule::ssyt, visit);
}

void for_each_rspp_values(const SkewShape& shape, int max_entry,
                          const ValuesVisitor& visit) {
    fill_values(shape, max_entry, FillRule::rspp, visit);
}

void for_each_ssyt(const SkewShape& shape, int max_entry, const TableauVisitor& visit) {
    fill_values(shape, max_entry, FillRule::ssyt,
                [&](const std::vector<int>& vals) { visit(Tableau(shape, vals)); });
}

void for_each_rspp(const SkewShape& shape, int max_entry, const TableauVisitor& visit) {
    fill_values(shape, max_entry, FillRule::rspp,
                [&](const std::vector<int>& vals) { visit(Tableau(shape, vals)); });
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> enumerate_rspp(const SkewShape& shape, int max_entry) {
    std::vector<Tableau> out;
    for_each_rspp(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::uint64_t count_ssyt(const SkewShape& shape, int max_entry) {
    return count_fillings(shape, max_entry, FillRule::ssyt);
}

std::uint64_t count_rspp(const SkewShape& shape, int max_entry) {
    return count_fillings(shape, max_entry, FillRule::rspp);
}

Monomial weight_monomial(const Tableau& t, int num_vars) {
    if (num_vars < 1) throw std::invalid_argument("num_vars must be positive");
    Monomial m{std::vector<int>(num_vars, 0)};
    for (int v : t.values()) {
        if (v > num_vars)
            throw std::invalid_argument("tableau entry exceeds the number of variables");
        ++m.exponents[v - 1];
    }
    return m;
}

}  // namespace antipode
