#include "antipode/involution.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <tuple>

namespace antipode {

namespace {

using CellKey = std::tuple<int, int, int>;  // (value, column, -row)

CellKey key_of(int value, Cell c) { return {value, c.col, -c.row}; }

Cell max_cell(const Tableau& block) {
    const std::vector<Cell> cells = block.shape().cells();
    Cell best = cells.front();
    CellKey best_key = key_of(block.value_at(best), best);
    for (Cell c : cells) {
        CellKey k = key_of(block.value_at(c), c);
        if (best_key < k) {
            best = c;
            best_key = k;
        }
    }
    return best;
}

// Blocks i-1 and i (1-based) laid onto the shape step(i)/step(i-2).
Tableau merged_pair(const TableauTuple& t, int i) {
    const Tableau& a = t.blocks()[i - 2];
    const Tableau& b = t.blocks()[i - 1];
    SkewShape shape(t.chain().step(i), t.chain().step(i - 2));
    std::vector<int> vals(shape.cell_count(), 0);
    for (Cell c : a.shape().cells()) vals[shape.cell_index(c)] = a.value_at(c);
    for (Cell c : b.shape().cells()) vals[shape.cell_index(c)] = b.value_at(c);
    return Tableau(std::move(shape), std::move(vals));
}

// Drop one corner cell from a partition's diagram.
Partition remove_cell(const Partition& p, Cell c) {
    std::vector<int> parts = p.parts();
    if (c.row > p.length() || parts[c.row - 1] != c.col)
        throw std::logic_error("cell is not a corner of the partition");
    --parts[c.row - 1];
    return Partition(std::move(parts));
}

// Append one cell at the end of a row.
Partition add_cell(const Partition& p, Cell c) {
    std::vector<int> parts = p.parts();
    if (static_cast<int>(parts.size()) < c.row) parts.resize(c.row, 0);
    if (parts[c.row - 1] + 1 != c.col)
        throw std::logic_error("cell does not extend the partition row");
    ++parts[c.row - 1];
    return Partition(std::move(parts));
}

std::vector<Cell> cells_in_order(const Tableau& t) {
    std::vector<Cell> order = t.shape().cells();
    std::sort(order.begin(), order.end(), [&](Cell a, Cell b) {
        return key_of(t.value_at(a), a) < key_of(t.value_at(b), b);
    });
    return order;
}

}  // namespace

std::strong_ordering compare_cells(const Tableau& t, Cell a, Cell b) {
    const auto ord = key_of(t.value_at(a), a) <=> key_of(t.value_at(b), b);
    assert(ord != std::strong_ordering::equal || a == b);
    return ord;
}

std::optional<DistinguishedCell> find_distinguished_cell(const TableauTuple& t) {
    std::optional<DistinguishedCell> best;
    CellKey best_key{};
    auto consider = [&](Cell c, int value, CellKind kind, int block) {
        CellKey k = key_of(value, c);
        if (!best || best_key < k) {
            best = DistinguishedCell{c, kind, block};
            best_key = k;
        }
    };
    for (int i = 1; i <= t.length(); ++i) {
        const Tableau& b = t.blocks()[i - 1];
        if (b.cell_count() > 1) {
            Cell c = max_cell(b);
            consider(c, b.value_at(c), CellKind::splittable, i);
        } else if (i > 1) {
            const Cell c = b.shape().cells().front();
            const int v = b.values().front();
            const Tableau& prev = t.blocks()[i - 2];
            const Cell pm = max_cell(prev);
            if (key_of(prev.value_at(pm), pm) < key_of(v, c) &&
                is_ssyt(merged_pair(t, i)))
                consider(c, v, CellKind::mergeable, i);
        }
    }
    return best;
}

TableauTuple phi(const TableauTuple& t) {
    const auto dc = find_distinguished_cell(t);
    if (!dc) return t;
    const int i = dc->block_index;
    std::vector<Partition> steps = t.chain().steps();
    std::vector<Tableau> blocks = t.blocks();

    if (dc->kind == CellKind::splittable) {
        // The block's maximum has nothing below or to its right inside the
        // block, so it is a corner; peel it off into a singleton block.
        const Tableau& b = blocks[i - 1];
        Partition trimmed = remove_cell(steps[i], dc->cell);
        std::vector<int> head_vals;
        head_vals.reserve(b.cell_count() - 1);
        for (Cell c : b.shape().cells())
            if (!(c == dc->cell)) head_vals.push_back(b.value_at(c));
        Tableau single(SkewShape(steps[i], trimmed), {b.value_at(dc->cell)});
        blocks[i - 1] = Tableau(SkewShape(trimmed, steps[i - 1]), std::move(head_vals));
        blocks.insert(blocks.begin() + i, std::move(single));
        steps.insert(steps.begin() + i, std::move(trimmed));
    } else {
        Tableau merged = merged_pair(t, i);
        blocks[i - 2] = std::move(merged);
        blocks.erase(blocks.begin() + (i - 1));
        steps.erase(steps.begin() + (i - 1));
    }
    return TableauTuple(Chain(std::move(steps)), std::move(blocks));
}

bool is_fixed(const TableauTuple& t) {
    const int n = t.cell_count();
    if (t.length() != n) return false;  // some block has two or more cells
    if (n == 0) return true;
    const ConcatTableau ct = concat(t);
    const std::vector<Cell> order = cells_in_order(ct.tableau);
    for (int i = 1; i <= n; ++i) {
        Cell c = order[n - i];
        if (ct.block_index[ct.tableau.shape().cell_index(c)] != i) return false;
    }
    return true;
}

Tableau fixed_to_rspp(const TableauTuple& t) {
    if (!is_fixed(t))
        throw std::invalid_argument("tuple is not a fixed point");
    Tableau r = concat(t).tableau;
    assert(is_rspp(r));
    return r;
}

TableauTuple rspp_to_fixed(const Tableau& r) {
    if (!is_rspp(r))
        throw std::invalid_argument("tableau is not a row-strict plane partition");
    const std::vector<Cell> order = cells_in_order(r);
    const int n = static_cast<int>(order.size());
    std::vector<Partition> steps;
    steps.reserve(n + 1);
    std::vector<Tableau> blocks;
    blocks.reserve(n);
    steps.push_back(r.shape().inner());
    for (int i = 1; i <= n; ++i) {
        Cell c = order[n - i];
        Partition next = add_cell(steps.back(), c);
        blocks.emplace_back(SkewShape(next, steps.back()),
                            std::vector<int>{r.value_at(c)});
        steps.push_back(std::move(next));
    }
    return TableauTuple(Chain(std::move(steps)), std::move(blocks));
}

}  // namespace antipode
