#include "antipode/expansion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "checked_arith.hpp"

namespace antipode {

Chain::Chain(std::vector<Partition> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("chain must have at least one step");
    for (std::size_t i = 1; i < steps_.size(); ++i) {
        if (steps_[i - 1] == steps_[i] || !contains(steps_[i - 1], steps_[i]))
            throw std::invalid_argument("chain steps must strictly increase");
    }
}

void for_each_chain(const Partition& mu, const Partition& lambda,
                    const std::function<void(const Chain&)>& visit) {
    if (!contains(mu, lambda))
        throw std::invalid_argument("mu is not contained in lambda");
    std::vector<Partition> steps{mu};
    auto rec = [&](auto&& self) -> void {
        if (steps.back() == lambda) {
            visit(Chain(steps));
            return;
        }
        for (const Partition& nu : intermediate_partitions(steps.back(), lambda)) {
            if (nu == steps.back()) continue;
            steps.push_back(nu);
            self(self);
            steps.pop_back();
        }
    };
    rec(rec);
}

std::vector<Chain> enumerate_chains(const Partition& mu, const Partition& lambda) {
    std::vector<Chain> out;
    for_each_chain(mu, lambda, [&](const Chain& c) { out.push_back(c); });
    return out;
}

TableauTuple::TableauTuple(Chain chain, std::vector<Tableau> blocks)
    : chain_(std::move(chain)), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != chain_.length())
        throw std::invalid_argument("tuple needs one block per chain step");
    for (int i = 0; i < chain_.length(); ++i) {
        const Tableau& b = blocks_[i];
        if (!(b.shape() == SkewShape(chain_.step(i + 1), chain_.step(i))))
            throw std::invalid_argument("block " + std::to_string(i + 1) +
                                        " does not fill its chain step");
        if (!is_ssyt(b))
            throw std::invalid_argument("block " + std::to_string(i + 1) +
                                        " violates semistandardness");
        for (int v : b.values()) {
            if (v > static_cast<int>(content_.size())) content_.resize(v, 0);
            ++content_[v - 1];
        }
    }
}

Monomial TableauTuple::weight(int num_vars) const {
    if (num_vars < 1) throw std::invalid_argument("num_vars must be positive");
    if (max_entry() > num_vars)
        throw std::invalid_argument("tuple entry exceeds the number of variables");
    Monomial m{std::vector<int>(num_vars, 0)};
    std::copy(content_.begin(), content_.end(), m.exponents.begin());
    return m;
}

ConcatTableau concat(const TableauTuple& t) {
    SkewShape shape = t.shape();
    std::vector<int> vals(shape.cell_count(), 1);
    std::vector<int> idx(shape.cell_count(), 0);
    for (int i = 0; i < t.length(); ++i) {
        const Tableau& b = t.blocks()[i];
        for (Cell c : b.shape().cells()) {
            int pos = shape.cell_index(c);
            vals[pos] = b.value_at(c);
            idx[pos] = i + 1;
        }
    }
    return ConcatTableau{Tableau(std::move(shape), std::move(vals)), std::move(idx)};
}

TableauTuple tuple_from_concat(const ConcatTableau& ct) {
    int k = 0;
    for (int i : ct.block_index) k = std::max(k, i);
    std::vector<std::vector<std::pair<Cell, int>>> blocks(k);
    const std::vector<Cell> cells = ct.tableau.shape().cells();
    for (std::size_t p = 0; p < cells.size(); ++p) {
        int i = ct.block_index[p];
        if (i < 1)
            throw std::invalid_argument("block indices must be positive");
        blocks[i - 1].emplace_back(cells[p], ct.tableau.values()[p]);
    }
    TableauTuple t = assemble_tuple(ct.tableau.shape().inner(), blocks);
    if (!(t.lambda() == ct.tableau.shape().outer()))
        throw std::invalid_argument("blocks do not fill the shape");
    return t;
}

TableauTuple assemble_tuple(
    const Partition& mu,
    const std::vector<std::vector<std::pair<Cell, int>>>& blocks) {
    std::vector<Partition> steps{mu};
    std::vector<Tableau> tabs;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::string name = "block " + std::to_string(b + 1);
        auto cellvals = blocks[b];
        if (cellvals.empty()) throw std::invalid_argument(name + " is empty");
        std::sort(cellvals.begin(), cellvals.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t i = 1; i < cellvals.size(); ++i)
            if (cellvals[i - 1].first == cellvals[i].first)
                throw std::invalid_argument(name + " repeats a cell");

        // Grow the previous shape by the block's cells. Within each row they
        // must continue right where the previous shape ends.
        std::vector<int> parts = steps.back().parts();
        for (const auto& [cell, value] : cellvals) {
            if (cell.row < 1 || cell.col < 1)
                throw std::invalid_argument(name + " has a cell outside the grid");
            if (value < 1)
                throw std::invalid_argument(name + " has a nonpositive entry");
            if (static_cast<int>(parts.size()) < cell.row) parts.resize(cell.row, 0);
            if (parts[cell.row - 1] + 1 != cell.col)
                throw std::invalid_argument(name + " does not extend the previous shape");
            ++parts[cell.row - 1];
        }
        Partition next;
        try {
            next = Partition(parts);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(name + " does not produce a partition shape");
        }

        std::vector<int> vals;
        vals.reserve(cellvals.size());
        for (const auto& cv : cellvals) vals.push_back(cv.second);
        Tableau tab(SkewShape(next, steps.back()), std::move(vals));
        if (!is_ssyt(tab))
            throw std::invalid_argument(name + " violates semistandardness");
        steps.push_back(std::move(next));
        tabs.push_back(std::move(tab));
    }
    return TableauTuple(Chain(std::move(steps)), std::move(tabs));
}

void for_each_tuple(const Partition& mu, const Partition& lambda, int max_entry,
                    const std::function<void(const TableauTuple&)>& visit) {
    if (max_entry < 1) throw std::invalid_argument("max_entry must be positive");
    for_each_chain(mu, lambda, [&](const Chain& ch) {
        const int k = ch.length();
        std::vector<std::vector<Tableau>> options(k);
        for (int i = 0; i < k; ++i) {
            options[i] = enumerate_ssyt(SkewShape(ch.step(i + 1), ch.step(i)), max_entry);
            if (options[i].empty()) return;  // chain contributes nothing
        }
        std::vector<std::size_t> pick(k, 0);
        while (true) {
            std::vector<Tableau> blocks;
            blocks.reserve(k);
            for (int i = 0; i < k; ++i) blocks.push_back(options[i][pick[i]]);
            visit(TableauTuple(ch, std::move(blocks)));
            int j = k - 1;
            while (j >= 0 && ++pick[j] == options[j].size()) pick[j--] = 0;
            if (j < 0) break;
        }
    });
}

std::vector<TableauTuple> enumerate_tuples(const Partition& mu,
                                           const Partition& lambda, int max_entry) {
    std::vector<TableauTuple> out;
    for_each_tuple(mu, lambda, max_entry,
                   [&](const TableauTuple& t) { out.push_back(t); });
    return out;
}

std::uint64_t count_tuples(const Partition& mu, const Partition& lambda,
                           int max_entry) {
    if (max_entry < 1) throw std::invalid_argument("max_entry must be positive");
    std::uint64_t total = 0;
    for_each_chain(mu, lambda, [&](const Chain& ch) {
        std::uint64_t prod = 1;
        for (int i = 1; i <= ch.length(); ++i) {
            prod = detail::checked_mul_u64(
                prod, count_ssyt(SkewShape(ch.step(i), ch.step(i - 1)), max_entry));
            if (prod == 0) break;
        }
        total = detail::checked_add_u64(total, prod);
    });
    return total;
}

}  // namespace antipode
