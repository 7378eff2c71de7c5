#include "antipode/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace antipode {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
}

bool contains(const Partition& mu, const Partition& lambda) {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(lambda.part(1), 0);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) ++cols[j];
    return Partition(std::move(cols));
}

std::vector<Partition> intermediate_partitions(const Partition& mu,
                                               const Partition& lambda) {
    if (!contains(mu, lambda))
        throw std::invalid_argument("mu is not contained in lambda");
    std::vector<Partition> out;
    std::vector<int> acc;
    // Row by row; emitting before extending keeps the list lexicographic.
    auto rec = [&](auto&& self, int row, int prev) -> void {
        if (row > lambda.length()) {
            out.emplace_back(acc);
            return;
        }
        int lo = mu.part(row);
        int hi = std::min(lambda.part(row), prev);
        if (lo == 0) {
            out.emplace_back(acc);  // nu ends here; later rows stay empty
            lo = 1;
        }
        for (int v = lo; v <= hi; ++v) {
            acc.push_back(v);
            self(self, row + 1, v);
            acc.pop_back();
        }
    };
    rec(rec, 1, lambda.part(1));
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int p = 1; p <= std::min(cap, remaining); ++p) {
            acc.push_back(p);
            self(self, remaining - p, p);
            acc.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (Partition& p : partitions_of(n)) out.push_back(std::move(p));
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(inner_, outer_))
        throw std::invalid_argument("inner shape not contained in outer shape");
    offsets_.resize(outer_.length() + 1);
    offsets_[0] = 0;
    for (int r = 1; r <= outer_.length(); ++r)
        offsets_[r] = offsets_[r - 1] + (outer_.part(r) - inner_.part(r));
}

bool SkewShape::has_cell(Cell c) const {
    return c.row >= 1 && c.row <= row_count() && c.col >= row_begin(c.row) &&
           c.col <= row_end(c.row);
}

int SkewShape::cell_index(Cell c) const {
    return offsets_[c.row - 1] + (c.col - row_begin(c.row));
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (int r = 1; r <= row_count(); ++r)
        for (int c = row_begin(r); c <= row_end(r); ++c) out.push_back({r, c});
    return out;
}

SkewShape conjugate(const SkewShape& shape) {
    return SkewShape(conjugate(shape.outer()), conjugate(shape.inner()));
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    s += ')';
    return s;
}

}  // namespace antipode
