#include "antipode/render.hpp"

#include <algorithm>

namespace antipode {

namespace {

// Later strokes merge with earlier ones so shared borders join up.
void put(std::vector<std::string>& canvas, int y, int x, char ch) {
    char& at = canvas[y][x];
    if (ch == '+' || at == '+' || (at != ' ' && at != ch))
        at = '+';
    else
        at = ch;
}

}  // namespace

std::string render_ascii(const ConcatTableau& ct) {
    const SkewShape& shape = ct.tableau.shape();
    if (shape.cell_count() == 0) return "empty shape\n";

    int max_val = 0, max_idx = 0;
    for (int v : ct.tableau.values()) max_val = std::max(max_val, v);
    for (int i : ct.block_index) max_idx = std::max(max_idx, i);
    const int val_w = static_cast<int>(std::to_string(max_val).size());
    const int idx_w = static_cast<int>(std::to_string(max_idx).size());
    const int inner = std::max({3, idx_w, val_w + 2});
    const int stride_x = inner + 1;

    int max_col = 0;
    for (int r = 1; r <= shape.row_count(); ++r)
        max_col = std::max(max_col, shape.row_end(r));
    std::vector<std::string> canvas(3 * shape.row_count() + 1,
                                    std::string(stride_x * max_col + 1, ' '));

    for (Cell c : shape.cells()) {
        const int x = (c.col - 1) * stride_x;
        const int y = (c.row - 1) * 3;
        for (int dx = 0; dx <= stride_x; ++dx) {
            put(canvas, y, x + dx, dx == 0 || dx == stride_x ? '+' : '-');
            put(canvas, y + 3, x + dx, dx == 0 || dx == stride_x ? '+' : '-');
        }
        for (int dy = 1; dy <= 2; ++dy) {
            put(canvas, y + dy, x, '|');
            put(canvas, y + dy, x + stride_x, '|');
        }
        const std::string idx = std::to_string(ct.block_index[shape.cell_index(c)]);
        const std::string val = std::to_string(ct.tableau.value_at(c));
        for (std::size_t i = 0; i < idx.size(); ++i) canvas[y + 1][x + 1 + i] = idx[i];
        const int start = x + 1 + (inner - static_cast<int>(val.size())) / 2;
        for (std::size_t i = 0; i < val.size(); ++i) canvas[y + 2][start + i] = val[i];
    }

    std::string out;
    for (std::string& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace antipode
