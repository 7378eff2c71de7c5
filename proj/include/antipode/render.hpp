#pragma once

#include <string>

#include "antipode/expansion.hpp"

namespace antipode {

// Draw the concatenated tuple as a grid of boxes, one per cell, with the
// entry centered and the 1-based block index in the top-left corner:
//
//       +---+---+---+
//       |1  |3  |3  |
//       | 5 | 2 | 4 |
//   +---+---+---+---+
//   |2  |4  |5  |
//   | 5 | 5 | 1 |
//   +---+---+---+
//
// An empty shape renders as "empty shape".
std::string render_ascii(const ConcatTableau& ct);

}  // namespace antipode
