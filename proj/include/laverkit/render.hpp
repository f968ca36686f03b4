#pragma once

#include <cstdint>
#include <string>

#include "laverkit/pattern.hpp"

namespace laverkit {

struct RenderOptions {
  std::uint64_t cell_width = 2;  // ASCII columns per unit (ASCII only)
  bool highlight = false;        // mark the copy range a..b when copyable
};

// One text line per row: 'o' at column cell_width * c for each entry c,
// '-' elsewhere, length cell_width * (last entry) + 1, then "  l=<step>".
// Highlighted rows use 'O'.
std::string render_ascii(const Blp& p, const RenderOptions& opts = {});

// Minimal SVG: one circle per entry at (20 + 20c, 20 + 20(i-1)), r = 5;
// highlighted rows fill "#66CCFF", others "white"; all stroke "black".
// Canvas is width 40 + 20 * (max entry), height 40 + 20 * (n - 1).
std::string render_svg(const Blp& p, const RenderOptions& opts = {});

}  // namespace laverkit
