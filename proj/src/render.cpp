#include "laverkit/render.hpp"

#include <sstream>

namespace laverkit {

namespace {

// Rows marked in a highlighted rendering: the copy range, when it exists.
std::pair<std::uint64_t, std::uint64_t> highlight_rows(const Blp& p,
                                                       const RenderOptions& o) {
  if (o.highlight && copyable(p)) {
    auto range = copy_range(p);
    return *range;
  }
  return {1, 0};  // empty range
}

}  // namespace

std::string render_ascii(const Blp& p, const RenderOptions& opts) {
  auto [ha, hb] = highlight_rows(p, opts);
  std::ostringstream out;
  for (std::uint64_t i = 1; i <= p.size(); ++i) {
    const Row& r = p.row(i);
    char mark = (i >= ha && i <= hb) ? 'O' : 'o';
    std::string line(opts.cell_width * r.entries.back() + 1, '-');
    for (std::uint64_t c : r.entries) line[opts.cell_width * c] = mark;
    out << line << "  l=" << r.step << '\n';
  }
  return out.str();
}

std::string render_svg(const Blp& p, const RenderOptions& opts) {
  auto [ha, hb] = highlight_rows(p, opts);
  std::uint64_t max_entry = 0;
  for (const Row& r : p.rows())
    if (r.entries.back() > max_entry) max_entry = r.entries.back();
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << 40 + 20 * max_entry << "\" height=\"" << 40 + 20 * (p.size() - 1)
      << "\">\n";
  for (std::uint64_t i = 1; i <= p.size(); ++i) {
    const char* fill = (i >= ha && i <= hb) ? "#66CCFF" : "white";
    for (std::uint64_t c : p.row(i).entries)
      out << "  <circle cx=\"" << 20 + 20 * c << "\" cy=\"" << 20 + 20 * (i - 1)
          << "\" r=\"5\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace laverkit
