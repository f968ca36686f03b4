#include "laverkit/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include <json.hpp>

#include "laverkit/error.hpp"

namespace laverkit {

namespace {

std::string row_to_string(const Row& r) {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < r.entries.size(); ++j) {
    if (j) out << ',';
    out << r.entries[j];
  }
  out << ") step " << r.step;
  return out.str();
}

bool step_allowed(std::size_t len, std::uint64_t step) {
  if (len % 2 == 1) return step == (len - 1) / 2;
  if (len == 4) return step == 1;
  return step == len / 2 || step == len / 2 - 1;
}

bool suitable(const Row& r) {
  return r.entries.size() % 2 == 1 && r.entries.size() >= 5;
}

}  // namespace

std::vector<std::string> validate(const std::vector<Row>& rows) {
  std::vector<std::string> bad;
  if (rows.size() < 2) {
    bad.push_back("fewer than 2 rows");
    return bad;
  }
  if (rows[0].entries != std::vector<std::uint64_t>{0, 1, 2} || rows[0].step != 1)
    bad.push_back("row 1 must be (0,1,2) step 1, got " + row_to_string(rows[0]));
  if (rows[1].entries != std::vector<std::uint64_t>{0, 1, 2, 3} || rows[1].step != 1)
    bad.push_back("row 2 must be (0,1,2,3) step 1, got " + row_to_string(rows[1]));
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    std::uint64_t i = idx + 1;
    const Row& r = rows[idx];
    std::string where = "row " + std::to_string(i) + " ";
    if (r.entries.size() < 3) {
      bad.push_back(where + "has fewer than 3 entries");
      continue;
    }
    bool increasing = true;
    for (std::size_t j = 0; j + 1 < r.entries.size(); ++j)
      if (r.entries[j] >= r.entries[j + 1]) increasing = false;
    if (!increasing) bad.push_back(where + "is not strictly increasing");
    std::size_t L = r.entries.size();
    if (r.entries[L - 2] != i || r.entries[L - 1] != i + 1)
      bad.push_back(where + "must end with " + std::to_string(i) + "," +
                    std::to_string(i + 1));
    if (!step_allowed(L, r.step))
      bad.push_back(where + "step " + std::to_string(r.step) +
                    " not allowed for length " + std::to_string(L));
  }
  return bad;
}

Blp::Blp(std::vector<Row> rows) : rows_(std::move(rows)) {
  std::vector<std::string> bad = validate(rows_);
  if (!bad.empty()) {
    std::string msg;
    for (std::size_t i = 0; i < bad.size(); ++i) {
      if (i) msg += "; ";
      msg += bad[i];
    }
    fail("Invalid", msg);
  }
}

std::uint64_t Blp::entry(std::uint64_t i, std::int64_t k) const {
  if (i < 1 || i > rows_.size()) fail("OutOfRange", "no row " + std::to_string(i));
  const auto& e = rows_[i - 1].entries;
  std::int64_t L = static_cast<std::int64_t>(e.size());
  std::int64_t pos = k > 0 ? k : L + 1 + k;  // -k means position L+1-k
  if (pos < 1 || pos > L)
    fail("OutOfRange", "row " + std::to_string(i) + " has no position " +
                           std::to_string(k));
  return e[pos - 1];
}

const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::Zero: return "Zero";
    case PatternKind::Successor: return "Successor";
    case PatternKind::Limit: return "Limit";
    case PatternKind::Transient: return "Transient";
  }
  return "?";
}

PatternKind classify(const Blp& p) {
  std::uint64_t n = p.size();
  if (n == 2) return PatternKind::Zero;
  const Row& last = p.row(n);
  const auto& e = last.entries;
  bool std_start = e.size() >= 3 && e[0] == 0 && e[1] == 1 && e[2] == 2;
  if (std_start && e.size() == 6 && last.step == 3) return PatternKind::Limit;
  if (std_start && e.size() == 5) return PatternKind::Successor;
  return PatternKind::Transient;
}

std::optional<std::vector<std::uint64_t>> ap(const std::vector<std::uint64_t>& s,
                                             const std::vector<std::uint64_t>& t,
                                             std::uint64_t l) {
  if (t.size() < l + 2) return std::nullopt;
  auto from_end = [&](std::uint64_t k) { return t[t.size() - k]; };  // t_{-k}
  std::uint64_t cut = from_end(l + 2);
  std::uint64_t top = from_end(l + 1);
  if (cut == 0) return std::nullopt;
  for (std::uint64_t x : s) {
    if (x > top) return std::nullopt;
    if (x >= t[0] && x < cut && !std::binary_search(t.begin(), t.end(), x))
      return std::nullopt;
  }
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (std::uint64_t x : s) {
    if (x < t[0]) {
      out.push_back(x);
    } else if (x >= cut) {
      out.push_back(from_end(2) + (x - cut));
    } else {
      std::size_t j =
          std::lower_bound(t.begin(), t.end(), x) - t.begin();  // 0-based
      out.push_back(t[j + l]);
    }
  }
  return out;
}

Blp del(const Blp& p) {
  if (p.size() == 2) fail("ZeroPattern", "cannot delete from the two-row pattern");
  std::vector<Row> rows(p.rows().begin(), p.rows().end() - 1);
  return Blp(std::move(rows));
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> copy_range(const Blp& p) {
  std::uint64_t n = p.size();
  if (n == 2) return std::nullopt;
  std::uint64_t l = p.row(n).step;
  std::uint64_t a = p.entry(n, -static_cast<std::int64_t>(l) - 2);
  std::uint64_t b = p.entry(n, -static_cast<std::int64_t>(l) - 1) - 1;
  if (a < 1) return std::nullopt;
  return std::make_pair(a, b);
}

Blp copied(const Blp& p, detail::StepMeter* meter) {
  auto range = copy_range(p);
  if (!range) fail("NotCopyable", p.size() == 2 ? "two-row pattern"
                                                : "source range starts at row 0");
  auto [a, b] = *range;
  std::uint64_t n = p.size();
  const Row& last = p.row(n);
  std::vector<Row> rows(p.rows().begin(), p.rows().end() - 1);
  for (std::uint64_t i = a; i <= b; ++i) {
    if (meter) meter->tick();
    auto img = ap(p.row(i).entries, last.entries, last.step);
    if (!img)
      fail("NotCopyable", "row " + std::to_string(i) +
                              " does not remap through the last row");
    rows.push_back(Row{std::move(*img), p.row(i).step});
  }
  return Blp(std::move(rows));
}

bool copyable(const Blp& p) {
  auto range = copy_range(p);
  if (!range) return false;
  auto [a, b] = *range;
  const Row& last = p.row(p.size());
  for (std::uint64_t i = a; i <= b; ++i)
    if (!ap(p.row(i).entries, last.entries, last.step)) return false;
  return true;
}

Blp comp(const Blp& p, std::uint64_t i, const std::vector<std::uint64_t>& T,
         const RewriteSemantics& sem) {
  std::uint64_t n = p.size();
  if (i < 1 || i > n) fail("OutOfRange", "no row " + std::to_string(i));
  const Row& src = p.row(i);
  if (!suitable(src))
    fail("NotSuitable", "row " + std::to_string(i) + " is not suitable");
  if (T.empty()) return p;
  std::uint64_t l = src.step;
  std::uint64_t lo = p.entry(i, static_cast<std::int64_t>(l));
  std::uint64_t hi = p.entry(i, static_cast<std::int64_t>(l) + 1);
  for (std::size_t j = 0; j < T.size(); ++j) {
    if (j + 1 < T.size() && T[j] >= T[j + 1])
      fail("BadT", "inserted values must be strictly ascending");
    if (T[j] <= lo || T[j] >= hi)
      fail("BadT", "inserted value " + std::to_string(T[j]) +
                       " is not strictly between " + std::to_string(lo) +
                       " and " + std::to_string(hi));
  }
  std::uint64_t u = T.size();
  std::vector<std::uint64_t> prefix(src.entries.begin(), src.entries.begin() + l);
  std::vector<std::uint64_t> mid(src.entries.begin() + l,
                                 src.entries.end() - 1);  // keeps entry i, drops i+1
  std::vector<Row> rows(p.rows().begin(), p.rows().begin() + (i - 1));
  for (std::uint64_t r = 0; r < u; ++r) {
    Row nr;
    nr.entries = prefix;
    nr.entries.insert(nr.entries.end(), T.begin(), T.begin() + r + 1);
    nr.entries.insert(nr.entries.end(), mid.begin(), mid.end());
    for (std::uint64_t j = 1; j <= r + 1; ++j) nr.entries.push_back(i + j);
    nr.step = sem.comp_step_shift_one ? l + r + 1 : l + r + 2;
    rows.push_back(std::move(nr));
  }
  Row fin;
  fin.entries = prefix;
  fin.entries.insert(fin.entries.end(), T.begin(), T.end());
  fin.entries.insert(fin.entries.end(), mid.begin(), mid.end());
  for (std::uint64_t j = 1; j <= u + 1; ++j) fin.entries.push_back(i + j);
  fin.step = l + u;
  rows.push_back(std::move(fin));
  for (std::uint64_t ip = i + 1; ip <= n; ++ip) {
    Row tr = p.row(ip);
    for (auto& x : tr.entries)
      if (x > i) x += u;
    rows.push_back(std::move(tr));
  }
  return Blp(std::move(rows));
}

Blp fullcomp(const Blp& p, std::uint64_t i, const RewriteSemantics& sem) {
  std::uint64_t n = p.size();
  if (i < 1 || i > n) fail("OutOfRange", "no row " + std::to_string(i));
  const Row& src = p.row(i);
  if (!suitable(src))
    fail("NotSuitable", "row " + std::to_string(i) + " is not suitable");
  std::uint64_t l = src.step;
  std::uint64_t lo = p.entry(i, static_cast<std::int64_t>(l));
  std::vector<std::uint64_t> xs{p.entry(i, static_cast<std::int64_t>(l) + 1)};
  while (xs.back() > lo) xs.push_back(p.entry(xs.back(), -3));
  // xs = x_0 > x_1 > ... > x_k with x_k <= lo.
  std::size_t first = sem.fullcomp_excludes_seed ? 1 : 0;
  std::vector<std::uint64_t> T(xs.begin() + first, xs.end() - 1);
  std::reverse(T.begin(), T.end());
  return comp(p, i, T, sem);
}

Blp m_op(const Blp& p, const RewriteSemantics& sem, detail::StepMeter* meter) {
  Blp q = copied(p, meter);
  const Blp& source = sem.m_rows_from_copied ? q : p;
  std::vector<std::uint64_t> idx;
  for (std::uint64_t i = source.size(); i >= 1; --i)
    if (suitable(source.row(i))) idx.push_back(i);
  for (std::uint64_t i : idx) {
    q = fullcomp(q, i, sem);
    if (meter) meter->tick(q.size());
  }
  return q;
}

namespace detail {

Blp e_op_big(const Blp& p, const BigNat& m, StepMeter* meter) {
  PatternKind kind = classify(p);
  if (kind != PatternKind::Successor && kind != PatternKind::Limit)
    fail("WrongType", "expansion needs a successor or limit pattern");
  std::uint64_t a = p.entry(p.size(), -3);
  Blp q = del(p);
  for (BigNat j = 0; j < m; ++j) {
    if (meter) meter->tick();
    std::uint64_t np = q.size();
    std::vector<Row> rows = q.rows();
    rows.push_back(Row{{a, np + 1, np + 2}, 1});
    q = copied(Blp(std::move(rows)), meter);
  }
  return q;
}

}  // namespace detail

Blp e_op(const Blp& p, std::uint64_t m, detail::StepMeter* meter) {
  return detail::e_op_big(p, BigNat(m), meter);
}

Blp palpha(const Ordinal& alpha) {
  PatternSeq seq = ps(alpha);
  std::vector<Row> rows{Row{{0, 1, 2}, 1}, Row{{0, 1, 2, 3}, 1}};
  for (std::size_t j = 0; j < seq.size(); ++j) {
    std::uint64_t i = j + 1;
    std::uint64_t t = seq[j];
    if (t == 0)
      rows.push_back(Row{{0, 1, 2, i + 2, i + 3}, 2});
    else
      rows.push_back(Row{{0, 1, 2, t + 2, i + 2, i + 3}, 3});
  }
  return Blp(std::move(rows));
}

Blp qn(std::uint64_t n) {
  if (n < 1 || n > 20) fail("OutOfRange", "table index must be in 1..20");
  std::vector<Row> rows{Row{{0, 1, 2}, 1}, Row{{0, 1, 2, 3}, 1},
                        Row{{0, 1, 2, 3, 4}, 2}};
  std::uint64_t total = (std::uint64_t{1} << n) + 4;
  for (std::uint64_t i = 4; i <= total; ++i)
    rows.push_back(Row{{0, 1, 2, i - 1, i, i + 1}, 3});
  return Blp(std::move(rows));
}

namespace {

const std::map<std::string, std::string>& figure_catalog() {
  static const std::map<std::string, std::string> figures{
      {"zero", "0,1,2,-1,0,1,2,3,-1"},
      {"p_omega", "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3"},
      {"p_start", "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,2,3,4,5,6,-2"},
      {"p_prime",
       "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3,0,1,2,5,6,-2,0,1,2,6,7,"
       "-2"},
      {"p_init",
       "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,0,1,2,3,5,6,-3,0,1,2,3,"
       "5,6,7,-3,0,1,2,3,5,6,7,8,-3"},
      {"p_BO",
       "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,0,1,2,5,6,-2,2,5,6,7,-1,"
       "0,1,2,5,7,8,-3"},
      {"p_eps0",
       "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,0,1,2,5,6,-2,0,1,2,5,6,"
       "7,-3,5,6,7,8,-1,0,1,2,7,8,9,-3"},
      {"p_ep",
       "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3,3,4,5,6,-1,0,1,2,5,6,7,"
       "-3"},
  };
  return figures;
}

}  // namespace

const Blp& named_pattern(const std::string& name) {
  static std::map<std::string, Blp> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto fig = figure_catalog().find(name);
  if (fig == figure_catalog().end())
    fail("UnknownName", "no built-in pattern named '" + name + "'");
  return cache.emplace(name, parse_figure(fig->second)).first->second;
}

std::vector<std::string> named_pattern_names() {
  std::vector<std::string> names;
  for (const auto& [name, fig] : figure_catalog()) names.push_back(name);
  return names;
}

std::string format_figure(const Blp& p) {
  std::ostringstream out;
  bool first = true;
  for (const Row& r : p.rows()) {
    for (std::uint64_t x : r.entries) {
      if (!first) out << ',';
      first = false;
      out << x;
    }
    out << ",-" << r.step;
  }
  return out.str();
}

std::vector<Row> parse_figure_rows(const std::string& text) {
  std::vector<Row> rows;
  Row cur;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == text.size()) fail("ParseError", "empty figure");
  while (true) {
    skip_ws();
    bool neg = pos < text.size() && text[pos] == '-';
    if (neg) ++pos;
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits.push_back(text[pos++]);
    if (digits.empty()) fail("ParseError", "expected a number");
    if (digits.size() > 18) fail("ParseError", "number too large");
    std::uint64_t v = std::stoull(digits);
    if (neg) {
      if (cur.entries.empty()) fail("ParseError", "step with no entries before it");
      cur.step = v;
      rows.push_back(std::move(cur));
      cur = Row{};
    } else {
      cur.entries.push_back(v);
    }
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("ParseError", "expected ','");
    ++pos;
  }
  if (!cur.entries.empty()) fail("ParseError", "trailing entries with no step");
  return rows;
}

Blp parse_figure(const std::string& text) { return Blp(parse_figure_rows(text)); }

std::string to_json_string(const Blp& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& r : p.rows())
    rows.push_back({{"entries", r.entries}, {"step", r.step}});
  return nlohmann::json{{"rows", rows}}.dump();
}

Blp from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("ParseError", "malformed JSON");
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    fail("ParseError", "expected an object with a \"rows\" array");
  std::vector<Row> rows;
  for (const auto& jr : j["rows"]) {
    if (!jr.is_object() || !jr.contains("entries") || !jr.contains("step") ||
        !jr["entries"].is_array() || !jr["step"].is_number_unsigned())
      fail("ParseError", "each row needs \"entries\" and a natural \"step\"");
    Row r;
    for (const auto& je : jr["entries"]) {
      if (!je.is_number_unsigned()) fail("ParseError", "entries must be naturals");
      r.entries.push_back(je.get<std::uint64_t>());
    }
    r.step = jr["step"].get<std::uint64_t>();
    rows.push_back(std::move(r));
  }
  return Blp(std::move(rows));
}

}  // namespace laverkit
