#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laverkit/budget.hpp"
#include "laverkit/ordinal.hpp"

namespace laverkit {

// One staircase row: strictly increasing naturals plus a step length.
struct Row {
  std::vector<std::uint64_t> entries;
  std::uint64_t step = 0;

  friend bool operator==(const Row& a, const Row& b) {
    return a.entries == b.entries && a.step == b.step;
  }
};

// A staircase pattern: rows 1..n (n >= 2) satisfying
//   * row 1 = (0,1,2) step 1 and row 2 = (0,1,2,3) step 1,
//   * each row strictly increasing with at least 3 entries,
//   * the last two entries of row i are i and i+1,
//   * step constraints by row length L: L odd -> step = (L-1)/2;
//     L = 4 -> step = 1; L even > 4 -> step in {L/2, L/2 - 1}.
// Rows are addressed 1-based; entry positions 1-based, with negative position
// -k meaning position L+1-k.
class Blp {
 public:
  // Validating constructor; throws Error("Invalid", ...) listing violations.
  explicit Blp(std::vector<Row> rows);

  std::uint64_t size() const { return rows_.size(); }  // n
  const Row& row(std::uint64_t i) const { return rows_[i - 1]; }
  const std::vector<Row>& rows() const { return rows_; }

  // Entry s_{i,k}; k may be negative (from the end).
  std::uint64_t entry(std::uint64_t i, std::int64_t k) const;

  friend bool operator==(const Blp& a, const Blp& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Blp& a, const Blp& b) { return !(a == b); }

 private:
  std::vector<Row> rows_;
};

// All invariant violations of a prospective pattern, empty when valid.
std::vector<std::string> validate(const std::vector<Row>& rows);

enum class PatternKind { Zero, Successor, Limit, Transient };
const char* to_string(PatternKind k);

// Classification by the last row s_n (n = row count):
//   Zero       n == 2;
//   Limit      s_n starts 0,1,2 and |s_n| == 6 and step 3;
//   Successor  s_n starts 0,1,2 and |s_n| == 5;
//   Transient  everything else.
PatternKind classify(const Blp& p);

// Knobs selecting between rewrite-rule readings that the fault-injection
// checks flip one at a time.  Defaults are the canonical semantics; any other
// setting exists only so tests can demonstrate that each choice is forced by
// the worked examples.
struct RewriteSemantics {
  // The condense pass works on the freshly copied pattern's own suitable
  // rows (true) rather than the pre-copy pattern's (false).
  bool m_rows_from_copied = true;
  // Interpolating row i+r receives step l_i + r + 1 (true) vs l_i + r + 2.
  bool comp_step_shift_one = true;
  // The seed x_0 of the condense chain is excluded from the inserted set
  // (true) vs included (false).
  bool fullcomp_excludes_seed = true;
};

// Partial remap of a row through row t with step l; std::nullopt when any
// definedness condition fails:
//   * t has at least l+2 entries and t_{-l-2} > 0,
//   * every x in s satisfies x <= t_{-l-1},
//   * every x in s with t_1 <= x < t_{-l-2} occurs in t.
// Mapping: x < t_1 -> x;  x = t_j < t_{-l-2} -> t_{j+l};
//          x >= t_{-l-2} -> t_{-2} + x - t_{-l-2}.
std::optional<std::vector<std::uint64_t>> ap(const std::vector<std::uint64_t>& s,
                                             const std::vector<std::uint64_t>& t,
                                             std::uint64_t l);

// Drop the last row; throws ZeroPattern when n == 2.
Blp del(const Blp& p);

// Rows a..b that a copy step would duplicate: a = s_{n,-l_n-2},
// b = s_{n,-l_n-1} - 1.  std::nullopt when n == 2 or a < 1.
std::optional<std::pair<std::uint64_t, std::uint64_t>> copy_range(const Blp& p);

bool copyable(const Blp& p);

// The copy step: q agrees with del(p) on rows < n, then appends, for
// i = 0..b-a, the row ap(s_{a+i}, s_n, l_n) with step l_{a+i}.  Throws
// NotCopyable when n == 2 or any remap is undefined.
Blp copied(const Blp& p, detail::StepMeter* meter = nullptr);

// Insert the set T (strictly between s_{i,l_i} and s_{i,l_i+1}, ascending)
// into suitable row i, emitting one interpolating row per element plus the
// fully inserted row, and renumbering the rows after i (entries > i shift up
// by |T|).  T empty returns p unchanged.  Throws NotSuitable / BadT.
Blp comp(const Blp& p, std::uint64_t i, const std::vector<std::uint64_t>& T,
         const RewriteSemantics& sem = {});

// comp with T derived from the descent chain x_0 = s_{i,l_i+1},
// x_{r+1} = s_{x_r,-3}, stopping at the first x_k <= s_{i,l_i};
// T = {x_{k-1}, ..., x_1} (empty when k == 1).
Blp fullcomp(const Blp& p, std::uint64_t i, const RewriteSemantics& sem = {});

// Copy, then fullcomp at every suitable row of the copied pattern in
// descending order of row index.
Blp m_op(const Blp& p, const RewriteSemantics& sem = {},
         detail::StepMeter* meter = nullptr);

// Expansion for successor/limit patterns with a = s_{n,-3}:
//   E(0) = del(p);  E(m+1) = copied(E(m) + row (a, n'+1, n'+2) step 1).
// Result has 2^m (n - a) + (a - 1) rows.  Throws WrongType on zero/transient
// input.  When a meter is supplied every constructed row ticks it.
Blp e_op(const Blp& p, std::uint64_t m, detail::StepMeter* meter = nullptr);

namespace detail {
// e_op for arbitrary-precision round counts; the meter aborts long before a
// count beyond 2^64 could matter.
Blp e_op_big(const Blp& p, const BigNat& m, StepMeter* meter);
}  // namespace detail

// Canonical pattern of an ordinal: k + 2 rows where ps(alpha) = (t_1..t_k);
// row i+2 is (0,1,2,i+2,i+3) step 2 when t_i = 0, else
// (0,1,2,t_i+2,i+2,i+3) step 3.
Blp palpha(const Ordinal& alpha);

// Tabular family: 2^n + 4 rows; rows 1-3 are (0,1,2) step 1, (0,1,2,3)
// step 1, (0,1,2,3,4) step 2; rows i = 4..2^n+4 are (0,1,2,i-1,i,i+1)
// step 3.  Requires 1 <= n <= 20 (OutOfRange).
Blp qn(std::uint64_t n);

// Built-in patterns addressable by name in tests and the CLI: "zero",
// "p_omega", "p_start", "p_prime", "p_init", "p_BO", "p_eps0", "p_ep".
// Throws UnknownName.
const Blp& named_pattern(const std::string& name);
std::vector<std::string> named_pattern_names();

// Figure string: all rows flattened, each row as its entries followed by the
// negated step, comma-separated ("0,1,2,-1,0,1,2,3,-1").
std::string format_figure(const Blp& p);
Blp parse_figure(const std::string& text);             // ParseError / Invalid
std::vector<Row> parse_figure_rows(const std::string& text);  // no validation

// JSON form: {"rows":[{"entries":[0,1,2],"step":1}, ...]}.
std::string to_json_string(const Blp& p);
Blp from_json_string(const std::string& text);         // ParseError / Invalid

}  // namespace laverkit
