#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "laverkit/budget.hpp"

namespace laverkit {

// The finite left-distributive table A_n on representatives 1..2^n, defined by
//   a * b = b                    when a = 2^n,
//   a * 1 = a + 1                when a < 2^n,
//   a * b = (a * (b-1)) * (a+1)  otherwise.
// Each row a strictly increases up to its first 2^n at column p (the period
// of the row) and then repeats with period p, so only one period per row is
// stored; rows are materialized lazily, bottom row (largest a) first.
class LaverTable {
 public:
  // Requires 0 <= n <= 30.  When a meter is supplied, every stored table
  // entry and every recursive evaluation step ticks it.
  explicit LaverTable(unsigned n, detail::StepMeter* meter = nullptr);

  unsigned order_log2() const { return n_; }
  std::uint64_t order() const { return size_; }  // 2^n

  // a * b for 1 <= a, b <= 2^n (OutOfRange otherwise).
  std::uint64_t star(std::uint64_t a, std::uint64_t b);

  // Column of the first 2^n in row a; divides every larger row period.
  std::uint64_t period(std::uint64_t a);

  // The full row (all 2^n columns); forces materialization.
  std::vector<std::uint64_t> full_row(std::uint64_t a);

 private:
  struct RowData {
    std::vector<std::uint32_t> vals;  // one period: columns 1..p
    bool done = false;
  };

  void ensure_row(std::uint64_t a);
  std::uint64_t column(std::uint64_t a, std::uint64_t b) const;  // row a done

  unsigned n_;
  std::uint64_t size_;
  // Keyed by row index so memory tracks materialized rows, not table order.
  std::unordered_map<std::uint64_t, RowData> rows_;
  detail::StepMeter* meter_;
};

// Interactive-size guards for the free functions below.
inline constexpr unsigned kMaxStarOrderLog2 = 16;   // star/period queries
inline constexpr unsigned kMaxTableOrderLog2 = 10;  // full-table operations

std::uint64_t star(unsigned n, std::uint64_t a, std::uint64_t b);
std::uint64_t period(unsigned n, std::uint64_t a);

// Index c with  c * x = a * (b * x)  for every x; exists and is unique in
// these tables.  Searches exhaustively; throws NoWitness if nothing matches
// (which would indicate a bug).  Capped at kMaxTableOrderLog2.
std::uint64_t compose_index(unsigned n, std::uint64_t a, std::uint64_t b);

// The entire table as 2^n rows of 2^n values; capped at kMaxTableOrderLog2.
std::vector<std::vector<std::uint64_t>> full_table(unsigned n);

// The table-escalation functional: starting from y = n, repeatedly find the
// first table order z >= y whose row 1 stops covering the chained powers,
// counting rounds in i; returns i when y reaches 0.  Budgeted: each table
// entry built and each table application ticks max_steps, and a table of
// order 2^z is only built while 2^z <= max_bits.
EvalResult f1(std::uint64_t n, const EvalBudget& budget = {});

}  // namespace laverkit
