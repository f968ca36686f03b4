#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laverkit/budget.hpp"
#include "laverkit/ordinal.hpp"
#include "laverkit/pattern.hpp"

namespace laverkit {

// The case of the estimator that fires for a pattern, in priority order.
enum class FCase { Zero, NonCopyableDel, Successor, Limit, Transient };
const char* to_string(FCase c);

FCase f_case(const Blp& p);

// Growth estimator:
//   Zero            f(p, m) = m * 2^m
//   NonCopyableDel  f(p, m) = f(del(p), m)
//   Successor       f(p, m) = (x -> f(del(p), x)) iterated 2^m times on m
//   Limit           f(p, m) = f(E(p, m), m)
//   Transient       f(p, m) = f(M(p), m)
// Budgeted: every reduction step, constructed row and loop iteration ticks
// max_steps; every produced value is checked against max_bits.
EvalResult f_eval(const Blp& p, const BigNat& m, const EvalBudget& budget = {});

// One fired case during the outermost reduction of f.
struct TraceStep {
  std::uint64_t index;        // 1-based position in the trace
  FCase fired;
  std::uint64_t pattern_size;  // rows of the pattern the case fired on
  std::string note;            // "2·2^2", "del", "E(1)", "M", ...

  friend bool operator==(const TraceStep& a, const TraceStep& b) {
    return a.index == b.index && a.fired == b.fired &&
           a.pattern_size == b.pattern_size && a.note == b.note;
  }
};

using ReductionTrace = std::vector<TraceStep>;

// Follows the chain of fired cases without evaluating any numbers (the
// Successor case continues into its first inner call f(del(p), m)).  Stops
// after max_steps entries, at the Zero case, or when expanding the next
// pattern would be unreasonably large.
ReductionTrace f_trace(const Blp& p, const BigNat& m,
                       std::uint64_t max_steps = 64);

std::string format_trace(const ReductionTrace& trace);

// Recognizes patterns of the canonical palpha shape and returns their
// ordinal; std::nullopt for anything else (including template-shaped rows
// whose attached sequence decodes to no ordinal).
std::optional<Ordinal> rank_canonical(const Blp& p);

}  // namespace laverkit
