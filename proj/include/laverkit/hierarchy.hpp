#pragma once

#include <variant>

#include "laverkit/budget.hpp"
#include "laverkit/ordinal.hpp"

namespace laverkit {

// Index "epsilon_0" for the Hardy hierarchy, one past every ordinal this
// library represents.  H_{eps0}(n) steps to H_{eps0_fs(n)}(n+1).
struct Eps0Token {
  friend bool operator==(Eps0Token, Eps0Token) { return true; }
};

using HierarchyIndex = std::variant<Ordinal, Eps0Token>;

// Hardy hierarchy:
//   H_0(n) = n,  H_{a+1}(n) = H_a(n+1),  H_lambda(n) = H_{lambda[n]}(n+1).
// Evaluated iteratively under the budget; each descent step ticks max_steps
// and every produced value is checked against max_bits.
EvalResult hardy(const HierarchyIndex& index, const BigNat& n,
                 const EvalBudget& budget = {});

// m-hierarchy:
//   m(0, n) = n^n,  m(a+1, n) = m(a, -) iterated n times starting at n,
//   m(lambda, n) = m(lambda[n], n).
// Requires n >= 2 (throws OutOfRange otherwise).
EvalResult mh(const Ordinal& index, const BigNat& n,
              const EvalBudget& budget = {});

}  // namespace laverkit
