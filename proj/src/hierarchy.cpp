#include "laverkit/hierarchy.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "laverkit/error.hpp"

namespace laverkit {

namespace {

constexpr std::size_t kMaxFrames = 200'000;

// Hardy descent from a concrete ordinal; runs of +1 steps are taken in one
// batch (H_{b+c}(n) = H_b(n+c) for finite c).
BigNat hardy_loop(Ordinal a, BigNat n, detail::StepMeter& meter) {
  while (!a.is_zero()) {
    meter.tick();
    if (a.is_successor()) {
      std::vector<Ordinal::Term> terms = a.terms();
      n += terms.back().coefficient;
      terms.pop_back();
      a = Ordinal::from_terms(std::move(terms));
    } else {
      a = fs(a, n);
      n += 1;
    }
    meter.check_value(n);
  }
  return n;
}

}  // namespace

EvalResult hardy(const HierarchyIndex& index, const BigNat& n,
                 const EvalBudget& budget) {
  detail::StepMeter meter(budget);
  try {
    if (std::holds_alternative<Eps0Token>(index)) {
      // One step down from the top: a tower of n omegas, evaluated at n+1.
      Ordinal a = Ordinal::natural(1);
      for (BigNat i = 0; i < n; ++i) {
        meter.tick();
        a = Ordinal::single(std::move(a), 1);
      }
      return hardy_loop(std::move(a), n + 1, meter);
    }
    return hardy_loop(std::get<Ordinal>(index), n, meter);
  } catch (const detail::BudgetExhausted& e) {
    return Exceeded{e.reason, e.steps_done};
  }
}

EvalResult mh(const Ordinal& index, const BigNat& n, const EvalBudget& budget) {
  if (n < 2) fail("OutOfRange", "the m hierarchy needs n >= 2");
  detail::StepMeter meter(budget);
  try {
    // Frame (ord, remaining): apply the map m(ord, -) `remaining` more times
    // to the running value x.
    struct Frame {
      Ordinal ord;
      BigNat remaining;
    };
    BigNat x = n;
    std::vector<Frame> stack{{index, BigNat(1)}};
    while (!stack.empty()) {
      if (stack.back().remaining == 0) {
        stack.pop_back();
        continue;
      }
      stack.back().remaining -= 1;
      meter.tick();
      const Ordinal b = stack.back().ord;
      if (b.is_zero()) {
        // x := x^x.  bits(x^x) lies in (x*msb, x*(msb+1)]: reject / accept
        // outright where the bound decides, materialize only near the edge.
        std::uint64_t msb = bit_length(x) - 1;  // x >= 2 here
        BigNat low = x * msb + 1;
        // Hard materialization ceiling independent of the configured budget.
        std::uint64_t cap = std::min<std::uint64_t>(meter.max_bits(),
                                                    std::uint64_t{1} << 31);
        if (low > cap)
          throw detail::BudgetExhausted{ExceedReason::bits, meter.used()};
        x = pow(x, x.convert_to<unsigned>());
        meter.check_value(x);
      } else if (b.is_successor()) {
        if (stack.size() >= kMaxFrames)
          throw detail::BudgetExhausted{ExceedReason::steps, meter.used()};
        stack.push_back({b.predecessor(), x});
      } else {
        if (stack.size() >= kMaxFrames)
          throw detail::BudgetExhausted{ExceedReason::steps, meter.used()};
        stack.push_back({fs(b, x), BigNat(1)});
      }
    }
    return x;
  } catch (const detail::BudgetExhausted& e) {
    return Exceeded{e.reason, e.steps_done};
  }
}

}  // namespace laverkit
