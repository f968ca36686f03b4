#include "laverkit/feval.hpp"

#include <sstream>
#include <utility>

#include "laverkit/error.hpp"

namespace laverkit {

const char* to_string(FCase c) {
  switch (c) {
    case FCase::Zero: return "Zero";
    case FCase::NonCopyableDel: return "NonCopyableDel";
    case FCase::Successor: return "Successor";
    case FCase::Limit: return "Limit";
    case FCase::Transient: return "Transient";
  }
  return "?";
}

FCase f_case(const Blp& p) {
  PatternKind kind = classify(p);
  if (kind == PatternKind::Zero) return FCase::Zero;
  if (!copyable(p)) return FCase::NonCopyableDel;
  if (kind == PatternKind::Successor) return FCase::Successor;
  if (kind == PatternKind::Limit) return FCase::Limit;
  return FCase::Transient;
}

namespace {

BigNat eval_loop(Blp p, BigNat m, detail::StepMeter& meter) {
  while (true) {
    meter.tick();
    switch (f_case(p)) {
      case FCase::Zero: {
        // m * 2^m has exactly bit_length(m) + m bits.
        BigNat need = m + bit_length(m);
        if (need > meter.max_bits())
          throw detail::BudgetExhausted{ExceedReason::bits, meter.used()};
        BigNat v = m << m.convert_to<std::uint64_t>();
        meter.check_value(v);
        return v;
      }
      case FCase::NonCopyableDel:
        p = del(p);
        break;
      case FCase::Successor: {
        Blp q = del(p);
        BigNat x = m;
        // Iterate x -> f(q, x) exactly 2^m times; i < 2^m iff bitlen(i) <= m.
        for (BigNat i = 0; BigNat(bit_length(i)) <= m; ++i) {
          meter.tick();
          x = eval_loop(q, x, meter);
        }
        return x;
      }
      case FCase::Limit:
        p = detail::e_op_big(p, m, &meter);
        break;
      case FCase::Transient:
        p = m_op(p, {}, &meter);
        break;
    }
  }
}

}  // namespace

EvalResult f_eval(const Blp& p, const BigNat& m, const EvalBudget& budget) {
  detail::StepMeter meter(budget);
  try {
    return eval_loop(p, m, meter);
  } catch (const detail::BudgetExhausted& e) {
    return Exceeded{e.reason, e.steps_done};
  }
}

ReductionTrace f_trace(const Blp& p, const BigNat& m, std::uint64_t max_steps) {
  ReductionTrace trace;
  EvalBudget expansion_budget;
  expansion_budget.max_steps = 1'000'000;  // cap for materializing E / M
  detail::StepMeter meter(expansion_budget);
  Blp cur = p;
  std::string ms = m.str();
  for (std::uint64_t step = 1; step <= max_steps; ++step) {
    FCase c = f_case(cur);
    TraceStep ts{step, c, cur.size(), ""};
    try {
      switch (c) {
        case FCase::Zero:
          ts.note = ms + "·2^" + ms;
          trace.push_back(std::move(ts));
          return trace;
        case FCase::NonCopyableDel:
          ts.note = "del";
          trace.push_back(std::move(ts));
          cur = del(cur);
          break;
        case FCase::Successor:
          ts.note = "del^(2^" + ms + ")(" + ms + ")";
          trace.push_back(std::move(ts));
          cur = del(cur);  // continue into the first inner call f(del(p), m)
          break;
        case FCase::Limit:
          ts.note = "E(" + ms + ")";
          trace.push_back(std::move(ts));
          cur = detail::e_op_big(cur, m, &meter);
          break;
        case FCase::Transient:
          ts.note = "M";
          trace.push_back(std::move(ts));
          cur = m_op(cur, {}, &meter);
          break;
      }
    } catch (const detail::BudgetExhausted&) {
      return trace;  // truncated: the next pattern is too large to build
    }
  }
  return trace;
}

std::string format_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  for (const TraceStep& ts : trace)
    out << ts.index << ". " << to_string(ts.fired) << " n=" << ts.pattern_size
        << ' ' << ts.note << '\n';
  return out.str();
}

std::optional<Ordinal> rank_canonical(const Blp& p) {
  PatternSeq seq;
  for (std::uint64_t i = 3; i <= p.size(); ++i) {
    const auto& e = p.row(i).entries;
    std::uint64_t step = p.row(i).step;
    bool std_start = e[0] == 0 && e[1] == 1 && e[2] == 2;
    if (e.size() == 5 && std_start && e[3] == i && e[4] == i + 1 && step == 2) {
      seq.push_back(0);
    } else if (e.size() == 6 && std_start && e[3] >= 3 && e[4] == i &&
               e[5] == i + 1 && step == 3) {
      seq.push_back(e[3] - 2);
    } else {
      return std::nullopt;
    }
  }
  try {
    return decode_ps(seq);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace laverkit
