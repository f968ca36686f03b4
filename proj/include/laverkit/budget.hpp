#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "laverkit/bignat.hpp"

namespace laverkit {

// Resource ceiling for computations whose honest answers can be astronomically
// large.  max_bits bounds the bit length of any numeric value produced (and of
// auxiliary structures priced in bits, e.g. table orders); max_steps bounds the
// count of elementary work units (recursive calls, constructed rows, table
// lookups).
struct EvalBudget {
  std::uint64_t max_bits = std::uint64_t{1} << 20;
  std::uint64_t max_steps = 10'000'000;
};

enum class ExceedReason { bits, steps };

inline const char* to_string(ExceedReason r) {
  return r == ExceedReason::bits ? "bits" : "steps";
}

// Outcome of a computation that ran out of budget: which ceiling was hit and
// how many steps had been spent by then.
struct Exceeded {
  ExceedReason reason;
  std::uint64_t steps_done;

  friend bool operator==(const Exceeded& a, const Exceeded& b) {
    return a.reason == b.reason && a.steps_done == b.steps_done;
  }
};

// Either a computed value or an Exceeded marker.  Exceeding the budget is an
// expected outcome, not an error.
class EvalResult {
 public:
  EvalResult(BigNat value) : data_(std::move(value)) {}
  EvalResult(Exceeded e) : data_(e) {}

  bool ok() const { return std::holds_alternative<BigNat>(data_); }
  const BigNat& value() const { return std::get<BigNat>(data_); }
  const Exceeded& exceeded() const { return std::get<Exceeded>(data_); }

  // "12345" for values, "Exceeded(bits, steps_done=42)" otherwise.
  std::string to_string() const;

  friend bool operator==(const EvalResult& a, const EvalResult& b) {
    return a.data_ == b.data_;
  }

 private:
  std::variant<BigNat, Exceeded> data_;
};

namespace detail {

// Thrown internally when a budget ceiling is hit; caught at the public API
// boundary and converted to an Exceeded result.  Never escapes the library.
struct BudgetExhausted {
  ExceedReason reason;
  std::uint64_t steps_done;
};

// Counts elementary work units against a ceiling.
class StepMeter {
 public:
  explicit StepMeter(const EvalBudget& budget)
      : max_steps_(budget.max_steps), max_bits_(budget.max_bits) {}

  void tick(std::uint64_t k = 1) {
    if (max_steps_ - used_ < k) {
      used_ = max_steps_;
      throw BudgetExhausted{ExceedReason::steps, used_};
    }
    used_ += k;
  }

  // Abort unless a value of `bits` bits is within max_bits.
  void require_bits(std::uint64_t bits) const {
    if (bits > max_bits_) throw BudgetExhausted{ExceedReason::bits, used_};
  }

  void check_value(const BigNat& v) const { require_bits(bit_length(v)); }

  std::uint64_t used() const { return used_; }
  std::uint64_t max_bits() const { return max_bits_; }

 private:
  std::uint64_t max_steps_;
  std::uint64_t max_bits_;
  std::uint64_t used_ = 0;
};

}  // namespace detail

inline std::string EvalResult::to_string() const {
  if (ok()) return value().str();
  const auto& e = exceeded();
  return std::string("Exceeded(") + laverkit::to_string(e.reason) +
         ", steps_done=" + std::to_string(e.steps_done) + ")";
}

}  // namespace laverkit
