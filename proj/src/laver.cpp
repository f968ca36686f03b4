#include "laverkit/laver.hpp"

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "laverkit/error.hpp"

namespace laverkit {

namespace {

void check_order(unsigned n, unsigned cap, const char* what) {
  if (n > cap)
    fail("OutOfRange", std::string(what) + " supports orders up to 2^" +
                           std::to_string(cap));
}

}  // namespace

LaverTable::LaverTable(unsigned n, detail::StepMeter* meter)
    : n_(n), size_(std::uint64_t{1} << n), meter_(meter) {
  if (n > 30) fail("OutOfRange", "table order must be at most 2^30");
}

std::uint64_t LaverTable::column(std::uint64_t a, std::uint64_t b) const {
  if (a == size_) return b;
  const auto& vals = rows_.at(a).vals;
  return vals[(b - 1) % vals.size()];
}

void LaverTable::ensure_row(std::uint64_t a) {
  if (a == size_) return;
  std::vector<std::uint64_t> work{a};
  while (!work.empty()) {
    std::uint64_t r = work.back();
    RowData& rd = rows_[r];
    if (rd.done) {
      work.pop_back();
      continue;
    }
    while (true) {
      std::uint64_t v;
      if (rd.vals.empty()) {
        v = r + 1;  // r * 1 = r + 1 (r < 2^n here)
      } else {
        std::uint64_t prev = rd.vals.back();  // prev = r * (b-1), always > r
        if (prev == size_) {
          v = r + 1;  // 2^n * x = x
        } else {
          auto it = rows_.find(prev);
          if (it == rows_.end() || !it->second.done) {
            work.push_back(prev);  // materialize the dependency first
            break;
          }
          const auto& pv = it->second.vals;
          v = pv[r % pv.size()];  // prev * (r+1): column r+1, wrapped
        }
      }
      if (meter_) meter_->tick();
      rd.vals.push_back(static_cast<std::uint32_t>(v));
      if (v == size_) {
        rd.done = true;
        work.pop_back();
        break;
      }
    }
  }
}

std::uint64_t LaverTable::star(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || a > size_ || b < 1 || b > size_)
    fail("OutOfRange", "arguments must lie in 1..2^n");
  if (a == size_) return b;
  ensure_row(a);
  return column(a, b);
}

std::uint64_t LaverTable::period(std::uint64_t a) {
  if (a < 1 || a > size_) fail("OutOfRange", "row must lie in 1..2^n");
  if (a == size_) return size_;
  ensure_row(a);
  return rows_.at(a).vals.size();
}

std::vector<std::uint64_t> LaverTable::full_row(std::uint64_t a) {
  if (a < 1 || a > size_) fail("OutOfRange", "row must lie in 1..2^n");
  std::vector<std::uint64_t> out;
  out.reserve(size_);
  if (a == size_) {
    for (std::uint64_t b = 1; b <= size_; ++b) out.push_back(b);
    return out;
  }
  ensure_row(a);
  for (std::uint64_t b = 1; b <= size_; ++b) out.push_back(column(a, b));
  return out;
}

std::uint64_t star(unsigned n, std::uint64_t a, std::uint64_t b) {
  check_order(n, kMaxStarOrderLog2, "star");
  LaverTable t(n);
  return t.star(a, b);
}

std::uint64_t period(unsigned n, std::uint64_t a) {
  check_order(n, kMaxStarOrderLog2, "period");
  LaverTable t(n);
  return t.period(a);
}

std::uint64_t compose_index(unsigned n, std::uint64_t a, std::uint64_t b) {
  check_order(n, kMaxTableOrderLog2, "compose");
  LaverTable t(n);
  std::uint64_t size = t.order();
  if (a < 1 || a > size || b < 1 || b > size)
    fail("OutOfRange", "arguments must lie in 1..2^n");
  std::vector<std::uint64_t> target;
  target.reserve(size);
  for (std::uint64_t x = 1; x <= size; ++x)
    target.push_back(t.star(a, t.star(b, x)));
  for (std::uint64_t c = 1; c <= size; ++c) {
    bool all = true;
    for (std::uint64_t x = 1; x <= size && all; ++x)
      all = t.star(c, x) == target[x - 1];
    if (all) return c;
  }
  fail("NoWitness", "no row composes the two given rows");
}

std::vector<std::vector<std::uint64_t>> full_table(unsigned n) {
  check_order(n, kMaxTableOrderLog2, "table dump");
  LaverTable t(n);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t a = 1; a <= t.order(); ++a) out.push_back(t.full_row(a));
  return out;
}

EvalResult f1(std::uint64_t n, const EvalBudget& budget) {
  detail::StepMeter meter(budget);
  try {
    std::map<std::uint64_t, LaverTable> tables;
    auto table = [&](std::uint64_t z) -> LaverTable& {
      auto it = tables.find(z);
      if (it != tables.end()) return it->second;
      if (z > 62 || (std::uint64_t{1} << z) > budget.max_bits)
        throw detail::BudgetExhausted{ExceedReason::bits, meter.used()};
      return tables.emplace(z, LaverTable(static_cast<unsigned>(z), &meter))
          .first->second;
    };
    auto apply = [&](std::uint64_t z, std::uint64_t a, std::uint64_t b) {
      LaverTable& t = table(z);
      meter.tick();
      return t.star(a, b);
    };
    std::uint64_t i = 1;
    std::uint64_t y = n;
    while (y > 0) {
      std::uint64_t z = y;
      while (true) {
        table(z);  // bit ceiling applies before any power of y or z is formed
        std::uint64_t w = 1;
        for (std::uint64_t k = 1; k < i; ++k) w = apply(z, 1, w);
        if (apply(z, w, std::uint64_t{1} << y) == (std::uint64_t{1} << z))
          z += 1;
        else
          break;
      }
      i += 1;
      y = z < 2 ? 0 : z - 2;
    }
    return BigNat(i);
  } catch (const detail::BudgetExhausted& e) {
    return Exceeded{e.reason, e.steps_done};
  }
}

}  // namespace laverkit
