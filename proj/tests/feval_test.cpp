#include "laverkit/feval.hpp"

#include <string>

#include <doctest.h>

#include "laverkit/error.hpp"
#include "laverkit/hierarchy.hpp"
#include "laverkit/ordinal.hpp"
#include "laverkit/pattern.hpp"

using namespace laverkit;

namespace {

Ordinal ord(const std::string& s) { return ord_parse(s); }

BigNat f_value(const Blp& p, const BigNat& m) {
  EvalResult r = f_eval(p, m);
  REQUIRE(r.ok());
  return r.value();
}

}  // namespace

TEST_CASE("estimator case dispatch follows the priority order") {
  CHECK(f_case(named_pattern("zero")) == FCase::Zero);
  CHECK(f_case(palpha(ord("1"))) == FCase::Successor);
  CHECK(f_case(palpha(ord("w"))) == FCase::Limit);
  CHECK(f_case(named_pattern("p_start")) == FCase::Transient);
  // A non-copyable pattern hits the delete case before anything else.
  Blp q = parse_figure(
      "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,0,1,3,5,6,-2,"
      "0,1,3,5,6,7,-2");
  REQUIRE_FALSE(copyable(q));
  CHECK(f_case(q) == FCase::NonCopyableDel);
  CHECK(std::string(to_string(FCase::NonCopyableDel)) == "NonCopyableDel");
}

TEST_CASE("estimator base case is m times 2^m") {
  CHECK(f_value(named_pattern("zero"), 0) == 0);
  CHECK(f_value(named_pattern("zero"), 1) == 2);
  CHECK(f_value(named_pattern("zero"), 3) == 24);
  CHECK(f_value(named_pattern("zero"), 10) == 10 * 1024);
}

TEST_CASE("estimator on small canonical patterns") {
  CHECK(f_value(palpha(ord("1")), 1) == 8);
  // With m = 0 every case collapses to a single base evaluation of 0.
  CHECK(f_value(palpha(ord("1")), 0) == 0);
  CHECK(f_value(palpha(ord("2")), 0) == 0);
  CHECK(f_value(palpha(ord("w")), 0) == 0);
  // One level higher the honest value no longer fits in any budget.
  EvalBudget tight;
  tight.max_bits = 4096;
  EvalResult r = f_eval(palpha(ord("2")), 1, tight);
  REQUIRE_FALSE(r.ok());
  CHECK(r.exceeded().reason == ExceedReason::bits);
  EvalResult r2 = f_eval(palpha(ord("2")), 1);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.exceeded().reason == ExceedReason::bits);
}

TEST_CASE("estimator tracks the m hierarchy through powers of two") {
  // 2^f(p_a, m) = m_a(2^m) wherever both sides fit the budget.
  for (std::uint64_t m : {1, 2, 3}) {
    CAPTURE(m);
    BigNat fv = f_value(named_pattern("zero"), m);
    EvalResult hv = mh(ord("0"), BigNat(1) << m);
    REQUIRE(hv.ok());
    CHECK((BigNat(1) << fv.convert_to<std::uint64_t>()) == hv.value());
  }
  BigNat fv = f_value(palpha(ord("1")), 1);
  EvalResult hv = mh(ord("1"), 2);
  REQUIRE(hv.ok());
  CHECK((BigNat(1) << fv.convert_to<std::uint64_t>()) == hv.value());
}

TEST_CASE("reduction traces name the fired cases") {
  ReductionTrace t0 = f_trace(named_pattern("zero"), 5);
  REQUIRE(t0.size() == 1);
  CHECK(t0[0] == TraceStep{1, FCase::Zero, 2, "5·2^5"});

  ReductionTrace t1 = f_trace(named_pattern("p_start"), 1);
  REQUIRE(t1.size() >= 1);
  CHECK(t1[0] == TraceStep{1, FCase::Transient, 5, "M"});

  ReductionTrace t2 = f_trace(palpha(ord("w")), 1);
  REQUIRE(t2.size() >= 2);
  CHECK(t2[0] == TraceStep{1, FCase::Limit, 4, "E(1)"});
  // E(p_w, 1) realizes the ordinal 2, a successor pattern.
  CHECK(t2[1].fired == FCase::Successor);
  CHECK(t2[1].note == "del^(2^1)(1)");

  ReductionTrace t3 = f_trace(palpha(ord("2")), 1, 2);
  CHECK(t3.size() == 2);  // truncated by the explicit limit

  CHECK(format_trace(t2).rfind("1. Limit n=4 E(1)\n", 0) == 0);
}

TEST_CASE("canonical patterns are recognized and ranked") {
  for (const char* s : {"0", "1", "5", "w", "w+2", "w*2", "w^2", "w^w",
                        "w^w+w^3+1", "w^(w^w)"}) {
    CAPTURE(s);
    auto r = rank_canonical(palpha(ord(s)));
    REQUIRE(r.has_value());
    CHECK(*r == ord(s));
  }
  CHECK(rank_canonical(qn(1)) == ord("w^(w^w)"));
  CHECK_FALSE(rank_canonical(named_pattern("p_start")).has_value());
  CHECK_FALSE(rank_canonical(named_pattern("p_BO")).has_value());
  // Template shape whose attached sequence decodes to an ascending (hence
  // rejected) exponent sum.
  CHECK_FALSE(rank_canonical(parse_figure(
                  "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,4,5,-2,"
                  "0,1,2,4,5,6,-3"))
                  .has_value());
}
