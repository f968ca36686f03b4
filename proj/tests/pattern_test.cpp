#include "laverkit/pattern.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <doctest.h>

#include "laverkit/error.hpp"
#include "laverkit/ordinal.hpp"

using namespace laverkit;

namespace {

template <class Fn>
std::string error_name(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.name();
  }
  return "<no error>";
}

Blp fig(const std::string& text) { return parse_figure(text); }

// Worked figures frozen from hand computation; each string lists every row's
// entries followed by its negated step.
const std::string kStairExample =
    "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,4,5,-2";
const std::string kCopyOneIn =
    "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3";
const std::string kCopyOneOut = "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,3,4,5,-1";
const std::string kCopyTwoIn =
    "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,2,3,5,6,-1";
const std::string kCopyTwoOut =
    "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,0,1,3,5,6,-2,"
    "0,1,3,5,6,7,-2";
const std::string kCondensed =
    "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,0,1,2,3,5,6,-3,"
    "0,1,2,3,5,6,7,-3,0,1,3,5,7,8,-2";
const std::string kExpandIn =
    "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3";
const std::string kExpandOut =
    "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,4,5,-2,0,1,2,5,6,-2,0,1,2,6,7,-2";

std::vector<Row> rows_of(const std::string& text) {
  return parse_figure_rows(text);
}

}  // namespace

TEST_CASE("figure strings parse and format as inverses") {
  for (const std::string& s :
       {kStairExample, kCopyOneIn, kCopyOneOut, kCopyTwoIn, kCopyTwoOut,
        kCondensed, kExpandIn, kExpandOut}) {
    CAPTURE(s);
    CHECK(format_figure(fig(s)) == s);
  }
}

TEST_CASE("figure parsing rejects malformed text") {
  CHECK(error_name([] { parse_figure(""); }) == "ParseError");
  CHECK(error_name([] { parse_figure("0,1,2"); }) == "ParseError");
  CHECK(error_name([] { parse_figure("0,1,2,-1,-1"); }) == "ParseError");
  CHECK(error_name([] { parse_figure("0,1,2,x"); }) == "ParseError");
  CHECK(error_name([] { parse_figure("0,1,2,-1,0,1"); }) == "ParseError");
  CHECK(error_name([] { parse_figure("99999999999999999999,-1"); }) ==
        "ParseError");
}

TEST_CASE("invariant checker reports each violation") {
  auto violations_of = [](const std::string& text) {
    return validate(rows_of(text));
  };
  CHECK(validate(rows_of(kStairExample)).empty());
  // Too few rows.
  CHECK_FALSE(validate({Row{{0, 1, 2}, 1}}).empty());
  // Wrong opening rows.
  CHECK_FALSE(violations_of("0,1,3,-1,0,1,2,3,-1").empty());
  CHECK_FALSE(violations_of("0,1,2,-1,0,1,2,4,-1").empty());
  CHECK_FALSE(violations_of("0,1,2,-2,0,1,2,3,-1").empty());
  // Row 3 must end with 3,4.
  CHECK_FALSE(violations_of("0,1,2,-1,0,1,2,3,-1,0,1,2,3,5,-2").empty());
  // Entries must strictly increase.
  CHECK_FALSE(violations_of("0,1,2,-1,0,1,2,3,-1,0,2,2,3,4,-2").empty());
  // Step must match the row length (length 5 forces step 2).
  CHECK_FALSE(violations_of("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-1").empty());
  // Length 6 allows steps 3 and 2 only.
  CHECK_FALSE(
      violations_of("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-4").empty());
  CHECK(violations_of("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2").empty());
  CHECK(violations_of("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3").empty());
  // Length 4 forces step 1; length 3 does too.
  CHECK_FALSE(
      violations_of("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,1,3,4,5,-2").empty());
  CHECK(violations_of("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,1,3,4,5,-1").empty());
  CHECK(
      violations_of("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,3,4,5,-1").empty());

  CHECK(error_name([] {
          Blp p({Row{{0, 1, 2}, 1}});
          (void)p;
        }) == "Invalid");
}

TEST_CASE("entries support negative positions") {
  Blp p = fig(kStairExample);
  CHECK(p.size() == 4);
  CHECK(p.entry(4, 1) == 0);
  CHECK(p.entry(4, -1) == 5);
  CHECK(p.entry(4, -2) == 4);
  CHECK(p.entry(4, -5) == 0);
  CHECK(p.entry(3, 3) == 2);
  CHECK(error_name([&] { p.entry(4, 0); }) == "OutOfRange");
  CHECK(error_name([&] { p.entry(4, 6); }) == "OutOfRange");
  CHECK(error_name([&] { p.entry(4, -6); }) == "OutOfRange");
}

TEST_CASE("row remapping matches the worked example") {
  std::vector<std::uint64_t> t = {2, 3, 6, 8, 9, 10};
  auto img = ap({1, 2, 3, 7, 8}, t, 2);
  REQUIRE(img.has_value());
  CHECK(*img == std::vector<std::uint64_t>{1, 6, 8, 10, 11});

  // Definedness failures, one condition at a time.
  CHECK_FALSE(ap({1}, {2, 3, 6}, 2).has_value());          // too short
  CHECK_FALSE(ap({1}, {0, 1, 2, 3}, 2).has_value());       // t_{-4} = 0
  CHECK_FALSE(ap({11}, t, 2).has_value());                 // above t_{-3}
  CHECK_FALSE(ap({4}, t, 2).has_value());                  // 4 missing from t
  CHECK(ap({}, t, 2).has_value());                         // empty row maps
}

TEST_CASE("classification follows the last row") {
  CHECK(classify(fig("0,1,2,-1,0,1,2,3,-1")) == PatternKind::Zero);
  CHECK(classify(fig(kStairExample)) == PatternKind::Successor);
  CHECK(classify(fig(kCopyOneIn)) == PatternKind::Limit);
  // Length 6 with step 2 is not a limit shape.
  CHECK(classify(fig("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2")) ==
        PatternKind::Transient);
  CHECK(classify(named_pattern("p_start")) == PatternKind::Transient);
  CHECK(std::string(to_string(PatternKind::Limit)) == "Limit");
}

TEST_CASE("delete drops the last row") {
  Blp p = fig(kStairExample);
  CHECK(del(p).size() == 3);
  CHECK(del(p) == fig("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2"));
  CHECK(error_name([] { del(fig("0,1,2,-1,0,1,2,3,-1")); }) == "ZeroPattern");
}

TEST_CASE("copy ranges and the copy step reproduce both worked figures") {
  Blp p1 = fig(kCopyOneIn);
  auto r1 = copy_range(p1);
  REQUIRE(r1.has_value());
  CHECK(*r1 == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(copyable(p1));
  CHECK(copied(p1) == fig(kCopyOneOut));

  Blp p2 = fig(kCopyTwoIn);
  auto r2 = copy_range(p2);
  REQUIRE(r2.has_value());
  CHECK(*r2 == std::pair<std::uint64_t, std::uint64_t>{3, 4});
  CHECK(copied(p2) == fig(kCopyTwoOut));

  // The second output has a copy range whose remap is undefined.
  Blp q = fig(kCopyTwoOut);
  CHECK(copy_range(q).has_value());
  CHECK_FALSE(copyable(q));
  CHECK(error_name([&] { copied(q); }) == "NotCopyable");

  CHECK_FALSE(copy_range(fig("0,1,2,-1,0,1,2,3,-1")).has_value());
  CHECK(error_name([] { copied(fig("0,1,2,-1,0,1,2,3,-1")); }) ==
        "NotCopyable");
}

TEST_CASE("copying then deleting the appended rows returns the delete") {
  for (const char* name : {"p_omega", "p_init", "p_eps0", "p_ep"}) {
    CAPTURE(name);
    const Blp& p = named_pattern(name);
    if (!copyable(p)) continue;
    Blp q = copied(p);
    auto [a, b] = *copy_range(p);
    CHECK(q.size() == p.size() - 1 + (b - a + 1));
    while (q.size() > p.size() - 1) q = del(q);
    CHECK(q == del(p));
  }
}

TEST_CASE("insertion expands a suitable row element by element") {
  Blp p = fig(kCopyTwoOut);
  // Row 5 is (0,1,3,5,6) step 2; the descent chain inserts {2,4}... no:
  // full insertion at row 5 of this pattern is the condensed figure.
  CHECK(fullcomp(p, 5) == fig(kCondensed));

  // Empty T is the identity.
  CHECK(comp(p, 5, {}) == p);

  // T must lie strictly between s_{5,2} and s_{5,3}.
  CHECK(error_name([&] { comp(p, 5, {1}); }) == "BadT");
  CHECK(error_name([&] { comp(p, 5, {3}); }) == "BadT");
  CHECK(error_name([&] { comp(p, 5, {2, 2}); }) == "BadT");
  // Row 4 has even length: not suitable.
  CHECK(error_name([&] { comp(p, 4, {2}); }) == "NotSuitable");
  CHECK(error_name([&] { comp(p, 99, {2}); }) == "OutOfRange");
}

TEST_CASE("condensing walks the descent chain") {
  // On the copy-one output, row 3 is (0,1,2,3,4) step 2 with x_0 = s_{3,3} =
  // 2 <= ... the chain stops immediately: T empty, identity.
  Blp p = fig(kCopyOneOut);
  CHECK(fullcomp(p, 3) == p);
  CHECK(error_name([&] { fullcomp(p, 4, {}); }) == "NotSuitable");
}

TEST_CASE("the condense-all pass matches the two-step chain") {
  const Blp& j = fig(
      "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,0,1,2,3,5,6,-2");
  Blp once = m_op(j);
  CHECK(once == fig(kCopyTwoIn));
  // The second pass copies (giving the copy-two output) and then condenses
  // its one productive suitable row.
  CHECK(m_op(once) == fig(kCondensed));
  CHECK(m_op(once) == fullcomp(copied(fig(kCopyTwoIn)), 5));
}

TEST_CASE("expansion matches the worked figure and the size law") {
  Blp p = fig(kExpandIn);
  CHECK(e_op(p, 2) == fig(kExpandOut));
  CHECK(e_op(p, 0) == del(p));

  for (std::uint64_t m = 0; m <= 4; ++m) {
    CAPTURE(m);
    std::uint64_t n = p.size(), a = p.entry(n, -3);
    CHECK(e_op(p, m).size() == ((std::uint64_t{1} << m) * (n - a) + a - 1));
  }
  CHECK(error_name([&] { e_op(named_pattern("p_start"), 1); }) == "WrongType");
  CHECK(error_name([&] { e_op(named_pattern("zero"), 1); }) == "WrongType");
}

TEST_CASE("canonical patterns realize attached sequences") {
  CHECK(palpha(Ordinal()) == named_pattern("zero"));
  CHECK(palpha(Ordinal::omega()) == named_pattern("p_omega"));
  CHECK(palpha(ord_parse("w+2")) == named_pattern("p_prime"));
  CHECK(format_figure(palpha(ord_parse("1"))) ==
        "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2");
  CHECK(format_figure(palpha(ord_parse("2"))) ==
        "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,4,5,-2");

  // Successor law: dropping the last row steps the ordinal down by one.
  for (const char* s : {"1", "2", "5", "w+1", "w+2", "w^2+3", "w^w+1"}) {
    CAPTURE(s);
    Ordinal a = ord_parse(s);
    CHECK(del(palpha(a)) == palpha(a.predecessor()));
  }

  // Limit law: expansion realizes the fundamental sequence at 2^m.
  for (const char* s : {"w", "w*2", "w^2", "w^2+w", "w^w"}) {
    CAPTURE(s);
    Ordinal a = ord_parse(s);
    for (std::uint64_t m = 0; m <= 2; ++m) {
      CAPTURE(m);
      CHECK(e_op(palpha(a), m) == palpha(fs(a, BigNat(1) << m)));
    }
  }
}

TEST_CASE("tabular patterns have the documented shape") {
  Blp q1 = qn(1);
  CHECK(q1.size() == 6);
  CHECK(q1.row(3) == Row{{0, 1, 2, 3, 4}, 2});
  CHECK(q1.row(4) == Row{{0, 1, 2, 3, 4, 5}, 3});
  CHECK(q1.row(6) == Row{{0, 1, 2, 5, 6, 7}, 3});
  CHECK(qn(3).size() == 12);
  CHECK(error_name([] { qn(0); }) == "OutOfRange");
  CHECK(error_name([] { qn(21); }) == "OutOfRange");
}

TEST_CASE("named patterns are all valid and pairwise distinct") {
  auto names = named_pattern_names();
  CHECK(names.size() == 8);
  for (const std::string& a : names)
    for (const std::string& b : names) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK((named_pattern(a) == named_pattern(b)) == (a == b));
    }
  CHECK(error_name([] { named_pattern("nope"); }) == "UnknownName");
}

TEST_CASE("json form round trips and validates") {
  for (const char* name : {"zero", "p_start", "p_eps0"}) {
    const Blp& p = named_pattern(name);
    CHECK(from_json_string(to_json_string(p)) == p);
  }
  CHECK(to_json_string(named_pattern("zero")) ==
        R"({"rows":[{"entries":[0,1,2],"step":1},{"entries":[0,1,2,3],"step":1}]})");
  CHECK(error_name([] { from_json_string("{"); }) == "ParseError");
  CHECK(error_name([] { from_json_string(R"({"rows":[]})"); }) == "Invalid");
  CHECK(error_name([] {
          from_json_string(R"({"rows":[{"entries":[0,1,-2],"step":1}]})");
        }) == "ParseError");
}
