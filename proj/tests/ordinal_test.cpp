#include "laverkit/ordinal.hpp"

#include <string>
#include <vector>

#include <doctest.h>

#include "laverkit/error.hpp"

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

Ordinal ord(const std::string& s) { return ord_parse(s); }

}  // namespace

TEST_CASE("ordinal text form round trips") {
  for (const char* s : {"0", "1", "7", "w", "w*3", "w+1", "w*2+5", "w^2",
                        "w^2*3+w*2+5", "w^3+w^2+1", "w^w", "w^w*2+w^2",
                        "w^(w+1)", "w^(w^w)", "w^(w^2*2+1)+w^w+w+1"}) {
    CAPTURE(s);
    CHECK(ord_format(ord(s)) == s);
  }
}

TEST_CASE("ordinal parser normalizes trivial exponents and coefficients") {
  CHECK(ord_format(ord("w^1")) == "w");
  CHECK(ord_format(ord("w^0")) == "1");
  CHECK(ord_format(ord("w^0*5")) == "5");
  CHECK(ord_format(ord("w*1")) == "w");
  CHECK(ord_format(ord("w^(0)")) == "1");
  CHECK(ord_format(ord(" w + 1 ")) == "w+1");
}

TEST_CASE("ordinal parser rejects non-normal sums") {
  CHECK(error_name([] { ord_parse("3+2"); }) == "NotCNF");
  CHECK(error_name([] { ord_parse("w+w^2"); }) == "NotCNF");
  CHECK(error_name([] { ord_parse("w+w"); }) == "NotCNF");
  CHECK(error_name([] { ord_parse("1+w"); }) == "NotCNF");
  CHECK(error_name([] { ord_parse("w*0"); }) == "NotCNF");
}

TEST_CASE("ordinal parser rejects malformed input") {
  for (const char* s : {"", "x", "w^", "w*", "(w)", "w++1", "w^2^2", "2*3", "w^w*"}) {
    CAPTURE(s);
    CHECK(error_name([&] { ord_parse(s); }) == "ParseError");
  }
}

TEST_CASE("ordinal comparison is a strict order on a known chain") {
  std::vector<std::string> chain = {"0",   "1",     "2",       "w",
                                    "w+1", "w*2",   "w^2",     "w^2+w",
                                    "w^w", "w^w+1", "w^(w+1)", "w^(w^w)"};
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j) {
      CAPTURE(chain[i]);
      CAPTURE(chain[j]);
      CHECK(ord_cmp(ord(chain[i]), ord(chain[j])) ==
            (i < j ? -1 : i > j ? 1 : 0));
    }
}

TEST_CASE("ordinal kind predicates") {
  CHECK(ord("0").is_zero());
  CHECK(ord("0").is_natural());
  CHECK(ord("17").is_natural());
  CHECK(ord("17").natural_value() == 17);
  CHECK(ord("17").is_successor());
  CHECK(ord("w+3").is_successor());
  CHECK_FALSE(ord("w+3").is_natural());
  CHECK(ord("w").is_limit());
  CHECK(ord("w^2*3").is_limit());
  CHECK_FALSE(ord("0").is_limit());
  CHECK_FALSE(ord("0").is_successor());
  CHECK(ord_format(ord("w^2+3").predecessor()) == "w^2+2");
  CHECK(ord_format(ord("w+1").predecessor()) == "w");
}

TEST_CASE("tail decomposition splits off one unit of the last term") {
  auto [head, gamma] = tail_decompose(ord("w^2*3+w*2+5"));
  CHECK(ord_format(head) == "w^2*3+w*2+4");
  CHECK(gamma.is_zero());

  auto [head2, gamma2] = tail_decompose(ord("w^2*3"));
  CHECK(ord_format(head2) == "w^2*2");
  CHECK(ord_format(gamma2) == "2");

  auto [head3, gamma3] = tail_decompose(ord("w^w"));
  CHECK(head3.is_zero());
  CHECK(ord_format(gamma3) == "w");

  CHECK(error_name([] { tail_decompose(Ordinal()); }) == "ZeroOrdinal");
}

TEST_CASE("fundamental-sequence steps match hand computations") {
  CHECK(ord_format(fs(ord("5"), 9)) == "4");
  CHECK(ord_format(fs(ord("w+1"), 9)) == "w");
  CHECK(ord_format(fs(ord("w"), 5)) == "5");
  CHECK(ord_format(fs(ord("w"), 0)) == "0");
  CHECK(ord_format(fs(ord("w*2"), 3)) == "w+3");
  CHECK(ord_format(fs(ord("w^2"), 3)) == "w*3");
  CHECK(ord_format(fs(ord("w^2*2"), 2)) == "w^2+w*2");
  CHECK(ord_format(fs(ord("w^w"), 2)) == "w^2");
  CHECK(ord_format(fs(ord("w^(w+1)"), 2)) == "w^w*2");
  CHECK(ord_format(fs(ord("w^(w^w)"), 2)) == "w^(w^2)");
  // At n = 0 a successor exponent drops the whole unit, while a limit
  // exponent recurses: (w^w)[0] = w^(w[0]) = w^0 = 1.
  CHECK(ord_format(fs(ord("w^2"), 0)) == "0");
  CHECK(ord_format(fs(ord("w^w"), 0)) == "1");
  CHECK(error_name([] { fs(Ordinal(), 2); }) == "ZeroOrdinal");
}

TEST_CASE("fs iterates below eps0 from omega towers") {
  CHECK(ord_format(eps0_fs(0)) == "1");
  CHECK(ord_format(eps0_fs(1)) == "w");
  CHECK(ord_format(eps0_fs(2)) == "w^w");
  CHECK(ord_format(eps0_fs(3)) == "w^(w^w)");
}

TEST_CASE("attached sequences of small ordinals") {
  CHECK(ps(ord("0")) == PatternSeq{});
  CHECK(ps(ord("1")) == PatternSeq{0});
  CHECK(ps(ord("3")) == PatternSeq{0, 0, 0});
  CHECK(ps(ord("w")) == PatternSeq{0, 1});
  CHECK(ps(ord("w+2")) == PatternSeq{0, 1, 0, 0});
  CHECK(ps(ord("w*2")) == PatternSeq{0, 1, 0, 3});
  CHECK(ps(ord("w^2")) == PatternSeq{0, 1, 1});
  CHECK(ps(ord("w^3")) == PatternSeq{0, 1, 1, 1});
  CHECK(ps(ord("w^w")) == PatternSeq{0, 1, 2});
  CHECK(ps(ord("w^w+w^3")) == PatternSeq{0, 1, 2, 0, 4, 4, 4});
  CHECK(ps(ord("w^(w^w)")) == PatternSeq{0, 1, 2, 3});
}

TEST_CASE("attached-sequence decoding inverts encoding") {
  for (const char* s :
       {"0", "1", "4", "w", "w+1", "w+5", "w*2", "w*2+1", "w*7+3", "w^2",
        "w^2+w+1", "w^2*4+w+2", "w^3*2+w*5", "w^w", "w^w+w^3", "w^w*3",
        "w^(w+1)", "w^(w*2+1)+w^w", "w^(w^w)", "w^(w^w)+w^(w^2)+w^w+w+1"}) {
    CAPTURE(s);
    CHECK(ord_format(decode_ps(ps(ord_parse(s)))) == s);
  }
}

TEST_CASE("attached-sequence decoding rejects sequences outside the image") {
  CHECK(error_name([] { decode_ps({1}); }) == "NotInImage");
  CHECK(error_name([] { decode_ps({0, 2}); }) == "NotInImage");
  CHECK(error_name([] { decode_ps({0, 0, 2}); }) == "NotInImage");
  CHECK(error_name([] { decode_ps({0, 1, 1, 2}); }) == "NotInImage");
  CHECK(error_name([] { decode_ps({0, 1, 0, 1}); }) == "NotInImage");
}

TEST_CASE("attached-sequence text form") {
  CHECK(pattern_seq_format({0, 1, 2}) == "0,1,2");
  CHECK(pattern_seq_format({}) == "");
  CHECK(pattern_seq_parse("") == PatternSeq{});
  CHECK(pattern_seq_parse("0, 1,2") == PatternSeq{0, 1, 2});
  CHECK(error_name([] { pattern_seq_parse("x"); }) == "ParseError");
  CHECK(error_name([] { pattern_seq_parse("0,,1"); }) == "ParseError");
}
