#include "laverkit/ordinal.hpp"

#include <cctype>
#include <cstddef>
#include <limits>
#include <sstream>
#include <tuple>
#include <utility>

#include "laverkit/error.hpp"

namespace laverkit {

namespace {

constexpr std::size_t kMaxSeqLen = 1'000'000;
constexpr int kMaxDecodeDepth = 10'000;

}  // namespace

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal Ordinal::natural(const BigNat& n) {
  Ordinal o;
  if (n > 0) o.terms_.emplace_back(Ordinal(), n);
  return o;
}

Ordinal Ordinal::omega() { return single(natural(1), 1); }

Ordinal Ordinal::single(Ordinal exponent, BigNat coefficient) {
  if (coefficient < 1) fail("NotCNF", "coefficient must be >= 1");
  Ordinal o;
  o.terms_.emplace_back(std::move(exponent), std::move(coefficient));
  return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) fail("NotCNF", "coefficient must be >= 1");
    if (i + 1 < terms.size() &&
        ord_cmp(terms[i].exponent, terms[i + 1].exponent) <= 0)
      fail("NotCNF", "exponents must be strictly descending");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_natural() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

BigNat Ordinal::natural_value() const {
  if (!is_natural()) fail("WrongType", "not a natural number");
  return terms_.empty() ? BigNat(0) : terms_[0].coefficient;
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const { return !is_zero() && !is_successor(); }

const std::vector<Ordinal::Term>& Ordinal::terms() const { return terms_; }

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) fail("WrongType", "predecessor of a non-successor");
  Ordinal o(*this);
  if (o.terms_.back().coefficient == 1)
    o.terms_.pop_back();
  else
    o.terms_.back().coefficient -= 1;
  return o;
}

Ordinal Ordinal::append_term(const Ordinal& exponent,
                             const BigNat& coefficient) const {
  if (coefficient < 1) fail("NotCNF", "coefficient must be >= 1");
  Ordinal o(*this);
  if (o.terms_.empty()) {
    o.terms_.emplace_back(exponent, coefficient);
    return o;
  }
  int c = ord_cmp(o.terms_.back().exponent, exponent);
  if (c < 0) fail("NotCNF", "appended exponent ascends");
  if (c == 0)
    o.terms_.back().coefficient += coefficient;
  else
    o.terms_.emplace_back(exponent, coefficient);
  return o;
}

std::string Ordinal::to_string() const { return ord_format(*this); }

int ord_cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t k = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < k; ++i) {
    int c = ord_cmp(ta[i].exponent, tb[i].exponent);
    if (c != 0) return c;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient < tb[i].coefficient ? -1 : 1;
  }
  if (ta.size() == tb.size()) return 0;
  return ta.size() < tb.size() ? -1 : 1;
}

std::pair<Ordinal, Ordinal> tail_decompose(const Ordinal& a) {
  if (a.is_zero()) fail("ZeroOrdinal", "cannot decompose 0");
  std::vector<Ordinal::Term> terms = a.terms();
  Ordinal gamma = terms.back().exponent;
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  return {Ordinal::from_terms(std::move(terms)), gamma};
}

Ordinal fs(const Ordinal& a, const BigNat& n) {
  if (a.is_zero()) fail("ZeroOrdinal", "0 has no fundamental sequence");
  auto [head, gamma] = tail_decompose(a);
  if (gamma.is_zero()) return head;  // successor: a[n] = a - 1
  if (gamma.is_successor()) {
    // (head + w^(d+1))[n] = head + w^d * n
    if (n == 0) return head;
    return head.append_term(gamma.predecessor(), n);
  }
  // (head + w^gamma)[n] = head + w^(gamma[n]) for limit gamma
  return head.append_term(fs(gamma, n), 1);
}

Ordinal eps0_fs(std::uint64_t k) {
  Ordinal o = Ordinal::natural(1);
  for (std::uint64_t i = 0; i < k; ++i) o = Ordinal::single(std::move(o), 1);
  return o;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class OrdParser {
 public:
  explicit OrdParser(const std::string& text) : s_(text) {}

  Ordinal parse() {
    Ordinal result = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("ParseError", "trailing input at '" + rest() + "'");
    return result;
  }

 private:
  Ordinal parse_sum() {
    std::vector<Ordinal::Term> terms;
    bool sole_zero = false;
    while (true) {
      auto [exp, coef, is_zero_nat] = parse_term();
      if (is_zero_nat) {
        if (!terms.empty()) fail("NotCNF", "zero term in a sum");
        sole_zero = true;
      } else {
        if (sole_zero) fail("NotCNF", "zero term in a sum");
        terms.emplace_back(std::move(exp), std::move(coef));
      }
      skip_ws();
      if (!eat('+')) break;
    }
    return Ordinal::from_terms(std::move(terms));
  }

  // Returns (exponent, coefficient, is-the-literal-0).
  std::tuple<Ordinal, BigNat, bool> parse_term() {
    skip_ws();
    if (peek_digit()) {
      BigNat n = parse_nat();
      if (n == 0) return {Ordinal(), BigNat(0), true};
      return {Ordinal(), n, false};
    }
    if (!eat('w')) fail("ParseError", "expected term at '" + rest() + "'");
    Ordinal exp = Ordinal::natural(1);
    skip_ws();
    if (eat('^')) {
      skip_ws();
      if (peek_digit()) {
        exp = Ordinal::natural(parse_nat());
      } else if (eat('(')) {
        exp = parse_sum();
        skip_ws();
        if (!eat(')')) fail("ParseError", "expected ')' at '" + rest() + "'");
      } else if (eat('w')) {
        exp = Ordinal::omega();
      } else {
        fail("ParseError", "expected exponent at '" + rest() + "'");
      }
    }
    BigNat coef = 1;
    skip_ws();
    if (eat('*')) {
      skip_ws();
      if (!peek_digit()) fail("ParseError", "expected coefficient at '" + rest() + "'");
      coef = parse_nat();
      if (coef == 0) fail("NotCNF", "coefficient must be >= 1");
    }
    return {std::move(exp), std::move(coef), false};
  }

  BigNat parse_nat() {
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits.push_back(s_[pos_++]);
    return BigNat(digits);
  }

  bool peek_digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  std::string rest() const { return s_.substr(pos_, 16); }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal ord_parse(const std::string& text) { return OrdParser(text).parse(); }

std::string ord_format(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out << '+';
    first = false;
    if (t.exponent.is_zero()) {
      out << t.coefficient;
      continue;
    }
    out << 'w';
    if (t.exponent != Ordinal::natural(1)) {
      out << '^';
      if (t.exponent.is_natural())
        out << t.exponent.natural_value();
      else if (t.exponent == Ordinal::omega())
        out << 'w';
      else
        out << '(' << ord_format(t.exponent) << ')';
    }
    if (t.coefficient > 1) out << '*' << t.coefficient;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Sequence coding

namespace {

// Appends the block for one summand w^gamma to out (whose current content is
// the code of the preceding partial sum): a leading 0 at 1-based position
// a = |out|+1, followed by the code of gamma with every entry shifted by a.
void append_unit(PatternSeq& out, const PatternSeq& gamma_code) {
  std::uint64_t a = out.size() + 1;
  if (out.size() >= kMaxSeqLen) fail("OutOfRange", "sequence too long");
  out.push_back(0);
  for (std::uint64_t e : gamma_code) {
    if (out.size() >= kMaxSeqLen) fail("OutOfRange", "sequence too long");
    out.push_back(e + a);
  }
}

Ordinal decode_rec(const PatternSeq& seq, std::size_t begin, std::size_t end,
                   int depth);

// Decodes one block: the leading 0 sits at 1-based position a; the entries in
// [begin, end) are the shifted code of the block's exponent.
Ordinal decode_block(const PatternSeq& seq, std::uint64_t a, std::size_t begin,
                     std::size_t end, int depth) {
  if (begin == end) return Ordinal();  // bare 0: exponent 0
  if (depth > kMaxDecodeDepth) fail("OutOfRange", "nesting too deep");
  PatternSeq inner;
  inner.reserve(end - begin);
  for (std::size_t j = begin; j < end; ++j) {
    if (seq[j] < a) fail("NotInImage", "entry smaller than its block shift");
    inner.push_back(seq[j] - a);
  }
  return decode_rec(inner, 0, inner.size(), depth);
}

Ordinal decode_rec(const PatternSeq& seq, std::size_t begin, std::size_t end,
                   int depth) {
  if (depth > kMaxDecodeDepth) fail("OutOfRange", "nesting too deep");
  Ordinal result;
  std::size_t i = begin;
  while (i < end) {
    if (seq[i] != 0) fail("NotInImage", "expected a block-leading 0");
    std::uint64_t a = i - begin + 1;  // 1-based position within this level
    std::size_t j = i + 1;
    while (j < end && seq[j] != 0) ++j;
    Ordinal gamma = decode_block(seq, a, i + 1, j, depth + 1);
    // Summands must descend (equal exponents merge into one coefficient).
    if (!result.is_zero()) {
      int c = ord_cmp(result.terms().back().exponent, gamma);
      if (c < 0) fail("NotInImage", "summand exponents ascend");
    }
    result = result.append_term(gamma, 1);
    i = j;
  }
  return result;
}

}  // namespace

PatternSeq ps(const Ordinal& a) {
  PatternSeq out;
  for (const auto& term : a.terms()) {
    PatternSeq gamma_code =
        term.exponent.is_zero() ? PatternSeq{} : ps(term.exponent);
    for (BigNat c = 0; c < term.coefficient; ++c) {
      append_unit(out, gamma_code);
      if (out.size() > kMaxSeqLen) fail("OutOfRange", "sequence too long");
    }
  }
  return out;
}

Ordinal decode_ps(const PatternSeq& seq) {
  if (seq.size() > kMaxSeqLen) fail("OutOfRange", "sequence too long");
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] >= i + 1) fail("NotInImage", "entry u_i must satisfy u_i < i");
  return decode_rec(seq, 0, seq.size(), 0);
}

std::string pattern_seq_format(const PatternSeq& seq) {
  std::ostringstream out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ',';
    out << seq[i];
  }
  return out.str();
}

PatternSeq pattern_seq_parse(const std::string& text) {
  PatternSeq out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == text.size()) return out;  // empty sequence
  while (true) {
    skip_ws();
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits.push_back(text[pos++]);
    if (digits.empty()) fail("ParseError", "expected a natural number");
    if (digits.size() > 19) fail("ParseError", "entry too large");
    out.push_back(std::stoull(digits));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("ParseError", "expected ','");
    ++pos;
  }
  return out;
}

}  // namespace laverkit
