#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "laverkit/bignat.hpp"

namespace laverkit {

// Ordinal below epsilon_0 in Cantor normal form: a finite sum
//   w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck
// with e1 > e2 > ... > ek (ordinals, recursively) and every ci >= 1.
// The empty sum is 0.  Construction validates the normal form and throws
// Error("NotCNF", ...) on violations.
class Ordinal {
 public:
  class Term;

  Ordinal();
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal natural(const BigNat& n);
  static Ordinal omega();
  // w^exponent * coefficient; coefficient must be >= 1.
  static Ordinal single(Ordinal exponent, BigNat coefficient);
  // Validates that exponents are strictly descending and coefficients >= 1.
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const;
  // True iff the ordinal is a natural number (zero or sole term w^0 * c).
  bool is_natural() const;
  BigNat natural_value() const;  // requires is_natural()
  bool is_successor() const;     // nonzero with least exponent 0
  bool is_limit() const;         // nonzero and not a successor

  const std::vector<Term>& terms() const;

  // Predecessor of a successor ordinal (throws WrongType otherwise).
  Ordinal predecessor() const;

  // This + w^exponent * coefficient, where the new term must not break CNF:
  // requires zero, or least exponent >= exponent.  Merges coefficients when
  // the least exponent equals `exponent`.  Throws NotCNF if it would ascend.
  Ordinal append_term(const Ordinal& exponent, const BigNat& coefficient) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // descending exponents
};

class Ordinal::Term {
 public:
  Term(Ordinal exponent, BigNat coefficient)
      : exponent(std::move(exponent)), coefficient(std::move(coefficient)) {}
  Ordinal exponent;
  BigNat coefficient;
};

// Three-way comparison: -1, 0, +1.
int ord_cmp(const Ordinal& a, const Ordinal& b);

inline bool operator==(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) == 0; }
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) != 0; }
inline bool operator<(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) < 0; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) <= 0; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) > 0; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) >= 0; }

// Splits a nonzero ordinal as (head, gamma) where the ordinal equals
// head + w^gamma and w^gamma is the final CNF summand (one unit of the last
// term).  Throws ZeroOrdinal on 0.
std::pair<Ordinal, Ordinal> tail_decompose(const Ordinal& a);

// Fundamental-sequence step a[n] for nonzero a:
//   successor a = b+1   ->  b                       (n ignored)
//   a = b + w^(g+1)     ->  b + w^g * n
//   a = b + w^g, g lim  ->  b + w^(g[n])
// Throws ZeroOrdinal on 0.
Ordinal fs(const Ordinal& a, const BigNat& n);

// Tower of omegas: eps0_fs(0) = 1, eps0_fs(k+1) = w^eps0_fs(k).
Ordinal eps0_fs(std::uint64_t k);

// Grammar:  ord := term ('+' term)* ;
//           term := nat | 'w' ('^' (nat | 'w' | '(' ord ')'))? ('*' nat)? .
// The result must already be in CNF ("w+w^2", "3+2" are rejected with NotCNF;
// malformed input raises ParseError).
Ordinal ord_parse(const std::string& text);
std::string ord_format(const Ordinal& a);

// Finite sequence of naturals attached to an ordinal; () for 0.
using PatternSeq = std::vector<std::uint64_t>;

// Throws OutOfRange when the sequence would not fit in memory (coefficients
// beyond ~1e6 entries) and ZeroOrdinal never (ps(0) is ()).
PatternSeq ps(const Ordinal& a);

// Inverse of ps; throws Error("NotInImage", ...) when seq is not ps(a) for
// any a (e.g. an entry u_i >= i, or a decode that would ascend in CNF).
Ordinal decode_ps(const PatternSeq& seq);

std::string pattern_seq_format(const PatternSeq& seq);  // "0,1,0,0"; "" if empty
PatternSeq pattern_seq_parse(const std::string& text);  // ParseError on junk

}  // namespace laverkit
