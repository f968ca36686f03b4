#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace laverkit {

// Arbitrary-precision natural number.  cpp_int is signed, but every value in
// this library is >= 0; negative intermediates would indicate a bug.
using BigNat = boost::multiprecision::cpp_int;

// Number of bits in the binary representation; bit_length(0) == 0.
inline std::uint64_t bit_length(const BigNat& x) {
  if (x == 0) return 0;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(x)) + 1;
}

}  // namespace laverkit
