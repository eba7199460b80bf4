#pragma once

// Integer helpers shared by the exact-arithmetic modules.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "maxclass/errors.hpp"

#ifndef MAXCLASS_ENABLE_CHECKS
#ifdef NDEBUG
#define MAXCLASS_ENABLE_CHECKS 0
#else
#define MAXCLASS_ENABLE_CHECKS 1
#endif
#endif

namespace maxclass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Discrete log of a root of unity, reduced modulo the prime power.
using Residue = std::uint64_t;

// Compile-time switch for the internal consistency checks that guard
// against convention drift (closed form vs recursion, full periodicity).
inline constexpr bool kChecksEnabled = MAXCLASS_ENABLE_CHECKS != 0;

namespace detail {

inline void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw internal_error(what);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

// Inverse of a modulo m; a must be a unit.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  ensure(old_r == 1, "inverse_mod: argument is not a unit");
  __int128 result = old_s % static_cast<__int128>(m);
  if (result < 0) result += m;
  return static_cast<std::uint64_t>(result);
}

inline std::uint64_t reduce(const BigInt& value, std::uint64_t m) {
  BigInt r = value % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

inline BigInt big_pow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace detail

// Trial division.
constexpr bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// p-adic valuation of a nonzero integer.
constexpr unsigned valuation(std::uint64_t value, std::uint64_t p) {
  unsigned v = 0;
  while (value != 0 && value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace maxclass
