#pragma once

// k-simplex numbers T_k(j) = binomial(j+k-1, k).
//
// T_0(j) = 1, T_k(0) = 0 for k >= 1, and T_k(j) = T_k(j-1) + T_{k-1}(j).
// They are the exponents that propagate the defining eigenvalues along the
// diagonals of a standard-form representation.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "maxclass/arith.hpp"

namespace maxclass {

// Exact T_k(j) via the binomial product.
inline BigInt simplex(unsigned k, std::uint64_t j) {
  if (k == 0) return 1;
  if (j == 0) return 0;
  // result_i = binomial(j+i-1, i), each division exact
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= BigInt(j) + (i - 1);
    result /= i;
  }
  return result;
}

// Table of T_k(j) for 0 <= k <= max_k, 0 <= j <= max_j filled by the
// defining recursion.
class SimplexTable {
 public:
  SimplexTable(unsigned max_k, std::size_t max_j)
      : max_k_(max_k), max_j_(max_j), values_((max_k + 1) * (max_j + 1)) {
    for (std::size_t j = 0; j <= max_j; ++j) slot(0, j) = 1;
    for (unsigned k = 1; k <= max_k; ++k) {
      slot(k, 0) = 0;
      for (std::size_t j = 1; j <= max_j; ++j) slot(k, j) = slot(k, j - 1) + slot(k - 1, j);
    }
  }

  unsigned max_k() const noexcept { return max_k_; }
  std::size_t max_j() const noexcept { return max_j_; }

  const BigInt& at(unsigned k, std::size_t j) const {
    detail::require(k <= max_k_ && j <= max_j_, "SimplexTable::at: index out of range");
    return values_[k * (max_j_ + 1) + j];
  }

 private:
  BigInt& slot(unsigned k, std::size_t j) { return values_[k * (max_j_ + 1) + j]; }

  unsigned max_k_;
  std::size_t max_j_;
  std::vector<BigInt> values_;
};

namespace detail {

// T_k(j) mod `modulus` where modulus is a power of p.  When p > k the
// denominator k! is a unit, so the rising product is reduced term by term
// and multiplied by the inverse of k!; otherwise the exact value is reduced.
inline Residue simplex_residue(unsigned k, std::uint64_t j, std::uint64_t p,
                               std::uint64_t modulus) {
  require(modulus >= 1, "simplex_mod: modulus must be positive");
  if (modulus == 1) return 0;
  if (k == 0) return 1 % modulus;
  if (j == 0) return 0;
  if (p > k) {
    std::uint64_t numerator = 1;
    std::uint64_t factorial = 1;
    for (unsigned i = 0; i < k; ++i) {
      numerator = mul_mod(numerator, (j % modulus + i) % modulus, modulus);
      factorial = mul_mod(factorial, (i + 1) % modulus, modulus);
    }
    return mul_mod(numerator, inverse_mod(factorial, modulus), modulus);
  }
  return reduce(simplex(k, j), modulus);
}

}  // namespace detail

// T_k(j) mod p^N without materializing T_k(j) when p > k.
inline Residue simplex_mod(unsigned k, std::uint64_t j, std::uint64_t p, unsigned N) {
  detail::require(is_prime(p), "simplex_mod: p must be prime");
  const BigInt modulus = detail::big_pow(p, N);
  if (modulus > BigInt(std::numeric_limits<std::uint64_t>::max() / 2)) {
    throw guard_error("simplex_mod: p^N exceeds the 63-bit residue range");
  }
  return detail::simplex_residue(k, j, p, modulus.convert_to<std::uint64_t>());
}

// Exhaustive check of the congruence
//   Gamma(k, beta p^{N-m} + j + 1) = Gamma(k, j + 1)  (mod p^N)
// with Gamma(k, j) = alpha p^m T_k(j-1), over 1 <= beta < p^m and
// 0 <= j <= p^{N-m} - 1.  Requires k < p.
inline bool gamma_congruence_check(unsigned k, std::uint64_t p, unsigned N, unsigned m,
                                   std::int64_t alpha) {
  detail::require(k >= 1, "gamma_congruence_check: k must be positive");
  detail::require(is_prime(p), "gamma_congruence_check: p must be prime");
  detail::require(k < p, "gamma_congruence_check: requires k < p");
  detail::require(N >= 1 && m >= 1 && m <= N, "gamma_congruence_check: requires 1 <= m <= N");
  detail::require(alpha % static_cast<std::int64_t>(p) != 0,
                  "gamma_congruence_check: alpha must be coprime to p");

  const BigInt modulus = detail::big_pow(p, N);
  const BigInt scale = BigInt(alpha) * detail::big_pow(p, m);
  const std::uint64_t block = detail::big_pow(p, N - m).convert_to<std::uint64_t>();
  const std::uint64_t betas = detail::big_pow(p, m).convert_to<std::uint64_t>();

  auto gamma = [&](std::uint64_t arg) {
    BigInt value = scale * simplex(k, arg - 1) % modulus;
    if (value < 0) value += modulus;
    return value;
  };

  for (std::uint64_t j = 0; j < block; ++j) {
    const BigInt base = gamma(j + 1);
    for (std::uint64_t beta = 1; beta < betas; ++beta) {
      if (gamma(beta * block + j + 1) != base) return false;
    }
  }
  return true;
}

}  // namespace maxclass
