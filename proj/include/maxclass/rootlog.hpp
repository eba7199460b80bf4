#pragma once

// Roots of unity of p-power order, stored as discrete logarithms.
//
// A p^N-th root of unity lambda = zeta^e for a fixed (never chosen) primitive
// root zeta is represented by e in [0, p^N).  Everything downstream is phrased
// in terms of these exponents, so equality of eigenvalues is exact.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "maxclass/arith.hpp"

namespace maxclass {

// Default cap on p^N for operations that materialize per-column tables.
inline constexpr std::uint64_t kDefaultTableLimit = 1'000'000;

class PrimePower {
 public:
  PrimePower(std::uint64_t p, unsigned N) : p_(p), N_(N) {
    detail::require(is_prime(p), "PrimePower: " + std::to_string(p) + " is not prime");
    const BigInt exact = detail::big_pow(p, N);
    if (exact > BigInt(kResidueLimit)) {
      throw guard_error("PrimePower: " + std::to_string(p) + "^" + std::to_string(N) +
                        " exceeds the residue range");
    }
    dim_ = exact.convert_to<std::uint64_t>();
  }

  std::uint64_t p() const noexcept { return p_; }
  unsigned N() const noexcept { return N_; }
  // p^N: the representation dimension and the residue modulus.
  std::uint64_t dim() const noexcept { return dim_; }

  // p^k for 0 <= k <= N.
  std::uint64_t power(unsigned k) const {
    detail::require(k <= N_, "PrimePower::power: exponent above N");
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p_;
    return r;
  }

  void require_table_size(std::uint64_t limit = kDefaultTableLimit) const {
    if (dim_ > limit) {
      throw guard_error("dimension " + std::to_string(dim_) + " exceeds table limit " +
                        std::to_string(limit));
    }
  }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  // Keeps sums of two residues inside 64 bits.
  static constexpr std::uint64_t kResidueLimit = std::uint64_t{1} << 62;

  std::uint64_t p_;
  unsigned N_;
  std::uint64_t dim_ = 1;
};

class ExponentResidue {
 public:
  ExponentResidue(Residue value, PrimePower context) : value_(value), context_(context) {
    detail::require(value < context.dim(), "ExponentResidue: value outside [0, p^N)");
  }

  static ExponentResidue reduced(std::int64_t value, PrimePower context) {
    const auto m = static_cast<std::int64_t>(context.dim());
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return {static_cast<Residue>(r), context};
  }

  Residue value() const noexcept { return value_; }
  const PrimePower& context() const noexcept { return context_; }

  // Product of roots of unity is the sum of exponents.
  ExponentResidue operator*(const ExponentResidue& other) const {
    if (!(context_ == other.context_)) {
      throw context_mismatch_error("ExponentResidue: combining residues of different p^N");
    }
    return {detail::add_mod(value_, other.value_, context_.dim()), context_};
  }

  friend bool operator==(const ExponentResidue&, const ExponentResidue&) = default;

 private:
  Residue value_;
  PrimePower context_;
};

// Depth of the root zeta^value in a p^N context: the least k with
// lambda^{p^k} = 1.  Zero maps to depth 0, units to depth N.
inline unsigned depth_of(Residue value, const PrimePower& pp) {
  if (value % pp.dim() == 0) return 0;
  return pp.N() - valuation(value % pp.dim(), pp.p());
}

inline unsigned depth(const ExponentResidue& e) { return depth_of(e.value(), e.context()); }

// s(ab) <= max(s(a), s(b)).  Exposed as a predicate for property tests.
inline bool depth_product_bound(const ExponentResidue& a, const ExponentResidue& b) {
  const ExponentResidue product = a * b;
  return depth(product) <= std::max(depth(a), depth(b));
}

}  // namespace maxclass
