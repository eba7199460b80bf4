#pragma once

// Stable subspaces and irreducibility of standard-form representations.
//
// V_{p^j} is spanned by the <y>-orbit of e_1 + e_{p^j+1} + ... ; it is stable
// exactly when the column tuples are p^j-periodic.  Column periodicity
// propagates (equal columns c1, c2 imply equal columns c1+1, c2+1), so the
// single comparison Lambda(1) == Lambda(p^j + 1) decides it.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "maxclass/standard_form.hpp"

namespace maxclass {

// Index j of the candidate subspace V_{p^j}; j = N is the whole space.
struct StableIndex {
  unsigned j = 0;
  friend bool operator==(const StableIndex&, const StableIndex&) = default;
  friend auto operator<=>(const StableIndex&, const StableIndex&) = default;
};

// Suffix of rows first..n.  first = 1 is the whole group, first = 2 the
// restriction to M_{n-1} = <a_2, ..., a_n, b>.
struct RowRange {
  int first = 1;
};

// Lambda_n(k) restricted to a row range.
struct EigenTuple {
  std::int64_t k = 1;
  std::vector<Residue> values;
  friend bool operator==(const EigenTuple&, const EigenTuple&) = default;
};

inline EigenTuple eigen_tuple(const StandardFormRep& rep, std::int64_t k, RowRange rows = {}) {
  detail::require(rows.first >= 1 && rows.first <= rep.n(), "eigen_tuple: bad row range");
  EigenTuple t{k, {}};
  t.values.reserve(static_cast<std::size_t>(rep.n() - rows.first + 1));
  for (int i = rows.first; i <= rep.n(); ++i) t.values.push_back(rep.at(i, k));
  return t;
}

namespace detail {

inline bool columns_equal(const StandardFormRep& rep, RowRange rows, std::int64_t a,
                          std::int64_t b) {
  for (int i = rows.first; i <= rep.n(); ++i) {
    if (rep.at(i, a) != rep.at(i, b)) return false;
  }
  return true;
}

}  // namespace detail

inline StableIndex minimal_stable(const StandardFormRep& rep, RowRange rows = {}) {
  detail::require(rows.first >= 1 && rows.first <= rep.n(), "minimal_stable: bad row range");
  const PrimePower& pp = rep.spec().prime_power();
  unsigned j = 0;
  while (j < pp.N() &&
         !detail::columns_equal(rep, rows, 1, static_cast<std::int64_t>(pp.power(j)) + 1)) {
    ++j;
  }

  if constexpr (kChecksEnabled) {
    const auto period = static_cast<std::int64_t>(pp.power(j));
    const auto d = static_cast<std::int64_t>(rep.dim());
    for (std::int64_t k = 1; k <= d; ++k) {
      detail::ensure(detail::columns_equal(rep, rows, k, k + period),
                     "minimal_stable: column tuples are not fully periodic");
    }
  }
  return {j};
}

// Irreducible iff V_{p^{N-1}} is not stable, i.e. the minimal stable
// subspace is the whole space.
inline bool is_irreducible_structural(const StandardFormRep& rep) {
  return minimal_stable(rep).j == rep.spec().prime_power().N();
}

inline void require_non_exceptional(int n, std::uint64_t p) {
  if (p < static_cast<std::uint64_t>(n)) {
    throw exceptional_prime_error(static_cast<long long>(p), n);
  }
}

// For p >= n: irreducible iff some lambda_i (i >= 2) is a primitive p^N-th
// root of unity.
inline bool is_irreducible_depth(const LambdaSpec& spec) {
  const PrimePower& pp = spec.prime_power();
  require_non_exceptional(spec.n(), pp.p());
  for (int i = 2; i <= spec.n(); ++i) {
    if (depth_of(spec.exponent(i), pp) == pp.N()) return true;
  }
  return false;
}

// Restricting to the last k generators cannot raise the minimal stable index.
inline bool restriction_monotonicity_check(const StandardFormRep& rep, int k) {
  detail::require(k >= 2 && k < rep.n(), "restriction_monotonicity_check: requires 2 <= k < n");
  return minimal_stable(rep) >= minimal_stable(rep, RowRange{rep.n() - k + 1});
}

}  // namespace maxclass
