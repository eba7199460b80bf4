#pragma once

// Standard-form representations of M_n = <a_1..a_n, b | [a_i, b] = a_{i+1}>.
//
// In dimension p^N the image of b is the p^N-cycle y : e_j -> e_{j+1} and each
// a_i acts diagonally.  Writing E[i][j] for the discrete log of the j-th
// diagonal entry of x_i, the relation x_i y x_i^{-1} y^{-1} = x_{i+1} becomes
//
//   E[i][j+1] = E[i+1][j+1] + E[i][j]          (mod p^N, j cyclic)
//
// whose solution from column 1 is E[i][j] = sum_{k>=i} e_k T_{k-i}(j-1).
// Rows and columns are 1-indexed throughout the public interface.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maxclass/rootlog.hpp"
#include "maxclass/simplex.hpp"

namespace maxclass {

// Defining tuple (lambda_1 = 1, lambda_2, ..., lambda_n) as exponents.
class LambdaSpec {
 public:
  LambdaSpec(int n, PrimePower pp, std::vector<Residue> exponents)
      : n_(n), pp_(pp), exponents_(std::move(exponents)) {
    detail::require(n >= 2, "LambdaSpec: n must be at least 2");
    detail::require(pp.N() >= 1, "LambdaSpec: N must be at least 1");
    detail::require(exponents_.size() == static_cast<std::size_t>(n),
                    "LambdaSpec: expected " + std::to_string(n) + " exponents");
    detail::require(exponents_[0] == 0, "LambdaSpec: e_1 must be 0 (twist normalization)");
    for (Residue e : exponents_) {
      detail::require(e < pp.dim(), "LambdaSpec: exponent outside [0, p^N)");
    }
  }

  // Builds (0, tail...) from the exponents of lambda_2..lambda_n.
  static LambdaSpec from_tail(int n, PrimePower pp, std::span<const Residue> tail) {
    std::vector<Residue> e;
    e.reserve(tail.size() + 1);
    e.push_back(0);
    e.insert(e.end(), tail.begin(), tail.end());
    return {n, pp, std::move(e)};
  }

  int n() const noexcept { return n_; }
  const PrimePower& prime_power() const noexcept { return pp_; }
  std::span<const Residue> exponents() const noexcept { return exponents_; }

  Residue exponent(int i) const {
    detail::require(i >= 1 && i <= n_, "LambdaSpec::exponent: index out of range");
    return exponents_[i - 1];
  }

  ExponentResidue lambda(int i) const { return {exponent(i), pp_}; }

  std::vector<Residue> tail() const { return {exponents_.begin() + 1, exponents_.end()}; }

  friend bool operator==(const LambdaSpec&, const LambdaSpec&) = default;

 private:
  int n_;
  PrimePower pp_;
  std::vector<Residue> exponents_;
};

// Calls fn(tail) for every (e_2, ..., e_n) in (Z/p^N)^{n-1}, last entry
// varying fastest.
template <typename Fn>
void for_each_tail(int n, const PrimePower& pp, Fn&& fn) {
  detail::require(n >= 2, "for_each_tail: n must be at least 2");
  const std::uint64_t m = pp.dim();
  std::vector<Residue> tail(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    fn(std::span<const Residue>(tail));
    std::size_t i = tail.size();
    while (i > 0) {
      --i;
      if (++tail[i] < m) break;
      tail[i] = 0;
      if (i == 0) return;
    }
  }
}

// E[i][j] from the closed form, with no reference to neighbouring entries.
inline Residue closed_form_entry(const LambdaSpec& spec, int i, std::uint64_t j) {
  detail::require(i >= 1 && i <= spec.n() && j >= 1, "closed_form_entry: index out of range");
  const PrimePower& pp = spec.prime_power();
  const std::uint64_t m = pp.dim();
  Residue acc = 0;
  for (int k = i; k <= spec.n(); ++k) {
    const Residue t = detail::simplex_residue(static_cast<unsigned>(k - i), j - 1, pp.p(), m);
    acc = detail::add_mod(acc, detail::mul_mod(spec.exponent(k), t, m), m);
  }
  return acc;
}

class StandardFormRep {
 public:
  const LambdaSpec& spec() const noexcept { return spec_; }
  int n() const noexcept { return spec_.n(); }
  std::uint64_t dim() const noexcept { return spec_.prime_power().dim(); }

  // The constant k in the corner of y; standard form fixes it to 1.
  int y_scalar() const noexcept { return 1; }

  // E[i][j]; j is taken cyclically, so j = p^N + 1 is column 1 again.
  Residue at(int i, std::int64_t j) const {
    detail::require(i >= 1 && i <= n(), "StandardFormRep::at: row out of range");
    const auto d = static_cast<std::int64_t>(dim());
    std::int64_t c = (j - 1) % d;
    if (c < 0) c += d;
    return table_[static_cast<std::size_t>(i - 1) * dim() + static_cast<std::size_t>(c)];
  }

  ExponentResidue lambda(int i, std::int64_t j) const { return {at(i, j), spec_.prime_power()}; }

  std::span<const Residue> row(int i) const {
    detail::require(i >= 1 && i <= n(), "StandardFormRep::row: row out of range");
    return {table_.data() + static_cast<std::size_t>(i - 1) * dim(), dim()};
  }

  // Lambda_n(j): the joint eigenvalue tuple on basis vector e_j.
  std::vector<Residue> column(std::int64_t j) const {
    std::vector<Residue> c(static_cast<std::size_t>(n()));
    for (int i = 1; i <= n(); ++i) c[i - 1] = at(i, j);
    return c;
  }

  // The relation also has to close up cyclically: E[i][1] = E[i+1][1] + E[i][p^N].
  bool wraps_consistently() const {
    const std::uint64_t m = dim();
    for (int i = 1; i < n(); ++i) {
      if (at(i, 1) != detail::add_mod(at(i + 1, 1), at(i, static_cast<std::int64_t>(m)), m)) {
        return false;
      }
    }
    return true;
  }

 private:
  friend StandardFormRep build_rep(const LambdaSpec&, std::uint64_t);

  StandardFormRep(LambdaSpec spec, std::vector<Residue> table)
      : spec_(std::move(spec)), table_(std::move(table)) {}

  LambdaSpec spec_;
  std::vector<Residue> table_;  // row-major, n x p^N
};

inline StandardFormRep build_rep(const LambdaSpec& spec,
                                 std::uint64_t table_limit = kDefaultTableLimit) {
  const PrimePower& pp = spec.prime_power();
  pp.require_table_size(table_limit);
  const std::uint64_t m = pp.dim();
  const auto n = static_cast<std::size_t>(spec.n());

  std::vector<Residue> table(n * m);
  auto cell = [&](std::size_t i, std::uint64_t c) -> Residue& { return table[i * m + c]; };

  for (std::size_t i = 0; i < n; ++i) cell(i, 0) = spec.exponents()[i];
  for (std::uint64_t c = 1; c < m; ++c) {
    cell(n - 1, c) = cell(n - 1, 0);
    for (std::size_t i = n - 1; i-- > 0;) {
      cell(i, c) = detail::add_mod(cell(i + 1, c), cell(i, c - 1), m);
    }
  }

  StandardFormRep rep(spec, std::move(table));
  if constexpr (kChecksEnabled) {
    for (int i = 1; i <= spec.n(); ++i) {
      for (std::uint64_t j = 1; j <= m; ++j) {
        detail::ensure(rep.at(i, static_cast<std::int64_t>(j)) == closed_form_entry(spec, i, j),
                       "build_rep: recursion and closed form disagree");
      }
    }
    if (pp.p() >= static_cast<std::uint64_t>(spec.n())) {
      detail::ensure(rep.wraps_consistently(), "build_rep: table does not close cyclically");
    }
  }
  return rep;
}

// Wraparound constraint on the defining tuple: for 2 <= i <= n,
//   p^N e_i + sum_{k=i+1}^{n} e_k T_{k-i+1}(p^N - 1) = 0  (mod p^N).
// This is exactly the condition for row i-1 to close up cyclically.  For
// p >= n every T_{k-i+1}(p^N - 1) with k-i+1 >= 2 vanishes mod p^N, so the
// check always passes; it fails only for some exceptional-prime inputs.
inline bool check_constraint_cor1(const LambdaSpec& spec) {
  const PrimePower& pp = spec.prime_power();
  const std::uint64_t m = pp.dim();
  for (int i = 2; i <= spec.n(); ++i) {
    Residue acc = 0;  // p^N e_i vanishes
    for (int k = i + 1; k <= spec.n(); ++k) {
      const Residue t = detail::simplex_residue(static_cast<unsigned>(k - i + 1), m - 1, pp.p(), m);
      acc = detail::add_mod(acc, detail::mul_mod(spec.exponent(k), t, m), m);
    }
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace maxclass
