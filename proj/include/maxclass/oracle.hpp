#pragma once

// Floating-point cross-check of the exponent arithmetic.
//
// A standard form is realized as complex matrices and checked against the
// group relations, Schur's lemma (commutant dimension) and the definition of
// the subspaces V_{p^j}.  Nothing here reuses the column-tuple machinery of
// the exact core; stability is re-derived from explicit bases.

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "maxclass/stability.hpp"

namespace maxclass {

inline constexpr std::uint64_t kDefaultOracleLimit = 64;
inline constexpr double kDefaultOracleTolerance = 1e-9;
inline constexpr double kNullityThreshold = 1e-8;

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct ComplexRep {
  std::uint64_t dim = 1;
  std::vector<ComplexVector> x;  // diagonals of x_1..x_n
  ComplexMatrix y;
  double tol = kDefaultOracleTolerance;

  int n() const { return static_cast<int>(x.size()); }
  ComplexMatrix x_matrix(int i) const { return x.at(static_cast<std::size_t>(i - 1)).asDiagonal(); }

  // x_1, ..., x_n, y
  std::vector<ComplexMatrix> generators() const {
    std::vector<ComplexMatrix> g;
    for (int i = 1; i <= n(); ++i) g.push_back(x_matrix(i));
    g.push_back(y);
    return g;
  }
};

inline ComplexRep realize(const StandardFormRep& rep, std::uint64_t limit = kDefaultOracleLimit) {
  rep.spec().prime_power().require_table_size(limit);
  const auto d = static_cast<Eigen::Index>(rep.dim());
  ComplexRep c;
  c.dim = rep.dim();
  const double scale = 2.0 * std::numbers::pi / static_cast<double>(rep.dim());
  for (int i = 1; i <= rep.n(); ++i) {
    ComplexVector diag(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      diag[j] = std::polar(1.0, scale * static_cast<double>(rep.at(i, j + 1)));
    }
    c.x.push_back(std::move(diag));
  }
  // y e_j = e_{j+1}; the corner entry carries the scalar of y
  c.y = ComplexMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j + 1 < d; ++j) c.y(j + 1, j) = 1.0;
  c.y(0, d - 1) = static_cast<double>(rep.y_scalar());
  return c;
}

struct RelationReport {
  bool ok = true;
  // 1..n-1: [x_i, y] = x_{i+1};  n: x_n central;  n+1: x_n scalar
  std::optional<int> failed_relation;
  double max_residual = 0.0;
};

// [a, b] = a b a^{-1} b^{-1}.
inline RelationReport check_relations(const ComplexRep& c) {
  RelationReport report;
  const ComplexMatrix y_inv = c.y.inverse();
  auto record = [&](int index, double residual) {
    report.max_residual = std::max(report.max_residual, residual);
    if (residual > c.tol && report.ok) {
      report.ok = false;
      report.failed_relation = index;
    }
  };
  for (int i = 1; i < c.n(); ++i) {
    const ComplexMatrix xi = c.x_matrix(i);
    const ComplexMatrix comm = xi * c.y * xi.inverse() * y_inv;
    record(i, (comm - c.x_matrix(i + 1)).cwiseAbs().maxCoeff());
  }
  const ComplexMatrix xn = c.x_matrix(c.n());
  record(c.n(), (xn * c.y - c.y * xn).cwiseAbs().maxCoeff());
  const ComplexVector& diag = c.x.back();
  record(c.n() + 1, (diag.array() - diag[0]).abs().maxCoeff());
  return report;
}

namespace detail {

// Largest singular value of the stacked map A -> (g A - A g)_g, by power
// iteration on its Gram operator.  The adjoint of A -> gA - Ag is
// M -> g^H M - M g^H.
inline double stacked_sigma_max(const ComplexRep& c) {
  const auto d = static_cast<Eigen::Index>(c.dim);
  const ComplexMatrix y_adj = c.y.adjoint();
  ComplexMatrix a(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index j = 0; j < d; ++j) a(j, k) = std::polar(1.0, 0.37 * static_cast<double>(j + 3 * k));
  }
  a /= a.norm();
  double estimate = 0.0;
  for (int iter = 0; iter < 1000; ++iter) {
    ComplexMatrix gram = ComplexMatrix::Zero(d, d);
    for (const ComplexVector& g : c.x) {
      const ComplexMatrix image = g.asDiagonal() * a - a * g.asDiagonal();
      const ComplexVector g_adj = g.conjugate();
      gram += g_adj.asDiagonal() * image - image * g_adj.asDiagonal();
    }
    const ComplexMatrix image = c.y * a - a * c.y;
    gram += y_adj * image - image * y_adj;
    const double norm = gram.norm();
    if (norm == 0.0) return 0.0;
    const double next = std::sqrt(norm);
    a = gram / norm;
    if (std::abs(next - estimate) <= 1e-6 * next) return next;
    estimate = next;
  }
  return estimate;
}

}  // namespace detail

// dim { A : A g = g A for every generator g }, as the nullity of the stacked
// map A -> (g A - A g)_g with singular values below
// kNullityThreshold * sigma_max counted as zero.
//
// The x_i are diagonal, so their blocks are diagonal in the matrix-unit basis
// (unit E_jk scales by x_i[j] - x_i[k]); their joint kernel is spanned by the
// units whose stacked coefficient is below threshold.  The y block is then
// restricted to those units and its singular values thresholded.
inline int commutant_dimension(const ComplexRep& c, std::uint64_t limit = kDefaultOracleLimit) {
  detail::require(c.dim <= limit, "commutant_dimension: dimension above oracle limit");
  const auto d = static_cast<Eigen::Index>(c.dim);
  const double sigma_max = detail::stacked_sigma_max(c);
  if (sigma_max == 0.0) return static_cast<int>(d * d);
  const double cutoff = kNullityThreshold * sigma_max;

  std::vector<std::pair<Eigen::Index, Eigen::Index>> survivors;
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index j = 0; j < d; ++j) {
      double sq = 0.0;
      for (const ComplexVector& g : c.x) sq += std::norm(g[j] - g[k]);
      if (std::sqrt(sq) < cutoff) survivors.emplace_back(j, k);
    }
  }
  if (survivors.empty()) return 0;

  ComplexMatrix block(d * d, static_cast<Eigen::Index>(survivors.size()));
  for (std::size_t s = 0; s < survivors.size(); ++s) {
    ComplexMatrix unit = ComplexMatrix::Zero(d, d);
    unit(survivors[s].first, survivors[s].second) = 1.0;
    const ComplexMatrix image = c.y * unit - unit * c.y;
    block.col(static_cast<Eigen::Index>(s)) = Eigen::Map<const ComplexVector>(image.data(), d * d);
  }
  const Eigen::VectorXd singular = Eigen::BDCSVD<ComplexMatrix>(block).singularValues();

  int nullity = static_cast<int>(survivors.size() - static_cast<std::size_t>(singular.size()));
  for (Eigen::Index s = 0; s < singular.size(); ++s) {
    if (singular[s] < cutoff) ++nullity;
  }
  return nullity;
}

// Groups basis vectors by their joint eigenvalue signature under x_1..x_n.
// Returns (number of signature classes, size of the largest class).
inline std::pair<std::uint64_t, std::uint64_t> mutual_eigenspace_census(const ComplexRep& c) {
  if (commutant_dimension(c) != 1) {
    throw std::invalid_argument("mutual_eigenspace_census: representation is not irreducible");
  }
  const auto d = static_cast<Eigen::Index>(c.dim);
  std::vector<std::uint64_t> class_sizes;
  std::vector<Eigen::Index> representatives;
  for (Eigen::Index j = 0; j < d; ++j) {
    bool placed = false;
    for (std::size_t r = 0; r < representatives.size() && !placed; ++r) {
      const Eigen::Index k = representatives[r];
      const bool same = std::all_of(c.x.begin(), c.x.end(), [&](const ComplexVector& g) {
        return std::abs(g[j] - g[k]) <= c.tol;
      });
      if (same) {
        ++class_sizes[r];
        placed = true;
      }
    }
    if (!placed) {
      representatives.push_back(j);
      class_sizes.push_back(1);
    }
  }
  return {class_sizes.size(), *std::max_element(class_sizes.begin(), class_sizes.end())};
}

// Orthonormal basis of V_{p^j}: the <y>-orbit of e_1 + e_{p^j+1} + ... .
inline ComplexMatrix stable_subspace_basis(const ComplexRep& c, std::uint64_t p, unsigned j) {
  const auto d = static_cast<Eigen::Index>(c.dim);
  Eigen::Index step = 1;
  for (unsigned i = 0; i < j; ++i) step *= static_cast<Eigen::Index>(p);
  detail::require(step <= d && d % step == 0, "stable_subspace_basis: j above N");

  ComplexVector seed = ComplexVector::Zero(d);
  for (Eigen::Index idx = 0; idx < d; idx += step) seed[idx] = 1.0;
  ComplexMatrix span(d, step);
  ComplexVector v = seed;
  for (Eigen::Index r = 0; r < step; ++r) {
    span.col(r) = v;
    v = c.y * v;
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(span);
  return qr.householderQ() * ComplexMatrix::Identity(d, step);
}

inline bool check_subspace_stable(const ComplexRep& c, std::uint64_t p, StableIndex j) {
  const ComplexMatrix q = stable_subspace_basis(c, p, j.j);
  for (const ComplexMatrix& g : c.generators()) {
    const ComplexMatrix image = g * q;
    const ComplexMatrix outside = image - q * (q.adjoint() * image);
    if (outside.cwiseAbs().maxCoeff() > c.tol) return false;
  }
  return true;
}

}  // namespace maxclass
