#pragma once

// Property suites behind `maxclass verify`.
//
// Each suite sweeps its grid exhaustively and reports one result per
// property, with the first counterexample found.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "maxclass/counting.hpp"
#include "maxclass/oracle.hpp"
#include "maxclass/simplex.hpp"
#include "maxclass/standard_form.hpp"
#include "maxclass/stability.hpp"
#include "maxclass/twistshout.hpp"
#include "maxclass/zeta.hpp"

namespace maxclass {

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::string detail;  // coverage on success, counterexample on failure
};

struct GridPoint {
  int n;
  std::uint64_t p;
  unsigned N;
};

// Restricts a suite to one (n, p, N) point when all three are given.
struct VerifyScope {
  std::optional<int> n;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> N;
  bool pinned() const { return n && p && N; }
};

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"simplex", "standardform", "stability", "shout",
                                                 "counting", "zeta",        "oracle"};
  return names;
}

namespace detail {

inline std::string describe(const LambdaSpec& spec) {
  std::ostringstream os;
  os << "n=" << spec.n() << " p=" << spec.prime_power().p() << " N=" << spec.prime_power().N()
     << " lambda=(";
  for (int i = 1; i <= spec.n(); ++i) os << (i > 1 ? "," : "") << spec.exponent(i);
  os << ")";
  return os.str();
}

inline std::string describe(const GridPoint& g) {
  return "n=" + std::to_string(g.n) + " p=" + std::to_string(g.p) + " N=" + std::to_string(g.N);
}

// Accumulates pass/fail for one property, keeping the first counterexample.
class Property {
 public:
  Property(std::string suite, std::string name) : result_{std::move(suite), std::move(name), true, ""} {}

  void check(bool ok, const std::function<std::string()>& counterexample) {
    ++cases_;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = "counterexample: " + counterexample();
    }
  }

  PropertyResult finish(const std::string& coverage) {
    if (result_.passed) result_.detail = coverage.empty() ? std::to_string(cases_) + " cases" : coverage;
    return result_;
  }

  std::uint64_t cases() const { return cases_; }

 private:
  PropertyResult result_;
  std::uint64_t cases_ = 0;
};

inline std::vector<GridPoint> grid_points(const VerifyScope& scope, std::vector<GridPoint> defaults) {
  if (scope.pinned()) return {{*scope.n, *scope.p, *scope.N}};
  std::vector<GridPoint> out;
  for (const GridPoint& g : defaults) {
    if (scope.n && g.n != *scope.n) continue;
    if (scope.p && g.p != *scope.p) continue;
    if (scope.N && g.N != *scope.N) continue;
    out.push_back(g);
  }
  return out;
}

// p >= n, p^N <= 125, at most ~16k tails.
inline std::vector<GridPoint> standard_grid() {
  return {{2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 2, 5}, {2, 2, 6}, {2, 3, 1}, {2, 3, 2},
          {2, 3, 3}, {2, 3, 4}, {2, 5, 1}, {2, 5, 2}, {2, 5, 3}, {2, 7, 1}, {2, 7, 2}, {2, 11, 1},
          {2, 11, 2}, {3, 3, 1}, {3, 3, 2}, {3, 3, 3}, {3, 3, 4}, {3, 5, 1}, {3, 5, 2}, {3, 5, 3},
          {3, 7, 1}, {3, 7, 2}, {3, 11, 1}, {3, 11, 2}, {4, 5, 1}, {4, 5, 2}, {4, 7, 1}, {4, 11, 1},
          {5, 5, 1}, {5, 7, 1}, {5, 11, 1}};
}

// p >= n - 1 (the shout law's range), p^N <= 125.
inline std::vector<GridPoint> shout_grid() {
  std::vector<GridPoint> g = standard_grid();
  for (GridPoint extra : {GridPoint{3, 2, 1}, GridPoint{3, 2, 2}, GridPoint{3, 2, 3}, GridPoint{3, 2, 4},
                          GridPoint{3, 2, 5}, GridPoint{3, 2, 6}, GridPoint{4, 3, 1}, GridPoint{4, 3, 2},
                          GridPoint{6, 5, 1}}) {
    g.push_back(extra);
  }
  return g;
}

inline std::vector<GridPoint> counting_grid() {
  std::vector<GridPoint> g;
  for (unsigned N = 0; N <= 4; ++N) g.push_back({2, 2, N});
  for (unsigned N = 0; N <= 3; ++N) g.push_back({2, 3, N});
  for (unsigned N = 0; N <= 3; ++N) g.push_back({3, 3, N});
  for (unsigned N = 0; N <= 2; ++N) g.push_back({3, 5, N});
  for (unsigned N = 0; N <= 2; ++N) g.push_back({3, 7, N});
  for (unsigned N = 0; N <= 2; ++N) g.push_back({4, 5, N});
  g.push_back({5, 5, 1});
  g.push_back({5, 7, 1});
  return g;
}

// p >= n, p^N <= 32.
inline std::vector<GridPoint> oracle_grid() {
  return {{2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 2, 5}, {2, 3, 1}, {2, 3, 2},
          {2, 3, 3}, {3, 3, 1}, {3, 3, 2}, {3, 3, 3}, {3, 5, 1}, {4, 5, 1}, {5, 5, 1}};
}

inline std::uint64_t prime_power_value(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

inline std::vector<PropertyResult> verify_simplex() {
  std::vector<PropertyResult> out;
  const std::string suite = "simplex";
  const SimplexTable table(8, 64);

  {
    Property prop(suite, "recursion = binomial closed form = sum identity (i),(iv)");
    for (unsigned k = 0; k <= 8; ++k) {
      for (std::size_t j = 0; j <= 64; ++j) {
        const BigInt& v = table.at(k, j);
        BigInt binomial = (k == 0) ? BigInt(1) : (j == 0 ? BigInt(0) : BigInt(1));
        if (k > 0 && j > 0) {
          for (unsigned i = 1; i <= k; ++i) binomial = binomial * (j + i - 1) / i;
        }
        prop.check(v == binomial && v == simplex(k, j),
                   [&] { return "k=" + std::to_string(k) + " j=" + std::to_string(j); });
        if (j < 64) {
          BigInt sum = 0;
          for (unsigned l = 0; l <= k; ++l) sum += table.at(l, j);
          prop.check(table.at(k, j + 1) == sum,
                     [&] { return "(iv) k=" + std::to_string(k) + " j=" + std::to_string(j); });
        }
      }
    }
    out.push_back(prop.finish("k<=8, j<=64"));
  }
  {
    Property prop(suite, "Vandermonde identity (v)");
    for (unsigned k = 0; k <= 6; ++k) {
      for (std::uint64_t i = 0; i <= 20; ++i) {
        for (std::uint64_t j = 0; j <= 20; ++j) {
          BigInt sum = 0;
          for (unsigned l = 0; l <= k; ++l) sum += simplex(l, i) * simplex(k - l, j);
          prop.check(simplex(k, i + j) == sum, [&] {
            return "k=" + std::to_string(k) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
          });
        }
      }
    }
    out.push_back(prop.finish("i,j<=20, k<=6"));
  }
  {
    Property prop(suite, "difference divisibility (ii)");
    for (unsigned k = 0; k <= 6; ++k) {
      BigInt factorial = 1;
      for (unsigned i = 2; i <= k; ++i) factorial *= i;
      for (std::uint64_t i = 0; i <= 40; ++i) {
        for (std::uint64_t j = 0; j <= 40; ++j) {
          if (i == j) continue;
          const BigInt diff = factorial * (simplex(k, i) - simplex(k, j));
          const BigInt gap = BigInt(i) - BigInt(j);
          prop.check(diff % gap == 0, [&] {
            return "k=" + std::to_string(k) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
          });
        }
      }
    }
    out.push_back(prop.finish("i!=j<=40, k<=6"));
  }
  {
    Property prop(suite, "periodicity mod p^b (iii)");
    for (std::uint64_t p : {3, 5, 7}) {
      for (unsigned k = 0; k < p; ++k) {
        for (unsigned b = 1; b <= 3; ++b) {
          const std::uint64_t pb = prime_power_value(p, b);
          for (std::uint64_t alpha = 1; alpha < p; ++alpha) {
            for (std::uint64_t j = 0; j <= 30; ++j) {
              prop.check((simplex(k, alpha * pb + j) - simplex(k, j)) % pb == 0, [&] {
                return "p=" + std::to_string(p) + " k=" + std::to_string(k) + " b=" + std::to_string(b) +
                       " alpha=" + std::to_string(alpha) + " j=" + std::to_string(j);
              });
            }
          }
        }
      }
    }
    out.push_back(prop.finish("p in {3,5,7}, k<p, b<=3, j<=30"));
  }
  {
    Property prop(suite, "vanishing T_k(p^N-1) = 0 mod p^N for 2<=k<p (vi)");
    for (std::uint64_t p : {5, 7, 11}) {
      for (unsigned k = 2; k < p; ++k) {
        for (unsigned N = 1; N <= 3; ++N) {
          const std::uint64_t m = prime_power_value(p, N);
          prop.check(simplex_mod(k, m - 1, p, N) == 0 && simplex(k, m - 1) % m == 0, [&] {
            return "p=" + std::to_string(p) + " k=" + std::to_string(k) + " N=" + std::to_string(N);
          });
        }
      }
    }
    out.push_back(prop.finish("p in {5,7,11}, 2<=k<p, N<=3"));
  }
  {
    Property prop(suite, "modular fast path = exact reduction");
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (unsigned N = 1; N <= 3; ++N) {
        const std::uint64_t m = prime_power_value(p, N);
        for (unsigned k = 0; k <= 8; ++k) {
          for (std::uint64_t j = 0; j <= 200; j += 7) {
            prop.check(simplex_mod(k, j, p, N) == detail::reduce(simplex(k, j), m), [&] {
              return "p=" + std::to_string(p) + " N=" + std::to_string(N) + " k=" + std::to_string(k) +
                     " j=" + std::to_string(j);
            });
          }
        }
      }
    }
    out.push_back(prop.finish(""));
  }
  {
    Property prop(suite, "Gamma congruence corollary");
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (unsigned k = 1; k < p; ++k) {
        for (unsigned N = 1; N <= 3; ++N) {
          for (unsigned m = 1; m <= N; ++m) {
            for (std::int64_t alpha : {std::int64_t{1}, std::int64_t{-1}, static_cast<std::int64_t>(p + 1),
                                       static_cast<std::int64_t>(2 * p - 1)}) {
              prop.check(gamma_congruence_check(k, p, N, m, alpha), [&] {
                return "p=" + std::to_string(p) + " k=" + std::to_string(k) + " N=" + std::to_string(N) +
                       " m=" + std::to_string(m) + " alpha=" + std::to_string(alpha);
              });
            }
          }
        }
      }
    }
    out.push_back(prop.finish("p in {2,3,5,7}, k<p, N<=3, 1<=m<=N"));
  }
  return out;
}

inline std::vector<PropertyResult> verify_standard_form(const VerifyScope& scope) {
  const std::string suite = "standardform";
  Property closed(suite, "recursion = closed form");
  Property central(suite, "row n constant");
  Property cor1(suite, "wraparound constraint holds");
  Property geometric(suite, "row n-1 geometric");
  Property distinct(suite, "distinct diagonal below a primitive entry");

  for (const GridPoint& g : grid_points(scope, standard_grid())) {
    require_non_exceptional(g.n, g.p);
    const PrimePower pp(g.p, g.N);
    for_each_tail(g.n, pp, [&](std::span<const Residue> tail) {
      const LambdaSpec spec = LambdaSpec::from_tail(g.n, pp, tail);
      const StandardFormRep rep = build_rep(spec);
      const auto why = [&] { return describe(spec); };
      bool same = true;
      for (int i = 1; i <= g.n && same; ++i) {
        for (std::uint64_t j = 1; j <= pp.dim() && same; ++j) {
          same = rep.at(i, static_cast<std::int64_t>(j)) == closed_form_entry(spec, i, j);
        }
      }
      closed.check(same && rep.wraps_consistently(), why);

      const auto last = rep.row(g.n);
      central.check(std::all_of(last.begin(), last.end(), [&](Residue e) { return e == spec.exponent(g.n); }),
                    why);
      cor1.check(check_constraint_cor1(spec), why);

      bool geo = true;
      for (std::uint64_t j = 1; j <= pp.dim(); ++j) {
        const Residue expect = detail::add_mod(detail::mul_mod(spec.exponent(g.n), j - 1, pp.dim()),
                                               spec.exponent(g.n - 1), pp.dim());
        geo = geo && rep.at(g.n - 1, static_cast<std::int64_t>(j)) == expect;
      }
      geometric.check(geo, why);

      for (int i = 2; i <= g.n; ++i) {
        bool hypothesis = depth_of(spec.exponent(i), pp) == pp.N();
        for (int k = i + 1; k <= g.n; ++k) hypothesis = hypothesis && depth_of(spec.exponent(k), pp) < pp.N();
        if (!hypothesis) continue;
        const auto row = rep.row(i - 1);
        const std::set<Residue> values(row.begin(), row.end());
        distinct.check(values.size() == pp.dim(), why);
      }
    });
  }
  return {closed.finish(""), central.finish(""), cor1.finish(""), geometric.finish(""), distinct.finish("")};
}

inline std::vector<PropertyResult> verify_stability(const VerifyScope& scope) {
  const std::string suite = "stability";
  Property equivalence(suite, "depth criterion <=> structural criterion");
  Property propagation(suite, "equal columns propagate");
  Property monotone(suite, "restriction monotonicity");

  for (const GridPoint& g : grid_points(scope, standard_grid())) {
    require_non_exceptional(g.n, g.p);
    const PrimePower pp(g.p, g.N);
    const auto d = static_cast<std::int64_t>(pp.dim());
    for_each_tail(g.n, pp, [&](std::span<const Residue> tail) {
      const LambdaSpec spec = LambdaSpec::from_tail(g.n, pp, tail);
      const StandardFormRep rep = build_rep(spec);
      const auto why = [&] { return describe(spec); };
      equivalence.check(is_irreducible_depth(spec) == is_irreducible_structural(rep), why);
      if (d <= 27) {
        for (std::int64_t a = 1; a <= d; ++a) {
          for (std::int64_t b = a + 1; b <= d; ++b) {
            if (rep.column(a) == rep.column(b)) propagation.check(rep.column(a + 1) == rep.column(b + 1), why);
          }
        }
      }
      for (int k = 2; k < g.n; ++k) monotone.check(restriction_monotonicity_check(rep, k), why);
    });
  }
  return {equivalence.finish(""), propagation.finish(""), monotone.finish("")};
}

inline std::vector<PropertyResult> verify_shout(const VerifyScope& scope) {
  const std::string suite = "shout";
  Property law(suite, "orbit-size law |orbit| = p^m");
  Property compose(suite, "shifts compose");
  Property invariant(suite, "irreducibility constant on orbits");
  Property closure(suite, "census case constant on irreducible orbits");
  std::uint64_t tails = 0;
  std::uint64_t tuples = 0;  // tails times the p^N twists of lambda_1

  for (const GridPoint& g : grid_points(scope, shout_grid())) {
    detail::require(g.p + 1 >= static_cast<std::uint64_t>(g.n), "shout suite requires p >= n-1");
    const PrimePower pp(g.p, g.N);
    const bool non_exceptional = g.p >= static_cast<std::uint64_t>(g.n);
    for_each_tail(g.n, pp, [&](std::span<const Residue> tail) {
      ++tails;
      tuples += pp.dim();
      const LambdaSpec spec = LambdaSpec::from_tail(g.n, pp, tail);
      if (!non_exceptional && !check_constraint_cor1(spec)) return;  // not a representation
      const auto why = [&] { return describe(spec); };
      try {
        const ShoutOrbit orbit = shout_orbit(spec);
        law.check(true, why);
        if (!non_exceptional) return;
        const bool irreducible = is_irreducible_depth(spec);
        const std::uint64_t size = census_case_size(tail, pp);
        for (const Tail& t : orbit.tails) {
          const LambdaSpec other = LambdaSpec::from_tail(g.n, pp, t);
          invariant.check(is_irreducible_structural(build_rep(other)) == irreducible, why);
          if (irreducible) {
            closure.check(census_case_size(t, pp) == size, why);
          }
        }
        const std::uint64_t a = (tail[0] * 7 + 3) % pp.dim();
        const std::uint64_t b = (tail.back() * 5 + 1) % pp.dim();
        compose.check(shout_shift(shout_shift(spec, a), b) == shout_shift(spec, (a + b) % pp.dim()), why);
      } catch (const internal_error&) {
        law.check(false, why);
      }
    });
  }
  const std::string coverage = std::to_string(tuples) + " tuples, " + std::to_string(tails) + " up to twist";
  return {law.finish(coverage), compose.finish(""), invariant.finish(""),
          closure.finish("")};
}

inline std::vector<PropertyResult> verify_counting(const VerifyScope& scope,
                                                   const EnumerationOptions& options) {
  const std::string suite = "counting";
  Property agree(suite, "enumeration = closed form = series");
  Property census(suite, "orbit census matches case partition");
  for (const GridPoint& g : grid_points(scope, counting_grid())) {
    const CountReport report = count_isoclasses(g.n, g.p, g.N, CountMethod::all, options);
    const auto why = [&] { return describe(g); };
    agree.check(report.agree(), why);
    bool census_ok = report.census_matches_cases;
    if (g.N >= 1) census_ok = census_ok && report.orbit_census == closed_form_census(g.n, g.p, g.N);
    census.check(census_ok, why);
  }
  return {agree.finish(""), census.finish("")};
}

inline std::vector<PropertyResult> verify_zeta() {
  const std::string suite = "zeta";
  Property funceq(suite, "functional equation with factor p^{n-1}");
  for (int n = 2; n <= 10; ++n) funceq.check(functional_equation_check(n), [&] { return "n=" + std::to_string(n); });
  Property pole(suite, "abscissa");
  for (int n = 2; n <= 10; ++n) {
    pole.check(abscissa(n) == Rational(n == 2 ? 1 : n - 2), [&] { return "n=" + std::to_string(n); });
  }
  Property assembly(suite, "geometric-sum assembly = closed form");
  for (int n = 2; n <= 8; ++n) {
    assembly.check(equivalent(zeta_geometric_sum_form(n), zeta_closed_form(n)),
                   [&] { return "n=" + std::to_string(n); });
  }
  Property series(suite, "series coefficients = closed-form counts");
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t p : {5, 7, 11}) {
      if (p < static_cast<std::uint64_t>(n)) continue;
      const auto coeffs = series_coefficients(zeta_closed_form(n), p, 6);
      bool ok = coeffs[0] == 1;
      for (unsigned N = 1; N <= 6; ++N) ok = ok && coeffs[N] == closed_form_r(n, p, N);
      series.check(ok, [&] { return "n=" + std::to_string(n) + " p=" + std::to_string(p); });
    }
  }
  return {funceq.finish("n=2..10"), pole.finish("n=2..10"), assembly.finish("n=2..8"), series.finish("")};
}

inline std::vector<PropertyResult> verify_oracle(const VerifyScope& scope) {
  const std::string suite = "oracle";
  Property relations(suite, "group relations hold");
  Property schur(suite, "commutant dim 1 <=> structural <=> depth");
  Property subspaces(suite, "V_{p^j} stable <=> j >= minimal stable index");
  Property census(suite, "mutual eigenspaces: p^N classes of size 1");
  Property robust(suite, "verdicts stable for tol in [1e-11, 1e-7]");
  std::uint64_t tails = 0;
  std::uint64_t tuples = 0;
  std::uint64_t max_dim = 0;

  for (const GridPoint& g : grid_points(scope, oracle_grid())) {
    require_non_exceptional(g.n, g.p);
    const PrimePower pp(g.p, g.N);
    max_dim = std::max(max_dim, pp.dim());
    for_each_tail(g.n, pp, [&](std::span<const Residue> tail) {
      ++tails;
      tuples += pp.dim();
      const LambdaSpec spec = LambdaSpec::from_tail(g.n, pp, tail);
      const StandardFormRep rep = build_rep(spec);
      ComplexRep c = realize(rep);
      const auto why = [&] { return describe(spec); };

      const RelationReport rel = check_relations(c);
      relations.check(rel.ok, why);
      const bool structural = is_irreducible_structural(rep);
      const bool by_schur = commutant_dimension(c) == 1;
      schur.check(by_schur == structural && structural == is_irreducible_depth(spec), why);

      const StableIndex minimal = minimal_stable(rep);
      for (unsigned j = 0; j <= pp.N(); ++j) {
        subspaces.check(check_subspace_stable(c, g.p, {j}) == (j >= minimal.j), why);
      }
      if (by_schur) {
        const auto [classes, largest] = mutual_eigenspace_census(c);
        census.check(classes == pp.dim() && largest == 1, why);
      }
      if (pp.dim() <= 9) {
        for (double tol : {1e-11, 1e-7}) {
          c.tol = tol;
          bool same = check_relations(c).ok == rel.ok;
          for (unsigned j = 0; j <= pp.N(); ++j) {
            same = same && check_subspace_stable(c, g.p, {j}) == (j >= minimal.j);
          }
          robust.check(same, why);
        }
      }
    });
  }
  const std::string coverage = std::to_string(tuples) + " tuples, " + std::to_string(tails) +
                               " up to twist, dim <= " + std::to_string(max_dim);
  return {relations.finish(coverage), schur.finish(coverage), subspaces.finish(""), census.finish(""),
          robust.finish("")};
}

}  // namespace detail

// Runs one suite ("all" runs every suite).
inline std::vector<PropertyResult> run_verify_suite(std::string_view suite, const VerifyScope& scope = {},
                                                    const EnumerationOptions& options = {}) {
  std::vector<PropertyResult> out;
  auto append = [&](std::vector<PropertyResult> part) { out.insert(out.end(), part.begin(), part.end()); };
  const bool all = suite == "all";
  if (all || suite == "simplex") append(detail::verify_simplex());
  if (all || suite == "standardform") append(detail::verify_standard_form(scope));
  if (all || suite == "stability") append(detail::verify_stability(scope));
  if (all || suite == "shout") append(detail::verify_shout(scope));
  if (all || suite == "counting") append(detail::verify_counting(scope, options));
  if (all || suite == "zeta") append(detail::verify_zeta());
  if (all || suite == "oracle") append(detail::verify_oracle(scope));
  if (out.empty()) throw std::invalid_argument("unknown verify suite: " + std::string(suite));
  return out;
}

}  // namespace maxclass
