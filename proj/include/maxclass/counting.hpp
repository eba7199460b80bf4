#pragma once

// Number r_{p^N} of twist isoclasses of p^N-dimensional irreducible
// representations of M_n, for non-exceptional primes p >= n.
//
// Three routes:
//   * enumeration: every irreducible tail (e_2..e_n) counted once per shout
//     orbit (a tail counts iff it is the lexicographic minimum of its orbit);
//   * closed form: the case split by depth profile;
//   * series: the t^N coefficient of the closed-form zeta function.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "maxclass/twistshout.hpp"
#include "maxclass/zeta.hpp"

namespace maxclass {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;  // max number of tails
  unsigned threads = 1;
};

struct CountReport {
  int n = 2;
  std::uint64_t p = 2;
  unsigned N = 0;
  std::optional<BigInt> r_enumerated;
  std::optional<BigInt> r_closed_form;
  std::optional<BigInt> r_series;
  // orbit size -> number of orbits of that size (enumeration only)
  std::map<std::uint64_t, BigInt> orbit_census;
  // every counted orbit had the size its depth profile predicts
  bool census_matches_cases = true;

  // The common value, if every computed method agrees.
  std::optional<BigInt> agreed_value() const {
    std::optional<BigInt> value;
    for (const auto* r : {&r_enumerated, &r_closed_form, &r_series}) {
      if (!r->has_value()) continue;
      if (value && *value != **r) return std::nullopt;
      value = **r;
    }
    return value;
  }
  bool agree() const { return agreed_value().has_value(); }
};

inline bool has_primitive_entry(std::span<const Residue> values, const PrimePower& pp) {
  return std::any_of(values.begin(), values.end(),
                     [&](Residue e) { return depth_of(e, pp) == pp.N(); });
}

// Orbit size predicted by the depth profile of an irreducible tail:
// p^N if some e_3..e_n is primitive, otherwise p^l with l the largest depth
// among e_3..e_n (l = 0 when they all vanish).
inline std::uint64_t census_case_size(std::span<const Residue> tail, const PrimePower& pp) {
  unsigned deepest = 0;
  for (std::size_t i = 1; i < tail.size(); ++i) deepest = std::max(deepest, depth_of(tail[i], pp));
  return pp.power(deepest);
}

namespace detail {

struct ShardResult {
  std::uint64_t count = 0;
  std::map<std::uint64_t, std::uint64_t> census;
  bool cases_ok = true;
};

inline ShardResult enumerate_shard(int n, const PrimePower& pp, std::uint64_t first,
                                   std::uint64_t last) {
  ShardResult out;
  const std::uint64_t m = pp.dim();
  const auto width = static_cast<std::size_t>(n - 1);
  std::vector<Residue> tail(width);
  std::uint64_t index = first;
  for (std::size_t i = width; i-- > 0;) {
    tail[i] = index % m;
    index /= m;
  }
  std::vector<Residue> scratch;
  for (std::uint64_t idx = first; idx < last; ++idx) {
    if (has_primitive_entry(tail, pp)) {
      const TailOrbitSummary s = summarize_tail_orbit(tail, m, scratch);
      if (s.canonical) {
        ++out.count;
        ++out.census[s.size];
        if (s.size != census_case_size(tail, pp)) out.cases_ok = false;
      }
    }
    for (std::size_t i = width; i-- > 0;) {  // odometer
      if (++tail[i] < m) break;
      tail[i] = 0;
    }
  }
  return out;
}

}  // namespace detail

inline CountReport enumerate_isoclasses(int n, std::uint64_t p, unsigned N,
                                        const EnumerationOptions& options = {}) {
  detail::require(n >= 2, "enumerate_isoclasses: n must be at least 2");
  require_non_exceptional(n, p);
  const PrimePower pp(p, N);
  CountReport report{n, p, N, {}, {}, {}, {}, true};
  if (N == 0) {
    report.r_enumerated = 1;
    report.orbit_census[1] = 1;
    return report;
  }

  const BigInt total_big = detail::big_pow(pp.dim(), static_cast<unsigned>(n - 1));
  if (total_big > options.budget) {
    throw guard_error("enumeration of " + total_big.str() + " tails exceeds budget " +
                      std::to_string(options.budget));
  }
  const auto total = total_big.convert_to<std::uint64_t>();

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, 256));
  std::vector<detail::ShardResult> shards(workers);
  if (workers == 1) {
    shards[0] = detail::enumerate_shard(n, pp, 0, total);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      const std::uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
      pool.emplace_back([&, w, lo, hi] { shards[w] = detail::enumerate_shard(n, pp, lo, hi); });
    }
  }

  BigInt count = 0;
  for (const auto& s : shards) {
    count += s.count;
    for (const auto& [size, c] : s.census) report.orbit_census[size] += c;
    report.census_matches_cases = report.census_matches_cases && s.cases_ok;
  }
  report.r_enumerated = count;
  return report;
}

namespace detail {

inline Rational rational_pow(std::uint64_t p, int e) {
  const BigInt mag = big_pow(p, static_cast<unsigned>(std::abs(e)));
  return e >= 0 ? Rational(mag) : Rational(1) / Rational(mag);
}

inline BigInt integral(const Rational& value, const char* where) {
  if (denominator(value) != 1) throw internal_error(std::string(where) + ": non-integral result");
  return numerator(value);
}

}  // namespace detail

// Expected orbit census, term by term:
//   size p^N : (1 - p^{-(n-2)}) p^{(n-2)N}
//   size p^l : (1 - p^{-1})(1 - p^{-(n-2)}) p^N p^{(n-3)l},  1 <= l <= N-1
//   size 1   : (1 - p^{-1}) p^N
// Sizes with a zero count are omitted.
inline std::map<std::uint64_t, BigInt> closed_form_census(int n, std::uint64_t p, unsigned N) {
  detail::require(n >= 2 && N >= 1, "closed_form_census: requires n >= 2, N >= 1");
  require_non_exceptional(n, p);
  using detail::rational_pow;
  const PrimePower pp(p, N);
  const auto Ni = static_cast<int>(N);
  const Rational drop_p = Rational(1) - rational_pow(p, -1);
  const Rational drop_tail = Rational(1) - rational_pow(p, -(n - 2));

  std::map<std::uint64_t, BigInt> census;
  auto put = [&](std::uint64_t size, const Rational& value) {
    const BigInt v = detail::integral(value, "closed_form_census");
    if (v != 0) census[size] += v;
  };
  put(pp.dim(), drop_tail * rational_pow(p, (n - 2) * Ni));
  for (unsigned l = 1; l + 1 <= N; ++l) {
    put(pp.power(l), drop_p * drop_tail * rational_pow(p, Ni) *
                         rational_pow(p, (n - 3) * static_cast<int>(l)));
  }
  put(1, drop_p * rational_pow(p, Ni));
  return census;
}

// r_{p^N} = (1 - p^{-(n-2)}) p^{(n-2)N}
//         + (1 - p^{-1})(1 - p^{-(n-2)}) p^N sum_{l=1}^{N-1} p^{(n-3)l}
//         + (1 - p^{-1}) p^N
inline BigInt closed_form_r(int n, std::uint64_t p, unsigned N) {
  detail::require(n >= 2, "closed_form_r: n must be at least 2");
  detail::require(N >= 1, "closed_form_r: N must be at least 1");
  require_non_exceptional(n, p);
  using detail::rational_pow;
  const auto Ni = static_cast<int>(N);
  const Rational drop_p = Rational(1) - rational_pow(p, -1);
  const Rational drop_tail = Rational(1) - rational_pow(p, -(n - 2));

  Rational inner = 0;
  for (int l = 1; l <= Ni - 1; ++l) inner += rational_pow(p, (n - 3) * l);

  const Rational r = drop_tail * rational_pow(p, (n - 2) * Ni) +
                     drop_p * drop_tail * rational_pow(p, Ni) * inner + drop_p * rational_pow(p, Ni);
  return detail::integral(r, "closed_form_r");
}

inline BigInt series_r(int n, std::uint64_t p, unsigned N) {
  return series_coefficients(zeta_closed_form(n), p, N).back();
}

enum class CountMethod { enumeration, closed_form, series, all };

inline CountReport count_isoclasses(int n, std::uint64_t p, unsigned N,
                                    CountMethod method = CountMethod::all,
                                    const EnumerationOptions& options = {}) {
  detail::require(n >= 2, "count_isoclasses: n must be at least 2");
  require_non_exceptional(n, p);
  CountReport report{n, p, N, {}, {}, {}, {}, true};
  const bool all = method == CountMethod::all;
  if (all || method == CountMethod::enumeration) report = enumerate_isoclasses(n, p, N, options);
  if (all || method == CountMethod::closed_form) {
    report.r_closed_form = N == 0 ? BigInt(1) : closed_form_r(n, p, N);
  }
  if (all || method == CountMethod::series) report.r_series = series_r(n, p, N);
  return report;
}

}  // namespace maxclass
