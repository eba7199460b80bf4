#pragma once

// Twist-and-shout equivalence.
//
// Conjugating a standard form by y^l moves basis vector e_{l+1} to the front;
// re-twisting restores lambda_1 = 1.  Since x_2..x_n are commutators and
// unaffected by twisting, the new defining tuple is just column l+1 of rows
// 2..n.  The shout orbit of a tuple is therefore the set of distinct
// restricted columns, and its size is p^m where V_{p^m} is the minimal
// stable subspace of the restriction to M_{n-1}.

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "maxclass/stability.hpp"

namespace maxclass {

using Tail = std::vector<Residue>;  // (e_2, ..., e_n)

struct ShoutOrbit {
  LambdaSpec base;
  std::set<Tail> tails;
  std::uint64_t size = 0;
};

inline LambdaSpec shout_shift(const LambdaSpec& spec, std::uint64_t shift) {
  const PrimePower& pp = spec.prime_power();
  detail::require(shift < pp.dim(), "shout_shift: shift outside [0, p^N)");
  std::vector<Residue> e(static_cast<std::size_t>(spec.n()), 0);
  for (int i = 2; i <= spec.n(); ++i) e[i - 1] = closed_form_entry(spec, i, shift + 1);
  return {spec.n(), pp, std::move(e)};
}

inline ShoutOrbit shout_orbit(const LambdaSpec& spec) {
  const StandardFormRep rep = build_rep(spec);
  ShoutOrbit orbit{spec, {}, 0};
  for (std::uint64_t l = 0; l < rep.dim(); ++l) {
    Tail t;
    t.reserve(static_cast<std::size_t>(spec.n() - 1));
    for (int i = 2; i <= spec.n(); ++i) t.push_back(rep.at(i, static_cast<std::int64_t>(l) + 1));
    orbit.tails.insert(std::move(t));
  }
  orbit.size = orbit.tails.size();

  const StableIndex m = minimal_stable(rep, RowRange{2});
  if (orbit.size != spec.prime_power().power(m.j)) {
    throw internal_error("shout_orbit: orbit size " + std::to_string(orbit.size) +
                         " violates the p^m law (m = " + std::to_string(m.j) + ")");
  }
  return orbit;
}

namespace detail {

// One step of the column recursion on a restricted tail, in place.
inline void advance_column(std::span<Residue> column, std::uint64_t modulus) {
  for (std::size_t i = column.size() - 1; i-- > 0;) {
    column[i] = add_mod(column[i + 1], column[i], modulus);
  }
}

}  // namespace detail

// Orbit data for one tail, computed by walking the columns without storing
// the orbit.
struct TailOrbitSummary {
  bool canonical = true;   // tail is the lexicographic minimum of its orbit
  std::uint64_t size = 0;  // orbit size; only computed in full when canonical
};

inline TailOrbitSummary summarize_tail_orbit(std::span<const Residue> tail, std::uint64_t modulus,
                                             std::vector<Residue>& scratch) {
  scratch.assign(tail.begin(), tail.end());
  std::uint64_t steps = 0;
  while (true) {
    detail::advance_column(scratch, modulus);
    ++steps;
    if (std::equal(scratch.begin(), scratch.end(), tail.begin())) return {true, steps};
    if (std::lexicographical_compare(scratch.begin(), scratch.end(), tail.begin(), tail.end())) {
      return {false, 0};
    }
  }
}

inline Tail canonical_tail(const LambdaSpec& spec) {
  Tail best = spec.tail();
  Tail current = best;
  const std::uint64_t m = spec.prime_power().dim();
  for (std::uint64_t l = 1; l < m; ++l) {
    detail::advance_column(current, m);
    if (current == spec.tail()) break;
    if (current < best) best = current;
  }
  return best;
}

}  // namespace maxclass
