#include <gtest/gtest.h>

#include "maxclass/twistshout.hpp"

namespace mc = maxclass;
using mc::Residue;
using mc::Tail;

namespace {

struct Grid {
  int n;
  std::uint64_t p;
  unsigned N;
};

}  // namespace

TEST(ShoutShift, Examples) {
  const mc::LambdaSpec spec(3, {5, 1}, {0, 0, 1});
  EXPECT_EQ(mc::shout_shift(spec, 2), mc::LambdaSpec(3, {5, 1}, {0, 2, 1}));
  EXPECT_EQ(mc::shout_shift(spec, 0), spec);
  const mc::LambdaSpec constant(3, {5, 1}, {0, 1, 0});
  for (std::uint64_t l = 0; l < 5; ++l) EXPECT_EQ(mc::shout_shift(constant, l), constant);
  EXPECT_THROW((void)mc::shout_shift(spec, 5), std::invalid_argument);
}

// Conjugating by y^l rotates the table; re-twisting subtracts the new first
// entry of row 1.  Both sides are built from scratch.
TEST(ShoutShift, IsConjugationFollowedByTwist) {
  for (const Grid g : {Grid{3, 5, 1}, Grid{3, 3, 2}, Grid{4, 5, 1}, Grid{2, 2, 3}}) {
    const mc::PrimePower pp(g.p, g.N);
    const std::uint64_t m = pp.dim();
    mc::for_each_tail(g.n, pp, [&](std::span<const Residue> t) {
      const auto spec = mc::LambdaSpec::from_tail(g.n, pp, t);
      const auto rep = mc::build_rep(spec);
      for (std::uint64_t l = 0; l < m; ++l) {
        const auto shifted = mc::build_rep(mc::shout_shift(spec, l));
        const auto s = static_cast<std::int64_t>(l);
        for (std::int64_t j = 1; j <= static_cast<std::int64_t>(m); ++j) {
          for (int i = 2; i <= g.n; ++i) ASSERT_EQ(shifted.at(i, j), rep.at(i, j + s));
          ASSERT_EQ(shifted.at(1, j), (rep.at(1, j + s) + m - rep.at(1, 1 + s)) % m);
        }
      }
    });
  }
}

TEST(ShoutShift, Composes) {
  const mc::PrimePower pp(3, 2);
  mc::for_each_tail(3, pp, [&](std::span<const Residue> t) {
    const auto spec = mc::LambdaSpec::from_tail(3, pp, t);
    for (std::uint64_t a = 0; a < 9; ++a) {
      for (std::uint64_t b = 0; b < 9; ++b) {
        ASSERT_EQ(mc::shout_shift(mc::shout_shift(spec, a), b), mc::shout_shift(spec, (a + b) % 9));
      }
    }
  });
}

TEST(ShoutOrbit, Examples) {
  const auto orbit = mc::shout_orbit(mc::LambdaSpec(3, {5, 1}, {0, 0, 1}));
  EXPECT_EQ(orbit.size, 5u);
  EXPECT_EQ(orbit.tails, (std::set<Tail>{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}));
  EXPECT_EQ(mc::shout_orbit(mc::LambdaSpec(3, {5, 1}, {0, 1, 0})).size, 1u);
  EXPECT_EQ(mc::shout_orbit(mc::LambdaSpec(3, {5, 1}, {0, 0, 0})).size, 1u);
}

TEST(ShoutOrbit, SizeLawOnAcceptanceGrid) {
  for (const Grid g : {Grid{3, 5, 1}, Grid{3, 3, 2}, Grid{2, 3, 2}, Grid{4, 5, 1}, Grid{2, 2, 3}, Grid{3, 2, 3},
                       Grid{4, 3, 2}}) {
    const mc::PrimePower pp(g.p, g.N);
    mc::for_each_tail(g.n, pp, [&](std::span<const Residue> t) {
      const auto spec = mc::LambdaSpec::from_tail(g.n, pp, t);
      if (!mc::check_constraint_cor1(spec)) return;
      const auto orbit = mc::shout_orbit(spec);
      const auto m = mc::minimal_stable(mc::build_rep(spec), mc::RowRange{2});
      ASSERT_EQ(orbit.size, pp.power(m.j));
      ASSERT_EQ(orbit.tails.size(), orbit.size);
      ASSERT_TRUE(orbit.tails.contains(spec.tail()));
    });
  }
}

TEST(CanonicalTail, Examples) {
  EXPECT_EQ(mc::canonical_tail(mc::LambdaSpec(3, {5, 1}, {0, 3, 1})), (Tail{0, 1}));
  EXPECT_EQ(mc::canonical_tail(mc::LambdaSpec(3, {5, 1}, {0, 1, 0})), (Tail{1, 0}));
  EXPECT_EQ(mc::canonical_tail(mc::LambdaSpec(4, {5, 1}, {0, 0, 0, 0})), (Tail{0, 0, 0}));
}

TEST(TailOrbitSummary, AgreesWithExplicitOrbit) {
  for (const Grid g : {Grid{3, 5, 1}, Grid{3, 3, 2}, Grid{4, 5, 1}, Grid{2, 3, 2}}) {
    const mc::PrimePower pp(g.p, g.N);
    std::vector<Residue> scratch;
    mc::for_each_tail(g.n, pp, [&](std::span<const Residue> t) {
      const auto spec = mc::LambdaSpec::from_tail(g.n, pp, t);
      const auto orbit = mc::shout_orbit(spec);
      const Tail minimum = *orbit.tails.begin();
      ASSERT_EQ(mc::canonical_tail(spec), minimum);
      const auto summary = mc::summarize_tail_orbit(t, pp.dim(), scratch);
      ASSERT_EQ(summary.canonical, minimum == spec.tail());
      if (summary.canonical) {
        ASSERT_EQ(summary.size, orbit.size);
      }
    });
  }
}
