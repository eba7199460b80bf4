#include <gtest/gtest.h>

#include "maxclass/stability.hpp"

namespace mc = maxclass;
using mc::Residue;

namespace {

mc::StandardFormRep rep_of(int n, std::uint64_t p, unsigned N, std::vector<Residue> e) {
  return mc::build_rep(mc::LambdaSpec(n, {p, N}, std::move(e)));
}

// Least shift s >= 1 with column(k) == column(k + s) on the given rows, for all k.
std::uint64_t least_period(const mc::StandardFormRep& rep, int first_row) {
  const auto d = static_cast<std::int64_t>(rep.dim());
  for (std::int64_t s = 1; s <= d; ++s) {
    bool periodic = true;
    for (std::int64_t k = 1; k <= d && periodic; ++k) {
      for (int i = first_row; i <= rep.n() && periodic; ++i) periodic = rep.at(i, k) == rep.at(i, k + s);
    }
    if (periodic) return static_cast<std::uint64_t>(s);
  }
  return 0;
}

struct Grid {
  int n;
  std::uint64_t p;
  unsigned N;
};

const std::vector<Grid> kGrid = {{2, 2, 5}, {2, 3, 3}, {3, 3, 3}, {3, 5, 2}, {4, 5, 1}, {5, 5, 1}, {3, 7, 1}};

}  // namespace

TEST(MinimalStable, Examples) {
  const auto rep = rep_of(3, 5, 1, {0, 1, 0});
  EXPECT_EQ(mc::minimal_stable(rep).j, 1u);
  EXPECT_EQ(mc::minimal_stable(rep, mc::RowRange{2}).j, 0u);
  EXPECT_EQ(mc::minimal_stable(rep_of(3, 5, 1, {0, 0, 0})).j, 0u);
  EXPECT_THROW((void)mc::minimal_stable(rep, mc::RowRange{4}), std::invalid_argument);
}

TEST(MinimalStable, EqualsLeastColumnPeriod) {
  for (const Grid& g : kGrid) {
    const mc::PrimePower pp(g.p, g.N);
    mc::for_each_tail(g.n, pp, [&](std::span<const Residue> t) {
      const auto rep = mc::build_rep(mc::LambdaSpec::from_tail(g.n, pp, t));
      for (int first = 1; first <= g.n; ++first) {
        ASSERT_EQ(pp.power(mc::minimal_stable(rep, {first}).j), least_period(rep, first));
      }
    });
  }
}

TEST(EigenTuple, RestrictsRows) {
  const auto rep = rep_of(3, 5, 1, {0, 1, 1});
  EXPECT_EQ(mc::eigen_tuple(rep, 2).values, (std::vector<Residue>{2, 2, 1}));
  EXPECT_EQ(mc::eigen_tuple(rep, 2, {2}).values, (std::vector<Residue>{2, 1}));
  EXPECT_EQ(mc::eigen_tuple(rep, 7).values, mc::eigen_tuple(rep, 2).values);
}

TEST(Irreducibility, StructuralExamples) {
  EXPECT_TRUE(mc::is_irreducible_structural(rep_of(3, 5, 1, {0, 0, 1})));
  EXPECT_FALSE(mc::is_irreducible_structural(rep_of(3, 5, 1, {0, 0, 0})));
  EXPECT_FALSE(mc::is_irreducible_structural(rep_of(2, 3, 2, {0, 3})));
}

TEST(Irreducibility, DepthExamples) {
  EXPECT_TRUE(mc::is_irreducible_depth(mc::LambdaSpec(3, {5, 1}, {0, 0, 1})));
  EXPECT_FALSE(mc::is_irreducible_depth(mc::LambdaSpec(3, {5, 2}, {0, 5, 10})));
  EXPECT_THROW((void)mc::is_irreducible_depth(mc::LambdaSpec(4, {3, 1}, {0, 1, 1, 1})),
               mc::exceptional_prime_error);
  try {
    mc::require_non_exceptional(4, 3);
    FAIL();
  } catch (const mc::exceptional_prime_error& e) {
    EXPECT_NE(std::string(e.what()).find("exceptional prime p=3 < n=4"), std::string::npos);
  }
  EXPECT_NO_THROW(mc::require_non_exceptional(5, 5));
}

TEST(Irreducibility, DepthCriterionEqualsStructural) {
  for (const Grid& g : kGrid) {
    const mc::PrimePower pp(g.p, g.N);
    std::uint64_t irreducible = 0;
    mc::for_each_tail(g.n, pp, [&](std::span<const Residue> t) {
      const auto spec = mc::LambdaSpec::from_tail(g.n, pp, t);
      const bool by_depth = mc::is_irreducible_depth(spec);
      ASSERT_EQ(by_depth, mc::is_irreducible_structural(mc::build_rep(spec)));
      if (by_depth) ++irreducible;
    });
    EXPECT_GT(irreducible, 0u);
  }
}

TEST(RestrictionMonotonicity, Examples) {
  EXPECT_TRUE(mc::restriction_monotonicity_check(rep_of(3, 5, 1, {0, 1, 0}), 2));
  EXPECT_TRUE(mc::restriction_monotonicity_check(rep_of(3, 5, 1, {0, 0, 0}), 2));
  EXPECT_TRUE(mc::restriction_monotonicity_check(rep_of(3, 5, 1, {0, 0, 1}), 2));
  EXPECT_THROW((void)mc::restriction_monotonicity_check(rep_of(3, 5, 1, {0, 0, 1}), 3), std::invalid_argument);
}

TEST(RestrictionMonotonicity, Exhaustive) {
  for (const Grid& g : kGrid) {
    const mc::PrimePower pp(g.p, g.N);
    mc::for_each_tail(g.n, pp, [&](std::span<const Residue> t) {
      const auto rep = mc::build_rep(mc::LambdaSpec::from_tail(g.n, pp, t));
      for (int k = 2; k < g.n; ++k) ASSERT_TRUE(mc::restriction_monotonicity_check(rep, k));
    });
  }
}

// Without a primitive entry, V_{p^{N-1}} is already stable.
TEST(StableSubspace, NoPrimitiveEntryGivesProperStableSubspace) {
  const mc::PrimePower pp(5, 2);
  mc::for_each_tail(3, pp, [&](std::span<const Residue> t) {
    const auto spec = mc::LambdaSpec::from_tail(3, pp, t);
    bool primitive = false;
    for (int i = 2; i <= 3; ++i) primitive = primitive || mc::depth_of(spec.exponent(i), pp) == 2;
    if (!primitive) {
      ASSERT_LE(mc::minimal_stable(mc::build_rep(spec)).j, 1u);
    }
  });
}
