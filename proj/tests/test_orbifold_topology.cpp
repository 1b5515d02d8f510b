#include <gtest/gtest.h>

#include "czorb/error.hpp"
#include "czorb/orbifold_topology.hpp"

using namespace czorb;

TEST(AbelianGroupTest, Rendering) {
  EXPECT_EQ(AbelianGroup::trivial().to_string(), "0");
  EXPECT_EQ(AbelianGroup::free(1).to_string(), "Z");
  EXPECT_EQ(AbelianGroup::free(3).to_string(), "Z^3");
  EXPECT_EQ(AbelianGroup::cyclic(5).to_string(), "Z_5");
}

TEST(Teardrop, HomologyLowDegrees) {
  EXPECT_EQ(teardrop_homology(3, 0), AbelianGroup::free(1));
  EXPECT_EQ(teardrop_homology(3, 1), AbelianGroup::trivial());
  EXPECT_EQ(teardrop_homology(3, 2), AbelianGroup::free(1));
  EXPECT_EQ(teardrop_homology(3, 3), AbelianGroup::cyclic(3));
  EXPECT_EQ(teardrop_homology(3, 4), AbelianGroup::trivial());
  EXPECT_EQ(teardrop_homology(3, 5), AbelianGroup::cyclic(3));
}

TEST(Teardrop, CohomologyLowDegrees) {
  EXPECT_EQ(teardrop_cohomology(5, 0), AbelianGroup::free(1));
  EXPECT_EQ(teardrop_cohomology(5, 1), AbelianGroup::trivial());
  EXPECT_EQ(teardrop_cohomology(5, 2), AbelianGroup::free(1));
  EXPECT_EQ(teardrop_cohomology(5, 3), AbelianGroup::trivial());
  EXPECT_EQ(teardrop_cohomology(5, 4), AbelianGroup::cyclic(5));
  EXPECT_EQ(teardrop_cohomology(5, 6), AbelianGroup::cyclic(5));
}

TEST(Teardrop, UniversalCoefficientShift) {
  // torsion of H^q sits one degree above the torsion of H_{q-1}
  for (std::int64_t m : {2, 3, 7, 12}) {
    for (std::int64_t q = 3; q <= 20; ++q) {
      const auto h = teardrop_homology(m, q - 1);
      const auto c = teardrop_cohomology(m, q);
      EXPECT_EQ(h.kind() == AbelianGroup::Kind::Cyclic, c.kind() == AbelianGroup::Kind::Cyclic)
          << m << " " << q;
    }
  }
}

TEST(Teardrop, Validation) {
  EXPECT_THROW(teardrop_homology(1, 0), DomainError);
  EXPECT_THROW(teardrop_cohomology(2, -1), DomainError);
  EXPECT_THROW(teardrop_orbifold_chern(0), DomainError);
}

TEST(Teardrop, ChernAndPushforward) {
  EXPECT_EQ(teardrop_orbifold_chern(1), Rational(2));
  EXPECT_EQ(teardrop_orbifold_chern(3), Rational(4, 3));
  EXPECT_EQ(teardrop_orbifold_chern(12), Rational(13, 12));
  EXPECT_EQ(p_star_factor(4), Rational(1, 4));
}
