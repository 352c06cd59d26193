#include <gtest/gtest.h>

#include <vector>

#include "bfpp/check/random.hpp"
#include "bfpp/hyperconvex.hpp"

using namespace bfpp;

namespace {

StepFn S(char const* s) { return parse_stepfn(s); }
Rational Q(char const* s) { return parse_rational(s); }
Ball B(char const* center, char const* r) { return Ball(S(center), Q(r)); }

} // namespace

TEST(PairwiseIntersect, Examples) {
  std::vector<Ball> one{B("tail=0; [1:5]", "0")};
  EXPECT_FALSE(pairwise_intersect(one));

  std::vector<Ball> near{B("tail=0; []", "1"), B("tail=3/2; []", "1")};
  EXPECT_FALSE(pairwise_intersect(near));

  std::vector<Ball> far{B("tail=0; []", "1"), B("tail=3; []", "1")};
  auto bad = pairwise_intersect(far);
  ASSERT_TRUE(bad);
  EXPECT_EQ(*bad, (DisjointPair{0, 1}));

  std::vector<Ball> third{B("tail=0; []", "1"), B("tail=1; []", "1"), B("tail=0; [w:4]", "1")};
  EXPECT_EQ(pairwise_intersect(third), (DisjointPair{0, 2}));
}

TEST(HellyWitness, Examples) {
  std::vector<Ball> near{B("tail=0; []", "1"), B("tail=3/2; []", "1")};
  StepFn w = helly_witness(near);
  EXPECT_EQ(w, StepFn::constant(Q("1/2")));
  for (auto const& b : near)
    EXPECT_TRUE(in_ball(w, b));

  std::vector<Ball> one{B("tail=1/2; [w:-1]", "1/4")};
  StepFn w1 = helly_witness(one);
  EXPECT_EQ(w1, S("tail=1/4; [w:-5/4]"));
  EXPECT_EQ(dist(w1, one[0].center()), one[0].radius());

  std::vector<Ball> far{B("tail=0; []", "1"), B("tail=3; []", "1")};
  EXPECT_THROW(helly_witness(far), PreconditionError);
  EXPECT_THROW(helly_witness(std::span<Ball const>{}), std::invalid_argument);
}

TEST(IntervalHull, Examples) {
  std::vector<Ball> one{B("tail=0; [2:1]", "1/2")};
  auto h = interval_hull(one);
  EXPECT_EQ(h.lower, S("tail=-1/2; [2:1/2]"));
  EXPECT_EQ(h.upper, S("tail=1/2; [2:3/2]"));
  EXPECT_TRUE(h.nonempty);

  std::vector<Ball> far{B("tail=0; []", "1"), B("tail=3; []", "1")};
  auto d = interval_hull(far);
  EXPECT_FALSE(d.nonempty);
  EXPECT_EQ(d.lower, StepFn::constant(2));
  EXPECT_EQ(d.upper, StepFn::constant(1));

  // Deviation-only disjointness.
  std::vector<Ball> spike{B("tail=0; []", "1"), B("tail=0; [w^2:5]", "1")};
  EXPECT_FALSE(interval_hull(spike).nonempty);
  EXPECT_TRUE(pairwise_intersect(spike));
}

TEST(Hyperconvex, HellyPropertiesOnRandomFamilies) {
  check::Rng rng(8080);
  for (int n = 0; n < 300; ++n) {
    auto fam = check::random_intersecting_family(rng, static_cast<std::size_t>(rng.between(2, 8)));
    ASSERT_FALSE(pairwise_intersect(fam));
    StepFn w = helly_witness(fam);
    auto h = interval_hull(fam);
    ASSERT_TRUE(h.nonempty);
    ASSERT_EQ(w, h.lower);
    for (auto const& b : fam) {
      ASSERT_TRUE(in_ball(w, b));
      ASSERT_TRUE(in_ball(h.upper, b));
    }
    // Any point in the hull, e.g. the midpoint, is in every ball too.
    StepFn mid = scale(Rational(1, 2), h.lower + h.upper);
    for (auto const& b : fam)
      ASSERT_TRUE(in_ball(mid, b));

    // Dropping a ball never tightens the hull.
    std::span<Ball const> fewer(fam.data(), fam.size() - 1);
    auto g = interval_hull(fewer);
    ASSERT_TRUE(pointwise_leq(g.lower, h.lower));
    ASSERT_TRUE(pointwise_leq(h.upper, g.upper));

    auto bad = check::disjoint_family(rng, fam);
    ASSERT_TRUE(pairwise_intersect(bad));
    ASSERT_FALSE(interval_hull(bad).nonempty);
    ASSERT_THROW(helly_witness(bad), PreconditionError);
  }
}
