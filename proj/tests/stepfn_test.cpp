#include <gtest/gtest.h>

#include <vector>

#include "bfpp/check/random.hpp"
#include "bfpp/stepfn.hpp"

using namespace bfpp;

namespace {

StepFn S(char const* s) { return parse_stepfn(s); }
Ordinal O(char const* s) { return parse_ordinal(s); }
Rational Q(char const* s) { return parse_rational(s); }

// Independent pointwise check: evaluate both sides at the given points.
void expect_pointwise(StepFn const& got, std::vector<Ordinal> const& at, std::vector<Rational> const& want) {
  ASSERT_EQ(at.size(), want.size());
  for (std::size_t i = 0; i < at.size(); ++i)
    EXPECT_EQ(got(at[i]), want[i]) << "at " << at[i];
}

} // namespace

TEST(StepFn, EvalExamples) {
  EXPECT_EQ(S("tail=0; []")(O("w")), 0);
  StepFn f = S("tail=1/3; [5:-1/2]");
  EXPECT_EQ(f(O("5")), Q("-1/2"));
  EXPECT_EQ(f(O("w^2")), Q("1/3"));
  EXPECT_EQ(eval(f, O("4")), Q("1/3"));
}

TEST(StepFn, NormalizationStripsTailValues) {
  StepFn f(Rational(1), {{O("0"), Rational(1)}, {O("w"), Rational(2)}});
  EXPECT_EQ(f.deviations().size(), 1u);
  EXPECT_EQ(f, S("tail=1; [w:2]"));
  StepFn again(f.tail(), f.deviations());
  EXPECT_EQ(again, f);
}

TEST(StepFn, MulExampleAgreesPointwise) {
  StepFn f = S("tail=2; [0:0]");
  StepFn g = S("tail=1/2; [1:4]");
  StepFn h = mul(f, g);
  // oracle: f*g at 0, 1, w is 0*1/2, 2*4, 2*1/2
  expect_pointwise(h, {O("0"), O("1"), O("w")}, {Rational(0), Rational(8), Rational(1)});
  EXPECT_EQ(h, S("tail=1; [0:0, 1:8]"));
}

TEST(StepFn, AbsExample) {
  EXPECT_EQ(abs(S("tail=-1; [w:3]")), S("tail=1; [w:3]"));
}

TEST(StepFn, ArithmeticOps) {
  StepFn f = S("tail=1/2; [0:1, w:-1]");
  StepFn g = S("tail=-1/4; [w:1/2, w^2:1]");
  EXPECT_EQ(f + g, S("tail=1/4; [0:3/4, w:-1/2, w^2:3/2]"));
  EXPECT_EQ(f - g, S("tail=3/4; [0:5/4, w:-3/2, w^2:-1/2]"));
  EXPECT_EQ(-f, scale(Rational(-1), f));
  EXPECT_EQ(scale(Rational(0), f), StepFn{});
  EXPECT_EQ(min(f, g), S("tail=-1/4; [w:-1, w^2:1/2]"));
  EXPECT_EQ(max(f, g), S("tail=1/2; [0:1, w:1/2, w^2:1]"));
  EXPECT_EQ(clamp(S("tail=3; [1:-5, 2:1/2]"), Rational(-1), Rational(1)), S("tail=1; [1:-1, 2:1/2]"));
}

TEST(StepFn, NormExamples) {
  EXPECT_EQ(sup_norm(StepFn{}), 0);
  EXPECT_EQ(sup_norm(S("tail=1/3; [5:-1/2]")), Q("1/2"));
  StepFn f = S("tail=1/3; [5:-1/2]");
  EXPECT_EQ(dist(f, f), 0);
  EXPECT_EQ(dist(f, StepFn::constant(1)), Q("3/2"));
}

TEST(StepFn, FamilyExamples) {
  std::vector<StepFn> one{S("tail=1; [2:3]")};
  EXPECT_EQ(family_sup(one), one[0]);
  EXPECT_EQ(family_inf(one), one[0]);

  std::vector<StepFn> pair{S("tail=0; [0:2]"), S("tail=1; [1:-5]")};
  StepFn sup = family_sup(pair);
  StepFn inf = family_inf(pair);
  // oracle: max/min of the two at 0, 1, w
  expect_pointwise(sup, {O("0"), O("1"), O("w")}, {Rational(2), Rational(0), Rational(1)});
  expect_pointwise(inf, {O("0"), O("1"), O("w")}, {Rational(1), Rational(-5), Rational(0)});
  // Position 1 keeps max(0, -5) = 0 below the tail 1; position 0 keeps min(2, 1) = 1.
  EXPECT_EQ(sup, S("tail=1; [0:2, 1:0]"));
  EXPECT_EQ(inf, S("tail=0; [0:1, 1:-5]"));
  EXPECT_THROW(family_sup(std::span<StepFn const>{}), std::invalid_argument);
  EXPECT_THROW(family_inf(std::span<StepFn const>{}), std::invalid_argument);
}

TEST(StepFn, SignExamples) {
  EXPECT_EQ(sign(StepFn{}), StepFn{});
  EXPECT_EQ(sign(S("tail=1/3; [5:-1/2]")), S("tail=1; [5:-1]"));
  EXPECT_EQ(sign(S("tail=-2; [0:0, 1:7]")), S("tail=-1; [0:0, 1:1]"));
}

TEST(StepFn, BallExamples) {
  EXPECT_TRUE(in_ball(StepFn{}, Ball(StepFn{}, 1)));
  EXPECT_FALSE(in_ball(S("tail=0; [0:2]"), Ball(StepFn{}, 1)));
  EXPECT_TRUE(in_ball(sign(S("tail=-7; [w:100, 3:0]")), Ball::unit()));
  EXPECT_TRUE(in_ball(StepFn::constant(1), Ball::unit()));
  EXPECT_THROW(Ball(StepFn{}, Rational(-1)), std::invalid_argument);
}

TEST(StepFn, FreshOrdinalAvoidsKeys) {
  StepFn f = S("tail=0; [3:1, w^2*2+5:1]");
  StepFn g = S("tail=0; [w^(w):1]");
  EXPECT_EQ(fresh_ordinal(f), O("w^2*2+w"));
  EXPECT_EQ(fresh_ordinal(f, g), O("w^(w)+w"));
  EXPECT_EQ(fresh_ordinal(StepFn{}), O("w"));
}

TEST(StepFn, TextRoundTripAndErrors) {
  EXPECT_EQ(to_string(S("tail=0;[]")), "tail=0; []");
  EXPECT_EQ(to_string(S("tail = 2/4 ; [ w : -3/6 , 0 : 1 ]")), "tail=1/2; [0:1, w:-1/2]");
  EXPECT_THROW(S("tail=0; [1:1, 1:2]"), ParseError);
  EXPECT_THROW(S("tail=0; [1:1"), ParseError);
  EXPECT_THROW(S("tail=1/0; []"), ParseError);
  EXPECT_THROW(S("tail=0 []"), ParseError);
  EXPECT_THROW(S("tail=0; [] x"), ParseError);

  Ball b = parse_ball("center=tail=0; [1:1/2]; r=3/4");
  EXPECT_EQ(b.center(), S("tail=0; [1:1/2]"));
  EXPECT_EQ(b.radius(), Q("3/4"));
  EXPECT_EQ(parse_ball(to_string(b)), b);
  EXPECT_THROW(parse_ball("center=tail=0; []; r=-1"), ParseError);
}

// --- properties --------------------------------------------------------------------

class StepFnLaws : public ::testing::TestWithParam<bool> {};

TEST_P(StepFnLaws, HoldOnRandomInputs) {
  check::Rng rng(GetParam() ? 99 : 17);
  check::StepFnShape shape{.wide_pool = GetParam()};
  for (int n = 0; n < 500; ++n) {
    StepFn f = check::random_stepfn(rng, shape);
    StepFn g = check::random_stepfn(rng, shape);
    StepFn h = check::random_stepfn(rng, shape);
    Rational q = check::random_rational(rng, -3, 3);

    ASSERT_EQ(parse_stepfn(to_string(f)), f);
    ASSERT_EQ(max(f, g), max(g, f));
    ASSERT_EQ(min(f, g), min(g, f));
    ASSERT_EQ(max(max(f, g), h), max(f, max(g, h)));
    ASSERT_EQ(min(min(f, g), h), min(f, min(g, h)));
    ASSERT_EQ(max(f, min(f, g)), f);
    ASSERT_EQ(min(f, max(f, g)), f);
    ASSERT_EQ(abs(f), max(f, scale(Rational(-1), f)));
    ASSERT_LE(dist(f, h), dist(f, g) + dist(g, h));
    ASSERT_EQ(sup_norm(scale(q, f)), abs(q) * sup_norm(f));
    ASSERT_EQ(mul(sign(f), abs(f)), f);

    // Equality completeness: representation equality iff agreement on probes.
    StepFn const* both[] = {&f, &g};
    bool agree = true;
    for (auto const& at : probe_points(both))
      agree = agree && f(at) == g(at);
    ASSERT_EQ(agree, f == g);
    StepFn f2 = f + StepFn{};
    ASSERT_EQ(f2, f);

    // family_sup is the least upper bound.
    std::vector<StepFn> fam{f, g, h};
    StepFn s = family_sup(fam);
    StepFn i = family_inf(fam);
    for (auto const& m : fam) {
      ASSERT_TRUE(pointwise_leq(m, s));
      ASSERT_TRUE(pointwise_leq(i, m));
    }
    StepFn ub = max(max(f, g), max(h, check::random_stepfn(rng, shape)));
    ASSERT_TRUE(pointwise_leq(s, ub));
  }
}

INSTANTIATE_TEST_SUITE_P(Pools, StepFnLaws, ::testing::Values(false, true));
