#include <gtest/gtest.h>

#include <vector>

#include "bfpp/check/oracles.hpp"
#include "bfpp/check/random.hpp"
#include "bfpp/ordinal.hpp"

using namespace bfpp;
using bfpp::check::Triple;
using bfpp::check::to_ordinal;
using bfpp::check::triple_add;
using bfpp::check::triple_classify;

namespace {

Ordinal O(char const* s) { return parse_ordinal(s); }

std::vector<Triple> all_triples(std::uint64_t bound) {
  std::vector<Triple> out;
  for (std::uint64_t i = 0; i <= bound; ++i)
    for (std::uint64_t j = 0; j <= bound; ++j)
      for (std::uint64_t k = 0; k <= bound; ++k)
        out.push_back({i, j, k});
  return out;
}

} // namespace

TEST(Ordinal, CompareExamples) {
  EXPECT_EQ(compare(Ordinal{}, Ordinal{}), std::strong_ordering::equal);
  EXPECT_EQ(compare(O("w"), O("5")), std::strong_ordering::greater);

  // w^2*3+w vs w^2*3+5: the triple model decides first.
  Triple a{3, 1, 0}, b{3, 0, 5};
  ASSERT_EQ(a <=> b, std::strong_ordering::greater);
  EXPECT_EQ(compare(O("w^2*3+w"), O("w^2*3+5")), a <=> b);
}

TEST(Ordinal, AddExamples) {
  EXPECT_EQ(add(O("1"), O("w")), O("w"));
  EXPECT_EQ(add(O("w"), O("1")), O("w+1"));

  Triple lhs{1, 2, 0}, rhs{0, 3, 4};
  Triple want = triple_add(lhs, rhs);
  ASSERT_EQ(want, (Triple{1, 5, 4}));
  EXPECT_EQ(add(O("w^2+w*2"), O("w*3+4")), to_ordinal(want));
  EXPECT_EQ(to_string(add(O("w^2+w*2"), O("w*3+4"))), "w^2+w*5+4");
}

TEST(Ordinal, AddAbsorbsAboveEpsilonLevels) {
  EXPECT_EQ(O("w^(w)*2+w^3+7") + O("w^(w+1)"), O("w^(w+1)"));
  EXPECT_EQ(O("w^(w)+w") + O("w^(w)*2+1"), O("w^(w)*3+1"));
}

TEST(Ordinal, ClassifyExamples) {
  EXPECT_EQ(classify(Ordinal{}), OrdinalKind::Zero);
  EXPECT_EQ(classify(O("w*2")), OrdinalKind::Limit);
  ASSERT_EQ(triple_classify({1, 0, 3}), OrdinalKind::Successor);
  EXPECT_EQ(classify(O("w^2+3")), OrdinalKind::Successor);
  EXPECT_EQ(classify(O("w^(w)")), OrdinalKind::Limit);
}

TEST(Ordinal, SplitFiniteExamples) {
  EXPECT_EQ(split_finite(O("7")), (FiniteSplit{Ordinal{}, 7}));
  EXPECT_EQ(split_finite(O("w*2+3")), (FiniteSplit{O("w*2"), 3}));
  EXPECT_EQ(split_finite(O("w^(w)")), (FiniteSplit{O("w^(w)"), 0}));
  EXPECT_EQ(split_finite(Ordinal{}), (FiniteSplit{Ordinal{}, 0}));
}

TEST(Ordinal, SupFinite) {
  std::vector<Ordinal> one{O("3")};
  EXPECT_EQ(sup_finite(one), O("3"));
  std::vector<Ordinal> mixed{O("w"), O("w+1"), O("5")};
  EXPECT_EQ(sup_finite(mixed), O("w+1"));
  std::vector<Ordinal> pair{O("w*2"), O("w^2")};
  ASSERT_EQ(Triple(0, 2, 0) <=> Triple(1, 0, 0), std::strong_ordering::less);
  EXPECT_EQ(sup_finite(pair), O("w^2"));
  EXPECT_THROW(sup_finite(std::span<Ordinal const>{}), std::invalid_argument);
}

TEST(Ordinal, ParseExamples) {
  EXPECT_EQ(O("0"), Ordinal{});
  std::vector<OrdinalTerm> terms{{Ordinal::natural(2), 3}, {Ordinal::natural(1), 1}, {Ordinal{}, 5}};
  EXPECT_EQ(O("w^2*3+w+5"), Ordinal::from_terms(terms));
  EXPECT_EQ(to_string(add(O("w"), O("2"))), "w+2");
  EXPECT_EQ(O(" w ^ 2 * 3 + w + 5 "), O("w^2*3+w+5"));
}

TEST(Ordinal, FormatIsCanonical) {
  EXPECT_EQ(to_string(O("w^1*1")), "w");
  EXPECT_EQ(to_string(O("w^(1)")), "w");
  EXPECT_EQ(to_string(O("w^0*4")), "4");
  EXPECT_EQ(to_string(O("w^(w+1)*2+w^(w)+3")), "w^(w+1)*2+w^(w)+3");
  EXPECT_EQ(to_string(Ordinal{}), "0");
}

TEST(Ordinal, ParseErrorsCarryPosition) {
  auto position_of = [](char const* s) -> std::size_t {
    try {
      parse_ordinal(s);
    } catch (ParseError const& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for '" << s << "'";
    return 0;
  };
  EXPECT_EQ(position_of("w+w^2"), 2u);
  EXPECT_EQ(position_of("3+w"), 2u);
  EXPECT_EQ(position_of("w*0"), 2u);
  EXPECT_EQ(position_of("w+0"), 2u);
  EXPECT_EQ(position_of("x"), 0u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("w^"), 2u);
  EXPECT_EQ(position_of("w^(w"), 4u);
  EXPECT_EQ(position_of("0+1"), 1u);
  EXPECT_EQ(position_of("w+w"), 2u);
  EXPECT_THROW(parse_ordinal("99999999999999999999999"), ParseError);
}

TEST(Ordinal, ConstructionRejectsNonNormalForm) {
  EXPECT_THROW(Ordinal::from_terms({{Ordinal{}, 1}, {Ordinal::natural(1), 1}}), std::invalid_argument);
  EXPECT_THROW(Ordinal::from_terms({{Ordinal::natural(1), 0}}), std::invalid_argument);
  EXPECT_THROW(Ordinal::omega_power(Ordinal{}, 0), std::invalid_argument);
  EXPECT_THROW(O("w").to_natural(), std::domain_error);
}

TEST(Ordinal, CoefficientOverflowThrows) {
  Ordinal big = Ordinal::natural(std::numeric_limits<Ordinal::Coefficient>::max());
  EXPECT_THROW(big + 1, std::overflow_error);
  EXPECT_EQ(big + O("w"), O("w"));
}

// Exhaustive agreement with the triple model on every pair below w^2*4.
TEST(Ordinal, AgreesWithTripleModelExhaustively) {
  auto triples = all_triples(3);
  for (auto const& a : triples) {
    Ordinal oa = to_ordinal(a);
    ASSERT_EQ(classify(oa), triple_classify(a)) << to_string(oa);
    for (auto const& b : triples) {
      Ordinal ob = to_ordinal(b);
      ASSERT_EQ(compare(oa, ob), a <=> b) << to_string(oa) << " vs " << to_string(ob);
      ASSERT_EQ(add(oa, ob), to_ordinal(triple_add(a, b))) << to_string(oa) << " + " << to_string(ob);
    }
  }
}

TEST(Ordinal, AlgebraicLawsOnRandomWideOrdinals) {
  check::Rng rng(20240611);
  for (int n = 0; n < 2000; ++n) {
    Ordinal a = check::random_ordinal(rng, true);
    Ordinal b = check::random_ordinal(rng, true);
    Ordinal c = check::random_ordinal(rng, true);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + Ordinal{}, a);
    ASSERT_EQ(Ordinal{} + a, a);
    if (b < c) {
      ASSERT_LT(a + b, a + c);
    }
    auto [base, k] = split_finite(a);
    ASSERT_EQ(base + k, a);
    ASSERT_NE(classify(base), OrdinalKind::Successor);
    ASSERT_EQ(parse_ordinal(to_string(a)), a);
    ASSERT_EQ(compare(a, b), 0 <=> compare(b, a));
    if (a <= b && b <= c) {
      ASSERT_LE(a, c);
    }
  }
}
