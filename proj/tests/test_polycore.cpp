#include <gtest/gtest.h>

#include <random>

#include "aatoric/polycore.hpp"

using namespace aatoric;

namespace {

monomial mono(std::vector<Int> e) { return monomial(std::move(e)); }

monomial_order asc(std::vector<Int> w) {
  return {std::move(w), variable_convention::ascending};
}
monomial_order desc(std::vector<Int> w) {
  return {std::move(w), variable_convention::descending};
}

}  // namespace

TEST(WeightedDegree, Examples) {
  // x1*x3 under weights (5,6,7,8,9): 6 + 8
  EXPECT_EQ(weighted_degree(mono({0, 1, 0, 1, 0}), {5, 6, 7, 8, 9}), 14);
  EXPECT_EQ(weighted_degree(monomial::one(5), {5, 6, 7, 8, 9}), 0);
  // The eta collision behind the Patil counterexample on (5,6,4):
  // x0^2*x2^2 and x1^3 share eta-value 18.
  EXPECT_EQ(weighted_degree(mono({2, 0, 2}), {5, 6, 4}), 18);
  EXPECT_EQ(weighted_degree(mono({0, 3, 0}), {5, 6, 4}), 18);
}

TEST(WeightedDegree, DimensionMismatchThrows) {
  EXPECT_THROW(weighted_degree(mono({1, 2}), {5, 6, 4}), error);
}

TEST(Compare, AscendingExamples) {
  auto ord = asc({5, 6, 7, 8, 9});
  // x1*x2 > x0*x3: the xi(1,2) leading monomial.
  EXPECT_EQ(ord.compare(mono({0, 1, 1, 0, 0}), mono({1, 0, 0, 1, 0})),
            std::strong_ordering::greater);
  monomial m = mono({2, 0, 1, 0, 3});
  EXPECT_EQ(ord.compare(m, m), std::strong_ordering::equal);
}

TEST(Compare, DescendingExample) {
  auto ord = desc({20, 21, 22, 23, 24, 29});
  // x5^3 < x0^2*x3*x4: theta's lead under the descending convention is the
  // x0-side monomial.
  EXPECT_EQ(ord.compare(mono({0, 0, 0, 0, 0, 3}), mono({2, 0, 0, 1, 1, 0})),
            std::strong_ordering::less);
}

TEST(MakeBinomial, NormalizesLead) {
  auto ord = asc({5, 6, 7, 8, 9});
  auto theta = make_binomial(mono({0, 0, 0, 0, 2}), mono({2, 0, 0, 1, 0}), ord);
  ASSERT_TRUE(theta.has_value());
  EXPECT_EQ(theta->lead, mono({0, 0, 0, 0, 2}));
  EXPECT_EQ(theta->trail, mono({2, 0, 0, 1, 0}));

  monomial m = mono({1, 2, 0, 0, 1});
  EXPECT_FALSE(make_binomial(m, m, ord).has_value());

  auto dord = desc({20, 21, 22, 23, 24, 29});
  auto f = make_binomial(mono({2, 0, 0, 1, 1, 0}), mono({0, 0, 0, 0, 0, 3}), dord);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->lead, mono({2, 0, 0, 1, 1, 0}));
}

TEST(IsHomogeneous, Examples) {
  // psi(0) of the (5,6,7,8,9) example: x1*x4 - x0^3, eta 15 on both sides.
  EXPECT_TRUE(is_homogeneous(binomial{mono({0, 1, 0, 0, 1}), mono({3, 0, 0, 0, 0})},
                             {5, 6, 7, 8, 9}));
  EXPECT_FALSE(is_homogeneous(binomial{mono({0, 1, 0, 0, 0}), mono({1, 0, 0, 0, 0})},
                              {5, 6, 7, 8, 9}));
  // theta of the (5,6,4) counterexample: x2^3 - x1^2.
  EXPECT_TRUE(is_homogeneous(binomial{mono({0, 0, 3}), mono({0, 2, 0})}, {5, 6, 4}));
}

TEST(Render, MonomialAndBinomialText) {
  EXPECT_EQ(mono({2, 0, 2}).str(), "x0^2*x2^2");
  EXPECT_EQ(mono({0, 1, 0, 1, 0}).str(), "x1*x3");
  EXPECT_EQ(monomial::one(3).str(), "1");
  EXPECT_EQ((binomial{mono({0, 3, 0}), mono({2, 0, 2})}).str(),
            "x1^3 - x0^2*x2^2");
}

TEST(Render, ParseRoundTripExamples) {
  EXPECT_EQ(parse_monomial("x0^2*x2^2", 3), mono({2, 0, 2}));
  EXPECT_EQ(parse_monomial("1", 3), monomial::one(3));
  EXPECT_EQ(parse_binomial("x1^3 - x0^2*x2^2", 3),
            (binomial{mono({0, 3, 0}), mono({2, 0, 2})}));
  EXPECT_THROW(parse_monomial("y1", 3), error);
  EXPECT_THROW(parse_monomial("x7", 3), error);
}

TEST(Monomial, DivisionAndLcm) {
  monomial a = mono({2, 1, 0});
  monomial b = mono({1, 0, 0});
  EXPECT_TRUE(b.divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a / b, mono({1, 1, 0}));
  EXPECT_EQ(lcm(mono({2, 0, 1}), mono({1, 3, 0})), mono({2, 3, 1}));
  EXPECT_THROW(b / a, error);
}

namespace {

struct random_domain {
  std::mt19937 rng{20240817};

  std::vector<Int> random_weights(std::size_t nvars) {
    // Arithmetic head plus an arbitrary last weight, as in the input family.
    std::uniform_int_distribution<Int> m0(2, 30), step(1, 5), last(1, 40);
    std::vector<Int> w;
    Int base = m0(rng), d = step(rng);
    for (std::size_t i = 0; i + 1 < nvars; ++i) w.push_back(base + Int(i) * d);
    w.push_back(last(rng));
    return w;
  }

  monomial random_monomial(std::size_t nvars) {
    std::uniform_int_distribution<Int> e(0, 4);
    std::vector<Int> v(nvars);
    for (auto& x : v) x = e(rng);
    return monomial(std::move(v));
  }
};

}  // namespace

TEST(OrderProperties, AxiomsOnRandomTriples) {
  random_domain dom;
  for (int round = 0; round < 500; ++round) {
    std::size_t nvars = 3 + static_cast<std::size_t>(round % 4);
    auto weights = dom.random_weights(nvars);
    for (auto convention :
         {variable_convention::ascending, variable_convention::descending}) {
      monomial_order ord{weights, convention};
      monomial a = dom.random_monomial(nvars);
      monomial b = dom.random_monomial(nvars);
      monomial c = dom.random_monomial(nvars);

      // Antisymmetry and equality-iff-identical.
      auto ab = ord.compare(a, b);
      auto ba = ord.compare(b, a);
      EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
      EXPECT_EQ(ab == std::strong_ordering::greater,
                ba == std::strong_ordering::less);

      // Multiplicativity.
      EXPECT_EQ(ord.compare(a * c, b * c), ab);

      // 1 is the unique minimum.
      monomial one = monomial::one(nvars);
      if (!(a == one)) {
        EXPECT_EQ(ord.compare(a, one), std::strong_ordering::greater);
      }

      // Transitivity on the sampled triple.
      if (ab != std::strong_ordering::less &&
          ord.compare(b, c) != std::strong_ordering::less) {
        EXPECT_NE(ord.compare(a, c), std::strong_ordering::less);
      }

      // make_binomial is symmetric in its arguments.
      EXPECT_EQ(make_binomial(a, b, ord), make_binomial(b, a, ord));
    }
  }
}

TEST(OrderProperties, RenderParseRoundTripOnRandomMonomials) {
  random_domain dom;
  for (int round = 0; round < 200; ++round) {
    std::size_t nvars = 3 + static_cast<std::size_t>(round % 4);
    monomial m = dom.random_monomial(nvars);
    EXPECT_EQ(parse_monomial(m.str(), nvars), m);
  }
}

TEST(CheckedArithmetic, OverflowAborts) {
  const Int huge = Int{1} << 62;
  monomial big(std::vector<Int>{huge, 0});
  EXPECT_THROW(weighted_degree(big, {8, 5}), overflow_error);
  EXPECT_THROW(big * big, overflow_error);
  EXPECT_NO_THROW(weighted_degree(big, {1, 1}));
}
