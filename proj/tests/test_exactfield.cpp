#include <gtest/gtest.h>

#include <cmath>

#include "vag/errors.hpp"
#include "vag/exactfield.hpp"
#include "vag/oracles.hpp"

using namespace vag;

namespace {
  constexpr double kPi = 3.14159265358979323846;

  FieldElement random_element(FieldSpec const& f, SeededRng& rng) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f.degree(); ++i) {
      long num = static_cast<long>(rng.below(41)) - 20;
      long den = static_cast<long>(rng.below(7)) + 1;
      c.emplace_back(num, den);
      c.back().canonicalize();
    }
    return FieldElement(f, c);
  }

  double eval(IntPoly const& p, double x) {
    double acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
      acc = acc * x + p[i].get_d();
    }
    return acc;
  }

  IntPoly poly(std::initializer_list<long> c) {
    IntPoly p;
    for (long x : c) {
      p.emplace_back(x);
    }
    return p;
  }
}  // namespace

TEST(Cyclotomic, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(10), poly({1, -1, 1, -1, 1}));
}

TEST(BuildField, LabelsTwoAndThree) {
  auto const& f = build_field(graphs::type_a(3));
  EXPECT_EQ(f.conductor(), 6u);
  EXPECT_EQ(f.minpoly(), poly({-3, 0, 1}));
  EXPECT_NEAR(f.theta(), std::sqrt(3.0), 1e-12);
}

TEST(BuildField, GoldenRatio) {
  auto const& f = build_field(graphs::dihedral(5));
  EXPECT_EQ(f.conductor(), 5u);
  EXPECT_EQ(f.minpoly(), poly({-1, -1, 1}));
  EXPECT_NEAR(f.theta(), (1 + std::sqrt(5.0)) / 2, 1e-12);
}

TEST(BuildField, NoFiniteLabels) {
  auto const& f = build_field(CoxeterGraph({"s", "t"}, {{"s", "t", Label::infinity()}}));
  EXPECT_EQ(f.conductor(), 1u);
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(FieldElement::theta(f), FieldElement(f, -2));
  EXPECT_EQ(build_field(graphs::type_a(1)).conductor(), 1u);
}

TEST(TwoCos, Examples) {
  auto const& f = build_field(graphs::type_a(3));
  EXPECT_TRUE(two_cos_pi_over(Label(2), f).is_zero());
  EXPECT_EQ(two_cos_pi_over(Label(3), f), FieldElement(f, 1));
  EXPECT_EQ(two_cos_pi_over(Label::infinity(), f), FieldElement(f, 2));
  EXPECT_THROW(two_cos_pi_over(Label(5), f), PreconditionError);
}

TEST(TwoCos, RecurrenceReachesMinusTwo) {
  for (unsigned L : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 10u, 12u, 15u, 30u}) {
    auto const& f = FieldSpec::get(L);
    EXPECT_EQ(two_cos_pi_over(Label(1), f), FieldElement(f, -2)) << "L=" << L;
    EXPECT_NEAR(eval(f.minpoly(), 2 * std::cos(kPi / L)), 0.0, 1e-9) << "L=" << L;
    for (unsigned m = 2; m <= L; ++m) {
      if (L % m == 0) {
        EXPECT_NEAR(two_cos_pi_over(Label(m), f).to_double(), 2 * std::cos(kPi / m), 1e-12);
      }
    }
  }
}

TEST(Sign, Examples) {
  auto const&        f = FieldSpec::get(6);
  FieldElement const t = FieldElement::theta(f);
  EXPECT_EQ(FieldElement(f).sign(), 0);
  EXPECT_EQ((t - FieldElement(f, 1)).sign(), 1);
  FieldElement const x = FieldElement(f, 1) - t * t;
  EXPECT_EQ(x, FieldElement(f, -2));
  EXPECT_EQ(x.sign(), -1);
}

TEST(Sign, TinyButNonzero) {
  // sqrt(3) = 1.73205080756887729352744...; rationals agreeing to 19 digits
  auto const& f = FieldSpec::get(6);
  Rational    q("17320508075688772935/10000000000000000000");
  q.canonicalize();
  FieldElement d = FieldElement::theta(f) - FieldElement(f, q);
  EXPECT_EQ(d.sign(), 1);
  Rational q2("17320508075688772936/10000000000000000000");
  q2.canonicalize();
  EXPECT_EQ((FieldElement::theta(f) - FieldElement(f, q2)).sign(), -1);
  Rational q3("17320508075688772935/10000000000000000000");
  q3.canonicalize();
  q3 -= Rational(1, 1000000000);
  EXPECT_EQ((FieldElement::theta(f) - FieldElement(f, q3)).sign(), 1);
}

TEST(FieldProperties, RingAxiomsAndSigns) {
  SeededRng rng(1);
  for (unsigned L : {5u, 6u, 7u, 12u}) {
    auto const& f = FieldSpec::get(L);
    for (int i = 0; i < 250; ++i) {
      auto a = random_element(f, rng);
      auto b = random_element(f, rng);
      auto c = random_element(f, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, FieldElement(f));
      EXPECT_EQ((a * b).sign(), a.sign() * b.sign());
      if (std::abs(a.to_double()) > 1e-9) {
        EXPECT_EQ(a.sign(), a.to_double() > 0 ? 1 : -1);
      }
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), FieldElement(f, 1));
      }
    }
  }
}

TEST(Embed, AgreesNumerically) {
  auto const& small = FieldSpec::get(5);
  auto const& big   = FieldSpec::get(10);
  SeededRng   rng(3);
  for (int i = 0; i < 50; ++i) {
    auto x = random_element(small, rng);
    auto y = random_element(small, rng);
    EXPECT_NEAR(embed(x, big).to_double(), x.to_double(), 1e-9);
    EXPECT_EQ(embed(x * y, big), embed(x, big) * embed(y, big));
  }
  auto const& q = FieldSpec::get(1);
  EXPECT_EQ(embed(FieldElement(q, 3), big), FieldElement(big, 3));
}
