#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <subreg/exactnum.hpp>

using namespace subreg::exactnum;

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

long double qint_float(int k, int l) { return std::sin(k * kPi / l) / std::sin(kPi / l); }
long double sin2_float(int k, int l) {
  long double s = 2 * std::sin(k * kPi / l);
  return s * s;
}

CycloReal random_element(std::mt19937& rng, int l) {
  std::uniform_int_distribution<int> d(-9, 9);
  auto f = field(l);
  QPoly a;
  for (int i = 0; i < f->degree(); ++i) a.push_back(Q(d(rng)));
  return CycloReal(f, a);
}

}  // namespace

TEST(FieldContext, MinpolyHasDistinguishedRoot) {
  for (int l : {3, 5, 7, 11, 12, 13, 15, 24}) {
    auto f = field(l);
    EXPECT_EQ(f->degree(), euler_phi(2 * l) / 2) << l;
    EXPECT_EQ(f->minpoly().back(), 1);
    long double c = 2 * std::cos(kPi / l), v = 0;
    for (size_t i = f->minpoly().size(); i-- > 0;) v = v * c + f->minpoly()[i].get_d();
    EXPECT_NEAR(static_cast<double>(v), 0.0, 1e-9) << l;
  }
}

TEST(FieldContext, SevenMinpoly) {
  // 2cos(pi/7) is a root of x^3 - x^2 - 2x + 1
  EXPECT_EQ(field(7)->minpoly_string(), "1,-2,-1,1");
}

TEST(FieldContext, RootIntervalsDisjointAfterRefinement) {
  auto f = field(15);
  for (int j = 0; j < f->degree(); ++j) f->refine_to(j, Q(1, 1000000));
  for (int i = 0; i < f->degree(); ++i)
    for (int j = i + 1; j < f->degree(); ++j)
      EXPECT_TRUE(f->root(i).hi < f->root(j).lo || f->root(j).hi < f->root(i).lo);
}

TEST(Qint, SmallValuesAtSeven) {
  EXPECT_EQ(qint(1, 7), CycloReal(field(7), 1));
  EXPECT_NEAR(qint(2, 7).to_double(), 1.801938, 1e-6);
  EXPECT_NEAR(qint(3, 7).to_double(), 2.246980, 1e-6);
  EXPECT_EQ(qint(2, 7), qint(5, 7));
  EXPECT_EQ(qint(3, 7), qint(4, 7));
}

TEST(Qint, RangeErrors) {
  EXPECT_THROW(qint(0, 7), DomainError);
  EXPECT_THROW(qint(7, 7), DomainError);
  EXPECT_THROW(sin2(0, 7), DomainError);
}

TEST(Qint, SymmetryAndRecurrence) {
  for (int l = 3; l <= 24; ++l) {
    CycloReal c = CycloReal::gen(field(l));
    for (int k = 1; k < l; ++k) {
      EXPECT_EQ(qint(k, l), qint(l - k, l));
      EXPECT_NEAR(qint(k, l).to_double(), static_cast<double>(qint_float(k, l)), 1e-9);
      if (k >= 2 && k + 1 < l) {
        EXPECT_EQ(qint(k + 1, l), c * qint(k, l) - qint(k - 1, l));
      }
    }
    EXPECT_EQ(qint(2, l), c);
  }
}

TEST(Sin2, FloatOracleAndConsistency) {
  EXPECT_NEAR(sin2(1, 7).to_double(), 0.753020, 1e-6);
  EXPECT_NEAR(sin2(3, 7).to_double(), 3.801938, 1e-6);
  for (int l : {7, 11, 12, 15}) {
    for (int k = 1; k < l; ++k) {
      EXPECT_NEAR(sin2(k, l).to_double(), static_cast<double>(sin2_float(k, l)), 1e-9);
      EXPECT_EQ(sin2(k, l), sin2(1, l) * qint(k, l) * qint(k, l));
    }
  }
}

TEST(SFormula, ValuesAndIdentity) {
  EXPECT_EQ(s_formula(1, 7), CycloReal(field(7), 7) / sin2(1, 7));
  long double oracle = 7 / (sin2_float(1, 7) * sin2_float(2, 7));
  EXPECT_NEAR(s_formula(2, 7).to_double(), static_cast<double>(oracle), 1e-9);
  CycloReal s1 = s_formula(1, 7), s2 = s_formula(2, 7);
  CycloReal lhs = CycloReal(field(7), 6) * s2 * s1 * s1 * s1;
  CycloReal rhs = (CycloReal(field(7), 7) + qint(3, 7) * 15L + qint(5, 7) * 12L) * 294L;
  EXPECT_EQ(lhs, rhs);
}

TEST(Norm, BasicsAndMultiplicativity) {
  EXPECT_EQ(CycloReal(field(7), 1).norm(), 1);
  EXPECT_EQ(CycloReal(field(7), 3).norm(), 27);
  std::mt19937 rng(7);
  for (int l : {7, 11, 12, 15}) {
    for (int t = 0; t < 25; ++t) {
      CycloReal x = random_element(rng, l), y = random_element(rng, l);
      EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
      EXPECT_EQ(x.norm().get_den(), 1);  // integer coefficients give algebraic integers
    }
  }
}

TEST(Norm, ProductOfConjugates) {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    CycloReal x = random_element(rng, 11);
    long double p = 1;
    for (double v : x.conjugate_values()) p *= v;
    double n = x.norm().get_d();
    EXPECT_NEAR(static_cast<double>(p), n, 1e-6 * std::max(1.0, std::abs(n)));
  }
}

TEST(Norm, CategoryDimensionOverSix) {
  auto f = field(7);
  CycloReal d = (CycloReal(f, 7) + qint(3, 7) * 15L + qint(5, 7) * 12L) * 49L;
  EXPECT_EQ(d.norm(), Q(823543));  // 7^7
}

TEST(Inverse, RoundTrip) {
  std::mt19937 rng(11);
  for (int l : {7, 12}) {
    for (int t = 0; t < 20; ++t) {
      CycloReal x = random_element(rng, l);
      if (x.is_zero()) continue;
      EXPECT_EQ(x * x.inverse(), CycloReal(field(l), 1));
    }
  }
}

TEST(Compare, OrderAndEquality) {
  EXPECT_GT(compare(qint(3, 7), qint(2, 7)), 0);
  EXPECT_EQ(compare(qint(3, 7), qint(3, 7)), 0);
  CycloReal s = qint(2, 7) + qint(3, 7);
  Interval iv = s.enclose(0);
  EXPECT_LE(iv.lo, Q(40489, 10000) + Q(1, 10000));
  EXPECT_GE(iv.hi, Q(40489, 10000) - Q(1, 10000));
  EXPECT_GT(compare(s, CycloReal(field(7), Q(4048, 1000))), 0);
  EXPECT_LT(compare(s, CycloReal(field(7), Q(4049, 1000))), 0);
}

TEST(Compare, AgreesWithFloats) {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    CycloReal x = random_element(rng, 11), y = random_element(rng, 11);
    double dx = x.to_double(), dy = y.to_double();
    if (std::abs(dx - dy) < 1e-9) continue;
    EXPECT_EQ(compare(x, y), dx < dy ? -1 : 1);
  }
}

TEST(Galois, ImagesMatchConjugates) {
  std::mt19937 rng(17);
  CycloReal x = random_element(rng, 13);
  auto vals = x.conjugate_values();
  for (int j = 0; j < x.ctx()->degree(); ++j) EXPECT_NEAR(x.galois(j).to_double(), vals[j], 1e-9);
  EXPECT_EQ(x.galois(0), x);
}

TEST(ConjugateValues, RationalIsConstant) {
  CycloReal r(field(11), Q(5, 3));
  for (double v : r.conjugate_values()) EXPECT_NEAR(v, 5.0 / 3, 1e-12);
}

TEST(SqrtEnclosure, Brackets) {
  CycloReal x = qint(3, 7) * 10L;
  Interval s = sqrt_enclosure(x, Q(1, 1000000));
  double r = std::sqrt(x.to_double());
  EXPECT_LE(s.lo.get_d(), r);
  EXPECT_GE(s.hi.get_d(), r);
}
