#include <gtest/gtest.h>

#include <random>

#include <subreg/rootdata.hpp>

using namespace subreg::rootdata;
using subreg::exactnum::Q;

namespace {

Weight W(std::initializer_list<int> c) { return Weight{std::vector<int>(c)}; }

// Closed-form G2 dimension, a = coefficient of the 7-dimensional fundamental weight.
long g2_dim(int a, int b) {
  return static_cast<long>(a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) * (a + 3 * b + 4) * (2 * a + 3 * b + 5) / 120;
}

// Type A_n: prod_{i<j} (sum_{i<=k<j} (a_k+1)) / (j-i).
Q a_dim(const Weight& w) {
  int n = static_cast<int>(w.size());
  Q r = 1;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long s = 0;
      for (int k = i; k < j; ++k) s += w[k] + 1;
      r *= Q(s);
      r /= Q(j - i);
    }
  return r;
}

// Peel a formal character into Weyl characters, highest weights first.
WeylChar peel(const RootSystem& R, std::map<Weight, long> formal) {
  WeylChar out;
  for (;;) {
    std::erase_if(formal, [](auto& p) { return p.second == 0; });
    if (formal.empty()) break;
    const Weight* top = nullptr;
    for (auto& [w, k] : formal)
      if (R.is_dominant(w) && (!top || R.height(w) > R.height(*top))) top = &w;
    Weight t = *top;
    long k = formal[t];
    out.add(t, k);
    for (auto& [mu, m] : R.weight_multiplicities(t)) formal[mu] -= k * m;
  }
  return out;
}

WeylChar tensor_by_convolution(const RootSystem& R, const Weight& a, const Weight& b) {
  std::map<Weight, long> f;
  for (auto& [x, m] : R.weight_multiplicities(a))
    for (auto& [y, n] : R.weight_multiplicities(b)) f[x + y] += m * n;
  return peel(R, f);
}

Weight random_weight(std::mt19937& rng, int rank, int maxc) {
  std::uniform_int_distribution<int> d(0, maxc);
  Weight w{std::vector<int>(rank)};
  for (auto& x : w.c) x = d(rng);
  return w;
}

}  // namespace

TEST(LieType, SeriesTable) {
  EXPECT_EQ(make_type('G', 2).m, 3);
  EXPECT_EQ(make_type('F', 4).m, 2);
  EXPECT_EQ(make_type('B', 3).m, 2);
  EXPECT_EQ(make_type('C', 3).m, 2);
  EXPECT_EQ(make_type('D', 4).m, 1);
  EXPECT_EQ(make_type('E', 6).m, 1);
  EXPECT_THROW(make_type('G', 3), DomainError);
  EXPECT_EQ(type_name(parse_type("g2")), "G2");
}

TEST(Gram, G2Normalization) {
  auto R = root_system(make_type('G', 2));
  EXPECT_EQ(R->inner(W({1, 0}), W({1, 0})), 2);
  EXPECT_EQ(R->inner(W({1, 0}), W({0, 1})), 3);
  EXPECT_EQ(R->inner(W({0, 1}), W({0, 1})), 6);
  EXPECT_EQ(R->rho(), W({1, 1}));
  EXPECT_EQ(R->positive_roots().size(), 6u);
}

TEST(Gram, ShortRootsHaveLengthTwo) {
  for (auto t : {make_type('B', 3), make_type('C', 3), make_type('F', 4), make_type('G', 2), make_type('E', 6)}) {
    auto R = root_system(t);
    long mn = 1000;
    for (auto& a : R->positive_roots()) {
      EXPECT_EQ(Q(a.norm2), R->inner(a.w, a.w));
      mn = std::min(mn, a.norm2);
    }
    EXPECT_EQ(mn, 2) << type_name(t);
  }
}

TEST(DotInner, G2Values) {
  auto R = root_system(make_type('G', 2));
  EXPECT_EQ(R->dot_inner(R->zero()), 0);
  EXPECT_EQ(R->dot_inner(W({1, 0})), 12);
  EXPECT_EQ(R->dot_inner(W({0, 1})), 24);
  EXPECT_EQ(R->inner(W({1, 0}), R->rho()), 5);
}

TEST(WeylDim, G2ClosedForm) {
  auto R = root_system(make_type('G', 2));
  EXPECT_EQ(R->weyl_dim(R->zero()), 1);
  EXPECT_EQ(R->weyl_dim(W({1, 0})), 7);
  EXPECT_EQ(R->weyl_dim(W({2, 0})), 27);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) EXPECT_EQ(R->weyl_dim(W({a, b})), g2_dim(a, b));
}

TEST(WeylDim, TypeAClosedForm) {
  auto R = root_system(make_type('A', 3));
  std::mt19937 rng(1);
  for (int t = 0; t < 40; ++t) {
    Weight w = random_weight(rng, 3, 5);
    EXPECT_EQ(Q(R->weyl_dim(w)), a_dim(w));
  }
}

TEST(WeightMultiplicities, G2Fundamentals) {
  auto R = root_system(make_type('G', 2));
  EXPECT_EQ(R->weight_multiplicities(R->zero()).size(), 1u);
  long tot = 0;
  for (auto& [w, k] : R->weight_multiplicities(W({1, 0}))) tot += k;
  EXPECT_EQ(tot, 7);
  tot = 0;
  for (auto& [w, k] : R->weight_multiplicities(W({0, 1}))) tot += k;
  EXPECT_EQ(tot, 14);
  EXPECT_EQ(R->weight_multiplicities(W({0, 1})).at(R->zero()), 2);
  EXPECT_THROW(R->weight_multiplicities(W({-1, 0})), DomainError);
}

TEST(WeightMultiplicities, SumIsDimensionAndWeylInvariant) {
  for (auto t : {make_type('G', 2), make_type('B', 3), make_type('C', 3), make_type('A', 3)}) {
    auto R = root_system(t);
    std::mt19937 rng(2);
    for (int k = 0; k < 8; ++k) {
      Weight l = random_weight(rng, R->rank(), 2);
      const auto& m = R->weight_multiplicities(l);
      mpz_class tot = 0;
      for (auto& [w, c] : m) {
        tot += c;
        for (int i = 0; i < R->rank(); ++i) EXPECT_EQ(m.at(R->reflect(w, i)), c);
      }
      EXPECT_EQ(tot, R->weyl_dim(l));
    }
  }
}

TEST(TensorChi, G2SevenSquared) {
  auto R = root_system(make_type('G', 2));
  WeylChar expect;
  for (auto w : {W({0, 0}), W({1, 0}), W({0, 1}), W({2, 0})}) expect.add(w, 1);
  EXPECT_EQ(R->tensor_chi(W({1, 0}), W({1, 0})), expect);
  EXPECT_EQ(tensor_by_convolution(*R, W({1, 0}), W({1, 0})), expect);
  EXPECT_EQ(R->dimension(expect), 49);
}

TEST(TensorChi, UnitAndConvolutionOracle) {
  for (auto t : {make_type('G', 2), make_type('B', 3)}) {
    auto R = root_system(t);
    std::mt19937 rng(3);
    for (int k = 0; k < 6; ++k) {
      Weight a = random_weight(rng, R->rank(), 2), b = random_weight(rng, R->rank(), 1);
      WeylChar unit;
      unit.add(a, 1);
      EXPECT_EQ(R->tensor_chi(R->zero(), a), unit);
      EXPECT_EQ(R->tensor_chi(a, b), tensor_by_convolution(*R, a, b));
    }
  }
}

TEST(TensorChi, HundredRandomCases) {
  auto R = root_system(make_type('G', 2));
  std::mt19937 rng(4);
  for (int k = 0; k < 100; ++k) {
    Weight a = random_weight(rng, 2, 3), b = random_weight(rng, 2, 3);
    WeylChar ab = R->tensor_chi(a, b);
    EXPECT_EQ(ab, R->tensor_chi(b, a));
    for (auto& [w, c] : ab.terms) EXPECT_GT(c, 0);
    EXPECT_EQ(R->dimension(ab), R->weyl_dim(a) * R->weyl_dim(b));
  }
}

TEST(TensorChi, Associativity) {
  auto R = root_system(make_type('G', 2));
  std::mt19937 rng(5);
  for (int k = 0; k < 10; ++k) {
    Weight a = random_weight(rng, 2, 2), b = random_weight(rng, 2, 1), c = random_weight(rng, 2, 1);
    WeylChar ca, cc;
    ca.add(a, 1);
    cc.add(c, 1);
    EXPECT_EQ(R->multiply(R->tensor_chi(a, b), cc), R->multiply(ca, R->tensor_chi(b, c)));
  }
}

TEST(Straighten, WallsGiveZero) {
  auto R = root_system(make_type('G', 2));
  auto s = R->straighten(W({-1, 0}));
  EXPECT_TRUE(s.zero);
  s = R->straighten(W({-2, 1}));  // s_1 . 0
  EXPECT_FALSE(s.zero);
  EXPECT_EQ(s.sign, -1);
  EXPECT_EQ(s.dom, R->zero());
}

TEST(Json, RoundTrip) {
  auto R = root_system(make_type('G', 2));
  WeylChar x = R->tensor_chi(W({1, 1}), W({0, 1}));
  auto j = to_json(R->type(), x);
  EXPECT_EQ(j["type"], "G2");
  EXPECT_EQ(from_json(nlohmann::json::parse(j.dump())), x);
}
