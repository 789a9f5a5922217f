#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <subreg/deeq.hpp>
#include <subreg/mckay.hpp>

using namespace subreg::mckay;
namespace graph = subreg::graph;
namespace linalg = subreg::linalg;
using subreg::rootdata::make_type;

namespace {

const std::vector<std::string> kFive{"Z4", "Q8", "BT", "BO", "BI"};

// dim S^k(V)^G in floating point: average of the complete symmetric polynomial h_k over the class table.
std::vector<long> molien_float(const Group& G, int n) {
  std::vector<cplx> acc(n, 0);
  for (auto& c : G.classes) {
    cplx t = c.trace, h0 = 1, h1 = t;
    for (int k = 0; k < n; ++k) {
      acc[k] += static_cast<double>(c.size) * h0;
      cplx h2 = t * h1 - h0;
      h0 = h1;
      h1 = h2;
    }
  }
  std::vector<long> out;
  for (auto& a : acc) out.push_back(std::lround(a.real() / static_cast<double>(G.order)));
  return out;
}

// Series of prod (1 - t^d)^{-1} times the numerator, in V-degree.
std::vector<long> expand(const GradedSeries& s, int n) {
  std::vector<long> c(n, 0);
  for (size_t k = 0; k < s.numerator.size(); ++k)
    if (k % 2 == 0 && static_cast<int>(k / 2) < n) c[k / 2] = s.numerator[k];
  for (int d : s.gen_degrees)
    for (int k = d / 2; k < n; ++k) c[k] += c[k - d / 2];
  return c;
}

graph::Graph graph_of(const linalg::IntMat& C) {
  graph::Graph g(static_cast<int>(C.size()));
  for (size_t i = 0; i < C.size(); ++i)
    for (size_t j = i + 1; j < C.size(); ++j)
      if (C[i][j]) g.add_edge(static_cast<int>(i), static_cast<int>(j), static_cast<int>(C[i][j]));
  return g;
}

}  // namespace

TEST(Groups, OrdersAndCharacterTables) {
  std::map<std::string, long> order{{"Z4", 4}, {"Q8", 8}, {"BT", 24}, {"BO", 48}, {"BI", 120}};
  for (auto& nm : kFive) {
    Group G = by_name(nm);
    EXPECT_EQ(G.order, order[nm]);
    long cs = 0;
    for (auto& c : G.classes) cs += c.size;
    EXPECT_EQ(cs, G.order) << nm;
    EXPECT_EQ(sum_dim_squares(G), G.order) << nm;
    EXPECT_EQ(G.chars.size(), G.classes.size()) << nm;
    EXPECT_LT(orthonormality_defect(G), 1e-9) << nm;
    EXPECT_EQ(G.dims.front(), 1);
    EXPECT_TRUE(G.central_involution) << nm;
  }
}

TEST(Groups, OddCyclicHasNoCentralInvolution) {
  EXPECT_FALSE(by_name("Z5").central_involution);
  EXPECT_THROW(by_name("BD6"), DomainError);
  EXPECT_THROW(by_name("nope"), DomainError);
}

TEST(McKay, GraphTypes) {
  std::map<std::string, std::string> type{{"Z4", "A~3"}, {"Q8", "D~4"}, {"BD12", "D~5"}, {"BT", "E~6"}, {"BO", "E~7"}, {"BI", "E~8"}};
  for (auto& [nm, t] : type) {
    auto g = mckay_graph(by_name(nm));
    EXPECT_EQ(graph::affine_type(g).value_or("?"), t) << nm;
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < g.size(); ++j) {
        EXPECT_EQ(g.adj[i][j], g.adj[j][i]);
        EXPECT_GE(g.adj[i][j], 0);
      }
  }
  EXPECT_TRUE(graph::isomorphic(mckay_graph(by_name("BO")), graph::affine_E(7)));
  EXPECT_TRUE(graph::isomorphic(mckay_graph(by_name("Q8")), graph::affine_D(4)));
}

TEST(McKay, PerronValueIsTwo) {
  for (auto& nm : kFive) {
    auto g = mckay_graph(by_name(nm));
    Eigen::MatrixXd a(g.size(), g.size());
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < g.size(); ++j) a(i, j) = g.adj[i][j];
    EXPECT_NEAR(a.eigenvalues().cwiseAbs().maxCoeff(), 2.0, 1e-9) << nm;
  }
}

TEST(ToyCartan, SingularButProperSubgraphsAreNot) {
  for (auto& nm : {"Q8", "BO", "BT", "BI"}) {
    auto C = cartan_toy(by_name(nm));
    EXPECT_EQ(linalg::int_det(C), 0) << nm;
    int n = static_cast<int>(C.size());
    for (int drop = 0; drop < n; ++drop) {
      std::vector<int> keep;
      for (int i = 0; i < n; ++i)
        if (i != drop) keep.push_back(i);
      auto s = linalg::int_zero(n - 1, n - 1);
      for (int a = 0; a < n - 1; ++a)
        for (int b = 0; b < n - 1; ++b) s[a][b] = C[keep[a]][keep[b]];
      EXPECT_NE(linalg::int_det(s), 0) << nm << " drop " << drop;
    }
  }
  EXPECT_EQ(cartan_toy(by_name("Q8")).size(), 5u);
  EXPECT_EQ(cartan_toy(by_name("BO")).size(), 8u);
}

TEST(Molien, TrivialGroup) {
  auto s = molien_series(by_name("Z1"));
  EXPECT_EQ(s.gen_degrees, (std::vector<int>{2, 2}));
  EXPECT_EQ(s.numerator, std::vector<long>{1});
  for (int k = 0; k < 40; ++k) EXPECT_EQ(s.coeffs[k], k + 1);
}

TEST(Molien, MatchesFloatOracleAndIsNonnegative) {
  for (auto& nm : kFive) {
    Group G = by_name(nm);
    auto s = molien_series(G);
    ASSERT_EQ(s.coeffs.size(), 40u);
    EXPECT_EQ(s.coeffs[0], 1);
    for (long c : s.coeffs) EXPECT_GE(c, 0);
    EXPECT_EQ(s.coeffs, molien_float(G, 40)) << nm;
    EXPECT_TRUE(s.closed) << nm;
    EXPECT_EQ(expand(s, 40), s.coeffs) << nm;
  }
}

TEST(Molien, GeneratorDegrees) {
  auto q8 = molien_series(by_name("Q8"));
  EXPECT_EQ(q8.gen_degrees, (std::vector<int>{8, 8, 12}));
  auto bo = molien_series(by_name("BO"));
  EXPECT_EQ(bo.gen_degrees, (std::vector<int>{16, 24, 36}));
  // one relation in twice the top degree
  EXPECT_EQ(bo.numerator.size(), 73u);
  EXPECT_EQ(bo.numerator[0], 1);
  EXPECT_EQ(bo.numerator[72], -1);
  EXPECT_EQ(series_string(q8), "(1 - t^24)/(1-t^8)(1-t^8)(1-t^12)");
}

TEST(QuiverModel, TreesOnly) {
  EXPECT_EQ(quiver_model_cartan(graph::Graph(1)), (linalg::IntMat{{2}}));
  EXPECT_THROW(quiver_model_cartan(graph::affine_A(3)), DomainError);
}

TEST(QuiverModel, MatchesQuotientCartans) {
  subreg::fusion::Category cat(make_type('G', 2), 7);
  auto C = cat.cartan_matrix();
  auto g = graph_of(C);
  EXPECT_EQ(quiver_model_cartan(g), C);
  EXPECT_TRUE(graph::isomorphic(g, mckay_graph(by_name("BO"))));

  subreg::fusion::SimpleRing ring(cat);
  subreg::deeq::Deequivariantization D(cat, ring, 14);
  const auto& pb = D.principal_block();
  linalg::IntMat Cd = linalg::int_zero(pb.members.size(), pb.members.size());
  for (size_t i = 0; i < pb.members.size(); ++i)
    for (size_t j = 0; j < pb.members.size(); ++j) Cd[i][j] = D.cartan()[pb.members[i]][pb.members[j]];
  auto gd = graph_of(Cd);
  EXPECT_EQ(quiver_model_cartan(gd), Cd);
  EXPECT_TRUE(graph::isomorphic(gd, mckay_graph(by_name("Q8"))));
}
