// Finite subgroups of SL2: class data, character tables, McKay graphs and Molien series.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "exactnum.hpp"
#include "graph.hpp"
#include "linalg.hpp"

namespace subreg::mckay {

using cplx = std::complex<double>;
using exactnum::DomainError;
using exactnum::Q;

struct Mat2 {
  cplx a, b, c, d;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse() const { return {d, -b, -c, a}; }  // determinant one
  cplx trace() const { return a + d; }
};

// Unit quaternion w + xi + yj + zk as an SU(2) matrix.
inline Mat2 quat(double w, double x, double y, double z) {
  return {cplx(w, x), cplx(y, z), cplx(-y, z), cplx(w, -x)};
}

struct ConjClass {
  int size;
  int order;     // element order
  int angle;     // eigenvalues exp(+-i pi angle / angle_den)
  cplx trace;
};

struct Group {
  std::string name;
  std::string family;  // cyclic, binary dihedral, binary tetrahedral, binary octahedral, binary icosahedral
  int param = 0;
  int order = 0;
  int angle_den = 1;  // l with eigen-angles in (pi/l) Z
  std::vector<ConjClass> classes;  // identity first
  std::vector<std::vector<cplx>> chars;  // irreducible characters, trivial first
  std::vector<int> dims;
  std::vector<cplx> natural;  // character of V
  bool central_involution = false;
};

namespace detail {

struct Key {
  long v[8];
  auto operator<=>(const Key&) const = default;
};

inline Key key(const Mat2& m) {
  auto r = [](double x) { return std::lround(x * 1e8); };
  return {{r(m.a.real()), r(m.a.imag()), r(m.b.real()), r(m.b.imag()), r(m.c.real()), r(m.c.imag()), r(m.d.real()),
           r(m.d.imag())}};
}

inline std::vector<Mat2> closure(const std::vector<Mat2>& gens, size_t cap = 1000) {
  std::map<Key, int> seen;
  std::vector<Mat2> el{{1, 0, 0, 1}};
  seen[key(el[0])] = 0;
  for (size_t i = 0; i < el.size(); ++i)
    for (auto& g : gens) {
      Mat2 m = el[i] * g;
      if (seen.emplace(key(m), static_cast<int>(el.size())).second) el.push_back(m);
      if (el.size() > cap) throw DomainError("group closure exceeded its cap");
    }
  return el;
}

inline int elem_order(const Mat2& g) {
  Mat2 p = g;
  Key id = key({1, 0, 0, 1});
  for (int k = 1; k <= 1000; ++k) {
    if (key(p) == id) return k;
    p = p * g;
  }
  throw DomainError("element of infinite order");
}

// Burnside: common eigenvectors of the class-multiplication matrices give the central characters.
inline void character_table(Group& G, const std::vector<Mat2>& el, const std::vector<int>& cls_of) {
  int r = static_cast<int>(G.classes.size()), n = static_cast<int>(el.size());
  std::map<Key, int> idx;
  for (int i = 0; i < n; ++i) idx[key(el[i])] = i;
  std::vector<int> rep(r, -1);
  for (int i = 0; i < n; ++i)
    if (rep[cls_of[i]] < 0) rep[cls_of[i]] = i;
  // c[i][j][k] = #{(x, y) : x in C_i, y in C_j, x y = z_k}
  std::vector<std::vector<std::vector<double>>> c(r, std::vector<std::vector<double>>(r, std::vector<double>(r, 0)));
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < r; ++k) {
      Mat2 y = el[x].inverse() * el[rep[k]];
      int yi = idx.at(key(y));
      c[cls_of[x]][cls_of[yi]][k] += 1;
    }
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> U(0.5, 1.5);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    double w = U(rng);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) M(j, k) += w * c[i][j][k];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(M);
  auto V = es.eigenvectors();
  for (int e = 0; e < r; ++e) {
    std::vector<cplx> om(r);
    cplx s = V(0, e);
    for (int k = 0; k < r; ++k) om[k] = V(k, e) / s;
    double denom = 0;
    for (int k = 0; k < r; ++k) denom += std::norm(om[k]) / G.classes[k].size;
    double dim = std::sqrt(G.order / denom);
    std::vector<cplx> chi(r);
    for (int k = 0; k < r; ++k) chi[k] = dim * om[k] / static_cast<double>(G.classes[k].size);
    G.chars.push_back(chi);
    G.dims.push_back(static_cast<int>(std::lround(dim)));
  }
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  auto sig = [&](int e) {
    std::vector<long> s{G.dims[e]};
    for (auto& z : G.chars[e]) s.push_back(-std::lround(z.real() * 1e6)), s.push_back(-std::lround(z.imag() * 1e6));
    return s;
  };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return sig(a) < sig(b); });
  std::vector<std::vector<cplx>> ch;
  std::vector<int> dm;
  for (int p : perm) ch.push_back(G.chars[p]), dm.push_back(G.dims[p]);
  G.chars = std::move(ch);
  G.dims = std::move(dm);
}

}  // namespace detail

inline Group make_group(const std::string& family, int param, const std::vector<Mat2>& gens, const std::string& name) {
  Group G;
  G.family = family;
  G.param = param;
  G.name = name;
  auto el = detail::closure(gens);
  G.order = static_cast<int>(el.size());
  int n = G.order;
  std::map<detail::Key, int> idx;
  for (int i = 0; i < n; ++i) idx[detail::key(el[i])] = i;
  std::vector<int> cls_of(n, -1);
  std::vector<int> ords;
  for (int i = 0; i < n; ++i) {
    if (cls_of[i] >= 0) continue;
    int id = static_cast<int>(G.classes.size());
    int size = 0;
    for (auto& g : el) {
      int j = idx.at(detail::key(g * el[i] * g.inverse()));
      if (cls_of[j] < 0) cls_of[j] = id, ++size;
    }
    int o = detail::elem_order(el[i]);
    ords.push_back(o);
    G.classes.push_back({size, o, 0, el[i].trace()});
    if (o == 2) G.central_involution = true;
  }
  int L = 1;
  for (int o : ords) L = std::lcm(L, o);
  G.angle_den = std::max(2, L);
  for (auto& c : G.classes) {
    double th = std::acos(std::clamp(c.trace.real() / 2.0, -1.0, 1.0));
    int k = static_cast<int>(std::lround(th * G.angle_den / std::numbers::pi));
    if (std::abs(2 * std::cos(std::numbers::pi * k / G.angle_den) - c.trace.real()) > 1e-9)
      throw DomainError("eigen-angle not on the expected grid");
    c.angle = k;
  }
  for (auto& c : G.classes) G.natural.push_back(c.trace);
  detail::character_table(G, el, cls_of);
  return G;
}

inline Group cyclic(int n) {
  if (n < 1) throw DomainError("cyclic order must be positive");
  double t = 2 * std::numbers::pi / n;
  return make_group("cyclic", n, {{std::polar(1.0, t), 0, 0, std::polar(1.0, -t)}}, "Z" + std::to_string(n));
}

// Order 4n; n = 2 is the quaternion group.
inline Group binary_dihedral(int n) {
  if (n < 2) throw DomainError("binary dihedral parameter must be at least 2");
  double t = std::numbers::pi / n;
  return make_group("binary dihedral", n, {{std::polar(1.0, t), 0, 0, std::polar(1.0, -t)}, quat(0, 0, 1, 0)},
                    n == 2 ? "Q8" : "BD" + std::to_string(4 * n));
}

inline Group binary_tetrahedral() {
  return make_group("binary tetrahedral", 0, {quat(0, 1, 0, 0), quat(0.5, 0.5, 0.5, 0.5)}, "BT");
}

inline Group binary_octahedral() {
  double h = std::sqrt(0.5);
  return make_group("binary octahedral", 0, {quat(0.5, 0.5, 0.5, 0.5), quat(h, h, 0, 0)}, "BO");
}

inline Group binary_icosahedral() {
  double phi = (1 + std::sqrt(5.0)) / 2;
  return make_group("binary icosahedral", 0, {quat(0.5, 0.5, 0.5, 0.5), quat(phi / 2, 0.5 / phi, 0.5, 0)}, "BI");
}

inline Group by_name(const std::string& s) {
  if (s == "Q8") return binary_dihedral(2);
  if (s == "BT") return binary_tetrahedral();
  if (s == "BO") return binary_octahedral();
  if (s == "BI") return binary_icosahedral();
  if (s.size() > 1 && s[0] == 'Z') return cyclic(std::stoi(s.substr(1)));
  if (s.size() > 2 && s.substr(0, 2) == "BD") {
    int ord = std::stoi(s.substr(2));
    if (ord % 4) throw DomainError("binary dihedral order must be divisible by 4");
    return binary_dihedral(ord / 4);
  }
  throw DomainError("unknown group: " + s);
}

inline cplx inner(const Group& G, const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0;
  for (size_t k = 0; k < G.classes.size(); ++k) s += static_cast<double>(G.classes[k].size) * a[k] * std::conj(b[k]);
  return s / static_cast<double>(G.order);
}

// Max deviation of the character table from orthonormality.
inline double orthonormality_defect(const Group& G) {
  double d = 0;
  for (size_t i = 0; i < G.chars.size(); ++i)
    for (size_t j = 0; j < G.chars.size(); ++j)
      d = std::max(d, std::abs(inner(G, G.chars[i], G.chars[j]) - cplx(i == j ? 1.0 : 0.0)));
  return d;
}

inline long sum_dim_squares(const Group& G) {
  long s = 0;
  for (int d : G.dims) s += static_cast<long>(d) * d;
  return s;
}

// Edge multiplicity between V_i and V_j: [V_i (x) V : V_j].
inline graph::Graph mckay_graph(const Group& G) {
  int r = static_cast<int>(G.chars.size());
  graph::Graph g(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<cplx> prod(G.classes.size());
      for (size_t k = 0; k < prod.size(); ++k) prod[k] = G.chars[i][k] * G.natural[k];
      cplx m = inner(G, prod, G.chars[j]);
      long v = std::lround(m.real());
      if (std::abs(m - cplx(static_cast<double>(v), 0)) > 1e-6) throw DomainError("non-integral McKay multiplicity");
      g.adj[i][j] = static_cast<int>(v);
    }
  return g;
}

inline linalg::IntMat cartan_of(const graph::Graph& g) {
  int n = g.size();
  auto c = linalg::int_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = (i == j ? 2 : 0) + g.adj[i][j];
  return c;
}

inline linalg::IntMat cartan_toy(const Group& G) { return cartan_of(mckay_graph(G)); }

inline linalg::IntMat quiver_model_cartan(const graph::Graph& x) {
  if (!x.is_tree()) throw DomainError("quiver model needs a tree");
  return cartan_of(x);
}

// ---- Molien series ----

// Power series in t with V placed in degree 2; only even degrees occur.
struct GradedSeries {
  std::vector<long> coeffs;       // coefficient of t^{2k} for k = 0..size-1
  std::vector<int> gen_degrees;   // denominator prod (1 - t^d)
  std::vector<long> numerator;    // numerator coefficients in t (V in degree 2)
  bool closed = false;            // numerator has finite support within the computed range
};

// dim S^k(V)^G for k < n, exactly: average of U_k(cos theta) over the group.
inline std::vector<long> molien_coefficients(const Group& G, int n) {
  int l = G.angle_den;
  auto F = exactnum::field(l);
  using exactnum::CycloReal;
  std::vector<CycloReal> u0, u1, tc;
  for (auto& c : G.classes) {
    tc.push_back(exactnum::two_cos(c.angle, l));
    u0.emplace_back(F, Q(0));
    u1.emplace_back(F, Q(1));
  }
  std::vector<long> out;
  for (int k = 0; k < n; ++k) {
    CycloReal s(F, Q(0));
    for (size_t i = 0; i < G.classes.size(); ++i) s += u1[i] * static_cast<long>(G.classes[i].size);
    s = s * exactnum::frac(1, G.order);
    if (!s.is_integer() || s.coeff(0) < 0) throw DomainError("Molien coefficient is not a nonnegative integer");
    out.push_back(s.coeff(0).get_num().get_si());
    for (size_t i = 0; i < G.classes.size(); ++i) {
      CycloReal u2 = tc[i] * u1[i] - u0[i];
      u0[i] = u1[i];
      u1[i] = u2;
    }
  }
  return out;
}

// Closed form by greedy denominators: multiply by (1 - t^d) at the lowest positive coefficient until none remain.
inline GradedSeries molien_series(const Group& G, int terms = 40, int work = 160) {
  GradedSeries S;
  auto c = molien_coefficients(G, std::max(terms, work));
  S.coeffs.assign(c.begin(), c.begin() + terms);
  std::vector<long> q = c;  // in V-degree
  for (int guard = 0; guard < 16; ++guard) {
    int d = -1;
    for (size_t k = 1; k < q.size(); ++k)
      if (q[k] > 0) {
        d = static_cast<int>(k);
        break;
      }
    if (d < 0) break;
    S.gen_degrees.push_back(2 * d);
    for (size_t k = q.size(); k-- > static_cast<size_t>(d);) q[k] -= q[k - d];
  }
  int last = -1;
  for (size_t k = 0; k < q.size(); ++k)
    if (q[k]) last = static_cast<int>(k);
  S.closed = last >= 0 && 2 * last < static_cast<int>(q.size());
  S.numerator.assign(2 * (last + 1) - 1, 0);
  for (int k = 0; k <= last; ++k) S.numerator[2 * k] = q[k];
  return S;
}

inline std::string series_string(const GradedSeries& s) {
  std::string num;
  for (size_t k = 0; k < s.numerator.size(); ++k) {
    long v = s.numerator[k];
    if (!v) continue;
    if (!num.empty()) num += v < 0 ? " - " : " + ";
    else if (v < 0) num += "-";
    long a = std::labs(v);
    if (k == 0) num += std::to_string(a);
    else num += (a != 1 ? std::to_string(a) : "") + "t^" + std::to_string(k);
  }
  std::string den;
  for (int d : s.gen_degrees) den += "(1-t^" + std::to_string(d) + ")";
  return "(" + num + ")/" + (den.empty() ? "1" : den);
}

}  // namespace subreg::mckay
