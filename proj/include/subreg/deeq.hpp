// De-equivariantization by the Rep(S3) Muger center, at the level of Grothendieck classes,
// and the dimension sieve for commutative exact algebras.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fusion.hpp"
#include "graph.hpp"

namespace subreg::deeq {

using exactnum::CycloReal;
using exactnum::Q;
using fusion::Category;
using fusion::SimpleRing;
using linalg::IntMat;
using rootdata::DomainError;

enum class Kind { a, b, c };

inline char kind_char(Kind k) { return k == Kind::a ? 'a' : k == Kind::b ? 'b' : 'c'; }

struct SimpleTag {
  Kind kind;
  int partner = -1;  // sgn (x) L
  int base = -1;     // for kind b: L' with L = V (x) L'
};

struct DebarSimple {
  std::string label;
  int source;  // representative simple of C
  int k;       // number of summands of A (x) source
  int part;    // 1..k
  CycloReal fpdim;
  long twist;
  bool principal = false;
};

class Deequivariantization {
 public:
  Deequivariantization(Category& cat, const SimpleRing& ring, int q_order)
      : cat_(cat), ring_(ring), n_(cat.N()), q_order_(q_order) {
    auto mc = fusion::mueger_center(cat, ring, q_order);
    if (!mc.s3_rules) throw DomainError("Muger center is not Rep(S3)");
    sgn_ = mc.sgn;
    V_ = mc.V;
    classify();
    build_simples();
    build_classes();
    build_blocks();
  }

  int sgn() const { return sgn_; }
  int V() const { return V_; }
  const std::vector<SimpleTag>& tags() const { return tags_; }
  int count(Kind k) const {
    int c = 0;
    for (auto& t : tags_) c += t.kind == k;
    return c;
  }
  const std::vector<DebarSimple>& simples() const { return ys_; }
  int find(const std::string& label) const {
    for (size_t i = 0; i < ys_.size(); ++i)
      if (ys_[i].label == label) return static_cast<int>(i);
    return -1;
  }

  // Class of A (x) L over the simples of the de-equivariantization.
  const std::vector<long>& image_of_simple(int L) const { return img_[L]; }
  // Class of the projective cover of each simple (columns).
  const IntMat& cartan() const { return cartan_; }

  struct Block {
    std::vector<int> members;
    bool trivial;
  };
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& principal_block() const { return blocks_.at(principal_); }
  int trivial_block_count() const {
    int c = 0;
    for (auto& b : blocks_) c += b.trivial;
    return c;
  }
  graph::Graph block_graph(const Block& b) const {
    graph::Graph g(static_cast<int>(b.members.size()));
    for (size_t i = 0; i < b.members.size(); ++i)
      for (size_t j = i + 1; j < b.members.size(); ++j) {
        long e = cartan_[b.members[i]][b.members[j]];
        if (e) g.add_edge(static_cast<int>(i), static_cast<int>(j), static_cast<int>(e));
      }
    return g;
  }

  CycloReal fpdim_projective(int y) const {
    CycloReal s(ys_[y].fpdim.ctx(), Q(0));
    for (size_t i = 0; i < ys_.size(); ++i)
      if (cartan_[i][y]) s += ys_[i].fpdim * cartan_[i][y];
    return s;
  }

  CycloReal fpdim_category() const {
    CycloReal s(ys_.at(0).fpdim.ctx(), Q(0));
    for (size_t y = 0; y < ys_.size(); ++y) s += ys_[y].fpdim * fpdim_projective(static_cast<int>(y));
    return s;
  }

  std::vector<int> integral_simples() const {
    std::vector<int> r;
    for (size_t i = 0; i < ys_.size(); ++i)
      if (ys_[i].fpdim.is_integer()) r.push_back(static_cast<int>(i));
    return r;
  }

  std::vector<int> trivial_twist_simples() const {
    std::vector<int> r;
    for (size_t i = 0; i < ys_.size(); ++i)
      if (ys_[i].twist == 0) r.push_back(static_cast<int>(i));
    return r;
  }

 private:
  int single(const std::vector<long>& v) const {
    int idx = -1;
    long tot = 0;
    for (int i = 0; i < n_; ++i) {
      tot += v[i];
      if (v[i]) idx = i;
    }
    return tot == 1 ? idx : -1;
  }

  void classify() {
    for (int L = 0; L < n_; ++L) {
      int sL = single(ring_.product(sgn_, L));
      if (sL < 0) throw DomainError("sgn (x) L is not simple");
      auto VL = ring_.product(V_, L);
      long tot = 0;
      for (auto x : VL) tot += x;
      SimpleTag t{Kind::a, sL, -1};
      if (sL == L) {
        if (tot != 3 || VL[L] != 1) throw DomainError("unexpected V (x) L for a sgn-fixed simple");
        t.kind = Kind::b;
        for (int i = 0; i < n_; ++i)
          if (VL[i] && i != L) {
            t.base = i;
            break;
          }
      } else if (tot == 1 && !VL[L] && !VL[sL]) {
        t.kind = Kind::a;
      } else if (tot == 2 && VL[L] == 1 && VL[sL] == 1) {
        t.kind = Kind::c;
      } else {
        throw DomainError("simple of unclassifiable Rep(S3)-type: " + cat_.simple_name(L));
      }
      tags_.push_back(t);
    }
  }

  long twist_of(int L) const {
    mpz_class m = cat_.twist_exponent(cat_.weight(L)).get_num() % q_order_;
    return m.get_si();
  }

  void build_simples() {
    const auto& fp = cat_.fpdims();
    std::set<int> principal(cat_.principal_block().members.begin(), cat_.principal_block().members.end());
    slot_.assign(n_, -1);
    // unit first, then the principal block, then the rest
    std::vector<int> order{ring_.unit()};
    for (int L : cat_.principal_block().members) order.push_back(L);
    for (int L = 0; L < n_; ++L) order.push_back(L);
    for (int L : order) {
      auto& t = tags_[L];
      if (t.kind == Kind::b || slot_[L] >= 0) continue;
      std::string nm = cat_.simple_name(L);
      int k = t.kind == Kind::a ? 1 : 3;
      slot_[L] = slot_[t.partner] = static_cast<int>(ys_.size());
      for (int i = 1; i <= k; ++i) {
        std::string lab = k == 1 ? "Y(" + nm + ")" : "Y" + std::to_string(i) + "(" + nm + ")";
        ys_.push_back({lab, L, k, i, fp.fp_L[L] * exactnum::frac(1, k), twist_of(L), principal.count(L) > 0});
      }
    }
  }

  std::vector<long> image(int L) const {
    std::vector<long> v(ys_.size(), 0);
    const auto& t = tags_[L];
    if (t.kind == Kind::b) {
      auto w = image(t.base);
      for (size_t i = 0; i < v.size(); ++i) v[i] = 2 * w[i];
      return v;
    }
    int s = slot_[L];
    for (int i = 0; i < ys_[s].k; ++i) v[s + i] = 1;
    return v;
  }

  void build_classes() {
    for (int L = 0; L < n_; ++L) img_.push_back(image(L));
    const IntMat& P = ring_.projective_classes();
    int m = static_cast<int>(ys_.size());
    cartan_ = linalg::int_zero(m, m);
    for (int y = 0; y < m; ++y) {
      int L = ys_[y].source;
      // class of A (x) P_L
      std::vector<long> ap(m, 0);
      for (int i = 0; i < n_; ++i)
        if (P[i][L])
          for (int j = 0; j < m; ++j) ap[j] += P[i][L] * img_[i][j];
      int k = ys_[y].k, s = slot_[L];
      for (int j = 0; j < m; ++j) {
        if (k == 1) {
          cartan_[j][y] = ap[j];
        } else if (j >= s && j < s + k) {
          // the own family splits diagonally
          cartan_[j][y] = j == y ? ap[j] : 0;
        } else {
          if (ap[j] % k) throw DomainError("projective class does not split evenly");
          cartan_[j][y] = ap[j] / k;
        }
      }
    }
  }

  void build_blocks() {
    int m = static_cast<int>(ys_.size());
    std::vector<int> comp(m, -1);
    for (int s = 0; s < m; ++s) {
      if (comp[s] >= 0) continue;
      Block b;
      std::vector<int> st{s};
      comp[s] = static_cast<int>(blocks_.size());
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        b.members.push_back(v);
        for (int u = 0; u < m; ++u)
          if (comp[u] < 0 && (cartan_[u][v] || cartan_[v][u])) {
            comp[u] = comp[s];
            st.push_back(u);
          }
      }
      std::sort(b.members.begin(), b.members.end());
      b.trivial = b.members.size() == 1 && cartan_[b.members[0]][b.members[0]] == 1;
      blocks_.push_back(b);
    }
    principal_ = comp[0];
  }

  Category& cat_;
  const SimpleRing& ring_;
  int n_, q_order_;
  int sgn_ = -1, V_ = -1;
  std::vector<SimpleTag> tags_;
  std::vector<DebarSimple> ys_;
  std::vector<int> slot_;  // first simple index of A (x) L, per simple L of C
  std::vector<std::vector<long>> img_;
  IntMat cartan_;
  std::vector<Block> blocks_;
  int principal_ = 0;
};

// ---- sieve ----

struct SieveEntry {
  long r, s;
  CycloReal value;
  Q norm;
  std::string verdict;  // trivial / decomposable / no unit / not an algebraic integer / conjugate dominance / survives
  std::optional<CycloReal> quotient;
  double quotient_value = 0, max_conjugate = 0;
};

struct SieveReport {
  CycloReal bound_square;  // FPdim of the category
  double sqrt_bound = 0;
  std::vector<long> primes;
  std::vector<SieveEntry> entries;
  std::vector<SieveEntry> survivors;
};

inline std::string candidate_name(long r, long s, const std::string& sym = "α") {
  if (s == 0) return std::to_string(r);
  std::string t = (s == 1 ? "" : std::to_string(s)) + sym;
  return r ? std::to_string(r) + "+" + t : t;
}

inline std::vector<long> prime_factors(mpz_class n) {
  std::vector<long> p;
  if (n < 0) n = -n;
  for (long d = 2; n > 1 && d * d <= n; ++d)
    if (n % d == 0) {
      p.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) p.push_back(n.get_si());
  return p;
}

// True when some Galois conjugate of x is strictly larger than x itself.
inline bool has_larger_conjugate(const CycloReal& x, double* maxval = nullptr) {
  bool larger = false;
  double mx = x.to_double(0);
  int d = x.ctx()->degree();
  for (int j = 1; j < d; ++j) {
    CycloReal y = x.galois(j);
    if (exactnum::compare(y, x) > 0) larger = true;
    mx = std::max(mx, y.to_double(0));
  }
  if (maxval) *maxval = mx;
  return larger;
}

// Candidates r + s*alpha with value <= sqrt(D) and norm a signed product of the primes dividing norm(D).
inline SieveReport anisotropy_sieve(const CycloReal& D, const CycloReal& alpha) {
  SieveReport rep;
  rep.bound_square = D;
  auto F = D.ctx();
  rep.sqrt_bound = std::sqrt(D.to_double());
  Q nd = D.norm();
  if (nd.get_den() != 1) throw DomainError("category dimension is not an algebraic integer");
  rep.primes = prime_factors(nd.get_num());
  auto allowed = [&](Q n) {
    if (n == 0 || n.get_den() != 1) return false;
    mpz_class v = abs(n.get_num());
    for (long p : rep.primes)
      while (v % p == 0) v /= p;
    return v == 1;
  };
  long rmax = static_cast<long>(std::floor(rep.sqrt_bound)) + 1;
  long smax = static_cast<long>(std::floor(rep.sqrt_bound / alpha.to_double())) + 1;
  for (long s = 0; s <= smax; ++s)
    for (long r = 0; r <= rmax; ++r) {
      CycloReal x = CycloReal(F, Q(r)) + alpha * s;
      if (x.is_zero() || x * x > D) continue;
      Q n = x.norm();
      if (!allowed(n)) continue;
      SieveEntry e{r, s, x, n, "", std::nullopt, 0, 0};
      if (r == 1 && s == 0) e.verdict = "trivial";
      else if (s == 0) e.verdict = "decomposable";
      else if (r == 0) e.verdict = "no unit";
      else {
        CycloReal q = D / (x * x);
        e.quotient = q;
        e.quotient_value = q.to_double();
        bool larger = has_larger_conjugate(q, &e.max_conjugate);
        if (!q.is_algebraic_integer()) e.verdict = "not an algebraic integer";
        else if (larger) e.verdict = "conjugate dominance";
        else e.verdict = "survives";
      }
      rep.entries.push_back(e);
    }
  std::sort(rep.entries.begin(), rep.entries.end(), [](const SieveEntry& a, const SieveEntry& b) {
    return exactnum::compare(a.value, b.value) < 0;
  });
  for (auto& e : rep.entries)
    if (e.verdict == "trivial" || e.verdict == "survives") rep.survivors.push_back(e);
  return rep;
}

}  // namespace subreg::deeq
