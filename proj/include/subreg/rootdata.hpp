// Finite root systems, weights, Weyl characters.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exactnum.hpp"

namespace subreg::rootdata {

using exactnum::DomainError;
using exactnum::Q;

enum class Series { A, B, C, D, E, F, G };

struct LieType {
  Series series;
  int rank;
  int m;  // lacing number
  auto operator<=>(const LieType&) const = default;
};

inline char series_char(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

inline std::string type_name(const LieType& t) { return std::string(1, series_char(t.series)) + std::to_string(t.rank); }

inline LieType make_type(char s, int n) {
  switch (s) {
    case 'A': if (n >= 1) return {Series::A, n, 1}; break;
    case 'B': if (n >= 2) return {Series::B, n, 2}; break;
    case 'C': if (n >= 2) return {Series::C, n, 2}; break;
    case 'D': if (n >= 4) return {Series::D, n, 1}; break;
    case 'E': if (n >= 6 && n <= 8) return {Series::E, n, 1}; break;
    case 'F': if (n == 4) return {Series::F, 4, 2}; break;
    case 'G': if (n == 2) return {Series::G, 2, 3}; break;
    default: break;
  }
  throw DomainError("unsupported Lie type " + std::string(1, s) + std::to_string(n));
}

// Accepts "G2", "c3", or a bare series letter together with a rank.
inline LieType parse_type(const std::string& s, int rank = 0) {
  if (s.empty()) throw DomainError("empty type");
  char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int n = rank;
  if (s.size() > 1) n = std::stoi(s.substr(1));
  return make_type(ch, n);
}

struct Weight {
  std::vector<int> c;
  auto operator<=>(const Weight&) const = default;
  size_t size() const { return c.size(); }
  int operator[](size_t i) const { return c[i]; }
  int& operator[](size_t i) { return c[i]; }
};

inline Weight operator+(Weight a, const Weight& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Weight operator-(Weight a, const Weight& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Weight operator*(int k, Weight a) {
  for (auto& x : a.c) x *= k;
  return a;
}

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

// Coefficients of Weyl characters chi_lambda.
struct WeylChar {
  std::map<Weight, long> terms;

  void add(const Weight& w, long k) {
    if (!k) return;
    auto& v = terms[w];
    v += k;
    if (!v) terms.erase(w);
  }
  WeylChar& operator+=(const WeylChar& o) {
    for (auto& [w, k] : o.terms) add(w, k);
    return *this;
  }
  WeylChar& operator-=(const WeylChar& o) {
    for (auto& [w, k] : o.terms) add(w, -k);
    return *this;
  }
  WeylChar scaled(long s) const {
    WeylChar r;
    for (auto& [w, k] : terms) r.add(w, s * k);
    return r;
  }
  long coeff(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }
  bool operator==(const WeylChar&) const = default;
};

struct Root {
  std::vector<int> coeffs;  // in the simple-root basis
  Weight w;                 // in the fundamental-weight basis
  long norm2;          // (alpha, alpha); short roots have 2
  int height() const {
    int h = 0;
    for (int x : coeffs) h += x;
    return h;
  }
};

class RootSystem {
 public:
  explicit RootSystem(LieType t) : type_(t) {
    int n = t.rank;
    B_.assign(n, std::vector<long>(n, 0));
    auto bond = [&](int i, int j, long v) { B_[i - 1][j - 1] = B_[j - 1][i - 1] = v; };
    auto diag = [&](int i, long v) { B_[i - 1][i - 1] = v; };
    switch (t.series) {
      case Series::A:
        for (int i = 1; i <= n; ++i) diag(i, 2);
        for (int i = 1; i < n; ++i) bond(i, i + 1, -1);
        break;
      case Series::B:
        for (int i = 1; i < n; ++i) diag(i, 4);
        diag(n, 2);
        for (int i = 1; i < n; ++i) bond(i, i + 1, -2);
        break;
      case Series::C:
        for (int i = 1; i < n; ++i) diag(i, 2);
        diag(n, 4);
        for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1);
        bond(n - 1, n, -2);
        break;
      case Series::D:
        for (int i = 1; i <= n; ++i) diag(i, 2);
        for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1);
        bond(n - 2, n, -1);
        break;
      case Series::E:
        for (int i = 1; i <= n; ++i) diag(i, 2);
        bond(1, 3, -1);
        bond(2, 4, -1);
        for (int i = 3; i < n; ++i) bond(i, i + 1, -1);
        break;
      case Series::F:
        diag(1, 4), diag(2, 4), diag(3, 2), diag(4, 2);
        bond(1, 2, -2), bond(2, 3, -2), bond(3, 4, -1);
        break;
      case Series::G:
        diag(1, 2), diag(2, 6);
        bond(1, 2, -3);
        break;
    }
    C_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) C_[i][j] = static_cast<int>(2 * B_[i][j] / B_[j][j]);
    build_gram();
    build_roots();
    rho_.c.assign(n, 1);
  }

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return C_; }
  // (alpha_i, alpha_j) with short roots of squared length 2.
  const std::vector<std::vector<long>>& root_gram() const { return B_; }
  // Gram matrix on fundamental weights.
  const std::vector<std::vector<Q>>& gram() const { return G_; }
  const std::vector<Root>& positive_roots() const { return pos_; }
  const Weight& rho() const { return rho_; }
  const Root& highest_root() const { return pos_[beta0_]; }
  const Root& highest_short_root() const { return pos_[beta1_]; }
  Weight simple_root(int i) const { return Weight{C_[i]}; }
  Weight zero() const { return Weight{std::vector<int>(rank(), 0)}; }
  Weight fundamental(int i) const {
    Weight w = zero();
    w[i] = 1;
    return w;
  }

  // Scaled integer inner product: (x,y) = inner_scaled(x,y) / gram_den().
  long inner_scaled(const Weight& x, const Weight& y) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (!x[i]) continue;
      for (int j = 0; j < rank(); ++j) s += static_cast<long>(x[i]) * Gs_[i][j] * y[j];
    }
    return s;
  }
  long gram_den() const { return den_; }
  Q inner(const Weight& x, const Weight& y) const { return exactnum::frac(inner_scaled(x, y), den_); }

  // <x, alpha^vee> for a root alpha; an integer for integral x.
  long coroot_pairing(const Weight& x, const Root& a) const {
    long s = 0;
    for (int k = 0; k < rank(); ++k) s += static_cast<long>(a.coeffs[k]) * x[k] * B_[k][k] / 2;
    return 2 * s / a.norm2;
  }

  Q dot_inner(const Weight& l) const { return inner(l, l + 2 * rho_); }
  Q height(const Weight& l) const { return inner(l, 2 * rho_); }

  bool is_dominant(const Weight& l) const {
    return std::all_of(l.c.begin(), l.c.end(), [](int v) { return v >= 0; });
  }

  Weight reflect(const Weight& x, int i) const {
    Weight r = x;
    int k = x[i];
    for (int j = 0; j < rank(); ++j) r[j] -= k * C_[i][j];
    return r;
  }

  Weight dominant_conjugate(Weight x) const {
    for (;;) {
      int i = 0;
      while (i < rank() && x[i] >= 0) ++i;
      if (i == rank()) return x;
      x = reflect(x, i);
    }
  }

  std::vector<Weight> orbit(const Weight& x) const {
    std::set<Weight> seen{x};
    std::deque<Weight> q{x};
    while (!q.empty()) {
      Weight y = q.front();
      q.pop_front();
      for (int i = 0; i < rank(); ++i) {
        Weight z = reflect(y, i);
        if (seen.insert(z).second) q.push_back(z);
      }
    }
    return {seen.begin(), seen.end()};
  }

  // chi_kappa for arbitrary kappa equals sign * chi_dom, or zero.
  struct Straightened {
    bool zero;
    int sign;
    Weight dom;
  };
  Straightened straighten(const Weight& k) const {
    Weight x = k + rho_;
    int sign = 1;
    for (;;) {
      int i = 0;
      while (i < rank() && x[i] > 0) ++i;
      if (i == rank()) return {false, sign, x - rho_};
      if (x[i] == 0) return {true, 0, {}};
      x = reflect(x, i);
      sign = -sign;
    }
  }

  mpz_class weyl_dim(const Weight& l) const {
    Weight x = l + rho_;
    Q num = 1, den = 1;
    for (auto& a : pos_) {
      num *= inner_scaled(x, a.w);
      den *= inner_scaled(rho_, a.w);
    }
    Q r = num / den;
    if (r.get_den() != 1) throw DomainError("non-integral Weyl dimension");
    return r.get_num();
  }

  // Dominant weights of V(lambda) with multiplicities (Freudenthal).
  const std::map<Weight, long>& dominant_multiplicities(const Weight& l) const {
    {
      std::lock_guard lock(cache_mu_);
      auto it = dom_cache_.find(l);
      if (it != dom_cache_.end()) return it->second;
    }
    if (!is_dominant(l)) throw DomainError("weight not dominant");
    std::set<Weight> doms{l};
    std::deque<Weight> q{l};
    while (!q.empty()) {
      Weight y = q.front();
      q.pop_front();
      for (auto& a : pos_) {
        Weight z = y - a.w;
        if (is_dominant(z) && doms.insert(z).second) q.push_back(z);
      }
    }
    std::vector<Weight> order(doms.begin(), doms.end());
    std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
      auto ha = inner_scaled(a, rho_), hb = inner_scaled(b, rho_);
      return ha != hb ? ha > hb : a > b;
    });
    std::map<Weight, long> m;
    Weight lr = l + rho_;
    long top = inner_scaled(lr, lr);
    for (auto& mu : order) {
      if (mu == l) {
        m[mu] = 1;
        continue;
      }
      long acc = 0;
      for (auto& a : pos_) {
        for (int k = 1;; ++k) {
          Weight nu = mu + k * a.w;
          auto f = m.find(dominant_conjugate(nu));
          if (f == m.end()) break;
          acc += f->second * inner_scaled(nu, a.w);
        }
      }
      Weight mr = mu + rho_;
      long den = top - inner_scaled(mr, mr);
      if ((2 * acc) % den) throw DomainError("Freudenthal produced a non-integer");
      long v = 2 * acc / den;
      if (v) m[mu] = v;
    }
    std::lock_guard lock(cache_mu_);
    return dom_cache_.emplace(l, std::move(m)).first->second;
  }

  const std::map<Weight, long>& weight_multiplicities(const Weight& l) const {
    {
      std::lock_guard lock(cache_mu_);
      auto it = full_cache_.find(l);
      if (it != full_cache_.end()) return it->second;
    }
    std::map<Weight, long> full;
    for (auto& [mu, k] : dominant_multiplicities(l))
      for (auto& w : orbit(mu)) full[w] = k;
    std::lock_guard lock(cache_mu_);
    return full_cache_.emplace(l, std::move(full)).first->second;
  }

  // chi_a * chi_b by Brauer-Klimyk.
  WeylChar tensor_chi(const Weight& a, const Weight& b) const {
    const Weight& small = weyl_dim(a) < weyl_dim(b) ? a : b;
    const Weight& big = (&small == &a) ? b : a;
    WeylChar r;
    for (auto& [nu, k] : weight_multiplicities(small)) {
      auto s = straighten(big + nu);
      if (!s.zero) r.add(s.dom, s.sign * k);
    }
    return r;
  }

  WeylChar multiply(const WeylChar& x, const WeylChar& y) const {
    WeylChar r;
    for (auto& [a, ka] : x.terms)
      for (auto& [b, kb] : y.terms) r += tensor_chi(a, b).scaled(ka * kb);
    return r;
  }

  mpz_class dimension(const WeylChar& x) const {
    mpz_class d = 0;
    for (auto& [w, k] : x.terms) d += weyl_dim(w) * k;
    return d;
  }

  // Formal character as weight multiplicities.
  std::map<Weight, long> formal(const WeylChar& x) const {
    std::map<Weight, long> r;
    for (auto& [w, k] : x.terms)
      for (auto& [mu, m] : weight_multiplicities(w)) r[mu] += k * m;
    std::erase_if(r, [](auto& p) { return p.second == 0; });
    return r;
  }

 private:
  void build_gram() {
    int n = rank();
    // invert C over Q
    std::vector<std::vector<Q>> a(n, std::vector<Q>(2 * n, Q(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = C_[i][j];
      a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int p = col;
      while (a[p][col] == 0) ++p;
      std::swap(a[p], a[col]);
      Q inv = 1 / a[col][col];
      for (auto& v : a[col]) v *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Q t = a[r][col];
        for (int k = 0; k < 2 * n; ++k) a[r][k] -= t * a[col][k];
      }
    }
    G_.assign(n, std::vector<Q>(n));
    mpz_class den = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        G_[i][j] = a[i][n + j] * exactnum::frac(B_[j][j], 2);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), G_[i][j].get_den_mpz_t());
      }
    den_ = den.get_si();
    Gs_.assign(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Q v = G_[i][j] * den_;
        Gs_[i][j] = v.get_num().get_si();
      }
  }

  void build_roots() {
    int n = rank();
    auto to_w = [&](const std::vector<int>& c) {
      Weight w = zero();
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) w[j] += c[k] * C_[k][j];
      return w;
    };
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> q;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      seen.insert(e);
      q.push_back(e);
    }
    while (!q.empty()) {
      auto c = q.front();
      q.pop_front();
      Weight w = to_w(c);
      for (int i = 0; i < n; ++i) {
        auto d = c;
        d[i] -= w[i];
        if (seen.insert(d).second) q.push_back(d);
      }
    }
    long minlen = 0;
    for (auto& c : seen) {
      if (std::any_of(c.begin(), c.end(), [](int v) { return v < 0; })) continue;
      long nn = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) nn += static_cast<long>(c[i]) * B_[i][j] * c[j];
      pos_.push_back({c, to_w(c), nn});
      minlen = minlen ? std::min(minlen, nn) : nn;
    }
    std::sort(pos_.begin(), pos_.end(), [](const Root& a, const Root& b) {
      return a.height() != b.height() ? a.height() < b.height() : a.coeffs > b.coeffs;
    });
    beta0_ = static_cast<int>(pos_.size()) - 1;
    beta1_ = -1;
    for (int i = 0; i < static_cast<int>(pos_.size()); ++i)
      if (pos_[i].norm2 == minlen) beta1_ = i;
  }

  LieType type_;
  std::vector<std::vector<long>> B_;
  std::vector<std::vector<int>> C_;
  std::vector<std::vector<Q>> G_;
  std::vector<std::vector<long>> Gs_;
  long den_ = 1;
  std::vector<Root> pos_;
  int beta0_ = 0, beta1_ = 0;
  Weight rho_;
  mutable std::map<Weight, std::map<Weight, long>> dom_cache_;
  mutable std::map<Weight, std::map<Weight, long>> full_cache_;
  mutable std::mutex cache_mu_;  // memo tables only; results do not depend on fill order
};

inline std::shared_ptr<const RootSystem> root_system(LieType t) {
  static std::map<LieType, std::shared_ptr<const RootSystem>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  auto r = std::make_shared<const RootSystem>(t);
  cache.emplace(t, r);
  return r;
}

// Character database schema: {"type": "G2", "terms": [{"weight": [a, b], "coeff": n}, ...]}
// with terms in increasing lexicographic weight order.
inline nlohmann::json to_json(const LieType& t, const WeylChar& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [w, k] : x.terms) terms.push_back({{"weight", w.c}, {"coeff", k}});
  return {{"type", type_name(t)}, {"terms", terms}};
}

inline WeylChar from_json(const nlohmann::json& j) {
  WeylChar r;
  for (auto& t : j.at("terms")) r.add(Weight{t.at("weight").get<std::vector<int>>()}, t.at("coeff").get<long>());
  return r;
}

}  // namespace subreg::rootdata
