// Exact arithmetic in the real cyclotomic field Q(c), c = 2cos(pi/l).
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg::exactnum {

using Q = mpq_class;
using QPoly = std::vector<Q>;  // low degree first

// mpq_class(a, b) does not reduce; GMP wants canonical operands.
inline Q frac(long a, long b) {
  Q r(a, b);
  r.canonicalize();
  return r;
}

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Q(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Q(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Exact division; throws if b does not divide a.
inline QPoly poly_divexact(QPoly a, const QPoly& b) {
  trim(a);
  if (b.empty()) throw DomainError("division by zero polynomial");
  if (a.size() < b.size()) {
    if (a.empty()) return {};
    throw DomainError("inexact polynomial division");
  }
  QPoly q(a.size() - b.size() + 1, Q(0));
  for (size_t k = q.size(); k-- > 0;) {
    Q t = a[k + b.size() - 1] / b.back();
    q[k] = t;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= t * b[j];
  }
  trim(a);
  if (!a.empty()) throw DomainError("inexact polynomial division");
  return q;
}

inline QPoly cyclotomic(int n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  QPoly p(n + 1, Q(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divexact(p, cyclotomic(d));
  return p;
}

inline int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

// Closed rational interval.
struct Interval {
  Q lo, hi;
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Q width() const { return hi - lo; }
};

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator*(const Interval& a, const Interval& b) {
  Q p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline Q eval(const QPoly& p, const Q& x) {
  Q r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

inline Interval eval(const QPoly& p, const Interval& x) {
  Interval r{Q(0), Q(0)};
  for (size_t i = p.size(); i-- > 0;) {
    r = r * x;
    r.lo += p[i];
    r.hi += p[i];
  }
  return r;
}

inline Q q_from_double(double x) {
  Q r(x);
  return r;
}

// Field data for Q(2cos(pi/l)). Root intervals refine lazily.
class FieldContext {
 public:
  explicit FieldContext(int l) : l_(l) {
    if (l < 2) throw DomainError("field requires l >= 2");
    QPoly phi = cyclotomic(2 * l);
    int deg2 = static_cast<int>(phi.size()) - 1;
    d_ = deg2 / 2;
    // z^{-d} Phi(z) rewritten in x = z + 1/z via Dickson polynomials
    std::vector<QPoly> D{{Q(2)}, {Q(0), Q(1)}};
    for (int k = 2; k <= d_; ++k) D.push_back(poly_sub(poly_mul({Q(0), Q(1)}, D[k - 1]), D[k - 2]));
    minpoly_ = {phi[d_]};
    for (int k = 1; k <= d_; ++k) {
      QPoly t = D[k];
      for (auto& c : t) c *= phi[d_ + k];
      if (minpoly_.size() < t.size()) minpoly_.resize(t.size(), Q(0));
      for (size_t i = 0; i < t.size(); ++i) minpoly_[i] += t[i];
    }
    trim(minpoly_);
    if (static_cast<int>(minpoly_.size()) != d_ + 1 || minpoly_.back() != 1)
      throw DomainError("minimal polynomial construction failed");
    for (int k = 1; k < l; k += 2)
      if (std::gcd(k, 2 * l) == 1) conj_k_.push_back(k);
    if (static_cast<int>(conj_k_.size()) != d_) throw DomainError("conjugate count mismatch");
    for (int k : conj_k_) {
      double a = 2.0 * std::cos(std::numbers::pi * k / l);
      Interval iv{q_from_double(a - 1e-9), q_from_double(a + 1e-9)};
      Q flo = eval(minpoly_, iv.lo), fhi = eval(minpoly_, iv.hi);
      if (sgn(flo) * sgn(fhi) >= 0) throw DomainError("root isolation failed");
      roots_.push_back(iv);
    }
  }

  int l() const { return l_; }
  int degree() const { return d_; }
  const QPoly& minpoly() const { return minpoly_; }
  // k with conjugate c_j = 2cos(k pi / l); index 0 is the distinguished embedding.
  const std::vector<int>& conjugate_indices() const { return conj_k_; }

  const Interval& root(int j) const { return roots_[j]; }

  // Halve root interval j by exact bisection.
  void refine(int j) const {
    Interval& iv = roots_[j];
    Q mid = (iv.lo + iv.hi) / 2;
    Q fm = eval(minpoly_, mid);
    if (fm == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    if (sgn(fm) == sgn(eval(minpoly_, iv.lo)))
      iv.lo = mid;
    else
      iv.hi = mid;
  }

  void refine_to(int j, const Q& width) const {
    while (roots_[j].width() > width) refine(j);
  }

  std::string minpoly_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < minpoly_.size(); ++i) os << (i ? "," : "") << minpoly_[i].get_str();
    return os.str();
  }

  // FNV-1a over the coefficient string.
  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : minpoly_string()) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int l_;
  int d_;
  QPoly minpoly_;
  std::vector<int> conj_k_;
  mutable std::vector<Interval> roots_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

inline FieldPtr field(int l) {
  static std::map<int, FieldPtr> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const FieldContext>(l);
  cache.emplace(l, f);
  return f;
}

// Element of Q(c) as a polynomial in c of degree < field degree.
class CycloReal {
 public:
  CycloReal() = default;
  CycloReal(FieldPtr f, QPoly a) : f_(std::move(f)), a_(std::move(a)) { normalize(); }
  CycloReal(FieldPtr f, const Q& r) : f_(std::move(f)), a_{r} { normalize(); }
  CycloReal(FieldPtr f, long r) : CycloReal(std::move(f), Q(r)) {}
  CycloReal(FieldPtr f, int r) : CycloReal(std::move(f), Q(r)) {}

  static CycloReal gen(FieldPtr f) {
    QPoly p{Q(0), Q(1)};
    return CycloReal(std::move(f), p);
  }

  const FieldPtr& ctx() const { return f_; }
  const QPoly& coeffs() const { return a_; }
  Q coeff(int i) const { return i < static_cast<int>(a_.size()) ? a_[i] : Q(0); }

  bool is_zero() const { return a_.empty(); }
  bool is_rational() const { return a_.size() <= 1; }
  bool is_integer() const { return is_rational() && coeff(0).get_den() == 1; }
  // Z[c] is the ring of integers of Q(c).
  bool is_algebraic_integer() const {
    for (auto& x : a_)
      if (x.get_den() != 1) return false;
    return true;
  }

  friend CycloReal operator+(const CycloReal& x, const CycloReal& y) {
    auto f = pick(x, y);
    QPoly r(std::max(x.a_.size(), y.a_.size()), Q(0));
    for (size_t i = 0; i < x.a_.size(); ++i) r[i] += x.a_[i];
    for (size_t i = 0; i < y.a_.size(); ++i) r[i] += y.a_[i];
    return CycloReal(f, std::move(r));
  }
  friend CycloReal operator-(const CycloReal& x) {
    QPoly r = x.a_;
    for (auto& c : r) c = -c;
    return CycloReal(x.f_, std::move(r));
  }
  friend CycloReal operator-(const CycloReal& x, const CycloReal& y) { return x + (-y); }
  friend CycloReal operator*(const CycloReal& x, const CycloReal& y) {
    auto f = pick(x, y);
    return CycloReal(f, poly_mul(x.a_, y.a_));
  }
  friend CycloReal operator*(const CycloReal& x, long k) {
    QPoly r = x.a_;
    for (auto& c : r) c *= k;
    return CycloReal(x.f_, std::move(r));
  }
  friend CycloReal operator*(long k, const CycloReal& x) { return x * k; }
  friend CycloReal operator*(const CycloReal& x, const Q& k) {
    QPoly r = x.a_;
    for (auto& c : r) c *= k;
    return CycloReal(x.f_, std::move(r));
  }
  friend CycloReal operator/(const CycloReal& x, const CycloReal& y) { return x * y.inverse(); }
  CycloReal& operator+=(const CycloReal& y) { return *this = *this + y; }
  CycloReal& operator-=(const CycloReal& y) { return *this = *this - y; }
  CycloReal& operator*=(const CycloReal& y) { return *this = *this * y; }

  friend bool operator==(const CycloReal& x, const CycloReal& y) { return (x - y).is_zero(); }

  // Matrix of multiplication by this element on the power basis.
  std::vector<std::vector<Q>> mult_matrix() const {
    int d = f_->degree();
    std::vector<std::vector<Q>> m(d, std::vector<Q>(d, Q(0)));
    CycloReal basis(f_, Q(1));
    CycloReal c = gen(f_);
    for (int j = 0; j < d; ++j) {
      CycloReal col = *this * basis;
      for (int i = 0; i < d; ++i) m[i][j] = col.coeff(i);
      basis = basis * c;
    }
    return m;
  }

  CycloReal inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(c)");
    if (is_rational()) return CycloReal(f_, Q(1) / a_[0]);
    auto m = mult_matrix();
    int d = f_->degree();
    std::vector<Q> rhs(d, Q(0));
    rhs[0] = 1;
    for (int col = 0; col < d; ++col) {
      int piv = col;
      while (m[piv][col] == 0) ++piv;
      std::swap(m[piv], m[col]);
      std::swap(rhs[piv], rhs[col]);
      Q inv = 1 / m[col][col];
      for (int r = 0; r < d; ++r) {
        if (r == col || m[r][col] == 0) continue;
        Q t = m[r][col] * inv;
        for (int k = col; k < d; ++k) m[r][k] -= t * m[col][k];
        rhs[r] -= t * rhs[col];
      }
    }
    QPoly y(d);
    for (int i = 0; i < d; ++i) y[i] = rhs[i] / m[i][i];
    return CycloReal(f_, std::move(y));
  }

  Q norm() const {
    auto m = mult_matrix();
    int d = f_->degree();
    Q det = 1;
    for (int col = 0; col < d; ++col) {
      int piv = col;
      while (piv < d && m[piv][col] == 0) ++piv;
      if (piv == d) return 0;
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (int r = col + 1; r < d; ++r) {
        if (m[r][col] == 0) continue;
        Q t = m[r][col] / m[col][col];
        for (int k = col; k < d; ++k) m[r][k] -= t * m[col][k];
      }
    }
    return det;
  }

  // Certified interval for the image under conjugate embedding j.
  Interval enclose(int j) const { return eval(a_, f_->root(j)); }

  // Sign under embedding j, refining until the enclosure excludes zero.
  int sign(int j = 0) const {
    if (is_zero()) return 0;
    for (;;) {
      Interval v = enclose(j);
      if (v.lo > 0) return 1;
      if (v.hi < 0) return -1;
      f_->refine(j);
    }
  }

  double to_double(int j = 0) const {
    f_->refine_to(j, Q(1, 1) / Q(mpz_class(1) << 120));
    Interval v = enclose(j);
    Q mid = (v.lo + v.hi) / 2;
    return mid.get_d();
  }

  // Image under the Galois automorphism c -> 2cos(k_j pi / l).
  CycloReal galois(int j) const;

  std::vector<double> conjugate_values() const {
    std::vector<double> r;
    for (int j = 0; j < f_->degree(); ++j) r.push_back(to_double(j));
    return r;
  }

  std::string str() const {
    if (a_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a_.size(); ++i) {
      if (a_[i] == 0) continue;
      Q v = a_[i];
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      Q av = abs(v);
      if (i == 0) os << av.get_str();
      else {
        if (av != 1) os << av.get_str() << "*";
        os << "c";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> r;
    for (int i = 0; i < f_->degree(); ++i) r.push_back(coeff(i).get_str());
    return r;
  }

 private:
  static FieldPtr pick(const CycloReal& x, const CycloReal& y) {
    if (!x.f_) return y.f_;
    if (!y.f_) return x.f_;
    if (x.f_ != y.f_ && x.f_->l() != y.f_->l()) throw DomainError("mixing elements of different fields");
    return x.f_;
  }
  void normalize() {
    if (!f_) throw DomainError("element without field context");
    const QPoly& m = f_->minpoly();
    size_t d = m.size() - 1;
    for (size_t k = a_.size(); k-- > d;) {
      Q t = a_[k];
      if (t == 0) continue;
      for (size_t j = 0; j <= d; ++j) a_[k - d + j] -= t * m[j];
    }
    if (a_.size() > d) a_.resize(d);
    trim(a_);
  }

  FieldPtr f_;
  QPoly a_;
};

// Total order under the distinguished embedding.
inline int compare(const CycloReal& x, const CycloReal& y) { return (x - y).sign(0); }
inline bool operator<(const CycloReal& x, const CycloReal& y) { return compare(x, y) < 0; }
inline bool operator>(const CycloReal& x, const CycloReal& y) { return compare(x, y) > 0; }
inline bool operator<=(const CycloReal& x, const CycloReal& y) { return compare(x, y) <= 0; }
inline bool operator>=(const CycloReal& x, const CycloReal& y) { return compare(x, y) >= 0; }

// 2cos(k pi / l) as an element of Q(c).
inline CycloReal two_cos(int k, int l) {
  auto f = field(l);
  k = std::abs(k);
  CycloReal c = CycloReal::gen(f);
  CycloReal d0(f, Q(2)), d1 = c;
  if (k == 0) return d0;
  for (int i = 1; i < k; ++i) {
    CycloReal d2 = c * d1 - d0;
    d0 = d1;
    d1 = d2;
  }
  return d1;
}

inline CycloReal CycloReal::galois(int j) const {
  CycloReal img = two_cos(f_->conjugate_indices().at(j), f_->l());
  CycloReal r(f_, Q(0)), p(f_, Q(1));
  for (auto& x : a_) {
    r += p * x;
    p = p * img;
  }
  return r;
}

// Quantum integer [k]_l = sin(k pi/l)/sin(pi/l).
inline CycloReal qint(int k, int l) {
  if (k < 1 || k >= l) throw DomainError("qint: k out of range");
  auto f = field(l);
  CycloReal c = CycloReal::gen(f);
  CycloReal u0(f, Q(0)), u1(f, Q(1));
  for (int i = 1; i < k; ++i) {
    CycloReal u2 = c * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

// (2 sin(k pi / l))^2
inline CycloReal sin2(int k, int l) {
  if (k < 1 || k >= l) throw DomainError("sin2: k out of range");
  return CycloReal(field(l), Q(2)) - two_cos(2 * k, l);
}

// S_k(l) = l / prod_{i<=k} (2 sin(i pi / l))^2
inline CycloReal s_formula(int k, int l) {
  if (k < 1 || k >= l) throw DomainError("s_formula: k out of range");
  CycloReal p(field(l), Q(1));
  for (int i = 1; i <= k; ++i) p = p * sin2(i, l);
  return CycloReal(field(l), Q(l)) / p;
}

// Certified enclosure of sqrt(x) at the distinguished embedding, width below eps.
inline Interval sqrt_enclosure(const CycloReal& x, const Q& eps) {
  if (x.sign(0) < 0) throw DomainError("sqrt of a negative value");
  Q lo = 0, hi = 1;
  while (compare(CycloReal(x.ctx(), hi * hi), x) < 0) hi *= 2;
  while (hi - lo > eps) {
    Q mid = (lo + hi) / 2;
    if (compare(CycloReal(x.ctx(), mid * mid), x) <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace subreg::exactnum
