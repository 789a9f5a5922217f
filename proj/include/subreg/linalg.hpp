// Dense exact linear algebra over Q and Q(c).
#pragma once

#include <optional>
#include <vector>

#include "exactnum.hpp"

namespace subreg::linalg {

using exactnum::CycloReal;
using exactnum::Q;

template <class T>
struct Ops;

template <>
struct Ops<Q> {
  static bool zero(const Q& x) { return x == 0; }
  static Q make(const Q&, long v) { return Q(v); }
};

template <>
struct Ops<CycloReal> {
  static bool zero(const CycloReal& x) { return x.is_zero(); }
  static CycloReal make(const CycloReal& p, long v) { return CycloReal(p.ctx(), Q(v)); }
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int r, int c, const T& fill) : r_(r), c_(c), d_(static_cast<size_t>(r) * c, fill) {}
  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> d_;
};

using IntMat = std::vector<std::vector<long>>;

inline IntMat int_zero(int n, int m) { return IntMat(n, std::vector<long>(m, 0)); }
inline IntMat int_identity(int n) {
  auto r = int_zero(n, n);
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
  int n = static_cast<int>(a.size()), k = static_cast<int>(b.size()), m = b.empty() ? 0 : static_cast<int>(b[0].size());
  auto r = int_zero(n, m);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (!a[i][t]) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

inline IntMat int_add(IntMat a, const IntMat& b, long s = 1) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += s * b[i][j];
  return a;
}

template <class T>
Matrix<T> from_int(const IntMat& m, const T& proto) {
  int n = static_cast<int>(m.size()), c = n ? static_cast<int>(m[0].size()) : 0;
  Matrix<T> r(n, c, Ops<T>::make(proto, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < c; ++j) r(i, j) = Ops<T>::make(proto, static_cast<long>(m[i][j]));
  return r;
}

// Row reduction to reduced echelon form; returns pivot columns.
template <class T>
std::vector<int> rref(Matrix<T>& a) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = row;
    while (p < a.rows() && Ops<T>::zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (int k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(row, k));
    T inv = Ops<T>::make(a(row, col), 1) / a(row, col);
    for (int k = col; k < a.cols(); ++k)
      if (!Ops<T>::zero(a(row, k))) a(row, k) = a(row, k) * inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || Ops<T>::zero(a(r, col))) continue;
      T t = a(r, col);
      for (int k = col; k < a.cols(); ++k)
        if (!Ops<T>::zero(a(row, k))) a(r, k) = a(r, k) - t * a(row, k);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

template <class T>
T det(Matrix<T> a) {
  int n = a.rows();
  T one = Ops<T>::make(a(0, 0), 1);
  T d = one;
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && Ops<T>::zero(a(p, col))) ++p;
    if (p == n) return Ops<T>::make(one, 0);
    if (p != col) {
      for (int k = 0; k < n; ++k) std::swap(a(p, k), a(col, k));
      d = Ops<T>::make(one, 0) - d;
    }
    d = d * a(col, col);
    T inv = one / a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (Ops<T>::zero(a(r, col))) continue;
      T t = a(r, col) * inv;
      for (int k = col; k < n; ++k)
        if (!Ops<T>::zero(a(col, k))) a(r, k) = a(r, k) - t * a(col, k);
    }
  }
  return d;
}

template <class T>
int rank(Matrix<T> a) {
  return static_cast<int>(rref(a).size());
}

template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a) {
  T zero = Ops<T>::make(a(0, 0), 0), one = Ops<T>::make(a(0, 0), 1);
  auto piv = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(a.cols(), zero);
    v[f] = one;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = zero - a(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of A x = b, if one exists.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  Matrix<T> aug(a.rows(), a.cols() + 1, Ops<T>::make(b[0], 0));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), Ops<T>::make(b[0], 0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), a.cols());
  return x;
}

inline Q int_det(const IntMat& m) {
  if (m.empty()) return Q(1);
  return det(from_int(m, Q(0)));
}

}  // namespace subreg::linalg
