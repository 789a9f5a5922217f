// Affine Weyl group acting on rho-shifted weights, alcoves, and the subregular cell.
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rootdata.hpp"

namespace subreg::affine {

using rootdata::DomainError;
using rootdata::LieType;
using rootdata::Q;
using rootdata::Root;
using rootdata::RootSystem;
using rootdata::Series;
using rootdata::Weight;

// Integral affine map x -> L x + b on rho-shifted coordinates.
struct AffElem {
  std::vector<int> L;  // row-major n x n
  std::vector<int> b;
  auto operator<=>(const AffElem&) const = default;
};

using Word = std::vector<int>;  // 0 is the affine reflection

inline std::string word_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += "s" + std::to_string(i);
  return s;
}

struct Alcove {
  AffElem w;
  Weight x;  // w(rho); identifies w
  int length;
  Word word;
};

struct CellData {
  std::vector<Alcove> elements;  // ordered by (length, word)
  graph::Graph graph;
  std::string shape;
  std::optional<int> wb, v;  // indices into elements
  int s = 0, t = 0;          // simple reflections used to define v = wb s t
};

class AffineWeylGroup {
 public:
  AffineWeylGroup(LieType type, int l) : R_(rootdata::root_system(type)), l_(l) {
    if (l < 2) throw DomainError("l must be at least 2");
    divisible_ = (l % type.m == 0);
    beta_ = divisible_ ? R_->highest_root() : R_->highest_short_root();
    long d = beta_.norm2 / 2;
    if ((2L * l) % beta_.norm2) throw DomainError("affine wall not integral");
    wall_ = 2L * l / beta_.norm2;
    (void)d;
    if (!(R_->coroot_pairing(R_->rho(), beta_) < wall_))
      throw DomainError("l below the bound: rho is not interior to the fundamental alcove");
    n_ = type.rank;
    for (int i = 0; i <= n_; ++i) gens_.push_back(make_simple(i));
  }

  const RootSystem& roots() const { return *R_; }
  LieType type() const { return R_->type(); }
  int l() const { return l_; }
  int rank() const { return n_; }
  bool divisible() const { return divisible_; }
  const Root& beta() const { return beta_; }
  long wall_level() const { return wall_; }
  const Weight& rho() const { return R_->rho(); }

  Weight apply(const AffElem& w, const Weight& x) const {
    Weight r{w.b};
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r[i] += w.L[i * n_ + j] * x[j];
    return r;
  }

  // u o w
  AffElem compose(const AffElem& u, const AffElem& w) const {
    AffElem r{std::vector<int>(n_ * n_, 0), u.b};
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        int a = u.L[i * n_ + k];
        if (!a) continue;
        for (int j = 0; j < n_; ++j) r.L[i * n_ + j] += a * w.L[k * n_ + j];
        r.b[i] += a * w.b[k];
      }
    return r;
  }

  AffElem identity() const {
    AffElem e{std::vector<int>(n_ * n_, 0), std::vector<int>(n_, 0)};
    for (int i = 0; i < n_; ++i) e.L[i * n_ + i] = 1;
    return e;
  }
  const AffElem& simple(int i) const { return gens_.at(i); }

  AffElem from_word(const Word& w) const {
    AffElem r = identity();
    for (int i : w) r = compose(r, simple(i));
    return r;
  }

  AffElem inverse(const AffElem& w) const {
    // reflections are involutions; invert through a reduced word
    Word wd = reduced_word(w);
    std::reverse(wd.begin(), wd.end());
    return from_word(wd);
  }

  long pairing(const Weight& x) const { return R_->coroot_pairing(x, beta_); }

  // Number of walls separating rho and w(rho).
  int length(const AffElem& w) const { return separating(apply(w, rho())); }

  int separating(const Weight& y) const {
    int cnt = 0;
    for (auto& a : R_->positive_roots()) {
      long p = R_->coroot_pairing(y, a);
      long per = period(a);
      if (p % per == 0) throw DomainError("point lies on a wall");
      cnt += static_cast<int>(p > 0 ? p / per : (-p) / per + 1);
    }
    return cnt;
  }

  bool in_W0(const AffElem& w) const {
    Weight y = apply(w, rho());
    return std::all_of(y.c.begin(), y.c.end(), [](int v) { return v > 0; });
  }

  std::vector<int> right_descents(const AffElem& w) const {
    int lw = length(w);
    std::vector<int> d;
    for (int s = 0; s <= n_; ++s)
      if (length(compose(w, simple(s))) < lw) d.push_back(s);
    return d;
  }

  // Reduced word built by peeling the smallest right descent.
  Word reduced_word(AffElem w) const {
    Word r;
    for (;;) {
      auto d = right_descents(w);
      if (d.empty()) break;
      r.push_back(d.front());
      w = compose(w, simple(d.front()));
    }
    std::reverse(r.begin(), r.end());
    return r;
  }

  // m(s,t); 0 means infinite.
  int coxeter_m(int s, int t) const {
    if (s == t) return 1;
    AffElem st = compose(simple(s), simple(t));
    AffElem p = st;
    for (int k = 1; k <= 12; ++k) {
      if (p == identity()) return k;
      p = compose(p, st);
    }
    return 0;
  }

  // Fold x into the closed fundamental alcove; returns (y, u) with u(y) = x.
  std::pair<Weight, AffElem> fold(Weight x) const {
    AffElem u = identity();
    for (;;) {
      int i = 0;
      while (i < n_ && x[i] >= 0) ++i;
      int s = -1;
      if (i < n_) s = i + 1;
      else if (pairing(x) > wall_) s = 0;
      if (s < 0) break;
      x = apply(simple(s), x);
      u = compose(u, simple(s));
    }
    return {x, u};
  }

  struct Canonical {
    Weight lambda;          // representative in the closed fundamental alcove, unshifted
    std::vector<int> walls;  // simple reflections fixing it
  };
  Canonical orbit_canonical(const Weight& lambda) const {
    auto [y, u] = fold(lambda + rho());
    return {y - rho(), walls_of(y)};
  }

  std::vector<int> walls_of(const Weight& y) const {
    std::vector<int> J;
    if (pairing(y) == wall_) J.push_back(0);
    for (int i = 0; i < n_; ++i)
      if (y[i] == 0) J.push_back(i + 1);
    return J;
  }

  bool in_closed_fundamental(const Weight& y) const {
    return std::all_of(y.c.begin(), y.c.end(), [](int v) { return v >= 0; }) && pairing(y) <= wall_;
  }

  // Dominant alcoves whose closure contains the dominant weight lambda.
  std::vector<Alcove> alcoves_containing(const Weight& lambda) const {
    Weight x = lambda + rho();
    if (!R_->is_dominant(lambda)) throw DomainError("alcoves_containing expects a dominant weight");
    auto [y, u] = fold(x);
    auto J = walls_of(y);
    // alcoves around x are u v C_e with v in the parabolic subgroup W_J
    std::set<AffElem> seen{u};
    std::deque<AffElem> q{u};
    while (!q.empty()) {
      AffElem w = q.front();
      q.pop_front();
      for (int s : J) {
        AffElem z = compose(w, simple(s));
        if (seen.insert(z).second) q.push_back(z);
      }
    }
    std::vector<Alcove> out;
    for (auto& w : seen) out.push_back(make_alcove(w));
    std::sort(out.begin(), out.end(), [](const Alcove& a, const Alcove& b) {
      return a.length != b.length ? a.length < b.length : a.word < b.word;
    });
    return out;
  }

  Alcove make_alcove(const AffElem& w) const {
    Word wd = reduced_word(w);
    return {w, apply(w, rho()), static_cast<int>(wd.size()), wd};
  }

  // All of the dominant coset representatives up to a given length, by BFS.
  std::vector<Alcove> enumerate_W0(int max_len) const {
    std::vector<Alcove> out;
    std::map<Weight, int> idx;
    std::vector<AffElem> layer{identity()};
    out.push_back({identity(), rho(), 0, {}});
    idx[rho()] = 0;
    for (int len = 1; len <= max_len; ++len) {
      std::vector<AffElem> next;
      for (auto& w : layer) {
        const Word base = out[idx[apply(w, rho())]].word;
        for (int s = 0; s <= n_; ++s) {
          AffElem z = compose(w, simple(s));
          Weight zx = apply(z, rho());
          if (idx.count(zx)) continue;
          if (!std::all_of(zx.c.begin(), zx.c.end(), [](int v) { return v > 0; })) continue;
          if (separating(zx) != len) continue;
          Word wd = base;
          wd.push_back(s);
          idx[zx] = static_cast<int>(out.size());
          out.push_back({z, zx, len, wd});
          next.push_back(z);
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  // Elements with a unique reduced expression beginning with s0.
  CellData subregular_cell(int cap = 4000) const {
    auto t = type();
    if (t.series == Series::A || (t.series == Series::B && !divisible_) || (t.series == Series::C && divisible_))
      throw DomainError("subregular cell is not distinguished for " + rootdata::type_name(t) +
                        (divisible_ ? " (divisible l)" : " (undivisible l)"));
    std::vector<std::vector<int>> m(n_ + 1, std::vector<int>(n_ + 1));
    for (int a = 0; a <= n_; ++a)
      for (int b = 0; b <= n_; ++b) m[a][b] = coxeter_m(a, b);
    CellData cell;
    std::vector<std::pair<Word, AffElem>> stack{{{0}, simple(0)}};
    while (!stack.empty()) {
      auto [w, e] = stack.back();
      stack.pop_back();
      cell.elements.push_back({e, apply(e, rho()), static_cast<int>(w.size()), w});
      if (static_cast<int>(cell.elements.size()) > cap) throw DomainError("subregular cell enumeration exceeded cap");
      for (int s = 0; s <= n_; ++s) {
        if (s == w.back()) continue;
        // trailing alternating run in {s, last}
        int last = w.back(), run = 1;
        for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) {
          int want = ((static_cast<int>(w.size()) - 1 - k) % 2 == 0) ? last : s;
          if (w[k] != want) break;
          ++run;
        }
        if (m[s][last] != 0 && run >= m[s][last]) continue;
        AffElem z = compose(e, simple(s));
        if (length(z) != static_cast<int>(w.size()) + 1) continue;
        Word wz = w;
        wz.push_back(s);
        stack.push_back({wz, z});
      }
    }
    std::sort(cell.elements.begin(), cell.elements.end(), [](const Alcove& a, const Alcove& b) {
      return a.length != b.length ? a.length < b.length : a.word < b.word;
    });
    int N = static_cast<int>(cell.elements.size());
    cell.graph = graph::Graph(N);
    std::map<AffElem, int> pos;
    for (int i = 0; i < N; ++i) pos[cell.elements[i].w] = i;
    for (int i = 0; i < N; ++i)
      for (int s = 0; s <= n_; ++s) {
        auto it = pos.find(compose(cell.elements[i].w, simple(s)));
        if (it != pos.end() && it->second > i) cell.graph.add_edge(i, it->second);
      }
    auto name = graph::affine_type(cell.graph);
    cell.shape = name ? *name : "unrecognized";
    find_wb(cell, pos);
    return cell;
  }

  // Integral points of the closed fundamental alcove (rho-shifted).
  std::vector<Weight> closed_fundamental_points() const {
    std::vector<Weight> pts;
    Weight lim = R_->zero();
    for (int i = 0; i < n_; ++i) {
      long ci = R_->coroot_pairing(R_->fundamental(i), beta_);
      lim[i] = static_cast<int>(wall_ / ci);
    }
    Weight x = R_->zero();
    std::function<void(int)> rec = [&](int i) {
      if (i == n_) {
        if (pairing(x) <= wall_) pts.push_back(x);
        return;
      }
      for (int v = 0; v <= lim[i]; ++v) {
        x[i] = v;
        rec(i + 1);
      }
      x[i] = 0;
    };
    rec(0);
    return pts;
  }

  struct PA {
    std::vector<Weight> weights;  // ordered by height, then lexicographically
    std::vector<bool> interior;
  };

  bool survives(const Weight& lambda, const CellData& cell) const {
    std::set<AffElem> allowed{identity()};
    for (auto& a : cell.elements) allowed.insert(a.w);
    for (auto& a : alcoves_containing(lambda))
      if (!allowed.count(a.w)) return false;
    return true;
  }

  PA compute_PA(const CellData& cell) const {
    std::set<Weight> cand;
    auto pts = closed_fundamental_points();
    for (auto& a : cell.elements)
      for (auto& y : pts) {
        Weight x = apply(a.w, y);
        Weight lam = x - rho();
        if (R_->is_dominant(lam)) cand.insert(lam);
      }
    PA out;
    for (auto& lam : cand)
      if (survives(lam, cell)) out.weights.push_back(lam);
    sort_by_height(out.weights);
    for (auto& lam : out.weights) out.interior.push_back(alcoves_containing(lam).size() == 1);
    return out;
  }

  void sort_by_height(std::vector<Weight>& ws) const {
    std::sort(ws.begin(), ws.end(), [&](const Weight& a, const Weight& b) {
      Q ha = R_->height(a), hb = R_->height(b);
      return ha != hb ? ha < hb : a < b;
    });
  }

  // Interior integral weights of the fundamental alcove (regular blocks).
  std::vector<Weight> interior_fundamental_weights() const {
    std::vector<Weight> r;
    for (auto& y : closed_fundamental_points())
      if (walls_of(y).empty()) r.push_back(y - rho());
    sort_by_height(r);
    return r;
  }

 private:
  long period(const Root& a) const { return divisible_ ? 2L * l_ / a.norm2 : l_; }

  AffElem make_simple(int i) const {
    AffElem r = identity();
    if (i == 0) {
      // x - (P(x) - wall) beta
      for (int j = 0; j < n_; ++j) {
        Weight e = R_->fundamental(j);
        long p = R_->coroot_pairing(e, beta_);
        for (int k = 0; k < n_; ++k) r.L[k * n_ + j] -= static_cast<int>(p * beta_.w[k]);
      }
      for (int k = 0; k < n_; ++k) r.b[k] = static_cast<int>(wall_ * beta_.w[k]);
    } else {
      int a = i - 1;
      Weight al = R_->simple_root(a);
      for (int k = 0; k < n_; ++k) r.L[k * n_ + a] -= al[k];
    }
    return r;
  }

  void find_wb(CellData& cell, const std::map<AffElem, int>& pos) const {
    auto t = type();
    Word wb;
    int s = 0, tt = 0;
    if (t.series == Series::G) {
      int a = (coxeter_m(0, 1) == 3) ? 1 : 2, b = 3 - a;
      wb = {0, a, b, a, b, a, 0};
      s = 0, tt = a;
    } else if (t.series == Series::B || t.series == Series::C) {
      wb.push_back(0);
      for (int i = 2; i <= n_; ++i) wb.push_back(i);
      for (int i = n_ - 1; i >= 1; --i) wb.push_back(i);
      s = 1, tt = 2;
    } else {
      return;
    }
    auto it = pos.find(from_word(wb));
    if (it == pos.end()) return;
    cell.wb = it->second;
    cell.s = s;
    cell.t = tt;
    auto iv = pos.find(compose(compose(from_word(wb), simple(s)), simple(tt)));
    if (iv != pos.end()) cell.v = iv->second;
  }

  std::shared_ptr<const RootSystem> R_;
  int l_;
  int n_;
  bool divisible_;
  Root beta_;
  long wall_;
  std::vector<AffElem> gens_;
};

}  // namespace subreg::affine
