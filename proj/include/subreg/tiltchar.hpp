// Tilting characters from the antispherical Kazhdan-Lusztig basis.
#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affine.hpp"

namespace subreg::tiltchar {

using affine::AffElem;
using affine::AffineWeylGroup;
using affine::Alcove;
using rootdata::DomainError;
using rootdata::Weight;
using rootdata::WeylChar;

// Laurent polynomial in v.
struct LPoly {
  std::map<int, long> c;

  static LPoly mono(int e, long k = 1) {
    LPoly p;
    if (k) p.c[e] = k;
    return p;
  }
  bool zero() const { return c.empty(); }
  long at(int e) const {
    auto it = c.find(e);
    return it == c.end() ? 0 : it->second;
  }
  void add(int e, long k) {
    if (!k) return;
    auto& x = c[e];
    x += k;
    if (!x) c.erase(e);
  }
  LPoly shifted(int d) const {
    LPoly r;
    for (auto& [e, k] : c) r.c[e + d] = k;
    return r;
  }
  LPoly& operator+=(const LPoly& o) {
    for (auto& [e, k] : o.c) add(e, k);
    return *this;
  }
  LPoly& operator-=(const LPoly& o) {
    for (auto& [e, k] : o.c) add(e, -k);
    return *this;
  }
  LPoly scaled(long s) const {
    LPoly r;
    for (auto& [e, k] : c) r.add(e, s * k);
    return r;
  }
  long at_one() const {
    long s = 0;
    for (auto& [e, k] : c) s += k;
    return s;
  }
  bool operator==(const LPoly&) const = default;
  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      auto [e, k] = *it;
      if (!s.empty()) s += k < 0 ? " - " : " + ";
      else if (k < 0) s += "-";
      long a = k < 0 ? -k : k;
      if (e == 0) s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a) + "*";
        s += e == 1 ? "v" : "v^" + std::to_string(e);
      }
    }
    return s;
  }
};

// Element of the antispherical module: coefficients on the standard basis N_y.
using ModElem = std::map<int, LPoly>;

// Table of dominant alcoves with the right action of simple reflections.
class AlcoveTable {
 public:
  explicit AlcoveTable(const AffineWeylGroup& G) : G_(G) { grow(8); }

  void grow(int len) {
    if (len <= max_len_) return;
    all_ = G_.enumerate_W0(len + 1);
    max_len_ = len;
    index_.clear();
    for (int i = 0; i < static_cast<int>(all_.size()); ++i) index_[all_[i].x] = i;
    right_.assign(all_.size(), std::vector<int>(G_.rank() + 1, -1));
    for (int i = 0; i < static_cast<int>(all_.size()); ++i)
      for (int s = 0; s <= G_.rank(); ++s) {
        Weight y = G_.apply(G_.compose(all_[i].w, G_.simple(s)), G_.rho());
        auto it = index_.find(y);
        if (it != index_.end()) right_[i][s] = it->second;
        else if (std::all_of(y.c.begin(), y.c.end(), [](int v) { return v > 0; })) right_[i][s] = -2;
      }
  }

  int size() const { return static_cast<int>(all_.size()); }
  const Alcove& at(int i) const { return all_[i]; }
  int max_len() const { return max_len_; }

  int index_of(const AffElem& w) {
    Weight x = G_.apply(w, G_.rho());
    auto it = index_.find(x);
    if (it != index_.end()) return it->second;
    int len = G_.separating(x);
    if (!std::all_of(x.c.begin(), x.c.end(), [](int v) { return v > 0; }))
      throw DomainError("element is not a dominant coset representative");
    grow(std::max(len, max_len_ * 3 / 2));
    return index_.at(x);
  }

  // index of ws; -1 when ws leaves the dominant chamber
  int right(int i, int s) {
    if (all_[i].length + 1 > max_len_) grow(max_len_ * 3 / 2 + 1);
    int r = right_[i][s];
    if (r == -2) throw DomainError("alcove table too small");
    return r;
  }

 private:
  const AffineWeylGroup& G_;
  std::vector<Alcove> all_;
  std::map<Weight, int> index_;
  std::vector<std::vector<int>> right_;
  int max_len_ = -1;
};

enum class Descent { Smallest, Largest };

class KLBasis {
 public:
  KLBasis(const AffineWeylGroup& G, Descent d = Descent::Smallest) : G_(G), table_(G), pick_(d) {}

  AlcoveTable& table() { return table_; }
  const AffineWeylGroup& group() const { return G_; }

  // Right action of the Kazhdan-Lusztig generator H_s.
  ModElem act_Hs(const ModElem& m, int s) {
    ModElem r;
    for (auto& [y, p] : m) {
      int ys = table_.right(y, s);
      if (ys < 0) continue;
      r[ys] += p;
      if (r[ys].zero()) r.erase(ys);
      LPoly q = table_.at(ys).length > table_.at(y).length ? p.shifted(1) : p.shifted(-1);
      r[y] += q;
      if (r[y].zero()) r.erase(y);
    }
    return r;
  }

  const ModElem& basis(int x) { return basis_with(x, pick_); }

  // Recompute underline N_x through a specific right descent s.
  ModElem basis_via(int x, int s) {
    int xs = table_.right(x, s);
    if (xs < 0 || table_.at(xs).length >= table_.at(x).length) throw DomainError("not a right descent");
    ModElem b = act_Hs(basis(xs), s);
    reduce(b, x);
    return b;
  }

  std::vector<int> descents(int x) {
    std::vector<int> d;
    for (int s = 0; s <= G_.rank(); ++s) {
      int xs = table_.right(x, s);
      if (xs >= 0 && table_.at(xs).length < table_.at(x).length) d.push_back(s);
    }
    return d;
  }

 private:
  const ModElem& basis_with(int x, Descent pick) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    if (table_.at(x).length == 0) return memo_[x] = ModElem{{x, LPoly::mono(0)}};
    auto d = descents(x);
    int s = pick == Descent::Smallest ? d.front() : d.back();
    int xs = table_.right(x, s);
    ModElem b = act_Hs(basis_with(xs, pick), s);
    reduce(b, x);
    return memo_[x] = std::move(b);
  }

  // Remove degree-zero coefficients below the top.
  void reduce(ModElem& b, int x) {
    for (;;) {
      int best = -1;
      for (auto& [y, p] : b) {
        if (y == x || p.at(0) == 0) continue;
        if (best < 0 || table_.at(y).length > table_.at(best).length ||
            (table_.at(y).length == table_.at(best).length && y > best))
          best = y;
      }
      if (best < 0) break;
      long c = b[best].at(0);
      ModElem sub = basis(best);
      for (auto& [y, p] : sub) {
        b[y] -= p.scaled(c);
        if (b[y].zero()) b.erase(y);
      }
    }
    for (auto& [y, p] : b) {
      if (y == x) continue;
      if (p.c.empty() || p.c.begin()->first < 1) throw DomainError("antispherical polynomial outside vZ[v]");
    }
  }

  const AffineWeylGroup& G_;
  AlcoveTable table_;
  Descent pick_;
  std::map<int, ModElem> memo_;
};

// Cached tilting characters for one (type, l).
class TiltingDB {
 public:
  TiltingDB(std::shared_ptr<const AffineWeylGroup> G) : G_(std::move(G)), kl_(*G_) {}

  const AffineWeylGroup& group() const { return *G_; }
  KLBasis& kl() { return kl_; }

  // sum_y n_{y,x}(1) chi_{y . lambda0} for lambda0 interior to the fundamental alcove
  WeylChar regular_character(const AffElem& x, const Weight& lambda0) {
    int xi = kl_.table().index_of(x);
    WeylChar ch;
    for (auto& [y, p] : kl_.basis(xi)) {
      long k = p.at_one();
      Weight wt = G_->apply(kl_.table().at(y).w, lambda0 + G_->rho()) - G_->rho();
      auto st = G_->roots().straighten(wt);
      if (!st.zero) ch.add(st.dom, st.sign * k);
    }
    return ch;
  }

  // Translating T(mu) off its walls gives the tilting module of the highest alcove
  // around mu; translating back yields |W_mu| copies of T(mu).
  WeylChar singular_tilting_character(const Weight& lambda) {
    auto [y, u] = G_->fold(lambda + G_->rho());
    auto al = G_->alcoves_containing(lambda);
    int xi = kl_.table().index_of(al.back().w);
    WeylChar ch;
    for (auto& [z, p] : kl_.basis(xi)) {
      Weight wt = G_->apply(kl_.table().at(z).w, y) - G_->rho();
      auto st = G_->roots().straighten(wt);
      if (!st.zero) ch.add(st.dom, st.sign * p.at_one());
    }
    long n = static_cast<long>(al.size());
    WeylChar out;
    for (auto& [w, k] : ch.terms) {
      if (k % n) throw DomainError("translated character not divisible by stabilizer order");
      out.add(w, k / n);
    }
    return out;
  }

  const WeylChar& get(const Weight& lambda) {
    auto it = db_.find(lambda);
    if (it != db_.end()) return it->second;
    if (!G_->roots().is_dominant(lambda)) throw DomainError("tilting weight must be dominant");
    auto [y, u] = G_->fold(lambda + G_->rho());
    WeylChar ch;
    std::string prov;
    if (!G_->walls_of(y).empty()) {
      ch = singular_tilting_character(lambda);
      prov = "translated-singular";
    } else {
      ch = regular_character(u, y - G_->rho());
      prov = u == G_->identity() ? "weyl" : "kl-regular";
    }
    if (ch.coeff(lambda) != 1) throw DomainError("tilting character without leading term at " + rootdata::to_string(lambda));
    prov_[lambda] = prov;
    return db_.emplace(lambda, std::move(ch)).first->second;
  }

  const std::string& provenance(const Weight& lambda) {
    get(lambda);
    return prov_.at(lambda);
  }

  // Greedy peeling by highest weight.
  std::map<Weight, long> decompose(WeylChar ch) {
    const auto& R = G_->roots();
    std::map<Weight, long> out;
    while (!ch.terms.empty()) {
      auto top = ch.terms.begin()->first;
      for (auto& [w, k] : ch.terms) {
        auto hw = R.height(w), ht = R.height(top);
        if (hw > ht || (hw == ht && w > top)) top = w;
      }
      long k = ch.coeff(top);
      if (k < 0) throw DomainError("character is not a nonnegative tilting combination");
      out[top] += k;
      ch -= get(top).scaled(k);
    }
    return out;
  }

  std::map<Weight, long> product(const Weight& a, const Weight& b) {
    return decompose(G_->roots().multiply(get(a), get(b)));
  }

  // Records {weight, chi: [{weight, coeff}], provenance}, sorted by height then coordinates.
  nlohmann::json to_json() const {
    std::vector<Weight> ws;
    for (auto& [w, ch] : db_) ws.push_back(w);
    G_->sort_by_height(ws);
    nlohmann::json arr = nlohmann::json::array();
    for (auto& w : ws) {
      std::vector<Weight> terms;
      for (auto& [x, k] : db_.at(w).terms) terms.push_back(x);
      G_->sort_by_height(terms);
      nlohmann::json chi = nlohmann::json::array();
      for (auto& x : terms) chi.push_back({{"weight", x.c}, {"coeff", db_.at(w).coeff(x)}});
      arr.push_back({{"weight", w.c}, {"chi", chi}, {"provenance", prov_.at(w)}});
    }
    return {{"schema", 1}, {"type", rootdata::type_name(G_->type())}, {"l", G_->l()}, {"records", arr}};
  }

  void from_json(const nlohmann::json& j) {
    if (j.at("type").get<std::string>() != rootdata::type_name(G_->type()) || j.at("l").get<int>() != G_->l())
      throw DomainError("tilting database mismatch");
    for (auto& rec : j.at("records")) {
      Weight w{rec.at("weight").get<std::vector<int>>()};
      WeylChar ch;
      for (auto& t : rec.at("chi")) ch.add(Weight{t.at("weight").get<std::vector<int>>()}, t.at("coeff").get<long>());
      if (ch.coeff(w) != 1) throw DomainError("imported character without leading term at " + rootdata::to_string(w));
      db_[w] = std::move(ch);
      prov_[w] = "imported";
    }
  }

  size_t size() const { return db_.size(); }

 private:
  std::shared_ptr<const AffineWeylGroup> G_;
  KLBasis kl_;
  std::map<Weight, WeylChar> db_;
  std::map<Weight, std::string> prov_;
};

// dim Hom(T, T') = sum of products of Weyl-filtration multiplicities.
inline long hom_pairing(const WeylChar& a, const WeylChar& b) {
  long s = 0;
  for (auto& [w, k] : a.terms) s += k * b.coeff(w);
  return s;
}

}  // namespace subreg::tiltchar
