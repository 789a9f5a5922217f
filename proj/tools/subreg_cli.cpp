// subreg: command-line driver over the library modules.
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <subreg/conjecture.hpp>
#include <subreg/deeq.hpp>
#include <subreg/mckay.hpp>

using namespace subreg;
using exactnum::CycloReal;
using exactnum::Q;
using json = nlohmann::json;
using rootdata::LieType;
using rootdata::Weight;

namespace {

constexpr const char* kSchema = "subreg-report/1";

struct RunConfig {
  std::string type = "G2";
  int rank = 0;
  int l = 7;
  int q_order = 0;  // 0 means 2l
  std::string json_path, svg_path, group = "BO";
  int precision = 6;

  LieType lie() const { return rootdata::parse_type(type, rank); }
  int q() const { return q_order ? q_order : 2 * l; }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  Report(std::string cmd, const RunConfig& cfg) : cmd_(std::move(cmd)), cfg_(cfg) {
    doc_["schema"] = kSchema;
    doc_["command"] = cmd_;
  }

  std::ostringstream out;
  json& values() { return doc_["values"]; }
  json& inputs() { return doc_["inputs"]; }

  void set_field(int l) {
    auto F = exactnum::field(l);
    std::ostringstream h;
    h << std::hex << F->hash();
    doc_["field"] = {{"l", l}, {"degree", F->degree()}, {"generator", "c = 2cos(pi/l)"},
                     {"min_poly", F->minpoly_string()}, {"min_poly_hash", h.str()}};
    hash_ = h.str();
  }

  std::string digest(double v) const { return exactnum::fixed(v, cfg_.precision); }

  json exact(const CycloReal& x) const {
    return {{"coeffs", x.coeff_strings()}, {"float", digest(x.to_double())}, {"l", x.ctx()->l()}, {"min_poly_hash", hash_}};
  }

  void verdict(const std::string& name, bool ok) {
    verdicts_.emplace_back(name, ok);
    doc_["verdicts"][name] = ok;
  }

  int finish() {
    bool ok = std::all_of(verdicts_.begin(), verdicts_.end(), [](auto& v) { return v.second; });
    doc_["ok"] = ok;
    std::cout << out.str();
    for (auto& [n, v] : verdicts_) std::cout << (v ? "PASS  " : "FAIL  ") << n << "\n";
    if (!cfg_.json_path.empty()) {
      std::ofstream f(cfg_.json_path);
      if (!f) throw std::runtime_error("cannot write " + cfg_.json_path);
      f << doc_.dump(2) << "\n";
    }
    return ok ? 0 : 1;
  }

 private:
  std::string cmd_;
  const RunConfig& cfg_;
  json doc_;
  std::string hash_;
  std::vector<std::pair<std::string, bool>> verdicts_;
};

// ---- bound table ----

const std::vector<std::string> kTableTypes{"B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

// Smallest admissible l of the given parity, or -1 when the subregular cell is not distinguished there.
int min_level(const LieType& t, bool divisible) {
  for (int l = 2; l <= 200; ++l) {
    if ((l % t.m == 0) != divisible) continue;
    std::optional<affine::AffineWeylGroup> G;
    try {
      G.emplace(t, l);
    } catch (const rootdata::DomainError&) {
      continue;
    }
    try {
      G->subregular_cell();
      return l;
    } catch (const rootdata::DomainError&) {
      return -1;
    }
  }
  return -1;
}

std::string bound_table() {
  std::ostringstream os;
  os << "supported levels (l = order of q^2):\n  type  m  min l (m !| l)  min l (m | l)\n";
  for (auto& nm : kTableTypes) {
    LieType t = rootdata::parse_type(nm);
    auto cell = [&](bool d) {
      int l = t.m == 1 && !d ? -1 : min_level(t, d);
      return l < 0 ? std::string("-") : std::to_string(l);
    };
    os << "  " << std::left << std::setw(6) << nm << std::setw(3) << t.m << std::setw(16) << cell(false) << cell(true) << "\n";
  }
  os << "cell, weights, characters: any entry above, at or beyond its bound\n"
        "fusion, fpdim, cartan, mueger, chevalley, deeq, conjecture: G2 only\n"
        "witt-sieve: G2 with l = 7\n";
  return os.str();
}

void require_g2(const RunConfig& cfg) {
  if (rootdata::series_char(cfg.lie().series) != 'G') throw UsageError("this command needs --type G2");
}

std::string chi_string(const rootdata::WeylChar& ch) {
  std::string s;
  for (auto it = ch.terms.rbegin(); it != ch.terms.rend(); ++it) {
    if (!s.empty()) s += " + ";
    if (it->second != 1) s += std::to_string(it->second) + "*";
    s += "chi" + rootdata::to_string(it->first);
  }
  return s.empty() ? "0" : s;
}

void print_matrix(std::ostream& os, const linalg::IntMat& m) {
  for (auto& row : m) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? "\t" : "") << row[j];
    os << "\n";
  }
}

std::optional<std::string> expected_shape(const LieType& t, bool divisible) {
  static const std::map<std::pair<std::string, bool>, std::string> table{
      {{"G2", false}, "E~7"}, {{"D4", true}, "D~4"},  {{"D5", true}, "D~5"}, {{"C3", false}, "D~6"},
      {{"B3", true}, "D~6"},  {{"F4", false}, "E~7"}, {{"F4", true}, "E~7"}};
  auto it = table.find({rootdata::type_name(t), divisible});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

// ---- SVG (rank two) ----

void write_svg(const std::string& path, const affine::AffineWeylGroup& G, const affine::CellData& cell,
               const affine::AffineWeylGroup::PA* pa) {
  const auto& R = G.roots();
  if (R.rank() != 2) throw UsageError("--svg needs a rank-two type");
  auto gram = [&](int i, int j) { return R.inner(R.fundamental(i), R.fundamental(j)).get_d(); };
  double a = std::sqrt(gram(0, 0)), b = gram(0, 1) / a, c = std::sqrt(gram(1, 1) - b * b);
  auto plane = [&](double x0, double x1) { return std::pair<double, double>{x0 * a + x1 * b, x1 * c}; };

  // fundamental alcove corners in rho-shifted coordinates
  std::vector<std::array<double, 2>> corner{{0, 0}, {0, 0}, {0, 0}};
  for (int i = 0; i < 2; ++i)
    corner[i + 1][i] = static_cast<double>(G.wall_level()) / static_cast<double>(R.coroot_pairing(R.fundamental(i), G.beta()));
  auto image = [&](const affine::AffElem& w, const std::array<double, 2>& x) {
    double y0 = w.b[0] + w.L[0] * x[0] + w.L[1] * x[1];
    double y1 = w.b[1] + w.L[2] * x[0] + w.L[3] * x[1];
    return plane(y0, y1);
  };

  std::vector<std::vector<std::pair<double, double>>> polys;
  polys.push_back({image(G.identity(), corner[0]), image(G.identity(), corner[1]), image(G.identity(), corner[2])});
  for (auto& el : cell.elements) polys.push_back({image(el.w, corner[0]), image(el.w, corner[1]), image(el.w, corner[2])});
  std::vector<std::pair<std::pair<double, double>, bool>> dots;
  if (pa)
    for (size_t i = 0; i < pa->weights.size(); ++i) {
      Weight x = pa->weights[i] + G.rho();
      dots.push_back({plane(x[0], x[1]), pa->interior[i]});
    }

  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (auto& p : polys)
    for (auto& [x, y] : p) lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x), lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  double scale = 560.0 / std::max(hi_x - lo_x, hi_y - lo_y);
  auto px = [&](std::pair<double, double> p) {
    return exactnum::fixed(20 + (p.first - lo_x) * scale, 2) + "," + exactnum::fixed(20 + (hi_y - p.second) * scale, 2);
  };

  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\">\n";
  for (size_t k = 0; k < polys.size(); ++k) {
    f << "<polygon points=\"";
    for (size_t v = 0; v < 3; ++v) f << (v ? " " : "") << px(polys[k][v]);
    f << "\" fill=\"" << (k == 0 ? "#ffffff" : "#9ecae1") << "\" stroke=\"#08306b\" stroke-width=\"1\"/>\n";
  }
  for (auto& [p, interior] : dots) {
    auto xy = px(p);
    auto comma = xy.find(',');
    f << "<circle cx=\"" << xy.substr(0, comma) << "\" cy=\"" << xy.substr(comma + 1) << "\" r=\"3\" fill=\""
      << (interior ? "#000000" : "#ffffff") << "\" stroke=\"#000000\"/>\n";
  }
  f << "</svg>\n";
}

// ---- commands ----

void inputs(Report& r, const RunConfig& cfg, bool with_q = false) {
  LieType t = cfg.lie();
  r.inputs() = {{"type", rootdata::type_name(t)}, {"l", cfg.l}, {"divisible", cfg.l % t.m == 0}};
  if (with_q) r.inputs()["q_order"] = cfg.q();
}

int cmd_cell(const RunConfig& cfg) {
  Report r("cell", cfg);
  inputs(r, cfg);
  auto G = std::make_shared<affine::AffineWeylGroup>(cfg.lie(), cfg.l);
  auto cell = G->subregular_cell();
  auto shape = graph::affine_type(cell.graph);
  r.out << "type " << rootdata::type_name(cfg.lie()) << ", l = " << cfg.l << (G->divisible() ? " (divisible)" : " (undivisible)") << "\n";
  r.out << cell.elements.size() << " vertices, " << shape.value_or("not affine Dynkin") << "\n";
  json els = json::array(), edges = json::array();
  for (size_t i = 0; i < cell.elements.size(); ++i) {
    auto& e = cell.elements[i];
    r.out << "  " << i << "  " << affine::word_string(e.word) << "  length " << e.length << "\n";
    els.push_back({{"word", affine::word_string(e.word)}, {"length", e.length}});
  }
  for (int i = 0; i < cell.graph.size(); ++i)
    for (int j = i + 1; j < cell.graph.size(); ++j)
      if (cell.graph.adj[i][j]) {
        r.out << "  edge " << i << " - " << j << "\n";
        edges.push_back({i, j});
      }
  r.values() = {{"vertices", cell.elements.size()}, {"shape", shape.value_or("")}, {"elements", els}, {"edges", edges}};
  r.verdict("cell graph is connected and simply laced", cell.graph.connected() && cell.graph.simple());
  r.verdict("cell graph is an affine Dynkin diagram", shape.has_value());
  if (auto want = expected_shape(cfg.lie(), G->divisible())) r.verdict("cell graph is " + *want, shape == *want);
  if (!cfg.svg_path.empty()) write_svg(cfg.svg_path, *G, cell, nullptr);
  return r.finish();
}

int cmd_weights(const RunConfig& cfg) {
  Report r("weights", cfg);
  inputs(r, cfg);
  affine::AffineWeylGroup G(cfg.lie(), cfg.l);
  auto cell = G.subregular_cell();
  auto pa = G.compute_PA(cell);
  long interior = std::count(pa.interior.begin(), pa.interior.end(), true);
  r.out << pa.weights.size() << " weights, " << interior << " alcove-interior\n";
  json ws = json::array();
  bool all_survive = true;
  for (size_t i = 0; i < pa.weights.size(); ++i) {
    r.out << "  " << rootdata::to_string(pa.weights[i]) << (pa.interior[i] ? "  interior" : "  wall") << "\n";
    ws.push_back({{"weight", pa.weights[i].c}, {"interior", static_cast<bool>(pa.interior[i])}});
    all_survive = all_survive && G.roots().is_dominant(pa.weights[i]) && G.survives(pa.weights[i], cell);
  }
  r.values() = {{"count", pa.weights.size()}, {"interior", interior}, {"weights", ws}};
  r.verdict("every weight is dominant and survives", all_survive);
  if (rootdata::type_name(cfg.lie()) == "G2" && cfg.l == 7) r.verdict("23 weights, 8 interior", pa.weights.size() == 23 && interior == 8);
  if (!cfg.svg_path.empty()) write_svg(cfg.svg_path, G, cell, &pa);
  return r.finish();
}

int cmd_characters(const RunConfig& cfg) {
  Report r("characters", cfg);
  inputs(r, cfg);
  auto G = std::make_shared<affine::AffineWeylGroup>(cfg.lie(), cfg.l);
  auto cell = G->subregular_cell();
  auto pa = G->compute_PA(cell);
  tiltchar::TiltingDB db(G);
  json chars = json::array();
  bool ok = true;
  for (auto& w : pa.weights) {
    const auto& ch = db.get(w);
    const std::string& prov = db.provenance(w);
    r.out << "T" << rootdata::to_string(w) << " [" << prov << "] = " << chi_string(ch) << "\n";
    chars.push_back({{"weight", w.c}, {"provenance", prov}, {"character", rootdata::to_json(cfg.lie(), ch)}});
    ok = ok && ch.coeff(w) == 1;
    for (auto& [mu, k] : ch.terms) ok = ok && k > 0 && (mu == w || G->roots().height(mu) < G->roots().height(w));
  }
  r.values() = {{"characters", chars}};
  r.verdict("highest term once, lower terms positive", ok);
  return r.finish();
}

int cmd_fusion(const RunConfig& cfg) {
  require_g2(cfg);
  Report r("fusion", cfg);
  inputs(r, cfg);
  fusion::Category cat(cfg.lie(), cfg.l);
  json mats = json::object(), polys = json::array();
  for (int g = 0; g < 2; ++g) {
    std::string nm = "T" + rootdata::to_string(cat.omega(g));
    r.out << "multiplication by " << nm << " (TSV, rows and columns in survivor order)\n";
    print_matrix(r.out, cat.mult_matrix(cat.omega(g)));
    mats[nm] = cat.mult_matrix(cat.omega(g));
  }
  const auto& f = cat.f_polys();
  for (int i = 0; i < cat.N(); ++i) {
    r.out << "f" << rootdata::to_string(cat.weight(i)) << " = " << f[i].str() << "\n";
    json terms = json::array();
    for (auto& [ab, k] : f[i].c) terms.push_back({ab.first, ab.second, k});
    polys.push_back({{"weight", cat.weight(i).c}, {"terms", terms}});
  }
  r.values() = {{"survivors", cat.N()}, {"matrices", mats}, {"f_polys", polys}};
  auto A1 = cat.augmented(0), A2 = cat.augmented(1);
  r.verdict("generator matrices commute", linalg::int_mul(A1, A2) == linalg::int_mul(A2, A1));
  bool eval_ok = true;
  for (int k = 0; k < cat.N(); ++k) eval_ok = eval_ok && cat.eval_poly(f[k], A1, A2) == cat.augmented(k);
  r.verdict("f(X, Y) reproduces every augmented matrix", eval_ok);
  return r.finish();
}

int cmd_fpdim(const RunConfig& cfg) {
  require_g2(cfg);
  Report r("fpdim", cfg);
  inputs(r, cfg);
  r.set_field(cfg.l);
  fusion::Category cat(cfg.lie(), cfg.l);
  const auto& fp = cat.fpdims();
  json T = json::array();
  auto line = [&](const std::string& nm, const CycloReal& x) { r.out << nm << " = " << x.str() << " ~ " << r.digest(x.to_double()) << "\n"; };
  if (fp.gen1.value) line("FPdim T(w1)", *fp.gen1.value);
  if (fp.gen2.value) line("FPdim T(w2)", *fp.gen2.value);
  for (int i = 0; i < cat.N(); ++i) {
    line("FPdim T" + rootdata::to_string(cat.weight(i)), fp.fp_T[i]);
    line("FPdim " + cat.simple_name(i), fp.fp_L[i]);
    T.push_back({{"weight", cat.weight(i).c}, {"simple", cat.simple_name(i)}, {"tilting", r.exact(fp.fp_T[i])}, {"fpdim_simple", r.exact(fp.fp_L[i])}});
  }
  line("FPdim C", fp.fp_C);
  r.values() = {{"objects", T}, {"category", r.exact(fp.fp_C)}};
  if (fp.gen1.value) r.values()["gen1"] = r.exact(*fp.gen1.value);
  if (fp.gen2.value) r.values()["gen2"] = r.exact(*fp.gen2.value);
  r.verdict("Perron roots certified", fp.gen1.certified && fp.gen2.certified);
  r.verdict("tilting and simple dimensions agree on walls", fp.walls_consistent);
  if (cfg.l == 7) {
    auto q = [](int k) { return exactnum::qint(k, 7); };
    CycloReal one(exactnum::field(7), Q(1));
    r.verdict("FPdim T(w1) = 1+2[3]", fp.gen1.value && *fp.gen1.value == one + q(3) * 2L);
    r.verdict("FPdim T(w2) = [2]+3[3]", fp.gen2.value && *fp.gen2.value == q(2) + q(3) * 3L);
    r.verdict("FPdim C = 294(7+15[3]+12[5])", fp.fp_C == (one * 7L + q(3) * 15L + q(5) * 12L) * 294L);
  }
  return r.finish();
}

int cmd_cartan(const RunConfig& cfg) {
  require_g2(cfg);
  Report r("cartan", cfg);
  inputs(r, cfg);
  fusion::Category cat(cfg.lie(), cfg.l);
  auto C = cat.cartan_matrix();
  r.out << "principal block Cartan matrix (TSV, order L0..L" << C.size() - 1 << ")\n";
  print_matrix(r.out, C);
  Q det = linalg::int_det(C);
  r.out << "det = " << det.get_str() << "\n";
  r.values() = {{"cartan", C}, {"det", det.get_str()}, {"hom", cat.hom_table()}};
  r.verdict("C = 2I + adjacency of the cell graph", C == mckay::quiver_model_cartan(cat.cell().graph));
  r.verdict("det C = 0", det == 0);
  return r.finish();
}

int cmd_mueger(const RunConfig& cfg) {
  require_g2(cfg);
  Report r("mueger", cfg);
  inputs(r, cfg, true);
  fusion::Category cat(cfg.lie(), cfg.l);
  fusion::SimpleRing ring(cat);
  auto m = fusion::mueger_center(cat, ring, cfg.q());
  json members = json::array(), tw = json::array();
  r.out << "integral-FPdim simples:";
  for (int i : m.members) r.out << " " << cat.simple_name(i), members.push_back(cat.simple_name(i));
  r.out << "\n";
  if (m.sgn >= 0) r.out << "sgn = " << cat.simple_name(m.sgn) << "\n";
  if (m.V >= 0) r.out << "V = " << cat.simple_name(m.V) << "\n";
  r.out << "twist exponents mod " << cfg.q() << " on non-principal orbits:\n";
  for (auto& [w, t] : m.orbit_twists) {
    r.out << "  " << rootdata::to_string(w) << "  " << t << "\n";
    tw.push_back({{"weight", w.c}, {"twist", t}});
  }
  r.values() = {{"members", members}, {"orbit_twists", tw}};
  r.verdict("fusion rules of Rep(S3)", m.s3_rules);
  r.verdict("tensoring with V preserves twists", m.twist_preserved);
  r.verdict("orbit twists nonzero", m.orbit_twists_nonzero);
  return r.finish();
}

int cmd_chevalley(const RunConfig& cfg) {
  require_g2(cfg);
  Report r("chevalley", cfg);
  inputs(r, cfg);
  fusion::Category cat(cfg.lie(), cfg.l);
  fusion::SimpleRing ring(cat);
  const auto& pb = cat.principal_block().members;
  auto C = cat.cartan_matrix();
  auto principal = [&](const std::vector<long>& cls) {
    std::vector<long> v;
    for (int i : pb) v.push_back(cls[i]);
    return v;
  };
  auto combo = [](const std::vector<long>& v, const char* sym) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k]) s += (s.empty() ? "" : " + ") + (v[k] == 1 ? "" : std::to_string(v[k])) + sym + std::to_string(k);
    return s;
  };
  json rows = json::array();
  int n = static_cast<int>(pb.size());
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto w = fusion::chevalley_witness(principal(ring.product(pb[a], pb[b])), C, cat.cell().graph);
      r.out << "(L" << a << " x L" << b << ")_0 = ";
      if (w) {
        std::string p = combo(w->p, "P"), q = combo(w->r, "L");
        r.out << (p.empty() ? q : q.empty() ? p : p + " + " + q) << (p.empty() && q.empty() ? "0" : "") << "\n";
        rows.push_back({{"a", a}, {"b", b}, {"projective", w->p}, {"simple", w->r}, {"witnesses", w->count}});
      } else {
        r.out << "no witness\n";
        rows.push_back({{"a", a}, {"b", b}, {"projective", nullptr}});
      }
    }
  bool all = true;
  for (int i = 0; i < cat.N(); ++i)
    for (int j = i; j < cat.N(); ++j) all = all && fusion::chevalley_witness(principal(ring.product(i, j)), C, cat.cell().graph).has_value();
  r.values() = {{"principal_products", rows}};
  r.verdict("every product of simples has a witness", all);
  return r.finish();
}

int cmd_deeq(const RunConfig& cfg) {
  require_g2(cfg);
  Report r("deeq", cfg);
  inputs(r, cfg, true);
  r.set_field(cfg.l);
  fusion::Category cat(cfg.lie(), cfg.l);
  fusion::SimpleRing ring(cat);
  deeq::Deequivariantization D(cat, ring, cfg.q());
  r.out << "types a/b/c: " << D.count(deeq::Kind::a) << " / " << D.count(deeq::Kind::b) << " / " << D.count(deeq::Kind::c) << "\n";
  r.out << D.simples().size() << " simples\n";
  json ys = json::array();
  for (auto& y : D.simples()) {
    r.out << "  " << y.label << "  FPdim " << y.fpdim.str() << " ~ " << r.digest(y.fpdim.to_double()) << "  twist " << y.twist << "\n";
    ys.push_back({{"label", y.label}, {"source", cat.simple_name(y.source)}, {"k", y.k}, {"fpdim", r.exact(y.fpdim)}, {"twist", y.twist}});
  }
  auto shape = graph::affine_type(D.block_graph(D.principal_block()));
  r.out << D.blocks().size() << " blocks, " << D.trivial_block_count() << " trivial, principal block " << shape.value_or("?") << "\n";
  CycloReal d = D.fpdim_category();
  r.out << "FPdim = " << d.str() << " ~ " << r.digest(d.to_double()) << ", norm " << d.norm().get_str() << "\n";
  r.values() = {{"simples", ys},
                {"blocks", D.blocks().size()},
                {"trivial_blocks", D.trivial_block_count()},
                {"principal_shape", shape.value_or("")},
                {"category", r.exact(d)},
                {"norm", d.norm().get_str()}};
  r.verdict("FPdim of C is 6 times the quotient", d * 6L == cat.fpdims().fp_C);
  r.verdict("principal block is affine Dynkin", shape.has_value());
  bool tw = true;
  auto pb = D.principal_block().members;
  std::sort(pb.begin(), pb.end());
  tw = D.trivial_twist_simples() == pb;
  r.verdict("trivial twists exactly on the principal block", tw);
  return r.finish();
}

int cmd_sieve(const RunConfig& cfg) {
  require_g2(cfg);
  if (cfg.l != 7) throw UsageError("witt-sieve is available for l = 7 only");
  Report r("witt-sieve", cfg);
  inputs(r, cfg, true);
  r.set_field(cfg.l);
  fusion::Category cat(cfg.lie(), cfg.l);
  fusion::SimpleRing ring(cat);
  deeq::Deequivariantization D(cat, ring, cfg.q());
  CycloReal alpha = exactnum::qint(3, 7) + exactnum::qint(5, 7);
  auto rep = deeq::anisotropy_sieve(D.fpdim_category(), alpha);
  r.out << "alpha = [3]+[5], bound sqrt(FPdim) ~ " << r.digest(rep.sqrt_bound) << ", primes";
  for (long p : rep.primes) r.out << " " << p;
  r.out << "\n";
  json es = json::array(), sv = json::array();
  for (auto& e : rep.entries) {
    std::string nm = deeq::candidate_name(e.r, e.s, "a");
    r.out << "  " << nm << "  norm " << e.norm.get_str() << "  " << e.verdict;
    json j{{"candidate", nm}, {"value", r.exact(e.value)}, {"norm", e.norm.get_str()}, {"verdict", e.verdict}};
    if (e.quotient) {
      r.out << "  quotient " << r.digest(e.quotient_value) << " / conjugate " << r.digest(e.max_conjugate);
      j["quotient"] = r.exact(*e.quotient);
      j["max_conjugate"] = r.digest(e.max_conjugate);
    }
    r.out << "\n";
    es.push_back(j);
  }
  r.out << "survivors:";
  for (auto& e : rep.survivors) r.out << " " << deeq::candidate_name(e.r, e.s, "a"), sv.push_back(deeq::candidate_name(e.r, e.s, "a"));
  r.out << "\n";
  r.values() = {{"candidates", es}, {"survivors", sv}, {"sqrt_bound", r.digest(rep.sqrt_bound)}};
  r.verdict("only the trivial candidate survives", rep.survivors.size() == 1 && rep.survivors[0].r == 1 && rep.survivors[0].s == 0);
  return r.finish();
}

int cmd_molien(const RunConfig& cfg) {
  Report r("molien", cfg);
  r.inputs() = {{"group", cfg.group}};
  auto G = mckay::by_name(cfg.group);
  auto g = mckay::mckay_graph(G);
  auto shape = graph::affine_type(g);
  auto s = mckay::molien_series(G);
  r.out << G.name << " (" << G.family << "), order " << G.order << ", " << G.classes.size() << " classes, McKay graph "
        << shape.value_or("?") << "\n";
  r.out << "irreducible dimensions:";
  for (int d : G.dims) r.out << " " << d;
  r.out << "\nMolien series " << mckay::series_string(s) << "\n  coefficients of t^0, t^2, ...:";
  for (long c : s.coeffs) r.out << " " << c;
  r.out << "\n";
  r.values() = {{"order", G.order}, {"dims", G.dims}, {"mckay", shape.value_or("")}, {"coeffs", s.coeffs},
                {"gen_degrees", s.gen_degrees}, {"numerator", s.numerator}, {"closed", s.closed}};
  r.verdict("sum of squared dimensions is the order", mckay::sum_dim_squares(G) == G.order);
  r.verdict("character table orthonormal", mckay::orthonormality_defect(G) < 1e-9);
  r.verdict("Molien coefficients nonnegative", std::all_of(s.coeffs.begin(), s.coeffs.end(), [](long c) { return c >= 0; }));
  r.verdict("closed form found", s.closed);
  return r.finish();
}

int cmd_conjecture(const RunConfig& cfg) {
  require_g2(cfg);
  Report r("conjecture", cfg);
  inputs(r, cfg);
  r.set_field(cfg.l);
  fusion::Category cat(cfg.lie(), cfg.l);
  auto rep = conjecture::check_g2(cat);
  auto pair = [&](const std::string& nm, const CycloReal& a, const CycloReal& b) {
    r.out << nm << ": computed " << r.digest(a.to_double()) << ", formula " << r.digest(b.to_double()) << "\n";
    r.values()[nm] = {{"computed", r.exact(a)}, {"formula", r.exact(b)}};
  };
  r.out << "l = " << cfg.l << (rep.divisible ? " (divisible)" : " (undivisible)") << "\n";
  pair("category", rep.fp_C, rep.formula_C);
  pair("T(w1)", rep.gen1, rep.formula1);
  pair("T(w2)", rep.gen2, rep.formula2);
  pair("6 S2 S1^3", rep.identity_lhs, rep.identity_rhs);
  if (!rep.gen2_ok && rep.gen2_offset) {
    r.out << "T(w2) computed minus formula = " << rep.gen2_offset->get_str() << "\n";
    r.values()["gen2_offset"] = rep.gen2_offset->get_str();
  }
  r.verdict("category dimension formula", rep.dimension_ok);
  r.verdict("T(w1) formula", rep.gen1_ok);
  r.verdict("T(w2) formula", rep.gen2_ok);
  r.verdict("6 S2 S1^3 identity", rep.identity_ok);
  return r.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subregular quotient categories: cells, tilting characters, fusion data, dimensions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool svg = false) {
    sub->add_option("--type", cfg.type, "Lie type, e.g. G2, or a series letter with --rank")->capture_default_str();
    sub->add_option("--rank", cfg.rank, "rank when --type is a bare series letter");
    sub->add_option("--l", cfg.l, "order of q^2")->capture_default_str();
    sub->add_option("--q-order", cfg.q_order, "order of q for twist exponents (default 2l)");
    sub->add_option("--json", cfg.json_path, "write the JSON report here");
    sub->add_option("--precision", cfg.precision, "digits in float digests")->capture_default_str()->check(CLI::Range(1, 15));
    if (svg) sub->add_option("--svg", cfg.svg_path, "write the rank-two alcove picture here");
  };

  std::map<std::string, std::function<int(const RunConfig&)>> cmds{
      {"cell", cmd_cell},         {"weights", cmd_weights}, {"characters", cmd_characters}, {"fusion", cmd_fusion},
      {"fpdim", cmd_fpdim},       {"cartan", cmd_cartan},   {"mueger", cmd_mueger},         {"chevalley", cmd_chevalley},
      {"deeq", cmd_deeq},         {"witt-sieve", cmd_sieve}, {"conjecture", cmd_conjecture}};
  std::map<std::string, std::string> help{
      {"cell", "subregular cell and its graph"},
      {"weights", "survivor weights P_A"},
      {"characters", "tilting characters of the survivors"},
      {"fusion", "multiplication matrices and f polynomials"},
      {"fpdim", "Frobenius-Perron dimensions"},
      {"cartan", "Cartan matrix of the principal block"},
      {"mueger", "Muger center and twists"},
      {"chevalley", "Chevalley witnesses for products of simples"},
      {"deeq", "de-equivariantization bookkeeping"},
      {"witt-sieve", "complete-anisotropy sieve"},
      {"conjecture", "closed formulas for G2"}};
  for (auto& [name, fn] : cmds) common(app.add_subcommand(name, help[name]), name == "cell" || name == "weights");
  auto* mol = app.add_subcommand("molien", "McKay graph and Molien series of a finite subgroup of SL2");
  mol->add_option("--group", cfg.group, "Z<n>, BD<order>, Q8, BT, BO or BI")->capture_default_str();
  mol->add_option("--json", cfg.json_path, "write the JSON report here");
  mol->add_option("--precision", cfg.precision, "digits in float digests")->capture_default_str();
  app.add_subcommand("bounds", "print the supported-level table");

  CLI11_PARSE(app, argc, argv);
  auto* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  try {
    if (name == "bounds") {
      std::cout << bound_table();
      return 0;
    }
    if (name == "molien") return cmd_molien(cfg);
    if (cfg.l < 2) throw UsageError("--l must be at least 2");
    cfg.lie();
    return cmds.at(name)(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << bound_table();
    return 2;
  } catch (const rootdata::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << bound_table();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
