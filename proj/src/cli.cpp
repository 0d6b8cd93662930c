#include "qtilt/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "qtilt/tilt_tau.hpp"

namespace qtilt {

namespace {

using nlohmann::json;
using DimList = std::vector<std::vector<int>>;

struct Options {
  std::string family, spec_file, json_file, field, hasse_file, module = "regular";
  std::size_t budget = 100000;
  int degree = 3, n = 1, depth = 0;
  std::uint64_t seed = 0;
  bool force = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dimvec(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::string dimlist(const DimList& ds) {
  if (ds.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? " + " : "") + dimvec(ds[i]);
  return s;
}

DimList summand_dims(const std::vector<Representation>& ms) {
  DimList d;
  for (const auto& m : ms) d.push_back(m.dims());
  std::sort(d.begin(), d.end());
  return d;
}

std::string vertex_sum(const AlgebraPtr& alg, const char* kind, std::vector<int> vs) {
  if (vs.empty()) return "0";
  std::sort(vs.begin(), vs.end());
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? "+" : "") + std::string(kind) + alg->quiver().vertex_label(vs[i]);
  return s;
}

json vertex_labels(const AlgebraPtr& alg, const std::vector<int>& vs) {
  json j = json::array();
  for (int v : vs) j.push_back(alg->quiver().vertex_label(v));
  return j;
}

json bounded(const BoundedDim& b) {
  return b.at_least ? json{{"at_least", b.value}} : json(b.value);
}

json algebra_json(const AlgebraPtr& alg) {
  return {{"vertices", alg->quiver().vertex_labels()},
          {"arrows", alg->quiver().num_arrows()},
          {"dim", alg->dim()},
          {"field", current_field().str()}};
}

void write_json(const Options& o, const json& j) {
  if (o.json_file.empty()) return;
  std::ofstream f(o.json_file);
  if (!f) throw Error("cannot write " + o.json_file);
  f << j.dump(2) << "\n";
}

AlgebraPtr load_algebra(const Options& o, std::optional<FieldScope>& scope) {
  if (o.family.empty() == o.spec_file.empty()) throw Error("exactly one of --family or --spec is required");
  AlgebraSpec spec = o.family.empty() ? parse_spec(read_file(o.spec_file)) : family_spec(o.family);
  if (!o.field.empty()) spec.field = Field::parse(o.field).str();
  scope.emplace(spec_field(spec));
  return build_from_spec(spec);
}

Representation pick_module(const AlgebraPtr& alg, const std::string& what) {
  if (what == "regular") return regular_module(alg);
  if (what.size() >= 2 && (what[0] == 'P' || what[0] == 'I' || what[0] == 'S')) {
    int v = alg->quiver().vertex_index(what.substr(1));
    if (what[0] == 'P') return projective(alg, v);
    if (what[0] == 'I') return injective(alg, v);
    return simple(alg, v);
  }
  throw Error("--module: expected regular, P<v>, I<v> or S<v>");
}

void print_header(std::ostream& out, const AlgebraPtr& alg) {
  out << "algebra: " << alg->num_vertices() << " vertices, " << alg->quiver().num_arrows() << " arrows, dim "
      << alg->dim() << " over " << current_field().str() << "\n";
}

int cmd_analyze(const Options& o, const AlgebraPtr& alg, std::ostream& out) {
  int depth = o.depth > 0 ? o.depth : alg->num_vertices() + 1;
  GorensteinProfile p = gorenstein_profile(alg, depth, depth + 1);
  BoundedDim idl = inj_dim(regular_module(alg), depth + 1);
  BoundedDim idr = inj_dim(regular_module(opposite_algebra(alg)), depth + 1);
  print_header(out, alg);
  out << "degree  I^i(Λ)                      pd\n";
  json degrees = json::array();
  for (const auto& d : p.degrees) {
    std::string terms = vertex_sum(alg, "I", d.injective_vertices);
    out << d.degree << std::string(8 - std::to_string(d.degree).size(), ' ') << terms
        << std::string(terms.size() < 28 ? 28 - terms.size() : 1, ' ') << (d.injective_vertices.empty() ? "-" : d.pd.str())
        << (d.projective && !d.injective_vertices.empty() ? "  projective" : "") << "\n";
    degrees.push_back({{"degree", d.degree},
                       {"injectives", vertex_labels(alg, d.injective_vertices)},
                       {"pd", bounded(d.pd)},
                       {"projective", d.projective}});
  }
  out << "n-Gorenstein for n <= " << p.n_gorenstein_up_to << (p.n_gorenstein_up_to == depth ? " (all checked)" : "")
      << "\nquasi n-Gorenstein for n <= " << p.quasi_up_to << (p.quasi_up_to == depth ? " (all checked)" : "")
      << "\ndominant dimension " << p.dominant_dimension.str() << "\nid Λ = " << idl.str() << ", id Λ^op = " << idr.str()
      << "\n";
  write_json(o, {{"command", "analyze"},
                 {"algebra", algebra_json(alg)},
                 {"depth", depth},
                 {"degrees", degrees},
                 {"n_gorenstein_up_to", p.n_gorenstein_up_to},
                 {"quasi_gorenstein_up_to", p.quasi_up_to},
                 {"dominant_dimension", bounded(p.dominant_dimension)},
                 {"id_left", bounded(idl)},
                 {"id_right", bounded(idr)}});
  return 0;
}

int cmd_coresolve(const Options& o, const AlgebraPtr& alg, std::ostream& out) {
  Representation m = pick_module(alg, o.module);
  Resolution r = min_inj_coresolution(m, o.degree);
  print_header(out, alg);
  out << "minimal injective coresolution of " << o.module << " " << m.dimvec_string() << "\n";
  json terms = json::array();
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    out << "I^" << i << " = " << vertex_sum(alg, "I", r.term_vertices[i]) << "  " << r.terms[i].dimvec_string()
        << "\n";
    terms.push_back({{"degree", i}, {"injectives", vertex_labels(alg, r.term_vertices[i])}, {"dims", r.terms[i].dims()}});
  }
  out << (r.finite ? "finite, length " + std::to_string(r.length()) : "truncated at degree " + std::to_string(o.degree))
      << "\n";
  write_json(o, {{"command", "coresolve"},
                 {"algebra", algebra_json(alg)},
                 {"module", o.module},
                 {"terms", terms},
                 {"finite", r.finite}});
  return 0;
}

int cmd_min_tilt(const Options& o, const AlgebraPtr& alg, std::ostream& out) {
  MinimalTilting mt = minimal_tilting(alg, o.n, o.force);
  DimList d = summand_dims(mt.summands);
  print_header(out, alg);
  if (!mt.hypotheses_hold) out << "hypotheses fail: " << mt.failure << "\n";
  out << "T_" << o.n << " summands:";
  for (const auto& v : d) out << " " << dimvec(v);
  out << "\npd T = " << mt.certificate.pd.str() << "\ntilting: " << (mt.certificate.ok ? "verified" : "no (" + mt.certificate.failure + ")")
      << "\n";
  if (mt.certificate.ok) out << "minimal in tilt_" << o.n << ": " << (is_minimal_in_tiltn(mt.summands, o.n) ? "yes" : "no") << "\n";
  write_json(o, {{"command", "min-tilt"},
                 {"algebra", algebra_json(alg)},
                 {"n", o.n},
                 {"hypotheses_hold", mt.hypotheses_hold},
                 {"summands", d},
                 {"pd", bounded(mt.certificate.pd)},
                 {"verified", mt.certificate.ok}});
  return mt.certificate.ok ? 0 : 1;
}

EnumerationOptions enum_options(const Options& o) {
  EnumerationOptions e;
  e.node_budget = o.budget;
  e.shuffle_seed = o.seed;
  return e;
}

int cmd_enum_tilt(const Options& o, const AlgebraPtr& alg, std::ostream& out, std::ostream& err) {
  ModuleRegistry reg(alg);
  std::vector<DimList> mods;
  std::string status;
  bool complete;
  if (o.n == 1) {
    TiltingEnumeration t = tilt1_enumerate(reg, enum_options(o));
    for (const auto& r : t.records) mods.push_back(r.summand_dims);
    status = t.status;
    complete = t.complete;
  } else {
    MutationGraph g = tiltn_enumerate(reg, o.n, enum_options(o));
    for (const auto& node : g.nodes) mods.push_back(node_dims(reg, node));
    status = g.status;
    complete = g.status != "budget exceeded";
  }
  std::sort(mods.begin(), mods.end());
  print_header(out, alg);
  out << mods.size() << " tilting modules with pd <= " << o.n << " (" << status << ")\n";
  for (const auto& m : mods) out << "  " << dimlist(m) << "\n";
  write_json(o, {{"command", "enum tilt"},
                 {"algebra", algebra_json(alg)},
                 {"n", o.n},
                 {"status", status},
                 {"count", mods.size()},
                 {"modules", mods}});
  if (!complete) err << "incomplete enumeration: node budget " << o.budget << " exceeded\n";
  return complete ? 0 : 2;
}

int cmd_enum_sttilt(const Options& o, const AlgebraPtr& alg, std::ostream& out, std::ostream& err) {
  ModuleRegistry reg(alg);
  MutationGraph g = sttilt_enumerate(reg, enum_options(o));
  std::vector<std::pair<DimList, std::vector<int>>> rows;
  for (const auto& node : g.nodes) rows.emplace_back(node_dims(reg, node), support_complement(reg, node));
  std::sort(rows.begin(), rows.end());
  print_header(out, alg);
  out << rows.size() << " support τ-tilting pairs (" << g.status << ")\n";
  json list = json::array();
  for (const auto& [m, p] : rows) {
    out << "  M = " << dimlist(m) << "   P = " << vertex_sum(alg, "P", p) << "\n";
    list.push_back({{"m", m}, {"p", vertex_labels(alg, p)}});
  }
  write_json(o, {{"command", "enum sttilt"},
                 {"algebra", algebra_json(alg)},
                 {"status", g.status},
                 {"count", rows.size()},
                 {"pairs", list}});
  if (!g.complete) err << "incomplete enumeration: node budget " << o.budget << " exceeded\n";
  return g.complete ? 0 : 2;
}

int cmd_order(const Options& o, const AlgebraPtr& alg, std::ostream& out, std::ostream& err) {
  ModuleRegistry reg(alg);
  MutationGraph g = tiltn_enumerate(reg, o.n, enum_options(o));
  const int k = static_cast<int>(g.nodes.size());
  std::vector<int> below(k, 0), above(k, 0);
  for (const auto& [a, b] : g.order) {
    ++below[a];
    ++above[b];
  }
  print_header(out, alg);
  out << k << " tilting modules with pd <= " << o.n << " (" << g.status << "), " << g.order.size()
      << " comparable pairs\n";
  auto report = [&](const char* what, const std::vector<int>& cnt) {
    for (int i = 0; i < k; ++i)
      if (cnt[i] == k) out << what << ": " << dimlist(node_dims(reg, g.nodes[i])) << "\n";
  };
  report("maximum", below);
  report("minimum", above);
  if (!o.hasse_file.empty()) {
    std::ofstream f(o.hasse_file);
    if (!f) throw Error("cannot write " + o.hasse_file);
    f << graph_to_dot(reg, g);
    out << "wrote " << o.hasse_file << "\n";
  }
  json nodes = json::array(), order = json::array(), edges = json::array();
  for (const auto& node : g.nodes) nodes.push_back(node_dims(reg, node));
  for (const auto& [a, b] : g.order) order.push_back({a, b});
  for (const auto& e : g.edges) edges.push_back({e.from, e.to});
  write_json(o, {{"command", "order"},
                 {"algebra", algebra_json(alg)},
                 {"n", o.n},
                 {"status", g.status},
                 {"nodes", nodes},
                 {"geq", order},
                 {"mutations", edges}});
  bool complete = g.status != "budget exceeded";
  if (!complete) err << "incomplete enumeration: node budget " << o.budget << " exceeded\n";
  return complete ? 0 : 2;
}

int cmd_bijection(const Options& o, const AlgebraPtr& alg, std::ostream& out, std::ostream& err) {
  BijectionReport r = bijection_check(alg, enum_options(o));
  print_header(out, alg);
  out << "E = {";
  for (std::size_t i = 0; i < r.e_vertices.size(); ++i) out << (i ? "," : "") << alg->quiver().vertex_label(r.e_vertices[i]);
  out << "}, eΛ faithful: " << (r.e_lambda_faithful ? "yes" : "no") << "\n";
  if (r.degenerate) out << "self-injective: Γ = 0\n";
  auto pairs = r.pairs;
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [t, g] : pairs) out << "  " << dimlist(t) << "  |->  " << dimlist(g) << "\n";
  out << r.tilt1_count << " <-> " << r.sttilt_count << ": "
      << (r.ok() ? "bijection" : !r.complete ? "incomplete" : "NOT a bijection") << "\n";
  json jp = json::array();
  for (const auto& [t, g] : pairs) jp.push_back({{"tilting", t}, {"image", g}});
  write_json(o, {{"command", "bijection"},
                 {"algebra", algebra_json(alg)},
                 {"e_vertices", vertex_labels(alg, r.e_vertices)},
                 {"e_lambda_faithful", r.e_lambda_faithful},
                 {"degenerate", r.degenerate},
                 {"tilt1_count", r.tilt1_count},
                 {"sttilt_count", r.sttilt_count},
                 {"injective", r.injective},
                 {"image_equals", r.image_equals},
                 {"complete", r.complete},
                 {"pairs", jp}});
  if (!r.complete) {
    err << "incomplete enumeration\n";
    return 2;
  }
  return r.ok() ? 0 : 1;
}

int cmd_iwanaga(const Options& o, const AlgebraPtr& alg, std::ostream& out) {
  IwanagaReport r = iwanaga_check(alg, o.n);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  print_header(out, alg);
  out << "id Λ = " << r.id_left.str() << ", id Λ^op = " << r.id_right.str() << "\n"
      << "(1) Iwanaga-Gorenstein with id <= " << o.n << ": " << yn(r.cond_iwanaga) << "\n"
      << "(2) id Λ <= " << o.n << ": " << yn(r.cond_left) << "\n"
      << "(3) id Λ^op <= " << o.n << ": " << yn(r.cond_right) << "\n"
      << "minimum of tilt_" << o.n << "(Λ): " << yn(r.min_tilting_left) << "\n"
      << "minimum of tilt_" << o.n << "(Λ^op): " << yn(r.min_tilting_right) << "\n"
      << "k-Gorenstein for all k <= " << r.gorenstein_checked_depth << ": " << yn(r.k_gorenstein_all_checked) << "\n";
  write_json(o, {{"command", "iwanaga"},
                 {"algebra", algebra_json(alg)},
                 {"n", o.n},
                 {"id_left", bounded(r.id_left)},
                 {"id_right", bounded(r.id_right)},
                 {"iwanaga", r.cond_iwanaga},
                 {"id_left_le_n", r.cond_left},
                 {"id_right_le_n", r.cond_right},
                 {"min_tilting_left", r.min_tilting_left},
                 {"min_tilting_right", r.min_tilting_right},
                 {"k_gorenstein_checked_depth", r.gorenstein_checked_depth},
                 {"k_gorenstein_all", r.k_gorenstein_all_checked}});
  return 0;
}

void common_flags(CLI::App* c, Options& o) {
  c->add_option("--family", o.family, "built-in family name:n");
  c->add_option("--spec", o.spec_file, "algebra spec file");
  c->add_option("--json", o.json_file, "write a JSON report");
  c->add_option("--budget", o.budget, "node budget for enumerations");
  c->add_option("--field", o.field, "override the field: Q or Fp:p");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"qtilt: tilting and support τ-tilting modules over bound quiver algebras", "qtilt"};
  app.require_subcommand(1);
  auto* analyze = app.add_subcommand("analyze", "Gorenstein profile of the algebra");
  analyze->add_option("--depth", o.depth, "number of coresolution degrees (default: vertices + 1)");
  auto* coresolve = app.add_subcommand("coresolve", "minimal injective coresolution");
  coresolve->add_option("--degree", o.degree, "last degree to compute");
  coresolve->add_option("--module", o.module, "regular, P<v>, I<v> or S<v>");
  auto* mintilt = app.add_subcommand("min-tilt", "minimum tilting module of tilt_n");
  mintilt->add_option("-n", o.n, "level")->required();
  mintilt->add_flag("--force", o.force, "construct even when the hypotheses fail");
  auto* enumerate = app.add_subcommand("enum", "enumerate tilting or support τ-tilting modules");
  std::string what;
  enumerate->add_option("kind", what, "tilt or sttilt")->required()->check(CLI::IsMember({"tilt", "sttilt"}));
  enumerate->add_option("-n", o.n, "pd bound for tilt");
  enumerate->add_option("--seed", o.seed, "randomize exploration order");
  auto* order = app.add_subcommand("order", "tilting order and Hasse diagram");
  order->add_option("-n", o.n, "pd bound");
  order->add_option("--hasse", o.hasse_file, "write the Hasse diagram as DOT");
  auto* bijection = app.add_subcommand("bijection", "tilt_1 of a 1-Gorenstein algebra vs sτ-tilt of its factor");
  auto* iwanaga = app.add_subcommand("iwanaga", "Iwanaga-Gorenstein conditions at level n");
  iwanaga->add_option("-n", o.n, "level")->required();
  for (auto* c : {analyze, coresolve, mintilt, enumerate, order, bijection, iwanaga}) common_flags(c, o);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (o.n < 0) throw Error("-n must be >= 0");
    if (o.budget == 0) throw Error("--budget must be positive");
    std::optional<FieldScope> scope;
    AlgebraPtr alg = load_algebra(o, scope);
    if (analyze->parsed()) return cmd_analyze(o, alg, out);
    if (coresolve->parsed()) return cmd_coresolve(o, alg, out);
    if (mintilt->parsed()) return cmd_min_tilt(o, alg, out);
    if (enumerate->parsed()) return what == "tilt" ? cmd_enum_tilt(o, alg, out, err) : cmd_enum_sttilt(o, alg, out, err);
    if (order->parsed()) return cmd_order(o, alg, out, err);
    if (bijection->parsed()) return cmd_bijection(o, alg, out, err);
    if (iwanaga->parsed()) return cmd_iwanaga(o, alg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace qtilt
