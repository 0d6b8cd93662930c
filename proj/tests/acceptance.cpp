// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace qtilt;
using namespace qtest;

namespace {

using DimList = std::vector<std::vector<int>>;

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cli_code(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = run(args, o, e);
  if (out) *out = o.str();
  return code;
}

Representation sum_of(const ModuleRegistry& reg, const std::vector<int>& ids) {
  std::vector<Representation> parts;
  for (int id : ids) parts.push_back(reg.module(id));
  return parts.empty() ? Representation::zero(reg.algebra()) : direct_sum_module(parts);
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// --- 1. tilt_1(KA3), sτ-tilt(KA2) and the bijection between them.
Verdict criterion1() {
  Verdict v;
  auto a = family("nakayama_a:3");
  auto P = [&](int i) { return projective(a, i - 1).dims(); };
  auto S = [&](int i) { return simple(a, i - 1).dims(); };
  auto I = [&](int i) { return injective(a, i - 1).dims(); };
  auto sorted = [](DimList d) {
    std::sort(d.begin(), d.end());
    return d;
  };
  std::set<DimList> expected{sorted({P(1), P(2), P(3)}), sorted({P(3), P(2), S(2)}), sorted({P(3), S(1), S(3)}),
                             sorted({P(3), S(2), I(2)}), sorted({P(3), S(3), I(2)})};
  ModuleRegistry reg(a);
  auto t = tilt1_enumerate(reg);
  std::set<DimList> got;
  for (const auto& r : t.records) got.insert(r.summand_dims);
  v.require(t.records.size() == 5, "tilt_1 count " + std::to_string(t.records.size()));
  v.require(got == expected, "tilt_1 modules differ");
  std::string out;
  v.require(cli_code({"enum", "tilt", "-n", "1", "--family", "nakayama_a:3"}, &out) == 0 &&
                out.find("5 tilting modules") != std::string::npos,
            "CLI enum tilt");
  v.require(cli_code({"enum", "sttilt", "--family", "nakayama_a:2"}, &out) == 0 &&
                out.find("5 support τ-tilting pairs") != std::string::npos,
            "CLI enum sttilt");
  auto b = bijection_check(a);
  v.require(b.ok() && b.tilt1_count == 5 && b.sttilt_count == 5, "bijection");
  v.require(cli_code({"bijection", "--family", "nakayama_a:3"}, &out) == 0 &&
                out.find("5 <-> 5: bijection") != std::string::npos,
            "CLI bijection");
  v.detail = v.detail.empty() ? "5 tilting modules match; 5 sτ-tilting pairs; 5 <-> 5 via T/T(e)" : v.detail;
  return v;
}

// --- 2. Catalan counts for sτ-tilt(KA_n).
Verdict criterion2() {
  Verdict v;
  std::string counts;
  for (int n = 1; n <= 4; ++n) {
    mpz_class num, den1, den2;
    mpz_fac_ui(num.get_mpz_t(), 2 * (n + 1));
    mpz_fac_ui(den1.get_mpz_t(), n + 2);
    mpz_fac_ui(den2.get_mpz_t(), n + 1);
    mpz_class expect = num / (den1 * den2);
    ModuleRegistry reg(family("nakayama_a:" + std::to_string(n)));
    auto g = sttilt_enumerate(reg);
    counts += (n > 1 ? ", " : "") + std::to_string(g.nodes.size());
    v.require(g.complete && mpz_class(static_cast<unsigned long>(g.nodes.size())) == expect,
              "n=" + std::to_string(n) + " expected " + expect.get_str());
  }
  if (v.pass) v.detail = "counts " + counts;
  return v;
}

// --- 3. n! counts on both sides of the Auslander/preprojective correspondence.
Verdict criterion3() {
  Verdict v;
  std::string counts;
  for (int n = 2; n <= 4; ++n) {
    ModuleRegistry reg(family("auslander_uniserial:" + std::to_string(n)));
    auto t = tilt1_enumerate(reg);
    ModuleRegistry pre(family("preprojective_a:" + std::to_string(n - 1)));
    auto g = sttilt_enumerate(pre);
    counts += (n > 2 ? ", " : "") + std::to_string(t.records.size()) + "/" + std::to_string(g.nodes.size());
    v.require(t.complete && t.records.size() == factorial(n), "tilt_1 n=" + std::to_string(n));
    v.require(g.complete && g.nodes.size() == factorial(n), "sτ-tilt n=" + std::to_string(n));
  }
  if (v.pass) v.detail = "tilt_1/sτ-tilt counts " + counts;
  return v;
}

// --- 4. Coresolution, minimum tilting modules and their minimality for rad^2 = 0.
Verdict criterion4() {
  Verdict v;
  for (int n = 2; n <= 3; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    auto a = family("radsquare_a:" + std::to_string(n));
    auto vtx = [&](int i) { return vx(a, std::to_string(i)); };
    auto r = min_inj_coresolution(regular_module(a), n + 2);
    std::vector<std::vector<int>> expect(n + 1);
    for (int i = 2; i <= n + 1; ++i) expect[0].push_back(vtx(i));
    expect[0].push_back(vtx(n + 1));
    for (int k = 1; k <= n; ++k) expect[k].push_back(vtx(n + 1 - k));
    auto got = r.term_vertices;
    for (auto& t : got) std::sort(t.begin(), t.end());
    for (auto& t : expect) std::sort(t.begin(), t.end());
    v.require(r.finite && got == expect, tag + ": coresolution differs");
    ModuleRegistry reg(a);
    for (int j = 0; j <= n; ++j) {
      const std::string tj = tag + " j=" + std::to_string(j);
      std::vector<Representation> tj_parts;
      for (int i = 2; i <= n + 1; ++i) tj_parts.push_back(injective(a, vtx(i)));
      tj_parts.push_back(simple(a, vtx(n - j + 1)));
      auto mt = minimal_tilting(a, j);
      v.require(mt.certificate.ok, tj + ": not verified");
      v.require(is_isomorphic(mt.module, direct_sum_module(tj_parts)), tj + ": T_j differs");
      v.require(is_minimal_in_tiltn(mt.summands, j), tj + ": not minimal");
      auto g = tiltn_enumerate(reg, j);
      v.require(g.status != "budget exceeded", tj + ": enumeration budget");
      for (const auto& node : g.nodes) {
        auto e = ext_dims(sum_of(reg, node), mt.module, std::max(j, 1));
        v.require(std::all_of(e.begin(), e.end(), [](int d) { return d == 0; }), tj + ": Ext(U, T_j) != 0");
      }
    }
  }
  if (v.pass) v.detail = "coresolutions, T_0..T_n, minimality and Ext(U,T_j)=0 on enumerated tilt_j for n=2,3";
  return v;
}

// --- 5. Finite enumeration for small Auslander algebras, budget exhaustion for n = 5.
Verdict criterion5() {
  Verdict v;
  std::string info;
  for (int n = 2; n <= 3; ++n) {
    ModuleRegistry reg(family("auslander_nakayama:" + std::to_string(n)));
    auto g0 = sttilt_enumerate(reg);
    std::set<std::vector<int>> s0(g0.nodes.begin(), g0.nodes.end());
    v.require(g0.complete, "n=" + std::to_string(n) + " did not terminate");
    for (std::uint64_t seed : {101u, 202u}) {
      EnumerationOptions o;
      o.shuffle_seed = seed;
      auto g = sttilt_enumerate(reg, o);
      v.require(g.complete && std::set<std::vector<int>>(g.nodes.begin(), g.nodes.end()) == s0,
                "n=" + std::to_string(n) + " order dependent");
    }
    info += "n=" + std::to_string(n) + ": " + std::to_string(s0.size()) + " nodes; ";
  }
  ModuleRegistry reg5(family("auslander_nakayama:5"));
  EnumerationOptions o;
  o.node_budget = 100000;
  o.record_edges = false;
  auto g5 = sttilt_enumerate(reg5, o);
  v.require(!g5.complete && g5.status == "budget exceeded", "n=5 did not exceed the budget");
  info += "n=5: " + g5.status + " at " + std::to_string(g5.nodes.size()) + " nodes";
  if (v.pass) v.detail = info;
  return v;
}

// --- 6. Mutation-based tilt_1(KA_n) against a brute-force subset oracle.
Verdict criterion6() {
  Verdict v;
  std::string counts;
  for (int n = 1; n <= 4; ++n) {
    auto a = family("nakayama_a:" + std::to_string(n));
    auto iv = intervals(n);
    const int m = static_cast<int>(iv.size());
    std::set<DimList> oracle;
    std::vector<int> pick(m, 0);
    std::fill(pick.end() - n, pick.end(), 1);
    do {
      std::vector<Interval> chosen;
      for (int i = 0; i < m; ++i)
        if (pick[i]) chosen.push_back(iv[i]);
      bool rigid = true;
      for (auto x : chosen)
        for (auto y : chosen)
          if (interval_ext(n, x, y) != 0) rigid = false;
      if (!rigid) continue;
      std::vector<Representation> parts;
      DimList dims;
      for (auto x : chosen) {
        parts.push_back(interval_module(a, x));
        dims.push_back(interval_dims(n, x));
      }
      if (!verify_tilting_summands(parts, 1).ok) {
        v.require(false, "rigid subset failed tilting verification");
        continue;
      }
      std::sort(dims.begin(), dims.end());
      oracle.insert(dims);
    } while (std::next_permutation(pick.begin(), pick.end()));
    ModuleRegistry reg(a);
    auto t = tilt1_enumerate(reg);
    std::set<DimList> got;
    for (const auto& r : t.records) got.insert(r.summand_dims);
    v.require(t.complete && got == oracle && got.size() == t.records.size(), "n=" + std::to_string(n) + " differs");
    counts += (n > 1 ? ", " : "") + std::to_string(oracle.size());
  }
  if (v.pass) v.detail = "equal sets for n=1..4 (sizes " + counts + ")";
  return v;
}

// --- 7. Randomized homological identities.
Verdict criterion7() {
  Verdict v;
  const std::vector<std::string> fams = {"nakayama_a:3",          "radsquare_a:2",   "radsquare_a:3",
                                         "auslander_uniserial:3", "preprojective_a:2", "auslander_nakayama:3",
                                         "nakayama_a:4",          "auslander_uniserial:2"};
  std::mt19937_64 gen(20240601);
  int failures = 0, modules = 0;
  auto fail = [&](const std::string& what) {
    if (failures++ < 5) v.require(false, what);
  };
  for (int t = 0; t < 200; ++t) {
    const std::string& f = fams[t % fams.size()];
    auto a = family(f);
    auto m = random_module(a, gen);
    auto n = random_module(a, gen);
    ++modules;
    const std::string tag = f + " #" + std::to_string(t);
    if (!m.satisfies_relations() || !n.satisfies_relations()) fail(tag + ": relations");
    for (int i = 0; i < a->num_vertices(); ++i)
      if (hom_dim(projective(a, i), m) != m.dim(i)) fail(tag + ": Yoneda");
    auto h = random_hom(m, n, gen);
    auto k = kernel(h);
    auto c = cokernel(h);
    for (int i = 0; i < a->num_vertices(); ++i) {
      int r = static_cast<int>(rank(h.comps[i]));
      if (k.module.dim(i) + r != m.dim(i) || c.module.dim(i) + r != n.dim(i)) fail(tag + ": rank-nullity");
    }
    if (!compose(h, k.inclusion).is_zero() || !compose(c.projection, h).is_zero()) fail(tag + ": complex");
    auto back = tau_inverse(tau(m));
    if (!is_isomorphic(strip_projectives(m), back)) fail(tag + ": tau^- tau");
    if (ext_dim(m, n, 1) != stable_hom_injective_dim(n, tau(m))) fail(tag + ": AR duality");
  }
  if (failures) v.detail += " (" + std::to_string(failures) + " failures)";
  if (v.pass) v.detail = std::to_string(modules) + " module pairs, zero failures";
  return v;
}

// --- 8. Iwanaga-Gorenstein checks at the injective-dimension level.
Verdict criterion8() {
  Verdict v;
  std::vector<std::pair<AlgebraPtr, std::string>> algs = {{ka2(), "KA2"}, {family("nakayama_a:2"), "nakayama_a:2"}};
  for (int n = 2; n <= 3; ++n) algs.emplace_back(family("radsquare_a:" + std::to_string(n)), "radsquare_a:" + std::to_string(n));
  std::string info;
  for (const auto& [a, name] : algs) {
    BoundedDim id = inj_dim(regular_module(a), 8);
    v.require(id.finite(), name + ": id infinite");
    auto r = iwanaga_check(a, id.value);
    v.require(r.id_left == r.id_right, name + ": id differs");
    v.require(r.cond_iwanaga, name + ": not Iwanaga-Gorenstein");
    v.require(r.min_tilting_left && r.min_tilting_right, name + ": minimum tilting missing");
    info += name + " id=" + r.id_left.str() + "; ";
  }
  if (v.pass) v.detail = info + "minimum tilting on both sides";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"tilt_1(KA3), sτ-tilt(KA2) and their bijection (limit 5 s)", criterion1},
      {"sτ-tilt(KA_n) Catalan counts (limit 60 s)", criterion2},
      {"tilt_1 / sτ-tilt n! counts (limit 600 s)", criterion3},
      {"rad-square coresolutions and minimum tilting modules (limit 30 s)", criterion4},
      {"Auslander algebras of KA_n frontier (limit 900 s)", criterion5},
      {"brute-force oracle equivalence", criterion6},
      {"randomized homological identities", criterion7},
      {"Iwanaga-Gorenstein checks", criterion8},
  };
  const double limits[] = {5, 60, 600, 30, 900, 0, 0, 0};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    double s = seconds_since(t0);
    if (limits[i] > 0 && s > limits[i]) {
      v.pass = false;
      v.detail += "; over time limit";
    }
    failed += !v.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << " - " << criteria[i].first << " - "
         << v.detail << " [" << s << " s]";
    std::cout << line.str() << std::endl;
  }
  return failed ? 1 : 0;
}
