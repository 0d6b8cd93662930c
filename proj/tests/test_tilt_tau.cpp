#include <doctest.h>

#include <map>

#include "support.hpp"

using namespace qtilt;
using namespace qtest;

namespace {

using DimList = std::vector<std::vector<int>>;

bool same_pair(const SupportTauTiltingPair& a, const SupportTauTiltingPair& b) {
  auto pa = a.p, pb = b.p;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb && a.m.size() == b.m.size() && is_isomorphic(a.m_module(), b.m_module());
}

std::set<DimList> sttilt_sets(ModuleRegistry& reg, const MutationGraph& g) {
  std::set<DimList> s;
  for (const auto& node : g.nodes) s.insert(node_dims(reg, node));
  return s;
}

}  // namespace

TEST_SUITE("tilt_tau") {

TEST_CASE("tau-rigidity") {
  auto k = ka2();
  for (int v = 0; v < 2; ++v) CHECK(is_tau_rigid(projective(k, v)));
  CHECK(is_tau_rigid(simple(k, 0)));
  CHECK(!is_tau_rigid(simple(dual_numbers(), 0)));
  CHECK(!is_tau_rigid(direct_sum_module({simple(k, 0), simple(k, 1)})));
}

TEST_CASE("sτ-tilting mutation on KA2") {
  auto k = ka2();
  SupportTauTiltingPair lam{{projective(k, 0), projective(k, 1)}, {}, k};
  CHECK(check_pair(lam).ok());
  auto m0 = mutate_sttilt(lam, 0);
  CHECK(check_pair(m0).ok());
  REQUIRE(m0.m.size() == 1);
  CHECK(is_isomorphic(m0.m[0], projective(k, 1)));
  CHECK(m0.p == std::vector<int>{0});
  auto m1 = mutate_sttilt(lam, 1);
  CHECK(check_pair(m1).ok());
  CHECK(m1.p.empty());
  CHECK(is_isomorphic(m1.m_module(), direct_sum_module({projective(k, 0), simple(k, 0)})));
  // Involution: the new summand sits last in its list.
  auto back0 = mutate_sttilt(m0, m0.size() - 1);
  CHECK(same_pair(back0, lam));
  auto back1 = mutate_sttilt(m1, static_cast<int>(m1.m.size()) - 1);
  CHECK(same_pair(back1, lam));
  CHECK_THROWS(mutate_sttilt(lam, 2));
}

TEST_CASE("mutation is an involution at every position") {
  for (const char* f : {"nakayama_a:3", "preprojective_a:2", "auslander_uniserial:2", "radsquare_a:2"}) {
    auto a = family(f);
    ModuleRegistry reg(a);
    auto g = sttilt_enumerate(reg);
    for (const auto& node : g.nodes) {
      SupportTauTiltingPair pr{{}, support_complement(reg, node), a};
      for (int id : node) pr.m.push_back(reg.module(id));
      CHECK(check_pair(pr).ok());
      for (int k = 0; k < pr.size(); ++k) {
        auto mu = mutate_sttilt(pr, k);
        CHECK(check_pair(mu).ok());
        CHECK(!same_pair(mu, pr));
        // Locate the new summand: last of m when m kept its size or grew, else last of p.
        int back_index = mu.p.size() > pr.p.size() ? mu.size() - 1 : static_cast<int>(mu.m.size()) - 1;
        CHECK(same_pair(mutate_sttilt(mu, back_index), pr));
      }
    }
  }
}

TEST_CASE("dagger is an involution") {
  auto a = family("auslander_uniserial:3");
  ModuleRegistry reg(a);
  auto g = sttilt_enumerate(reg);
  for (const auto& node : g.nodes) {
    SupportTauTiltingPair pr{{}, support_complement(reg, node), a};
    for (int id : node) pr.m.push_back(reg.module(id));
    auto d = dagger(pr);
    CHECK(check_pair(d).ok());
    auto dd = dagger(d);
    CHECK(dd.algebra == a);
    CHECK(same_pair(dd, pr));
  }
}

TEST_CASE("sτ-tilt enumeration counts") {
  auto k2 = family("nakayama_a:2");
  ModuleRegistry reg(k2);
  auto g = sttilt_enumerate(reg);
  CHECK(g.complete);
  CHECK(sttilt_sets(reg, g) == std::set<DimList>{{}, {{0, 1}}, {{1, 0}}, {{0, 1}, {1, 1}}, {{1, 0}, {1, 1}}});
  const int catalan[] = {1, 2, 5, 14, 42};
  for (int n = 1; n <= 4; ++n) {
    ModuleRegistry r(family("nakayama_a:" + std::to_string(n)));
    CHECK(sttilt_enumerate(r).nodes.size() == static_cast<std::size_t>(catalan[n]));
  }
  ModuleRegistry pp(family("preprojective_a:2"));
  CHECK(sttilt_enumerate(pp).nodes.size() == 6);
}

TEST_CASE("every enumerated node is a support τ-tilting pair") {
  for (const char* f : {"auslander_nakayama:3", "preprojective_a:3", "radsquare_a:3"}) {
    auto a = family(f);
    ModuleRegistry reg(a);
    auto g = sttilt_enumerate(reg);
    CHECK(g.complete);
    for (const auto& node : g.nodes) {
      SupportTauTiltingPair pr{{}, support_complement(reg, node), a};
      for (int id : node) pr.m.push_back(reg.module(id));
      CHECK(check_pair(pr).ok());
    }
    for (const auto& e : g.edges) {
      // Edges exchange exactly one summand.
      std::vector<int> diff;
      std::set_symmetric_difference(g.nodes[e.from].begin(), g.nodes[e.from].end(), g.nodes[e.to].begin(),
                                    g.nodes[e.to].end(), std::back_inserter(diff));
      CHECK(diff.size() == (e.added < 0 ? 1u : 2u));
    }
  }
}

TEST_CASE("enumeration is independent of the exploration order") {
  for (const char* f : {"auslander_nakayama:3", "preprojective_a:3"}) {
    auto a = family(f);
    ModuleRegistry reg(a);
    auto g0 = sttilt_enumerate(reg);
    std::set<std::vector<int>> s0(g0.nodes.begin(), g0.nodes.end());
    for (std::uint64_t seed : {17u, 23u}) {
      EnumerationOptions o;
      o.shuffle_seed = seed;
      auto g = sttilt_enumerate(reg, o);
      CHECK(std::set<std::vector<int>>(g.nodes.begin(), g.nodes.end()) == s0);
    }
  }
}

TEST_CASE("budget exhaustion is reported") {
  ModuleRegistry reg(family("nakayama_a:4"));
  EnumerationOptions o;
  o.node_budget = 10;
  auto g = sttilt_enumerate(reg, o);
  CHECK(!g.complete);
  CHECK(g.status == "budget exceeded");
  CHECK(g.nodes.size() == 10);
}

TEST_CASE("tilt_1 of KA3") {
  ModuleRegistry reg(family("nakayama_a:3"));
  auto t = tilt1_enumerate(reg);
  CHECK(t.complete);
  std::set<DimList> got;
  for (const auto& r : t.records) got.insert(r.summand_dims);
  std::set<DimList> expected{
      {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}, {{0, 1, 0}, {1, 1, 0}, {1, 1, 1}}, {{0, 0, 1}, {1, 0, 0}, {1, 1, 1}},
      {{0, 1, 0}, {0, 1, 1}, {1, 1, 1}}, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
  CHECK(got == expected);
}

TEST_CASE("tilt_1 = faithful members of sτ-tilt, containing the projective-injectives") {
  for (const char* f : {"auslander_uniserial:3", "auslander_nakayama:3", "radsquare_a:3"}) {
    auto a = family(f);
    ModuleRegistry reg(a);
    auto g = sttilt_enumerate(reg);
    std::set<std::vector<int>> faithful;
    for (const auto& node : g.nodes) {
      if (node.empty()) continue;
      std::vector<Representation> parts;
      for (int id : node) parts.push_back(reg.module(id));
      if (is_faithful(direct_sum_module(parts))) faithful.insert(node);
    }
    auto t = tilt1_enumerate(reg);
    std::set<std::vector<int>> got;
    for (const auto& r : t.records) got.insert(r.ids);
    CHECK(got == faithful);
    std::vector<Representation> pi;
    for (int v = 0; v < a->num_vertices(); ++v)
      if (is_injective(projective(a, v))) pi.push_back(projective(a, v));
    for (const auto& r : t.records) {
      CHECK(static_cast<int>(r.ids.size()) == a->num_vertices());
      for (const auto& p : pi) CHECK(in_add(p, decompose(r.module).flat()));
    }
  }
  for (int n = 2; n <= 3; ++n) {
    ModuleRegistry reg(family("auslander_uniserial:" + std::to_string(n)));
    CHECK(tilt1_enumerate(reg).records.size() == (n == 2 ? 2u : 6u));
  }
}

TEST_CASE("tilting mutation") {
  auto k = ka2();
  auto v = mutate_tilting(std::vector<Representation>{projective(k, 0), projective(k, 1)}, 1, 1);
  REQUIRE(v);
  CHECK(is_isomorphic(direct_sum_module(*v), direct_sum_module({simple(k, 0), projective(k, 0)})));
  auto a = family("radsquare_a:2");
  std::vector<Representation> t0;
  for (int i = 0; i < 3; ++i) t0.push_back(projective(a, i));
  auto t1 = mutate_tilting(t0, 2, 1);  // X = P(3) = S(3)
  REQUIRE(t1);
  CHECK(is_isomorphic(direct_sum_module(*t1), minimal_tilting(a, 1).module));
  // Projective-injective summands are never exchanged.
  auto l = family("auslander_uniserial:3");
  ModuleRegistry reg(l);
  for (const auto& r : tilt1_enumerate(reg).records)
    for (int id : r.ids)
      if (is_projective(reg.module(id)) && is_injective(reg.module(id))) CHECK(!mutate_tilting(reg, r.ids, id, 1));
}

TEST_CASE("tilt_n enumeration and order") {
  auto a = family("radsquare_a:2");
  ModuleRegistry reg(a);
  auto g0 = tiltn_enumerate(reg, 0);
  CHECK(g0.nodes.size() == 1);
  auto g1 = tiltn_enumerate(reg, 1);
  auto t1 = minimal_tilting(a, 1);
  int min_index = -1, lam_index = -1;
  for (std::size_t i = 0; i < g1.nodes.size(); ++i) {
    std::vector<Representation> parts;
    for (int id : g1.nodes[i]) parts.push_back(reg.module(id));
    auto m = direct_sum_module(parts);
    if (is_isomorphic(m, t1.module)) min_index = static_cast<int>(i);
    if (is_isomorphic(m, regular_module(a))) lam_index = static_cast<int>(i);
  }
  REQUIRE(min_index >= 0);
  REQUIRE(lam_index >= 0);
  std::set<std::pair<int, int>> geq(g1.order.begin(), g1.order.end());
  for (std::size_t i = 0; i < g1.nodes.size(); ++i) {
    CHECK(geq.count({static_cast<int>(i), min_index}));
    CHECK(geq.count({lam_index, static_cast<int>(i)}));
  }
  // Antisymmetry.
  for (auto [x, y] : g1.order)
    if (x != y) CHECK(!geq.count({y, x}));
  auto k3 = family("nakayama_a:3");
  ModuleRegistry r3(k3);
  CHECK(tiltn_enumerate(r3, 1).nodes.size() == 5);
  auto g2 = tiltn_enumerate(reg, 2);
  CHECK(g2.status == "reachable component");
}

TEST_CASE("tilting order on T_0 >= T_1 >= T_2") {
  auto a = family("radsquare_a:2");
  auto t0 = minimal_tilting(a, 0).module, t1 = minimal_tilting(a, 1).module, t2 = minimal_tilting(a, 2).module;
  CHECK(tilting_order_geq(t0, t1));
  CHECK(tilting_order_geq(t1, t2));
  CHECK(tilting_order_geq(t0, t2));
  CHECK(!tilting_order_geq(t2, t0));
  CHECK(tilting_order_leq(t2, t1));
  CHECK(!tilting_order_leq(t0, t1));
}

TEST_CASE("minimality certificates") {
  for (int n = 2; n <= 3; ++n) {
    auto a = family("radsquare_a:" + std::to_string(n));
    for (int j = 0; j <= n; ++j) CHECK(is_minimal_in_tiltn(minimal_tilting(a, j).summands, j));
  }
  auto k = ka2();
  std::vector<Representation> lam{projective(k, 0), projective(k, 1)};
  CHECK(is_minimal_in_tiltn(lam, 0));
  CHECK(!is_minimal_in_tiltn(lam, 1));
}

TEST_CASE("tensor to the factor algebra") {
  auto a = family("nakayama_a:3");
  auto g = quotient_by_idempotent(a, {2});
  auto f1 = tensor_to_factor(
      direct_sum_module({interval_module(a, {1, 3}), interval_module(a, {1, 2}), interval_module(a, {2, 2})}), {2}, g);
  // P'(2) + S'(2) over Γ = KA2 (2 -> 1).
  CHECK(summand_dims(f1) == DimList{{0, 1}, {1, 1}});
  auto f2 = tensor_to_factor(
      direct_sum_module({interval_module(a, {1, 3}), interval_module(a, {3, 3}), interval_module(a, {2, 3})}), {2}, g);
  CHECK(f2.is_zero());
  auto f3 = tensor_to_factor(regular_module(a), {2}, g);
  CHECK(is_isomorphic(f3, regular_module(g)));
}

TEST_CASE("bijection tilt_1 <-> sτ-tilt of the factor") {
  auto r = bijection_check(family("nakayama_a:3"));
  CHECK(r.e_vertices == std::vector<int>{2});
  CHECK(r.e_lambda_faithful);
  CHECK(r.tilt1_count == 5);
  CHECK(r.sttilt_count == 5);
  CHECK(r.ok());
  auto u = bijection_check(family("auslander_uniserial:3"));
  CHECK(u.tilt1_count == 6);
  CHECK(u.sttilt_count == 6);
  CHECK(u.ok());
  auto d = bijection_check(dual_numbers());
  CHECK(d.degenerate);
  CHECK(d.tilt1_count == 1);
  CHECK(d.ok());
  // Not 1-Gorenstein: I^0(Λ) has a non-projective summand.
  auto a3 = from_text("vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 3 -> 2\n");
  CHECK_THROWS_WITH_AS(bijection_check(a3), doctest::Contains("not 1-Gorenstein"), Error);
}

TEST_CASE("DOT export") {
  auto a = family("radsquare_a:2");
  ModuleRegistry reg(a);
  auto g = tiltn_enumerate(reg, 1);
  auto dot = graph_to_dot(reg, g);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("(1,1,0)") != std::string::npos);
}

}
