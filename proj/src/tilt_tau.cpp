#include "qtilt/tilt_tau.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace qtilt {

// ---------------------------------------------------------------- registry

std::optional<int> ModuleRegistry::find(const Representation& m) const {
  auto it = by_dims_.find(m.dims());
  if (it == by_dims_.end()) return std::nullopt;
  for (int id : it->second)
    if (is_isomorphic_indecomposable(entries_[id].module, m)) return id;
  return std::nullopt;
}

int ModuleRegistry::intern(const Representation& m) {
  if (m.algebra() != alg_) throw Error("registry: module over a different algebra");
  if (auto id = find(m)) return *id;
  if (!is_indecomposable(m)) throw Error("registry: module " + m.dimvec_string() + " is not indecomposable");
  Entry e{m, -1};
  auto td = top_dims(m);
  int tops = 0, v0 = -1;
  for (std::size_t v = 0; v < td.size(); ++v)
    if (td[v]) {
      tops += td[v];
      v0 = static_cast<int>(v);
    }
  if (tops == 1 && projective(alg_, v0).dims() == m.dims()) e.projective_vertex = v0;
  int id = static_cast<int>(entries_.size());
  entries_.push_back(std::move(e));
  by_dims_[m.dims()].push_back(id);
  if (entries_.back().projective_vertex >= 0) projective_ids_[entries_.back().projective_vertex] = id;
  return id;
}

std::vector<int> ModuleRegistry::intern_summands(const Representation& m) {
  std::vector<int> ids;
  if (m.is_zero()) return ids;
  if (auto id = find(m)) return {*id};
  for (const auto& part : decompose_with_inclusions(m)) ids.push_back(intern(part.module));
  return ids;
}

int ModuleRegistry::projective_id(int v) {
  auto it = projective_ids_.find(v);
  if (it != projective_ids_.end()) return it->second;
  return intern(projective(alg_, v));
}

const std::vector<ModuleMap>& ModuleRegistry::hom(int from, int to) {
  auto key = std::make_pair(from, to);
  auto it = hom_.find(key);
  if (it != hom_.end()) return it->second;
  return hom_[key] = hom_basis(module(from), module(to));
}

const std::vector<ModuleMap>& ModuleRegistry::rad(int from, int to) {
  if (from != to) return hom(from, to);
  auto key = std::make_pair(from, to);
  auto it = rad_.find(key);
  if (it != rad_.end()) return it->second;
  return rad_[key] = radical_maps(module(from), module(to), true);
}

const std::vector<Matrix>& ModuleRegistry::trace(int from, int to) {
  auto key = std::make_pair(from, to);
  auto it = trace_.find(key);
  if (it != trace_.end()) return it->second;
  const Representation& x = module(to);
  std::vector<Matrix> out;
  const auto& h = hom(from, to);
  for (int v = 0; v < alg_->num_vertices(); ++v) {
    Matrix cols(x.dim(v), 0);
    for (const auto& f : h) cols = hstack(cols, f.comps[v]);
    out.push_back(cols.cols() ? column_space(cols) : cols);
  }
  return trace_[key] = std::move(out);
}

LeftApproximation registry_left_approximation(ModuleRegistry& reg, int x, const std::vector<int>& u) {
  const Representation& xm = reg.module(x);
  LeftApproximation out;
  std::vector<Representation> parts;
  std::vector<const ModuleMap*> chosen;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const auto& hk = reg.hom(x, u[k]);
    int dk = 0;
    if (!hk.empty()) {
      EchelonBasis span(hk.front().flatten().size());
      for (std::size_t l = 0; l < u.size(); ++l) {
        const auto& hl = reg.hom(x, u[l]);
        if (hl.empty()) continue;
        for (const auto& r : reg.rad(u[l], u[k])) {
          for (const auto& h : hl) {
            if (span.dim() == hk.size()) break;
            span.add(compose(r, h).flatten());
          }
        }
      }
      for (const auto& h : hk)
        if (span.dim() < hk.size() && span.add(h.flatten())) {
          chosen.push_back(&h);
          parts.push_back(reg.module(u[k]));
          ++dk;
        }
    }
    out.multiplicities.push_back(dk);
  }
  if (parts.empty()) {
    out.map = ModuleMap::zero(xm, Representation::zero(xm.algebra()));
    return out;
  }
  Representation target = direct_sum_module(parts);
  ModuleMap f{xm, target, {}};
  for (int v = 0; v < xm.algebra()->num_vertices(); ++v) {
    Matrix m(0, xm.dim(v));
    for (const auto* h : chosen) m = vstack(m, h->comps[v]);
    f.comps.push_back(std::move(m));
  }
  out.map = std::move(f);
  return out;
}

bool registry_in_fac(ModuleRegistry& reg, int x, const std::vector<int>& u) {
  const Representation& xm = reg.module(x);
  for (int v = 0; v < xm.algebra()->num_vertices(); ++v) {
    if (xm.dim(v) == 0) continue;
    Matrix cols(xm.dim(v), 0);
    for (int k : u) cols = hstack(cols, reg.trace(k, x)[v]);
    if (static_cast<int>(rank(cols)) < xm.dim(v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- pairs

Representation SupportTauTiltingPair::m_module() const {
  return m.empty() ? Representation::zero(algebra) : direct_sum_module(m);
}

Representation SupportTauTiltingPair::p_module() const {
  if (p.empty()) return Representation::zero(algebra);
  std::vector<Representation> parts;
  for (int v : p) parts.push_back(projective(algebra, v));
  return direct_sum_module(parts);
}

bool is_tau_rigid(const Representation& n) {
  if (n.is_zero()) return true;
  return hom_dim(n, tau(n)) == 0;
}

PairCheck check_pair(const SupportTauTiltingPair& pair) {
  PairCheck c;
  Representation m = pair.m_module();
  c.tau_rigid = is_tau_rigid(m);
  c.hom_p_m_zero = true;
  for (int v : pair.p)
    if (m.dim(v) != 0) c.hom_p_m_zero = false;
  c.count_ok = pair.size() == pair.algebra->num_vertices();
  return c;
}

namespace {

std::vector<int> support_complement_of(const std::vector<Representation>& m, const AlgebraPtr& alg) {
  std::vector<int> out;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    bool zero = true;
    for (const auto& x : m)
      if (x.dim(v)) zero = false;
    if (zero) out.push_back(v);
  }
  return out;
}

bool in_fac_generic(const Representation& x, const std::vector<Representation>& u) {
  for (int v = 0; v < x.algebra()->num_vertices(); ++v) {
    if (x.dim(v) == 0) continue;
    Matrix cols(x.dim(v), 0);
    for (const auto& uk : u)
      for (const auto& f : hom_basis(uk, x)) cols = hstack(cols, f.comps[v]);
    if (static_cast<int>(rank(cols)) < x.dim(v)) return false;
  }
  return true;
}

int projective_vertex_of(const Representation& x) {
  auto td = top_dims(x);
  int tops = 0, v0 = -1;
  for (std::size_t v = 0; v < td.size(); ++v)
    if (td[v]) {
      tops += td[v];
      v0 = static_cast<int>(v);
    }
  if (tops == 1 && projective(x.algebra(), v0).dims() == x.dims()) return v0;
  return -1;
}

// Left mutation at m[k], which must not lie in Fac of the other summands.
SupportTauTiltingPair left_mutation(const SupportTauTiltingPair& pair, int k) {
  std::vector<Representation> u;
  for (int i = 0; i < static_cast<int>(pair.m.size()); ++i)
    if (i != k) u.push_back(pair.m[i]);
  LeftApproximation a = minimal_left_approximation(pair.m[k], u);
  Representation y = cokernel(a.map).module;
  SupportTauTiltingPair out{u, {}, pair.algebra};
  if (!y.is_zero()) {
    auto d = decompose(y);
    for (const auto& [s, mult] : d.summands) out.m.push_back(s);
  }
  out.p = pair.p;
  for (int v : support_complement_of(out.m, pair.algebra))
    if (std::find(out.p.begin(), out.p.end(), v) == out.p.end()) out.p.push_back(v);
  return out;
}

}  // namespace

SupportTauTiltingPair dagger(const SupportTauTiltingPair& pair) {
  AlgebraPtr op = opposite_algebra(pair.algebra);
  SupportTauTiltingPair out{{}, {}, op};
  for (const auto& x : pair.m) {
    int v = projective_vertex_of(x);
    if (v >= 0) {
      out.p.push_back(v);
    } else {
      Representation t = transpose(x);
      for (const auto& [s, k] : decompose(t).summands) out.m.push_back(s);
    }
  }
  for (int v : pair.p) out.m.push_back(projective(op, v));
  return out;
}

SupportTauTiltingPair mutate_sttilt(const SupportTauTiltingPair& pair, int k) {
  const int nm = static_cast<int>(pair.m.size());
  if (k < 0 || k >= pair.size()) throw Error("mutate_sttilt: summand index out of range");
  auto finish = [&](SupportTauTiltingPair r) {
    // Put the new summand last in its list, matching the input order otherwise.
    auto stable = [&](const Representation& x) {
      for (const auto& y : pair.m)
        if (y.dims() == x.dims() && is_isomorphic_indecomposable(y, x)) return true;
      return false;
    };
    std::stable_partition(r.m.begin(), r.m.end(), stable);
    std::stable_partition(r.p.begin(), r.p.end(),
                          [&](int v) { return std::find(pair.p.begin(), pair.p.end(), v) != pair.p.end(); });
    return r;
  };
  if (k < nm) {
    std::vector<Representation> u;
    for (int i = 0; i < nm; ++i)
      if (i != k) u.push_back(pair.m[i]);
    if (!in_fac_generic(pair.m[k], u)) return finish(left_mutation(pair, k));
  }
  // Right mutation: left mutation of the dual pair over the opposite algebra.
  SupportTauTiltingPair d = dagger(pair);
  Representation target;
  if (k < nm) {
    target = transpose(pair.m[k]);
  } else {
    target = projective(d.algebra, pair.p[k - nm]);
  }
  int kd = -1;
  for (int i = 0; i < static_cast<int>(d.m.size()); ++i)
    if (d.m[i].dims() == target.dims() && is_isomorphic_indecomposable(d.m[i], target)) kd = i;
  if (kd < 0) throw Error("mutate_sttilt: dual summand not found");
  std::vector<Representation> ud;
  for (int i = 0; i < static_cast<int>(d.m.size()); ++i)
    if (i != kd) ud.push_back(d.m[i]);
  if (in_fac_generic(d.m[kd], ud)) throw Error("mutate_sttilt: no mutation found in either direction");
  SupportTauTiltingPair back = dagger(left_mutation(d, kd));
  back.algebra = pair.algebra;
  return finish(back);
}

// ---------------------------------------------------------------- enumeration

std::vector<int> support_complement(const ModuleRegistry& reg, const std::vector<int>& node) {
  std::vector<int> out;
  for (int v = 0; v < reg.algebra()->num_vertices(); ++v) {
    bool zero = true;
    for (int id : node)
      if (reg.module(id).dim(v)) zero = false;
    if (zero) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> node_dims(const ModuleRegistry& reg, const std::vector<int>& node) {
  std::vector<std::vector<int>> d;
  for (int id : node) d.push_back(reg.module(id).dims());
  std::sort(d.begin(), d.end());
  return d;
}

MutationGraph sttilt_enumerate(ModuleRegistry& reg, const EnumerationOptions& opt) {
  MutationGraph g;
  const AlgebraPtr& alg = reg.algebra();
  std::mt19937_64 gen(opt.shuffle_seed);
  std::map<std::vector<int>, int> index;
  std::vector<int> start;
  for (int v = 0; v < alg->num_vertices(); ++v) start.push_back(reg.projective_id(v));
  std::sort(start.begin(), start.end());
  index[start] = 0;
  g.nodes.push_back(start);
  std::deque<int> queue = {0};
  bool exceeded = false;
  while (!queue.empty() && !exceeded) {
    int cur;
    if (opt.shuffle_seed && queue.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, queue.size() - 1);
      std::size_t i = pick(gen);
      cur = queue[i];
      queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      cur = queue.front();
      queue.pop_front();
    }
    std::vector<int> node = g.nodes[cur];
    std::vector<int> order(node.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    if (opt.shuffle_seed) std::shuffle(order.begin(), order.end(), gen);
    for (int i : order) {
      const int x = node[i];
      std::vector<int> u;
      for (int j = 0; j < static_cast<int>(node.size()); ++j)
        if (j != i) u.push_back(node[j]);
      if (registry_in_fac(reg, x, u)) continue;
      LeftApproximation a = registry_left_approximation(reg, x, u);
      Representation y = cokernel(a.map).module;
      std::vector<int> next = u;
      int added = -1;
      if (!y.is_zero()) {
        auto ids = reg.intern_summands(y);
        if (ids.size() != 1) throw Error("sttilt_enumerate: mutation produced a decomposable module");
        added = ids.front();
        next.push_back(added);
      }
      std::sort(next.begin(), next.end());
      auto [it, inserted] = index.emplace(next, static_cast<int>(g.nodes.size()));
      if (inserted) {
        if (g.nodes.size() >= opt.node_budget) {
          index.erase(it);
          exceeded = true;
          break;
        }
        g.nodes.push_back(next);
        queue.push_back(it->second);
      }
      if (opt.record_edges) g.edges.push_back({cur, it->second, x, added});
    }
  }
  g.complete = !exceeded;
  g.status = exceeded ? "budget exceeded" : "complete";
  return g;
}

TiltingEnumeration tilt1_enumerate(ModuleRegistry& reg, const EnumerationOptions& opt) {
  TiltingEnumeration out;
  MutationGraph g = sttilt_enumerate(reg, opt);
  out.complete = g.complete;
  out.status = g.status;
  const int n = reg.algebra()->num_vertices();
  for (const auto& node : g.nodes) {
    if (static_cast<int>(node.size()) != n) continue;  // P != 0: not sincere
    std::vector<Representation> parts;
    for (int id : node) parts.push_back(reg.module(id));
    Representation t = direct_sum_module(parts);
    if (!is_faithful(t)) continue;
    TiltingCertificate cert = verify_tilting_summands(parts, 1);
    if (!cert.ok) throw Error("tilt1_enumerate: faithful support τ-tilting module failed verification: " + cert.failure);
    TiltingRecord rec{node, t, cert.pd.value, node_dims(reg, node)};
    out.records.push_back(std::move(rec));
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const TiltingRecord& a, const TiltingRecord& b) { return a.summand_dims < b.summand_dims; });
  return out;
}

std::optional<std::vector<int>> mutate_tilting(ModuleRegistry& reg, const std::vector<int>& t, int x, int n) {
  std::vector<int> u;
  for (int id : t)
    if (id != x) u.push_back(id);
  if (u.size() + 1 != t.size()) throw Error("mutate_tilting: summand not in module");
  LeftApproximation a = registry_left_approximation(reg, x, u);
  if (!a.map.is_injective()) return std::nullopt;
  Representation y = cokernel(a.map).module;
  if (y.is_zero()) return std::nullopt;
  if (!proj_dim(y, n).le(n)) return std::nullopt;
  auto ids = reg.intern_summands(y);
  if (ids.size() != 1) throw Error("mutate_tilting: cokernel is decomposable");
  std::vector<int> v = u;
  v.push_back(ids.front());
  std::sort(v.begin(), v.end());
  return v;
}

std::optional<std::vector<Representation>> mutate_tilting(const std::vector<Representation>& t, int x, int n) {
  if (x < 0 || x >= static_cast<int>(t.size())) throw Error("mutate_tilting: summand index out of range");
  std::vector<Representation> u;
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    if (i != x) u.push_back(t[i]);
  LeftApproximation a = minimal_left_approximation(t[x], u);
  if (!a.map.is_injective()) return std::nullopt;
  Representation y = cokernel(a.map).module;
  if (y.is_zero() || !proj_dim(y, n).le(n)) return std::nullopt;
  for (const auto& [s, k] : decompose(y).summands) u.push_back(s);
  if (!verify_tilting_summands(u, n).ok) throw Error("mutate_tilting: result failed verification");
  return u;
}

namespace {

// Ext^i(T, U) = 0 for 1 <= i <= bound, summandwise with a cache.
class ExtVanishing {
 public:
  ExtVanishing(ModuleRegistry& reg, int bound) : reg_(reg), bound_(bound) {}
  bool zero(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto e = ext_dims(reg_.module(a), reg_.module(b), bound_);
    bool z = std::all_of(e.begin(), e.end(), [](int d) { return d == 0; });
    return cache_[key] = z;
  }
  bool geq(const std::vector<int>& t, const std::vector<int>& u) {
    for (int a : t)
      for (int b : u)
        if (!zero(a, b)) return false;
    return true;
  }

 private:
  ModuleRegistry& reg_;
  int bound_;
  std::map<std::pair<int, int>, bool> cache_;
};

}  // namespace

MutationGraph tiltn_enumerate(ModuleRegistry& reg, int n, const EnumerationOptions& opt) {
  MutationGraph g;
  const AlgebraPtr& alg = reg.algebra();
  std::map<std::vector<int>, int> index;
  std::vector<int> start;
  for (int v = 0; v < alg->num_vertices(); ++v) start.push_back(reg.projective_id(v));
  std::sort(start.begin(), start.end());
  index[start] = 0;
  g.nodes.push_back(start);
  std::deque<int> queue = {0};
  bool exceeded = false;
  if (n == 1) {
    // tilt_1 is known completely from sτ-tilt; only the edges are needed.
    TiltingEnumeration all = tilt1_enumerate(reg, opt);
    exceeded = !all.complete;
    g.nodes.clear();
    index.clear();
    queue.clear();
    for (auto& rec : all.records) {
      index[rec.ids] = static_cast<int>(g.nodes.size());
      queue.push_back(static_cast<int>(g.nodes.size()));
      g.nodes.push_back(rec.ids);
    }
  }
  while (!queue.empty() && (n == 1 || !exceeded)) {
    int cur = queue.front();
    queue.pop_front();
    std::vector<int> node = g.nodes[cur];
    for (int x : node) {
      auto next = mutate_tilting(reg, node, x, n);
      if (!next) continue;
      if (n == 1 && !index.count(*next)) continue;  // only when tilt_1 was cut by the budget
      auto [it, inserted] = index.emplace(*next, static_cast<int>(g.nodes.size()));
      if (inserted) {
        if (g.nodes.size() >= opt.node_budget) {
          index.erase(it);
          exceeded = true;
          break;
        }
        g.nodes.push_back(*next);
        queue.push_back(it->second);
      }
      int added = -1;
      for (int id : *next)
        if (!std::binary_search(node.begin(), node.end(), id)) added = id;
      g.edges.push_back({cur, it->second, x, added});
    }
  }
  ExtVanishing ext(reg, std::max(n, 1));
  for (std::size_t a = 0; a < g.nodes.size(); ++a)
    for (std::size_t b = 0; b < g.nodes.size(); ++b)
      if (ext.geq(g.nodes[a], g.nodes[b])) g.order.emplace_back(static_cast<int>(a), static_cast<int>(b));
  g.complete = !exceeded && n <= 1;
  g.status = exceeded ? "budget exceeded" : (n <= 1 ? "complete" : "reachable component");
  return g;
}

bool tilting_order_geq(const Representation& t, const Representation& u) {
  int bound = std::max(proj_dim(t, t.algebra()->num_vertices() + 8).value, 1);
  auto e = ext_dims(t, u, bound);
  return std::all_of(e.begin(), e.end(), [](int d) { return d == 0; });
}

bool is_minimal_in_tiltn(const std::vector<Representation>& summands, int n) {
  for (std::size_t i = 0; i < summands.size(); ++i) {
    std::vector<Representation> u;
    for (std::size_t j = 0; j < summands.size(); ++j)
      if (j != i) u.push_back(summands[j]);
    LeftApproximation a = minimal_left_approximation(summands[i], u);
    if (!a.map.is_injective()) continue;
    Representation y = cokernel(a.map).module;
    if (!y.is_zero() && proj_dim(y, n).le(n)) return false;
  }
  return true;
}

Representation tensor_to_factor(const Representation& t, const std::vector<int>& e_vertices, const AlgebraPtr& gamma) {
  const AlgebraPtr& alg = t.algebra();
  std::vector<std::pair<int, Vector>> gens;
  for (int v : e_vertices)
    for (int k = 0; k < t.dim(v); ++k) {
      Vector x(t.dim(v));
      x[k] = 1;
      gens.emplace_back(v, std::move(x));
    }
  std::vector<Matrix> bases;
  SubModule te = submodule_generated(t, gens);
  QuotientModule q = quotient_by_subspaces(t, te.inclusion.comps);
  const Quiver& gq = gamma->quiver();
  const Quiver& lq = alg->quiver();
  std::vector<int> dims;
  for (int v = 0; v < gq.num_vertices(); ++v) dims.push_back(q.module.dim(lq.vertex_index(gq.vertex_label(v))));
  std::vector<Matrix> maps;
  for (int a = 0; a < gq.num_arrows(); ++a) maps.push_back(q.module.arrow_map(lq.arrow_index(gq.arrow(a).label)));
  return Representation(gamma, std::move(dims), std::move(maps));
}

BijectionReport bijection_check(const AlgebraPtr& alg, const EnumerationOptions& opt) {
  BijectionReport rep;
  Representation lam = regular_module(alg);
  for (int v : injective_envelope_vertices(lam))
    if (!is_projective(injective(alg, v))) throw Error("not 1-Gorenstein: I^0(Λ) is not projective");
  std::vector<Representation> e_parts;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    Representation p = projective(alg, v);
    if (is_injective(p)) {
      rep.e_vertices.push_back(v);
      e_parts.push_back(p);
    }
  }
  rep.e_lambda_faithful = !e_parts.empty() && is_faithful(direct_sum_module(e_parts));
  if (static_cast<int>(rep.e_vertices.size()) == alg->num_vertices()) {
    // Self-injective: tilt_1 = {Λ}, and the factor is the zero algebra with sτ-tilt = {0}.
    rep.degenerate = true;
    rep.tilt1_count = rep.sttilt_count = 1;
    rep.injective = rep.image_equals = rep.complete = true;
    return rep;
  }
  ModuleRegistry reg(alg);
  TiltingEnumeration tilts = tilt1_enumerate(reg, opt);
  AlgebraPtr gamma = quotient_by_idempotent(alg, rep.e_vertices);
  ModuleRegistry greg(gamma);
  MutationGraph st = sttilt_enumerate(greg, opt);
  rep.complete = tilts.complete && st.complete;
  rep.tilt1_count = tilts.records.size();
  rep.sttilt_count = st.nodes.size();
  std::set<std::vector<int>> images;
  bool basic = true;
  for (const auto& rec : tilts.records) {
    Representation f = tensor_to_factor(rec.module, rep.e_vertices, gamma);
    auto ids = greg.intern_summands(f);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) basic = false;
    images.insert(ids);
    rep.pairs.emplace_back(rec.summand_dims, node_dims(greg, ids));
  }
  std::set<std::vector<int>> targets(st.nodes.begin(), st.nodes.end());
  rep.injective = basic && images.size() == tilts.records.size();
  rep.image_equals = images == targets;
  return rep;
}

// ---------------------------------------------------------------- export

namespace {

std::string dims_label(const std::vector<std::vector<int>>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    s += i ? " + " : "";
    s += "(";
    for (std::size_t j = 0; j < d[i].size(); ++j) s += (j ? "," : "") + std::to_string(d[i][j]);
    s += ")";
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string graph_to_dot(const ModuleRegistry& reg, const MutationGraph& g) {
  std::ostringstream os;
  os << "digraph mutation {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << dims_label(node_dims(reg, g.nodes[i])) << "\"];\n";
  // Hasse edges of the order (covering relations) solid; mutation edges dashed.
  std::set<std::pair<int, int>> geq(g.order.begin(), g.order.end());
  for (const auto& [a, b] : g.order) {
    if (a == b) continue;
    bool cover = true;
    for (std::size_t c = 0; c < g.nodes.size() && cover; ++c) {
      int ci = static_cast<int>(c);
      if (ci != a && ci != b && geq.count({a, ci}) && geq.count({ci, b})) cover = false;
    }
    if (cover) os << "  n" << a << " -> n" << b << ";\n";
  }
  for (const auto& e : g.edges) os << "  n" << e.from << " -> n" << e.to << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qtilt
