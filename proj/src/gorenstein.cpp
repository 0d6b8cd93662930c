#include "qtilt/gorenstein.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qtilt {

Representation regular_module(const AlgebraPtr& alg) {
  std::vector<Representation> ps;
  for (int v = 0; v < alg->num_vertices(); ++v) ps.push_back(projective(alg, v));
  return direct_sum_module(ps);
}

GorensteinProfile gorenstein_profile(const AlgebraPtr& alg, int depth, int pd_bound) {
  if (depth < 1) throw Error("gorenstein_profile: depth must be >= 1");
  GorensteinProfile prof;
  prof.depth = depth;
  prof.pd_bound = pd_bound;
  Resolution r = min_inj_coresolution(regular_module(alg), depth - 1);
  prof.coresolution_finite = r.finite;
  std::map<int, BoundedDim> pd_of;  // pd I(v)
  std::map<int, bool> proj_of;
  for (int i = 0; i < depth; ++i) {
    ProfileDegree d;
    d.degree = i;
    d.projective = true;
    if (i < static_cast<int>(r.term_vertices.size())) d.injective_vertices = r.term_vertices[i];
    for (int v : d.injective_vertices) {
      if (!pd_of.count(v)) {
        Representation inj = injective(alg, v);
        pd_of[v] = proj_dim(inj, pd_bound);
        proj_of[v] = pd_of[v].le(0);
      }
      const BoundedDim& p = pd_of[v];
      if (p.at_least || (!d.pd.at_least && p.value > d.pd.value)) d.pd = p;
      d.projective = d.projective && proj_of[v];
    }
    prof.degrees.push_back(std::move(d));
  }
  auto up_to = [&](int slack) {
    int n = 0;
    while (n < depth && prof.degrees[n].pd.le(n + slack)) ++n;
    return n;
  };
  prof.n_gorenstein_up_to = up_to(0);
  prof.quasi_up_to = up_to(1);
  int dom = 0;
  while (dom < depth && prof.degrees[dom].projective) ++dom;
  prof.dominant_dimension = {dom, dom == depth};
  return prof;
}

std::vector<ModuleMap> radical_maps(const Representation& from, const Representation& to, bool same) {
  if (!same) return hom_basis(from, to);
  EndomorphismData e = endomorphism_data(from);
  std::vector<ModuleMap> out;
  for (const auto& c : e.radical) {
    ModuleMap f = ModuleMap::zero(from, from);
    for (int k = 0; k < e.dim(); ++k)
      if (!c[k].is_zero()) f = f + e.basis[k].scaled(c[k]);
    out.push_back(std::move(f));
  }
  return out;
}

LeftApproximation minimal_left_approximation(const Representation& x, const std::vector<Representation>& summands) {
  const std::size_t r = summands.size();
  std::vector<std::vector<ModuleMap>> hx(r);
  for (std::size_t l = 0; l < r; ++l) hx[l] = hom_basis(x, summands[l]);
  LeftApproximation out;
  std::vector<Representation> parts;
  std::vector<ModuleMap> chosen;
  for (std::size_t k = 0; k < r; ++k) {
    int dk = 0;
    if (!hx[k].empty()) {
      EchelonBasis span(hx[k].front().flatten().size());
      for (std::size_t l = 0; l < r; ++l) {
        if (hx[l].empty()) continue;
        for (const auto& rad : radical_maps(summands[l], summands[k], l == k))
          for (const auto& h : hx[l]) span.add(compose(rad, h).flatten());
      }
      for (const auto& h : hx[k])
        if (span.add(h.flatten())) {
          chosen.push_back(h);
          parts.push_back(summands[k]);
          ++dk;
        }
    }
    out.multiplicities.push_back(dk);
  }
  if (parts.empty()) {
    out.map = ModuleMap::zero(x, Representation::zero(x.algebra()));
    return out;
  }
  Representation target = direct_sum_module(parts);
  ModuleMap f{x, target, {}};
  for (int v = 0; v < x.algebra()->num_vertices(); ++v) {
    Matrix m(0, x.dim(v));
    for (const auto& h : chosen) m = vstack(m, h.comps[v]);
    f.comps.push_back(std::move(m));
  }
  out.map = std::move(f);
  return out;
}

ModuleMap minimal_left_approximation(const Representation& x, const Representation& t) {
  if (t.is_zero()) return ModuleMap::zero(x, t);
  std::vector<Representation> s;
  for (const auto& [m, k] : decompose(t).summands) s.push_back(m);
  return minimal_left_approximation(x, s).map;
}

bool in_add(const Representation& c, const std::vector<Representation>& summands) {
  if (c.is_zero()) return true;
  ModuleMap f = minimal_left_approximation(c, summands).map;
  return f.target.total_dim() == c.total_dim() && f.is_injective();
}

TiltingCertificate verify_tilting_summands(const std::vector<Representation>& summands, int n) {
  TiltingCertificate cert;
  cert.summands = summands;
  if (summands.empty()) {
    cert.failure = "zero module";
    return cert;
  }
  const AlgebraPtr& alg = summands.front().algebra();
  Representation t = direct_sum_module(summands);
  cert.pd = proj_dim(t, n);
  if (!cert.pd.le(n)) {
    cert.failure = "pd T = " + cert.pd.str() + " > " + std::to_string(n);
    return cert;
  }
  if (cert.pd.value > 0) {
    cert.self_ext = ext_dims(t, t, cert.pd.value);
    for (std::size_t i = 0; i < cert.self_ext.size(); ++i)
      if (cert.self_ext[i] != 0) {
        cert.failure = "Ext^" + std::to_string(i + 1) + "(T,T) != 0";
        return cert;
      }
  }
  // 0 -> Λ -> T_0 -> ... -> T_m -> 0 by iterated minimal left approximations.
  Representation x = regular_module(alg);
  for (int step = 0; step <= n; ++step) {
    LeftApproximation a = minimal_left_approximation(x, summands);
    if (!a.map.is_injective()) {
      cert.failure = "approximation at step " + std::to_string(step) + " is not injective";
      return cert;
    }
    cert.coresolution.push_back(a.map.target);
    Representation c = cokernel(a.map).module;
    if (c.is_zero()) {
      cert.ok = true;
      return cert;
    }
    if (step + 1 <= n && in_add(c, summands)) {
      cert.coresolution.push_back(c);
      cert.ok = true;
      return cert;
    }
    x = c;
  }
  cert.failure = "no coresolution of Λ by add T of length <= " + std::to_string(n);
  return cert;
}

TiltingCertificate verify_tilting(const Representation& t, int n) {
  std::vector<Representation> s;
  if (!t.is_zero())
    for (const auto& [m, k] : decompose(t).summands) s.push_back(m);
  return verify_tilting_summands(s, n);
}

MinimalTilting minimal_tilting(const AlgebraPtr& alg, int j, bool force) {
  if (j < 0) throw Error("minimal_tilting: negative level");
  MinimalTilting out;
  Representation lam = regular_module(alg);
  Resolution r = min_inj_coresolution(lam, j);
  Representation omega = j < static_cast<int>(r.syzygies.size()) ? r.syzygies[j] : Representation::zero(alg);
  std::set<int> inj_vertices;
  std::string failure;
  for (int i = 0; i < j && i < static_cast<int>(r.term_vertices.size()); ++i) {
    for (int v : r.term_vertices[i]) inj_vertices.insert(v);
    BoundedDim pd = proj_dim(r.terms[i], j);
    if (!pd.le(j) && failure.empty()) failure = "pd I^" + std::to_string(i) + "(Λ) = " + pd.str() + " > " + std::to_string(j);
  }
  BoundedDim pdo = proj_dim(omega, j);
  if (!pdo.le(j) && failure.empty()) failure = "pd Ω^-" + std::to_string(j) + "Λ = " + pdo.str() + " > " + std::to_string(j);
  out.hypotheses_hold = failure.empty();
  out.failure = failure;
  if (!failure.empty() && !force) throw Error("hypotheses fail: " + failure);
  for (int v : inj_vertices) out.summands.push_back(injective(alg, v));
  if (!omega.is_zero())
    for (const auto& [m, k] : decompose(omega).summands) {
      bool dup = false;
      for (const auto& s : out.summands)
        if (s.dims() == m.dims() && is_isomorphic_indecomposable(s, m)) dup = true;
      if (!dup) out.summands.push_back(m);
    }
  out.module = out.summands.empty() ? Representation::zero(alg) : direct_sum_module(out.summands);
  out.certificate = verify_tilting_summands(out.summands, j);
  if (out.hypotheses_hold && !out.certificate.ok)
    throw Error("minimal_tilting: constructed module failed verification: " + out.certificate.failure);
  return out;
}

IwanagaReport iwanaga_check(const AlgebraPtr& alg, int n) {
  if (n < 0) throw Error("iwanaga_check: negative level");
  IwanagaReport rep;
  rep.n = n;
  AlgebraPtr op = opposite_algebra(alg);
  rep.id_left = inj_dim(regular_module(alg), n + 1);
  rep.id_right = inj_dim(regular_module(op), n + 1);
  rep.cond_left = rep.id_left.le(n);
  rep.cond_right = rep.id_right.le(n);
  rep.cond_iwanaga = rep.cond_left && rep.cond_right && rep.id_left == rep.id_right;
  auto has_min = [n](const AlgebraPtr& a) {
    MinimalTilting mt = minimal_tilting(a, n, true);
    return mt.hypotheses_hold && mt.certificate.ok;
  };
  rep.min_tilting_left = has_min(alg);
  rep.min_tilting_right = has_min(op);
  GorensteinProfile prof = gorenstein_profile(alg, n + 1, n + 1);
  rep.gorenstein_checked_depth = n + 1;
  rep.k_gorenstein_all_checked = prof.n_gorenstein_up_to == n + 1;
  return rep;
}

}  // namespace qtilt
