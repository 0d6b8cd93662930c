#include "qtilt/homalg.hpp"

namespace qtilt {

Resolution min_proj_resolution(const Representation& m, int maxdeg) {
  if (maxdeg < 0) throw Error("resolution: negative degree");
  Resolution r;
  r.kind = Resolution::Kind::projective;
  r.syzygies.push_back(m);
  ModuleMap prev_inclusion;  // Omega^k -> P_{k-1}
  for (int k = 0; k <= maxdeg; ++k) {
    const Representation& omega = r.syzygies.back();
    if (omega.is_zero()) {
      r.finite = true;
      break;
    }
    ProjectiveCover pc = projective_cover(omega);
    r.terms.push_back(pc.layout.module);
    r.term_vertices.push_back(pc.layout.vertices);
    r.layouts.push_back(pc.layout);
    r.maps.push_back(k == 0 ? pc.map : compose(prev_inclusion, pc.map));
    SubModule ker = kernel(pc.map);
    r.syzygies.push_back(ker.module);
    prev_inclusion = ker.inclusion;
    r.exact_through = k;
  }
  if (!r.finite && r.syzygies.back().is_zero()) r.finite = true;
  return r;
}

Representation syzygy(const Representation& m, int k) {
  if (k < 0) throw Error("syzygy: negative index");
  if (k == 0) return m;
  Resolution r = min_proj_resolution(m, k - 1);
  if (static_cast<int>(r.syzygies.size()) > k) return r.syzygies[k];
  return Representation::zero(m.algebra());
}

Resolution min_inj_coresolution(const Representation& m, int maxdeg) {
  if (maxdeg < 0) throw Error("resolution: negative degree");
  Resolution r;
  r.kind = Resolution::Kind::injective;
  r.syzygies.push_back(m);
  ModuleMap prev_projection;  // I^{k-1} -> Omega^{-k}
  for (int k = 0; k <= maxdeg; ++k) {
    const Representation& omega = r.syzygies.back();
    if (omega.is_zero()) {
      r.finite = true;
      break;
    }
    ModuleMap env = injective_envelope(omega);
    r.terms.push_back(env.target);
    r.term_vertices.push_back(injective_envelope_vertices(omega));
    r.maps.push_back(k == 0 ? env : compose(env, prev_projection));
    QuotientModule coker = cokernel(env);
    r.syzygies.push_back(coker.module);
    prev_projection = coker.projection;
    r.exact_through = k;
  }
  if (!r.finite && r.syzygies.back().is_zero()) r.finite = true;
  return r;
}

Representation cosyzygy(const Representation& m, int k) {
  if (k < 0) throw Error("cosyzygy: negative index");
  if (k == 0) return m;
  Resolution r = min_inj_coresolution(m, k - 1);
  if (static_cast<int>(r.syzygies.size()) > k) return r.syzygies[k];
  return Representation::zero(m.algebra());
}

std::string BoundedDim::str() const { return (at_least ? ">=" : "") + std::to_string(value); }

namespace {

BoundedDim dim_from(const Resolution& r, int bound) {
  if (r.finite) return {std::max(0, r.length()), false};
  return {bound + 1, true};
}

}  // namespace

BoundedDim proj_dim(const Representation& m, int bound) { return dim_from(min_proj_resolution(m, bound), bound); }

BoundedDim inj_dim(const Representation& m, int bound) { return dim_from(min_inj_coresolution(m, bound), bound); }

namespace {

// Matrix of Hom(P_i, N) -> Hom(P_{i+1}, N), f |-> f d_{i+1}, in Yoneda coordinates.
Matrix hom_differential(const Resolution& r, int i, const Representation& n) {
  const AlgebraPtr& alg = n.algebra();
  const ProjectiveSum& src = r.layouts[i];      // P_i
  const ProjectiveSum& dst = r.layouts[i + 1];  // P_{i+1}
  const ModuleMap& d = r.maps[i + 1];           // P_{i+1} -> P_i
  std::vector<int> col_off, row_off;
  int cols = 0, rows = 0;
  for (int v : src.vertices) {
    col_off.push_back(cols);
    cols += n.dim(v);
  }
  for (int w : dst.vertices) {
    row_off.push_back(rows);
    rows += n.dim(w);
  }
  Matrix delta(rows, cols);
  for (std::size_t t = 0; t < dst.vertices.size(); ++t) {
    const int w = dst.vertices[t];
    Vector x = d.comps[w].column(dst.generator_pos[t]);
    for (std::size_t s = 0; s < src.vertices.size(); ++s) {
      const int v = src.vertices[s];
      for (int b : alg->paths_between(v, w)) {
        const Scalar& c = x[src.block_offset[s][w] + alg->position_in_block(b)];
        if (c.is_zero()) continue;
        const Matrix& act = n.basis_action(b);
        for (int rr = 0; rr < n.dim(w); ++rr)
          for (int cc = 0; cc < n.dim(v); ++cc) delta(row_off[t] + rr, col_off[s] + cc).add_mul(c, act(rr, cc));
      }
    }
  }
  return delta;
}

int hom_term_dim(const Resolution& r, int i, const Representation& n) {
  if (i >= static_cast<int>(r.terms.size())) return 0;
  int d = 0;
  for (int v : r.term_vertices[i]) d += n.dim(v);
  return d;
}

int differential_rank(const Resolution& r, int i, const Representation& n) {
  if (i < 0 || i + 1 >= static_cast<int>(r.terms.size())) return 0;
  return static_cast<int>(rank(hom_differential(r, i, n)));
}

}  // namespace

std::vector<int> ext_dims(const Representation& m, const Representation& n, int upto) {
  if (m.algebra() != n.algebra()) throw Error("ext: modules over different algebras");
  Resolution r = min_proj_resolution(m, upto + 1);
  std::vector<int> out;
  std::vector<int> ranks(upto + 2, 0);
  for (int i = 0; i <= upto; ++i) ranks[i] = differential_rank(r, i, n);
  for (int k = 1; k <= upto; ++k) out.push_back(hom_term_dim(r, k, n) - ranks[k] - ranks[k - 1]);
  return out;
}

int ext_dim(const Representation& m, const Representation& n, int k) {
  if (k < 0) throw Error("ext: negative degree");
  if (k == 0) return hom_dim(m, n);
  if (m.algebra() != n.algebra()) throw Error("ext: modules over different algebras");
  Resolution r = min_proj_resolution(m, k + 1);
  return hom_term_dim(r, k, n) - differential_rank(r, k, n) - differential_rank(r, k - 1, n);
}

int ext_dim_injective(const Representation& m, const Representation& n, int k) {
  if (k < 0) throw Error("ext: negative degree");
  Resolution r = min_inj_coresolution(n, k + 1);
  auto hom_at = [&](int i) {
    return i < static_cast<int>(r.terms.size()) ? hom_basis(m, r.terms[i]) : std::vector<ModuleMap>{};
  };
  // Rank of Hom(M, I^i) -> Hom(M, I^{i+1}) by post-composition.
  auto post_rank = [&](int i, const std::vector<ModuleMap>& hi) -> int {
    if (i < 0 || i + 1 >= static_cast<int>(r.terms.size()) || hi.empty()) return 0;
    std::vector<Vector> rows;
    for (const auto& f : hi) rows.push_back(compose(r.maps[i + 1], f).flatten());
    return static_cast<int>(rank(Matrix::from_rows(rows, rows.front().size())));
  };
  auto hk = hom_at(k);
  int before = k > 0 ? post_rank(k - 1, hom_at(k - 1)) : 0;
  return static_cast<int>(hk.size()) - post_rank(k, hk) - before;
}

Representation transpose(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  AlgebraPtr op = opposite_algebra(alg);
  if (m.is_zero()) return Representation::zero(op);
  Resolution r = min_proj_resolution(m, 1);
  const ProjectiveSum& p0 = r.layouts[0];
  if (r.terms.size() < 2) return Representation::zero(op);  // projective
  const ProjectiveSum& p1 = r.layouts[1];
  const ModuleMap& d = r.maps[1];  // P_1 -> P_0
  // d*: P_0* -> P_1*, with P(v)* = e_v Lambda^op and the summand s -> t
  // component given by left multiplication with the reversed lambda_{st}.
  ProjectiveSum src = projective_sum(op, p0.vertices);
  ProjectiveSum dst = projective_sum(op, p1.vertices);
  std::vector<Vector> elems;
  for (std::size_t s = 0; s < p0.vertices.size(); ++s) {
    const int v = p0.vertices[s];
    Vector e(dst.module.dim(v));
    for (std::size_t t = 0; t < p1.vertices.size(); ++t) {
      const int w = p1.vertices[t];
      Vector x = d.comps[w].column(p1.generator_pos[t]);
      for (int b : alg->paths_between(v, w)) {
        const Scalar& c = x[p0.block_offset[s][w] + alg->position_in_block(b)];
        if (c.is_zero()) continue;
        const Path& p = alg->basis_path(b);
        Path rev{w, v, {p.arrows.rbegin(), p.arrows.rend()}};
        for (const auto& [k, coef] : op->normal_form(rev)) e[dst.block_offset[t][v] + op->position_in_block(k)] += c * coef;
      }
    }
    elems.push_back(std::move(e));
  }
  ModuleMap dstar = map_from_projective_sum(src, dst.module, elems);
  return cokernel(dstar).module;
}

Representation tau(const Representation& m) { return dual(transpose(m)); }

Representation tau_inverse(const Representation& m) { return transpose(dual(m)); }

int stable_hom_injective_dim(const Representation& n, const Representation& x) {
  auto h = hom_basis(n, x);
  if (h.empty()) return 0;
  ModuleMap iota = injective_envelope(n);
  auto g = hom_basis(iota.target, x);
  if (g.empty()) return static_cast<int>(h.size());
  std::vector<Vector> rows;
  for (const auto& f : g) rows.push_back(compose(f, iota).flatten());
  return static_cast<int>(h.size() - rank(Matrix::from_rows(rows, rows.front().size())));
}

}  // namespace qtilt
