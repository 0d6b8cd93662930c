#include "qtilt/repmod.hpp"

#include <algorithm>
#include <complex>
#include <random>
#include <sstream>

namespace qtilt {

// ---------------------------------------------------------------- Representation

Representation::Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> maps) {
  if (!alg) throw Error("representation: null algebra");
  const Quiver& q = alg->quiver();
  if (static_cast<int>(dims.size()) != q.num_vertices()) throw Error("representation: wrong number of dimensions");
  if (static_cast<int>(maps.size()) != q.num_arrows()) throw Error("representation: wrong number of arrow maps");
  auto d = std::make_shared<Data>();
  d->offsets.resize(dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (dims[v] < 0) throw Error("representation: negative dimension");
    d->offsets[v] = d->total;
    d->total += dims[v];
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps[a].rows() != static_cast<std::size_t>(dims[ar.target]) ||
        maps[a].cols() != static_cast<std::size_t>(dims[ar.source]))
      throw Error("representation: arrow '" + ar.label + "' has the wrong shape");
  }
  d->alg = std::move(alg);
  d->dims = std::move(dims);
  d->maps = std::move(maps);
  d_ = std::move(d);
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Matrix> maps(q.num_arrows());
  return Representation(std::move(alg), std::vector<int>(q.num_vertices(), 0), std::move(maps));
}

Matrix Representation::path_action(const Path& p) const {
  Matrix m = Matrix::identity(dim(p.source));
  for (int a : p.arrows) m = arrow_map(a) * m;
  return m;
}

const Matrix& Representation::basis_action(int b) const {
  std::call_once(d_->actions_once, [this] {
    const auto& basis = d_->alg->basis();
    d_->actions.resize(basis.size());
    // Build by extending shorter paths: basis paths are closed under prefixes.
    for (std::size_t i = 0; i < basis.size(); ++i) d_->actions[i] = path_action(basis[i]);
  });
  return d_->actions.at(b);
}

bool Representation::satisfies_relations() const {
  for (const auto& rel : algebra()->relations()) {
    const Quiver& q = algebra()->quiver();
    int s = q.arrow(rel.terms.front().arrows.front()).source;
    int t = q.arrow(rel.terms.front().arrows.back()).target;
    Matrix sum(dim(t), dim(s));
    for (const auto& term : rel.terms) sum.add_scaled(path_action({s, t, term.arrows}), term.coeff);
    if (!sum.is_zero()) return false;
  }
  return true;
}

std::string Representation::dimvec_string() const {
  std::string s = "(";
  for (std::size_t v = 0; v < dims().size(); ++v) s += (v ? "," : "") + std::to_string(dims()[v]);
  return s + ")";
}

bool operator==(const Representation& a, const Representation& b) {
  if (a.d_ == b.d_) return true;
  return a.algebra() == b.algebra() && a.dims() == b.dims() && a.arrow_maps() == b.arrow_maps();
}

// ---------------------------------------------------------------- ModuleMap

ModuleMap ModuleMap::zero(const Representation& s, const Representation& t) {
  ModuleMap f{s, t, {}};
  for (std::size_t v = 0; v < s.dims().size(); ++v) f.comps.emplace_back(t.dim(v), s.dim(v));
  return f;
}

ModuleMap ModuleMap::identity(const Representation& m) {
  ModuleMap f{m, m, {}};
  for (int d : m.dims()) f.comps.push_back(Matrix::identity(d));
  return f;
}

bool ModuleMap::is_homomorphism() const {
  if (source.algebra() != target.algebra()) return false;
  const Quiver& q = source.algebra()->quiver();
  if (comps.size() != static_cast<std::size_t>(q.num_vertices())) return false;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (comps[v].rows() != static_cast<std::size_t>(target.dim(v)) ||
        comps[v].cols() != static_cast<std::size_t>(source.dim(v)))
      return false;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(target.arrow_map(a) * comps[ar.source] == comps[ar.target] * source.arrow_map(a))) return false;
  }
  return true;
}

bool ModuleMap::is_zero() const {
  return std::all_of(comps.begin(), comps.end(), [](const Matrix& m) { return m.is_zero(); });
}

int ModuleMap::rank() const {
  int r = 0;
  for (const auto& c : comps) r += static_cast<int>(qtilt::rank(c));
  return r;
}

bool ModuleMap::is_injective() const { return rank() == source.total_dim(); }
bool ModuleMap::is_surjective() const { return rank() == target.total_dim(); }
bool ModuleMap::is_isomorphism() const {
  if (source.dims() != target.dims()) return false;
  for (const auto& c : comps)
    if (qtilt::rank(c) != c.rows()) return false;
  return true;
}

Vector ModuleMap::flatten() const {
  Vector out;
  for (const auto& c : comps) out.insert(out.end(), c.data().begin(), c.data().end());
  return out;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  ModuleMap r = *this;
  for (std::size_t v = 0; v < comps.size(); ++v) r.comps[v] = comps[v] + o.comps[v];
  return r;
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
  ModuleMap r = *this;
  for (std::size_t v = 0; v < comps.size(); ++v) r.comps[v] = comps[v] - o.comps[v];
  return r;
}

ModuleMap ModuleMap::scaled(const Scalar& s) const {
  ModuleMap r = *this;
  for (auto& c : r.comps) c = c.scaled(s);
  return r;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (f.target.dims() != g.source.dims()) throw Error("compose: incompatible maps");
  ModuleMap h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

namespace {

ModuleMap unflatten(const Vector& flat, const Representation& s, const Representation& t) {
  ModuleMap f{s, t, {}};
  std::size_t pos = 0;
  for (std::size_t v = 0; v < s.dims().size(); ++v) {
    Matrix m(t.dim(v), s.dim(v));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = flat[pos++];
    f.comps.push_back(std::move(m));
  }
  return f;
}

std::mt19937_64& rng() {
  thread_local std::mt19937_64 gen(0x5eed1234ULL);
  return gen;
}

Scalar random_coeff() {
  std::uniform_int_distribution<int> dist(-7, 7);
  return Scalar(dist(rng()));
}

}  // namespace

// ---------------------------------------------------------------- direct sums

DirectSum direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw Error("direct_sum: empty list (use Representation::zero)");
  const AlgebraPtr& alg = parts.front().algebra();
  const Quiver& q = alg->quiver();
  const int n = q.num_vertices();
  std::vector<int> dims(n, 0);
  for (const auto& p : parts) {
    if (p.algebra() != alg) throw Error("direct_sum: modules over different algebras");
    for (int v = 0; v < n; ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(dims[ar.target], dims[ar.source]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.arrow_map(a));
      r += p.dim(ar.target);
      c += p.dim(ar.source);
    }
    maps.push_back(std::move(m));
  }
  DirectSum ds{Representation(alg, dims, std::move(maps)), {}, {}};
  std::vector<int> off(n, 0);
  for (const auto& p : parts) {
    ModuleMap inc = ModuleMap::zero(p, ds.module), proj = ModuleMap::zero(ds.module, p);
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < p.dim(v); ++k) {
        inc.comps[v](off[v] + k, k) = 1;
        proj.comps[v](k, off[v] + k) = 1;
      }
      off[v] += p.dim(v);
    }
    ds.inclusions.push_back(std::move(inc));
    ds.projections.push_back(std::move(proj));
  }
  return ds;
}

Representation direct_sum_module(const std::vector<Representation>& parts) { return direct_sum(parts).module; }

ModuleMap block_map(const DirectSum& src, const DirectSum& tgt, const std::vector<std::vector<ModuleMap>>& blocks) {
  ModuleMap f = ModuleMap::zero(src.module, tgt.module);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks[i].size(); ++j)
      f = f + compose(tgt.inclusions[i], compose(blocks[i][j], src.projections[j]));
  return f;
}

// ---------------------------------------------------------------- standard modules

Representation projective(const AlgebraPtr& alg, int i) {
  const Quiver& q = alg->quiver();
  if (i < 0 || i >= q.num_vertices()) throw Error("projective: unknown vertex");
  std::vector<int> dims(q.num_vertices());
  for (int j = 0; j < q.num_vertices(); ++j) dims[j] = static_cast<int>(alg->paths_between(i, j).size());
  std::vector<Matrix> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(dims[ar.target], dims[ar.source]);
    const int ae = alg->arrow_element(a);
    for (int b : alg->paths_between(i, ar.source)) {
      if (ae < 0) break;
      for (const auto& [k, c] : alg->basis_product(b, ae)) m(alg->position_in_block(k), alg->position_in_block(b)) += c;
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps));
}

Representation injective(const AlgebraPtr& alg, int i) { return dual(projective(opposite_algebra(alg), i)); }

Representation simple(const AlgebraPtr& alg, int i) {
  const Quiver& q = alg->quiver();
  if (i < 0 || i >= q.num_vertices()) throw Error("simple: unknown vertex");
  std::vector<int> dims(q.num_vertices(), 0);
  dims[i] = 1;
  std::vector<Matrix> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.target], dims[ar.source]);
  return Representation(alg, std::move(dims), std::move(maps));
}

ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<int>& vertices) {
  ProjectiveSum ps;
  ps.vertices = vertices;
  const int n = alg->num_vertices();
  if (vertices.empty()) {
    ps.module = Representation::zero(alg);
    return ps;
  }
  std::vector<Representation> parts;
  std::vector<int> off(n, 0);
  for (int v : vertices) {
    parts.push_back(projective(alg, v));
    ps.block_offset.push_back(off);
    for (int j = 0; j < n; ++j) off[j] += parts.back().dim(j);
  }
  ps.module = direct_sum_module(parts);
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    int v = vertices[s];
    ps.generator_pos.push_back(ps.block_offset[s][v] + alg->position_in_block(alg->idempotent(v)));
  }
  return ps;
}

ModuleMap map_from_projective_sum(const ProjectiveSum& ps, const Representation& n, const std::vector<Vector>& elems) {
  const AlgebraPtr& alg = n.algebra();
  ModuleMap f = ModuleMap::zero(ps.module, n);
  for (std::size_t s = 0; s < ps.vertices.size(); ++s) {
    const int v = ps.vertices[s];
    if (elems[s].size() != static_cast<std::size_t>(n.dim(v))) throw Error("projective map: element size mismatch");
    for (int j = 0; j < alg->num_vertices(); ++j)
      for (int b : alg->paths_between(v, j)) {
        Vector img = n.basis_action(b) * elems[s];
        int col = ps.block_offset[s][j] + alg->position_in_block(b);
        for (int r = 0; r < n.dim(j); ++r) f.comps[j](r, col) = img[r];
      }
  }
  return f;
}

// ---------------------------------------------------------------- duality

Representation dual(const Representation& m) {
  AlgebraPtr op = opposite_algebra(m.algebra());
  std::vector<Matrix> maps;
  for (const auto& a : m.arrow_maps()) maps.push_back(a.transpose());
  return Representation(op, m.dims(), std::move(maps));
}

ModuleMap dual(const ModuleMap& f) {
  ModuleMap g{dual(f.target), dual(f.source), {}};
  for (const auto& c : f.comps) g.comps.push_back(c.transpose());
  return g;
}

// ---------------------------------------------------------------- Hom

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra()) throw Error("hom: modules over different algebras");
  const Quiver& q = m.algebra()->quiver();
  const int nv = q.num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  const int unknowns = off[nv];
  if (unknowns == 0) return {};
  int eqs = 0;
  for (const auto& ar : q.arrows()) eqs += n.dim(ar.target) * m.dim(ar.source);
  Matrix sys(eqs, unknowns);
  int row = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    const int s = ar.source, t = ar.target;
    const Matrix& na = n.arrow_map(a);
    const Matrix& ma = m.arrow_map(a);
    // (N_a F_s - F_t M_a)[r][c] = 0
    for (int r = 0; r < n.dim(t); ++r)
      for (int c = 0; c < m.dim(s); ++c, ++row) {
        for (int k = 0; k < n.dim(s); ++k)
          if (!na(r, k).is_zero()) sys(row, off[s] + k * m.dim(s) + c) += na(r, k);
        for (int k = 0; k < m.dim(t); ++k)
          if (!ma(k, c).is_zero()) sys(row, off[t] + r * m.dim(t) + k) -= ma(k, c);
      }
  }
  std::vector<ModuleMap> out;
  for (const auto& v : kernel_basis(sys)) out.push_back(unflatten(v, m, n));
  return out;
}

int hom_dim(const Representation& m, const Representation& n) { return static_cast<int>(hom_basis(m, n).size()); }

// ---------------------------------------------------------------- sub and quotient

SubModule submodule_from_subspaces(const Representation& m, const std::vector<Matrix>& bases) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Matrix> b(q.num_vertices());
  std::vector<int> dims(q.num_vertices());
  for (int v = 0; v < q.num_vertices(); ++v) {
    b[v] = bases[v].cols() ? column_space(bases[v]) : Matrix(m.dim(v), 0);
    dims[v] = static_cast<int>(b[v].cols());
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (dims[ar.source] == 0 || dims[ar.target] == 0) {
      if (dims[ar.source] && !(m.arrow_map(a) * b[ar.source]).is_zero())
        throw Error("submodule: subspaces are not arrow-stable");
      maps.emplace_back(dims[ar.target], dims[ar.source]);
      continue;
    }
    auto sol = solve_matrix(b[ar.target], m.arrow_map(a) * b[ar.source]);
    if (!sol) throw Error("submodule: subspaces are not arrow-stable");
    maps.push_back(std::move(*sol));
  }
  Representation sub(m.algebra(), dims, std::move(maps));
  ModuleMap inc{sub, m, b};
  return {sub, inc};
}

QuotientModule quotient_by_subspaces(const Representation& m, const std::vector<Matrix>& bases) {
  const Quiver& q = m.algebra()->quiver();
  const int nv = q.num_vertices();
  std::vector<Matrix> proj(nv);
  std::vector<std::vector<std::size_t>> free_cols(nv);
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) {
    const int d = m.dim(v);
    RrefResult rr = bases[v].cols() ? rref(bases[v].transpose()) : RrefResult{Matrix(0, d), {}};
    std::vector<int> where(d, -1);  // pivot row index, or -1
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) where[rr.pivots[r]] = static_cast<int>(r);
    for (int j = 0; j < d; ++j)
      if (where[j] < 0) free_cols[v].push_back(j);
    dims[v] = static_cast<int>(free_cols[v].size());
    Matrix p(dims[v], d);
    for (int j = 0; j < d; ++j) {
      if (where[j] < 0) {
        auto it = std::find(free_cols[v].begin(), free_cols[v].end(), static_cast<std::size_t>(j));
        p(it - free_cols[v].begin(), j) = 1;
      } else {
        for (std::size_t k = 0; k < free_cols[v].size(); ++k) p(k, j) = -rr.reduced(where[j], free_cols[v][k]);
      }
    }
    proj[v] = std::move(p);
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    const Matrix& ma = m.arrow_map(a);
    Matrix restricted(ma.rows(), free_cols[ar.source].size());
    for (std::size_t k = 0; k < free_cols[ar.source].size(); ++k)
      for (std::size_t r = 0; r < ma.rows(); ++r) restricted(r, k) = ma(r, free_cols[ar.source][k]);
    maps.push_back(proj[ar.target] * restricted);
  }
  Representation quo(m.algebra(), dims, std::move(maps));
  return {quo, ModuleMap{m, quo, proj}};
}

SubModule submodule_generated(const Representation& m, const std::vector<std::pair<int, Vector>>& gens) {
  const AlgebraPtr& alg = m.algebra();
  const int nv = alg->num_vertices();
  std::vector<std::vector<Vector>> cols(nv);
  for (const auto& [v, x] : gens)
    for (int j = 0; j < nv; ++j)
      for (int b : alg->paths_between(v, j)) cols[j].push_back(m.basis_action(b) * x);
  std::vector<Matrix> bases(nv);
  for (int j = 0; j < nv; ++j) bases[j] = Matrix::from_columns(cols[j], m.dim(j));
  return submodule_from_subspaces(m, bases);
}

SubModule kernel(const ModuleMap& f) {
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < f.comps.size(); ++v)
    bases.push_back(Matrix::from_columns(kernel_basis(f.comps[v]), f.source.dim(v)));
  return submodule_from_subspaces(f.source, bases);
}

QuotientModule cokernel(const ModuleMap& f) { return quotient_by_subspaces(f.target, f.comps); }

SubModule image(const ModuleMap& f) { return submodule_from_subspaces(f.target, f.comps); }

namespace {

std::vector<Matrix> radical_subspaces(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Matrix> bases(q.num_vertices());
  for (int v = 0; v < q.num_vertices(); ++v) bases[v] = Matrix(m.dim(v), 0);
  for (int a = 0; a < q.num_arrows(); ++a) {
    int t = q.arrow(a).target;
    bases[t] = hstack(bases[t], m.arrow_map(a));
  }
  return bases;
}

}  // namespace

SubModule radical(const Representation& m) { return submodule_from_subspaces(m, radical_subspaces(m)); }

QuotientModule top(const Representation& m) { return quotient_by_subspaces(m, radical_subspaces(m)); }

SubModule socle(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Matrix> bases;
  for (int v = 0; v < q.num_vertices(); ++v) {
    Matrix stack(0, m.dim(v));
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.arrow(a).source == v) stack = vstack(stack, m.arrow_map(a));
    bases.push_back(Matrix::from_columns(kernel_basis(stack), m.dim(v)));
  }
  return submodule_from_subspaces(m, bases);
}

std::vector<int> top_dims(const Representation& m) {
  auto rad = radical_subspaces(m);
  std::vector<int> out;
  for (std::size_t v = 0; v < rad.size(); ++v) out.push_back(m.dim(v) - static_cast<int>(rank(rad[v])));
  return out;
}

std::vector<int> socle_dims(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<int> out;
  for (int v = 0; v < q.num_vertices(); ++v) {
    Matrix stack(0, m.dim(v));
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.arrow(a).source == v) stack = vstack(stack, m.arrow_map(a));
    out.push_back(m.dim(v) - static_cast<int>(rank(stack)));
  }
  return out;
}

ProjectiveCover projective_cover(const Representation& m) {
  const int nv = m.algebra()->num_vertices();
  auto rad = radical_subspaces(m);
  std::vector<int> verts;
  std::vector<Vector> elems;
  for (int v = 0; v < nv; ++v) {
    std::vector<bool> pivot(m.dim(v), false);
    if (rad[v].cols()) {
      for (auto p : rref(rad[v].transpose()).pivots) pivot[p] = true;
    }
    for (int j = 0; j < m.dim(v); ++j) {
      if (pivot[j]) continue;
      Vector e(m.dim(v));
      e[j] = 1;
      verts.push_back(v);
      elems.push_back(std::move(e));
    }
  }
  ProjectiveCover pc;
  pc.layout = projective_sum(m.algebra(), verts);
  pc.map = map_from_projective_sum(pc.layout, m, elems);
  return pc;
}

ModuleMap injective_envelope(const Representation& m) {
  ProjectiveCover pc = projective_cover(dual(m));
  ModuleMap env = dual(pc.map);
  env.source = m;
  return env;
}

std::vector<int> injective_envelope_vertices(const Representation& m) {
  std::vector<int> out;
  auto soc = socle_dims(m);
  for (std::size_t v = 0; v < soc.size(); ++v)
    for (int k = 0; k < soc[v]; ++k) out.push_back(static_cast<int>(v));
  return out;
}

// ---------------------------------------------------------------- endomorphisms

Vector EndomorphismData::coordinates(const ModuleMap& f) const {
  Vector flat = f.flatten();
  Vector c(pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) c[k] = flat[pivots[k]];
  return c;
}

namespace {

ModuleMap combination(const EndomorphismData& e, const Representation& m, const Vector& c) {
  ModuleMap f = ModuleMap::zero(m, m);
  for (int k = 0; k < e.dim(); ++k)
    if (!c[k].is_zero()) f = f + e.basis[k].scaled(c[k]);
  return f;
}

// (tr(x~^q) mod pq) / q mod p, where x~ lifts x blockwise to integers and q = p^i.
std::int64_t lifted_trace(const ModuleMap& x, const mpz_class& q, std::uint64_t p) {
  const mpz_class mod = q * p;
  mpz_class total = 0;
  for (const Matrix& blk : x.comps) {
    const std::size_t n = blk.rows();
    if (n == 0) continue;
    using M = std::vector<mpz_class>;
    auto mul = [&](const M& a, const M& b) {
      M c(n * n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          if (a[i * n + k] == 0) continue;
          for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
        }
      for (auto& v : c) v %= mod;
      return c;
    };
    M base(n * n), acc(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      acc[i * n + i] = 1;
      for (std::size_t j = 0; j < n; ++j) base[i * n + j] = static_cast<long>(blk(i, j).to_int64());
    }
    for (mpz_class r = q; r > 0; r >>= 1) {
      if (mpz_odd_p(r.get_mpz_t())) acc = mul(acc, base);
      if (r > 1) base = mul(base, base);
    }
    for (std::size_t i = 0; i < n; ++i) total += acc[i * n + i];
  }
  total %= mod;
  if (total % q != 0) throw Error("internal: lifted trace not divisible");
  mpz_class g = (total / q) % p;
  return g.get_si();
}

// Radical of End(M). Over Q (and F_p with p > dim M) this is the kernel of the
// trace form; for small p the kernel is cut down by the lifted traces
// tr(x~^{p^i}) / p^i, i = 1 .. log_p(dim M) (Cohen-Ivanyos-Wales).
std::vector<Vector> endomorphism_radical(const EndomorphismData& e, const Representation& m) {
  const int d = e.dim();
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Scalar t;
      for (std::size_t v = 0; v < e.basis[i].comps.size(); ++v) {
        const Matrix& a = e.basis[i].comps[v];
        const Matrix& b = e.basis[j].comps[v];
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < a.cols(); ++c) t.add_mul(a(r, c), b(c, r));
      }
      g(i, j) = t;
      g(j, i) = t;
    }
  std::vector<Vector> rad = kernel_basis(g);
  if (!current_field().is_prime() || rad.empty()) return rad;
  const std::uint64_t p = current_field().characteristic();
  const mpz_class n = m.total_dim();
  for (mpz_class q = p; q <= n && !rad.empty(); q *= p) {
    Matrix gt(static_cast<std::size_t>(d), rad.size());
    for (std::size_t j = 0; j < rad.size(); ++j) {
      ModuleMap a = combination(e, m, rad[j]);
      for (int k = 0; k < d; ++k) gt(k, j) = Scalar(lifted_trace(compose(e.basis[k], a), q, p));
    }
    std::vector<Vector> next;
    for (const auto& c : kernel_basis(gt)) {
      Vector v(d);
      for (std::size_t j = 0; j < rad.size(); ++j)
        for (int k = 0; k < d; ++k) v[k] += c[j] * rad[j][k];
      next.push_back(std::move(v));
    }
    rad = std::move(next);
  }
  // Certify: the result must be a nilpotent ideal.
  std::vector<ModuleMap> level;
  for (const auto& c : rad) level.push_back(combination(e, m, c));
  const std::vector<ModuleMap> gens = level;
  for (int step = 0; step <= m.total_dim() && !level.empty(); ++step) {
    EchelonBasis span(e.dim());
    std::vector<ModuleMap> next;
    for (const auto& x : level)
      for (const auto& y : gens) {
        ModuleMap z = compose(x, y);
        if (span.add(e.coordinates(z))) next.push_back(z);
      }
    level = std::move(next);
  }
  if (!level.empty()) throw Error("internal: endomorphism radical is not nilpotent");
  return rad;
}

}  // namespace

EndomorphismData endomorphism_data(const Representation& m) {
  EndomorphismData e;
  auto hb = hom_basis(m, m);
  if (hb.empty()) return e;
  std::vector<Vector> flat;
  for (const auto& f : hb) flat.push_back(f.flatten());
  RrefResult rr = rref(Matrix::from_rows(flat, flat.front().size()));
  e.pivots = rr.pivots;
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) e.basis.push_back(unflatten(rr.reduced.row(r), m, m));
  e.radical = endomorphism_radical(e, m);
  return e;
}

// ---------------------------------------------------------------- decomposition

namespace {

ModuleMap combination(const EndomorphismData& e, const Vector& c, const Representation& m) {
  ModuleMap f = ModuleMap::zero(m, m);
  for (int k = 0; k < e.dim(); ++k)
    if (!c[k].is_zero()) f = f + e.basis[k].scaled(c[k]);
  return f;
}

double to_double(const Scalar& s) {
  return mpq_class(s.numerator(), s.denominator()).get_d();
}

// Roots in K of a monic polynomial given low-to-high coefficients.
std::vector<Scalar> roots_in_field(const Vector& poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  std::vector<Scalar> roots;
  auto eval = [&](const Scalar& x) {
    Scalar acc;
    for (int k = deg; k >= 0; --k) acc = acc * x + poly[k];
    return acc;
  };
  auto push = [&](const Scalar& r) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end() && eval(r).is_zero()) roots.push_back(r);
  };
  if (poly[0].is_zero()) push(Scalar(0));
  const Field f = current_field();
  if (f.is_prime()) {
    std::uint64_t limit = std::min<std::uint64_t>(f.characteristic(), 1 << 16);
    for (std::uint64_t x = 1; x < limit && static_cast<int>(roots.size()) < deg; ++x)
      push(Scalar(static_cast<std::int64_t>(x)));
    return roots;
  }
  // Rational roots p/q have q dividing the leading coefficient of the integral
  // primitive polynomial; locate them numerically, then confirm exactly.
  mpz_class lcm = 1;
  for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  const double lead = lcm.get_d();
  std::vector<std::complex<long double>> z(deg);
  for (int k = 0; k < deg; ++k) z[k] = std::pow(std::complex<long double>(0.4L, 0.9L), k);
  std::vector<long double> c(poly.size());
  for (std::size_t k = 0; k < poly.size(); ++k) c[k] = to_double(poly[k]);
  for (int it = 0; it < 500; ++it) {
    for (int k = 0; k < deg; ++k) {
      std::complex<long double> num = 0, den = 1;
      for (int j = deg; j >= 0; --j) num = num * z[k] + c[j];
      for (int j = 0; j < deg; ++j)
        if (j != k) den *= (z[k] - z[j]);
      if (std::abs(den) > 0) z[k] -= num / den;
    }
  }
  for (const auto& r : z) {
    if (std::abs(r.imag()) > 1e-3L * (1 + std::abs(r.real()))) continue;
    long double scaled = r.real() * lead;
    if (std::abs(scaled) > 9e15L) continue;
    auto numer = static_cast<std::int64_t>(std::llround(static_cast<double>(scaled)));
    if (lcm.fits_slong_p()) push(Scalar(numer, lcm.get_si()));
  }
  return roots;
}

class SplitSearch {
 public:
  SplitSearch(const Representation& m, const EndomorphismData& e) : m_(m), e_(e), rad_(e.dim()) {
    for (const auto& r : e.radical) rad_.add(r);
    const int d = e.dim();
    prod_.assign(d, std::vector<Vector>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) prod_[i][j] = e.coordinates(compose(e.basis[i], e.basis[j]));
    unit_ = e.coordinates(ModuleMap::identity(m));
  }

  Vector mul(const Vector& x, const Vector& y) const {
    Vector out(e_.dim());
    for (int i = 0; i < e_.dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < e_.dim(); ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (int k = 0; k < e_.dim(); ++k)
          if (!prod_[i][j][k].is_zero()) out[k].add_mul(c, prod_[i][j][k]);
      }
    }
    return out;
  }

  Vector reduce(const Vector& x) const { return rad_.reduce(x); }

  /// Idempotent of End(M) (coordinates) that is neither 0 nor 1, if found.
  std::optional<Vector> find() {
    const int d = e_.dim();
    std::vector<Vector> candidates;
    for (int i = 0; i < d; ++i) candidates.push_back(unit_vec(i));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) candidates.push_back(prod_[i][j]);
    for (int r = 0; r < 8; ++r) {
      Vector c(d);
      for (auto& s : c) s = random_coeff();
      candidates.push_back(c);
    }
    for (const auto& z0 : candidates) {
      Vector z = reduce(z0);
      if (is_zero(z)) continue;
      if (auto idem = try_zero_divisor(z)) return idem;
      for (const auto& w : shifted(z))
        if (auto idem = try_zero_divisor(w)) return idem;
    }
    return std::nullopt;
  }

 private:
  Vector unit_vec(int i) const {
    Vector v(e_.dim());
    v[i] = 1;
    return v;
  }

  // Elements z - lambda for roots lambda of the minimal polynomial of z,
  // plus (z + a)^((p-1)/2) - 1 over large prime fields.
  std::vector<Vector> shifted(const Vector& z) const {
    std::vector<Vector> out;
    const int d = e_.dim();
    EchelonBasis powers(d);
    std::vector<Vector> pw = {reduce(unit_)};
    powers.add(pw[0]);
    Vector cur = pw[0];
    std::optional<Vector> relation;
    for (int k = 1; k <= d; ++k) {
      cur = reduce(mul(cur, z));
      if (powers.contains(cur)) {
        Matrix cols = Matrix::from_columns(pw, d);
        auto sol = solve(cols, cur);
        Vector poly(k + 1);
        for (int j = 0; j < k; ++j) poly[j] = -sol->particular[j];
        poly[k] = 1;
        relation = poly;
        break;
      }
      powers.add(cur);
      pw.push_back(cur);
    }
    if (relation && relation->size() > 2)
      for (const auto& lam : roots_in_field(*relation)) {
        Vector w = z;
        for (int k = 0; k < d; ++k) w[k] -= lam * unit_[k];
        out.push_back(reduce(w));
      }
    const Field f = current_field();
    if (f.is_prime() && f.characteristic() > (1u << 16)) {
      for (int trial = 0; trial < 6; ++trial) {
        Vector base = z;
        Scalar a = random_coeff();
        for (int k = 0; k < d; ++k) base[k] += a * unit_[k];
        Vector acc = reduce(unit_);
        std::uint64_t ex = (f.characteristic() - 1) / 2;
        Vector b = reduce(base);
        while (ex) {
          if (ex & 1) acc = reduce(mul(acc, b));
          b = reduce(mul(b, b));
          ex >>= 1;
        }
        for (int k = 0; k < d; ++k) acc[k] -= unit_[k];
        out.push_back(reduce(acc));
      }
    }
    return out;
  }

  std::optional<Vector> try_zero_divisor(const Vector& z) const {
    const int d = e_.dim();
    const int q = d - rad_.dim();
    if (is_zero(z)) return std::nullopt;
    // L = A z, a proper nonzero left ideal of A = End/rad when z is a zero divisor.
    EchelonBasis lspan(d);
    std::vector<Vector> lbasis;
    for (int k = 0; k < d; ++k) {
      Vector x = reduce(mul(unit_vec(k), z));
      if (lspan.add(x)) lbasis.push_back(x);
    }
    if (lbasis.empty() || static_cast<int>(lbasis.size()) >= q) return std::nullopt;
    // Right identity of L: e = sum c_i l_i with l_j e = l_j for all j.
    const int m = static_cast<int>(lbasis.size());
    Matrix sys(m * d, m);
    Vector rhs(m * d);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i) {
        Vector p = reduce(mul(lbasis[j], lbasis[i]));
        for (int k = 0; k < d; ++k) sys(j * d + k, i) = p[k];
      }
      for (int k = 0; k < d; ++k) rhs[j * d + k] = lbasis[j][k];
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Vector e(d);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < d; ++k) e[k].add_mul(sol->particular[i], lbasis[i][k]);
    // Lift modulo the radical: e <- 3e^2 - 2e^3.
    for (int it = 0; it < 64; ++it) {
      Vector e2 = mul(e, e);
      if (e2 == e) return e;
      Vector e3 = mul(e2, e);
      for (int k = 0; k < d; ++k) e[k] = Scalar(3) * e2[k] - Scalar(2) * e3[k];
    }
    throw Error("decomposition failed: idempotent lifting did not converge");
  }

  const Representation& m_;
  const EndomorphismData& e_;
  EchelonBasis rad_;
  std::vector<std::vector<Vector>> prod_;
  Vector unit_;
};

void split_into(const Representation& m, const ModuleMap& inc, std::vector<SubModule>& out) {
  if (m.is_zero()) return;
  EndomorphismData e = endomorphism_data(m);
  if (e.dim() - e.radical_dim() == 1) {
    out.push_back({m, inc});
    return;
  }
  SplitSearch search(m, e);
  auto idem = search.find();
  if (!idem) throw Error("decomposition failed: no idempotent found in End/rad (non-split endomorphism ring?)");
  ModuleMap ef = combination(e, *idem, m);
  ModuleMap one_minus = ModuleMap::identity(m) - ef;
  for (const ModuleMap* f : {&ef, &one_minus}) {
    SubModule part = image(*f);
    split_into(part.module, compose(inc, part.inclusion), out);
  }
}

bool dimvec_less(const Representation& a, const Representation& b) { return a.dims() < b.dims(); }

}  // namespace

std::vector<SubModule> decompose_with_inclusions(const Representation& m) {
  std::vector<SubModule> out;
  split_into(m, ModuleMap::identity(m), out);
  return out;
}

int DecompositionResult::num_indecomposables() const {
  int n = 0;
  for (const auto& s : summands) n += s.second;
  return n;
}

std::vector<Representation> DecompositionResult::flat() const {
  std::vector<Representation> out;
  for (const auto& [r, k] : summands)
    for (int i = 0; i < k; ++i) out.push_back(r);
  return out;
}

DecompositionResult decompose(const Representation& m) {
  auto parts = decompose_with_inclusions(m);
  std::stable_sort(parts.begin(), parts.end(),
                   [](const SubModule& a, const SubModule& b) { return dimvec_less(a.module, b.module); });
  DecompositionResult res;
  for (const auto& p : parts) {
    bool found = false;
    for (auto& [r, k] : res.summands)
      if (r.dims() == p.module.dims() && is_isomorphic_indecomposable(r, p.module)) {
        ++k;
        found = true;
        break;
      }
    if (!found) res.summands.emplace_back(p.module, 1);
  }
  return res;
}

bool is_indecomposable(const Representation& m) {
  if (m.is_zero()) return false;
  EndomorphismData e = endomorphism_data(m);
  return e.dim() - e.radical_dim() == 1;
}

bool is_isomorphic_indecomposable(const Representation& m, const Representation& n) {
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  auto h1 = hom_basis(m, n);
  if (h1.empty()) return false;
  for (const auto& f : h1)
    if (f.is_isomorphism()) return true;
  ModuleMap r = ModuleMap::zero(m, n);
  for (const auto& f : h1) r = r + f.scaled(random_coeff());
  if (r.is_isomorphism()) return true;
  // End(m) local: m and n are isomorphic iff some g f is invertible, and the
  // non-invertible elements form a subspace, so basis products suffice.
  auto h2 = hom_basis(n, m);
  for (const auto& f : h1)
    for (const auto& g : h2)
      if (compose(g, f).is_isomorphism()) return true;
  return false;
}

bool is_isomorphic(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra()) return false;
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  auto h = hom_basis(m, n);
  if (h.empty()) return false;
  ModuleMap r = ModuleMap::zero(m, n);
  for (const auto& f : h) r = r + f.scaled(random_coeff());
  if (r.is_isomorphism()) return true;
  auto dm = decompose(m), dn = decompose(n);
  if (dm.summands.size() != dn.summands.size()) return false;
  std::vector<bool> used(dn.summands.size(), false);
  for (const auto& [x, k] : dm.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size(); ++j) {
      if (used[j] || dn.summands[j].second != k) continue;
      if (x.dims() == dn.summands[j].first.dims() && is_isomorphic_indecomposable(x, dn.summands[j].first)) {
        used[j] = matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool is_faithful(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  const int nv = alg->num_vertices();
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      const auto& block = alg->paths_between(i, j);
      if (block.empty()) continue;
      std::vector<Vector> rows;
      for (int b : block) rows.push_back(m.basis_action(b).data());
      std::size_t len = static_cast<std::size_t>(m.dim(i)) * m.dim(j);
      if (len == 0 || rank(Matrix::from_rows(rows, len)) != block.size()) return false;
    }
  return true;
}

bool is_projective(const Representation& m) {
  auto td = top_dims(m);
  int total = 0;
  for (std::size_t v = 0; v < td.size(); ++v) total += td[v] * projective(m.algebra(), static_cast<int>(v)).total_dim();
  return total == m.total_dim();
}

bool is_injective(const Representation& m) { return is_projective(dual(m)); }

Representation basic_part(const Representation& m) {
  if (m.is_zero()) return m;
  auto d = decompose(m);
  std::vector<Representation> parts;
  for (const auto& s : d.summands) parts.push_back(s.first);
  return direct_sum_module(parts);
}

}  // namespace qtilt
