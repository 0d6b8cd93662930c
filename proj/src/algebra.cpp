#include "qtilt/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qtilt {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  for (auto& v : vertices) add_vertex(v);
  for (auto& a : arrows) add_arrow(a.label, a.source, a.target);
}

int Quiver::add_vertex(const std::string& label) {
  if (label.empty()) throw Error("quiver: empty vertex label");
  if (vertex_ix_.count(label)) throw Error("quiver: duplicate vertex '" + label + "'");
  vertex_ix_[label] = num_vertices();
  vertices_.push_back(label);
  return num_vertices() - 1;
}

int Quiver::add_arrow(const std::string& label, int source, int target) {
  if (label.empty()) throw Error("quiver: empty arrow label");
  if (arrow_ix_.count(label)) throw Error("quiver: duplicate arrow '" + label + "'");
  if (source < 0 || source >= num_vertices() || target < 0 || target >= num_vertices())
    throw Error("quiver: arrow '" + label + "' has an undeclared endpoint");
  arrow_ix_[label] = num_arrows();
  arrows_.push_back({label, source, target});
  return num_arrows() - 1;
}

int Quiver::add_arrow(const std::string& label, const std::string& source, const std::string& target) {
  int s = vertex_index(source), t = vertex_index(target);
  if (s < 0) throw Error("quiver: arrow '" + label + "' uses undeclared vertex '" + source + "'");
  if (t < 0) throw Error("quiver: arrow '" + label + "' uses undeclared vertex '" + target + "'");
  return add_arrow(label, s, t);
}

int Quiver::vertex_index(const std::string& label) const {
  auto it = vertex_ix_.find(label);
  return it == vertex_ix_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& label) const {
  auto it = arrow_ix_.find(label);
  return it == arrow_ix_.end() ? -1 : it->second;
}

Quiver Quiver::opposite() const {
  Quiver q;
  for (auto& v : vertices_) q.add_vertex(v);
  for (auto& a : arrows_) q.add_arrow(a.label, a.target, a.source);
  return q;
}

namespace {

using PathIndex = std::map<Path, int>;

// Sparse element of the path space: path -> coefficient.
using PathCombination = std::map<Path, Scalar>;

void validate_relations(const Quiver& q, const std::vector<RelationExpr>& rels) {
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto& rel = rels[r];
    std::string where = "ill-formed relation #" + std::to_string(r + 1) + ": ";
    if (rel.terms.empty()) throw Error(where + "no terms");
    int src = -1, tgt = -1;
    for (const auto& t : rel.terms) {
      if (t.arrows.size() < 2) throw Error(where + "paths must have length >= 2");
      for (int a : t.arrows)
        if (a < 0 || a >= q.num_arrows()) throw Error(where + "unknown arrow");
      for (std::size_t k = 0; k + 1 < t.arrows.size(); ++k)
        if (q.arrow(t.arrows[k]).target != q.arrow(t.arrows[k + 1]).source)
          throw Error(where + "path " + q.arrow(t.arrows[k]).label + "*" + q.arrow(t.arrows[k + 1]).label +
                      " is not composable");
      int s = q.arrow(t.arrows.front()).source, e = q.arrow(t.arrows.back()).target;
      if (src < 0) {
        src = s;
        tgt = e;
      } else if (s != src || e != tgt) {
        throw Error(where + "terms do not share one source and one target");
      }
    }
  }
}

std::vector<std::vector<Path>> paths_by_length(const Quiver& q, int max_len, std::size_t limit) {
  std::vector<std::vector<Path>> by_len(max_len + 1);
  for (int v = 0; v < q.num_vertices(); ++v) by_len[0].push_back({v, v, {}});
  std::vector<std::vector<int>> out(q.num_vertices());
  for (int a = 0; a < q.num_arrows(); ++a) out[q.arrow(a).source].push_back(a);
  std::size_t total = by_len[0].size();
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& p : by_len[len - 1])
      for (int a : out[p.target]) {
        Path n = p;
        n.arrows.push_back(a);
        n.target = q.arrow(a).target;
        by_len[len].push_back(std::move(n));
      }
    std::sort(by_len[len].begin(), by_len[len].end());
    total += by_len[len].size();
    if (total > limit) throw Error("not admissible within cap: path space too large");
  }
  return by_len;
}

Path concat(const Path& a, const Path& b) {
  Path p{a.source, b.target, a.arrows};
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

Path arrow_path(const Quiver& q, int a) { return {q.arrow(a).source, q.arrow(a).target, {a}}; }

Path term_path(const Quiver& q, const RelationTerm& t) {
  return {q.arrow(t.arrows.front()).source, q.arrow(t.arrows.back()).target, t.arrows};
}

bool homogeneous(const std::vector<RelationExpr>& rels) {
  for (const auto& r : rels)
    for (const auto& t : r.terms)
      if (t.arrows.size() != r.terms.front().arrows.size()) return false;
  return true;
}

constexpr std::size_t kPathLimit = 400000;

}  // namespace

AlgebraPtr build_algebra(Quiver q, std::vector<RelationExpr> rels, int cap) {
  if (cap < 2) throw Error("build_algebra: length cap must be >= 2");
  validate_relations(q, rels);
  auto alg = std::make_shared<BoundQuiverAlgebra>();
  alg->quiver_ = std::move(q);
  alg->relations_ = std::move(rels);
  const Quiver& Q = alg->quiver_;

  // Basis paths and reductions of non-basis paths (pivots of the ideal span).
  std::vector<Path> basis;
  std::map<Path, SparseElement> pivot_rows;  // stored against basis *paths*, re-indexed below
  std::map<Path, std::vector<std::pair<Path, Scalar>>> reductions;
  int loewy = -1;

  auto record_degree_basis = [&](const std::vector<Path>& space, const EchelonBasis& ideal) {
    std::vector<bool> pivot(space.size(), false);
    for (auto p : ideal.pivots()) pivot[p] = true;
    for (std::size_t i = 0; i < space.size(); ++i)
      if (!pivot[i]) basis.push_back(space[i]);
    for (std::size_t r = 0; r < ideal.rows().size(); ++r) {
      const Vector& row = ideal.rows()[r];
      std::vector<std::pair<Path, Scalar>> nf;
      for (std::size_t j = 0; j < space.size(); ++j)
        if (j != ideal.pivots()[r] && !row[j].is_zero()) nf.emplace_back(space[j], -row[j]);
      reductions[space[ideal.pivots()[r]]] = std::move(nf);
    }
  };

  if (homogeneous(alg->relations_)) {
    // Degree by degree: I_d = R_d + I_{d-1} * arrows + arrows * I_{d-1}.
    std::vector<Path> prev_space;
    std::vector<Vector> prev_rows;
    for (int v = 0; v < Q.num_vertices(); ++v) basis.push_back({v, v, {}});
    std::vector<std::vector<Path>> levels = {{}};
    for (int v = 0; v < Q.num_vertices(); ++v) levels[0].push_back({v, v, {}});
    std::vector<std::vector<int>> out(Q.num_vertices());
    for (int a = 0; a < Q.num_arrows(); ++a) out[Q.arrow(a).source].push_back(a);
    std::size_t total = levels[0].size();
    for (int d = 1; d <= cap; ++d) {
      std::vector<Path> space;
      for (const auto& p : levels[d - 1])
        for (int a : out[p.target]) {
          Path n = p;
          n.arrows.push_back(a);
          n.target = Q.arrow(a).target;
          space.push_back(std::move(n));
        }
      std::sort(space.begin(), space.end());
      total += space.size();
      if (total > kPathLimit) throw Error("not admissible within cap: path space too large");
      PathIndex ix;
      for (std::size_t i = 0; i < space.size(); ++i) ix[space[i]] = static_cast<int>(i);
      EchelonBasis ideal(space.size());
      auto add_combination = [&](const PathCombination& c) {
        if (ideal.dim() == space.size()) return;
        Vector v(space.size());
        for (const auto& [p, s] : c) v[ix.at(p)] += s;
        ideal.add(v);
      };
      for (const auto& rel : alg->relations_) {
        if (static_cast<int>(rel.terms.front().arrows.size()) != d) continue;
        PathCombination c;
        for (const auto& t : rel.terms) c[term_path(Q, t)] += t.coeff;
        add_combination(c);
      }
      for (const auto& row : prev_rows) {
        for (int a = 0; a < Q.num_arrows(); ++a) {
          PathCombination left, right;
          for (std::size_t j = 0; j < prev_space.size(); ++j) {
            if (row[j].is_zero()) continue;
            const Path& p = prev_space[j];
            if (Q.arrow(a).target == p.source) left[concat(arrow_path(Q, a), p)] += row[j];
            if (p.target == Q.arrow(a).source) right[concat(p, arrow_path(Q, a))] += row[j];
          }
          if (!left.empty()) add_combination(left);
          if (!right.empty()) add_combination(right);
        }
      }
      if (ideal.dim() == space.size()) {
        loewy = d;
        break;
      }
      record_degree_basis(space, ideal);
      prev_space = space;
      prev_rows = ideal.rows();
      levels.push_back(std::move(space));
    }
    if (loewy < 0) throw Error("not admissible within cap: no power of the arrow ideal vanishes up to length " +
                               std::to_string(cap));
  } else {
    // Truncated closure in the full path space of length <= L.
    for (int L = 2; L <= cap && loewy < 0; ++L) {
      auto by_len = paths_by_length(Q, L, kPathLimit);
      std::vector<Path> space;  // longest first so pivots land on long paths
      for (int len = L; len >= 0; --len) space.insert(space.end(), by_len[len].begin(), by_len[len].end());
      PathIndex ix;
      for (std::size_t i = 0; i < space.size(); ++i) ix[space[i]] = static_cast<int>(i);
      EchelonBasis ideal(space.size());
      std::deque<Vector> queue;
      auto push = [&](const PathCombination& c) {
        Vector v(space.size());
        bool any = false;
        for (const auto& [p, s] : c) {
          if (p.length() > L) continue;
          v[ix.at(p)] += s;
          any = true;
        }
        if (any && ideal.add(v)) queue.push_back(v);
      };
      for (const auto& rel : alg->relations_) {
        PathCombination c;
        for (const auto& t : rel.terms) c[term_path(Q, t)] += t.coeff;
        push(c);
      }
      while (!queue.empty()) {
        Vector w = std::move(queue.front());
        queue.pop_front();
        for (int a = 0; a < Q.num_arrows(); ++a) {
          PathCombination left, right;
          for (std::size_t j = 0; j < space.size(); ++j) {
            if (w[j].is_zero()) continue;
            const Path& p = space[j];
            if (p.length() >= L) continue;
            if (Q.arrow(a).target == p.source) left[concat(arrow_path(Q, a), p)] += w[j];
            if (p.target == Q.arrow(a).source) right[concat(p, arrow_path(Q, a))] += w[j];
          }
          if (!left.empty()) push(left);
          if (!right.empty()) push(right);
        }
      }
      bool all_in = std::all_of(by_len[L].begin(), by_len[L].end(), [&](const Path& p) {
        Vector v(space.size());
        v[ix.at(p)] = 1;
        return ideal.contains(v);
      });
      if (!all_in) continue;
      loewy = L;
      std::vector<bool> pivot(space.size(), false);
      for (auto p : ideal.pivots()) pivot[p] = true;
      for (std::size_t i = 0; i < space.size(); ++i)
        if (!pivot[i] && space[i].length() < L) basis.push_back(space[i]);
      for (std::size_t r = 0; r < ideal.rows().size(); ++r) {
        const Path& p = space[ideal.pivots()[r]];
        if (p.length() >= L) continue;
        std::vector<std::pair<Path, Scalar>> nf;
        const Vector& row = ideal.rows()[r];
        for (std::size_t j = 0; j < space.size(); ++j)
          if (j != ideal.pivots()[r] && !row[j].is_zero()) nf.emplace_back(space[j], -row[j]);
        reductions[p] = std::move(nf);
      }
    }
    if (loewy < 0) throw Error("not admissible within cap: no power of the arrow ideal vanishes up to length " +
                               std::to_string(cap));
  }

  // Order the basis by (source, target, length, arrows) and index it.
  std::sort(basis.begin(), basis.end(), [](const Path& a, const Path& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arrows < b.arrows;
  });
  alg->loewy_ = loewy;
  alg->basis_ = basis;
  const int n = Q.num_vertices();
  alg->between_.assign(static_cast<std::size_t>(n) * n, {});
  alg->block_pos_.resize(basis.size());
  alg->idempotent_ix_.assign(n, -1);
  alg->arrow_ix_.assign(Q.num_arrows(), -1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Path& p = basis[i];
    alg->basis_ix_[p] = static_cast<int>(i);
    auto& block = alg->between_[p.source * n + p.target];
    alg->block_pos_[i] = static_cast<int>(block.size());
    block.push_back(static_cast<int>(i));
    if (p.length() == 0) alg->idempotent_ix_[p.source] = static_cast<int>(i);
    if (p.length() == 1) alg->arrow_ix_[p.arrows[0]] = static_cast<int>(i);
  }
  for (auto& [p, nf] : reductions) {
    SparseElement e;
    for (auto& [q, c] : nf) e.emplace_back(alg->basis_ix_.at(q), c);
    alg->reductions_[p] = std::move(e);
  }
  const int dim = alg->dim();
  alg->products_.assign(static_cast<std::size_t>(dim) * dim, {});
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Path& a = basis[i];
      const Path& b = basis[j];
      if (a.target != b.source) continue;
      alg->products_[i * dim + j] = alg->normal_form(concat(a, b));
    }
  return alg;
}

SparseElement BoundQuiverAlgebra::normal_form(const Path& p) const {
  if (p.length() >= loewy_) return {};
  if (auto it = basis_ix_.find(p); it != basis_ix_.end()) return {{it->second, Scalar(1)}};
  if (auto it = reductions_.find(p); it != reductions_.end()) return it->second;
  throw Error("normal_form: path " + path_string(p) + " is not a composable path of this algebra");
}

Vector BoundQuiverAlgebra::basis_vector(int i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

Vector BoundQuiverAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw Error("multiply: element length mismatch");
  Vector out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const auto& prod = basis_product(i, j);
      if (prod.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, s] : prod) out[k].add_mul(c, s);
    }
  }
  return out;
}

std::string BoundQuiverAlgebra::path_string(const Path& p) const {
  if (p.arrows.empty()) return "e" + quiver_.vertex_label(p.source);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) s += (k ? "*" : "") + quiver_.arrow(p.arrows[k]).label;
  return s;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& alg) {
  std::lock_guard lock(alg->op_mutex_);
  if (alg->op_cache_) return alg->op_cache_;
  if (auto orig = alg->op_of_.lock()) return orig;
  std::vector<RelationExpr> rels;
  for (const auto& r : alg->relations_) {
    RelationExpr rr;
    for (const auto& t : r.terms) rr.terms.push_back({t.coeff, {t.arrows.rbegin(), t.arrows.rend()}});
    rels.push_back(std::move(rr));
  }
  auto op = build_algebra(alg->quiver_.opposite(), std::move(rels), std::max(alg->loewy_ + 1, 2));
  {
    std::lock_guard lock2(op->op_mutex_);
    op->op_of_ = alg;
  }
  alg->op_cache_ = op;
  return op;
}

AlgebraPtr quotient_by_idempotent(const AlgebraPtr& alg, const std::vector<int>& vertices) {
  const Quiver& Q = alg->quiver();
  std::set<int> removed(vertices.begin(), vertices.end());
  for (int v : removed)
    if (v < 0 || v >= Q.num_vertices()) throw Error("quotient_by_idempotent: unknown vertex");
  if (static_cast<int>(removed.size()) == Q.num_vertices()) throw Error("empty quotient");
  Quiver q;
  for (int v = 0; v < Q.num_vertices(); ++v)
    if (!removed.count(v)) q.add_vertex(Q.vertex_label(v));
  std::vector<int> arrow_map(Q.num_arrows(), -1);
  for (int a = 0; a < Q.num_arrows(); ++a) {
    const Arrow& ar = Q.arrow(a);
    if (removed.count(ar.source) || removed.count(ar.target)) continue;
    arrow_map[a] = q.add_arrow(ar.label, Q.vertex_label(ar.source), Q.vertex_label(ar.target));
  }
  std::vector<RelationExpr> rels;
  for (const auto& r : alg->relations()) {
    RelationExpr rr;
    for (const auto& t : r.terms) {
      RelationTerm nt{t.coeff, {}};
      bool keep = true;
      for (int a : t.arrows) {
        if (arrow_map[a] < 0) {
          keep = false;
          break;
        }
        nt.arrows.push_back(arrow_map[a]);
      }
      if (keep) rr.terms.push_back(std::move(nt));
    }
    if (!rr.terms.empty()) rels.push_back(std::move(rr));
  }
  return build_algebra(std::move(q), std::move(rels), std::max(alg->loewy_bound() + 1, 2));
}

RelationExpr relation_from_paths(const Quiver& q,
                                 const std::vector<std::pair<std::int64_t, std::vector<std::string>>>& terms) {
  RelationExpr r;
  for (const auto& [c, labels] : terms) {
    RelationTerm t{Scalar(c), {}};
    for (const auto& l : labels) {
      int a = q.arrow_index(l);
      if (a < 0) throw Error("relation: unknown arrow '" + l + "'");
      if (!t.arrows.empty() && q.arrow(t.arrows.back()).target != q.arrow(a).source)
        throw Error("relation: path through '" + l + "' is not composable");
      t.arrows.push_back(a);
    }
    if (t.arrows.size() < 2) throw Error("relation: paths must have length >= 2");
    if (!r.terms.empty()) {
      const auto& f = r.terms.front().arrows;
      if (q.arrow(f.front()).source != q.arrow(t.arrows.front()).source ||
          q.arrow(f.back()).target != q.arrow(t.arrows.back()).target)
        throw Error("relation: terms have different endpoints");
    }
    r.terms.push_back(std::move(t));
  }
  return r;
}

}  // namespace qtilt
