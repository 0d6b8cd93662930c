#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qtilt/cli.hpp"
#include "qtilt/tilt_tau.hpp"

namespace qtest {

using namespace qtilt;

inline AlgebraPtr family(const std::string& f) { return build_from_spec(family_spec(f)); }

inline AlgebraPtr from_text(const std::string& text) { return build_from_spec(parse_spec(text)); }

// KA2 with the arrow 1 -> 2, so P(1) = (1,1) and P(2) = S(2).
inline AlgebraPtr ka2() { return from_text("vertex 1\nvertex 2\narrow a: 1 -> 2\n"); }

// K[x]/(x^2).
inline AlgebraPtr dual_numbers() { return from_text("vertex 1\narrow x: 1 -> 1\nrelation x*x\n"); }

inline int vx(const AlgebraPtr& a, const std::string& label) { return a->quiver().vertex_index(label); }

inline std::vector<std::vector<int>> dims_of(const std::vector<Representation>& ms) {
  std::vector<std::vector<int>> d;
  for (const auto& m : ms) d.push_back(m.dims());
  std::sort(d.begin(), d.end());
  return d;
}

inline std::vector<std::vector<int>> summand_dims(const Representation& m) {
  if (m.is_zero()) return {};
  return dims_of(decompose(m).flat());
}

// ---- exact rank oracle: fraction-free Bareiss elimination over Z.

inline int bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class v = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// ---- linear A_n (arrows i+1 -> i): interval modules and the Euler form.
// M[i,j] has support i..j, top at j and socle at i.

struct Interval {
  int lo, hi;
  auto operator<=>(const Interval&) const = default;
};

inline std::vector<Interval> intervals(int n) {
  std::vector<Interval> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back({i, j});
  return out;
}

inline std::vector<int> interval_dims(int n, Interval x) {
  std::vector<int> d(n, 0);
  for (int v = x.lo; v <= x.hi; ++v) d[v - 1] = 1;
  return d;
}

// Built directly as a representation of nakayama_a(n).
inline Representation interval_module(const AlgebraPtr& alg, Interval x) {
  const int n = alg->num_vertices();
  std::vector<int> d = interval_dims(n, x);
  std::vector<Matrix> maps;
  for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrow(a);
    Matrix m(d[ar.target], d[ar.source]);
    if (d[ar.target] && d[ar.source]) m(0, 0) = 1;
    maps.push_back(m);
  }
  return Representation(alg, d, maps);
}

// Hom(M[i,j], M[k,l]) is one-dimensional iff i <= k <= j <= l.
inline int interval_hom(Interval x, Interval y) { return (x.lo <= y.lo && y.lo <= x.hi && x.hi <= y.hi) ? 1 : 0; }

// Hereditary: dim Ext^1(X,Y) = dim Hom(X,Y) - <dim X, dim Y>.
inline int interval_ext(int n, Interval x, Interval y) {
  auto dx = interval_dims(n, x), dy = interval_dims(n, y);
  int euler = 0;
  for (int v = 0; v < n; ++v) euler += dx[v] * dy[v];
  for (int v = 1; v < n; ++v) euler -= dx[v] * dy[v - 1];  // arrow v+1 -> v
  return interval_hom(x, y) - euler;
}

// ---- random modules: cokernels of random maps between sums of projectives.

inline Scalar small_scalar(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> d(-2, 2);
  return Scalar(d(gen));
}

inline Vector random_vector(std::mt19937_64& gen, int n) {
  Vector v(n);
  for (auto& x : v) x = small_scalar(gen);
  return v;
}

inline Representation random_module(const AlgebraPtr& alg, std::mt19937_64& gen, int max_gens = 3) {
  const int nv = alg->num_vertices();
  std::uniform_int_distribution<int> vert(0, nv - 1), count(1, max_gens), rel(0, 2);
  std::vector<int> top;
  int k = count(gen);
  for (int i = 0; i < k; ++i) top.push_back(vert(gen));
  std::vector<int> rels;
  int r = rel(gen);
  for (int i = 0; i < r; ++i) rels.push_back(vert(gen));
  ProjectiveSum target = projective_sum(alg, top);
  if (rels.empty()) return target.module;
  ProjectiveSum source = projective_sum(alg, rels);
  std::vector<Vector> elems;
  for (int v : rels) elems.push_back(random_vector(gen, target.module.dim(v)));
  ModuleMap f = map_from_projective_sum(source, target.module, elems);
  return cokernel(f).module;
}

inline ModuleMap random_hom(const Representation& m, const Representation& n, std::mt19937_64& gen) {
  ModuleMap f = ModuleMap::zero(m, n);
  for (const auto& h : hom_basis(m, n)) f = f + h.scaled(small_scalar(gen));
  return f;
}

// Upper unitriangular matrix with random entries above the diagonal.
inline Matrix random_unitriangular(std::mt19937_64& gen, int n) {
  Matrix g = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g(i, j) = small_scalar(gen);
  return g;
}

// Inverse of a unitriangular matrix by back substitution.
inline Matrix unitriangular_inverse(const Matrix& g) {
  const int n = static_cast<int>(g.rows());
  Matrix h = Matrix::identity(n);
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j)
      for (int c = 0; c < n; ++c) h(i, c) -= g(i, j) * h(j, c);
  return h;
}

// The module transported along random vertexwise base changes g_v,
// so arrow a: s -> t acts by g_t A g_s^{-1}.
inline Representation conjugate(const Representation& m, std::mt19937_64& gen) {
  const AlgebraPtr& alg = m.algebra();
  std::vector<Matrix> g, gi;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    g.push_back(random_unitriangular(gen, m.dim(v)));
    gi.push_back(unitriangular_inverse(g.back()));
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrow(a);
    maps.push_back(g[ar.target] * m.arrow_map(a) * gi[ar.source]);
  }
  return Representation(alg, m.dims(), maps);
}

inline Representation strip_projectives(const Representation& m) {
  std::vector<Representation> keep;
  if (m.is_zero()) return m;
  for (const auto& s : decompose(m).flat())
    if (!is_projective(s)) keep.push_back(s);
  return keep.empty() ? Representation::zero(m.algebra()) : direct_sum_module(keep);
}

}  // namespace qtest
