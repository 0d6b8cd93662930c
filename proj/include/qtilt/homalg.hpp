#pragma once

#include <string>
#include <vector>

#include "qtilt/repmod.hpp"

namespace qtilt {

/// Minimal projective resolution or minimal injective coresolution.
///
/// Projective: maps[0] is P_0 -> M, maps[k] is P_k -> P_{k-1};
/// syzygies[k] is Omega^k M (syzygies[0] = M).
/// Injective: maps[0] is M -> I^0, maps[k] is I^{k-1} -> I^k;
/// syzygies[k] is Omega^{-k} M.
struct Resolution {
  enum class Kind { projective, injective };
  Kind kind = Kind::projective;
  std::vector<Representation> terms;
  /// Indecomposable summand vertices of each term (P(v) or I(v)).
  std::vector<std::vector<int>> term_vertices;
  std::vector<ModuleMap> maps;
  std::vector<Representation> syzygies;
  /// Terms 0..exact_through are computed; the sequence is exact there.
  int exact_through = -1;
  /// A zero (co)syzygy was reached: the resolution is complete.
  bool finite = false;
  int length() const { return static_cast<int>(terms.size()) - 1; }

  /// Internal: layouts of the projective terms (projective kind only).
  std::vector<ProjectiveSum> layouts;
};

Resolution min_proj_resolution(const Representation& m, int maxdeg);
Representation syzygy(const Representation& m, int k);
Resolution min_inj_coresolution(const Representation& m, int maxdeg);
Representation cosyzygy(const Representation& m, int k);

/// Exact value, or a lower bound ("≥ value") when the bound was hit.
struct BoundedDim {
  int value = 0;
  bool at_least = false;
  bool finite() const { return !at_least; }
  bool le(int n) const { return !at_least && value <= n; }
  std::string str() const;
  friend bool operator==(const BoundedDim&, const BoundedDim&) = default;
};

BoundedDim proj_dim(const Representation& m, int bound);
BoundedDim inj_dim(const Representation& m, int bound);

/// dim Ext^k(M, N) from the Hom complex of the minimal projective resolution of M.
int ext_dim(const Representation& m, const Representation& n, int k);
/// dim Ext^k(M, N) from Hom(M, -) applied to the minimal injective coresolution of N.
int ext_dim_injective(const Representation& m, const Representation& n, int k);
/// All Ext^k(M, N) for 1 <= k <= upto, sharing one resolution.
std::vector<int> ext_dims(const Representation& m, const Representation& n, int upto);

/// Auslander–Bridger transpose over the opposite algebra.
Representation transpose(const Representation& m);
Representation tau(const Representation& m);
Representation tau_inverse(const Representation& m);

/// dim of Hom(N, X) modulo maps factoring through an injective module.
int stable_hom_injective_dim(const Representation& n, const Representation& x);

}  // namespace qtilt
