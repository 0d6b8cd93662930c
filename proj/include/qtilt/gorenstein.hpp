#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtilt/homalg.hpp"

namespace qtilt {

struct ProfileDegree {
  int degree = 0;
  std::vector<int> injective_vertices;  // I^i(Λ) = ⊕ I(v), with multiplicity
  BoundedDim pd;
  bool projective = false;
};

struct GorensteinProfile {
  int depth = 0;
  int pd_bound = 0;
  std::vector<ProfileDegree> degrees;
  /// The coresolution of Λ ended (I^i = 0 from some degree on) within depth.
  bool coresolution_finite = false;
  /// Largest n <= depth with pd I^i <= i for all i < n (resp. <= i + 1).
  int n_gorenstein_up_to = 0;
  int quasi_up_to = 0;
  BoundedDim dominant_dimension;
};

GorensteinProfile gorenstein_profile(const AlgebraPtr& alg, int depth, int pd_bound);

/// Minimal left add(T)-approximation X -> ⊕ T_k^{d_k} for pairwise
/// non-isomorphic indecomposables T_k.
struct LeftApproximation {
  ModuleMap map;
  std::vector<int> multiplicities;  // d_k
};
LeftApproximation minimal_left_approximation(const Representation& x, const std::vector<Representation>& summands);
/// Convenience form: T is decomposed first.
ModuleMap minimal_left_approximation(const Representation& x, const Representation& t);

/// rad(T_l, T_k): all of Hom for l != k, rad End(T_k) for l == k.
std::vector<ModuleMap> radical_maps(const Representation& from, const Representation& to, bool same);

/// True iff C lies in add of the given indecomposables.
bool in_add(const Representation& c, const std::vector<Representation>& summands);

struct TiltingCertificate {
  bool ok = false;
  std::string failure;  // empty when ok
  BoundedDim pd;
  std::vector<int> self_ext;                  // Ext^i(T,T), 1 <= i <= pd
  std::vector<Representation> coresolution;   // T_0, ..., T_m with 0 -> Λ -> T_0 -> ... -> T_m -> 0
  std::vector<Representation> summands;       // basic indecomposable summands of T
};
TiltingCertificate verify_tilting(const Representation& t, int n);
TiltingCertificate verify_tilting_summands(const std::vector<Representation>& summands, int n);

/// Theorem-style minimum tilting module (⊕_{i<j} I^i(Λ)) ⊕ Ω^{-j}Λ, basic.
struct MinimalTilting {
  Representation module;
  std::vector<Representation> summands;
  bool hypotheses_hold = false;
  std::string failure;  // offending pd when the hypotheses fail
  TiltingCertificate certificate;
};
/// Throws Error("hypotheses fail: ...") unless force is set.
MinimalTilting minimal_tilting(const AlgebraPtr& alg, int j, bool force = false);

struct IwanagaReport {
  int n = 0;
  BoundedDim id_left;   // id Λ_Λ
  BoundedDim id_right;  // id of Λ over Λ^op
  bool cond_iwanaga = false;  // (1) both finite, equal and <= n
  bool cond_left = false;     // (2) id Λ <= n
  bool cond_right = false;    // (3) id Λ^op <= n
  bool min_tilting_left = false;
  bool min_tilting_right = false;
  int gorenstein_checked_depth = 0;
  bool k_gorenstein_all_checked = false;
};
IwanagaReport iwanaga_check(const AlgebraPtr& alg, int n);

Representation regular_module(const AlgebraPtr& alg);

}  // namespace qtilt
