#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qtilt/algebra.hpp"

namespace qtilt {

/// Right module over a bound quiver algebra, as a quiver representation.
///
/// Arrow a: s -> t acts as a dims[t] x dims[s] matrix on column vectors
/// (m . a = A m). Cheap to copy: the data is shared and immutable.
class Representation {
 public:
  Representation() = default;
  /// Validates matrix shapes; relations are checked separately.
  Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> maps);
  static Representation zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return d_->alg; }
  const std::vector<int>& dims() const { return d_->dims; }
  int dim(int v) const { return d_->dims[v]; }
  int total_dim() const { return d_->total; }
  bool is_zero() const { return d_->total == 0; }
  int offset(int v) const { return d_->offsets[v]; }
  const Matrix& arrow_map(int a) const { return d_->maps[a]; }
  const std::vector<Matrix>& arrow_maps() const { return d_->maps; }

  /// Action of a composable path (dims[target] x dims[source]).
  Matrix path_action(const Path& p) const;
  /// Cached action of a basis element of the algebra.
  const Matrix& basis_action(int b) const;
  bool satisfies_relations() const;

  std::string dimvec_string() const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  struct Data {
    AlgebraPtr alg;
    std::vector<int> dims;
    std::vector<int> offsets;
    int total = 0;
    std::vector<Matrix> maps;
    mutable std::once_flag actions_once;
    mutable std::vector<Matrix> actions;
  };
  std::shared_ptr<const Data> d_;
};

/// Homomorphism of right modules; vertex v component is target.dim(v) x source.dim(v).
struct ModuleMap {
  Representation source;
  Representation target;
  std::vector<Matrix> comps;

  static ModuleMap zero(const Representation& s, const Representation& t);
  static ModuleMap identity(const Representation& m);

  bool is_homomorphism() const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  int rank() const;

  /// Concatenation of all components, row-major, vertex by vertex.
  Vector flatten() const;
  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap operator-(const ModuleMap& o) const;
  ModuleMap scaled(const Scalar& s) const;
};

/// g o f
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct DirectSum {
  Representation module;
  std::vector<ModuleMap> inclusions;
  std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<Representation>& parts);
Representation direct_sum_module(const std::vector<Representation>& parts);
/// Map between direct sums given by a block matrix of maps blocks[i][j]: src[j] -> tgt[i].
ModuleMap block_map(const DirectSum& src, const DirectSum& tgt, const std::vector<std::vector<ModuleMap>>& blocks);

Representation projective(const AlgebraPtr& alg, int i);
Representation injective(const AlgebraPtr& alg, int i);
Representation simple(const AlgebraPtr& alg, int i);

/// Free module ⊕ P(v_s) and the Yoneda correspondence Hom(⊕P(v_s), N) = ⊕ N_{v_s}.
struct ProjectiveSum {
  std::vector<int> vertices;
  Representation module;
  /// Position of the generator e_{v_s} of summand s inside module.dim(v_s).
  std::vector<int> generator_pos;
  /// Offset of summand s inside module.dim(j), indexed [s][j].
  std::vector<std::vector<int>> block_offset;
};
ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<int>& vertices);
/// The map ⊕P(v_s) -> N sending generator s to elems[s] in N_{v_s}.
ModuleMap map_from_projective_sum(const ProjectiveSum& ps, const Representation& n, const std::vector<Vector>& elems);

/// Dual module over the opposite algebra (arrow maps transposed).
Representation dual(const Representation& m);
ModuleMap dual(const ModuleMap& f);

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

/// Submodule with inclusion, or quotient with projection.
struct SubModule {
  Representation module;
  ModuleMap inclusion;
};
struct QuotientModule {
  Representation module;
  ModuleMap projection;
};

/// Subspaces given by basis columns at each vertex; must be arrow-stable.
SubModule submodule_from_subspaces(const Representation& m, const std::vector<Matrix>& bases);
QuotientModule quotient_by_subspaces(const Representation& m, const std::vector<Matrix>& bases);
/// Smallest submodule containing the given (vertex, element) pairs.
SubModule submodule_generated(const Representation& m, const std::vector<std::pair<int, Vector>>& gens);

SubModule kernel(const ModuleMap& f);
QuotientModule cokernel(const ModuleMap& f);
SubModule image(const ModuleMap& f);

SubModule radical(const Representation& m);
SubModule socle(const Representation& m);
QuotientModule top(const Representation& m);
std::vector<int> top_dims(const Representation& m);
std::vector<int> socle_dims(const Representation& m);

/// P -> M with P = ⊕ P(i)^{top multiplicity}; also returns the layout of P.
struct ProjectiveCover {
  ProjectiveSum layout;
  ModuleMap map;
};
ProjectiveCover projective_cover(const Representation& m);
/// M -> I; target is a direct sum of injective(alg, i).
ModuleMap injective_envelope(const Representation& m);
std::vector<int> injective_envelope_vertices(const Representation& m);

/// Basis of End(M) in reduced echelon form on flattened maps, and its radical.
struct EndomorphismData {
  std::vector<ModuleMap> basis;
  std::vector<std::size_t> pivots;  // flattened positions read off as coordinates
  std::vector<Vector> radical;      // coordinates (w.r.t. basis) spanning rad End
  Vector coordinates(const ModuleMap& f) const;
  int dim() const { return static_cast<int>(basis.size()); }
  int radical_dim() const { return static_cast<int>(radical.size()); }
};
EndomorphismData endomorphism_data(const Representation& m);

/// Krull–Schmidt decomposition. Summands are listed in a canonical order
/// (dimension vector, then insertion) grouped by isomorphism class.
struct DecompositionResult {
  std::vector<std::pair<Representation, int>> summands;
  int num_indecomposables() const;
  std::vector<Representation> flat() const;
};
DecompositionResult decompose(const Representation& m);
/// All indecomposable summands with their inclusions into m (with repetition).
std::vector<SubModule> decompose_with_inclusions(const Representation& m);

bool is_indecomposable(const Representation& m);
/// For indecomposable m (local End): deterministic isomorphism test.
bool is_isomorphic_indecomposable(const Representation& m, const Representation& n);
bool is_isomorphic(const Representation& m, const Representation& n);
bool is_faithful(const Representation& m);
bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

/// Basic representative: one copy of each indecomposable summand.
Representation basic_part(const Representation& m);

}  // namespace qtilt
