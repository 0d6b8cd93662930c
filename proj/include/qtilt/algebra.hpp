#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtilt/matrix.hpp"

namespace qtilt {

struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;
};

/// Finite quiver with labelled vertices and arrows.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int add_vertex(const std::string& label);
  int add_arrow(const std::string& label, int source, int target);
  int add_arrow(const std::string& label, const std::string& source, const std::string& target);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_label(int v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// -1 when absent.
  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& label) const;

  Quiver opposite() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> vertex_ix_;
  std::unordered_map<std::string, int> arrow_ix_;
};

/// Path written left to right: arrows[k].target == arrows[k+1].source.
/// Length-0 paths are the trivial paths e_v.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  auto operator<=>(const Path&) const = default;
};

struct RelationTerm {
  Scalar coeff;
  std::vector<int> arrows;
};

/// A linear combination of paths sharing one source and one target.
struct RelationExpr {
  std::vector<RelationTerm> terms;
};

using SparseElement = std::vector<std::pair<int, Scalar>>;

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// Finite-dimensional algebra KQ/I with a path basis.
///
/// Basis elements are normal-form paths; products of basis elements are
/// precomputed as sparse combinations. Immutable after construction.
class BoundQuiverAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<RelationExpr>& relations() const { return relations_; }
  int num_vertices() const { return quiver_.num_vertices(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  int loewy_bound() const { return loewy_; }

  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int i) const { return basis_.at(i); }
  /// Indices of basis paths from i to j.
  const std::vector<int>& paths_between(int i, int j) const { return between_[i * num_vertices() + j]; }
  int idempotent(int v) const { return idempotent_ix_.at(v); }
  int arrow_element(int a) const { return arrow_ix_.at(a); }
  /// Position of a basis index inside paths_between(source, target).
  int position_in_block(int basis_index) const { return block_pos_.at(basis_index); }

  /// Product of two basis elements, left-to-right path composition.
  const SparseElement& basis_product(int i, int j) const { return products_[i * dim() + j]; }
  /// Normal form of an arbitrary composable arrow sequence starting at `source`.
  SparseElement normal_form(const Path& p) const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_vector(int i) const;

  std::string path_string(const Path& p) const;

 private:
  friend AlgebraPtr build_algebra(Quiver q, std::vector<RelationExpr> rels, int cap);

  Quiver quiver_;
  std::vector<RelationExpr> relations_;
  int loewy_ = 1;
  std::vector<Path> basis_;
  std::map<Path, int> basis_ix_;
  std::map<Path, SparseElement> reductions_;
  std::vector<std::vector<int>> between_;
  std::vector<int> idempotent_ix_;
  std::vector<int> arrow_ix_;
  std::vector<int> block_pos_;
  std::vector<SparseElement> products_;

  mutable std::mutex op_mutex_;
  mutable std::shared_ptr<const BoundQuiverAlgebra> op_cache_;
  mutable std::weak_ptr<const BoundQuiverAlgebra> op_of_;

  friend AlgebraPtr opposite_algebra(const AlgebraPtr& alg);
};

constexpr int kDefaultLengthCap = 64;

/// Builds KQ/I. Throws Error("ill-formed relation ...") or
/// Error("not admissible within cap ...").
AlgebraPtr build_algebra(Quiver q, std::vector<RelationExpr> rels, int cap = kDefaultLengthCap);

/// Opposite algebra; cached, and opposite_algebra(opposite_algebra(A)) is A.
AlgebraPtr opposite_algebra(const AlgebraPtr& alg);

/// Lambda / (e) for e the sum of e_i over `vertices`, presented on the
/// remaining vertices. Throws Error("empty quotient") if all vertices are removed.
AlgebraPtr quotient_by_idempotent(const AlgebraPtr& alg, const std::vector<int>& vertices);

/// Parses "a*b*c" style arrow-label paths into a relation term list helper.
RelationExpr relation_from_paths(const Quiver& q,
                                 const std::vector<std::pair<std::int64_t, std::vector<std::string>>>& terms);

}  // namespace qtilt
