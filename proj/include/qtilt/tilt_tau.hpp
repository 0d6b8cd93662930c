#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtilt/gorenstein.hpp"

namespace qtilt {

/// Interns indecomposable modules up to isomorphism and caches Hom data
/// between interned modules. Not thread-safe.
class ModuleRegistry {
 public:
  explicit ModuleRegistry(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  /// Id of the isomorphism class of an indecomposable module.
  int intern(const Representation& indecomposable);
  /// Ids of the indecomposable summands (with repetition).
  std::vector<int> intern_summands(const Representation& m);
  std::optional<int> find(const Representation& indecomposable) const;

  const Representation& module(int id) const { return entries_.at(id).module; }
  int size() const { return static_cast<int>(entries_.size()); }
  /// -1 unless the module is P(v).
  int projective_vertex(int id) const { return entries_.at(id).projective_vertex; }
  int projective_id(int v);

  const std::vector<ModuleMap>& hom(int from, int to);
  /// rad(from, to): Hom for distinct classes, rad End on the diagonal.
  const std::vector<ModuleMap>& rad(int from, int to);
  /// Vertexwise basis of the sum of images of all maps from -> to.
  const std::vector<Matrix>& trace(int from, int to);

 private:
  struct Entry {
    Representation module;
    int projective_vertex = -1;
  };
  AlgebraPtr alg_;
  std::vector<Entry> entries_;
  std::map<std::vector<int>, std::vector<int>> by_dims_;
  std::map<std::pair<int, int>, std::vector<ModuleMap>> hom_, rad_;
  std::map<std::pair<int, int>, std::vector<Matrix>> trace_;
  std::map<int, int> projective_ids_;
};

/// Minimal left add(U)-approximation of an interned X using cached data.
LeftApproximation registry_left_approximation(ModuleRegistry& reg, int x, const std::vector<int>& u);
/// X ∈ Fac(⊕ U): the images of all maps U -> X cover X.
bool registry_in_fac(ModuleRegistry& reg, int x, const std::vector<int>& u);

/// A support τ-tilting pair (M, P): M a list of pairwise non-isomorphic
/// indecomposables, P = ⊕ P(v) for the listed vertices.
struct SupportTauTiltingPair {
  std::vector<Representation> m;
  std::vector<int> p;
  AlgebraPtr algebra;

  Representation m_module() const;
  Representation p_module() const;
  int size() const { return static_cast<int>(m.size() + p.size()); }
};

struct PairCheck {
  bool tau_rigid = false;
  bool hom_p_m_zero = false;
  bool count_ok = false;
  bool ok() const { return tau_rigid && hom_p_m_zero && count_ok; }
};
PairCheck check_pair(const SupportTauTiltingPair& pair);

bool is_tau_rigid(const Representation& n);
/// Mutation at summand k (indices 0..|m|-1 refer to m, then p).
SupportTauTiltingPair mutate_sttilt(const SupportTauTiltingPair& pair, int k);
/// The pair (Tr M_np ⊕ P*, M_pr*) over the opposite algebra.
SupportTauTiltingPair dagger(const SupportTauTiltingPair& pair);

/// Mutation graph over interned summand ids. node[i] is a sorted id list.
struct MutationGraph {
  struct Edge {
    int from = 0, to = 0;
    int removed = -1;  // registry id exchanged out of `from`
    int added = -1;    // registry id exchanged in (-1: none)
  };
  std::vector<std::vector<int>> nodes;
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> order;  // (a, b): node a >= node b
  bool complete = false;
  std::string status;  // "complete", "budget exceeded", "reachable component"
};

struct EnumerationOptions {
  std::size_t node_budget = 100000;
  /// Nonzero: shuffle exploration order with this seed.
  std::uint64_t shuffle_seed = 0;
  bool record_edges = true;
};

/// BFS closure of sτ-tilt from (Λ, 0); nodes list the summands of M.
MutationGraph sttilt_enumerate(ModuleRegistry& reg, const EnumerationOptions& opt = {});
/// The P-part of a node: vertices outside the support of M.
std::vector<int> support_complement(const ModuleRegistry& reg, const std::vector<int>& node);

struct TiltingRecord {
  std::vector<int> ids;  // registry ids of the summands
  Representation module;
  int pd = 0;
  std::vector<std::vector<int>> summand_dims;
};

struct TiltingEnumeration {
  std::vector<TiltingRecord> records;
  bool complete = false;
  std::string status;
};

/// Faithful members of sτ-tilt Λ, each verified as tilting of pd <= 1.
TiltingEnumeration tilt1_enumerate(ModuleRegistry& reg, const EnumerationOptions& opt = {});

std::optional<std::vector<int>> mutate_tilting(ModuleRegistry& reg, const std::vector<int>& t, int x, int n);
std::optional<std::vector<Representation>> mutate_tilting(const std::vector<Representation>& t, int x, int n);

/// Mutation-reachable component of Λ in tilt_n with the tilting order.
MutationGraph tiltn_enumerate(ModuleRegistry& reg, int n, const EnumerationOptions& opt = {});

/// T >= U iff Ext^i(T, U) = 0 for all i > 0.
bool tilting_order_geq(const Representation& t, const Representation& u);
inline bool tilting_order_leq(const Representation& t, const Representation& u) { return tilting_order_geq(u, t); }

bool is_minimal_in_tiltn(const std::vector<Representation>& summands, int n);

/// Restriction of T / T(e) to Γ = Λ/(e), e = Σ_{i∈E} e_i.
Representation tensor_to_factor(const Representation& t, const std::vector<int>& e_vertices, const AlgebraPtr& gamma);

struct BijectionReport {
  std::vector<int> e_vertices;
  bool e_lambda_faithful = false;
  bool degenerate = false;
  std::size_t tilt1_count = 0;
  std::size_t sttilt_count = 0;
  bool injective = false;
  bool image_equals = false;
  bool complete = false;
  bool ok() const { return complete && injective && image_equals && tilt1_count == sttilt_count; }
  /// Pairs (tilting summand dimvecs, image summand dimvecs).
  std::vector<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> pairs;
};
/// Throws Error("not 1-Gorenstein") when I^0(Λ) is not projective.
BijectionReport bijection_check(const AlgebraPtr& alg, const EnumerationOptions& opt = {});

/// Sorted dimension vectors of the nodes' summands.
std::vector<std::vector<int>> node_dims(const ModuleRegistry& reg, const std::vector<int>& node);

std::string graph_to_dot(const ModuleRegistry& reg, const MutationGraph& g);

}  // namespace qtilt
