#pragma once

// Sequential towers of finite sets and their finite-depth shadows.
//
// All towers are strict: a transition goes from level n+1 to level n and is
// stored as a vector indexed by the points of level n+1.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stonework/boolalg.hpp"

namespace stonework::profinite {

using boolalg::FinBoolAlg;
using boolalg::Morphism;
using boolalg::Presentation;
using boolalg::Term;

/// Schematic relation family evaluable at any index.
enum class Family { None, PairwiseMeetZero };

/// A countable presentation: listed generators followed, when a family is
/// present, by g<i> for every later index; listed relations followed by the
/// family's relations.
struct CountablePresentation {
  std::vector<std::string> gens;
  std::vector<Term> rels;
  std::optional<Family> family;

  /// nullopt past the end of a finite generator list.
  std::optional<std::string> generator(std::size_t i) const;
  /// nullopt past the end of a finite relation list.
  std::optional<Term> relation(std::size_t i) const;
};

/// Pair (i, j), i < j, enumerated by j then i: (0,1), (0,2), (1,2), (0,3), ...
std::pair<std::size_t, std::size_t> pair_at(std::size_t index);

struct AlgebraTower {
  std::vector<Presentation> presentations;
  std::vector<FinBoolAlg> levels;
  /// connecting[n]: level n -> level n+1.
  std::vector<Morphism> connecting;
};

/// Levels 0..depth. Level n uses the generators of index <= n plus those in
/// relations 0..n, and relations 0..n; connecting maps include generators.
AlgebraTower truncation_tower(const CountablePresentation& p, std::size_t depth,
                              std::size_t cap = default_cap());

struct SeqDiagram {
  std::vector<std::size_t> sizes;
  /// transitions[n][x] = image in level n of point x of level n+1.
  std::vector<std::vector<std::size_t>> transitions;
  /// Optional point labels per level.
  std::vector<std::vector<std::string>> labels;

  std::size_t depth() const { return sizes.empty() ? 0 : sizes.size() - 1; }
  /// Image of point x of level `from` at level `to` <= from.
  std::size_t project(std::size_t from, std::size_t to, std::size_t x) const;
  void validate() const;
};

SeqDiagram spectrum_tower(const AlgebraTower& t);

/// All compatible chains (x_0, ..., x_depth).
std::vector<std::vector<std::size_t>> points_at_depth(const SeqDiagram& d, std::size_t depth);

struct ClosedTower {
  SeqDiagram base;
  std::vector<BitVec> selected;
  bool is_saturated() const;
};

/// Saturates per-level decidable subsets from the top level down.
ClosedTower closed_from_decidables(const SeqDiagram& d, std::vector<BitVec> subsets);

/// Least level whose selected set is empty.
std::optional<std::size_t> emptiness_witness(const ClosedTower& c);

/// A decidable subset of the limit given at a level, pulled back to deeper
/// levels along the transitions.
struct LevelConstraint {
  std::size_t level = 0;
  BitVec subset;
};

struct EmptinessWitness {
  std::size_t constraint = 0;  // k: constraints 0..k already have empty meet
  std::size_t level = 0;       // deepest level among constraints 0..k
};

/// Least k with the meet of constraints 0..k empty, computed at the deepest
/// level among them.
std::optional<EmptinessWitness> emptiness_witness(const SeqDiagram& d,
                                                  std::span<const LevelConstraint> constraints);

/// A levelwise map S_n -> T_n.
struct LevelwiseMap {
  std::vector<std::vector<std::size_t>> maps;
};

/// Throws SquareNotCommuting with the offending level.
void check_commutes(const SeqDiagram& s, const SeqDiagram& t, const LevelwiseMap& f);

struct LevelwiseFactorization {
  SeqDiagram middle;
  LevelwiseMap epi;   // S -> middle, surjective per level
  LevelwiseMap mono;  // middle -> T, injective per level
};

LevelwiseFactorization levelwise_factor(const SeqDiagram& s, const SeqDiagram& t,
                                        const LevelwiseMap& f);

/// The spectrum surjection of the LLPO split as a levelwise map
/// Sp(binfty(n) x binfty(n)) -> Sp(binfty(2n)) for n = 1..depth.
struct LlpoTower {
  SeqDiagram source;  // product spectra
  SeqDiagram target;  // Sp(binfty(2n))
  LevelwiseMap map;
};
LlpoTower llpo_spectrum_tower(std::size_t depth, std::size_t cap = default_cap());

// ---------------------------------------------------------------------------
// Relation graphs

/// A reflexive symmetric relation on {0, ..., n-1}.
class RelGraph {
 public:
  RelGraph() = default;
  /// Equality relation on n vertices.
  explicit RelGraph(std::size_t n);
  /// Adds the given pairs, their reverses and the diagonal.
  static RelGraph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t size() const { return adj_.size(); }
  bool related(std::size_t u, std::size_t v) const;
  /// Sorted neighbours of v, including v.
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adj_[v]; }
  /// Number of related ordered pairs.
  std::size_t pair_count() const;

  void relate(std::size_t u, std::size_t v);

  friend bool operator==(const RelGraph&, const RelGraph&) = default;

 private:
  std::vector<std::vector<std::size_t>> adj_;
};

struct RelGraphTower {
  std::vector<RelGraph> levels;
  /// transitions[n]: vertices of level n+1 -> vertices of level n.
  std::vector<std::vector<std::size_t>> transitions;
  /// Throws RelationNotPreserved when a transition breaks the invariant.
  void validate() const;
};

/// True when `phi` maps related pairs of `from` to related pairs of `to`.
bool preserves_relation(const RelGraph& from, const RelGraph& to, std::span<const std::size_t> phi);

std::vector<std::size_t> connected_component(const RelGraph& g, std::size_t v);

bool is_totally_disconnected(const RelGraphTower& t, std::size_t depth);

struct BoundedMap {
  std::size_t bound = 0;               // k: every value is < k
  std::vector<std::size_t> factored;  // values as elements of Fin(k)
};

BoundedMap bound_levelwise_nat_map(std::span<const std::size_t> values);

}  // namespace stonework::profinite
