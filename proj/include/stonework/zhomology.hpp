#pragma once

// Integer chain complexes in degrees 0..2, Smith normal form over Z, Cech
// complexes of finite covers and of relation graphs, and the cohomology of the
// interval and circle towers.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stonework/integer.hpp"
#include "stonework/limits.hpp"
#include "stonework/profinite.hpp"

namespace stonework::zhomology {

/// Sparse row-major integer matrix; each row keeps its entries sorted by column.
class IntMatrix {
 public:
  using Entry = std::pair<std::size_t, Int>;
  using Row = std::vector<Entry>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const std::vector<std::vector<Int>>& rows, std::size_t cols = 0);
  static IntMatrix from_rows(std::size_t cols, std::vector<Row> rows);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return data_[r]; }

  Int get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Int& v);
  void add(std::size_t r, std::size_t c, const Int& v);

  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  IntMatrix transpose() const;
  /// Rows [begin, end).
  IntMatrix row_slice(std::size_t begin, std::size_t end) const;
  /// Columns [begin, end).
  IntMatrix col_slice(std::size_t begin, std::size_t end) const;
  /// [a | b]; throws DimensionMismatch when the row counts differ.
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

  std::vector<std::vector<Int>> to_dense() const;
  /// Dense dump: "rows cols" then one line of decimal entries per row.
  std::string dump() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// D = U * m * V with U, V unimodular and V_inv = V^-1.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix v_inv;
  std::size_t rank = 0;
  /// Nonzero diagonal entries, positive, each dividing the next.
  std::vector<Int> diagonal;
};

SmithForm snf(const IntMatrix& m);

/// Nonzero invariant factors (including 1s), without transforms.
std::vector<Int> invariant_factors(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Determinant of a square matrix by fraction-free elimination.
Int determinant(const IntMatrix& m);

struct AbInvariants {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  /// "Z^2 + Z/2", "0".
  std::string to_string() const;
  friend bool operator==(const AbInvariants&, const AbInvariants&) = default;
};

/// Cochain complex (Z --aug-->) C0 --d0--> C1 --d1--> C2. Vectors are columns.
class ChainComplexZ {
 public:
  using Labels = std::array<std::vector<std::string>, 3>;

  ChainComplexZ() = default;
  /// Throws DimensionMismatch on inconsistent shapes and InvariantViolated
  /// when d1 * d0 or d0 * aug is nonzero.
  ChainComplexZ(std::optional<IntMatrix> aug, IntMatrix d0, IntMatrix d1, Labels labels = {});

  const std::optional<IntMatrix>& aug() const { return aug_; }
  const IntMatrix& d0() const { return d0_; }
  const IntMatrix& d1() const { return d1_; }
  const Labels& labels() const { return labels_; }
  std::array<std::size_t, 3> dims() const { return {d0_.cols(), d1_.cols(), d1_.rows()}; }

 private:
  std::optional<IntMatrix> aug_;
  IntMatrix d0_;
  IntMatrix d1_;
  Labels labels_;
};

struct Homology {
  /// ker d0.
  AbInvariants h0;
  /// ker d1 / im d0.
  AbInvariants h1;
  /// ker d0 / im aug, present when the complex is augmented.
  std::optional<AbInvariants> h0_reduced;
  /// Augmented: exactness at Z, C0, C1. Otherwise: at C0, C1.
  std::vector<bool> exact;
  std::vector<std::string> warnings;

  bool all_exact() const;
};

Homology homology(const ChainComplexZ& c);

enum class Coefficients { TrivialZ, FiberPowers };

struct FiniteCover {
  /// fibers[x] = |T_x| for each base point x.
  std::vector<std::size_t> fibers;
  Coefficients coefficients = Coefficients::TrivialZ;
};

ChainComplexZ cech_complex(const FiniteCover& cov);

using Pair = std::array<std::size_t, 2>;
using Triple = std::array<std::size_t, 3>;

struct GraphCech {
  ChainComplexZ complex;
  std::vector<Pair> pairs;
  std::vector<Triple> triples;

  std::size_t pair_index(std::size_t u, std::size_t v) const;
  std::size_t triple_index(std::size_t u, std::size_t v, std::size_t w) const;
  /// (1, c0, c1, c2).
  std::array<std::size_t, 4> dims() const;

 private:
  friend GraphCech graph_cech_complex(const profinite::RelGraph& g);
  std::map<Pair, std::size_t> pair_pos_;
  std::map<Triple, std::size_t> triple_pos_;
};

GraphCech graph_cech_complex(const profinite::RelGraph& g);

struct CohomologyResult {
  std::size_t level = 0;
  std::array<std::size_t, 4> dims{};
  Homology homology;
};

/// Also throws InvariantViolated if the augmented complex fails to be exact.
CohomologyResult interval_cohomology(std::size_t n, std::size_t cap = default_cap());
CohomologyResult circle_cohomology(std::size_t n, std::size_t cap = default_cap());

/// Pullback along a graph morphism phi: from -> to. Maps cochains of `to` to
/// cochains of `from`.
struct CochainMap {
  IntMatrix f0;
  IntMatrix f1;
  IntMatrix f2;
};

/// Throws RelationNotPreserved when phi does not preserve the relation.
CochainMap induced_cochain_map(const GraphCech& from, const GraphCech& to, std::span<const std::size_t> phi);
/// Checks d * f = f * d in both degrees and f0 * aug = aug.
bool commutes(const CochainMap& f, const GraphCech& from, const GraphCech& to);
/// Cochain map of (phi_after o phi_before): first pull back along phi_after.
CochainMap compose(const CochainMap& after, const CochainMap& before);

struct InducedIso {
  bool h0 = false;
  bool h1 = false;
};

/// Whether f induces isomorphisms on ker d0 and on ker d1 / im d0. Handles
/// torsion.
InducedIso induced_isomorphisms(const ChainComplexZ& source, const ChainComplexZ& target, const CochainMap& f);

struct StabilizationReport {
  std::vector<CohomologyResult> levels;
  /// transitions[n]: pullback from level n to level n+1.
  std::vector<InducedIso> transitions;
};

StabilizationReport stabilization_report(const profinite::RelGraphTower& tower, std::size_t depth);

}  // namespace stonework::zhomology
