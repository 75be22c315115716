#pragma once

// Finitely presented Boolean algebras and their spectra.
//
// An algebra is given by generators and relations, each relation r asserting
// r = 0. Its spectrum is the set of 0/1 assignments to the generators under
// which every relation evaluates to 0, listed in lexicographic order of the
// bit-strings (first generator most significant). An element of the algebra
// is stored canonically as its vector of values at the spectrum points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stonework/bitvec.hpp"
#include "stonework/limits.hpp"
#include "stonework/term.hpp"

namespace stonework::boolalg {

using ElementVec = BitVec;

class Presentation {
 public:
  Presentation() = default;
  /// Throws DuplicateGenerator or UnknownGenerator when the invariants fail.
  Presentation(std::vector<std::string> gens, std::vector<Term> rels);

  const std::vector<std::string>& gens() const { return gens_; }
  const std::vector<Term>& rels() const { return rels_; }

  std::optional<std::size_t> index_of(const std::string& gen) const;

  /// Same generators, extra relations appended.
  Presentation with_relations(std::span<const Term> extra) const;

  /// Throws UnknownGenerator if `t` mentions a generator not listed here.
  void check_term(const Term& t) const;

  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&);

 private:
  std::vector<std::string> gens_;
  std::vector<Term> rels_;
};

/// Free algebra on the given generators.
Presentation free_algebra(std::vector<std::string> gens);

/// Generators g0..g{n-1} with g_i & g_j = 0 for i < j.
Presentation binfty(std::size_t n);

/// Names g0..g{n-1}.
std::vector<std::string> indexed_generators(std::size_t n, const std::string& prefix = "g");

/// Presentation of the product algebra A x B. Generators are the selector
/// `is_left` followed by `left_<a>` and `right_<b>`; the spectrum is the
/// disjoint union of the two spectra.
Presentation product(const Presentation& a, const Presentation& b);

/// The product element (x, y) given terms over the left and right factors.
Term pair_term(const Presentation& a, const Term& x, const Presentation& b, const Term& y);

/// A finite Boolean algebra presented by its spectrum.
class FinBoolAlg {
 public:
  FinBoolAlg() = default;

  const Presentation& source() const { return source_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  std::size_t generator_count() const { return source_.gens().size(); }

  /// Assignment of point i packed with the first generator most significant.
  std::uint64_t key(std::size_t i) const { return keys_[i]; }
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  bool bit(std::size_t point, std::size_t gen) const {
    return (keys_[point] >> (generator_count() - 1 - gen)) & 1U;
  }
  std::string point_string(std::size_t i) const;

  std::optional<std::size_t> find(std::uint64_t key) const;

  /// Column of generator `gen` over the points.
  ElementVec generator_column(std::size_t gen) const;

  friend FinBoolAlg spectrum(const Presentation& p, std::size_t cap);

 private:
  Presentation source_;
  std::vector<std::uint64_t> keys_;
};

FinBoolAlg spectrum(const Presentation& p, std::size_t cap = default_cap());

/// Truth table of `t` over all 2^n assignments of `p`'s generators, indexed
/// by packed assignment key.
ElementVec truth_table(const Term& t, const Presentation& p, std::size_t cap = default_cap());

ElementVec evaluate(const Term& t, const FinBoolAlg& a);

/// A term whose evaluation is `v`: the disjunction of the full minterms of
/// the selected points (Zero when none is selected).
Term realize(const ElementVec& v, const FinBoolAlg& a);

/// Full minterm of point i.
Term minterm(const FinBoolAlg& a, std::size_t point);

bool is_trivial(const FinBoolAlg& a);

struct DualityReport {
  enum class Mode { Exhaustive, Structural };
  Mode mode = Mode::Exhaustive;
  std::size_t generators = 0;
  std::size_t points = 0;
  /// log2 |B|, computed from the ideal generated by the relations.
  std::size_t element_count_log2 = 0;
  /// |B| when it fits in 64 bits.
  std::optional<std::uint64_t> elements;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

/// Largest generator count for which check_duality enumerates every element
/// of the free algebra (2^(2^4) = 65536 truth tables).
inline constexpr std::size_t kExhaustiveDualityGenerators = 4;

DualityReport check_duality(const Presentation& p, std::size_t cap = default_cap());

// ---------------------------------------------------------------------------
// Morphisms

struct Morphism {
  Presentation src;
  Presentation dst;
  /// Image of src.gens()[i], a term over dst's generators.
  std::vector<Term> images;

  /// Image of a term over src's generators.
  Term apply(const Term& t) const;
};

/// Checks that every relation of `src` maps to 0 in `dst`.
/// Throws RelationNotKilled with the first offending relation index.
Morphism hom(const Presentation& src, std::vector<Term> images, const Presentation& dst,
             std::size_t cap = default_cap());

Morphism identity(const Presentation& p);

struct MorphismReport {
  /// point_map[j] = index in Sp(src) of dst point j precomposed with the map.
  std::vector<std::size_t> point_map;
  bool point_map_surjective = false;
  /// The largest kernel element; the kernel is the set of elements below it.
  ElementVec kernel_top;
  std::size_t kernel_log2_size = 0;
  /// Every kernel element, listed only when there are at most 2^10.
  std::vector<ElementVec> kernel_elements;
  bool injective = false;
  bool axiom2_consistent = false;
};

/// Injectivity is decided algebraically (which atoms of src map to 0), the
/// point map separately, and the two are compared.
MorphismReport analyze_morphism(const Morphism& m, std::size_t cap = default_cap());

struct EpiMonoFactorization {
  Morphism epi;        // src -> src / ker
  FinBoolAlg middle;   // spectrum of src / ker
  Morphism mono;       // src / ker -> dst
};

EpiMonoFactorization epi_mono_factor(const Morphism& m, std::size_t cap = default_cap());

/// Point map Sp(dst) -> Sp(src) of a morphism, without the kernel analysis.
std::vector<std::size_t> point_map(const Morphism& m, const FinBoolAlg& src_spec,
                                   const FinBoolAlg& dst_spec);

// ---------------------------------------------------------------------------
// B-infinity normal forms

struct NormalFormBInfty {
  enum class Kind { Join, MeetNeg };
  Kind kind = Kind::Join;
  std::vector<std::size_t> indices;

  Term to_term() const;
  std::string to_string() const;
  friend bool operator==(const NormalFormBInfty&, const NormalFormBInfty&) = default;
};

/// Classifies an element of binfty(n) (a vector over its canonical spectrum)
/// as a join of generators or a meet of negated generators.
NormalFormBInfty binfty_normal_form(const ElementVec& v, std::size_t n);

/// Index of the single generator set at a point of binfty(n), if any.
std::optional<std::size_t> one_hot_index(const FinBoolAlg& a, std::size_t point);

// ---------------------------------------------------------------------------
// Omniscience witnesses

enum class Side { Left, Right };

struct LlpoDecode {
  std::size_t alpha = 0;  // point of Sp(binfty(2n))
  Side side = Side::Left;
  std::size_t beta = 0;   // point of Sp(binfty(n))
  bool round_trip = false;    // s(side, beta) == alpha
  bool llpo_identity = false; // Left: odd coordinates vanish; Right: even ones
};

struct LlpoReport {
  std::size_t stage = 0;
  Morphism f;              // binfty(2n) -> binfty(n) x binfty(n)
  MorphismReport analysis;
  FinBoolAlg source_spectrum;
  FinBoolAlg product_spectrum;
  std::vector<LlpoDecode> decode;
  bool injective() const { return analysis.injective; }
  bool surjective() const { return analysis.point_map_surjective; }
  bool all_ok() const;
};

/// The map g_{2k} -> (g_k, 0), g_{2k+1} -> (0, g_k) at stage n, its
/// injectivity, the induced spectrum surjection and the side decoding.
///
/// The principle is usually stated for arbitrary sequences; those reduce to
/// sequences hitting 1 at most once by keeping only the first 1.
LlpoReport llpo_split(std::size_t n, std::size_t cap = default_cap());

struct WlpoReport {
  /// Largest generator index in the candidate; nullopt for constants.
  std::optional<std::size_t> k;
  std::vector<bool> beta;   // all zero on g0..g_{k+1}
  std::vector<bool> gamma;  // zero on g0..g_k, one at g_{k+1}
  bool value_beta = false;
  bool value_gamma = false;
  enum class Verdict { FailsOnBeta, FailsOnGamma };
  Verdict verdict = Verdict::FailsOnGamma;
};

/// Refutes `c` (a term over generators g0, g1, ...) as a decider for "the
/// sequence is identically zero". Throws UnknownGenerator for other names.
WlpoReport wlpo_counterexample(const Term& c);

/// Least k <= bound (and < rels.size()) such that p / (rels[0..k]) is
/// trivial.
std::optional<std::size_t> minimal_join_witness(const Presentation& p, std::span<const Term> rels,
                                                std::size_t bound, std::size_t cap = default_cap());

/// The index of the first 1 in a finite sequence, found by running the join
/// search on the constant relations of the sequence that keeps only that 1.
std::optional<std::size_t> markov_index(std::span<const bool> alpha);

struct Separation {
  ElementVec decider;            // D
  std::vector<std::size_t> f_used;  // I
  std::vector<std::size_t> g_used;  // J
};

/// A decidable D with F inside D and G outside, where F and G are the closed
/// sets cut out by `fs` and `gs`. Throws NotDisjoint when they meet.
Separation separate_closed(const Presentation& p, std::span<const Term> fs,
                           std::span<const Term> gs, std::size_t cap = default_cap());

/// Points of Sp(p) at which every term evaluates to 0.
ElementVec closed_set(const FinBoolAlg& a, std::span<const Term> terms);

}  // namespace stonework::boolalg
