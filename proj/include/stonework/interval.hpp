#pragma once

// Exact dyadic machinery for the unit interval: the binary-expansion map on
// finite words, the two descriptions of n-nearness, the interval and circle
// graph towers, images of decidable subsets of Cantor space, and the fibers
// of the expansion map.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stonework/integer.hpp"
#include "stonework/limits.hpp"
#include "stonework/profinite.hpp"

namespace stonework::interval {

/// num / 2^exp, kept normalized (num odd or exp == 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Int num, std::size_t exp);
  static Dyadic integer(long long v) { return Dyadic(Int(v), 0); }
  /// Parses "k/2^n", "k" or "k/2**n".
  static Dyadic parse(std::string_view text);

  const Int& num() const { return num_; }
  std::size_t exp() const { return exp_; }

  /// "k/2^n" in normalized form.
  std::string to_string() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic abs(const Dyadic& a);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;

  /// 1 / 2^n.
  static Dyadic unit(std::size_t n) { return Dyadic(Int(1), n); }

 private:
  Int num_ = 0;
  std::size_t exp_ = 0;
};

/// A finite binary word; the first bit carries weight 1/2.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::vector<bool> bits) : bits_(std::move(bits)) {}
  /// Accepts only '0' and '1'; throws OutOfRange otherwise.
  static BitWord parse(std::string_view text);
  /// The length-n word whose integer value is k.
  static BitWord from_value(const Int& k, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const { return bits_; }

  /// Sum of bits(i) * 2^(n-1-i).
  Int value() const;
  std::string to_string() const;

  BitWord prefix(std::size_t n) const;
  BitWord concat(const BitWord& other) const;

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend auto operator<=>(const BitWord& a, const BitWord& b) { return a.bits_ <=> b.bits_; }

 private:
  std::vector<bool> bits_;
};

Dyadic cs_value(const BitWord& w);

/// |k_s - k_t| <= 1. Throws DimensionMismatch unless |s| == |t| == n.
bool near(std::size_t n, const BitWord& s, const BitWord& t);

/// Whether u witnesses n-nearness of s and t: both are (u.0.1...)|n or
/// (u.1.0...)|n.
bool is_near_witness(std::size_t n, const BitWord& s, const BitWord& t, const BitWord& u);

/// Exhaustive search for a witness u of length m <= n, shortest first.
/// Throws CapExceeded for n > 62.
std::optional<BitWord> near_companion_witness(std::size_t n, const BitWord& s, const BitWord& t);
bool near_companion(std::size_t n, const BitWord& s, const BitWord& t);

// ---------------------------------------------------------------------------
// Graph towers

/// Fin(2^n) with |i - j| <= 1.
profinite::RelGraph interval_graph(std::size_t n, std::size_t cap = default_cap());
/// interval_graph(n) with 0 and 2^n - 1 related.
profinite::RelGraph circle_graph(std::size_t n, std::size_t cap = default_cap());
/// Vertex map level n+1 -> level n dropping the last bit.
std::vector<std::size_t> restrict_graph_map(std::size_t n, std::size_t cap = default_cap());

profinite::RelGraphTower interval_tower(std::size_t depth, std::size_t cap = default_cap());
profinite::RelGraphTower circle_tower(std::size_t depth, std::size_t cap = default_cap());

// ---------------------------------------------------------------------------
// Interval unions

struct Part {
  Dyadic lo;
  Dyadic hi;
  friend bool operator==(const Part&, const Part&) = default;
};

/// Normalized finite union of subintervals of [0,1]. Open parts are open in
/// the relative topology of [0,1], so a part starting at 0 (ending at 1)
/// contains 0 (contains 1).
class IntervalUnion {
 public:
  enum class Kind { Closed, OpenInI };

  IntervalUnion() = default;
  /// Sorts and merges; throws OutOfRange for parts outside [0,1] or lo > hi.
  IntervalUnion(Kind kind, std::vector<Part> parts);

  Kind kind() const { return kind_; }
  const std::vector<Part>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool contains(const Dyadic& x) const;
  /// Sorted, disjoint and maximally merged.
  bool is_normalized() const;

  std::string to_string() const;
  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  Kind kind_ = Kind::Closed;
  std::vector<Part> parts_;
};

IntervalUnion cylinder_image(const BitWord& w);
IntervalUnion decidable_image(std::span<const BitWord> words);
IntervalUnion complement_closed_union(const IntervalUnion& u);
/// Relative complement in [0,1] of either kind of union.
IntervalUnion complement(const IntervalUnion& u);

// ---------------------------------------------------------------------------
// Fibers

/// The eventually constant sequence prefix . repeat . repeat . ...
struct Expansion {
  BitWord prefix;
  bool repeat = false;

  BitWord truncate(std::size_t m) const;
  std::string to_string() const;
  friend bool operator==(const Expansion&, const Expansion&) = default;
};

/// The binary expansions of d: two for interior dyadics, one for 0 and 1.
/// Throws OutOfRange outside [0,1].
std::vector<Expansion> cs_fiber(const Dyadic& d);

}  // namespace stonework::interval
