#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace stonework::boolalg {

/// An element of the free Boolean algebra on named generators, as a syntax
/// tree. Terms are immutable and share subtrees, so copying is cheap.
class Term {
 public:
  enum class Kind : std::uint8_t { Zero, One, Gen, Not, And, Or };

  Term();  // Zero

  static Term zero();
  static Term one();
  static Term gen(std::string name);

  friend Term operator~(const Term& t);
  friend Term operator&(const Term& a, const Term& b);
  friend Term operator|(const Term& a, const Term& b);

  Kind kind() const;
  /// Generator name; empty unless kind() == Gen.
  const std::string& name() const;
  /// Operand of Not, left operand of And/Or.
  const Term& lhs() const;
  /// Right operand of And/Or.
  const Term& rhs() const;

  /// Structural equality.
  friend bool operator==(const Term& a, const Term& b);

  /// Concrete syntax with minimal parentheses; parses back to the same tree.
  std::string to_string() const;

  void collect_generators(std::set<std::string>& out) const;
  std::set<std::string> generators() const;

  /// Replaces each generator by its image. Generators missing from `images`
  /// are left in place.
  Term substitute(const std::map<std::string, Term>& images) const;

  std::size_t node_count() const;
  std::size_t depth() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Left-associated disjunction; Zero when `terms` is empty.
template <typename Range>
Term join_all(const Range& terms) {
  bool first = true;
  Term acc = Term::zero();
  for (const Term& t : terms) {
    acc = first ? t : (acc | t);
    first = false;
  }
  return acc;
}

/// Left-associated conjunction; One when `terms` is empty.
template <typename Range>
Term meet_all(const Range& terms) {
  bool first = true;
  Term acc = Term::one();
  for (const Term& t : terms) {
    acc = first ? t : (acc & t);
    first = false;
  }
  return acc;
}

}  // namespace stonework::boolalg
