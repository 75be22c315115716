#include "stonework/term.hpp"

#include <algorithm>

namespace stonework::boolalg {

struct Term::Node {
  Kind kind;
  std::string name;
  Term a;
  Term b;
};

namespace {

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Or:
      return 1;
    case Term::Kind::And:
      return 2;
    case Term::Kind::Not:
      return 3;
    default:
      return 4;
  }
}

void print(const Term& t, std::string& out) {
  auto child = [&out](const Term& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (t.kind()) {
    case Term::Kind::Zero:
      out += '0';
      return;
    case Term::Kind::One:
      out += '1';
      return;
    case Term::Kind::Gen:
      out += t.name();
      return;
    case Term::Kind::Not:
      out += '~';
      child(t.lhs(), precedence(t.lhs().kind()) < 3);
      return;
    case Term::Kind::And:
    case Term::Kind::Or: {
      const int p = precedence(t.kind());
      child(t.lhs(), precedence(t.lhs().kind()) < p);
      out += t.kind() == Term::Kind::And ? " & " : " | ";
      // Right operands of equal precedence need parentheses to keep the
      // left-associated tree shape on reparse.
      child(t.rhs(), precedence(t.rhs().kind()) <= p);
      return;
    }
  }
}

}  // namespace

// A null node is Zero.
Term::Term() : node_(nullptr) {}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::zero() { return Term(); }

Term Term::one() {
  static const auto node = std::make_shared<const Node>(Node{Kind::One, {}, {}, {}});
  return Term(node);
}

Term Term::gen(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Gen, std::move(name), {}, {}}));
}

Term operator~(const Term& t) {
  return Term(std::make_shared<const Term::Node>(Term::Node{Term::Kind::Not, {}, t, {}}));
}

Term operator&(const Term& a, const Term& b) {
  return Term(std::make_shared<const Term::Node>(Term::Node{Term::Kind::And, {}, a, b}));
}

Term operator|(const Term& a, const Term& b) {
  return Term(std::make_shared<const Term::Node>(Term::Node{Term::Kind::Or, {}, a, b}));
}

Term::Kind Term::kind() const { return node_ ? node_->kind : Kind::Zero; }

const std::string& Term::name() const {
  static const std::string empty;
  return node_ ? node_->name : empty;
}

const Term& Term::lhs() const {
  static const Term zero;
  return node_ ? node_->a : zero;
}

const Term& Term::rhs() const {
  static const Term zero;
  return node_ ? node_->b : zero;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::One:
      return true;
    case Term::Kind::Gen:
      return a.name() == b.name();
    case Term::Kind::Not:
      return a.lhs() == b.lhs();
    case Term::Kind::And:
    case Term::Kind::Or:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

std::string Term::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

void Term::collect_generators(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Gen:
      out.insert(name());
      return;
    case Kind::Not:
      lhs().collect_generators(out);
      return;
    case Kind::And:
    case Kind::Or:
      lhs().collect_generators(out);
      rhs().collect_generators(out);
      return;
    default:
      return;
  }
}

std::set<std::string> Term::generators() const {
  std::set<std::string> out;
  collect_generators(out);
  return out;
}

Term Term::substitute(const std::map<std::string, Term>& images) const {
  switch (kind()) {
    case Kind::Gen: {
      auto it = images.find(name());
      return it == images.end() ? *this : it->second;
    }
    case Kind::Not:
      return ~lhs().substitute(images);
    case Kind::And:
      return lhs().substitute(images) & rhs().substitute(images);
    case Kind::Or:
      return lhs().substitute(images) | rhs().substitute(images);
    default:
      return *this;
  }
}

std::size_t Term::node_count() const {
  switch (kind()) {
    case Kind::Not:
      return 1 + lhs().node_count();
    case Kind::And:
    case Kind::Or:
      return 1 + lhs().node_count() + rhs().node_count();
    default:
      return 1;
  }
}

std::size_t Term::depth() const {
  switch (kind()) {
    case Kind::Not:
      return 1 + lhs().depth();
    case Kind::And:
    case Kind::Or:
      return 1 + std::max(lhs().depth(), rhs().depth());
    default:
      return 1;
  }
}

}  // namespace stonework::boolalg
