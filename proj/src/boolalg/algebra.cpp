#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <string>
#include <unordered_map>

#include "eval.hpp"
#include "stonework/boolalg.hpp"
#include "stonework/error.hpp"

namespace stonework {

std::size_t default_cap() {
  const char* env = std::getenv("STONEWORK_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return kDefaultCap;
  return static_cast<std::size_t>(std::min<unsigned long long>(value, kHardCap));
}

void enforce_cap(std::size_t requested, std::size_t cap) {
  if (requested > cap || requested > kHardCap) throw CapExceeded(requested, std::min(cap, kHardCap));
}

}  // namespace stonework

namespace stonework::boolalg {

namespace detail {

BitVec eval_columns(const Term& t, const GenIndex& index, std::span<const BitVec> columns,
                    std::size_t width) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return BitVec(width, false);
    case Term::Kind::One:
      return BitVec(width, true);
    case Term::Kind::Gen: {
      auto it = index.find(t.name());
      if (it == index.end()) throw UnknownGenerator(t.name());
      return columns[it->second];
    }
    case Term::Kind::Not:
      return ~eval_columns(t.lhs(), index, columns, width);
    case Term::Kind::And: {
      BitVec l = eval_columns(t.lhs(), index, columns, width);
      return l &= eval_columns(t.rhs(), index, columns, width);
    }
    case Term::Kind::Or: {
      BitVec l = eval_columns(t.lhs(), index, columns, width);
      return l |= eval_columns(t.rhs(), index, columns, width);
    }
  }
  return BitVec(width);
}

GenIndex make_index(const std::vector<std::string>& gens) {
  GenIndex index;
  for (std::size_t i = 0; i < gens.size(); ++i) index.emplace(gens[i], i);
  return index;
}

std::vector<BitVec> assignment_columns(std::size_t n) {
  // Bit k of column i is bit (n-1-i) of k.
  static constexpr std::array<std::uint64_t, 6> kPatterns = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  const std::size_t width = std::size_t{1} << n;
  std::vector<BitVec> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t shift = n - 1 - i;
    BitVec col(width);
    auto& words = col.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (shift < 6) {
        words[w] = kPatterns[shift];
      } else {
        words[w] = ((w * 64) >> shift) & 1U ? ~std::uint64_t{0} : 0;
      }
    }
    col.trim();
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace detail

// ---------------------------------------------------------------------------

Presentation::Presentation(std::vector<std::string> gens, std::vector<Term> rels)
    : gens_(std::move(gens)), rels_(std::move(rels)) {
  std::set<std::string> seen;
  for (const auto& g : gens_)
    if (!seen.insert(g).second) throw DuplicateGenerator(g);
  for (const auto& r : rels_) check_term(r);
}

std::optional<std::size_t> Presentation::index_of(const std::string& gen) const {
  auto it = std::find(gens_.begin(), gens_.end(), gen);
  if (it == gens_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

Presentation Presentation::with_relations(std::span<const Term> extra) const {
  std::vector<Term> rels = rels_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(gens_, std::move(rels));
}

void Presentation::check_term(const Term& t) const {
  for (const auto& g : t.generators())
    if (!index_of(g)) throw UnknownGenerator(g);
}

std::string Presentation::to_string() const {
  std::string out = "gens:";
  for (const auto& g : gens_) out += " " + g;
  out += "\nrels:";
  for (std::size_t i = 0; i < rels_.size(); ++i) out += (i == 0 ? " " : " , ") + rels_[i].to_string();
  out += "\n";
  return out;
}

bool operator==(const Presentation& a, const Presentation& b) {
  return a.gens_ == b.gens_ && a.rels_ == b.rels_;
}

std::vector<std::string> indexed_generators(std::size_t n, const std::string& prefix) {
  std::vector<std::string> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(prefix + std::to_string(i));
  return gens;
}

Presentation free_algebra(std::vector<std::string> gens) { return Presentation(std::move(gens), {}); }

Presentation binfty(std::size_t n) {
  auto gens = indexed_generators(n);
  std::vector<Term> rels;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) rels.push_back(Term::gen(gens[i]) & Term::gen(gens[j]));
  return Presentation(std::move(gens), std::move(rels));
}

namespace {

std::map<std::string, Term> renaming(const Presentation& p, const std::string& prefix) {
  std::map<std::string, Term> out;
  for (const auto& g : p.gens()) out.emplace(g, Term::gen(prefix + g));
  return out;
}

const std::string kSelector = "is_left";

}  // namespace

Presentation product(const Presentation& a, const Presentation& b) {
  std::vector<std::string> gens{kSelector};
  for (const auto& g : a.gens()) gens.push_back("left_" + g);
  for (const auto& g : b.gens()) gens.push_back("right_" + g);
  const Term sel = Term::gen(kSelector);
  const auto left = renaming(a, "left_");
  const auto right = renaming(b, "right_");
  std::vector<Term> rels;
  for (const auto& r : a.rels()) rels.push_back(sel & r.substitute(left));
  for (const auto& r : b.rels()) rels.push_back(~sel & r.substitute(right));
  for (const auto& g : b.gens()) rels.push_back(sel & Term::gen("right_" + g));
  for (const auto& g : a.gens()) rels.push_back(~sel & Term::gen("left_" + g));
  return Presentation(std::move(gens), std::move(rels));
}

Term pair_term(const Presentation& a, const Term& x, const Presentation& b, const Term& y) {
  a.check_term(x);
  b.check_term(y);
  const Term sel = Term::gen(kSelector);
  return (sel & x.substitute(renaming(a, "left_"))) | (~sel & y.substitute(renaming(b, "right_")));
}

// ---------------------------------------------------------------------------

std::string FinBoolAlg::point_string(std::size_t i) const {
  const std::size_t n = generator_count();
  std::string s(n, '0');
  for (std::size_t g = 0; g < n; ++g)
    if (bit(i, g)) s[g] = '1';
  return s;
}

std::optional<std::size_t> FinBoolAlg::find(std::uint64_t key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

ElementVec FinBoolAlg::generator_column(std::size_t gen) const {
  ElementVec col(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (bit(i, gen)) col.set(i);
  return col;
}

ElementVec truth_table(const Term& t, const Presentation& p, std::size_t cap) {
  const std::size_t n = p.gens().size();
  enforce_cap(n, cap);
  const auto cols = detail::assignment_columns(n);
  return detail::eval_columns(t, detail::make_index(p.gens()), cols, std::size_t{1} << n);
}

FinBoolAlg spectrum(const Presentation& p, std::size_t cap) {
  const std::size_t n = p.gens().size();
  enforce_cap(n, cap);
  const std::size_t width = std::size_t{1} << n;
  const auto cols = detail::assignment_columns(n);
  const auto index = detail::make_index(p.gens());
  BitVec killed(width);
  for (const auto& r : p.rels()) killed |= detail::eval_columns(r, index, cols, width);

  FinBoolAlg a;
  a.source_ = p;
  a.keys_.reserve(width - killed.count());
  const auto& words = killed.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t free_bits = ~words[w];
    while (free_bits != 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(free_bits));
      const std::size_t key = w * 64 + bit;
      if (key >= width) break;
      a.keys_.push_back(key);
      free_bits &= free_bits - 1;
    }
  }
  return a;
}

ElementVec evaluate(const Term& t, const FinBoolAlg& a) {
  std::vector<BitVec> cols;
  cols.reserve(a.generator_count());
  for (std::size_t g = 0; g < a.generator_count(); ++g) cols.push_back(a.generator_column(g));
  return detail::eval_columns(t, detail::make_index(a.source().gens()), cols, a.size());
}

Term minterm(const FinBoolAlg& a, std::size_t point) {
  std::vector<Term> lits;
  lits.reserve(a.generator_count());
  for (std::size_t g = 0; g < a.generator_count(); ++g) {
    Term x = Term::gen(a.source().gens()[g]);
    lits.push_back(a.bit(point, g) ? x : ~x);
  }
  return meet_all(lits);
}

Term realize(const ElementVec& v, const FinBoolAlg& a) {
  if (v.size() != a.size())
    throw DimensionMismatch("element vector has " + std::to_string(v.size()) + " bits, algebra has " +
                            std::to_string(a.size()) + " points");
  std::vector<Term> terms;
  for (std::size_t i : v.ones()) terms.push_back(minterm(a, i));
  return join_all(terms);
}

bool is_trivial(const FinBoolAlg& a) { return a.empty(); }

// ---------------------------------------------------------------------------

DualityReport check_duality(const Presentation& p, std::size_t cap) {
  const std::size_t n = p.gens().size();
  const FinBoolAlg a = spectrum(p, cap);

  DualityReport report;
  report.generators = n;
  report.points = a.size();

  // |B| from the ideal side: B = 2[n] / (r) with r the join of the
  // relations, whose elements are the truth tables modulo those below r.
  const ElementVec ideal = truth_table(join_all(p.rels()), p, cap);
  const std::size_t width = std::size_t{1} << n;
  report.element_count_log2 = width - ideal.count();
  if (report.element_count_log2 < 64) report.elements = std::uint64_t{1} << report.element_count_log2;

  // Every atom must be hit by a realized term.
  bool atoms_ok = true;
  for (std::size_t i = 0; i < a.size() && atoms_ok; ++i) {
    ElementVec atom(a.size());
    atom.set(i);
    atoms_ok = evaluate(realize(atom, a), a) == atom;
  }

  if (n <= kExhaustiveDualityGenerators) {
    report.mode = DualityReport::Mode::Exhaustive;
    // Walk every element x of the free algebra, form its class x & ~r in the
    // quotient and its restriction to the spectrum.
    const std::uint64_t r = ideal.words().empty() ? 0 : ideal.words()[0];
    const std::uint64_t full = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    const std::uint64_t count = std::uint64_t{1} << width;
    std::unordered_map<std::uint64_t, std::uint64_t> class_to_vec;
    std::set<std::uint64_t> vectors;
    bool well_defined = true;
    for (std::uint64_t x = 0; x < count; ++x) {
      const std::uint64_t cls = x & ~r & full;
      std::uint64_t vec = 0;
      for (std::size_t j = 0; j < a.size(); ++j)
        if ((x >> a.key(j)) & 1U) vec |= std::uint64_t{1} << j;
      auto [it, inserted] = class_to_vec.emplace(cls, vec);
      if (!inserted && it->second != vec) well_defined = false;
      vectors.insert(vec);
    }
    const bool class_count_ok = class_to_vec.size() == report.elements.value_or(0);
    report.injective = well_defined && class_count_ok && vectors.size() == class_to_vec.size();
    report.surjective = atoms_ok && vectors.size() == (std::uint64_t{1} << a.size());
  } else {
    report.mode = DualityReport::Mode::Structural;
    // The spectrum must be exactly the complement of the ideal's support;
    // then classes and vectors are both indexed by subsets of it.
    bool complement = ideal.count() + a.size() == width;
    for (std::size_t j = 0; j < a.size() && complement; ++j) complement = !ideal.get(a.key(j));
    report.injective = complement && atoms_ok && report.element_count_log2 == a.size();
    report.surjective = atoms_ok;
  }
  return report;
}

}  // namespace stonework::boolalg
