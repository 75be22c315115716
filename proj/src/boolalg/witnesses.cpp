#include <algorithm>
#include <charconv>

#include "stonework/boolalg.hpp"
#include "stonework/error.hpp"

namespace stonework::boolalg {

// ---------------------------------------------------------------------------
// B-infinity normal forms

Term NormalFormBInfty::to_term() const {
  std::vector<Term> parts;
  for (auto i : indices) {
    Term g = Term::gen("g" + std::to_string(i));
    parts.push_back(kind == Kind::Join ? g : ~g);
  }
  return kind == Kind::Join ? join_all(parts) : meet_all(parts);
}

std::string NormalFormBInfty::to_string() const {
  std::string out = kind == Kind::Join ? "Join({" : "MeetNeg({";
  for (std::size_t i = 0; i < indices.size(); ++i) out += (i ? "," : "") + std::to_string(indices[i]);
  return out + "})";
}

std::optional<std::size_t> one_hot_index(const FinBoolAlg& a, std::size_t point) {
  const std::uint64_t key = a.key(point);
  if (key == 0) return std::nullopt;
  if ((key & (key - 1)) != 0) throw InvariantViolated("point " + a.point_string(point) + " is not one-hot");
  return a.generator_count() - 1 - static_cast<std::size_t>(std::countr_zero(key));
}

NormalFormBInfty binfty_normal_form(const ElementVec& v, std::size_t n) {
  const FinBoolAlg a = spectrum(binfty(n));
  if (v.size() != a.size())
    throw DimensionMismatch("binfty(" + std::to_string(n) + ") has " + std::to_string(a.size()) +
                            " points, vector has " + std::to_string(v.size()));
  std::optional<std::size_t> zero_point;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.key(i) == 0) zero_point = i;

  NormalFormBInfty nf;
  const bool selects_zero = zero_point && v.get(*zero_point);
  nf.kind = selects_zero ? NormalFormBInfty::Kind::MeetNeg : NormalFormBInfty::Kind::Join;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto idx = one_hot_index(a, i);
    if (!idx) continue;
    if (v.get(i) != selects_zero) nf.indices.push_back(*idx);
  }
  std::sort(nf.indices.begin(), nf.indices.end());
  return nf;
}

// ---------------------------------------------------------------------------
// LLPO

bool LlpoReport::all_ok() const {
  if (!injective() || !surjective() || !analysis.axiom2_consistent) return false;
  return std::all_of(decode.begin(), decode.end(),
                     [](const LlpoDecode& d) { return d.round_trip && d.llpo_identity; });
}

LlpoReport llpo_split(std::size_t n, std::size_t cap) {
  if (n == 0) throw OutOfRange("llpo_split needs stage >= 1");
  const Presentation src = binfty(2 * n);
  const Presentation half = binfty(n);
  const Presentation dst = product(half, half);

  std::vector<Term> images;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const Term g = Term::gen("g" + std::to_string(i / 2));
    images.push_back(i % 2 == 0 ? pair_term(half, g, half, Term::zero())
                                : pair_term(half, Term::zero(), half, g));
  }

  LlpoReport report;
  report.stage = n;
  report.f = hom(src, std::move(images), dst, cap);
  report.analysis = analyze_morphism(report.f, cap);
  report.source_spectrum = spectrum(src, cap);
  report.product_spectrum = spectrum(dst, cap);
  const FinBoolAlg half_spec = spectrum(half, cap);

  const auto& alphas = report.source_spectrum;
  const auto& pm = report.analysis.point_map;
  const std::size_t half_gens = n;
  for (std::size_t p = 0; p < alphas.size(); ++p) {
    LlpoDecode d;
    d.alpha = p;
    const auto hot = one_hot_index(alphas, p);
    // The zero point goes Left.
    d.side = (hot && *hot % 2 == 1) ? Side::Right : Side::Left;
    std::uint64_t beta_key = 0;
    if (hot) beta_key = std::uint64_t{1} << (half_gens - 1 - *hot / 2);
    d.beta = half_spec.find(beta_key).value();

    // Locate (side, beta) in the product spectrum: selector first, then the
    // left block, then the right block.
    const std::size_t total = 1 + 2 * half_gens;
    std::uint64_t key = 0;
    if (d.side == Side::Left) {
      key = (std::uint64_t{1} << (total - 1)) | (beta_key << half_gens);
    } else {
      key = beta_key;
    }
    const auto prod_point = report.product_spectrum.find(key);
    d.round_trip = prod_point && pm[*prod_point] == p;

    d.llpo_identity = true;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      const bool should_vanish = (d.side == Side::Left) ? (i % 2 == 1) : (i % 2 == 0);
      if (should_vanish && alphas.bit(p, i)) d.llpo_identity = false;
    }
    report.decode.push_back(d);
  }
  return report;
}

// ---------------------------------------------------------------------------
// WLPO

namespace {

std::size_t generator_number(const std::string& name) {
  if (name.size() < 2 || name[0] != 'g') throw UnknownGenerator(name);
  std::size_t value = 0;
  const char* first = name.data() + 1;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw UnknownGenerator(name);
  return value;
}

bool evaluate_at(const Term& t, const std::vector<bool>& assignment) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return false;
    case Term::Kind::One:
      return true;
    case Term::Kind::Gen:
      return assignment[generator_number(t.name())];
    case Term::Kind::Not:
      return !evaluate_at(t.lhs(), assignment);
    case Term::Kind::And:
      return evaluate_at(t.lhs(), assignment) && evaluate_at(t.rhs(), assignment);
    case Term::Kind::Or:
      return evaluate_at(t.lhs(), assignment) || evaluate_at(t.rhs(), assignment);
  }
  return false;
}

}  // namespace

WlpoReport wlpo_counterexample(const Term& c) {
  WlpoReport r;
  for (const auto& g : c.generators()) {
    const std::size_t idx = generator_number(g);
    r.k = r.k ? std::max(*r.k, idx) : idx;
  }
  const std::size_t len = r.k ? *r.k + 2 : 1;
  r.beta.assign(len, false);
  r.gamma.assign(len, false);
  r.gamma[len - 1] = true;
  r.value_beta = evaluate_at(c, r.beta);
  r.value_gamma = evaluate_at(c, r.gamma);
  r.verdict = r.value_beta ? WlpoReport::Verdict::FailsOnBeta : WlpoReport::Verdict::FailsOnGamma;
  return r;
}

// ---------------------------------------------------------------------------
// Join search

std::optional<std::size_t> minimal_join_witness(const Presentation& p, std::span<const Term> rels,
                                                std::size_t bound, std::size_t cap) {
  for (const auto& r : rels) p.check_term(r);
  const FinBoolAlg a = spectrum(p, cap);
  ElementVec alive(a.size(), true);
  const std::size_t last = std::min(bound + 1, rels.size());
  for (std::size_t k = 0; k < last; ++k) {
    alive &= ~evaluate(rels[k], a);
    if (alive.none()) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> markov_index(std::span<const bool> alpha) {
  std::vector<Term> rels;
  bool seen = false;
  for (bool bit : alpha) {
    const bool first_one = bit && !seen;
    seen = seen || bit;
    rels.push_back(first_one ? Term::one() : Term::zero());
  }
  if (rels.empty()) return std::nullopt;
  return minimal_join_witness(Presentation(), rels, rels.size() - 1);
}

// ---------------------------------------------------------------------------
// Separation

ElementVec closed_set(const FinBoolAlg& a, std::span<const Term> terms) {
  ElementVec in(a.size(), true);
  for (const auto& t : terms) in &= ~evaluate(t, a);
  return in;
}

Separation separate_closed(const Presentation& p, std::span<const Term> fs, std::span<const Term> gs,
                           std::size_t cap) {
  for (const auto& t : fs) p.check_term(t);
  for (const auto& t : gs) p.check_term(t);
  const FinBoolAlg a = spectrum(p, cap);
  const ElementVec f_set = closed_set(a, fs);
  const ElementVec g_set = closed_set(a, gs);
  if (!(f_set & g_set).none()) throw NotDisjoint("closed sets F and G share a point");

  Separation out;
  if (a.empty()) {
    out.decider = ElementVec(0);
    return out;
  }

  // Interleave h_{2k} = f_k, h_{2k+1} = g_k and find the shortest prefix
  // whose join is 1.
  std::vector<Term> h;
  std::vector<std::pair<bool, std::size_t>> origin;
  for (std::size_t k = 0; k < std::max(fs.size(), gs.size()); ++k) {
    if (k < fs.size()) {
      h.push_back(fs[k]);
      origin.emplace_back(false, k);
    }
    if (k < gs.size()) {
      h.push_back(gs[k]);
      origin.emplace_back(true, k);
    }
  }
  const auto k = minimal_join_witness(p, h, h.size(), cap);
  if (!k) throw InvariantViolated("disjoint closed sets without a finite join witness");

  std::vector<Term> g_terms;
  for (std::size_t i = 0; i <= *k; ++i) {
    if (origin[i].first) {
      out.g_used.push_back(origin[i].second);
      g_terms.push_back(h[i]);
    } else {
      out.f_used.push_back(origin[i].second);
    }
  }
  out.decider = evaluate(join_all(g_terms), a);
  return out;
}

}  // namespace stonework::boolalg
