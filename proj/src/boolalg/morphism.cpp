#include <map>

#include "eval.hpp"
#include "stonework/boolalg.hpp"
#include "stonework/error.hpp"

namespace stonework::boolalg {

namespace {

std::map<std::string, Term> image_map(const Morphism& m) {
  std::map<std::string, Term> out;
  for (std::size_t i = 0; i < m.src.gens().size(); ++i) out.emplace(m.src.gens()[i], m.images[i]);
  return out;
}

constexpr std::size_t kListedKernelLog2 = 10;

}  // namespace

Term Morphism::apply(const Term& t) const {
  src.check_term(t);
  return t.substitute(image_map(*this));
}

Morphism hom(const Presentation& src, std::vector<Term> images, const Presentation& dst,
             std::size_t cap) {
  if (images.size() != src.gens().size())
    throw DimensionMismatch("morphism needs " + std::to_string(src.gens().size()) + " images, got " +
                            std::to_string(images.size()));
  for (const auto& t : images) dst.check_term(t);
  Morphism m{src, dst, std::move(images)};
  const FinBoolAlg target = spectrum(dst, cap);
  for (std::size_t i = 0; i < src.rels().size(); ++i)
    if (!evaluate(m.apply(src.rels()[i]), target).none()) throw RelationNotKilled(i);
  return m;
}

Morphism identity(const Presentation& p) {
  std::vector<Term> images;
  for (const auto& g : p.gens()) images.push_back(Term::gen(g));
  return Morphism{p, p, std::move(images)};
}

std::vector<std::size_t> point_map(const Morphism& m, const FinBoolAlg& src_spec,
                                   const FinBoolAlg& dst_spec) {
  const std::size_t n = m.src.gens().size();
  std::vector<ElementVec> image_values;
  image_values.reserve(n);
  for (const auto& t : m.images) image_values.push_back(evaluate(t, dst_spec));

  std::vector<std::size_t> out(dst_spec.size());
  for (std::size_t j = 0; j < dst_spec.size(); ++j) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (image_values[i].get(j)) key |= std::uint64_t{1} << (n - 1 - i);
    auto idx = src_spec.find(key);
    if (!idx) throw InvariantViolated("point map leaves the source spectrum; morphism is ill-defined");
    out[j] = *idx;
  }
  return out;
}

MorphismReport analyze_morphism(const Morphism& m, std::size_t cap) {
  const FinBoolAlg a = spectrum(m.src, cap);
  const FinBoolAlg c = spectrum(m.dst, cap);

  MorphismReport r;
  r.point_map = point_map(m, a, c);
  ElementVec hit(a.size());
  for (auto i : r.point_map) hit.set(i);
  r.point_map_surjective = hit.all();

  // The kernel is the ideal generated by the atoms sent to 0.
  r.kernel_top = ElementVec(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (evaluate(m.apply(minterm(a, i)), c).none()) r.kernel_top.set(i);
  r.kernel_log2_size = r.kernel_top.count();
  r.injective = r.kernel_log2_size == 0;

  if (r.kernel_log2_size <= kListedKernelLog2) {
    const auto atoms = r.kernel_top.ones();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
      ElementVec e(a.size());
      for (std::size_t b = 0; b < atoms.size(); ++b)
        if ((mask >> b) & 1U) e.set(atoms[b]);
      r.kernel_elements.push_back(std::move(e));
    }
  }
  r.axiom2_consistent = r.injective == r.point_map_surjective;
  return r;
}

EpiMonoFactorization epi_mono_factor(const Morphism& m, std::size_t cap) {
  const FinBoolAlg a = spectrum(m.src, cap);
  const MorphismReport report = analyze_morphism(m, cap);

  const Term kernel = realize(report.kernel_top, a);
  const std::vector<Term> extra{kernel};
  Presentation quotient = report.kernel_top.none() ? m.src : m.src.with_relations(extra);

  EpiMonoFactorization out;
  out.epi = hom(m.src, identity(m.src).images, quotient, cap);
  out.mono = hom(quotient, m.images, m.dst, cap);
  out.middle = spectrum(quotient, cap);
  return out;
}

}  // namespace stonework::boolalg
