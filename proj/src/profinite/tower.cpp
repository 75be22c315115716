#include <algorithm>
#include <charconv>
#include <map>

#include "stonework/error.hpp"
#include "stonework/profinite.hpp"

namespace stonework::profinite {

std::pair<std::size_t, std::size_t> pair_at(std::size_t index) {
  std::size_t j = 1;
  while (j * (j + 1) / 2 <= index) ++j;
  return {index - j * (j - 1) / 2, j};
}

std::optional<std::string> CountablePresentation::generator(std::size_t i) const {
  if (i < gens.size()) return gens[i];
  if (family) return "g" + std::to_string(i);
  return std::nullopt;
}

std::optional<Term> CountablePresentation::relation(std::size_t i) const {
  if (i < rels.size()) return rels[i];
  if (!family || *family == Family::None) return std::nullopt;
  const auto [a, b] = pair_at(i - rels.size());
  return Term::gen(*generator(a)) & Term::gen(*generator(b));
}

namespace {

std::size_t resolve_index(const CountablePresentation& p, const std::string& name) {
  auto it = std::find(p.gens.begin(), p.gens.end(), name);
  if (it != p.gens.end()) return static_cast<std::size_t>(it - p.gens.begin());
  if (p.family && name.size() > 1 && name[0] == 'g') {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), value);
    if (ec == std::errc() && ptr == name.data() + name.size() && value >= p.gens.size()) return value;
  }
  throw UnknownGenerator(name);
}

}  // namespace

AlgebraTower truncation_tower(const CountablePresentation& p, std::size_t depth, std::size_t cap) {
  AlgebraTower tower;
  std::map<std::size_t, std::string> gens;  // ordered by generator index
  std::vector<Term> rels;
  for (std::size_t n = 0; n <= depth; ++n) {
    if (auto g = p.generator(n)) gens.emplace(n, *g);
    if (auto r = p.relation(n)) {
      for (const auto& name : r->generators()) gens.emplace(resolve_index(p, name), name);
      rels.push_back(*r);
    }
    enforce_cap(gens.size(), cap);
    std::vector<std::string> names;
    for (const auto& [idx, name] : gens) names.push_back(name);
    tower.presentations.emplace_back(std::move(names), rels);
    tower.levels.push_back(boolalg::spectrum(tower.presentations.back(), cap));
  }
  for (std::size_t n = 0; n < depth; ++n) {
    const auto& lower = tower.presentations[n];
    tower.connecting.push_back(boolalg::hom(lower, boolalg::identity(lower).images,
                                            tower.presentations[n + 1], cap));
  }
  return tower;
}

std::size_t SeqDiagram::project(std::size_t from, std::size_t to, std::size_t x) const {
  for (std::size_t n = from; n > to; --n) x = transitions[n - 1][x];
  return x;
}

void SeqDiagram::validate() const {
  if (transitions.size() + 1 != sizes.size() && !(sizes.empty() && transitions.empty()))
    throw InvariantViolated("diagram needs one transition per adjacent pair of levels");
  for (std::size_t n = 0; n < transitions.size(); ++n) {
    if (transitions[n].size() != sizes[n + 1])
      throw InvariantViolated("transition " + std::to_string(n) + " is not total");
    for (auto y : transitions[n])
      if (y >= sizes[n]) throw InvariantViolated("transition " + std::to_string(n) + " leaves its codomain");
  }
}

SeqDiagram spectrum_tower(const AlgebraTower& t) {
  SeqDiagram d;
  for (const auto& level : t.levels) {
    d.sizes.push_back(level.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < level.size(); ++i) labels.push_back(level.point_string(i));
    d.labels.push_back(std::move(labels));
  }
  for (std::size_t n = 0; n < t.connecting.size(); ++n)
    d.transitions.push_back(boolalg::point_map(t.connecting[n], t.levels[n], t.levels[n + 1]));
  return d;
}

std::vector<std::vector<std::size_t>> points_at_depth(const SeqDiagram& d, std::size_t depth) {
  if (depth >= d.sizes.size()) throw OutOfRange("depth " + std::to_string(depth) + " exceeds the diagram");
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t top = 0; top < d.sizes[depth]; ++top) {
    std::vector<std::size_t> chain(depth + 1);
    chain[depth] = top;
    for (std::size_t n = depth; n > 0; --n) chain[n - 1] = d.transitions[n - 1][chain[n]];
    chains.push_back(std::move(chain));
  }
  return chains;
}

bool ClosedTower::is_saturated() const {
  for (std::size_t n = 0; n + 1 < selected.size(); ++n)
    for (auto x : selected[n + 1].ones())
      if (!selected[n].get(base.transitions[n][x])) return false;
  return true;
}

ClosedTower closed_from_decidables(const SeqDiagram& d, std::vector<BitVec> subsets) {
  if (subsets.size() != d.sizes.size()) throw DimensionMismatch("one subset per level required");
  for (std::size_t n = 0; n < subsets.size(); ++n)
    if (subsets[n].size() != d.sizes[n]) throw DimensionMismatch("subset size differs from level size");
  ClosedTower c{d, std::move(subsets)};
  for (std::size_t n = 1; n < c.selected.size(); ++n)
    for (auto x : c.selected[n].ones())
      if (!c.selected[n - 1].get(d.transitions[n - 1][x])) c.selected[n].set(x, false);
  for (std::size_t n = c.selected.size(); n-- > 1;) {
    BitVec image(d.sizes[n - 1]);
    for (auto x : c.selected[n].ones()) image.set(d.transitions[n - 1][x]);
    c.selected[n - 1] &= image;
  }
  return c;
}

std::optional<std::size_t> emptiness_witness(const ClosedTower& c) {
  for (std::size_t n = 0; n < c.selected.size(); ++n)
    if (c.selected[n].none()) return n;
  return std::nullopt;
}

std::optional<EmptinessWitness> emptiness_witness(const SeqDiagram& d,
                                                  std::span<const LevelConstraint> constraints) {
  std::size_t level = 0;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (constraints[k].level >= d.sizes.size()) throw OutOfRange("constraint beyond the diagram");
    if (constraints[k].subset.size() != d.sizes[constraints[k].level])
      throw DimensionMismatch("constraint subset size differs from its level");
    level = std::max(level, constraints[k].level);
    // Only points that survive to the top of the diagram count.
    std::size_t top = d.sizes.size() - 1;
    bool empty = true;
    for (std::size_t x = 0; x < d.sizes[top] && empty; ++x) {
      bool inside = true;
      for (std::size_t i = 0; i <= k && inside; ++i)
        inside = constraints[i].subset.get(d.project(top, constraints[i].level, x));
      if (inside) empty = false;
    }
    if (empty) return EmptinessWitness{k, level};
  }
  return std::nullopt;
}

void check_commutes(const SeqDiagram& s, const SeqDiagram& t, const LevelwiseMap& f) {
  if (s.sizes.size() != t.sizes.size() || f.maps.size() != s.sizes.size())
    throw DimensionMismatch("levelwise map needs equally deep diagrams");
  for (std::size_t n = 0; n < f.maps.size(); ++n) {
    if (f.maps[n].size() != s.sizes[n]) throw DimensionMismatch("levelwise map is not total");
    for (auto y : f.maps[n])
      if (y >= t.sizes[n]) throw DimensionMismatch("levelwise map leaves its codomain");
  }
  for (std::size_t n = 0; n + 1 < f.maps.size(); ++n)
    for (std::size_t x = 0; x < s.sizes[n + 1]; ++x)
      if (t.transitions[n][f.maps[n + 1][x]] != f.maps[n][s.transitions[n][x]]) throw SquareNotCommuting(n);
}

LevelwiseFactorization levelwise_factor(const SeqDiagram& s, const SeqDiagram& t, const LevelwiseMap& f) {
  check_commutes(s, t, f);
  LevelwiseFactorization out;
  std::vector<std::vector<std::size_t>> position(f.maps.size());
  for (std::size_t n = 0; n < f.maps.size(); ++n) {
    std::vector<std::size_t> image = f.maps[n];
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    position[n].assign(t.sizes[n], t.sizes[n]);
    for (std::size_t i = 0; i < image.size(); ++i) position[n][image[i]] = i;

    std::vector<std::size_t> epi(f.maps[n].size());
    for (std::size_t x = 0; x < epi.size(); ++x) epi[x] = position[n][f.maps[n][x]];
    out.middle.sizes.push_back(image.size());
    if (!t.labels.empty()) {
      std::vector<std::string> labels;
      for (auto y : image) labels.push_back(t.labels[n][y]);
      out.middle.labels.push_back(std::move(labels));
    }
    out.epi.maps.push_back(std::move(epi));
    out.mono.maps.push_back(std::move(image));
  }
  for (std::size_t n = 0; n + 1 < f.maps.size(); ++n) {
    std::vector<std::size_t> trans;
    for (auto y : out.mono.maps[n + 1]) trans.push_back(position[n][t.transitions[n][y]]);
    out.middle.transitions.push_back(std::move(trans));
  }
  return out;
}

LlpoTower llpo_spectrum_tower(std::size_t depth, std::size_t cap) {
  LlpoTower out;
  std::vector<Presentation> products;
  std::vector<Presentation> sources;
  std::vector<FinBoolAlg> product_specs;
  std::vector<FinBoolAlg> source_specs;
  for (std::size_t n = 1; n <= depth; ++n) {
    const auto report = boolalg::llpo_split(n, cap);
    products.push_back(report.f.dst);
    sources.push_back(report.f.src);
    product_specs.push_back(report.product_spectrum);
    source_specs.push_back(report.source_spectrum);
    out.map.maps.push_back(report.analysis.point_map);
    out.source.sizes.push_back(report.product_spectrum.size());
    out.target.sizes.push_back(report.source_spectrum.size());
  }
  for (std::size_t i = 0; i + 1 < products.size(); ++i) {
    // Generators of the smaller level keep their names one level up.
    const auto up_prod = boolalg::hom(products[i], boolalg::identity(products[i]).images, products[i + 1], cap);
    out.source.transitions.push_back(boolalg::point_map(up_prod, product_specs[i], product_specs[i + 1]));
    const auto up_src = boolalg::hom(sources[i], boolalg::identity(sources[i]).images, sources[i + 1], cap);
    out.target.transitions.push_back(boolalg::point_map(up_src, source_specs[i], source_specs[i + 1]));
  }
  return out;
}

}  // namespace stonework::profinite
