#include <algorithm>

#include "smith.hpp"
#include "stonework/error.hpp"
#include "stonework/interval.hpp"
#include "stonework/zhomology.hpp"

namespace stonework::zhomology {

namespace {

std::string shape(const IntMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

std::vector<Int> torsion_of(const std::vector<Int>& factors) {
  std::vector<Int> out;
  for (const Int& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

}  // namespace

ChainComplexZ::ChainComplexZ(std::optional<IntMatrix> aug, IntMatrix d0, IntMatrix d1, Labels labels)
    : aug_(std::move(aug)), d0_(std::move(d0)), d1_(std::move(d1)), labels_(std::move(labels)) {
  if (d1_.cols() != d0_.rows()) throw DimensionMismatch("d1 is " + shape(d1_) + " but d0 is " + shape(d0_));
  if (aug_ && aug_->rows() != d0_.cols())
    throw DimensionMismatch("aug is " + shape(*aug_) + " but d0 is " + shape(d0_));
  if (!(d1_ * d0_).is_zero()) throw InvariantViolated("d1 * d0 is nonzero");
  if (aug_ && !(d0_ * *aug_).is_zero()) throw InvariantViolated("d0 * aug is nonzero");
}

bool Homology::all_exact() const {
  return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

Homology homology(const ChainComplexZ& c) {
  auto [c0, c1, c2] = c.dims();
  (void)c2;
  std::vector<Int> f0 = invariant_factors(c.d0());
  std::size_t rank0 = f0.size();
  std::size_t rank1 = rank(c.d1());

  Homology h;
  h.h0 = AbInvariants{c0 - rank0, {}};
  h.h1 = AbInvariants{c1 - rank1 - rank0, torsion_of(f0)};
  if (c.aug()) {
    std::vector<Int> fa = invariant_factors(*c.aug());
    h.h0_reduced = AbInvariants{c0 - rank0 - fa.size(), torsion_of(fa)};
    h.exact = {fa.size() == c.aug()->cols(), h.h0_reduced->trivial(), h.h1.trivial()};
    if (!h.h0_reduced->torsion.empty()) h.warnings.push_back("reduced h0 has torsion " + h.h0_reduced->to_string());
  } else {
    h.exact = {rank0 == c0, h.h1.trivial()};
  }
  if (!h.h1.torsion.empty()) h.warnings.push_back("h1 has torsion " + h.h1.to_string());
  return h;
}

ChainComplexZ cech_complex(const FiniteCover& cov) {
  // Degree p block of x: tuples in T_x^(p+1), times the coefficient index.
  std::array<std::vector<std::size_t>, 3> offset;
  std::array<std::size_t, 3> total{};
  std::vector<std::size_t> coeff(cov.fibers.size());
  for (std::size_t x = 0; x < cov.fibers.size(); ++x) {
    std::size_t t = cov.fibers[x];
    coeff[x] = cov.coefficients == Coefficients::TrivialZ ? 1 : t;
    std::size_t block = coeff[x];
    for (std::size_t p = 0; p < 3; ++p) {
      block *= t;
      offset[p].push_back(total[p]);
      total[p] += block;
    }
  }
  auto index = [&](std::size_t p, std::size_t x, std::initializer_list<std::size_t> tuple, std::size_t k) {
    std::size_t pos = 0;
    for (std::size_t v : tuple) pos = pos * cov.fibers[x] + v;
    return offset[p][x] + pos * coeff[x] + k;
  };

  IntMatrix d0(total[1], total[0]);
  IntMatrix d1(total[2], total[1]);
  ChainComplexZ::Labels labels;
  for (std::size_t p = 0; p < 3; ++p) labels[p].resize(total[p]);
  for (std::size_t x = 0; x < cov.fibers.size(); ++x) {
    std::size_t t = cov.fibers[x];
    std::string px = "x" + std::to_string(x) + ":";
    for (std::size_t k = 0; k < coeff[x]; ++k) {
      std::string ck = cov.coefficients == Coefficients::TrivialZ ? "" : "[" + std::to_string(k) + "]";
      for (std::size_t u = 0; u < t; ++u) {
        labels[0][index(0, x, {u}, k)] = px + "(" + std::to_string(u) + ")" + ck;
        for (std::size_t v = 0; v < t; ++v) {
          std::size_t row = index(1, x, {u, v}, k);
          labels[1][row] = px + "(" + std::to_string(u) + "," + std::to_string(v) + ")" + ck;
          d0.add(row, index(0, x, {v}, k), 1);
          d0.add(row, index(0, x, {u}, k), -1);
          for (std::size_t w = 0; w < t; ++w) {
            std::size_t r2 = index(2, x, {u, v, w}, k);
            labels[2][r2] = px + "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")" + ck;
            d1.add(r2, index(1, x, {v, w}, k), 1);
            d1.add(r2, index(1, x, {u, w}, k), -1);
            d1.add(r2, index(1, x, {u, v}, k), 1);
          }
        }
      }
    }
  }
  return ChainComplexZ(std::nullopt, std::move(d0), std::move(d1), std::move(labels));
}

std::size_t GraphCech::pair_index(std::size_t u, std::size_t v) const {
  auto it = pair_pos_.find(Pair{u, v});
  if (it == pair_pos_.end())
    throw RelationNotPreserved("(" + std::to_string(u) + "," + std::to_string(v) + ") is not a related pair");
  return it->second;
}

std::size_t GraphCech::triple_index(std::size_t u, std::size_t v, std::size_t w) const {
  auto it = triple_pos_.find(Triple{u, v, w});
  if (it == triple_pos_.end())
    throw RelationNotPreserved("(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) +
                               ") is not a related triple");
  return it->second;
}

std::array<std::size_t, 4> GraphCech::dims() const {
  auto d = complex.dims();
  return {1, d[0], d[1], d[2]};
}

GraphCech graph_cech_complex(const profinite::RelGraph& g) {
  GraphCech out;
  std::size_t n = g.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : g.neighbours(u)) {
      out.pair_pos_.emplace(Pair{u, v}, out.pairs.size());
      out.pairs.push_back({u, v});
      for (std::size_t w : g.neighbours(v)) {
        if (!g.related(u, w)) continue;
        out.triples.push_back({u, v, w});
      }
    }
  }
  std::sort(out.triples.begin(), out.triples.end());
  for (std::size_t i = 0; i < out.triples.size(); ++i) out.triple_pos_.emplace(out.triples[i], i);

  IntMatrix aug(n, 1);
  for (std::size_t u = 0; u < n; ++u) aug.set(u, 0, 1);
  IntMatrix d0(out.pairs.size(), n);
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    auto [u, v] = out.pairs[i];
    d0.add(i, v, 1);
    d0.add(i, u, -1);
  }
  IntMatrix d1(out.triples.size(), out.pairs.size());
  for (std::size_t i = 0; i < out.triples.size(); ++i) {
    auto [u, v, w] = out.triples[i];
    d1.add(i, out.pair_index(v, w), 1);
    d1.add(i, out.pair_index(u, w), -1);
    d1.add(i, out.pair_index(u, v), 1);
  }

  ChainComplexZ::Labels labels;
  for (std::size_t u = 0; u < n; ++u) labels[0].push_back(std::to_string(u));
  for (auto [u, v] : out.pairs) labels[1].push_back(std::to_string(u) + "~" + std::to_string(v));
  for (auto [u, v, w] : out.triples)
    labels[2].push_back(std::to_string(u) + "~" + std::to_string(v) + "~" + std::to_string(w));
  out.complex = ChainComplexZ(std::move(aug), std::move(d0), std::move(d1), std::move(labels));
  return out;
}

namespace {

CohomologyResult graph_cohomology(const profinite::RelGraph& g, std::size_t n) {
  GraphCech c = graph_cech_complex(g);
  return CohomologyResult{n, c.dims(), homology(c.complex)};
}

}  // namespace

CohomologyResult interval_cohomology(std::size_t n, std::size_t cap) {
  CohomologyResult r = graph_cohomology(interval::interval_graph(n, cap), n);
  if (!r.homology.all_exact())
    throw InvariantViolated("augmented interval complex at level " + std::to_string(n) + " is not exact");
  return r;
}

CohomologyResult circle_cohomology(std::size_t n, std::size_t cap) {
  return graph_cohomology(interval::circle_graph(n, cap), n);
}

CochainMap induced_cochain_map(const GraphCech& from, const GraphCech& to, std::span<const std::size_t> phi) {
  std::size_t n_from = from.complex.dims()[0];
  std::size_t n_to = to.complex.dims()[0];
  if (phi.size() != n_from)
    throw DimensionMismatch("vertex map has " + std::to_string(phi.size()) + " entries for " +
                            std::to_string(n_from) + " vertices");
  for (std::size_t k : phi)
    if (k >= n_to) throw DimensionMismatch("vertex map leaves the target graph");

  CochainMap f;
  f.f0 = IntMatrix(n_from, n_to);
  for (std::size_t k = 0; k < n_from; ++k) f.f0.set(k, phi[k], 1);
  f.f1 = IntMatrix(from.pairs.size(), to.pairs.size());
  for (std::size_t i = 0; i < from.pairs.size(); ++i) {
    auto [u, v] = from.pairs[i];
    f.f1.set(i, to.pair_index(phi[u], phi[v]), 1);
  }
  f.f2 = IntMatrix(from.triples.size(), to.triples.size());
  for (std::size_t i = 0; i < from.triples.size(); ++i) {
    auto [u, v, w] = from.triples[i];
    f.f2.set(i, to.triple_index(phi[u], phi[v], phi[w]), 1);
  }
  return f;
}

bool commutes(const CochainMap& f, const GraphCech& from, const GraphCech& to) {
  const ChainComplexZ& a = from.complex;
  const ChainComplexZ& b = to.complex;
  if (a.d0() * f.f0 != f.f1 * b.d0()) return false;
  if (a.d1() * f.f1 != f.f2 * b.d1()) return false;
  return f.f0 * *b.aug() == *a.aug();
}

CochainMap compose(const CochainMap& after, const CochainMap& before) {
  return CochainMap{before.f0 * after.f0, before.f1 * after.f1, before.f2 * after.f2};
}

namespace {

bool unimodular_full(const IntMatrix& m, std::size_t expected_rank) {
  auto f = invariant_factors(m);
  return f.size() == expected_rank && std::all_of(f.begin(), f.end(), [](const Int& x) { return x == 1; });
}

Int factor_product(const std::vector<Int>& f) {
  Int p = 1;
  for (const Int& x : f) p *= x;
  return p;
}

}  // namespace

InducedIso induced_isomorphisms(const ChainComplexZ& source, const ChainComplexZ& target, const CochainMap& f) {
  InducedIso iso;

  SmithForm s0 = detail::smith(source.d0(), false, true, false);
  SmithForm t0 = detail::smith(target.d0(), false, true, false);
  IntMatrix z0 = detail::kernel_basis(s0);
  IntMatrix k0 = detail::kernel_coordinates(t0);
  iso.h0 = z0.cols() == k0.rows() && unimodular_full(k0 * f.f0 * z0, z0.cols());

  SmithForm s1 = detail::smith(source.d1(), false, true, false);
  SmithForm t1 = detail::smith(target.d1(), false, true, false);
  IntMatrix z1 = detail::kernel_basis(s1);
  IntMatrix x = detail::kernel_coordinates(s1) * source.d0();
  IntMatrix x_target = detail::kernel_coordinates(t1) * target.d0();
  IntMatrix y = detail::kernel_coordinates(t1) * f.f1 * z1;

  // Onto: Z1' = im Y + im X'.
  IntMatrix w = IntMatrix::hstack(y, x_target);
  bool onto = unimodular_full(w, w.rows());

  // Into: Y^-1(im X') = im X.
  SmithForm sw = detail::smith(w, false, true, false);
  IntMatrix preimage = detail::kernel_basis(sw).row_slice(0, z1.cols());
  auto fp = invariant_factors(preimage);
  auto fx = invariant_factors(x);
  bool into = fp.size() == fx.size() && factor_product(fp) == factor_product(fx);

  iso.h1 = onto && into;
  return iso;
}

StabilizationReport stabilization_report(const profinite::RelGraphTower& tower, std::size_t depth) {
  if (depth >= tower.levels.size())
    throw OutOfRange("depth " + std::to_string(depth) + " exceeds tower with " +
                     std::to_string(tower.levels.size()) + " levels");
  tower.validate();
  StabilizationReport report;
  std::vector<GraphCech> complexes;
  for (std::size_t n = 0; n <= depth; ++n) {
    complexes.push_back(graph_cech_complex(tower.levels[n]));
    report.levels.push_back(CohomologyResult{n, complexes.back().dims(), homology(complexes.back().complex)});
  }
  for (std::size_t n = 0; n < depth; ++n) {
    CochainMap f = induced_cochain_map(complexes[n + 1], complexes[n], tower.transitions[n]);
    report.transitions.push_back(induced_isomorphisms(complexes[n].complex, complexes[n + 1].complex, f));
  }
  return report;
}

}  // namespace stonework::zhomology
