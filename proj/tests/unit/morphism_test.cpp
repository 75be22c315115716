#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "stonework/error.hpp"

using namespace testing;
namespace sw = stonework;

TEST_CASE("hom") {
  auto p = binfty(2);
  auto id = identity(p);
  CHECK(id.images == std::vector<Term>{g("g0"), g("g1")});

  auto b1 = binfty(1);
  auto prod = product(b1, b1);
  auto f = hom(p, {pair_term(b1, g("g0"), b1, Term::zero()), pair_term(b1, Term::zero(), b1, g("g0"))}, prod);
  CHECK(f.images.size() == 2);

  Presentation src({"g0", "g1"}, {g("g0") & g("g1")});
  try {
    hom(src, {Term::one(), Term::one()}, free_algebra({"h"}));
    FAIL("expected RelationNotKilled");
  } catch (const sw::RelationNotKilled& e) {
    CHECK(e.index() == 0);
  }
}

TEST_CASE("analyze_morphism on the identity") {
  auto r = analyze_morphism(identity(free_algebra({"g0", "g1"})));
  CHECK(r.injective);
  CHECK(r.point_map_surjective);
  CHECK(r.point_map == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(r.axiom2_consistent);
}

TEST_CASE("analyze_morphism on the inclusion of 2") {
  auto r = analyze_morphism(hom(Presentation({}, {}), {}, free_algebra({"g0"})));
  CHECK(r.injective);
  CHECK(r.point_map == std::vector<std::size_t>{0, 0});
  CHECK(r.point_map_surjective);
  CHECK(r.axiom2_consistent);
}

TEST_CASE("analyze_morphism on a quotient") {
  auto m = hom(free_algebra({"g0"}), {g("g0")}, Presentation({"g0"}, {g("g0")}));
  auto r = analyze_morphism(m);
  CHECK_FALSE(r.injective);
  CHECK(r.kernel_log2_size == 1);
  REQUIRE(r.kernel_elements.size() == 2);
  auto src = spectrum(m.src);
  CHECK(r.kernel_elements[0] == evaluate(Term::zero(), src));
  CHECK(r.kernel_elements[1] == evaluate(g("g0"), src));
  CHECK(r.point_map.size() == 1);
  CHECK_FALSE(r.point_map_surjective);
  CHECK(r.axiom2_consistent);
}

TEST_CASE("epi_mono_factor of the identity") {
  auto p = binfty(2);
  auto f = epi_mono_factor(identity(p));
  CHECK(f.middle.size() == 3);
  CHECK(f.epi.images == identity(p).images);
  CHECK(f.mono.images == identity(p).images);
}

TEST_CASE("epi_mono_factor of a diagonal") {
  auto m = hom(free_algebra({"g0", "g1"}), {g("g0"), g("g0")}, free_algebra({"g0"}));
  auto f = epi_mono_factor(m);
  CHECK(point_strings(f.middle) == std::vector<std::string>{"00", "11"});
  CHECK(analyze_morphism(f.mono).injective);
  CHECK(analyze_morphism(f.epi).point_map_surjective == false);
}

TEST_CASE("epi_mono_factor of the zero map") {
  auto m = hom(free_algebra({"g0"}), {Term::zero()}, Presentation({}, {}));
  auto f = epi_mono_factor(m);
  CHECK(point_strings(f.middle) == std::vector<std::string>{"0"});
}

namespace {

// A random morphism between small algebras: images are random terms, and
// the source relations are chosen among terms killed by those images.
Morphism random_morphism(std::mt19937_64& rng) {
  auto src_gens = indexed_generators(std::uniform_int_distribution<std::size_t>(0, 4)(rng), "a");
  auto dst_gens = indexed_generators(std::uniform_int_distribution<std::size_t>(0, 4)(rng), "b");
  std::vector<Term> dst_rels;
  if (!dst_gens.empty() && rng() % 2) dst_rels.push_back(oracle::random_term(rng, dst_gens, 2));
  Presentation dst(dst_gens, dst_rels);
  std::vector<Term> images;
  std::map<std::string, Term> sub;
  for (const auto& s : src_gens) {
    images.push_back(oracle::random_term(rng, dst_gens, 3));
    sub[s] = images.back();
  }
  auto dst_spec = spectrum(dst);
  std::vector<Term> src_rels;
  for (int tries = 0; tries < 6 && src_rels.size() < 2; ++tries) {
    Term r = oracle::random_term(rng, src_gens, 3);
    if (evaluate(r.substitute(sub), dst_spec).none()) src_rels.push_back(r);
  }
  return hom(Presentation(src_gens, src_rels), images, dst);
}

}  // namespace

TEST_CASE("injectivity matches point-map surjectivity and the factorization composes") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Morphism m = random_morphism(rng);
    auto r = analyze_morphism(m);
    CHECK(r.axiom2_consistent);

    // Injectivity by brute force over all element pairs of the source.
    auto src = spectrum(m.src);
    auto dst = spectrum(m.dst);
    bool injective = true;
    for (std::size_t i = 0; i < src.size(); ++i)
      if (evaluate(m.apply(minterm(src, i)), dst).none()) injective = false;
    CHECK(injective == r.injective);

    auto f = epi_mono_factor(m);
    auto epi_points = point_map(f.epi, src, f.middle);
    auto mono_points = point_map(f.mono, f.middle, dst);
    std::set<std::size_t> seen(epi_points.begin(), epi_points.end());
    CHECK(seen.size() == epi_points.size());
    CHECK(std::set<std::size_t>(mono_points.begin(), mono_points.end()).size() == f.middle.size());
    for (std::size_t j = 0; j < dst.size(); ++j) CHECK(epi_points[mono_points[j]] == r.point_map[j]);
  }
}
