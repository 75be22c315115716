#include <array>
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "stonework/error.hpp"

using namespace testing;
namespace sw = stonework;

TEST_CASE("binfty normal forms") {
  auto a = spectrum(binfty(2));
  CHECK(binfty_normal_form(ElementVec(3), 2) == NormalFormBInfty{NormalFormBInfty::Kind::Join, {}});

  auto not_g0 = binfty_normal_form(select(a, {"00", "01"}), 2);
  CHECK(not_g0 == NormalFormBInfty{NormalFormBInfty::Kind::MeetNeg, {0}});
  CHECK(evaluate(not_g0.to_term(), a) == evaluate(~g("g0"), a));

  auto join = binfty_normal_form(select(a, {"10", "01"}), 2);
  CHECK(join == NormalFormBInfty{NormalFormBInfty::Kind::Join, {0, 1}});
  CHECK(join.to_string() == "Join({0,1})");

  CHECK_THROWS_AS(binfty_normal_form(ElementVec(2), 2), sw::DimensionMismatch);
}

TEST_CASE("every element of binfty(n) has exactly one normal form") {
  for (std::size_t n = 0; n <= 6; ++n) {
    auto a = spectrum(binfty(n));
    std::set<std::string> forms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n + 1)); ++mask) {
      ElementVec v(n + 1);
      for (std::size_t i = 0; i <= n; ++i) v.set(i, (mask >> i) & 1U);
      auto nf = binfty_normal_form(v, n);
      CHECK((nf.kind == NormalFormBInfty::Kind::MeetNeg) == v[0]);
      CHECK(evaluate(nf.to_term(), a) == v);
      forms.insert(nf.to_string());
    }
    CHECK(forms.size() == (std::size_t{1} << (n + 1)));
  }
}

TEST_CASE("llpo split at stage 1") {
  auto r = llpo_split(1);
  CHECK(r.injective());
  CHECK(r.surjective());
  CHECK(r.product_spectrum.size() == 4);
  CHECK(r.source_spectrum.size() == 3);
  CHECK(r.all_ok());
}

TEST_CASE("llpo split at stage 3 and the decoding of a one-hot") {
  auto r = llpo_split(3);
  CHECK(r.injective());
  CHECK(r.all_ok());
  auto b3 = spectrum(binfty(3));
  bool seen = false;
  for (const auto& d : r.decode) {
    if (one_hot_index(r.source_spectrum, d.alpha) == std::optional<std::size_t>(1)) {
      CHECK(d.side == Side::Right);
      CHECK(one_hot_index(b3, d.beta) == std::optional<std::size_t>(0));
      seen = true;
    }
    if (!one_hot_index(r.source_spectrum, d.alpha)) CHECK(d.side == Side::Left);
  }
  CHECK(seen);
  CHECK_THROWS_AS(llpo_split(0), sw::OutOfRange);
}

TEST_CASE("llpo decode is a section of the spectrum surjection") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto r = llpo_split(n);
    CHECK(r.decode.size() == r.source_spectrum.size());
    for (const auto& d : r.decode) {
      CHECK(d.round_trip);
      CHECK(d.llpo_identity);
    }
  }
}

TEST_CASE("wlpo counterexamples") {
  auto a = wlpo_counterexample(g("g0") | g("g1"));
  CHECK(a.k == 1u);
  CHECK_FALSE(a.value_beta);
  CHECK_FALSE(a.value_gamma);
  CHECK(a.verdict == WlpoReport::Verdict::FailsOnGamma);
  CHECK(a.gamma == std::vector<bool>{false, false, true});

  auto b = wlpo_counterexample(Term::one());
  CHECK(b.value_beta);
  CHECK(b.verdict == WlpoReport::Verdict::FailsOnBeta);

  auto c = wlpo_counterexample(g("g0"));
  CHECK(c.k == 0u);
  CHECK(c.value_beta == c.value_gamma);
  CHECK(c.verdict == WlpoReport::Verdict::FailsOnGamma);

  CHECK_THROWS_AS(wlpo_counterexample(g("x")), sw::UnknownGenerator);
}

TEST_CASE("minimal_join_witness") {
  std::vector<Term> one{Term::one()};
  CHECK(minimal_join_witness(Presentation({}, {}), one, 5) == 0u);

  std::vector<Term> seq{g("g0"), ~g("g0"), Term::zero()};
  CHECK(minimal_join_witness(free_algebra({"g0"}), seq, 5) == 1u);

  std::vector<Term> zeros(11, Term::zero());
  CHECK_FALSE(minimal_join_witness(free_algebra({"g0"}), zeros, 10));
}

TEST_CASE("minimal_join_witness matches prefix-by-prefix brute force") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto gens = indexed_generators(1 + trial % 4);
    std::vector<Term> rels;
    for (int i = 0; i < 6; ++i) rels.push_back(oracle::random_term(rng, gens, 3));
    std::optional<std::size_t> expected;
    for (std::size_t k = 0; k < rels.size() && !expected; ++k) {
      std::vector<Term> prefix(rels.begin(), rels.begin() + static_cast<long>(k) + 1);
      if (oracle::spectrum(gens, prefix).empty()) expected = k;
    }
    CHECK(minimal_join_witness(free_algebra(gens), rels, 10) == expected);
  }
}

TEST_CASE("markov_index finds the first one") {
  CHECK(markov_index(std::array<bool, 4>{false, false, true, true}) == 2u);
  CHECK_FALSE(markov_index(std::array<bool, 2>{false, false}));
}

TEST_CASE("separate_closed") {
  auto p = free_algebra({"g0"});
  auto a = spectrum(p);
  std::vector<Term> fs{g("g0")}, gs{~g("g0")};
  auto s = separate_closed(p, fs, gs);
  CHECK(s.decider == select(a, {"0"}));

  std::vector<Term> everything{Term::zero()}, nothing{Term::one()};
  CHECK(separate_closed(p, everything, nothing).decider.all());

  CHECK_THROWS_AS(separate_closed(p, fs, fs), sw::NotDisjoint);
}

TEST_CASE("separation contains F and avoids G") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 200) {
    auto gens = indexed_generators(1 + rng() % 4);
    auto p = free_algebra(gens);
    auto a = spectrum(p);
    std::vector<Term> fs{oracle::random_term(rng, gens, 3)}, gs{oracle::random_term(rng, gens, 3), oracle::random_term(rng, gens, 3)};
    auto f = closed_set(a, fs);
    auto gset = closed_set(a, gs);
    if (!(f & gset).none()) continue;
    auto s = separate_closed(p, fs, gs);
    CHECK(f.is_subset_of(s.decider));
    CHECK((gset & s.decider).none());
    ++done;
  }
}
