#include <doctest.h>

#include "stonework/error.hpp"
#include "stonework/interval.hpp"

using namespace stonework::interval;
namespace sw = stonework;

namespace {

BitWord w(const char* s) { return BitWord::parse(s); }
Dyadic d(const char* s) { return Dyadic::parse(s); }

std::vector<BitWord> all_words(std::size_t n) {
  std::vector<BitWord> out;
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) out.push_back(BitWord::from_value(sw::Int(k), n));
  return out;
}

}  // namespace

TEST_CASE("dyadics normalize and compare exactly") {
  CHECK(Dyadic(sw::Int(4), 3) == Dyadic(sw::Int(1), 1));
  CHECK(Dyadic(sw::Int(4), 3).to_string() == "1/2^1");
  CHECK(Dyadic(sw::Int(0), 9).to_string() == "0/2^0");
  CHECK(d("3/2^2") < d("1/2^0"));
  CHECK(d("1/2^1") + d("1/2^2") == d("3/2^2"));
  CHECK(abs(d("1/2^3") - d("1/2^1")) == d("3/2^3"));
  CHECK(d("5/2**3") == d("5/2^3"));
  CHECK_THROWS_AS(d("1/3"), sw::OutOfRange);
}

TEST_CASE("cs_value") {
  CHECK(cs_value(BitWord()) == Dyadic::integer(0));
  CHECK(cs_value(w("101")) == d("5/2^3"));
  CHECK(cs_value(w("11")) == d("3/2^2"));
  CHECK(w("0101").value() == 5);
  CHECK_THROWS_AS(w("012"), sw::OutOfRange);
}

TEST_CASE("near") {
  CHECK(near(2, w("01"), w("10")));
  CHECK(near(3, w("101"), w("101")));
  CHECK_FALSE(near(2, w("00"), w("11")));
  CHECK_THROWS_AS(near(2, w("0"), w("10")), sw::DimensionMismatch);
}

TEST_CASE("near_companion") {
  auto u = near_companion_witness(2, w("01"), w("10"));
  REQUIRE(u);
  CHECK(u->size() == 0);
  CHECK(is_near_witness(2, w("01"), w("10"), *u));

  auto same = near_companion_witness(3, w("011"), w("011"));
  REQUIRE(same);
  CHECK(*same == w("011"));

  CHECK_FALSE(near_companion(2, w("00"), w("11")));
  CHECK_THROWS_AS(near_companion(3, w("00"), w("110")), sw::DimensionMismatch);
}

TEST_CASE("both nearness relations agree and match the metric") {
  for (std::size_t n = 0; n <= 6; ++n) {
    auto words = all_words(n);
    for (const auto& s : words) {
      for (const auto& t : words) {
        bool metric = abs(cs_value(s) - cs_value(t)) <= Dyadic::unit(n);
        CHECK(near(n, s, t) == metric);
        CHECK(near_companion(n, s, t) == metric);
      }
    }
  }
}

TEST_CASE("nearness is reflexive, symmetric and not transitive") {
  CHECK(near(2, w("00"), w("01")));
  CHECK(near(2, w("01"), w("10")));
  CHECK(near(2, w("10"), w("11")));
  CHECK_FALSE(near(2, w("00"), w("11")));
  CHECK_FALSE(near_companion(2, w("00"), w("10")));
  CHECK(near_companion(2, w("10"), w("01")));
}

TEST_CASE("interval and circle graphs") {
  CHECK(interval_graph(1).size() == 2);
  CHECK(interval_graph(1).pair_count() == 4);
  CHECK(interval_graph(2).pair_count() == 10);
  CHECK(circle_graph(2).pair_count() == 12);
  CHECK(circle_graph(1) == interval_graph(1));
  auto c3 = circle_graph(3);
  CHECK(c3.size() == 8);
  for (std::size_t v = 0; v < 8; ++v) CHECK(c3.neighbours(v).size() == 3);
  CHECK_THROWS_AS(interval_graph(5, 4), sw::CapExceeded);
  CHECK_THROWS_AS(circle_graph(5, 4), sw::CapExceeded);
}

TEST_CASE("restriction maps") {
  CHECK(restrict_graph_map(1) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK_THROWS_AS(restrict_graph_map(4, 4), sw::CapExceeded);
  for (std::size_t n = 0; n < 6; ++n) {
    auto phi = restrict_graph_map(n);
    CHECK(sw::profinite::preserves_relation(interval_graph(n + 1), interval_graph(n), phi));
    CHECK(sw::profinite::preserves_relation(circle_graph(n + 1), circle_graph(n), phi));
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) CHECK(phi[2 * k] == k);
  }
  interval_tower(6).validate();
  circle_tower(6).validate();
}

TEST_CASE("iterated restriction takes prefixes") {
  auto t = interval_tower(6);
  for (std::size_t x = 0; x < 64; ++x) {
    std::size_t y = x;
    for (std::size_t n = 6; n > 2; --n) y = t.transitions[n - 1][y];
    auto word = BitWord::from_value(sw::Int(x), 6);
    CHECK(BitWord::from_value(sw::Int(y), 2) == word.prefix(2));
  }
}

TEST_CASE("cylinder images") {
  auto parts = [](const IntervalUnion& u) { return u.parts(); };
  CHECK(parts(cylinder_image(BitWord())) == std::vector<Part>{{d("0"), d("1")}});
  CHECK(parts(cylinder_image(w("1"))) == std::vector<Part>{{d("1/2^1"), d("1")}});
  CHECK(parts(cylinder_image(w("01"))) == std::vector<Part>{{d("1/2^2"), d("1/2^1")}});
}

TEST_CASE("decidable images") {
  std::vector<BitWord> halves{w("0"), w("1")};
  CHECK(decidable_image(halves).parts() == std::vector<Part>{{d("0"), d("1")}});
  std::vector<BitWord> two{w("00"), w("10")};
  CHECK(decidable_image(two).parts() == std::vector<Part>{{d("0"), d("1/2^2")}, {d("1/2^1"), d("3/2^2")}});
  CHECK(decidable_image(std::vector<BitWord>{}).empty());
  for (std::size_t n = 0; n <= 6; ++n) {
    auto words = all_words(n);
    CHECK(decidable_image(words).parts() == std::vector<Part>{{d("0"), d("1")}});
  }
}

TEST_CASE("complements of closed unions") {
  auto whole = IntervalUnion(IntervalUnion::Kind::Closed, {{d("0"), d("1")}});
  CHECK(complement_closed_union(whole).empty());

  auto mid = IntervalUnion(IntervalUnion::Kind::Closed, {{d("1/2^2"), d("1/2^1")}});
  auto c = complement_closed_union(mid);
  CHECK(c.kind() == IntervalUnion::Kind::OpenInI);
  CHECK(c.parts() == std::vector<Part>{{d("0"), d("1/2^2")}, {d("1/2^1"), d("1")}});
  CHECK(c.contains(d("0")));
  CHECK(c.contains(d("1")));
  CHECK_FALSE(c.contains(d("1/2^2")));
  CHECK_FALSE(c.contains(d("3/2^3")));
  CHECK(c.to_string() == "[0/2^0, 1/2^2) u (1/2^1, 1/2^0]");

  auto none = complement_closed_union(IntervalUnion());
  CHECK(none.parts() == std::vector<Part>{{d("0"), d("1")}});
  CHECK(none.contains(d("0")));
  CHECK(none.contains(d("1")));

  CHECK(complement(c) == mid);
  auto edge = IntervalUnion(IntervalUnion::Kind::Closed, {{d("0"), d("1/2^3")}, {d("5/2^3"), d("5/2^3")}});
  CHECK(complement(complement(edge)) == edge);
}

TEST_CASE("cs fibers") {
  auto zero = cs_fiber(d("0"));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Expansion{BitWord(), false});

  auto half = cs_fiber(d("1/2^1"));
  REQUIRE(half.size() == 2);
  CHECK(half[0] == Expansion{w("1"), false});
  CHECK(half[1] == Expansion{w("0"), true});

  auto three_quarters = cs_fiber(d("3/2^2"));
  CHECK(three_quarters == std::vector<Expansion>{{w("11"), false}, {w("10"), true}});

  CHECK(cs_fiber(d("1")).size() == 1);
  CHECK_THROWS_AS(cs_fiber(d("3/2^1")), sw::OutOfRange);
  CHECK_THROWS_AS(cs_fiber(d("-1/2^1")), sw::OutOfRange);
}

TEST_CASE("fiber truncations stay near the dyadic") {
  for (std::size_t e = 0; e <= 5; ++e) {
    for (std::size_t k = 0; k <= (std::size_t{1} << e); ++k) {
      Dyadic x(sw::Int(k), e);
      auto fiber = cs_fiber(x);
      CHECK((fiber.size() == 1 || fiber.size() == 2));
      for (const auto& f : fiber) {
        for (std::size_t m = x.exp(); m <= x.exp() + 4; ++m) {
          sw::Int scaled = x.num() << (m - x.exp());
          sw::Int diff = f.truncate(m).value() - scaled;
          CHECK((diff >= -1 && diff <= 1));
        }
      }
    }
  }
}
