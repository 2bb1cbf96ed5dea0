#include <doctest.h>

#include <random>

#include "mcg/error.hpp"
#include "mcg/polygon.hpp"
#include "mcg/twist.hpp"
#include "support.hpp"

using namespace mcg;

namespace {

CrossingSequence seq(const char* w, int g) {
  return crossings_of(cyclic_reduce(parse_word(w, g)));
}

Word delta(int g) {
  std::vector<Letter> l;
  for (int i = 1; i <= g; ++i) l.insert(l.end(), {i, i});
  return Word(g, l);
}

}  // namespace

TEST_CASE("crossing sequences round-trip through words and text") {
  const auto s = seq("x1 x3 x4^-1 x3^-1", 4);
  CHECK(format_crossings(s) == "A1+,A3+,A4-,A3-");
  CHECK(parse_crossings("A1+,A3+,A4-,A3-", 4) == s);
  CHECK(word_of(s, 4).str() == "x1 x3 x4^-1 x3^-1");
  CHECK_THROWS_AS(parse_crossings("A5+", 4), Error);
  CHECK_THROWS_AS(parse_crossings("B1+", 4), Error);
  CHECK_THROWS_AS(parse_crossings("A1", 4), Error);
}

TEST_CASE("bigons with the arc system are adjacent opposite crossings") {
  CHECK(bigon_positions(parse_crossings("A1+,A2+", 4)).empty());
  CHECK_FALSE(bigon_positions(parse_crossings("A1+,A1-,A2+,A2+", 4)).empty());
  // Cyclic wrap-around.
  CHECK_FALSE(bigon_positions(parse_crossings("A1-,A2+,A2+,A1+", 4)).empty());
}

TEST_CASE("self-intersection of the chain curves and a non-simple loop") {
  for (const char* w : {"x1 x2", "x3 x4", "x1 x2 x3 x4", "x1 x1 x2 x2", "x1 x3",
                        "x1 x3 x4^-1 x3^-1", "x1 x2 x4^-1 x2^-1"}) {
    CAPTURE(w);
    const Realization r(5, {seq(w, 5)});
    CHECK(r.crossing_count(0, 0) == 0);
  }
  const Realization bad(4, {seq("x1 x2^-1", 4)});
  CHECK(bad.crossing_count(0, 0) > 0);
}

TEST_CASE("pairwise intersections in the chain") {
  const int g = 6;
  auto i = [&](const char* a, const char* b) {
    return Realization(g, {seq(a, g), seq(b, g)}).crossing_count(0, 1);
  };
  CHECK(i("x1 x2", "x2 x3") == 1);
  CHECK(i("x1 x2", "x3 x4") == 0);
  CHECK(i("x1 x2", "x5 x6") == 0);
  CHECK(i("x1 x2 x3 x4", "x4 x5") == 1);
  CHECK(i("x1 x2 x3 x4", "x3 x4") == 0);
  CHECK(i("x1 x2 x3 x4", "x1 x2") == 0);
}

TEST_CASE("twists fix the boundary word and their own curve") {
  const int g = 5;
  for (const char* w : {"x1 x2", "x4 x5", "x1 x2 x3 x4", "x1 x1 x2 x2", "x1 x3",
                        "x1 x3 x4^-1 x3^-1", "x1 x2 x4^-1 x2^-1"}) {
    for (int arrow : {1, -1}) {
      CAPTURE(w);
      const auto t = dehn_twist(g, seq(w, g), arrow);
      CHECK(t.apply(delta(g)) == delta(g));
      const Word c = parse_word(w, g);
      CHECK(CyclicWord(t.apply(c)) == CyclicWord(c));
      CHECK(t.inverse() == dehn_twist(g, seq(w, g), -arrow));
    }
  }
}

TEST_CASE("twist along a curve bounding a Moebius band is trivial") {
  // x_i x_i bounds the Moebius band around crosscap i.
  const auto t = dehn_twist(4, seq("x3 x3", 4), 1);
  CHECK(t == Automorphism::identity(4));
}

TEST_CASE("braid relation depends on compatible arrows") {
  const int g = 4;
  const auto a1 = dehn_twist(g, seq("x1 x2", g), 1);
  const auto a2 = dehn_twist(g, seq("x2 x3", g), 1);
  const auto a2r = dehn_twist(g, seq("x2 x3", g), -1);
  CHECK(compose(compose(a1, a2), a1) == compose(compose(a2, a1), a2));
  CHECK_FALSE(compose(compose(a1, a2r), a1) == compose(compose(a2r, a1), a2r));
}

TEST_CASE("dehn_twist rejects curves without a twist") {
  CHECK_THROWS_AS(dehn_twist(4, seq("x1", 4), 1), Error);               // one-sided
  CHECK_THROWS_AS(dehn_twist(4, seq("x1 x2^-1", 4), 1), Error);         // not simple
  CHECK_THROWS_AS(dehn_twist(4, parse_crossings("A1+,A1-,A2+,A2+", 4), 1), Error);
  CHECK_THROWS_AS(dehn_twist(4, seq("x1 x2", 4), 0), Error);
}
