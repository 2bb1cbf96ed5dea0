#include <doctest.h>

#include <random>

#include "mcg/error.hpp"
#include "mcg/homology.hpp"
#include "support.hpp"

using namespace mcg;

TEST_CASE("identity and inverse pairs") {
  CHECK(abelianize(Automorphism::identity(4)) == HomologyMatrix::identity(4));
  CHECK(mod2(HomologyMatrix::identity(4)) == Mod2Matrix::identity(4));
  const auto& eng = testing::engine(4);
  CHECK(abelianize(eng.twist("a1")) * abelianize(eng.twist("a1").inverse()) ==
        HomologyMatrix::identity(4));
}

TEST_CASE("determinants") {
  HomologyMatrix m(3);
  const int v[3][3] = {{2, 1, 3}, {1, 1, 2}, {0, 0, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.set(r, c, v[r][c]);
  CHECK(m.determinant() == 1);
  HomologyMatrix p(3);
  p.set(0, 1, 1);
  p.set(1, 0, 1);
  p.set(2, 2, 1);
  CHECK(p.determinant() == -1);
  HomologyMatrix z(2);
  z.set(0, 0, 1);
  z.set(1, 0, 2);
  CHECK(z.determinant() == 0);
  for (int g = 4; g <= 10; ++g) {
    for (const auto& e : testing::engine(g).table().entries()) {
      const auto d = abelianize(testing::engine(g).twist(e.generator)).determinant();
      CHECK((d == 1 || d == -1));
    }
  }
}

TEST_CASE("overflow is reported, not wrapped") {
  HomologyMatrix m(2);
  m.set(0, 0, std::int64_t{1} << 40);
  m.set(1, 1, std::int64_t{1} << 40);
  CHECK_THROWS_AS(m * m, Error);
}

TEST_CASE("abelianization is functorial") {
  const auto& eng = testing::engine(5);
  const auto names = generator_names(5);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto p = random_expr(rng, names, 4);
    const auto q = random_expr(rng, names, 4);
    const auto mp = abelianize(eng.evaluate(p));
    const auto mq = abelianize(eng.evaluate(q));
    CHECK(mp * mq == abelianize(eng.evaluate(concat(p, q))));
    CHECK(mod2(mp) * mod2(mq) == mod2(mp * mq));
  }
}

TEST_CASE("twists act mod 2 as involutive transvections") {
  for (int g = 4; g <= 8; ++g) {
    const auto& eng = testing::engine(g);
    for (const auto& e : eng.table().entries()) {
      CAPTURE(e.generator);
      const auto m = mod2(abelianize(eng.twist(e.generator)));
      CHECK(m * m == Mod2Matrix::identity(g));
      const auto v = mod2_class(eng.registry().curve(e.curve).pi1_word);
      CHECK(m == mod2_transvection(v));
    }
  }
}

TEST_CASE("f agrees with its certificate in homology, phi transports classes") {
  for (int g = 4; g <= 10; ++g) {
    const auto& eng = testing::engine(g);
    const auto rhs = eng.evaluate(
        "a3^-1 a2^-1 b a1^-1 a2^-1 a3^-1 e^-1 a3 a2 a1 b^-1 a2 a3");
    CHECK(abelianize(rhs) == abelianize(eng.twist("f")));
    const auto phi = mod2(abelianize(eng.evaluate(key_conjugator())));
    CHECK(phi.apply(mod2_class(eng.registry().curve("epsilon").pi1_word)) ==
          mod2_class(eng.registry().curve("zeta").pi1_word));
  }
}

TEST_CASE("text forms") {
  const auto m = HomologyMatrix::identity(2);
  CHECK(m.text() == "1 0\n0 1\n");
  CHECK(m.line() == "2; 1,0;0,1");
}
