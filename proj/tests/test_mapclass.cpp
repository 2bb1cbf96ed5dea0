#include <doctest.h>

#include <random>

#include "mcg/error.hpp"
#include "mcg/mapclass.hpp"
#include "mcg/surface.hpp"
#include "support.hpp"

using namespace mcg;

TEST_CASE("expression parsing") {
  const auto e = parse_expr("a3^-1 a2^-1 b a1^-1  y2 e^-1");
  REQUIRE(e.factors.size() == 6);
  CHECK(e.factors[0].name == "a3");
  CHECK(e.factors[0].exponent == -1);
  CHECK(e.factors[2].name == "b");
  CHECK(e.factors[4].name == "y2");
  CHECK(e.str() == "a3^-1 a2^-1 b a1^-1 y2 e^-1");
  CHECK(e.inverse().str() == "e y2^-1 a1 b^-1 a2 a3");
  CHECK(parse_expr("").factors.empty());
  try {
    parse_expr("a1 a2 z a1");
    FAIL("expected a parse error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::parse);
    CHECK(std::string(err.what()).find("token 3 (column 7)") != std::string::npos);
  }
  for (const char* bad : {"a0", "a", "b^2", "a1^-1^-1", "y3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_expr(bad), Error);
  }
}

TEST_CASE("evaluate: identity, inverse pairs, composition order") {
  const auto& eng = testing::engine(4);
  CHECK(eng.evaluate("") == Automorphism::identity(4));
  CHECK(eng.evaluate("a1 a1^-1") == Automorphism::identity(4));
  CHECK(eng.evaluate("b^-1 b") == Automorphism::identity(4));
  // Leftmost factor acts last.
  CHECK(eng.evaluate("a1 a2") == compose(eng.twist("a1"), eng.twist("a2")));
  const Word x = parse_word("x2", 4);
  CHECK(eng.evaluate("a1 a2").apply(x) == eng.twist("a1").apply(eng.twist("a2").apply(x)));
  CHECK_THROWS_AS(eng.evaluate("a4"), Error);
}

TEST_CASE("equal: braid, commutation and infinite order") {
  for (int g = 4; g <= 10; ++g) {
    const auto& eng = testing::engine(g);
    CHECK(eng.evaluate("a1 a2 a1") == eng.evaluate("a2 a1 a2"));
    CHECK(eng.evaluate("a1 a3") == eng.evaluate("a3 a1"));
    CHECK_FALSE(eng.evaluate("a1") == eng.evaluate("a1^-1"));
    CHECK_FALSE(eng.evaluate("a1") == eng.evaluate("a2"));
    if (g >= 5) CHECK(eng.evaluate("a4 b a4") == eng.evaluate("b a4 b"));
  }
}

TEST_CASE("apply_to_curve") {
  const auto& eng = testing::engine(5);
  const auto eps = CyclicWord(eng.registry().curve("epsilon").pi1_word);
  CHECK(eng.apply_to_curve(parse_expr(""), "epsilon") == eps);
  CHECK(eng.apply_to_curve(parse_expr("a1"), "alpha_3") ==
        CyclicWord(eng.registry().curve("alpha_3").pi1_word));
  CHECK_FALSE(eng.apply_to_curve(parse_expr("a2"), "alpha_3") ==
              CyclicWord(eng.registry().curve("alpha_3").pi1_word));
  CHECK_THROWS_AS(eng.apply_to_curve(parse_expr("a1"), "omega"), Error);
}

TEST_CASE("phi carries epsilon to zeta and conjugates e^-1 to f") {
  for (int g = 4; g <= 10; ++g) {
    CAPTURE(g);
    const auto rep = verify_key_conjugation(testing::engine(g));
    CHECK(rep.image_matches);
    CHECK(rep.twist_matches);
    CHECK(rep.diagnostic.empty());
    // The opposite sign does not hold.
    const auto& eng = testing::engine(g);
    const auto phi = key_conjugator();
    CHECK_FALSE(eng.twist("f") ==
                eng.evaluate(concat(concat(phi, parse_expr("e")), phi.inverse())));
  }
}

TEST_CASE("key conjugation detects zeta replaced by psi") {
  auto reg = testing::registry(6);
  auto zeta = reg.curve("zeta");
  const auto& psi = reg.curve("psi");
  zeta.pi1_word = psi.pi1_word;
  zeta.normal_coords = psi.normal_coords;
  reg.replace(zeta);
  const Engine eng(reg, testing::table(6), Handedness::strict);
  const auto rep = verify_key_conjugation(eng);
  CHECK_FALSE(rep.image_matches);
  CHECK(rep.diagnostic.find("zeta") != std::string::npos);
}

TEST_CASE("handedness: a flipped f is normalized or, in strict mode, reported") {
  auto reg = testing::registry(7);
  auto table = testing::table(7);
  reg.set_arrow("zeta", -reg.curve("zeta").arrow);
  table.flip("f");

  const Engine strict(reg, table, Handedness::strict);
  CHECK(strict.normalization_note().empty());
  const auto bad = verify_key_conjugation(strict);
  CHECK(bad.image_matches);
  CHECK_FALSE(bad.twist_matches);
  CHECK(bad.diagnostic.find("first differing generator x") != std::string::npos);

  const Engine fixed(reg, table, Handedness::normalize);
  CHECK_FALSE(fixed.normalization_note().empty());
  CHECK(verify_key_conjugation(fixed).ok());
  CHECK(fixed.registry().curve("zeta").arrow == testing::registry(7).curve("zeta").arrow);
  CHECK(run_invariant_suite(fixed, 3, 10).ok());
  CHECK(validate_registry(fixed.registry()).ok());
}

TEST_CASE("f certificate over a1..a{g-1}, b, e") {
  for (int g = 4; g <= 10; ++g) {
    CAPTURE(g);
    const auto certs = load_certificates(testing::data_dir() + "/certificates.txt", g);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].target == "f");
    const auto allowed = parse_allowed("a*,b,e", g);
    const auto res = check_certificate(testing::engine(g), certs[0], allowed);
    CHECK(res.holds);
  }
}

TEST_CASE("trivial, bogus and out-of-set certificates") {
  const auto& eng = testing::engine(5);
  const auto allowed = parse_allowed("a*,b,e", 5);
  CHECK(check_certificate(eng, {"a1", allowed, parse_expr("a1")}, allowed).holds);
  const auto bogus = check_certificate(eng, {"a1", allowed, parse_expr("a2")}, allowed);
  CHECK_FALSE(bogus.holds);
  CHECK(bogus.diagnostic.find("first differing generator") != std::string::npos);
  try {
    check_certificate(eng, {"f", allowed, parse_expr("f")}, allowed);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::validation);
  }
  CHECK(parse_allowed("a*,b,e", 5) == std::set<std::string>{"a1", "a2", "a3", "a4", "b", "e"});
  CHECK_THROWS_AS(parse_certificates("f | a*,b | a1 q", 5), Error);
  CHECK_THROWS_AS(parse_certificates("f | a*,b", 5), Error);
}

TEST_CASE("shipped twist tables match the registry and round-trip") {
  for (int g = 4; g <= 12; ++g) {
    CAPTURE(g);
    const auto shipped = testing::table(g);
    const auto derived = TwistTable::derive(testing::registry(g));
    CHECK(shipped.str() == derived.str());
    CHECK(TwistTable::parse(shipped.str(), g).str() == shipped.str());
  }
}

TEST_CASE("twist table parser errors") {
  CHECK_THROWS_AS(TwistTable::parse("twist a1 alpha_1 +1\n", 4), Error);  // no genus
  CHECK_THROWS_AS(TwistTable::parse("genus 5\n", 4), Error);
  CHECK_THROWS_AS(TwistTable::parse("genus 4\nx1 -> x1\n", 4), Error);
  CHECK_THROWS_AS(TwistTable::parse("genus 4\ntwist a1 alpha_1 +1\nx1 -> x1\n", 4), Error);
  auto text = testing::table(4).str();
  const auto pos = text.find("x1 -> ");
  text.insert(pos + 6, "x2 ");
  try {
    const Engine eng(testing::registry(4), TwistTable::parse(text, 4));
    FAIL("corrupted table accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::validation);
  }
}

TEST_CASE("invariant suite passes on shipped data") {
  for (int g = 4; g <= 10; ++g) {
    CAPTURE(g);
    const auto rep = run_invariant_suite(testing::engine(g), 17, 50);
    CAPTURE(rep.text("suite"));
    CHECK(rep.ok());
    CHECK(rep.checks > 100);
  }
}

TEST_CASE("invariant suite flags a table entry that disagrees with the registry") {
  auto table = testing::table(5);
  auto entry = table.entry("a2");
  entry.images = table.entry("a3").images;
  entry.inverse_images = table.entry("a3").inverse_images;
  table.replace(entry);
  const Engine eng(testing::registry(5), table, Handedness::strict);
  const auto rep = run_invariant_suite(eng, 1, 0);
  CHECK_FALSE(rep.ok());
  bool named = false;
  for (const auto& f : rep.failures) named |= f.rfind("a2:", 0) == 0;
  CHECK(named);
}

TEST_CASE("disjoint twists fix each other's curves") {
  const auto& eng = testing::engine(8);
  const auto& reg = eng.registry();
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 2; j <= 7; ++j) {
      const auto cj = "alpha_" + std::to_string(j);
      CHECK(eng.apply_to_curve(parse_expr("a" + std::to_string(i)), cj) ==
            CyclicWord(reg.curve(cj).pi1_word));
    }
  }
}

TEST_CASE("inverse soundness of random expressions") {
  const auto& eng = testing::engine(6);
  std::mt19937_64 rng(99);
  const auto names = generator_names(6);
  for (int k = 0; k < 50; ++k) {
    const auto expr = random_expr(rng, names, 6);
    const auto a = eng.evaluate(expr);
    CHECK(eng.inverse_sound(expr, a));
    CHECK(inverse_pair(a.images(), a.inverse_images()));
    CHECK(eng.evaluate(concat(expr, expr.inverse())) == Automorphism::identity(6));
  }
}
