#include <doctest.h>

#include "mcg/complement.hpp"
#include "mcg/error.hpp"
#include "support.hpp"

using namespace mcg;

namespace {

std::vector<std::string> x0_without(int g, const std::string& drop) {
  auto names = parse_curve_set("X0", g);
  names.erase(std::find(names.begin(), names.end(), drop));
  return names;
}

}  // namespace

TEST_CASE("uncut surface") {
  for (int g = 2; g <= 8; ++g) {
    for (int n : {0, 1}) {
      const auto rep = cut_along(testing::registry(g, n), {});
      REQUIRE(rep.components.size() == 1);
      const auto& c = rep.components[0];
      CHECK(c.euler_characteristic == 2 - g - n);
      CHECK(c.boundary_circles == n);
      CHECK_FALSE(c.orientable);
      CHECK_FALSE(c.is_disk);
    }
  }
}

TEST_CASE("cutting a single curve") {
  // Cutting N_{g,n} along a two-sided curve removes no Euler characteristic
  // and adds two boundary circles.
  for (const char* name : {"alpha_1", "beta", "epsilon", "zeta", "psi", "gamma"}) {
    CAPTURE(name);
    const auto rep = cut_along(testing::registry(5, 1), {name});
    CHECK(rep.euler_sum() == -4);
    int boundaries = 0;
    for (const auto& c : rep.components) boundaries += c.boundary_circles;
    CHECK(boundaries == 3);
  }
  // psi separates off a Klein bottle with one hole.
  const auto rep = cut_along(testing::registry(5, 1), {"psi"});
  REQUIRE(rep.components.size() == 2);
}

TEST_CASE("Euler characteristics add up once double points are counted") {
  for (int g = 4; g <= 7; ++g) {
    for (int n : {0, 1}) {
      const auto reg = testing::registry(g, n);
      for (const auto& names : {parse_curve_set("X0", g),
                                parse_curve_set("alpha1..alpha" + std::to_string(g - 1), g),
                                std::vector<std::string>{"alpha_1", "alpha_3"}}) {
        const auto rep = cut_along(reg, names);
        CHECK(rep.euler_sum() == 2 - g - n + rep.double_points);
      }
    }
  }
}

TEST_CASE("disjoint curve sets preserve chi") {
  for (int g = 4; g <= 8; ++g) {
    for (int n : {0, 1}) {
      std::vector<std::string> odd;
      for (int i = 1; i <= g - 1; i += 2) odd.push_back("alpha_" + std::to_string(i));
      const auto rep = cut_along(testing::registry(g, n), odd);
      CHECK(rep.double_points == 0);
      CHECK(rep.euler_sum() == 2 - g - n);
    }
  }
}

TEST_CASE("component count is monotone in the curve set") {
  const auto reg = testing::registry(6, 0);
  std::vector<std::string> names;
  std::size_t last = cut_along(reg, names).components.size();
  for (const auto& n : parse_curve_set("X0", 6)) {
    names.push_back(n);
    const auto count = cut_along(reg, names).components.size();
    CHECK(count >= last);
    last = count;
  }
}

TEST_CASE("the chain's complement is not a union of disks") {
  for (int g = 4; g <= 7; ++g) {
    for (int n : {0, 1}) {
      const auto names = parse_curve_set("alpha1..alpha" + std::to_string(g - 1), g);
      CHECK(cut_along(testing::registry(g, n), names).has_non_disk());
    }
  }
  // For odd g on the closed surface the rest is a Moebius band.
  const auto rep = cut_along(testing::registry(5, 0), parse_curve_set("alpha1..alpha4", 5));
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].euler_characteristic == 0);
  CHECK(rep.components[0].boundary_circles == 1);
  CHECK_FALSE(rep.components[0].orientable);
}

TEST_CASE("X0 fills the closed surface; dropping alpha_k (k >= 4) or epsilon does not") {
  for (int g = 4; g <= 7; ++g) {
    const auto reg0 = testing::registry(g, 0);
    CHECK_FALSE(cut_along(reg0, parse_curve_set("X0", g)).has_non_disk());
    for (int n : {0, 1}) {
      const auto reg = testing::registry(g, n);
      std::vector<std::string> drops{"epsilon"};
      for (int k = 4; k <= g - 1; ++k) drops.push_back("alpha_" + std::to_string(k));
      for (const auto& d : drops) {
        CAPTURE(d);
        const auto rep = cut_along(reg, x0_without(g, d));
        CHECK(rep.has_non_disk());
        if (n == 1) {
          // The non-disk part is more than a collar of the boundary.
          bool beyond_collar = false;
          for (const auto& c : rep.components)
            beyond_collar |= !c.is_disk && (!c.peripheral || c.euler_characteristic < 0);
          CHECK(beyond_collar);
        }
      }
    }
  }
}

TEST_CASE("with one boundary circle, X0 leaves disks plus a boundary collar") {
  for (int g = 4; g <= 7; ++g) {
    const auto rep = cut_along(testing::registry(g, 1), parse_curve_set("X0", g));
    for (const auto& c : rep.components) {
      if (c.peripheral) {
        CHECK(c.euler_characteristic == 0);
        CHECK(c.boundary_circles == 2);
        CHECK(c.orientable);
      } else {
        CHECK(c.is_disk);
      }
    }
  }
}

TEST_CASE("report formats") {
  const auto rep = cut_along(testing::registry(4, 0), {});
  CHECK(rep.structured() == "chi=-2 boundaries=0 orientable=0 disk=0\n");
  CHECK(rep.table().find("N_{4,0}") != std::string::npos);
  CHECK_THROWS_AS(cut_along(testing::registry(4, 0), {"omega"}), Error);
}

TEST_CASE("intersection numbers by name") {
  const auto reg = testing::registry(5);
  CHECK(intersection_number(reg, "alpha_1", "alpha_2") == 1);
  CHECK(intersection_number(reg, "alpha_1", "alpha_3") == 0);
  CHECK(intersection_number(reg, "beta", "alpha_4") == 1);
  CHECK(intersection_number(reg, "alpha_4", "beta") == 1);
  CHECK_THROWS_AS(intersection_number(reg, "alpha_1", "omega"), Error);
}
