#include <doctest.h>

#include <string>

#include "mcg/mcg.h"

namespace {

struct Ctx {
  explicit Ctx(int g, int n = 1, const char* table = nullptr, int strict = 0) {
    mcg_config cfg{};
    cfg.genus = g;
    cfg.boundary = n;
    cfg.data_dir = MCG_TEST_DATA_DIR;
    cfg.twist_table = table;
    cfg.strict_handedness = strict;
    status = mcg_context_create(&cfg, &ctx);
  }
  ~Ctx() { mcg_context_destroy(ctx); }
  mcg_context* ctx = nullptr;
  mcg_status status;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  mcg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("context lifecycle") {
  Ctx c(4);
  REQUIRE(c.status == MCG_OK);
  REQUIRE(c.ctx != nullptr);
  mcg_context_destroy(nullptr);

  Ctx bad(1);
  CHECK(bad.status == MCG_ERR_PRECONDITION);
  CHECK(bad.ctx == nullptr);
  CHECK(std::string(mcg_last_error(nullptr)).size() > 0);

  CHECK(mcg_context_create(nullptr, nullptr) == MCG_ERR_ARGUMENT);
}

TEST_CASE("verify theorem") {
  Ctx c(4);
  int passed = 0;
  char* report = nullptr;
  REQUIRE(mcg_verify_theorem(c.ctx, 20240521, MCG_FORMAT_STRUCTURED, &passed, &report) ==
          MCG_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("result=PASS") != std::string::npos);
}

TEST_CASE("relations") {
  Ctx c(4);
  int equal = 0;
  char* report = nullptr;
  REQUIRE(mcg_relation(c.ctx, "a1 a2 a1", "a2 a1 a2", MCG_FORMAT_TEXT, &equal, &report) ==
          MCG_OK);
  CHECK(equal == 1);
  CHECK(take(report) == "EQUAL\n");
  REQUIRE(mcg_relation(c.ctx, "a1 a2", "a2 a1", MCG_FORMAT_STRUCTURED, &equal, &report) ==
          MCG_OK);
  CHECK(equal == 0);
  CHECK(take(report).rfind("result=UNEQUAL first_difference=x", 0) == 0);
  REQUIRE(mcg_relation(c.ctx, "f",
                       "a3^-1 a2^-1 b a1^-1 a2^-1 a3^-1 e^-1 a3 a2 a1 b^-1 a2 a3",
                       MCG_FORMAT_TEXT, &equal, &report) == MCG_OK);
  CHECK(equal == 1);
  take(report);
}

TEST_CASE("error codes and messages") {
  Ctx c(4);
  int equal = 0;
  char* report = nullptr;
  CHECK(mcg_relation(c.ctx, "a1 a2 a1^", "a1", MCG_FORMAT_TEXT, &equal, &report) ==
        MCG_ERR_PARSE);
  CHECK(std::string(mcg_last_error(c.ctx)).find("token 3") != std::string::npos);
  CHECK(mcg_relation(c.ctx, "a7", "a1", MCG_FORMAT_TEXT, &equal, &report) != MCG_OK);
  CHECK(mcg_relation(c.ctx, nullptr, "a1", MCG_FORMAT_TEXT, &equal, &report) ==
        MCG_ERR_ARGUMENT);
  CHECK(mcg_relation(nullptr, "a1", "a1", MCG_FORMAT_TEXT, &equal, &report) ==
        MCG_ERR_ARGUMENT);
  REQUIRE(mcg_relation(c.ctx, "a1", "a1", MCG_FORMAT_TEXT, &equal, &report) == MCG_OK);
  CHECK(std::string(mcg_last_error(c.ctx)).empty());
  take(report);
  CHECK(std::string(mcg_status_name(MCG_ERR_IO)) == "i/o error");

  Ctx missing(4, 1, "/nonexistent.tbl");
  REQUIRE(missing.status == MCG_OK);
  CHECK(mcg_relation(missing.ctx, "a1", "a1", MCG_FORMAT_TEXT, &equal, &report) ==
        MCG_ERR_IO);
}

TEST_CASE("curves, homology and complements") {
  Ctx c(4);
  char* report = nullptr;
  REQUIRE(mcg_apply_curve(c.ctx, "a3^-1 a2^-1 b a1^-1 a2^-1 a3^-1", "epsilon",
                          MCG_FORMAT_STRUCTURED, &report) == MCG_OK);
  CHECK(take(report).find("registered=zeta") != std::string::npos);

  REQUIRE(mcg_homology(c.ctx, "a1 b", MCG_FORMAT_STRUCTURED, &report) == MCG_OK);
  CHECK(take(report).find("det=1") != std::string::npos);

  Ctx closed(4, 0);
  int non_disk = 0;
  REQUIRE(mcg_complement(closed.ctx, "", nullptr, MCG_FORMAT_STRUCTURED, &non_disk, &report) ==
          MCG_OK);
  CHECK(non_disk == 1);
  CHECK(take(report) == "chi=-2 boundaries=0 orientable=0 disk=0\n");
  REQUIRE(mcg_complement(closed.ctx, "X0", nullptr, MCG_FORMAT_TEXT, &non_disk, &report) ==
          MCG_OK);
  CHECK(non_disk == 0);
  take(report);
  REQUIRE(mcg_complement(closed.ctx, "X0", "epsilon", MCG_FORMAT_TEXT, &non_disk, &report) ==
          MCG_OK);
  CHECK(non_disk == 1);
  take(report);
  CHECK(mcg_complement(closed.ctx, "X0", "psi", MCG_FORMAT_TEXT, &non_disk, &report) ==
        MCG_ERR_UNKNOWN_NAME);
}

TEST_CASE("validation and export") {
  Ctx c(5);
  int valid = 0;
  char* report = nullptr;
  REQUIRE(mcg_validate_data(c.ctx, MCG_FORMAT_TEXT, &valid, &report) == MCG_OK);
  CHECK(valid == 1);
  take(report);
  char* table = nullptr;
  REQUIRE(mcg_export_table(c.ctx, &table) == MCG_OK);
  CHECK(take(table).find("\ngenus 5\n") != std::string::npos);
}

TEST_CASE("word utilities") {
  char* out = nullptr;
  REQUIRE(mcg_word_reduce(3, "x1 x2 x2^-1 x3", &out) == MCG_OK);
  const auto reduced = take(out);
  CHECK(reduced.find("x2") == std::string::npos);
  CHECK(mcg_word_reduce(2, "x3", &out) == MCG_ERR_OUT_OF_RANGE);
  CHECK(std::string(mcg_last_error(nullptr)).size() > 0);
  int conj = 0;
  REQUIRE(mcg_word_is_conjugate(3, "x1 x2", "x2 x1", &conj) == MCG_OK);
  CHECK(conj == 1);
  REQUIRE(mcg_word_is_conjugate(3, "x1 x2", "x1 x2^-1", &conj) == MCG_OK);
  CHECK(conj == 0);
}
