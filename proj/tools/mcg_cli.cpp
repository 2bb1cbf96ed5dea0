// Command-line front end over the C API.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "mcg/mcg.h"

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, error = 3 };

struct Options {
  int genus = 4;
  int boundary = -1;  // unset: 0 for complement, 1 otherwise
  std::string format = "text";
  std::string data_dir;
  std::string registry;
  std::string twist_table;
  std::string certificates;
  std::uint64_t seed = 20240521;
  bool strict = false;
};

class Session {
 public:
  explicit Session(const Options& o) {
    mcg_config cfg{};
    cfg.genus = o.genus;
    cfg.boundary = o.boundary;
    cfg.data_dir = o.data_dir.empty() ? nullptr : o.data_dir.c_str();
    cfg.registry = o.registry.empty() ? nullptr : o.registry.c_str();
    cfg.twist_table = o.twist_table.empty() ? nullptr : o.twist_table.c_str();
    cfg.certificates = o.certificates.empty() ? nullptr : o.certificates.c_str();
    cfg.strict_handedness = o.strict ? 1 : 0;
    status_ = mcg_context_create(&cfg, &ctx_);
  }
  ~Session() { mcg_context_destroy(ctx_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  mcg_context* get() const { return ctx_; }
  mcg_status status() const { return status_; }

 private:
  mcg_context* ctx_ = nullptr;
  mcg_status status_ = MCG_OK;
};

int report_error(mcg_status st, const mcg_context* ctx) {
  std::cerr << "error (" << mcg_status_name(st) << "): " << mcg_last_error(ctx) << '\n';
  return st == MCG_ERR_PRECONDITION ? usage : error;
}

// Prints and frees a report produced by the C API.
void emit(char* text) {
  if (!text) return;
  std::fputs(text, stdout);
  mcg_string_free(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dehn twist generators for the twist subgroup of N_{g,n}"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--genus", o.genus, "number of crosscaps g");
  app.add_option("--n", o.boundary,
                 "boundary components, 0 or 1 (default 0 for complement, else 1)")
      ->check(CLI::IsMember({0, 1}));
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--data-dir", o.data_dir, "data directory (default: $MCG_DATA_DIR)");
  app.add_option("--registry", o.registry, "curve registry file");
  app.add_option("--twist-table", o.twist_table, "twist table file");
  app.add_option("--certificates", o.certificates, "certificate file");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_flag("--strict-handedness", o.strict, "never flip arrow tags at load time");

  auto* verify = app.add_subcommand("verify-theorem", "run the full verification pipeline");

  std::string lhs, rhs;
  auto* relation = app.add_subcommand("relation", "compare two twist expressions");
  relation->add_option("lhs", lhs, "left-hand expression")->required();
  relation->add_option("rhs", rhs, "right-hand expression")->required();

  std::string expr, curve;
  auto* apply = app.add_subcommand("apply-curve", "image of a registered curve");
  apply->add_option("--expr", expr, "twist expression")->required();
  apply->add_option("--curve", curve, "curve name")->required();

  auto* homology = app.add_subcommand("homology", "action on H_1 as an integer matrix");
  homology->add_option("--expr", expr, "twist expression")->required();

  std::string curves, drop;
  auto* complement = app.add_subcommand("complement", "cut the surface along curves");
  complement->add_option("--curves", curves,
                          "curve set, e.g. alpha1..alpha4 or X0 (default: empty)");
  complement->add_option("--drop", drop, "curve removed from the set");

  auto* validate = app.add_subcommand("validate-data", "check registry and twist table");

  std::string output;
  auto* exportt = app.add_subcommand("export-table", "derive a twist table from the registry");
  exportt->add_option("--output", output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  if (verify->parsed() && o.genus < 4) {
    std::cerr << "usage: verify-theorem needs --genus >= 4\n";
    return usage;
  }
  if (o.boundary < 0) o.boundary = complement->parsed() ? 0 : 1;
  const mcg_format fmt = o.format == "structured" ? MCG_FORMAT_STRUCTURED : MCG_FORMAT_TEXT;

  Session s(o);
  if (s.status() != MCG_OK) return report_error(s.status(), nullptr);
  mcg_context* ctx = s.get();
  char* out = nullptr;
  int flag = 0;
  mcg_status st = MCG_OK;

  if (verify->parsed()) {
    st = mcg_verify_theorem(ctx, o.seed, fmt, &flag, &out);
    if (st != MCG_OK) return report_error(st, ctx);
    emit(out);
    return flag ? ok : failed;
  }
  if (relation->parsed()) {
    st = mcg_relation(ctx, lhs.c_str(), rhs.c_str(), fmt, &flag, &out);
    if (st != MCG_OK) return report_error(st, ctx);
    emit(out);
    return flag ? ok : failed;
  }
  if (apply->parsed()) {
    st = mcg_apply_curve(ctx, expr.c_str(), curve.c_str(), fmt, &out);
  } else if (homology->parsed()) {
    st = mcg_homology(ctx, expr.c_str(), fmt, &out);
  } else if (complement->parsed()) {
    st = mcg_complement(ctx, curves.c_str(), drop.empty() ? nullptr : drop.c_str(), fmt,
                        &flag, &out);
  } else if (validate->parsed()) {
    st = mcg_validate_data(ctx, fmt, &flag, &out);
    if (st != MCG_OK) return report_error(st, ctx);
    emit(out);
    return flag ? ok : failed;
  } else if (exportt->parsed()) {
    st = mcg_export_table(ctx, &out);
    if (st == MCG_OK && !output.empty()) {
      std::ofstream f(output);
      f << out;
      mcg_string_free(out);
      if (!f) {
        std::cerr << "error: cannot write " << output << '\n';
        return error;
      }
      return ok;
    }
  }
  if (st != MCG_OK) return report_error(st, ctx);
  emit(out);
  return ok;
}
