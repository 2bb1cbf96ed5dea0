#include "mcg/mcg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "mcg/complement.hpp"
#include "mcg/error.hpp"
#include "mcg/homology.hpp"
#include "mcg/theorem.hpp"

struct mcg_context {
  mcg::SurfaceSpec spec;
  mcg::DataPaths paths;
  mcg::Handedness mode = mcg::Handedness::normalize;
  std::optional<mcg::Registry> registry;
  std::unique_ptr<mcg::Engine> engine;
  std::string error;

  const mcg::Registry& reg() {
    if (!registry) registry.emplace(mcg::Registry::load(paths.registry, spec));
    return *registry;
  }
  const mcg::Engine& eng() {
    if (!engine) {
      engine = std::make_unique<mcg::Engine>(
          reg(), mcg::TwistTable::load(paths.twist_table, spec.genus), mode);
    }
    return *engine;
  }
};

namespace {

thread_local std::string create_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs fn, translating exceptions into status codes and ctx->error.
template <class Fn>
mcg_status guarded(mcg_context* ctx, Fn&& fn) {
  if (!ctx) return MCG_ERR_ARGUMENT;
  ctx->error.clear();
  try {
    fn();
    return MCG_OK;
  } catch (const mcg::Error& e) {
    ctx->error = e.what();
    return static_cast<mcg_status>(e.code());
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return MCG_ERR_INTERNAL;
  }
}

std::string capping_note(const mcg_context* ctx) {
  if (ctx->spec.boundary != 0) return {};
  return "computed on N_{" + std::to_string(ctx->spec.genus) + ",1}";
}

}  // namespace

extern "C" {

mcg_status mcg_context_create(const mcg_config* config, mcg_context** out) {
  if (!config || !out) return MCG_ERR_ARGUMENT;
  *out = nullptr;
  try {
    auto ctx = std::make_unique<mcg_context>();
    ctx->spec = {config->genus, config->boundary};
    ctx->spec.require(2);
    const std::string dir = config->data_dir ? config->data_dir : mcg::default_data_dir();
    ctx->paths = mcg::DataPaths::in(dir, config->genus);
    if (config->registry) ctx->paths.registry = config->registry;
    if (config->twist_table) ctx->paths.twist_table = config->twist_table;
    if (config->certificates) ctx->paths.certificates = config->certificates;
    ctx->mode = config->strict_handedness ? mcg::Handedness::strict : mcg::Handedness::normalize;
    *out = ctx.release();
    return MCG_OK;
  } catch (const mcg::Error& e) {
    create_error = e.what();
    return static_cast<mcg_status>(e.code());
  } catch (const std::exception& e) {
    create_error = e.what();
    return MCG_ERR_INTERNAL;
  }
}

void mcg_context_destroy(mcg_context* ctx) { delete ctx; }

const char* mcg_last_error(const mcg_context* ctx) {
  return ctx ? ctx->error.c_str() : create_error.c_str();
}

const char* mcg_status_name(mcg_status status) {
  switch (status) {
    case MCG_OK: return "ok";
    case MCG_ERR_PARSE: return "parse error";
    case MCG_ERR_OUT_OF_RANGE: return "out of range";
    case MCG_ERR_GENUS_MISMATCH: return "genus mismatch";
    case MCG_ERR_UNKNOWN_NAME: return "unknown name";
    case MCG_ERR_PRECONDITION: return "precondition violated";
    case MCG_ERR_IO: return "i/o error";
    case MCG_ERR_VALIDATION: return "validation failed";
    case MCG_ERR_INTERNAL: return "internal error";
    case MCG_ERR_ARGUMENT: return "bad argument";
  }
  return "unknown status";
}

void mcg_string_free(char* s) { std::free(s); }

mcg_status mcg_verify_theorem(mcg_context* ctx, uint64_t seed, mcg_format format,
                              int* passed, char** report) {
  if (!passed || !report) return MCG_ERR_ARGUMENT;
  return guarded(ctx, [&] {
    const auto rep = mcg::verify_theorem(ctx->spec, ctx->paths, seed, ctx->mode);
    *passed = rep.passed() ? 1 : 0;
    *report = dup(format == MCG_FORMAT_STRUCTURED ? rep.structured() : rep.text());
  });
}

mcg_status mcg_relation(mcg_context* ctx, const char* lhs, const char* rhs,
                        mcg_format format, int* equal, char** report) {
  if (!lhs || !rhs || !equal || !report) return MCG_ERR_ARGUMENT;
  return guarded(ctx, [&] {
    const auto& eng = ctx->eng();
    const auto l = eng.evaluate(mcg::parse_expr(lhs));
    const auto r = eng.evaluate(mcg::parse_expr(rhs));
    const auto diff = mcg::describe_difference(l, r);
    *equal = diff.empty() ? 1 : 0;
    std::ostringstream os;
    const auto note = capping_note(ctx);
    if (format == MCG_FORMAT_STRUCTURED) {
      os << "result=" << (diff.empty() ? "EQUAL" : "UNEQUAL");
      if (auto i = l.first_difference(r)) os << " first_difference=x" << *i;
      if (!note.empty()) os << " surface=N_{" << ctx->spec.genus << ",1}";
      os << '\n';
    } else {
      os << (diff.empty() ? "EQUAL" : "UNEQUAL") << '\n';
      if (!diff.empty()) os << diff << '\n';
      if (!note.empty()) {
        os << note << (diff.empty() ? "; equality descends to the closed surface by capping"
                                    : "; inequality is not decided for the closed surface")
           << '\n';
      }
    }
    *report = dup(os.str());
  });
}

mcg_status mcg_apply_curve(mcg_context* ctx, const char* expr, const char* curve,
                           mcg_format format, char** report) {
  if (!expr || !curve || !report) return MCG_ERR_ARGUMENT;
  return guarded(ctx, [&] {
    const auto& eng = ctx->eng();
    const auto parsed = mcg::parse_expr(expr);
    const auto image = eng.apply_to_curve(parsed, curve);
    const auto& rec = eng.registry().curve(curve);
    // Name the image if it is a registered curve (up to orientation).
    std::string match;
    for (const auto& r : eng.registry().records()) {
      const mcg::CyclicWord c(r.pi1_word);
      if (image == c || image == c.inverse()) {
        match = r.name;
        break;
      }
    }
    std::ostringstream os;
    if (format == MCG_FORMAT_STRUCTURED) {
      os << "curve=" << rec.name << " image=" << image.str()
         << " registered=" << (match.empty() ? "none" : match) << '\n';
    } else {
      os << rec.name << " -> " << image.str() << '\n';
      if (!match.empty()) os << "image is the registered curve " << match << '\n';
    }
    *report = dup(os.str());
  });
}

mcg_status mcg_homology(mcg_context* ctx, const char* expr, mcg_format format,
                        char** report) {
  if (!expr || !report) return MCG_ERR_ARGUMENT;
  return guarded(ctx, [&] {
    const auto m = mcg::abelianize(ctx->eng().evaluate(mcg::parse_expr(expr)));
    std::ostringstream os;
    if (format == MCG_FORMAT_STRUCTURED) {
      os << m.line() << '\n' << "det=" << m.determinant() << '\n';
    } else {
      os << m.text() << "det = " << m.determinant() << '\n';
      os << "mod 2:\n" << mcg::mod2(m).text();
    }
    *report = dup(os.str());
  });
}

mcg_status mcg_complement(mcg_context* ctx, const char* curves, const char* drop,
                          mcg_format format, int* has_non_disk, char** report) {
  if (!curves || !has_non_disk || !report) return MCG_ERR_ARGUMENT;
  return guarded(ctx, [&] {
    const auto& reg = ctx->reg();
    auto names = mcg::parse_curve_set(curves, ctx->spec.genus);
    if (drop && *drop) {
      const std::string d = mcg::CurveName::parse(drop).str();
      const auto it = std::find(names.begin(), names.end(), d);
      if (it == names.end()) {
        throw mcg::Error(mcg::ErrorCode::unknown_name, d + " is not in the curve set");
      }
      names.erase(it);
    }
    const auto rep = mcg::cut_along(reg, names);
    *has_non_disk = rep.has_non_disk() ? 1 : 0;
    if (format == MCG_FORMAT_STRUCTURED) {
      *report = dup(rep.structured());
      return;
    }
    std::ostringstream os;
    os << "cut along {";
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
    os << "}\n" << rep.table();
    os << "sum of chi = " << rep.euler_sum() << " = chi(N) + double points = "
       << rep.surface_euler() << " + " << rep.double_points << '\n';
    os << (rep.has_non_disk() ? "has a non-disk component" : "all components are disks")
       << '\n';
    *report = dup(os.str());
  });
}

mcg_status mcg_validate_data(mcg_context* ctx, mcg_format format, int* valid,
                             char** report) {
  if (!valid || !report) return MCG_ERR_ARGUMENT;
  return guarded(ctx, [&] {
    const auto v = mcg::validate_registry(ctx->reg());
    std::ostringstream os;
    os << (format == MCG_FORMAT_STRUCTURED ? v.structured() : v.text());
    bool ok = v.ok();
    if (ok && ctx->spec.genus >= 4) {
      const auto suite = mcg::run_invariant_suite(ctx->eng(), 0, 0);
      ok = suite.ok();
      if (format == MCG_FORMAT_STRUCTURED) {
        os << "table status=" << (suite.ok() ? "PASS" : "FAIL") << " checks=" << suite.checks
           << " failures=" << suite.failures.size() << '\n';
      } else {
        os << suite.text("twist table");
      }
    }
    *valid = ok ? 1 : 0;
    *report = dup(os.str());
  });
}

mcg_status mcg_export_table(mcg_context* ctx, char** table) {
  if (!table) return MCG_ERR_ARGUMENT;
  return guarded(ctx, [&] { *table = dup(mcg::TwistTable::derive(ctx->reg()).str()); });
}

mcg_status mcg_word_reduce(int genus, const char* word, char** reduced) {
  if (!word || !reduced) return MCG_ERR_ARGUMENT;
  try {
    *reduced = dup(mcg::parse_word(word, genus).str());
    return MCG_OK;
  } catch (const mcg::Error& e) {
    create_error = e.what();
    return static_cast<mcg_status>(e.code());
  }
}

mcg_status mcg_word_is_conjugate(int genus, const char* u, const char* v, int* conjugate) {
  if (!u || !v || !conjugate) return MCG_ERR_ARGUMENT;
  try {
    *conjugate = mcg::is_conjugate(mcg::parse_word(u, genus), mcg::parse_word(v, genus)) ? 1 : 0;
    return MCG_OK;
  } catch (const mcg::Error& e) {
    create_error = e.what();
    return static_cast<mcg_status>(e.code());
  }
}

}  // extern "C"
