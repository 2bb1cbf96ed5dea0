#include "mcg/theorem.hpp"

#include <cstdlib>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "mcg/error.hpp"
#include "mcg/homology.hpp"

#ifndef MCG_DEFAULT_DATA_DIR
#define MCG_DEFAULT_DATA_DIR "data"
#endif

namespace mcg {

std::string default_data_dir() {
  if (const char* env = std::getenv("MCG_DATA_DIR"); env && *env) return env;
  return MCG_DEFAULT_DATA_DIR;
}

DataPaths DataPaths::in(const std::string& dir, int genus) {
  return {dir + "/registry.txt", dir + "/twists/g" + std::to_string(genus) + ".tbl",
          dir + "/certificates.txt"};
}

namespace {

const char* status_name(StageStatus s) {
  switch (s) {
    case StageStatus::pass: return "PASS";
    case StageStatus::fail: return "FAIL";
    case StageStatus::skipped: return "SKIPPED";
    case StageStatus::not_run: return "NOT-RUN";
  }
  return "?";
}

SuiteReport homology_smoke(const Engine& engine, const std::vector<Certificate>& certs,
                           std::uint64_t seed) {
  SuiteReport rep;
  std::vector<std::string> gens;
  for (const auto& e : engine.table().entries()) {
    gens.push_back(e.generator);
    const auto det = abelianize(engine.twist(e.generator)).determinant();
    rep.expect(det == 1 || det == -1,
               e.generator + ": determinant " + std::to_string(det));
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int k = 0; k < 20; ++k) {
    const auto p = random_expr(rng, gens, 8);
    const auto q = random_expr(rng, gens, 8);
    const auto mp = abelianize(engine.evaluate(p));
    const auto mq = abelianize(engine.evaluate(q));
    const auto mpq = abelianize(engine.evaluate(concat(p, q)));
    rep.expect(mp * mq == mpq, "functoriality fails for '" + p.str() + "' and '" + q.str() + "'");
    const auto det = mpq.determinant();
    rep.expect(det == 1 || det == -1, "determinant " + std::to_string(det) + " for '" +
                                          p.str() + " " + q.str() + "'");
  }
  for (const auto& c : certs) {
    if (c.target != "f") continue;
    rep.expect(abelianize(engine.evaluate(c.expression)) == abelianize(engine.twist("f")),
               "homology of f differs from its certificate");
  }
  const auto phi = mod2(abelianize(engine.evaluate(key_conjugator())));
  const auto& reg = engine.registry();
  rep.expect(phi.apply(mod2_class(reg.curve("epsilon").pi1_word)) ==
                 mod2_class(reg.curve("zeta").pi1_word),
             "phi does not carry the mod-2 class of epsilon to that of zeta");
  return rep;
}

}  // namespace

bool TheoremReport::passed() const { return first_failure().empty() && !stages.empty(); }

std::string TheoremReport::first_failure() const {
  for (const auto& s : stages) {
    if (s.status == StageStatus::fail) return s.name;
  }
  return {};
}

std::string TheoremReport::text() const {
  std::ostringstream os;
  os << "twist subgroup of N_{" << spec.genus << ',' << spec.boundary
     << "} generated by a1..a" << spec.genus - 1 << ", b, e\n";
  if (!note.empty()) os << "note: " << note << '\n';
  for (const auto& s : stages) {
    os << "  [" << status_name(s.status) << "] " << s.name;
    if (!s.detail.empty()) os << ": " << s.detail;
    os << '\n';
  }
  os << (passed() ? "PASS" : "FAIL at " + first_failure()) << '\n';
  return os.str();
}

std::string TheoremReport::structured() const {
  std::ostringstream os;
  os << "genus=" << spec.genus << " n=" << spec.boundary << '\n';
  for (const auto& s : stages) {
    os << "stage=" << s.name << " status=" << status_name(s.status) << '\n';
  }
  os << "result=" << (passed() ? "PASS" : "FAIL");
  if (!passed()) os << " failed_stage=" << first_failure();
  os << '\n';
  return os.str();
}

TheoremReport verify_theorem(const SurfaceSpec& spec, const DataPaths& paths,
                             std::uint64_t seed, Handedness mode) {
  spec.require(4);
  TheoremReport rep;
  rep.spec = spec;
  if (spec.boundary == 0) {
    rep.note = "computed on N_{" + std::to_string(spec.genus) +
               ",1}; identities descend to the closed surface by capping the boundary";
  }
  const char* names[] = {"registry",    "twist-table", "key-conjugation",
                         "certificate-f", "certificate-c", "certificate-y2",
                         "homology"};
  for (const char* n : names) rep.stages.push_back({n, StageStatus::not_run, {}});
  std::size_t stage = 0;
  auto pass = [&](std::string detail = {}) {
    rep.stages[stage].status = StageStatus::pass;
    rep.stages[stage].detail = std::move(detail);
    ++stage;
  };
  auto fail = [&](std::string detail) {
    rep.stages[stage].status = StageStatus::fail;
    rep.stages[stage].detail = std::move(detail);
    return rep;
  };

  std::optional<Registry> registry;
  try {
    registry.emplace(Registry::load(paths.registry, spec));
    const auto v = validate_registry(*registry);
    if (!v.ok()) {
      const auto& f = v.failures.front();
      return fail(f.check + " [" + f.curve + "]: " + f.detail);
    }
    pass(std::to_string(v.checks) + " checks");
  } catch (const Error& e) {
    return fail(e.what());
  }

  std::unique_ptr<Engine> engine;
  try {
    engine = std::make_unique<Engine>(*registry, TwistTable::load(paths.twist_table, spec.genus),
                                      mode);
    if (!engine->normalization_note().empty()) {
      rep.note += (rep.note.empty() ? "" : "; ") + engine->normalization_note();
      const auto v = validate_registry(engine->registry());
      if (!v.ok()) return fail("registry invalid after normalization");
    }
    const auto suite = run_invariant_suite(*engine, seed);
    if (!suite.ok()) return fail(suite.failures.front());
    pass(std::to_string(suite.checks) + " checks");
  } catch (const Error& e) {
    return fail(e.what());
  }

  try {
    const auto key = verify_key_conjugation(*engine);
    if (!key.ok()) return fail(key.diagnostic);
    pass("phi(epsilon) = " + key.image);
  } catch (const Error& e) {
    return fail(e.what());
  }

  std::vector<Certificate> certs;
  try {
    certs = load_certificates(paths.certificates, spec.genus);
  } catch (const Error& e) {
    return fail(e.what());
  }
  const auto find = [&](const std::string& target) -> const Certificate* {
    for (const auto& c : certs) {
      if (c.target == target) return &c;
    }
    return nullptr;
  };
  try {
    const Certificate* f = find("f");
    if (!f) return fail("no certificate for f");
    const auto allowed = parse_allowed("a*,b,e", spec.genus);
    const auto res = check_certificate(*engine, *f, allowed);
    if (!res.holds) return fail(res.diagnostic);
    pass("f = " + f->expression.str());
    for (const char* target : {"c", "y2"}) {
      const Certificate* c = find(target);
      if (!c) {
        rep.stages[stage].status = StageStatus::skipped;
        rep.stages[stage].detail = "no certificate data";
        ++stage;
        continue;
      }
      const auto r = check_certificate(*engine, *c, c->allowed);
      if (!r.holds) return fail(r.diagnostic);
      pass(std::string(target) + " = " + c->expression.str());
    }
  } catch (const Error& e) {
    return fail(e.what());
  }

  try {
    const auto h = homology_smoke(*engine, certs, seed);
    if (!h.ok()) return fail(h.failures.front());
    pass(std::to_string(h.checks) + " checks");
  } catch (const Error& e) {
    return fail(e.what());
  }
  return rep;
}

}  // namespace mcg
