#include "mcg/mapclass.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "mcg/complement.hpp"
#include "mcg/error.hpp"
#include "mcg/homology.hpp"
#include "mcg/twist.hpp"
#include "text.hpp"

namespace mcg {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

bool is_generator_name(std::string_view s) {
  if (s == "b" || s == "c" || s == "e" || s == "f" || s == "y2") return true;
  return s.size() >= 2 && s[0] == 'a' && all_digits(s.substr(1)) && s[1] != '0';
}

}  // namespace

std::string curve_of_generator(std::string_view g) {
  if (g == "b") return "beta";
  if (g == "c") return "gamma";
  if (g == "e") return "epsilon";
  if (g == "f") return "zeta";
  if (g == "y2") return "psi";
  if (is_generator_name(g) && g[0] == 'a') return "alpha_" + std::string(g.substr(1));
  throw Error(ErrorCode::unknown_name, "unknown twist generator '" + std::string(g) + "'");
}

std::string generator_of_curve(std::string_view curve) {
  const CurveName n = CurveName::parse(curve);
  switch (n.kind) {
    case CurveKind::alpha: return "a" + std::to_string(n.index);
    case CurveKind::beta: return "b";
    case CurveKind::gamma: return "c";
    case CurveKind::epsilon: return "e";
    case CurveKind::zeta: return "f";
    case CurveKind::psi: return "y2";
  }
  return {};
}

std::vector<std::string> generator_names(int genus) {
  std::vector<std::string> names;
  for (int i = 1; i <= genus - 1; ++i) names.push_back("a" + std::to_string(i));
  if (genus >= 4) names.insert(names.end(), {"b", "c", "e", "f", "y2"});
  return names;
}

// ---------------------------------------------------------------------------
// Expressions

MappingClassExpr MappingClassExpr::inverse() const {
  MappingClassExpr inv;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    inv.factors.push_back({it->name, -it->exponent});
  }
  return inv;
}

std::string MappingClassExpr::str() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += ' ';
    s += f.name;
    if (f.exponent < 0) s += "^-1";
  }
  return s;
}

MappingClassExpr parse_expr(std::string_view text) {
  MappingClassExpr expr;
  std::size_t pos = 0;
  int token = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t') ++pos;
    ++token;
    std::string_view tok = text.substr(start, pos - start);
    int exponent = 1;
    if (tok.ends_with("^-1")) {
      exponent = -1;
      tok.remove_suffix(3);
    }
    if (!is_generator_name(tok)) {
      throw Error(ErrorCode::parse, "token " + std::to_string(token) + " (column " +
                                        std::to_string(start + 1) + "): '" +
                                        std::string(text.substr(start, pos - start)) +
                                        "' is not a twist generator");
    }
    expr.factors.push_back({std::string(tok), exponent});
  }
  return expr;
}

MappingClassExpr concat(const MappingClassExpr& p, const MappingClassExpr& q) {
  MappingClassExpr r = p;
  r.factors.insert(r.factors.end(), q.factors.begin(), q.factors.end());
  return r;
}

// ---------------------------------------------------------------------------
// Twist tables

TwistTable TwistTable::parse(std::string_view contents, int genus) {
  TwistTable t;
  t.genus_ = genus;
  std::istringstream in{std::string(contents)};
  std::string line;
  int line_no = 0;
  bool saw_genus = false;
  TwistEntry* cur = nullptr;
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::parse, "twist table line " + std::to_string(line_no) + ": " + why);
  };
  auto finish = [&]() {
    if (!cur) return;
    for (std::size_t i = 0; i < cur->images.size(); ++i) {
      if (cur->images[i].genus() == 0 || cur->inverse_images[i].genus() == 0) {
        throw fail("generator " + cur->generator + " lacks the image of x" +
                   std::to_string(i + 1));
      }
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = text::strip_comment(line);
    if (body.empty()) continue;
    const auto toks = text::tokens(body);
    if (toks[0] == "genus") {
      if (toks.size() != 2 || !all_digits(toks[1])) throw fail("malformed genus line");
      if (std::stoi(toks[1]) != genus) {
        throw Error(ErrorCode::genus_mismatch,
                    "twist table is for genus " + toks[1] + ", expected " +
                        std::to_string(genus));
      }
      saw_genus = true;
      continue;
    }
    if (toks[0] == "twist") {
      finish();
      if (toks.size() != 4) throw fail("expected: twist <generator> <curve> <arrow>");
      if (!is_generator_name(toks[1])) throw fail("unknown generator " + toks[1]);
      if (t.contains(toks[1])) throw fail("duplicate generator " + toks[1]);
      TwistEntry e;
      e.generator = toks[1];
      e.curve = CurveName::parse(toks[2]).str();
      if (toks[3] == "+1" || toks[3] == "1") {
        e.arrow = 1;
      } else if (toks[3] == "-1") {
        e.arrow = -1;
      } else {
        throw fail("arrow must be +1 or -1");
      }
      e.images.assign(static_cast<std::size_t>(genus), Word());
      e.inverse_images.assign(static_cast<std::size_t>(genus), Word());
      t.entries_.push_back(std::move(e));
      cur = &t.entries_.back();
      continue;
    }
    if (!cur) throw fail("image line before any twist header");
    const bool forward = body.find("->") != std::string_view::npos;
    const bool backward = body.find("<-") != std::string_view::npos;
    if (forward == backward) throw fail("expected 'x<i> -> word' or 'x<i> <- word'");
    const auto arrow_pos = body.find(forward ? "->" : "<-");
    const auto lhs = text::trim(body.substr(0, arrow_pos));
    const auto rhs = text::trim(body.substr(arrow_pos + 2));
    if (lhs.size() < 2 || lhs[0] != 'x' || !all_digits(lhs.substr(1))) {
      throw fail("bad generator '" + std::string(lhs) + "'");
    }
    const int i = std::stoi(std::string(lhs.substr(1)));
    if (i < 1 || i > genus) throw fail("generator index out of range");
    Word w;
    try {
      w = parse_word(rhs, genus);
    } catch (const Error& e) {
      throw Error(e.code(), "twist table line " + std::to_string(line_no) + ": " + e.what());
    }
    auto& slot = forward ? cur->images : cur->inverse_images;
    if (slot[static_cast<std::size_t>(i - 1)].genus() != 0) {
      throw fail("image of x" + std::to_string(i) + " given twice");
    }
    slot[static_cast<std::size_t>(i - 1)] = std::move(w);
  }
  finish();
  if (!saw_genus) throw Error(ErrorCode::parse, "twist table has no genus line");
  return t;
}

TwistTable TwistTable::load(const std::string& path, int genus) {
  return parse(text::read_file(path), genus);
}

TwistTable TwistTable::derive(const Registry& registry) {
  TwistTable t;
  t.genus_ = registry.genus();
  for (const auto& rec : registry.records()) {
    const Automorphism a = dehn_twist(t.genus_, rec.normal_coords, rec.arrow);
    t.entries_.push_back({generator_of_curve(rec.name), rec.name, rec.arrow,
                          a.images(), a.inverse_images()});
  }
  return t;
}

bool TwistTable::contains(std::string_view generator) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const TwistEntry& e) { return e.generator == generator; });
}

const TwistEntry& TwistTable::entry(std::string_view generator) const {
  for (const auto& e : entries_) {
    if (e.generator == generator) return e;
  }
  throw Error(ErrorCode::unknown_name,
              "twist table has no generator '" + std::string(generator) + "'");
}

void TwistTable::flip(std::string_view generator) {
  TwistEntry e = entry(generator);
  e.arrow = -e.arrow;
  std::swap(e.images, e.inverse_images);
  replace(e);
}

void TwistTable::replace(const TwistEntry& e) {
  for (auto& cur : entries_) {
    if (cur.generator == e.generator) {
      cur = e;
      return;
    }
  }
  entries_.push_back(e);
}

std::string TwistTable::str() const {
  std::ostringstream os;
  os << "# Dehn twist actions on pi_1(N_{" << genus_ << ",1}), one block per generator\n";
  os << "genus " << genus_ << '\n';
  for (const auto& e : entries_) {
    os << "\ntwist " << e.generator << ' ' << e.curve << ' ' << (e.arrow > 0 ? "+1" : "-1")
       << '\n';
    for (std::size_t i = 0; i < e.images.size(); ++i) {
      os << 'x' << i + 1 << " -> " << e.images[i].str() << '\n';
    }
    for (std::size_t i = 0; i < e.inverse_images.size(); ++i) {
      os << 'x' << i + 1 << " <- " << e.inverse_images[i].str() << '\n';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Engine

Engine::Engine(Registry registry, TwistTable table, Handedness mode)
    : registry_(std::move(registry)), table_(std::move(table)) {
  if (table_.genus() != registry_.genus()) {
    throw Error(ErrorCode::genus_mismatch, "twist table and registry genus differ");
  }
  build();
  if (mode == Handedness::normalize) normalize_handedness();
}

void Engine::build() {
  twists_.clear();
  for (const auto& e : table_.entries()) {
    try {
      twists_.emplace(e.generator, Automorphism(e.images, e.inverse_images));
    } catch (const Error& err) {
      throw Error(err.code(), "twist table entry " + e.generator + ": " + err.what());
    }
  }
}

void Engine::normalize_handedness() {
  for (const char* g : {"a1", "a2", "a3", "b", "e", "f"}) {
    if (!has_twist(g)) return;
  }
  const auto phi = key_conjugator();
  const Automorphism f = twist("f");
  MappingClassExpr rhs = concat(concat(phi, parse_expr("e^-1")), phi.inverse());
  if (f == evaluate(rhs)) return;
  rhs = concat(concat(phi, parse_expr("e")), phi.inverse());
  if (f != evaluate(rhs)) return;
  const TwistEntry& entry = table_.entry("f");
  const int old_arrow = entry.arrow;
  table_.flip("f");
  if (registry_.contains(entry.curve)) {
    const int reg_arrow = registry_.curve(entry.curve).arrow;
    registry_.set_arrow(entry.curve, -reg_arrow);
  }
  build();
  note_ = "twist f satisfied f = phi e phi^-1; arrow of " + table_.entry("f").curve +
          " flipped from " + std::to_string(old_arrow) + " to " +
          std::to_string(-old_arrow);
}

bool Engine::has_twist(std::string_view generator) const {
  return twists_.find(generator) != twists_.end();
}

const Automorphism& Engine::twist(std::string_view generator) const {
  const auto it = twists_.find(generator);
  if (it == twists_.end()) {
    throw Error(ErrorCode::unknown_name, "unknown generator '" + std::string(generator) +
                                             "' at genus " + std::to_string(genus()));
  }
  return it->second;
}

Automorphism Engine::evaluate(const MappingClassExpr& expr) const {
  Automorphism result = Automorphism::identity(genus());
  // Right to left: the rightmost factor acts first.
  for (auto it = expr.factors.rbegin(); it != expr.factors.rend(); ++it) {
    const Automorphism& t = twist(it->name);
    result = compose(it->exponent > 0 ? t : t.inverse(), result);
  }
  return result;
}

CyclicWord Engine::apply_to_curve(const MappingClassExpr& expr,
                                  std::string_view curve) const {
  const CurveRecord& rec = registry_.curve(curve);
  return CyclicWord(evaluate(expr).apply(rec.pi1_word));
}

bool Engine::inverse_sound(const MappingClassExpr& expr, const Automorphism& a) const {
  if (a.genus() != genus()) return false;
  for (int i = 1; i <= genus(); ++i) {
    const Word x(genus(), {i});
    // a(a^-1(x)): the rightmost factor acts first.
    Word w = a.inverse_images()[static_cast<std::size_t>(i - 1)];
    for (auto it = expr.factors.rbegin(); it != expr.factors.rend(); ++it) {
      const Automorphism& t = twist(it->name);
      w = it->exponent > 0 ? t.apply(w) : t.apply_inverse(w);
    }
    if (w != x) return false;
    // a^-1(a(x)): undo the leftmost factor first.
    w = a.images()[static_cast<std::size_t>(i - 1)];
    for (const auto& f : expr.factors) {
      const Automorphism& t = twist(f.name);
      w = f.exponent > 0 ? t.apply_inverse(w) : t.apply(w);
    }
    if (w != x) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Key conjugation and certificates

MappingClassExpr key_conjugator() {
  return parse_expr("a3^-1 a2^-1 b a1^-1 a2^-1 a3^-1");
}

std::string describe_difference(const Automorphism& lhs, const Automorphism& rhs) {
  const auto i = lhs.first_difference(rhs);
  if (!i) return {};
  const auto k = static_cast<std::size_t>(*i - 1);
  auto show = [&](const Automorphism& a) {
    return k < a.images().size() ? a.images()[k].str() : std::string("<none>");
  };
  return "first differing generator x" + std::to_string(*i) + ": [" + show(lhs) +
         "] vs [" + show(rhs) + "]";
}

KeyReport verify_key_conjugation(const Engine& engine) {
  engine.registry().spec().require(4);
  KeyReport rep;
  rep.genus = engine.genus();
  const auto phi = key_conjugator();
  const CyclicWord image = engine.apply_to_curve(phi, "epsilon");
  const CyclicWord zeta(engine.registry().curve("zeta").pi1_word);
  rep.image = image.str();
  rep.image_matches = image == zeta || image == zeta.inverse();
  if (!rep.image_matches) {
    rep.diagnostic = "phi(epsilon) = " + image.str() + " is not zeta = " + zeta.str();
  }
  const auto rhs = engine.evaluate(concat(concat(phi, parse_expr("e^-1")), phi.inverse()));
  const auto& f = engine.twist("f");
  rep.twist_matches = f == rhs;
  if (!rep.twist_matches) {
    if (!rep.diagnostic.empty()) rep.diagnostic += "; ";
    rep.diagnostic += "f differs from phi e^-1 phi^-1, " + describe_difference(f, rhs);
  }
  return rep;
}

std::string KeyReport::text() const {
  std::ostringstream os;
  os << "genus " << genus << ": phi = " << key_conjugator().str() << '\n';
  os << "  phi(epsilon) = " << image << "  "
     << (image_matches ? "equals zeta" : "DIFFERS from zeta") << '\n';
  os << "  f == phi e^-1 phi^-1  " << (twist_matches ? "holds" : "FAILS") << '\n';
  if (!diagnostic.empty()) os << "  " << diagnostic << '\n';
  return os.str();
}

std::set<std::string> parse_allowed(std::string_view text, int genus) {
  std::set<std::string> out;
  for (const auto& tok : text::split(text, ',')) {
    if (tok.empty()) continue;
    if (tok == "a*") {
      for (int i = 1; i <= genus - 1; ++i) out.insert("a" + std::to_string(i));
    } else if (is_generator_name(tok)) {
      out.insert(tok);
    } else {
      throw Error(ErrorCode::parse, "bad generator '" + tok + "' in allowed set");
    }
  }
  return out;
}

std::vector<Certificate> parse_certificates(std::string_view contents, int genus) {
  std::vector<Certificate> certs;
  std::istringstream in{std::string(contents)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = text::strip_comment(line);
    if (body.empty()) continue;
    const auto fields = text::split(body, '|');
    const auto where = "certificate line " + std::to_string(line_no) + ": ";
    if (fields.size() != 3) throw Error(ErrorCode::parse, where + "expected 3 fields");
    if (!is_generator_name(fields[0])) {
      throw Error(ErrorCode::parse, where + "bad target '" + fields[0] + "'");
    }
    try {
      certs.push_back({fields[0], parse_allowed(fields[1], genus), parse_expr(fields[2])});
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
  }
  return certs;
}

std::vector<Certificate> load_certificates(const std::string& path, int genus) {
  return parse_certificates(text::read_file(path), genus);
}

CertificateResult check_certificate(const Engine& engine, const Certificate& cert,
                                    const std::set<std::string>& allowed) {
  for (const auto& f : cert.expression.factors) {
    if (!allowed.contains(f.name)) {
      throw Error(ErrorCode::validation, "certificate for " + cert.target + " uses '" +
                                             f.name + "' outside the allowed set");
    }
  }
  CertificateResult res;
  const Automorphism lhs = engine.twist(cert.target);
  const Automorphism rhs = engine.evaluate(cert.expression);
  res.holds = lhs == rhs;
  if (!res.holds) {
    res.diagnostic = cert.target + " != " + cert.expression.str() + ", " +
                     describe_difference(lhs, rhs);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Invariant suite

void SuiteReport::merge(const SuiteReport& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string SuiteReport::text(const std::string& title) const {
  std::ostringstream os;
  os << title << ": " << (ok() ? "PASS" : "FAIL") << " (" << checks << " checks, "
     << failures.size() << " failure(s))\n";
  for (const auto& f : failures) os << "  " << f << '\n';
  return os.str();
}

SuiteReport run_invariant_suite(const Engine& engine, std::uint64_t seed,
                                int random_count) {
  SuiteReport rep;
  const int g = engine.genus();
  const Registry& reg = engine.registry();
  const Word delta = boundary_word({g, 1});

  std::vector<std::string> gens;
  for (const auto& e : engine.table().entries()) gens.push_back(e.generator);

  for (const auto& e : engine.table().entries()) {
    const std::string& name = e.generator;
    const Automorphism& t = engine.twist(name);
    const std::string expected_curve = curve_of_generator(name);
    rep.expect(e.curve == expected_curve,
               name + ": table names curve " + e.curve + ", expected " + expected_curve);
    if (!reg.contains(expected_curve)) {
      rep.expect(false, name + ": curve " + expected_curve + " is not registered");
      continue;
    }
    const CurveRecord& rec = reg.curve(expected_curve);
    rep.expect(e.arrow == rec.arrow, name + ": table arrow " + std::to_string(e.arrow) +
                                         " disagrees with registry arrow " +
                                         std::to_string(rec.arrow));
    try {
      const Automorphism derived = dehn_twist(g, rec.normal_coords, rec.arrow);
      std::string detail = describe_difference(t, derived);
      if (!detail.empty() && t == derived.inverse()) detail = "table holds the inverse twist";
      rep.expect(detail.empty(), name + ": table disagrees with the twist along " +
                                     rec.name + " (" + detail + ")");
    } catch (const Error& err) {
      rep.expect(false, name + ": cannot derive twist along " + rec.name + ": " + err.what());
    }
    rep.expect(t.apply(delta) == delta, name + ": boundary word not fixed");
    rep.expect(inverse_pair(t.images(), t.inverse_images()),
               name + ": inverse images unsound");
    rep.expect(CyclicWord(t.apply(rec.pi1_word)) == CyclicWord(rec.pi1_word),
               name + ": does not fix its own curve " + rec.name);
    rep.expect(mod2(abelianize(t)) == mod2_transvection(mod2_class(rec.pi1_word)),
               name + ": mod-2 action is not the transvection along " + rec.name);
  }

  // Pairwise relations.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto cu = curve_of_generator(gens[i]);
      const auto cv = curve_of_generator(gens[j]);
      if (!reg.contains(cu) || !reg.contains(cv)) continue;
      if (intersection_number(reg, cu, cv) != 0) continue;
      const Automorphism& s = engine.twist(gens[i]);
      const Automorphism& t = engine.twist(gens[j]);
      rep.expect(compose(s, t) == compose(t, s),
                 gens[i] + ", " + gens[j] + ": disjoint twists do not commute");
      rep.expect(CyclicWord(s.apply(reg.curve(cv).pi1_word)) == CyclicWord(reg.curve(cv).pi1_word),
                 gens[i] + " moves the disjoint curve " + cv);
      rep.expect(CyclicWord(t.apply(reg.curve(cu).pi1_word)) == CyclicWord(reg.curve(cu).pi1_word),
                 gens[j] + " moves the disjoint curve " + cu);
    }
  }
  std::vector<std::pair<std::string, std::string>> braids;
  for (int i = 1; i + 1 <= g - 1; ++i) {
    braids.emplace_back("a" + std::to_string(i), "a" + std::to_string(i + 1));
  }
  if (g >= 5) braids.emplace_back("a4", "b");
  for (const auto& [u, v] : braids) {
    if (!engine.has_twist(u) || !engine.has_twist(v)) {
      rep.expect(false, u + ", " + v + ": missing from the twist table");
      continue;
    }
    const std::string lhs = u + " " + v + " " + u;
    const std::string rhs = v + " " + u + " " + v;
    rep.expect(engine.evaluate(lhs) == engine.evaluate(rhs),
               "braid relation " + lhs + " = " + rhs + " fails");
  }

  std::mt19937_64 rng(seed);
  for (int k = 0; k < random_count && !gens.empty(); ++k) {
    const auto expr = random_expr(rng, gens, 10);
    const Automorphism a = engine.evaluate(expr);
    rep.expect(a.apply(delta) == delta, "random expression '" + expr.str() +
                                            "' does not fix the boundary word");
    rep.expect(engine.inverse_sound(expr, a),
               "random expression '" + expr.str() + "' has unsound inverse");
  }
  return rep;
}

}  // namespace mcg
