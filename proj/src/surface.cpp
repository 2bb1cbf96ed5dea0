#include "mcg/surface.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "mcg/error.hpp"
#include "text.hpp"

namespace mcg {

void SurfaceSpec::require(int min_genus) const {
  if (boundary != 0 && boundary != 1) {
    throw Error(ErrorCode::precondition,
                "boundary count must be 0 or 1, got " + std::to_string(boundary));
  }
  if (genus < min_genus) {
    throw Error(ErrorCode::precondition,
                "genus must be at least " + std::to_string(min_genus) +
                    ", got " + std::to_string(genus));
  }
}

Word boundary_word(const SurfaceSpec& spec) {
  spec.require(1);
  if (spec.boundary == 0) {
    throw Error(ErrorCode::precondition,
                "the boundary word exists only for n = 1; closed surfaces are "
                "computed on N_{g,1} and capped");
  }
  std::vector<Letter> letters;
  for (int i = 1; i <= spec.genus; ++i) {
    letters.push_back(i);
    letters.push_back(i);
  }
  return Word(spec.genus, letters);
}

CurveName CurveName::parse(std::string_view text) {
  text = text::trim(text);
  if (text == "beta") return {CurveKind::beta, 0};
  if (text == "gamma") return {CurveKind::gamma, 0};
  if (text == "epsilon") return {CurveKind::epsilon, 0};
  if (text == "zeta") return {CurveKind::zeta, 0};
  if (text == "psi") return {CurveKind::psi, 0};
  if (text.starts_with("alpha")) {
    auto rest = text.substr(5);
    if (rest.starts_with('_')) rest.remove_prefix(1);
    int index = 0;
    const auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
    if (!rest.empty() && ec == std::errc() && end == rest.data() + rest.size() &&
        index >= 1) {
      return {CurveKind::alpha, index};
    }
  }
  throw Error(ErrorCode::unknown_name, "unknown curve name '" + std::string(text) + "'");
}

std::string CurveName::str() const {
  switch (kind) {
    case CurveKind::alpha: return "alpha_" + std::to_string(index);
    case CurveKind::beta: return "beta";
    case CurveKind::gamma: return "gamma";
    case CurveKind::epsilon: return "epsilon";
    case CurveKind::zeta: return "zeta";
    case CurveKind::psi: return "psi";
  }
  return {};
}

bool CurveName::valid_for(int genus) const {
  if (kind == CurveKind::alpha) return index <= genus - 1;
  return genus >= 4;
}

Registry Registry::parse(std::string_view contents, const SurfaceSpec& spec) {
  spec.require(2);
  Registry reg;
  reg.spec_ = spec;
  std::istringstream in{std::string(contents)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = text::strip_comment(line);
    if (body.empty()) continue;
    const auto where = "registry line " + std::to_string(line_no) + ": ";
    const auto fields = text::split(body, '|');
    if (fields.size() != 4) {
      throw Error(ErrorCode::parse, where + "expected 4 fields separated by '|'");
    }
    CurveName name;
    try {
      name = CurveName::parse(fields[0]);
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
    if (!name.valid_for(spec.genus)) continue;
    CurveRecord rec;
    rec.name = name.str();
    if (reg.contains(rec.name)) {
      throw Error(ErrorCode::validation, where + "duplicate record " + rec.name);
    }
    try {
      rec.pi1_word = parse_word(fields[1], spec.genus);
      rec.normal_coords = parse_crossings(fields[2], spec.genus);
    } catch (const Error& e) {
      throw Error(e.code(), where + rec.name + ": " + e.what());
    }
    if (fields[3] == "+1" || fields[3] == "1") {
      rec.arrow = 1;
    } else if (fields[3] == "-1") {
      rec.arrow = -1;
    } else {
      throw Error(ErrorCode::parse, where + "arrow must be +1 or -1");
    }
    reg.records_.push_back(std::move(rec));
  }
  return reg;
}

Registry Registry::load(const std::string& path, const SurfaceSpec& spec) {
  return parse(text::read_file(path), spec);
}

bool Registry::contains(std::string_view name) const {
  return std::any_of(records_.begin(), records_.end(),
                     [&](const CurveRecord& r) { return r.name == name; });
}

const CurveRecord& Registry::curve(std::string_view text) const {
  const CurveName name = CurveName::parse(text);
  if (!name.valid_for(genus())) {
    throw Error(ErrorCode::out_of_range,
                name.str() + " does not exist for genus " + std::to_string(genus()));
  }
  const std::string canon = name.str();
  for (const auto& r : records_) {
    if (r.name == canon) return r;
  }
  throw Error(ErrorCode::unknown_name, "curve " + canon + " is not registered");
}

void Registry::set_arrow(std::string_view name, int arrow) {
  CurveRecord rec = curve(name);
  rec.arrow = arrow;
  replace(rec);
}

void Registry::replace(const CurveRecord& record) {
  for (auto& r : records_) {
    if (r.name == record.name) {
      r = record;
      return;
    }
  }
  records_.push_back(record);
}

std::string Registry::str() const {
  std::ostringstream os;
  for (const auto& r : records_) {
    os << r.name << " | " << r.pi1_word.str() << " | "
       << format_crossings(r.normal_coords) << " | " << (r.arrow > 0 ? "+1" : "-1")
       << '\n';
  }
  return os.str();
}

std::vector<std::string> parse_curve_set(std::string_view text, int genus) {
  std::string flat(text);
  std::replace(flat.begin(), flat.end(), ',', ' ');
  std::vector<std::string> names;
  auto add = [&](const std::string& n) {
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  };
  for (const auto& tok : text::tokens(flat)) {
    if (tok == "X0") {
      for (int i = 1; i <= genus - 1; ++i) add("alpha_" + std::to_string(i));
      add("beta");
      add("epsilon");
      continue;
    }
    const auto dots = tok.find("..");
    if (dots == std::string::npos) {
      add(CurveName::parse(tok).str());
      continue;
    }
    const CurveName lo = CurveName::parse(tok.substr(0, dots));
    const CurveName hi = CurveName::parse(tok.substr(dots + 2));
    if (lo.kind != CurveKind::alpha || hi.kind != CurveKind::alpha || lo.index > hi.index) {
      throw Error(ErrorCode::parse, "bad curve range '" + tok + "'");
    }
    for (int i = lo.index; i <= hi.index; ++i) add("alpha_" + std::to_string(i));
  }
  return names;
}

std::vector<int> mod2_class(const Word& w) {
  std::vector<int> v;
  for (long long e : w.abelianization()) v.push_back(static_cast<int>(((e % 2) + 2) % 2));
  return v;
}

std::optional<std::vector<int>> configuration_class(std::string_view text, int genus) {
  const CurveName name = CurveName::parse(text);
  if (!name.valid_for(genus)) return std::nullopt;
  std::vector<int> v(static_cast<std::size_t>(genus), 0);
  if (name.kind == CurveKind::alpha) {
    v[static_cast<std::size_t>(name.index - 1)] = 1;
    v[static_cast<std::size_t>(name.index)] = 1;
    return v;
  }
  if (name.kind == CurveKind::beta) {
    for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = 1;
    return v;
  }
  return std::nullopt;
}

namespace {

std::string class_str(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    if (!s.empty()) s += '+';
    s += "x" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

// Expected i(u, v) for the chain alpha_1..alpha_{g-1} plus beta.
std::optional<int> expected_intersection(const CurveName& u, const CurveName& v) {
  if (u.kind == CurveKind::alpha && v.kind == CurveKind::alpha) {
    return std::abs(u.index - v.index) == 1 ? 1 : 0;
  }
  if (u.kind == CurveKind::beta && v.kind == CurveKind::alpha) return v.index == 4 ? 1 : 0;
  if (u.kind == CurveKind::alpha && v.kind == CurveKind::beta) return u.index == 4 ? 1 : 0;
  return std::nullopt;
}

}  // namespace

ValidationReport validate_registry(const Registry& registry) {
  ValidationReport rep;
  const int g = registry.genus();
  auto check = [&](bool ok, const char* name, const std::string& curve,
                   const std::string& detail) {
    ++rep.checks;
    if (!ok) rep.failures.push_back({name, curve, detail});
  };

  std::vector<std::string> required;
  for (int i = 1; i <= g - 1; ++i) required.push_back("alpha_" + std::to_string(i));
  if (g >= 4) required.insert(required.end(), {"beta", "epsilon", "zeta"});
  for (const auto& name : required) {
    check(registry.contains(name), "presence", name, "required curve is missing");
  }

  std::vector<const CurveRecord*> simple;
  for (const auto& r : registry.records()) {
    check(r.pi1_word.exponent_sum() % 2 == 0, "two-sidedness", r.name,
          "exponent sum " + std::to_string(r.pi1_word.exponent_sum()) + " is odd");
    check(r.arrow == 1 || r.arrow == -1, "arrow", r.name, "arrow must be +1 or -1");
    const bool has_coords = !r.normal_coords.empty();
    check(has_coords, "normal-coordinates", r.name, "empty crossing sequence");
    if (!has_coords) continue;
    const auto bigons = bigon_positions(r.normal_coords);
    check(bigons.empty(), "minimal-position", r.name,
          "bigon with the arc system at crossing " +
              (bigons.empty() ? std::string() : std::to_string(bigons.front())));
    const CyclicWord from_coords(word_of(r.normal_coords, g));
    const CyclicWord from_word(r.pi1_word);
    check(from_coords == from_word, "coordinates-vs-word", r.name,
          "normal coordinates read " + from_coords.str() + " but pi1 word is " +
              from_word.str());
    if (!bigons.empty()) continue;
    const Realization real(g, {r.normal_coords});
    const int self = real.crossing_count(0, 0);
    check(self == 0, "simplicity", r.name,
          std::to_string(self) + " self-intersection(s)");
    if (self == 0) simple.push_back(&r);

    if (auto expected = configuration_class(r.name, g)) {
      const auto actual = mod2_class(r.pi1_word);
      check(actual == *expected, "homology", r.name,
            "class " + class_str(actual) + ", expected " + class_str(*expected));
    }
  }

  for (std::size_t a = 0; a < simple.size(); ++a) {
    for (std::size_t b = a + 1; b < simple.size(); ++b) {
      const auto want = expected_intersection(CurveName::parse(simple[a]->name),
                                              CurveName::parse(simple[b]->name));
      if (!want) continue;
      const Realization real(g, {simple[a]->normal_coords, simple[b]->normal_coords});
      const int got = real.crossing_count(0, 1);
      check(got == *want, "intersection", simple[a]->name + "," + simple[b]->name,
            "i = " + std::to_string(got) + ", expected " + std::to_string(*want));
    }
  }
  return rep;
}

std::string ValidationReport::text() const {
  std::ostringstream os;
  os << (ok() ? "registry OK" : "registry INVALID") << " (" << checks
     << " checks, " << failures.size() << " failure(s))\n";
  for (const auto& f : failures) {
    os << "  " << f.check << " [" << f.curve << "]: " << f.detail << '\n';
  }
  return os.str();
}

std::string ValidationReport::structured() const {
  std::ostringstream os;
  os << "status=" << (ok() ? "PASS" : "FAIL") << " checks=" << checks
     << " failures=" << failures.size() << '\n';
  for (const auto& f : failures) {
    os << "failure check=" << f.check << " curve=" << f.curve << '\n';
  }
  return os.str();
}

}  // namespace mcg
