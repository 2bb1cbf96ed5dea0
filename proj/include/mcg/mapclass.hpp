#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/automorphism.hpp"
#include "mcg/surface.hpp"

namespace mcg {

/// Twist generator names: a1..a{g-1}, b, c, e, f, y2. Each is the Dehn twist
/// along one registered curve.
std::string curve_of_generator(std::string_view generator);
std::string generator_of_curve(std::string_view curve);
/// All generator names whose curves exist at this genus, in canonical order.
std::vector<std::string> generator_names(int genus);

struct Factor {
  std::string name;
  int exponent = 1;  // +1 or -1
};

/// Product of twist generators written left to right; the leftmost factor is
/// applied last, so "a1 a2" maps w to a1(a2(w)).
struct MappingClassExpr {
  std::vector<Factor> factors;

  MappingClassExpr inverse() const;
  std::string str() const;
};

/// Tokens `a1`, `a1^-1`, `b`, `e^-1`, `y2`, ... separated by spaces. Parse
/// errors carry the 1-based token number and character column.
MappingClassExpr parse_expr(std::string_view text);
MappingClassExpr concat(const MappingClassExpr& p, const MappingClassExpr& q);

struct TwistEntry {
  std::string generator;
  std::string curve;
  int arrow = 1;
  std::vector<Word> images;
  std::vector<Word> inverse_images;
};

/// Generator images for every twist at one genus. File form:
///
///   genus <g>
///   twist <generator> <curve> <arrow>
///   x1 -> <word>      (g lines)
///   x1 <- <word>      (g lines)
class TwistTable {
 public:
  static TwistTable parse(std::string_view text, int genus);
  static TwistTable load(const std::string& path, int genus);
  /// Computes the table from the registry's normal coordinates and arrows.
  static TwistTable derive(const Registry& registry);

  int genus() const { return genus_; }
  const std::vector<TwistEntry>& entries() const { return entries_; }
  bool contains(std::string_view generator) const;
  const TwistEntry& entry(std::string_view generator) const;

  /// Reverses the twist direction of one generator: negates its arrow tag
  /// and swaps images with inverse images.
  void flip(std::string_view generator);
  void replace(const TwistEntry& e);

  std::string str() const;

 private:
  int genus_ = 0;
  std::vector<TwistEntry> entries_;
};

enum class Handedness {
  /// If the table satisfies f = phi e phi^-1 instead of f = phi e^-1 phi^-1,
  /// flip f (table and registry) at load time.
  normalize,
  /// Use the data exactly as given.
  strict,
};

/// Registry plus twist table for one genus, with every twist materialized as
/// a checked Automorphism. Computations are on N_{g,1}.
class Engine {
 public:
  Engine(Registry registry, TwistTable table,
         Handedness mode = Handedness::normalize);

  int genus() const { return registry_.genus(); }
  const Registry& registry() const { return registry_; }
  const TwistTable& table() const { return table_; }
  /// Non-empty when load-time normalization changed the data.
  const std::string& normalization_note() const { return note_; }

  bool has_twist(std::string_view generator) const;
  const Automorphism& twist(std::string_view generator) const;

  Automorphism evaluate(const MappingClassExpr& expr) const;
  Automorphism evaluate(std::string_view expr) const { return evaluate(parse_expr(expr)); }
  CyclicWord apply_to_curve(const MappingClassExpr& expr, std::string_view curve) const;

  /// Checks images o inverse_images = identity (both ways) for an evaluated
  /// expression. Words are pushed through one factor at a time, which is
  /// exact and avoids substituting long images into long words.
  bool inverse_sound(const MappingClassExpr& expr, const Automorphism& a) const;

 private:
  void build();
  void normalize_handedness();

  Registry registry_;
  TwistTable table_;
  std::map<std::string, Automorphism, std::less<>> twists_;
  std::string note_;
};

/// phi = a3^-1 a2^-1 b a1^-1 a2^-1 a3^-1.
MappingClassExpr key_conjugator();

struct KeyReport {
  int genus = 0;
  bool image_matches = false;  // phi(epsilon) is zeta up to inversion
  bool twist_matches = false;  // f = phi e^-1 phi^-1 exactly
  std::string image;           // class of phi(epsilon)
  std::string diagnostic;

  bool ok() const { return image_matches && twist_matches; }
  std::string text() const;
};

/// Requires genus >= 4.
KeyReport verify_key_conjugation(const Engine& engine);

struct Certificate {
  std::string target;
  std::set<std::string> allowed;
  MappingClassExpr expression;
};

/// `target | allowed-set | expression`; the allowed set is comma separated
/// and `a*` stands for a1..a{g-1}.
std::vector<Certificate> parse_certificates(std::string_view text, int genus);
std::vector<Certificate> load_certificates(const std::string& path, int genus);
std::set<std::string> parse_allowed(std::string_view text, int genus);

struct CertificateResult {
  bool holds = false;
  std::string diagnostic;
};

/// Throws Error(validation) if the expression uses a name outside `allowed`;
/// otherwise compares the evaluated expression with the target twist.
CertificateResult check_certificate(const Engine& engine, const Certificate& cert,
                                    const std::set<std::string>& allowed);

/// Describes the first generator whose images differ, or "" when equal.
std::string describe_difference(const Automorphism& lhs, const Automorphism& rhs);

/// Uniform random expression of 1..max_length factors over the given names.
template <class Rng>
MappingClassExpr random_expr(Rng& rng, const std::vector<std::string>& names,
                             int max_length);

struct SuiteReport {
  int checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void merge(const SuiteReport& other);
  std::string text(const std::string& title) const;
};

/// Table/registry agreement, boundary invariance, inverse soundness,
/// own-curve fixing, disjointness, braid and commutation relations, mod-2
/// transvection shape, and `random_count` random expressions fixing delta.
SuiteReport run_invariant_suite(const Engine& engine, std::uint64_t seed,
                                int random_count = 200);

}  // namespace mcg

#include "mcg/detail/random_expr.hpp"
