#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/polygon.hpp"
#include "mcg/word.hpp"

namespace mcg {

/// N_{g,n}: g crosscaps, n in {0,1} boundary circles.
struct SurfaceSpec {
  int genus = 4;
  int boundary = 1;

  /// Throws Error(precondition) unless genus >= min_genus and n in {0,1}.
  void require(int min_genus) const;
};

/// delta = x1 x1 x2 x2 ... xg xg. Only defined for n = 1; closed surfaces are
/// handled by computing on N_{g,1} and capping the boundary.
Word boundary_word(const SurfaceSpec& spec);

enum class CurveKind { alpha, beta, gamma, epsilon, zeta, psi };

struct CurveName {
  CurveKind kind = CurveKind::alpha;
  int index = 0;  // alpha only

  /// Accepts `alpha_3`, `alpha3`, `beta`, `gamma`, `epsilon`, `zeta`, `psi`.
  static CurveName parse(std::string_view text);
  std::string str() const;
  /// Whether the curve exists on N_{g,n}: alpha_i needs i <= g-1, the others
  /// need g >= 4.
  bool valid_for(int genus) const;

  friend bool operator==(const CurveName&, const CurveName&) = default;
};

struct CurveRecord {
  std::string name;  // canonical form, e.g. alpha_1
  Word pi1_word;
  CrossingSequence normal_coords;
  int arrow = 1;  // orientation of the annulus along the first chord
};

/// Named curves of one surface, read from the `name | pi1_word |
/// normal_coords | arrow` text format. Records that do not exist at this
/// genus are skipped.
class Registry {
 public:
  static Registry parse(std::string_view text, const SurfaceSpec& spec);
  static Registry load(const std::string& path, const SurfaceSpec& spec);

  const SurfaceSpec& spec() const { return spec_; }
  int genus() const { return spec_.genus; }
  const std::vector<CurveRecord>& records() const { return records_; }

  bool contains(std::string_view name) const;
  /// Throws Error(unknown_name) or Error(out_of_range) for a name that does
  /// not exist at this genus.
  const CurveRecord& curve(std::string_view name) const;

  void set_arrow(std::string_view name, int arrow);
  void replace(const CurveRecord& record);

  std::string str() const;

 private:
  SurfaceSpec spec_;
  std::vector<CurveRecord> records_;
};

/// Canonical name list for the curve families accepted on the command line:
/// comma or space separated names, ranges `alpha1..alpha4`, and `X0` for
/// {alpha_1..alpha_{g-1}, beta, epsilon}. The empty string is the empty set.
std::vector<std::string> parse_curve_set(std::string_view text, int genus);

/// Mod-2 homology class of a loop: exponent sums reduced mod 2.
std::vector<int> mod2_class(const Word& w);

/// Class fixed by the chain configuration: x_i + x_{i+1} for alpha_i and
/// x1 + x2 + x3 + x4 for beta; empty for curves without a prescribed class.
std::optional<std::vector<int>> configuration_class(std::string_view name,
                                                    int genus);

struct Diagnostic {
  std::string check;
  std::string curve;
  std::string detail;
};

struct ValidationReport {
  int checks = 0;
  std::vector<Diagnostic> failures;

  bool ok() const { return failures.empty(); }
  std::string text() const;
  std::string structured() const;
};

/// Parity, minimal position, simplicity, coordinate/word agreement, chain
/// intersection pattern and configuration homology classes.
ValidationReport validate_registry(const Registry& registry);

}  // namespace mcg
