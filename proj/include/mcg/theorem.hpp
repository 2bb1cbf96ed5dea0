#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcg/mapclass.hpp"

namespace mcg {

/// Directory holding registry.txt, certificates.txt and twists/g<g>.tbl:
/// $MCG_DATA_DIR if set, otherwise the directory configured at build time.
std::string default_data_dir();

struct DataPaths {
  std::string registry;
  std::string twist_table;
  std::string certificates;

  static DataPaths in(const std::string& data_dir, int genus);
};

enum class StageStatus { pass, fail, skipped, not_run };

struct StageResult {
  std::string name;
  StageStatus status = StageStatus::not_run;
  std::string detail;
};

struct TheoremReport {
  SurfaceSpec spec;
  std::vector<StageResult> stages;
  std::string note;

  bool passed() const;
  /// Name of the first failing stage, or "" when all mandatory stages pass.
  std::string first_failure() const;
  std::string text() const;
  std::string structured() const;
};

/// Runs, in order: registry validation, the twist-table invariant suite, the
/// key conjugation f = phi e^-1 phi^-1, the certificate for f over
/// {a1..a{g-1}, b, e}, the optional certificates for c and y2 (SKIPPED when
/// absent) and homology smoke tests. Stops at the first failing stage.
/// Closed surfaces (n = 0) are computed on N_{g,1}; every identity found there
/// descends to N_g by capping the boundary.
TheoremReport verify_theorem(const SurfaceSpec& spec, const DataPaths& paths,
                             std::uint64_t seed,
                             Handedness mode = Handedness::normalize);

}  // namespace mcg
