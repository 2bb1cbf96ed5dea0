#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcg/polygon.hpp"
#include "mcg/surface.hpp"

namespace mcg {

struct ComplementComponent {
  int euler_characteristic = 0;
  int boundary_circles = 0;
  bool orientable = true;
  bool is_disk = false;
  int faces = 0;  // cells of the cut polygon making up this component
  bool peripheral = false;  // contains the boundary circle of N_{g,1}
};

/// Surface N_{g,n} cut along a family of curves.
struct ComplementReport {
  int genus = 0;
  int boundary = 1;  // n
  /// Transverse double points among the cut curves.
  int double_points = 0;
  std::vector<ComplementComponent> components;

  int euler_sum() const;
  /// chi(N_{g,n}) = 2 - g - n.
  int surface_euler() const;
  bool has_non_disk() const;
  /// One line per component: chi=<int> boundaries=<int> orientable=<0|1>
  /// disk=<0|1>.
  std::string structured() const;
  std::string table() const;
};

/// Cuts N_{g,n} (n in {0,1}) along simple closed curves given by normal
/// coordinates. The curves are realized simultaneously in minimal position;
/// the closed case caps the boundary circle with a disk afterwards.
ComplementReport cut_surface(int genus, int boundary,
                             const std::vector<CrossingSequence>& curves);

/// Cuts along registered curves; n is taken from the registry's surface.
ComplementReport cut_along(const Registry& registry,
                           const std::vector<std::string>& names);

/// Geometric intersection number of two registered curves, counted from
/// their normal coordinates realized in minimal position.
int intersection_number(const Registry& registry, std::string_view u,
                        std::string_view v);

}  // namespace mcg
