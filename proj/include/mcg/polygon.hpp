#pragma once

// Combinatorial model of N_{g,1} cut open along g disjoint arcs A_1..A_g.
// Arc A_i leaves the boundary, passes once through crosscap i and returns
// next to its start, so cutting along all arcs leaves a disk D. The sides of
// D in counterclockwise order are
//
//   s_0  A_1^-  s_1  A_1^+  s_2  A_2^-  s_3  A_2^+ ...  s_{2g-1}  A_g^+
//
// where s_k are boundary segments and A_i^-, A_i^+ are the two copies of A_i.
// Both copies run in the same direction (twisted gluing). Crossing A_i from
// its minus side to its plus side reads the letter x_i; with this convention
// the boundary reads x_1 x_1 x_2 x_2 ... x_g x_g.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mcg/word.hpp"

namespace mcg {

struct Crossing {
  int arc = 0;   // 1..g
  int sign = 1;  // +1: minus side to plus side

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Normal coordinates of a closed curve: its cyclic crossing sequence.
using CrossingSequence = std::vector<Crossing>;

CrossingSequence crossings_of(const Word& cyclically_reduced);
Word word_of(const CrossingSequence& seq, int genus);
std::string format_crossings(const CrossingSequence& seq);
CrossingSequence parse_crossings(std::string_view text, int genus);

/// Positions of adjacent crossings A_i+ A_i- (or the reverse), cyclically.
/// Each is a bigon with the arc system.
std::vector<std::size_t> bigon_positions(const CrossingSequence& seq);

namespace polygon {

inline int side_count(int genus) { return 4 * genus; }
inline int boundary_side(int k) { return 2 * k; }  // s_k
inline int minus_side(int arc) { return 4 * (arc - 1) + 1; }
inline int plus_side(int arc) { return 4 * (arc - 1) + 3; }
inline bool is_arc_side(int side) { return side % 2 == 1; }
inline int arc_of_side(int side) { return side / 4 + 1; }

/// Side through which a strand enters D right after crossing c.
inline int entry_side(const Crossing& c) {
  return c.sign > 0 ? plus_side(c.arc) : minus_side(c.arc);
}
/// Side through which a strand leaves D right before crossing c.
inline int exit_side(const Crossing& c) {
  return c.sign > 0 ? minus_side(c.arc) : plus_side(c.arc);
}

/// Boundary coordinate: side index plus a parameter in (0,1), increasing
/// counterclockwise around D. Base point for pi_1 sits at 0.5 on s_0.
inline constexpr double base_point = 0.5;

}  // namespace polygon

/// A chord of D, oriented along its curve, between boundary coordinates.
struct Chord {
  int curve = 0;
  std::size_t index = 0;  // chord j runs from crossing j to crossing j+1
  double from = 0;
  double to = 0;
};

/// Simultaneous normal realization of a family of curves in D. Strands on
/// each arc are ordered by comparing their continuations; for simple curves
/// this reproduces the embedding, and for a pair of curves it places them in
/// minimal position with each other.
class Realization {
 public:
  Realization(int genus, std::vector<CrossingSequence> curves);

  int genus() const { return genus_; }
  std::size_t curve_count() const { return curves_.size(); }
  const CrossingSequence& curve(std::size_t c) const { return curves_[c]; }

  /// Parameter in (0,1) of crossing j of curve c along its arc.
  double parameter(std::size_t c, std::size_t j) const { return param_[c][j]; }
  std::size_t strands_on_arc(int arc) const { return on_arc_[arc - 1]; }

  const std::vector<Chord>& chords(std::size_t c) const { return chords_[c]; }

  /// Number of transverse double points between chords of c and d (c != d),
  /// or among the chords of c when c == d.
  int crossing_count(std::size_t c, std::size_t d) const;

 private:
  int genus_;
  std::vector<CrossingSequence> curves_;
  std::vector<std::vector<double>> param_;
  std::vector<std::size_t> on_arc_;
  std::vector<std::vector<Chord>> chords_;
};

bool chords_cross(const Chord& a, const Chord& b);
/// Counterclockwise distance from coordinate a to b on the boundary circle.
double ccw_distance(double a, double b, int genus);

}  // namespace mcg
