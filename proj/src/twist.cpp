#include "mcg/twist.hpp"

#include <algorithm>

#include "mcg/error.hpp"

namespace mcg {

namespace {

struct Hit {
  double distance;  // from the start of the loop chord, along D's boundary
  std::size_t chord;
  int direction;  // +1: traverse the curve forwards at this point
};

// Crossings of the chord a -> b with the curve's chords, in order from a.
std::vector<Hit> hits_along(double a, double b, const Realization& real,
                            int genus) {
  std::vector<Hit> hits;
  const Chord probe{-1, 0, a, b};
  const double span = ccw_distance(a, b, genus);
  for (const Chord& ch : real.chords(0)) {
    if (!chords_cross(probe, ch)) continue;
    // The counterclockwise arc from a to b lies to the right of a -> b.
    const double df = ccw_distance(a, ch.from, genus);
    const bool from_right = df < span;
    const double right_end = from_right ? df : ccw_distance(a, ch.to, genus);
    // Crossing the curve from its left to its right turns left onto it.
    hits.push_back({right_end, ch.index, from_right ? 1 : -1});
  }
  std::sort(hits.begin(), hits.end(),
            [](const Hit& x, const Hit& y) { return x.distance < y.distance; });
  return hits;
}

void append_loop(std::vector<Letter>& out, const CrossingSequence& s,
                 std::size_t chord, int direction) {
  const std::size_t k = s.size();
  std::vector<Letter> loop;
  loop.reserve(k);
  for (std::size_t step = 1; step <= k; ++step) {
    const Crossing& c = s[(chord + step) % k];
    loop.push_back(c.sign * c.arc);
  }
  if (direction < 0) {
    std::reverse(loop.begin(), loop.end());
    for (Letter& l : loop) l = -l;
  }
  out.insert(out.end(), loop.begin(), loop.end());
}

}  // namespace

Word dehn_twist_image(int genus, const Realization& real, int arrow, int i,
                      int power) {
  const CrossingSequence& s = real.curve(0);
  // x_i crosses A_i once, below every strand of the curve.
  const double t = 0.5 / static_cast<double>(real.strands_on_arc(i) + 1);
  const double minus_point = polygon::minus_side(i) + t;
  const double plus_point = polygon::plus_side(i) + t;

  std::vector<Letter> out;
  auto visit = [&](double a, double b) {
    for (const Hit& h : hits_along(a, b, real, genus)) {
      const int local = arrow * (h.chord % 2 == 0 ? 1 : -1);
      append_loop(out, s, h.chord, h.direction * local * power);
    }
  };
  visit(polygon::base_point, minus_point);
  out.push_back(i);
  visit(plus_point, polygon::base_point);
  return Word(genus, out);
}

Automorphism dehn_twist(int genus, const CrossingSequence& curve, int arrow) {
  if (arrow != 1 && arrow != -1) {
    throw Error(ErrorCode::precondition, "twist arrow must be +1 or -1");
  }
  if (curve.empty() || curve.size() % 2 != 0) {
    throw Error(ErrorCode::precondition,
                "Dehn twists need a nontrivial two-sided curve");
  }
  if (!bigon_positions(curve).empty()) {
    throw Error(ErrorCode::precondition,
                "curve is not in minimal position with the arc system");
  }
  const Realization real(genus, {curve});
  if (real.crossing_count(0, 0) != 0) {
    throw Error(ErrorCode::precondition, "curve is not simple");
  }
  std::vector<Word> img, inv;
  for (int i = 1; i <= genus; ++i) {
    img.push_back(dehn_twist_image(genus, real, arrow, i, 1));
    inv.push_back(dehn_twist_image(genus, real, arrow, i, -1));
  }
  return Automorphism(std::move(img), std::move(inv));
}

}  // namespace mcg
