#include "mcg/complement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "mcg/error.hpp"

namespace mcg {

int ComplementReport::euler_sum() const {
  int s = 0;
  for (const auto& c : components) s += c.euler_characteristic;
  return s;
}

int ComplementReport::surface_euler() const { return 2 - genus - boundary; }

bool ComplementReport::has_non_disk() const {
  return std::any_of(components.begin(), components.end(),
                     [](const ComplementComponent& c) { return !c.is_disk; });
}

std::string ComplementReport::structured() const {
  std::ostringstream os;
  for (const auto& c : components) {
    os << "chi=" << c.euler_characteristic << " boundaries=" << c.boundary_circles
       << " orientable=" << (c.orientable ? 1 : 0)
       << " disk=" << (c.is_disk ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string ComplementReport::table() const {
  std::ostringstream os;
  os << "surface N_{" << genus << ',' << boundary << "}, "
     << components.size() << " component(s), " << double_points
     << " double point(s)\n";
  os << "  #   chi  boundaries  orientable  disk  holds-boundary\n";
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    char line[96];
    std::snprintf(line, sizeof line, "  %-3zu %4d  %10d  %10s  %4s  %14s\n", i + 1,
                  c.euler_characteristic, c.boundary_circles,
                  c.orientable ? "yes" : "no", c.is_disk ? "yes" : "no",
                  c.peripheral ? "yes" : "no");
    os << line;
  }
  return os.str();
}

namespace {

enum class EdgeKind { boundary_segment, arc_interval, chord_segment };

struct HalfEdge {
  int origin = -1;
  int twin = -1;
  int next = -1;
  int prev = -1;
  int face = -1;
  EdgeKind kind = EdgeKind::chord_segment;
  bool along_circle = false;  // counterclockwise boundary edge of D
  int side = -1;
  int interval = -1;
  double angle = 0;
};

struct Point {
  double x = 0;
  double y = 0;
};

// Union-find over faces that also tracks orientation parity.
class ParityUnion {
 public:
  explicit ParityUnion(std::size_t n) : parent_(n), parity_(n, 0), odd_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::pair<std::size_t, int> find(std::size_t x) const {
    int p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }
  void join(std::size_t a, std::size_t b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != parity) odd_[ra] = 1;
      return;
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ parity;
    odd_[ra] |= odd_[rb];
  }
  bool non_orientable(std::size_t root) const { return odd_[root] != 0; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<int> odd_;
};

}  // namespace

ComplementReport cut_surface(int genus, int boundary,
                             const std::vector<CrossingSequence>& curves) {
  if (boundary != 0 && boundary != 1) {
    throw Error(ErrorCode::precondition, "boundary count must be 0 or 1");
  }
  for (const auto& c : curves) {
    if (c.empty() || !bigon_positions(c).empty()) {
      throw Error(ErrorCode::precondition,
                  "cut curves must be nontrivial and in minimal position");
    }
  }
  const Realization real(genus, curves);
  for (std::size_t c = 0; c < curves.size(); ++c) {
    if (real.crossing_count(c, c) != 0) {
      throw Error(ErrorCode::precondition, "cut curves must be simple");
    }
  }
  const int sides = polygon::side_count(genus);

  // Boundary vertices: polygon corners and chord endpoints.
  struct BoundaryVertex {
    double coord;
    bool corner;
  };
  std::vector<BoundaryVertex> bv;
  for (int k = 0; k < sides; ++k) bv.push_back({static_cast<double>(k), true});
  struct EndRef {
    std::size_t curve, chord;
    int end;
  };
  std::vector<EndRef> end_refs;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    for (const Chord& ch : real.chords(c)) {
      bv.push_back({ch.from, false});
      end_refs.push_back({c, ch.index, 0});
      bv.push_back({ch.to, false});
      end_refs.push_back({c, ch.index, 1});
    }
  }
  std::vector<std::size_t> order(bv.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return bv[a].coord < bv[b].coord;
  });

  // Vertex positions on the unit circle. Endpoints are jittered inside their
  // slots so that no three chords are concurrent.
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  std::vector<Point> pos;
  std::vector<int> vertex_of(bv.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& v = bv[order[r]];
    double coord = v.coord;
    if (!v.corner) {
      const int side = static_cast<int>(std::floor(coord));
      const double slot =
          1.0 / static_cast<double>(real.strands_on_arc(polygon::arc_of_side(side)) + 1);
      coord += jitter(rng) * slot;
    }
    const double theta = 2 * std::numbers::pi * coord / sides;
    pos.push_back({std::cos(theta), std::sin(theta)});
    vertex_of[order[r]] = static_cast<int>(r);
  }
  const int boundary_vertices = static_cast<int>(order.size());

  std::vector<HalfEdge> he;
  auto add_edge = [&](int u, int v, EdgeKind kind) {
    HalfEdge a, b;
    a.origin = u;
    b.origin = v;
    a.kind = b.kind = kind;
    const int ia = static_cast<int>(he.size());
    a.twin = ia + 1;
    b.twin = ia;
    he.push_back(a);
    he.push_back(b);
    return ia;
  };

  // Boundary circle edges.
  for (int r = 0; r < boundary_vertices; ++r) {
    const auto& v = bv[order[static_cast<std::size_t>(r)]];
    const int side = static_cast<int>(std::floor(v.coord));
    const bool arc = polygon::is_arc_side(side);
    const int e = add_edge(r, (r + 1) % boundary_vertices,
                           arc ? EdgeKind::arc_interval : EdgeKind::boundary_segment);
    int interval = 0;
    if (arc && !v.corner) {
      for (int q = r; q >= 0 && !bv[order[static_cast<std::size_t>(q)]].corner; --q) {
        ++interval;
      }
    }
    for (int h : {e, e + 1}) {
      he[static_cast<std::size_t>(h)].side = side;
      he[static_cast<std::size_t>(h)].interval = interval;
    }
    he[static_cast<std::size_t>(e)].along_circle = true;
  }

  // Chords split at their mutual crossings.
  struct ChordRef {
    std::size_t curve, chord;
    int from_vertex, to_vertex;
    std::vector<std::pair<double, int>> stops;
  };
  std::vector<ChordRef> chords;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> chord_index;
  for (std::size_t k = 0; k < end_refs.size(); k += 2) {
    const auto offset = static_cast<std::size_t>(sides);
    ChordRef cr{end_refs[k].curve, end_refs[k].chord, vertex_of[offset + k],
                vertex_of[offset + k + 1], {}};
    chord_index[{cr.curve, cr.chord}] = chords.size();
    chords.push_back(std::move(cr));
  }
  std::vector<Point> all_pos = pos;
  int double_points = 0;
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      const Chord& ca = real.chords(chords[a].curve)[chords[a].chord];
      const Chord& cb = real.chords(chords[b].curve)[chords[b].chord];
      if (!chords_cross(ca, cb)) continue;
      const Point p = pos[static_cast<std::size_t>(chords[a].from_vertex)];
      const Point q = pos[static_cast<std::size_t>(chords[a].to_vertex)];
      const Point r = pos[static_cast<std::size_t>(chords[b].from_vertex)];
      const Point s = pos[static_cast<std::size_t>(chords[b].to_vertex)];
      const double dx1 = q.x - p.x, dy1 = q.y - p.y;
      const double dx2 = s.x - r.x, dy2 = s.y - r.y;
      const double den = dx1 * dy2 - dy1 * dx2;
      const double t = ((r.x - p.x) * dy2 - (r.y - p.y) * dx2) / den;
      const double u = ((r.x - p.x) * dy1 - (r.y - p.y) * dx1) / den;
      const int v = static_cast<int>(all_pos.size());
      all_pos.push_back({p.x + t * dx1, p.y + t * dy1});
      chords[a].stops.emplace_back(t, v);
      chords[b].stops.emplace_back(u, v);
      ++double_points;
    }
  }
  for (auto& cr : chords) {
    cr.stops.emplace_back(0.0, cr.from_vertex);
    cr.stops.emplace_back(1.0, cr.to_vertex);
    std::sort(cr.stops.begin(), cr.stops.end());
    for (std::size_t k = 0; k + 1 < cr.stops.size(); ++k) {
      add_edge(cr.stops[k].second, cr.stops[k + 1].second, EdgeKind::chord_segment);
    }
  }

  // Rotation system and face tracing (faces lie to the left).
  const std::size_t nv = all_pos.size();
  std::vector<std::vector<int>> out(nv);
  for (std::size_t h = 0; h < he.size(); ++h) {
    const auto& from = all_pos[static_cast<std::size_t>(he[h].origin)];
    const auto& to = all_pos[static_cast<std::size_t>(he[static_cast<std::size_t>(he[h].twin)].origin)];
    he[h].angle = std::atan2(to.y - from.y, to.x - from.x);
    out[static_cast<std::size_t>(he[h].origin)].push_back(static_cast<int>(h));
  }
  std::vector<int> slot(he.size());
  for (auto& list : out) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return he[static_cast<std::size_t>(a)].angle < he[static_cast<std::size_t>(b)].angle;
    });
    for (std::size_t k = 0; k < list.size(); ++k) slot[static_cast<std::size_t>(list[k])] = static_cast<int>(k);
  }
  for (std::size_t h = 0; h < he.size(); ++h) {
    const int t = he[h].twin;
    const auto& list = out[static_cast<std::size_t>(he[static_cast<std::size_t>(t)].origin)];
    const int k = slot[static_cast<std::size_t>(t)];
    const int n = static_cast<int>(list.size());
    he[h].next = list[static_cast<std::size_t>((k - 1 + n) % n)];
    he[static_cast<std::size_t>(he[h].next)].prev = static_cast<int>(h);
  }
  int faces = 0;
  std::vector<bool> outer_face;
  for (std::size_t h = 0; h < he.size(); ++h) {
    if (he[h].face >= 0) continue;
    bool outer = false;
    int cur = static_cast<int>(h);
    do {
      auto& e = he[static_cast<std::size_t>(cur)];
      e.face = faces;
      if (e.kind != EdgeKind::chord_segment && !e.along_circle) outer = true;
      cur = e.next;
    } while (cur != static_cast<int>(h));
    outer_face.push_back(outer);
    ++faces;
  }

  // Glue arc intervals: interval r of A_i^- with interval r of A_i^+.
  std::map<std::tuple<int, int, int>, int> interval_edge;  // (arc, sign, r)
  for (std::size_t h = 0; h < he.size(); ++h) {
    const auto& e = he[h];
    if (e.kind != EdgeKind::arc_interval || !e.along_circle) continue;
    const int arc = polygon::arc_of_side(e.side);
    const int sign = e.side == polygon::minus_side(arc) ? -1 : 1;
    interval_edge[{arc, sign, e.interval}] = static_cast<int>(h);
  }
  ParityUnion uf(static_cast<std::size_t>(faces));
  std::vector<int> partner(he.size(), -1);
  for (const auto& [key, h] : interval_edge) {
    const auto [arc, sign, r] = key;
    if (sign > 0) continue;
    const auto it = interval_edge.find({arc, 1, r});
    if (it == interval_edge.end()) {
      throw Error(ErrorCode::internal, "unmatched arc interval");
    }
    partner[static_cast<std::size_t>(h)] = it->second;
    partner[static_cast<std::size_t>(it->second)] = h;
    uf.join(static_cast<std::size_t>(he[static_cast<std::size_t>(h)].face),
            static_cast<std::size_t>(he[static_cast<std::size_t>(it->second)].face), 1);
  }

  // Components of the cut surface.
  std::map<std::size_t, std::size_t> comp_of_root;
  std::vector<ComplementComponent> comps;
  std::vector<std::size_t> comp_of_face(static_cast<std::size_t>(faces), 0);
  for (int f = 0; f < faces; ++f) {
    if (outer_face[static_cast<std::size_t>(f)]) continue;
    const auto root = uf.find(static_cast<std::size_t>(f)).first;
    auto [it, fresh] = comp_of_root.emplace(root, comps.size());
    if (fresh) {
      comps.push_back({});
      comps.back().orientable = !uf.non_orientable(root);
    }
    comp_of_face[static_cast<std::size_t>(f)] = it->second;
    comps[it->second].faces += 1;
    comps[it->second].euler_characteristic += 1;
  }
  for (const auto& [key, h] : interval_edge) {
    if (std::get<1>(key) < 0) {
      comps[comp_of_face[static_cast<std::size_t>(he[static_cast<std::size_t>(h)].face)]]
          .euler_characteristic -= 1;
    }
  }

  // Boundary circles: walk boundary pieces, crossing glued intervals. The
  // gluing reverses orientation, so the walk alternates direction.
  auto is_piece = [&](int h) {
    const auto& e = he[static_cast<std::size_t>(h)];
    if (outer_face[static_cast<std::size_t>(e.face)]) return false;
    return e.kind == EdgeKind::chord_segment ||
           (e.kind == EdgeKind::boundary_segment && e.along_circle);
  };
  std::vector<bool> seen(he.size(), false);
  std::size_t boundary_component = comps.size();
  for (std::size_t h0 = 0; h0 < he.size(); ++h0) {
    if (!is_piece(static_cast<int>(h0)) || seen[h0]) continue;
    int h = static_cast<int>(h0);
    bool ccw = true;
    bool touches_boundary = false;
    while (!seen[static_cast<std::size_t>(h)]) {
      seen[static_cast<std::size_t>(h)] = true;
      if (he[static_cast<std::size_t>(h)].kind == EdgeKind::boundary_segment) {
        touches_boundary = true;
      }
      const auto& e = he[static_cast<std::size_t>(h)];
      int step = ccw ? e.next : e.prev;
      if (he[static_cast<std::size_t>(step)].kind == EdgeKind::arc_interval) {
        const int glued = partner[static_cast<std::size_t>(step)];
        step = ccw ? he[static_cast<std::size_t>(glued)].prev
                   : he[static_cast<std::size_t>(glued)].next;
        ccw = !ccw;
      }
      if (!is_piece(step)) throw Error(ErrorCode::internal, "boundary walk lost");
      h = step;
    }
    if (h != static_cast<int>(h0)) {
      throw Error(ErrorCode::internal, "boundary walk did not close");
    }
    const std::size_t comp =
        comp_of_face[static_cast<std::size_t>(he[h0].face)];
    comps[comp].boundary_circles += 1;
    if (touches_boundary) boundary_component = comp;
  }

  if (boundary_component < comps.size()) {
    if (boundary == 0) {
      comps[boundary_component].euler_characteristic += 1;
      comps[boundary_component].boundary_circles -= 1;
    } else {
      comps[boundary_component].peripheral = true;
    }
  }
  for (auto& c : comps) {
    c.is_disk = c.euler_characteristic == 1 && c.boundary_circles == 1 &&
                c.orientable;
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const ComplementComponent& a, const ComplementComponent& b) {
                     if (a.euler_characteristic != b.euler_characteristic)
                       return a.euler_characteristic < b.euler_characteristic;
                     if (a.boundary_circles != b.boundary_circles)
                       return a.boundary_circles < b.boundary_circles;
                     if (a.orientable != b.orientable) return a.orientable < b.orientable;
                     return a.peripheral < b.peripheral;
                   });

  ComplementReport report;
  report.genus = genus;
  report.boundary = boundary;
  report.double_points = double_points;
  report.components = std::move(comps);
  return report;
}

ComplementReport cut_along(const Registry& registry,
                           const std::vector<std::string>& names) {
  std::vector<CrossingSequence> curves;
  for (const auto& n : names) curves.push_back(registry.curve(n).normal_coords);
  return cut_surface(registry.genus(), registry.spec().boundary, curves);
}

int intersection_number(const Registry& registry, std::string_view u,
                        std::string_view v) {
  const CurveRecord& a = registry.curve(u);
  const CurveRecord& b = registry.curve(v);
  if (a.name == b.name) return 0;
  const Realization real(registry.genus(), {a.normal_coords, b.normal_coords});
  return real.crossing_count(0, 1);
}

}  // namespace mcg
