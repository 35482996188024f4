#include "gyrolab/foldsim.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <nlohmann/json.hpp>
#include <set>

namespace gyrolab {

bool ClosureReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

Q2 ClosureReport::max_residual() const {
  Q2 worst;
  for (const auto& c : checks) worst = std::max(worst, c.residual);
  return worst;
}

bool is_exact_square(const PlacedSquare& s, const Q2& edge) {
  const Q2 e2 = edge * edge;
  for (int i = 0; i < 4; ++i)
    if (norm2(s.corners[(i + 1) % 4] - s.corners[i]) != e2) return false;
  return norm2(s.corners[2] - s.corners[0]) == Q2(2) * e2 &&
         norm2(s.corners[3] - s.corners[1]) == Q2(2) * e2;
}

std::pair<Point3, Point3> side_points(const PlacedSquare& s, Side side) {
  const int i = static_cast<int>(side);
  return {s.corners[i], s.corners[(i + 1) % 4]};
}

Solid assembly_target(int gyration) {
  return gyration % 90 == 0 ? Solid::rhombicuboctahedron : Solid::pseudo_rhombicuboctahedron;
}

namespace {

using Motion = RigidMotion<Q2>;

std::string label(const NetSpec& net, int id) {
  const NetSquare& s = net.squares.at(id);
  return fmt::format("{} {}", piece_name(s.piece), s.index + 1);
}

void check_id(const NetSpec& net, int id, const char* what) {
  if (id < 0 || id >= static_cast<int>(net.squares.size()))
    throw std::invalid_argument(fmt::format("{} refers to unknown square {}", what, id));
}

Motion hinge(const NetSquare& parent, const NetSquare& child, int fold_target, const Q2& L) {
  const int dx = child.pos.x - parent.pos.x, dy = child.pos.y - parent.pos.y;
  if (std::abs(dx) + std::abs(dy) != 1 || parent.piece != child.piece)
    throw std::invalid_argument("crease joins squares that are not edge neighbours");
  // Axis z x w turns the child (direction w) towards -z.
  const Point3 axis(Q2(-dy), Q2(dx), Q2(0));
  Mat3<Q2> r;
  try {
    r = exact_rotation(axis, 180 - fold_target);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        fmt::format("crease angle {} has no exact trigonometry", fold_target));
  }
  const Point3 on_line(Q2(std::max(parent.pos.x, child.pos.x)) * L,
                       Q2(std::max(parent.pos.y, child.pos.y)) * L, Q2(0));
  return {r, on_line - r * on_line};
}

Motion piece_pose(Piece piece, int gyration, const Q2& L) {
  const Q2 s = L * Q2::rational(1, 2);
  const Q2 h = polar_height(L);
  Motion m;
  switch (piece) {
    case Piece::strip:
      // Net x stays x, net y becomes height, the printed side faces -y.
      m.linear = Mat3<Q2>::from_columns(Point3(Q2(1), Q2(0), Q2(0)),
                                        Point3(Q2(0), Q2(0), Q2(1)),
                                        Point3(Q2(0), Q2(-1), Q2(0)));
      m.offset = Point3(-s, -h, -s);
      return m;
    case Piece::cap_north: {
      m.offset = Point3(-s, -s, h);
      const Motion turn{exact_rotation(Point3(Q2(0), Q2(0), Q2(1)), gyration), Point3()};
      return turn * m;
    }
    case Piece::cap_south:
      m.linear = exact_rotation(Point3(Q2(1), Q2(0), Q2(0)), 180);
      m.offset = Point3(-s, s, -h);
      return m;
  }
  return m;
}

// Squared distance from p to the closed square (c0, c1, c3 span it).
Q2 distance2_to_square(const PlacedSquare& host, const Point3& p) {
  const Point3 e1 = host.corners[1] - host.corners[0];
  const Point3 e2 = host.corners[3] - host.corners[0];
  const Q2 len2 = norm2(e1);
  auto clamp01 = [](Q2 t) { return std::clamp(t, Q2(0), Q2(1)); };
  const Point3 d = p - host.corners[0];
  const Q2 t1 = clamp01(dot(d, e1) / len2);
  const Q2 t2 = clamp01(dot(d, e2) / len2);
  return norm2(p - (host.corners[0] + e1 * t1 + e2 * t2));
}

Q2 distance2_to_nearest(const Point3& p, const std::vector<Point3>& pts) {
  Q2 best = norm2(p - pts.front());
  for (const auto& q : pts) best = std::min(best, norm2(p - q));
  return best;
}

}  // namespace

ClosureReport check_closure(const NetSpec& net, const std::vector<PlacedSquare>& squares) {
  ClosureReport report;
  for (const GlueInstruction& g : net.gluing) {
    check_id(net, g.square, "gluing instruction");
    check_id(net, g.host, "gluing instruction");
    const PlacedSquare& a = squares.at(g.square);
    const PlacedSquare& b = squares.at(g.host);
    ClosureCheck c;
    c.ok = true;
    auto fail = [&](const Point3& p, const Q2& d2) {
      if (c.ok || d2 > c.residual) {
        c.residual = d2;
        c.witness = p;
      }
      c.ok = false;
    };
    if (g.kind == GlueInstruction::Kind::overlap) {
      const bool lap = net.squares[g.square].piece == net.squares[g.host].piece;
      c.name = fmt::format("{}: {} on {}", lap ? "lap joint" : "tab", label(net, g.square),
                           label(net, g.host));
      const std::vector<Point3> host_corners(b.corners.begin(), b.corners.end());
      for (const Point3& p : a.corners) {
        const Q2 d2 = lap ? distance2_to_nearest(p, host_corners) : distance2_to_square(b, p);
        if (!d2.is_zero()) fail(p, d2);
      }
      // Same side out: a lap or tab facing the other way is not glued flat.
      if (c.ok && !parallel(a.normal, b.normal, 0.0)) fail(a.corners[0], Q2(0));
      if (c.ok && dot(a.normal, b.normal).sign() < 0) fail(a.corners[0], Q2(0));
    } else {
      c.name = fmt::format("edge: {} {} to {} {}", label(net, g.square), side_name(g.square_edge),
                           label(net, g.host), side_name(g.host_edge));
      const auto [p0, p1] = side_points(a, g.square_edge);
      const auto [q0, q1] = side_points(b, g.host_edge);
      for (const Point3& p : {p0, p1}) {
        const Q2 d2 = distance2_to_nearest(p, {q0, q1});
        if (!d2.is_zero()) fail(p, d2);
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

MatchResult match_assembly(const NetSpec& net, const std::vector<PlacedSquare>& squares,
                           const Polyhedron& target) {
  MatchResult m;
  std::set<int> used;
  std::vector<Point3> corners;
  for (const NetSquare& s : net.squares) {
    if (s.role == SquareRole::glue) continue;
    const PlacedSquare& ps = squares.at(s.id);
    corners.insert(corners.end(), ps.corners.begin(), ps.corners.end());
    std::optional<int> found;
    for (int f = 0; f < static_cast<int>(target.num_faces()) && !found; ++f) {
      const Face& face = target.faces()[f];
      if (face.size() != 4) continue;
      // Same cycle, same direction: corners are counterclockwise from outside.
      for (int r = 0; r < 4 && !found; ++r) {
        bool same = true;
        for (int i = 0; i < 4 && same; ++i)
          same = target.vertices()[face[(r + i) % 4]] == ps.corners[i];
        if (same) found = f;
      }
    }
    if (!found) {
      m.problems.push_back(fmt::format("{} matches no face", label(net, s.id)));
      for (const Point3& p : ps.corners)
        m.residual = std::max(m.residual, distance2_to_nearest(p, target.vertices()));
      continue;
    }
    if (!used.insert(*found).second)
      m.problems.push_back(fmt::format("{} lands on face {} twice", label(net, s.id), *found));
    m.correspondence[s.id] = *found;
  }
  int quads = 0;
  for (const Face& f : target.faces()) quads += f.size() == 4;
  if (static_cast<int>(used.size()) != quads)
    m.problems.push_back(fmt::format("{} of {} quads covered", used.size(), quads));
  std::sort(corners.begin(), corners.end(), lex_less<Q2>);
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  auto verts = target.vertices();
  std::sort(verts.begin(), verts.end(), lex_less<Q2>);
  if (corners != verts) m.problems.push_back("corner set differs from the vertex set");
  m.matched = m.problems.empty();
  return m;
}

AssemblyResult fold(const NetSpec& net, int gyration) {
  if (gyration % 45 != 0) throw std::invalid_argument("gyration must be a multiple of 45");
  if (net.edge_len.sign() <= 0) throw std::invalid_argument("edge length must be positive");
  const Q2& L = net.edge_len;
  const std::size_t n = net.squares.size();

  std::vector<std::optional<Motion>> flat_to_piece(n);
  std::vector<std::vector<const Crease*>> children(n);
  for (const Crease& c : net.creases) {
    check_id(net, c.parent, "crease");
    check_id(net, c.child, "crease");
    children[c.parent].push_back(&c);
  }
  for (Piece piece : {Piece::strip, Piece::cap_north, Piece::cap_south}) {
    const int root = net.square_id(piece, 0);
    flat_to_piece[root] = Motion{};
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int p = queue.front();
      queue.pop_front();
      for (const Crease* c : children[p]) {
        if (flat_to_piece[c->child]) throw std::invalid_argument("creases do not form a tree");
        flat_to_piece[c->child] =
            *flat_to_piece[p] * hinge(net.squares[p], net.squares[c->child], c->fold_target, L);
        queue.push_back(c->child);
      }
    }
  }

  AssemblyResult result;
  result.gyration = gyration;
  result.target = assembly_target(gyration);
  for (const NetSquare& s : net.squares) {
    if (!flat_to_piece[s.id])
      throw std::invalid_argument(fmt::format("{} is not reached by any crease", label(net, s.id)));
    const Motion m = piece_pose(s.piece, gyration, L) * *flat_to_piece[s.id];
    const Q2 x(s.pos.x), y(s.pos.y);
    PlacedSquare ps;
    ps.square = s.id;
    ps.corners = {m(Point3(x * L, y * L, Q2(0))), m(Point3((x + 1) * L, y * L, Q2(0))),
                  m(Point3((x + 1) * L, (y + 1) * L, Q2(0))),
                  m(Point3(x * L, (y + 1) * L, Q2(0)))};
    ps.normal = cross(ps.corners[1] - ps.corners[0], ps.corners[3] - ps.corners[0]);
    result.squares.push_back(ps);
  }

  result.closure = check_closure(net, result.squares);
  const MatchResult match = match_assembly(net, result.squares, build_solid(result.target, L));
  result.matched = match.matched;
  result.correspondence = match.correspondence;
  result.problems = match.problems;
  // World targets were looked up for the net's own gyration.
  if (net.gyration == gyration) {
    for (const auto& [id, face] : match.correspondence) {
      const auto& expected = net.squares[id].world_target;
      if (expected && *expected != face) {
        result.problems.push_back(fmt::format("{} landed on face {}, net says {}",
                                              label(net, id), face, *expected));
        result.matched = false;
      }
    }
  }
  result.residual = std::max(result.closure.max_residual(), match.residual);
  return result;
}

namespace {

nlohmann::ordered_json point_json(const Point3& p) {
  return {p.x.to_string(), p.y.to_string(), p.z.to_string()};
}

}  // namespace

std::string assembly_json(const NetSpec& net, const AssemblyResult& r) {
  nlohmann::ordered_json j;
  j["schema"] = "gyrolab/1";
  j["edge"] = net.edge_len.to_string();
  j["gyration"] = r.gyration;
  j["target"] = solid_name(r.target);
  j["matched"] = r.matched;
  j["closed"] = r.closure.ok();
  j["residual"] = r.residual.to_string();
  auto& checks = j["closure"] = nlohmann::ordered_json::array();
  for (const auto& c : r.closure.checks) {
    nlohmann::ordered_json e{{"check", c.name}, {"ok", c.ok}, {"residual", c.residual.to_string()}};
    if (c.witness) e["witness"] = point_json(*c.witness);
    checks.push_back(std::move(e));
  }
  j["problems"] = r.problems;
  auto& sq = j["squares"] = nlohmann::ordered_json::array();
  for (const PlacedSquare& ps : r.squares) {
    const NetSquare& s = net.squares[ps.square];
    nlohmann::ordered_json e{{"piece", piece_name(s.piece)},
                             {"index", s.index},
                             {"role", role_name(s.role)}};
    auto& c = e["corners"] = nlohmann::ordered_json::array();
    for (const Point3& p : ps.corners) c.push_back(point_json(p));
    const auto it = r.correspondence.find(ps.square);
    e["face"] = nullptr;
    if (it != r.correspondence.end()) e["face"] = it->second;
    sq.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

Polyhedron assembly_mesh(const NetSpec& net, const AssemblyResult& r) {
  std::vector<Point3> verts;
  std::vector<Face> faces;
  for (const PlacedSquare& ps : r.squares) {
    if (net.squares[ps.square].role == SquareRole::glue) continue;
    Face f;
    for (const Point3& p : ps.corners) {
      auto it = std::find(verts.begin(), verts.end(), p);
      if (it == verts.end()) it = verts.insert(verts.end(), p);
      f.push_back(static_cast<int>(it - verts.begin()));
    }
    faces.push_back(std::move(f));
  }
  return {std::move(verts), std::move(faces)};
}

}  // namespace gyrolab
