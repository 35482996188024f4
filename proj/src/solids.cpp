#include "gyrolab/solids.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gyrolab {

std::string solid_name(Solid s) {
  return s == Solid::rhombicuboctahedron ? "rhombicuboctahedron"
                                         : "pseudo-rhombicuboctahedron";
}

std::string solid_short_name(Solid s) {
  return s == Solid::rhombicuboctahedron ? "rco" : "pseudo-rco";
}

std::vector<std::string> solid_short_names() { return {"rco", "pseudo-rco"}; }

Solid parse_solid(std::string_view name) {
  for (Solid s : {Solid::rhombicuboctahedron, Solid::pseudo_rhombicuboctahedron}) {
    if (name == solid_short_name(s) || name == solid_name(s)) return s;
  }
  throw std::invalid_argument("unknown solid '" + std::string(name) +
                              "'; valid solids: rco, pseudo-rco");
}

namespace {

// Orders the vertices of one face counterclockwise around the outward
// normal, using exact half-plane and orientation tests only.
void order_ccw(std::vector<int>& face, const std::vector<Point3>& pts,
               const Point3& normal) {
  Point3 center;
  for (int v : face) center += pts[v];
  center = center / Q2(static_cast<int>(face.size()));
  const Point3 ref = pts[face[0]] - center;
  auto half = [&](const Point3& d) {
    const int s = dot(normal, cross(ref, d)).sign();
    if (s > 0) return 0;
    if (s == 0 && dot(ref, d).sign() > 0) return 0;
    return 1;
  };
  std::sort(face.begin(), face.end(), [&](int a, int b) {
    const Point3 da = pts[a] - center;
    const Point3 db = pts[b] - center;
    const int ha = half(da);
    const int hb = half(db);
    if (ha != hb) return ha < hb;
    return dot(normal, cross(da, db)).sign() > 0;
  });
  std::rotate(face.begin(), std::min_element(face.begin(), face.end()), face.end());
}

}  // namespace

Polyhedron hull_of_extreme_points(std::vector<Point3> pts) {
  const int n = static_cast<int>(pts.size());
  std::set<std::vector<int>> seen;
  std::vector<Face> faces;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Point3 normal = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (is_zero_vec(normal, 0)) continue;
        int above = 0, below = 0;
        std::vector<int> on_plane;
        for (int m = 0; m < n; ++m) {
          const int s = dot(normal, pts[m] - pts[i]).sign();
          if (s > 0) ++above;
          else if (s < 0) ++below;
          else on_plane.push_back(m);
        }
        if (above && below) continue;
        if (above) normal = -normal;
        if (!seen.insert(on_plane).second) continue;
        order_ccw(on_plane, pts, normal);
        faces.push_back(std::move(on_plane));
      }
    }
  }
  if (faces.size() < 4) throw std::invalid_argument("points are coplanar");
  std::sort(faces.begin(), faces.end());
  return {std::move(pts), std::move(faces)};
}

Q2 polar_height(const Q2& edge) {
  return (Q2(1) + Q2::sqrt2()) * edge / Q2(2);
}

Polyhedron build_rhombicuboctahedron(const Q2& edge) {
  if (edge.sign() <= 0) throw std::invalid_argument("edge length must be positive");
  const Q2 s = edge / Q2(2);
  const Q2 h = polar_height(edge);
  std::vector<Point3> pts;
  for (int axis = 0; axis < 3; ++axis) {
    for (int sx : {-1, 1}) {
      for (int sy : {-1, 1}) {
        for (int sz : {-1, 1}) {
          Point3 p(Q2(sx) * s, Q2(sy) * s, Q2(sz) * s);
          p[axis] = Q2(p[axis].sign()) * h;
          pts.push_back(p);
        }
      }
    }
  }
  std::sort(pts.begin(), pts.end(), lex_less<Q2>);
  return hull_of_extreme_points(std::move(pts));
}

Polyhedron build_pseudo_rhombicuboctahedron(const Q2& edge) {
  const Polyhedron rco = build_rhombicuboctahedron(edge);
  const Q2 s = edge / Q2(2);
  const Q2 h = polar_height(edge);
  const Mat3<Q2> turn = exact_rotation(Point3(0, 0, 1), 45);

  std::vector<Point3> verts = rco.vertices();
  for (auto& v : verts) {
    if (v.z == h) v = turn * v;
  }
  std::map<Point3, int, decltype(&lex_less<Q2>)> index_of(&lex_less<Q2>);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) index_of.emplace(verts[i], i);

  std::vector<Face> faces;
  for (const Face& f : rco.faces()) {
    const bool in_cap = std::all_of(f.begin(), f.end(), [&](int v) {
      return !(rco.vertices()[v].z < s);
    });
    if (!in_cap) {
      faces.push_back(f);
      continue;
    }
    Face moved;
    for (int v : f) {
      const auto it = index_of.find(turn * rco.vertices()[v]);
      if (it == index_of.end()) {
        throw std::logic_error("gyrated cap vertex has no counterpart");
      }
      moved.push_back(it->second);
    }
    faces.push_back(std::move(moved));
  }
  return {std::move(verts), std::move(faces)};
}

Polyhedron build_solid(Solid s, const Q2& edge) {
  return s == Solid::rhombicuboctahedron ? build_rhombicuboctahedron(edge)
                                         : build_pseudo_rhombicuboctahedron(edge);
}

}  // namespace gyrolab
