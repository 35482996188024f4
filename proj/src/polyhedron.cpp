#include "gyrolab/polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gyrolab {

template <class S>
BasicPolyhedron<S>::BasicPolyhedron(std::vector<Point> vertices,
                                    std::vector<Face> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  const int nv = static_cast<int>(vertices_.size());
  vertex_faces_.assign(vertices_.size(), {});
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    const Face& face = faces_[f];
    std::set<int> seen;
    bool bad = face.size() < 3;
    for (int v : face) {
      if (v < 0 || v >= nv || !seen.insert(v).second) bad = true;
    }
    if (bad) {
      bad_faces_.push_back(f);
      continue;
    }
    const int n = static_cast<int>(face.size());
    for (int i = 0; i < n; ++i) {
      const int a = face[i];
      const int b = face[(i + 1) % n];
      vertex_faces_[a].push_back(f);
      // A repeated directed edge keeps its first face; validate() flags it.
      directed_.emplace(std::pair{a, b}, f);
      const auto key = std::minmax(a, b);
      auto [it, inserted] =
          edge_lookup_.emplace(key, static_cast<int>(edges_.size()));
      if (inserted) edges_.push_back(Edge{key.first, key.second, {}});
      edges_[it->second].faces.push_back(f);
    }
  }
}

template <class S>
std::optional<int> BasicPolyhedron<S>::edge_index(int a, int b) const {
  auto it = edge_lookup_.find(std::minmax(a, b));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

template <class S>
std::optional<int> BasicPolyhedron<S>::face_with_directed_edge(int a,
                                                               int b) const {
  auto it = directed_.find({a, b});
  if (it == directed_.end()) return std::nullopt;
  return it->second;
}

template <class S>
auto BasicPolyhedron<S>::face_center(int f) const -> Point {
  const Face& face = faces_.at(f);
  Point c;
  for (int v : face) c += vertices_[v];
  return c / S(static_cast<int>(face.size()));
}

template <class S>
auto BasicPolyhedron<S>::face_normal(int f) const -> Point {
  const Face& face = faces_.at(f);
  Point n;
  const std::size_t k = face.size();
  for (std::size_t i = 0; i < k; ++i) {
    n += cross(vertices_[face[i]], vertices_[face[(i + 1) % k]]);
  }
  return n;
}

template <class S>
auto BasicPolyhedron<S>::edge_midpoint(int e) const -> Point {
  const Edge& edge = edges_.at(e);
  return (vertices_[edge.u] + vertices_[edge.v]) / S(2);
}

template <class S>
auto BasicPolyhedron<S>::centroid() const -> Point {
  Point c;
  if (vertices_.empty()) return c;
  for (const Point& v : vertices_) c += v;
  return c / S(static_cast<int>(vertices_.size()));
}

namespace {

template <class S>
Vec3<S> unit_if_float(const Vec3<S>& n) {
  if constexpr (is_exact_v<S>) {
    return n;
  } else {
    const double len = std::sqrt(norm2(n));
    return len > 0 ? n / len : n;
  }
}

}  // namespace

template <class S>
ValidationReport validate_impl(const BasicPolyhedron<S>& p, double eps) {
  ValidationReport r;
  r.euler = p.euler_characteristic();
  for (int f : p.bad_faces()) {
    r.indices_ok = false;
    r.issues.push_back("face " + std::to_string(f) +
                       ": fewer than 3 vertices, dangling or repeated index");
  }

  for (const Edge& e : p.edges()) {
    if (e.faces.size() == 1) {
      r.manifold = false;
      r.open_edges.emplace_back(e.u, e.v);
    } else if (e.faces.size() > 2) {
      r.manifold = false;
      r.overloaded_edges.emplace_back(e.u, e.v);
    } else {
      // Exactly one face must traverse u -> v and the other v -> u.
      auto fw = p.face_with_directed_edge(e.u, e.v);
      auto bw = p.face_with_directed_edge(e.v, e.u);
      if (!fw || !bw || *fw == *bw) r.winding_consistent = false;
    }
  }
  if (!r.open_edges.empty()) {
    r.issues.push_back(std::to_string(r.open_edges.size()) + " open edges");
  }
  if (!r.overloaded_edges.empty()) {
    r.issues.push_back(std::to_string(r.overloaded_edges.size()) +
                       " edges shared by more than two faces");
  }
  if (!r.winding_consistent) r.issues.push_back("inconsistent face winding");

  const std::set<int> bad(p.bad_faces().begin(), p.bad_faces().end());
  const auto centroid = p.centroid();
  const auto& verts = p.vertices();
  for (int f = 0; f < static_cast<int>(p.num_faces()); ++f) {
    if (bad.count(f)) continue;
    const Face& face = p.faces()[f];
    const auto n = unit_if_float(p.face_normal(f));
    const auto& anchor = verts[face[0]];
    for (int v : face) {
      if (!is_zero(dot(n, verts[v] - anchor), eps)) {
        if (r.planar) r.issues.push_back("face " + std::to_string(f) + " is not planar");
        r.planar = false;
        break;
      }
    }
    if (sign_of(dot(n, p.face_center(f) - centroid), eps) <= 0) {
      if (r.outward) r.issues.push_back("face " + std::to_string(f) + " is not outward facing");
      r.outward = false;
    }
    const std::set<int> on_face(face.begin(), face.end());
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
      if (on_face.count(v)) continue;
      if (sign_of(dot(n, verts[v] - anchor), eps) > 0) {
        if (r.convex) {
          r.issues.push_back("vertex " + std::to_string(v) +
                             " lies outside the plane of face " + std::to_string(f));
        }
        r.convex = false;
        break;
      }
    }
  }
  if (r.euler != 2) {
    r.issues.push_back("Euler characteristic is " + std::to_string(r.euler));
  }
  return r;
}

ValidationReport validate(const Polyhedron& p, Tolerance) {
  return validate_impl(p, 0.0);
}

ValidationReport validate(const FloatPolyhedron& p, Tolerance tol) {
  return validate_impl(normalize_float_mesh(p), tol.eps);
}

template <class S>
FaceCensus face_census(const BasicPolyhedron<S>& p) {
  FaceCensus c;
  for (const Face& f : p.faces()) {
    if (f.size() == 3) ++c.triangles;
    else if (f.size() == 4) ++c.quads;
    else ++c.other;
  }
  return c;
}

template <class S>
std::vector<int> vertex_figure(const BasicPolyhedron<S>& p, int v) {
  if (v < 0 || v >= static_cast<int>(p.num_vertices())) {
    throw std::out_of_range("unknown vertex index " + std::to_string(v));
  }
  const auto& around = p.faces_at(v);
  if (around.empty()) {
    throw std::runtime_error("vertex " + std::to_string(v) + " has no faces");
  }
  auto next_after = [&](int f) {
    const Face& face = p.faces()[f];
    const auto it = std::find(face.begin(), face.end(), v);
    const auto pos = static_cast<std::size_t>(it - face.begin());
    return face[(pos + 1) % face.size()];
  };
  std::vector<int> degrees;
  int f = around.front();
  for (std::size_t step = 0; step <= around.size(); ++step) {
    degrees.push_back(static_cast<int>(p.faces()[f].size()));
    // The next face around v traverses the edge (next -> v).
    const auto g = p.face_with_directed_edge(next_after(f), v);
    if (!g) break;
    f = *g;
    if (f == around.front()) {
      if (degrees.size() != around.size()) break;
      // Canonical form: smallest rotation of the sequence or its reverse.
      std::vector<int> best = degrees;
      const std::size_t n = degrees.size();
      for (int reflect = 0; reflect < 2; ++reflect) {
        std::vector<int> seq = degrees;
        if (reflect) std::reverse(seq.begin(), seq.end());
        for (std::size_t k = 0; k < n; ++k) {
          std::rotate(seq.begin(), seq.begin() + 1, seq.end());
          best = std::min(best, seq);
        }
      }
      return best;
    }
  }
  throw std::runtime_error("faces around vertex " + std::to_string(v) +
                           " do not form a disk");
}

std::string vertex_figure_label(const std::vector<int>& figure) {
  std::string out;
  for (int d : figure) {
    if (!out.empty()) out += '.';
    out += std::to_string(d);
  }
  return out;
}

template <class S>
BasicPolyhedron<S> centered(const BasicPolyhedron<S>& p) {
  const auto c = p.centroid();
  std::vector<Vec3<S>> verts;
  verts.reserve(p.num_vertices());
  for (const auto& v : p.vertices()) verts.push_back(v - c);
  return {std::move(verts), p.faces()};
}

FloatPolyhedron normalize_float_mesh(const FloatPolyhedron& p) {
  FloatPolyhedron c = centered(p);
  double radius = 0;
  for (const auto& v : c.vertices()) radius = std::max(radius, std::sqrt(norm2(v)));
  if (radius == 0) return c;
  std::vector<Vec3<double>> verts;
  for (const auto& v : c.vertices()) verts.push_back(v / radius);
  return {std::move(verts), c.faces()};
}

template <class S>
BasicPolyhedron<S> canonicalized(const BasicPolyhedron<S>& p) {
  const auto& verts = p.vertices();
  std::vector<int> order(verts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return lex_less(verts[a], verts[b]);
  });
  std::vector<int> new_index(verts.size());
  std::vector<Vec3<S>> sorted;
  sorted.reserve(verts.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    new_index[order[i]] = i;
    sorted.push_back(verts[order[i]]);
  }
  std::vector<Face> faces;
  for (const Face& f : p.faces()) {
    Face g;
    for (int v : f) {
      g.push_back(v >= 0 && v < static_cast<int>(verts.size()) ? new_index[v] : v);
    }
    if (!g.empty()) std::rotate(g.begin(), std::min_element(g.begin(), g.end()), g.end());
    faces.push_back(std::move(g));
  }
  std::sort(faces.begin(), faces.end());
  return {std::move(sorted), std::move(faces)};
}

FloatPolyhedron to_float(const Polyhedron& p) {
  std::vector<Vec3<double>> verts;
  verts.reserve(p.num_vertices());
  for (const auto& v : p.vertices()) verts.push_back(to_double(v));
  return {std::move(verts), p.faces()};
}

template class BasicPolyhedron<Q2>;
template class BasicPolyhedron<double>;
template FaceCensus face_census(const Polyhedron&);
template FaceCensus face_census(const FloatPolyhedron&);
template std::vector<int> vertex_figure(const Polyhedron&, int);
template std::vector<int> vertex_figure(const FloatPolyhedron&, int);
template Polyhedron centered(const Polyhedron&);
template FloatPolyhedron centered(const FloatPolyhedron&);
template Polyhedron canonicalized(const Polyhedron&);
template FloatPolyhedron canonicalized(const FloatPolyhedron&);

}  // namespace gyrolab
