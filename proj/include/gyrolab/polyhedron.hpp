#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gyrolab/geometry.hpp"

namespace gyrolab {

/// Cyclic vertex-index list, counterclockwise seen from outside.
using Face = std::vector<int>;

/// Unordered vertex pair (u < v) with the faces using it.
struct Edge {
  int u = 0;
  int v = 0;
  std::vector<int> faces;
};

/**
 * Vertices plus faces, with the edge list and edge-to-face adjacency derived
 * once at construction. Construction never throws on malformed topology
 * (dangling indices, open edges); validate() reports those.
 */
template <class S>
class BasicPolyhedron {
 public:
  using Scalar = S;
  using Point = Vec3<S>;

  BasicPolyhedron() = default;
  BasicPolyhedron(std::vector<Point> vertices, std::vector<Face> faces);

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  int euler_characteristic() const {
    return static_cast<int>(vertices_.size()) - static_cast<int>(edges_.size()) +
           static_cast<int>(faces_.size());
  }

  /// Faces with an index outside [0, V) or a repeated index.
  const std::vector<int>& bad_faces() const { return bad_faces_; }

  /// Index into edges() for {a, b}, if that edge exists.
  std::optional<int> edge_index(int a, int b) const;
  /// Face containing the directed edge a -> b, if any.
  std::optional<int> face_with_directed_edge(int a, int b) const;

  /// Faces incident to a vertex (any order).
  const std::vector<int>& faces_at(int v) const { return vertex_faces_.at(v); }

  Point face_center(int f) const;
  /// Unnormalized outward normal (Newell's method).
  Point face_normal(int f) const;
  Point edge_midpoint(int e) const;
  Point centroid() const;

 private:
  std::vector<Point> vertices_;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<int> bad_faces_;
  std::map<std::pair<int, int>, int> edge_lookup_;
  std::map<std::pair<int, int>, int> directed_;
  std::vector<std::vector<int>> vertex_faces_;
};

using Polyhedron = BasicPolyhedron<Q2>;
using FloatPolyhedron = BasicPolyhedron<double>;

/// Tolerance-mode settings. Ignored by the exact (Q2) instantiations.
struct Tolerance {
  double eps = 1e-9;
};

struct ValidationReport {
  bool indices_ok = true;
  bool manifold = true;
  bool winding_consistent = true;
  bool planar = true;
  bool outward = true;
  bool convex = true;
  int euler = 0;
  std::vector<std::pair<int, int>> open_edges;
  std::vector<std::pair<int, int>> overloaded_edges;
  std::vector<std::string> issues;

  bool ok() const {
    return indices_ok && manifold && winding_consistent && planar && outward &&
           convex && euler == 2;
  }
};

/// Structural and geometric checks. Float meshes are checked after
/// normalize_float_mesh so that the tolerance is scale-free.
ValidationReport validate(const Polyhedron& p, Tolerance tol = {});
ValidationReport validate(const FloatPolyhedron& p, Tolerance tol = {});

struct FaceCensus {
  int triangles = 0;
  int quads = 0;
  int other = 0;

  int total() const { return triangles + quads + other; }
  friend bool operator==(const FaceCensus&, const FaceCensus&) = default;
};

template <class S>
FaceCensus face_census(const BasicPolyhedron<S>& p);

/// Face degrees around v in surface order, canonical up to rotation and
/// reflection (lexicographically smallest). Throws std::out_of_range for an
/// unknown vertex and std::runtime_error if the link of v is not a disk.
template <class S>
std::vector<int> vertex_figure(const BasicPolyhedron<S>& p, int v);

/// "3.4.4.4" style label.
std::string vertex_figure_label(const std::vector<int>& figure);

/// Same geometry with the centroid moved to the origin.
template <class S>
BasicPolyhedron<S> centered(const BasicPolyhedron<S>& p);

/// Centered and scaled to unit circumradius.
FloatPolyhedron normalize_float_mesh(const FloatPolyhedron& p);

/// Frame used by the analysis code: centred for exact models, centred and
/// unit-scaled for float meshes (so tolerances are scale-free).
inline Polyhedron analysis_frame(const Polyhedron& p) { return centered(p); }
inline FloatPolyhedron analysis_frame(const FloatPolyhedron& p) {
  return normalize_float_mesh(p);
}

/// Vertices sorted lexicographically, faces rotated to start at their
/// smallest index and then sorted; geometry is unchanged.
template <class S>
BasicPolyhedron<S> canonicalized(const BasicPolyhedron<S>& p);

FloatPolyhedron to_float(const Polyhedron& p);

}  // namespace gyrolab
