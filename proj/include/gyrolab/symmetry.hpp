#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gyrolab/geometry.hpp"
#include "gyrolab/polyhedron.hpp"

namespace gyrolab {

/// No three linearly independent vertices (relative to the centroid).
class DegenerateGeometry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Orthogonal map of a polyhedron onto itself, about its centroid. The
 * induced vertex and face permutations are stored with the matrix: since
 * the vertices span space, the vertex permutation alone determines the map
 * and is used as its identity for composition and ordering.
 */
template <class S>
struct Isometry {
  Mat3<S> matrix;
  bool proper = true;
  std::vector<int> vertex_perm;
  std::vector<int> face_perm;

  bool is_identity() const {
    for (int i = 0; i < static_cast<int>(vertex_perm.size()); ++i)
      if (vertex_perm[i] != i) return false;
    return true;
  }
};

/**
 * All orthogonal maps sending the vertex set onto itself and the face set
 * onto itself (optionally rotations only), sorted by vertex permutation, so
 * the identity comes first.
 *
 * Search: a base flag (three consecutive vertices a, b, c of one face) is
 * sent to every flag of every face of equal degree, in both orientations;
 * each candidate matrix W V^-1 is kept iff it is orthogonal and permutes
 * vertices and faces. The result is then checked for closure under
 * composition and inverses; a failure there throws std::logic_error.
 *
 * The polyhedron is centred first; float meshes are also scaled to unit
 * circumradius so that tol is scale-free.
 */
template <class S>
std::vector<Isometry<S>> isometry_group(const BasicPolyhedron<S>& p,
                                        bool proper_only, Tolerance tol = {});

/// Closure under composition and inverse, checked on vertex permutations.
template <class S>
bool is_closed_group(const std::vector<Isometry<S>>& group);

template <class S>
std::vector<Isometry<S>> proper_subgroup(const std::vector<Isometry<S>>& group);

/// Smallest n >= 1 with M^n == I, searched up to max_order; 0 if none.
template <class S>
int rotation_order(const Mat3<S>& m, int max_order, Tolerance tol = {});

template <class S>
struct RotationAxis {
  Vec3<S> direction;  // first nonzero coordinate is +1
  int order = 1;
};

/// One line per non-identity rotation, deduplicated by canonical direction,
/// with the largest rotation order found on it. Sorted by descending order,
/// then by direction. Throws std::logic_error if a rotation's trace
/// disagrees with its order.
template <class S>
std::vector<RotationAxis<S>> rotation_axes(const std::vector<Isometry<S>>& group,
                                           Tolerance tol = {});

/// Non-identity rotation angles (degrees, ascending) about the +z axis
/// present in the group.
template <class S>
std::vector<int> polar_axis_rotations(const std::vector<Isometry<S>>& group,
                                      Tolerance tol = {});

struct AxisFeature {
  enum class Kind { face, vertex, edge };
  Kind kind = Kind::face;
  int index = 0;
  int face_degree = 0;  // faces only

  friend bool operator==(const AxisFeature&, const AxisFeature&) = default;
};

std::string feature_kind_name(AxisFeature::Kind k);

/// The two surface features (face centre, vertex or edge midpoint) met by
/// the line through the centroid along direction; the first lies on the
/// positive side. Throws std::logic_error if the line misses every feature.
template <class S>
std::pair<AxisFeature, AxisFeature> axis_feature_incidence(
    const BasicPolyhedron<S>& p, const Vec3<S>& direction, Tolerance tol = {});

struct OrbitPartition {
  bool transitive = false;
  std::vector<std::vector<int>> orbits;  // each sorted; sorted by first entry
};

template <class S>
OrbitPartition vertex_orbits(const std::vector<Isometry<S>>& group,
                             std::size_t num_vertices);

/// Nearest a + b sqrt2 with denominators <= max_den, if within tol.
std::optional<Q2> snap_to_q2(double x, double tol, int max_den = 64);

/// Snaps every entry; succeeds only if the snapped matrix is exactly
/// orthogonal.
std::optional<Mat3<Q2>> snap_orthogonal(const Mat3<double>& m, double tol);

struct AxisSummary {
  Vec3<double> direction;
  std::optional<Vec3<Q2>> exact_direction;
  int order = 1;
  std::pair<AxisFeature, AxisFeature> features;
};

struct SymmetryReport {
  int proper_order = 0;
  int full_order = 0;
  std::vector<AxisSummary> axes;
  bool vertex_transitive = false;           // full group
  bool rotation_vertex_transitive = false;  // rotations only
  std::vector<std::vector<int>> orbits;     // full group
  std::vector<int> polar_rotations;
  /// Float input whose matrices did not all snap to Q(sqrt 2).
  bool approximate = false;

  int axis_count(int order) const;
  /// Sum over axes of (order - 1), plus one, equals the rotation group order.
  bool class_equation_holds() const;
};

SymmetryReport analyze_symmetry(const Polyhedron& p);
SymmetryReport analyze_symmetry(const FloatPolyhedron& p, Tolerance tol);

}  // namespace gyrolab
