#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gyrolab/polyhedron.hpp"

namespace gyrolab {

enum class Solid { rhombicuboctahedron, pseudo_rhombicuboctahedron };

/// "rhombicuboctahedron" / "pseudo-rhombicuboctahedron".
std::string solid_name(Solid s);
/// CLI short name: "rco" / "pseudo-rco".
std::string solid_short_name(Solid s);
/// Accepts short and long names. Throws std::invalid_argument listing the
/// valid names otherwise.
Solid parse_solid(std::string_view name);
std::vector<std::string> solid_short_names();

/// Convex hull of a point set whose points are all extreme (no point in the
/// interior of a face or edge). Faces are the maximal supporting planes, with
/// vertices ordered counterclockwise from outside. Throws
/// std::invalid_argument if the points are coplanar.
Polyhedron hull_of_extreme_points(std::vector<Point3> points);

/// Vertices are all coordinate permutations of (+-s, +-s, +-(1+sqrt2)s),
/// s = edge/2. Centroid at the origin; the z axis is the polar axis.
Polyhedron build_rhombicuboctahedron(const Q2& edge);

/// The rhombicuboctahedron with its top cap (everything at z >= s) turned
/// by 45 degrees about the z axis. The ring octagon at z = s maps onto
/// itself, so ring vertices are re-identified by exact position.
Polyhedron build_pseudo_rhombicuboctahedron(const Q2& edge);

Polyhedron build_solid(Solid s, const Q2& edge);

/// Height of the polar squares above the centre, (1+sqrt2)*edge/2.
Q2 polar_height(const Q2& edge);

}  // namespace gyrolab
