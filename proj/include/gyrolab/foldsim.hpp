#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gyrolab/netgen.hpp"
#include "gyrolab/polyhedron.hpp"
#include "gyrolab/solids.hpp"

namespace gyrolab {

/// A net square after folding. Corners follow the square's net order
/// (x, y), (x+1, y), (x+1, y+1), (x, y+1), so they run counterclockwise
/// seen from the printed side; normal = (c1 - c0) x (c3 - c0).
struct PlacedSquare {
  int square = 0;
  std::array<Point3, 4> corners;
  Point3 normal;
};

/// All sides equal edge, both diagonals equal edge * sqrt2.
bool is_exact_square(const PlacedSquare& s, const Q2& edge);

/// Net order corners of one side: south = (c0, c1), east = (c1, c2), ...
std::pair<Point3, Point3> side_points(const PlacedSquare& s, Side side);

struct ClosureCheck {
  std::string name;
  bool ok = false;
  Q2 residual;                    // squared distance, zero when ok
  std::optional<Point3> witness;  // offending point when !ok
};

struct ClosureReport {
  std::vector<ClosureCheck> checks;
  bool ok() const;
  Q2 max_residual() const;
};

struct MatchResult {
  bool matched = false;
  std::map<int, int> correspondence;  // face-role square id -> target face
  std::vector<std::string> problems;
  Q2 residual;  // squared distance from the worst corner to the target
};

struct AssemblyResult {
  int gyration = 0;
  Solid target = Solid::rhombicuboctahedron;
  std::vector<PlacedSquare> squares;  // indexed by NetSquare::id
  ClosureReport closure;
  bool matched = false;
  std::map<int, int> correspondence;
  std::vector<std::string> problems;
  /// Zero, or the largest squared witness distance of any failed check.
  Q2 residual;
};

/// gyration % 90 == 0 assembles the rhombicuboctahedron, otherwise the
/// pseudo solid.
Solid assembly_target(int gyration);

/**
 * Folds every piece along its crease tree (rotation by 180 - fold_target
 * about each shared edge, child towards the unprinted side), poses the
 * strip on the belt of the target in standard position, places the caps
 * on the poles with the north cap turned by gyration, then runs
 * check_closure and match_assembly. Throws std::invalid_argument for a
 * gyration or crease angle that is not a multiple of 45 degrees, or for a
 * crease or gluing instruction that does not fit the net.
 */
AssemblyResult fold(const NetSpec& net, int gyration);

/// Checks every gluing instruction: strip overlaps must coincide exactly,
/// cap tabs must lie in their host square, edge joins must share both
/// endpoints. Failures carry the offending point.
ClosureReport check_closure(const NetSpec& net, const std::vector<PlacedSquare>& squares);

/// Matches face-role squares to target faces by exact corner sets and
/// winding; also requires a bijection onto the target's quads and equality
/// of the corner set with the target's vertex set.
MatchResult match_assembly(const NetSpec& net, const std::vector<PlacedSquare>& squares,
                           const Polyhedron& target);

/// JSON with exact coordinates in text form.
std::string assembly_json(const NetSpec& net, const AssemblyResult& result);

/// Face-role squares as a mesh with shared corners merged.
Polyhedron assembly_mesh(const NetSpec& net, const AssemblyResult& result);

}  // namespace gyrolab
