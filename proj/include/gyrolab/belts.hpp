#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gyrolab/polyhedron.hpp"

namespace gyrolab {

/// Closed band of quads, each entered and left through opposite edges.
template <class S>
struct Belt {
  /// Cyclic; starts at the smallest face index, second entry is the
  /// smaller of its two neighbours.
  std::vector<int> faces;
  /// crossing_edges[i] is shared by faces[i] and faces[i + 1] (cyclically).
  std::vector<int> crossing_edges;
  /// Canonical direction of the crossing edges (first nonzero coordinate +1).
  Vec3<S> normal;
  /// Every crossing edge is parallel to normal.
  bool edges_parallel = true;
  /// Faces whose centres lie on the belt axis; positive side first.
  std::optional<std::pair<int, int>> poles;
};

/// Zone walks from every quad in both directions; walks that reach a
/// non-quad or fail to close are dropped. Deduplicated by face set and
/// sorted by face sequence. Poles are filled in with pole_pairs().
template <class S>
std::vector<Belt<S>> find_belts(const BasicPolyhedron<S>& p, Tolerance tol = {});

/// The two faces whose centres lie on the line through the centroid along
/// the belt normal, or nullopt when there are none.
template <class S>
std::optional<std::pair<int, int>> pole_pairs(const BasicPolyhedron<S>& p,
                                              const Belt<S>& belt, Tolerance tol = {});

/// Pairwise counts of shared faces; the diagonal holds belt lengths.
template <class S>
std::vector<std::vector<int>> belt_square_overlap(const std::vector<Belt<S>>& belts);

/// Distinct faces covered by any belt.
template <class S>
std::vector<int> belt_union(const std::vector<Belt<S>>& belts);

}  // namespace gyrolab
