#include "gyrolab/belts.hpp"

#include <algorithm>
#include <set>

namespace gyrolab {

namespace {

int position_of(const Face& f, int v) {
  return static_cast<int>(std::find(f.begin(), f.end(), v) - f.begin());
}

// Walks the zone leaving `start` through its edge at position `k`. Returns
// the visited faces and crossed edges, or nullopt if the walk hits a
// non-quad or does not close on the opposite edge of `start`.
template <class S>
std::optional<std::pair<std::vector<int>, std::vector<int>>> zone_walk(
    const BasicPolyhedron<S>& p, int start, int k) {
  std::vector<int> faces{start};
  std::vector<int> crossed;
  int cur = start;
  int exit = k;
  for (std::size_t step = 0; step <= p.num_faces(); ++step) {
    const Face& f = p.faces()[cur];
    const int a = f[exit];
    const int b = f[(exit + 1) % 4];
    const auto next = p.face_with_directed_edge(b, a);
    if (!next) return std::nullopt;
    crossed.push_back(*p.edge_index(a, b));
    const Face& g = p.faces()[*next];
    if (g.size() != 4) return std::nullopt;
    const int entry = position_of(g, b);
    if (*next == start) {
      if (entry != (k + 2) % 4) return std::nullopt;
      return std::pair{std::move(faces), std::move(crossed)};
    }
    faces.push_back(*next);
    cur = *next;
    exit = (entry + 2) % 4;
  }
  return std::nullopt;
}

// Rotate to the smallest face, then orient towards its smaller neighbour.
void canonical_cycle(std::vector<int>& faces, std::vector<int>& edges) {
  const auto n = static_cast<long>(faces.size());
  const long m = std::min_element(faces.begin(), faces.end()) - faces.begin();
  std::rotate(faces.begin(), faces.begin() + m, faces.end());
  std::rotate(edges.begin(), edges.begin() + m, edges.end());
  if (n > 2 && faces[n - 1] < faces[1]) {
    // Reverse direction: faces f0 f_{n-1} ... f1; edge between f0 and f_{n-1}
    // is edges[n-1].
    std::reverse(faces.begin() + 1, faces.end());
    std::reverse(edges.begin(), edges.end());
  }
}

}  // namespace

template <class S>
std::vector<Belt<S>> find_belts(const BasicPolyhedron<S>& input, Tolerance tol) {
  const BasicPolyhedron<S> p = analysis_frame(input);
  std::set<std::vector<int>> seen;
  std::vector<Belt<S>> belts;
  for (int f = 0; f < static_cast<int>(p.num_faces()); ++f) {
    if (p.faces()[f].size() != 4) continue;
    for (int k : {0, 1}) {
      auto walk = zone_walk(p, f, k);
      if (!walk) continue;
      auto [faces, edges] = std::move(*walk);
      std::vector<int> key = faces;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      canonical_cycle(faces, edges);

      Belt<S> belt;
      belt.faces = std::move(faces);
      belt.crossing_edges = std::move(edges);
      auto direction = [&](int e) {
        const Edge& edge = p.edges()[e];
        return p.vertices()[edge.v] - p.vertices()[edge.u];
      };
      belt.normal = canonical_direction(direction(belt.crossing_edges.front()), tol.eps);
      for (int e : belt.crossing_edges) {
        if (!parallel(direction(e), belt.normal, tol.eps)) belt.edges_parallel = false;
      }
      belt.poles = pole_pairs(p, belt, tol);
      belts.push_back(std::move(belt));
    }
  }
  std::sort(belts.begin(), belts.end(),
            [](const auto& a, const auto& b) { return a.faces < b.faces; });
  return belts;
}

template <class S>
std::optional<std::pair<int, int>> pole_pairs(const BasicPolyhedron<S>& input,
                                              const Belt<S>& belt, Tolerance tol) {
  const BasicPolyhedron<S> p = analysis_frame(input);
  std::optional<int> plus, minus;
  for (int f = 0; f < static_cast<int>(p.num_faces()); ++f) {
    const auto c = p.face_center(f);
    if (is_zero_vec(c, tol.eps) || !parallel(c, belt.normal, tol.eps)) continue;
    auto& slot = sign_of(dot(c, belt.normal), tol.eps) > 0 ? plus : minus;
    if (!slot) slot = f;
  }
  if (!plus || !minus) return std::nullopt;
  return std::pair{*plus, *minus};
}

template <class S>
std::vector<std::vector<int>> belt_square_overlap(const std::vector<Belt<S>>& belts) {
  const std::size_t n = belts.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const std::set<int> a(belts[i].faces.begin(), belts[i].faces.end());
    for (std::size_t j = 0; j < n; ++j) {
      out[i][j] = static_cast<int>(std::count_if(
          belts[j].faces.begin(), belts[j].faces.end(),
          [&](int f) { return a.count(f) > 0; }));
    }
  }
  return out;
}

template <class S>
std::vector<int> belt_union(const std::vector<Belt<S>>& belts) {
  std::set<int> all;
  for (const auto& b : belts) all.insert(b.faces.begin(), b.faces.end());
  return {all.begin(), all.end()};
}

#define GYROLAB_INSTANTIATE(S)                                                   \
  template std::vector<Belt<S>> find_belts(const BasicPolyhedron<S>&, Tolerance); \
  template std::optional<std::pair<int, int>> pole_pairs(                        \
      const BasicPolyhedron<S>&, const Belt<S>&, Tolerance);                     \
  template std::vector<std::vector<int>> belt_square_overlap(                    \
      const std::vector<Belt<S>>&);                                              \
  template std::vector<int> belt_union(const std::vector<Belt<S>>&);

GYROLAB_INSTANTIATE(Q2)
GYROLAB_INSTANTIATE(double)

#undef GYROLAB_INSTANTIATE

}  // namespace gyrolab
