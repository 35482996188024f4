#include "gyrolab/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace gyrolab {

namespace {

// Point -> vertex index; exact map lookup or nearest-within-tolerance scan.
template <class S>
class VertexLookup {
 public:
  VertexLookup(const std::vector<Vec3<S>>& verts, double tol)
      : verts_(verts), tol_(tol) {
    if constexpr (is_exact_v<S>) {
      for (int i = 0; i < static_cast<int>(verts.size()); ++i) exact_.emplace(verts[i], i);
    }
  }

  std::optional<int> find(const Vec3<S>& p) const {
    if constexpr (is_exact_v<S>) {
      auto it = exact_.find(p);
      if (it == exact_.end()) return std::nullopt;
      return it->second;
    } else {
      for (int i = 0; i < static_cast<int>(verts_.size()); ++i) {
        if (near(verts_[i], p, tol_)) return i;
      }
      return std::nullopt;
    }
  }

 private:
  const std::vector<Vec3<S>>& verts_;
  double tol_;
  std::map<Vec3<S>, int, decltype(&lex_less<S>)> exact_{&lex_less<S>};
};

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

}  // namespace

template <class S>
std::vector<Isometry<S>> isometry_group(const BasicPolyhedron<S>& input,
                                        bool proper_only, Tolerance tol) {
  const BasicPolyhedron<S> p = analysis_frame(input);
  const double eps = tol.eps;
  const auto& verts = p.vertices();
  const auto& faces = p.faces();

  // Base flag: three consecutive vertices of a face, linearly independent.
  int base_face = -1;
  Mat3<S> base_inv;
  for (int f = 0; f < static_cast<int>(faces.size()) && base_face < 0; ++f) {
    if (faces[f].size() < 3) continue;
    const auto base = Mat3<S>::from_columns(verts[faces[f][0]], verts[faces[f][1]],
                                            verts[faces[f][2]]);
    if (!is_zero(base.det(), eps)) {
      base_face = f;
      base_inv = base.inverse();
    }
  }
  if (base_face < 0) {
    throw DegenerateGeometry("no three linearly independent vertices on a face");
  }
  const Face& bf = faces[base_face];

  std::map<std::vector<int>, int> face_key;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    face_key.emplace(sorted_copy(faces[f]), f);
  }
  const VertexLookup<S> lookup(verts, eps);
  const Mat3<S> identity = Mat3<S>::identity();

  std::vector<Isometry<S>> found;
  for (const Face& g : faces) {
    if (g.size() != bf.size()) continue;
    const int d = static_cast<int>(g.size());
    for (int i = 0; i < d; ++i) {
      for (int dir : {1, -1}) {
        const auto image = Mat3<S>::from_columns(
            verts[g[i]], verts[g[((i + dir) % d + d) % d]],
            verts[g[((i + 2 * dir) % d + d) % d]]);
        Isometry<S> iso;
        iso.matrix = image * base_inv;
        if (!near(iso.matrix.transpose() * iso.matrix, identity, eps)) continue;
        iso.proper = sign_of(iso.matrix.det(), eps) > 0;
        if (proper_only && !iso.proper) continue;

        bool ok = true;
        std::vector<bool> hit(verts.size(), false);
        iso.vertex_perm.resize(verts.size());
        for (std::size_t v = 0; v < verts.size() && ok; ++v) {
          const auto w = lookup.find(iso.matrix * verts[v]);
          ok = w && !hit[*w];
          if (ok) {
            hit[*w] = true;
            iso.vertex_perm[v] = *w;
          }
        }
        if (!ok) continue;
        iso.face_perm.resize(faces.size());
        for (std::size_t f = 0; f < faces.size() && ok; ++f) {
          std::vector<int> mapped;
          for (int v : faces[f]) mapped.push_back(iso.vertex_perm[v]);
          auto it = face_key.find(sorted_copy(std::move(mapped)));
          ok = it != face_key.end();
          if (ok) iso.face_perm[f] = it->second;
        }
        if (ok) found.push_back(std::move(iso));
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.vertex_perm < b.vertex_perm;
  });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const auto& a, const auto& b) {
                            return a.vertex_perm == b.vertex_perm;
                          }),
              found.end());
  if (!is_closed_group(found)) {
    throw std::logic_error("isometry search produced a set that is not a group");
  }
  return found;
}

template <class S>
bool is_closed_group(const std::vector<Isometry<S>>& group) {
  std::set<std::vector<int>> members;
  for (const auto& g : group) members.insert(g.vertex_perm);
  for (const auto& a : group) {
    std::vector<int> inv(a.vertex_perm.size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[a.vertex_perm[i]] = static_cast<int>(i);
    if (!members.count(inv)) return false;
    for (const auto& b : group) {
      if (!members.count(compose(a.vertex_perm, b.vertex_perm))) return false;
    }
  }
  return !group.empty();
}

template <class S>
std::vector<Isometry<S>> proper_subgroup(const std::vector<Isometry<S>>& group) {
  std::vector<Isometry<S>> out;
  std::copy_if(group.begin(), group.end(), std::back_inserter(out),
               [](const auto& g) { return g.proper; });
  return out;
}

template <class S>
int rotation_order(const Mat3<S>& m, int max_order, Tolerance tol) {
  const Mat3<S> identity = Mat3<S>::identity();
  Mat3<S> acc = m;
  for (int n = 1; n <= max_order; ++n) {
    if (near(acc, identity, tol.eps)) return n;
    acc = acc * m;
  }
  return 0;
}

namespace {

// trace == 1 + 2 cos(2 pi k / n) for some k coprime to n.
bool trace_matches_order(const Q2& trace, int n) {
  const Q2 r2 = Q2::sqrt2();
  switch (n) {
    case 1: return trace == Q2(3);
    case 2: return trace == Q2(-1);
    case 3: return trace == Q2(0);
    case 4: return trace == Q2(1);
    case 6: return trace == Q2(2);
    case 8: return trace == Q2(1) + r2 || trace == Q2(1) - r2;
    default: return false;  // cos(2 pi / n) is not in Q(sqrt 2)
  }
}

bool trace_matches_order(double trace, int n) {
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    if (std::abs(trace - (1 + 2 * std::cos(2 * M_PI * k / n))) < 1e-6) return true;
  }
  return n == 1 && std::abs(trace - 3) < 1e-6;
}

template <class S>
Vec3<S> fixed_line(const Mat3<S>& m, double eps) {
  Mat3<S> a = m;
  for (int i = 0; i < 3; ++i) a.m[i][i] -= S(1);
  for (auto [r, s] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const Vec3<S> c = cross(a.row(r), a.row(s));
    if (!is_zero_vec(c, eps)) return canonical_direction(c, eps);
  }
  throw std::logic_error("rotation has no unique fixed line");
}

}  // namespace

template <class S>
std::vector<RotationAxis<S>> rotation_axes(const std::vector<Isometry<S>>& group,
                                           Tolerance tol) {
  std::vector<RotationAxis<S>> axes;
  const int max_order = static_cast<int>(group.size());
  for (const auto& g : group) {
    if (!g.proper || g.is_identity()) continue;
    const int n = rotation_order(g.matrix, max_order, tol);
    if (n < 2 || !trace_matches_order(g.matrix.trace(), n)) {
      throw std::logic_error("rotation order and trace disagree");
    }
    Vec3<S> dir = fixed_line(g.matrix, tol.eps);
    auto it = std::find_if(axes.begin(), axes.end(), [&](const auto& a) {
      return near(a.direction, dir, tol.eps);
    });
    if (it == axes.end()) {
      axes.push_back({std::move(dir), n});
    } else {
      it->order = std::max(it->order, n);
    }
  }
  std::sort(axes.begin(), axes.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order > b.order;
    return lex_less(a.direction, b.direction);
  });
  return axes;
}

template <class S>
std::vector<int> polar_axis_rotations(const std::vector<Isometry<S>>& group,
                                      Tolerance tol) {
  const Vec3<S> up(S(0), S(0), S(1));
  std::vector<int> angles;
  for (const auto& g : group) {
    if (!g.proper || g.is_identity()) continue;
    if (!near(g.matrix * up, up, tol.eps)) continue;
    if constexpr (is_exact_v<S>) {
      if (auto deg = exact_angle_degrees(g.matrix(0, 0), g.matrix(1, 0))) {
        angles.push_back(*deg);
      }
    } else {
      const double deg = std::atan2(g.matrix(1, 0), g.matrix(0, 0)) * 180 / M_PI;
      angles.push_back((static_cast<int>(std::lround(deg)) + 360) % 360);
    }
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

std::string feature_kind_name(AxisFeature::Kind k) {
  switch (k) {
    case AxisFeature::Kind::face: return "face";
    case AxisFeature::Kind::vertex: return "vertex";
    default: return "edge";
  }
}

template <class S>
std::pair<AxisFeature, AxisFeature> axis_feature_incidence(
    const BasicPolyhedron<S>& input, const Vec3<S>& direction, Tolerance tol) {
  const BasicPolyhedron<S> p = analysis_frame(input);
  const double eps = tol.eps;
  std::optional<AxisFeature> plus, minus;
  auto consider = [&](const Vec3<S>& point, AxisFeature feature) {
    if (is_zero_vec(point, eps) || !parallel(point, direction, eps)) return;
    auto& slot = sign_of(dot(point, direction), eps) > 0 ? plus : minus;
    if (!slot) slot = feature;
  };
  for (int f = 0; f < static_cast<int>(p.num_faces()); ++f) {
    consider(p.face_center(f), {AxisFeature::Kind::face, f,
                                static_cast<int>(p.faces()[f].size())});
  }
  for (int v = 0; v < static_cast<int>(p.num_vertices()); ++v) {
    consider(p.vertices()[v], {AxisFeature::Kind::vertex, v, 0});
  }
  for (int e = 0; e < static_cast<int>(p.num_edges()); ++e) {
    consider(p.edge_midpoint(e), {AxisFeature::Kind::edge, e, 0});
  }
  if (!plus || !minus) {
    throw std::logic_error("symmetry axis meets no surface feature");
  }
  return {*plus, *minus};
}

template <class S>
OrbitPartition vertex_orbits(const std::vector<Isometry<S>>& group,
                             std::size_t num_vertices) {
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& g : group) {
    for (std::size_t v = 0; v < num_vertices; ++v) {
      const int a = root(static_cast<int>(v));
      const int b = root(g.vertex_perm[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (std::size_t v = 0; v < num_vertices; ++v) {
    by_root[root(static_cast<int>(v))].push_back(static_cast<int>(v));
  }
  OrbitPartition out;
  for (auto& [r, members] : by_root) out.orbits.push_back(std::move(members));
  out.transitive = out.orbits.size() == 1;
  return out;
}

std::optional<Q2> snap_to_q2(double x, double tol, int max_den) {
  const double r2 = std::sqrt(2.0);
  for (int d = 1; d <= max_den; ++d) {
    for (int k = 0; k <= 4 * d; ++k) {
      // 0, 1, -1, 2, -2, ...
      const long bn = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
      const double b = static_cast<double>(bn) / d;
      const double an = std::round((x - b * r2) * d);
      if (std::abs(an / d + b * r2 - x) <= tol) {
        return Q2(mpq_class(mpz_class(static_cast<long>(an)), mpz_class(d)),
                  mpq_class(mpz_class(bn), mpz_class(d)));
      }
    }
  }
  return std::nullopt;
}

std::optional<Mat3<Q2>> snap_orthogonal(const Mat3<double>& m, double tol) {
  Mat3<Q2> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto q = snap_to_q2(m(i, j), tol);
      if (!q) return std::nullopt;
      out(i, j) = *q;
    }
  }
  if (out.transpose() * out != Mat3<Q2>::identity()) return std::nullopt;
  return out;
}

int SymmetryReport::axis_count(int order) const {
  return static_cast<int>(std::count_if(axes.begin(), axes.end(),
                                        [&](const auto& a) { return a.order == order; }));
}

bool SymmetryReport::class_equation_holds() const {
  int sum = 1;
  for (const auto& a : axes) sum += a.order - 1;
  return sum == proper_order;
}

namespace {

template <class S>
void fill_orbits(SymmetryReport& r, const std::vector<Isometry<S>>& full,
                 const std::vector<Isometry<S>>& proper, std::size_t nv) {
  r.full_order = static_cast<int>(full.size());
  r.proper_order = static_cast<int>(proper.size());
  const OrbitPartition all = vertex_orbits(full, nv);
  r.vertex_transitive = all.transitive;
  r.orbits = all.orbits;
  r.rotation_vertex_transitive = vertex_orbits(proper, nv).transitive;
}

}  // namespace

SymmetryReport analyze_symmetry(const Polyhedron& p) {
  SymmetryReport r;
  const auto full = isometry_group(p, false);
  const auto proper = proper_subgroup(full);
  fill_orbits(r, full, proper, p.num_vertices());
  for (const auto& axis : rotation_axes(proper)) {
    r.axes.push_back({to_double(axis.direction), axis.direction, axis.order,
                      axis_feature_incidence(p, axis.direction)});
  }
  r.polar_rotations = polar_axis_rotations(proper);
  return r;
}

SymmetryReport analyze_symmetry(const FloatPolyhedron& input, Tolerance tol) {
  SymmetryReport r;
  const FloatPolyhedron p = normalize_float_mesh(input);
  const auto full = isometry_group(p, false, tol);
  const auto proper = proper_subgroup(full);
  fill_orbits(r, full, proper, p.num_vertices());

  // Snap to exact matrices when every rotation is representable.
  std::vector<Isometry<Q2>> snapped;
  for (const auto& g : proper) {
    auto m = snap_orthogonal(g.matrix, tol.eps);
    if (!m) break;
    snapped.push_back({*m, true, g.vertex_perm, g.face_perm});
  }
  if (snapped.size() == proper.size()) {
    for (const auto& axis : rotation_axes(snapped)) {
      const Vec3<double> dir = to_double(axis.direction);
      r.axes.push_back({dir, axis.direction, axis.order,
                        axis_feature_incidence(p, dir, tol)});
    }
    r.polar_rotations = polar_axis_rotations(snapped);
  } else {
    r.approximate = true;
    for (const auto& axis : rotation_axes(proper, tol)) {
      r.axes.push_back({axis.direction, std::nullopt, axis.order,
                        axis_feature_incidence(p, axis.direction, tol)});
    }
    r.polar_rotations = polar_axis_rotations(proper, tol);
  }
  return r;
}

#define GYROLAB_INSTANTIATE(S)                                                  \
  template std::vector<Isometry<S>> isometry_group(const BasicPolyhedron<S>&,   \
                                                   bool, Tolerance);            \
  template bool is_closed_group(const std::vector<Isometry<S>>&);               \
  template std::vector<Isometry<S>> proper_subgroup(                            \
      const std::vector<Isometry<S>>&);                                         \
  template int rotation_order(const Mat3<S>&, int, Tolerance);                  \
  template std::vector<RotationAxis<S>> rotation_axes(                          \
      const std::vector<Isometry<S>>&, Tolerance);                              \
  template std::vector<int> polar_axis_rotations(                               \
      const std::vector<Isometry<S>>&, Tolerance);                              \
  template std::pair<AxisFeature, AxisFeature> axis_feature_incidence(          \
      const BasicPolyhedron<S>&, const Vec3<S>&, Tolerance);                    \
  template OrbitPartition vertex_orbits(const std::vector<Isometry<S>>&,        \
                                        std::size_t);

GYROLAB_INSTANTIATE(Q2)
GYROLAB_INSTANTIATE(double)

#undef GYROLAB_INSTANTIATE

}  // namespace gyrolab
