#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "gyrolab/off_io.hpp"
#include "gyrolab/solids.hpp"
#include "gyrolab/symmetry.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace {

using namespace gyrolab;
using gyrolab::testing::cube_fixture;

std::vector<Mat3<Q2>> matrices(const std::vector<Isometry<Q2>>& g) {
  std::vector<Mat3<Q2>> out;
  for (const auto& iso : g) out.push_back(iso.matrix);
  return out;
}

bool same_matrix_set(std::vector<Mat3<Q2>> a, std::vector<Mat3<Q2>> b) {
  auto key = [](const Mat3<Q2>& m) {
    std::string s;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += m(i, j).to_string() + ",";
    return s;
  };
  std::vector<std::string> ka, kb;
  for (const auto& m : a) ka.push_back(key(m));
  for (const auto& m : b) kb.push_back(key(m));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

class GroupOrders : public ::testing::TestWithParam<Solid> {};

TEST_P(GroupOrders, MatchBruteForceOverCandidateMatrices) {
  const Polyhedron p = build_solid(GetParam(), Q2(2));
  const auto proper = isometry_group(p, true);
  const auto full = isometry_group(p, false);
  const auto oracle_proper = oracle::symmetries_of(p.vertices(), true);
  const auto oracle_full = oracle::symmetries_of(p.vertices(), false);
  EXPECT_EQ(proper.size(), oracle_proper.size());
  EXPECT_EQ(full.size(), oracle_full.size());
  EXPECT_TRUE(same_matrix_set(matrices(proper), oracle_proper));
  EXPECT_TRUE(same_matrix_set(matrices(full), oracle_full));
  EXPECT_TRUE(full.front().is_identity());
}

INSTANTIATE_TEST_SUITE_P(Solids, GroupOrders,
                         ::testing::Values(Solid::rhombicuboctahedron,
                                           Solid::pseudo_rhombicuboctahedron),
                         [](const auto& info) {
                           return info.param == Solid::rhombicuboctahedron ? "rco" : "pseudo";
                         });

TEST(Symmetry, Orders) {
  const auto rco = build_rhombicuboctahedron(Q2(2));
  const auto pseudo = build_pseudo_rhombicuboctahedron(Q2(2));
  EXPECT_EQ(isometry_group(rco, true).size(), 24u);
  EXPECT_EQ(isometry_group(rco, false).size(), 48u);
  EXPECT_EQ(isometry_group(pseudo, true).size(), 8u);
  EXPECT_EQ(isometry_group(pseudo, false).size(), 16u);
  EXPECT_EQ(isometry_group(cube_fixture(), true).size(), 24u);
  EXPECT_EQ(isometry_group(cube_fixture(), false).size(), 48u);
}

TEST(Symmetry, TraceHistogramMatchesOracle) {
  // Trace identifies the rotation angle: 3 identity, -1 half turn,
  // 0 third turn, 1 quarter turn, 1+-sqrt2 eighth turn.
  for (Solid s : {Solid::rhombicuboctahedron, Solid::pseudo_rhombicuboctahedron}) {
    const auto p = build_solid(s, Q2(2));
    EXPECT_EQ(oracle::trace_histogram(matrices(isometry_group(p, true))),
              oracle::trace_histogram(oracle::symmetries_of(p.vertices(), true)));
  }
  const auto h = oracle::trace_histogram(
      matrices(isometry_group(build_rhombicuboctahedron(Q2(2)), true)));
  EXPECT_EQ(h.at("3"), 1);
  EXPECT_EQ(h.at("-1"), 9);
  EXPECT_EQ(h.at("0"), 8);
  EXPECT_EQ(h.at("1"), 6);
}

TEST(Symmetry, GroupIsClosedWithExactInverses) {
  for (Solid s : {Solid::rhombicuboctahedron, Solid::pseudo_rhombicuboctahedron}) {
    const auto g = isometry_group(build_solid(s, Q2(2)), false);
    EXPECT_TRUE(is_closed_group(g));
    for (const auto& a : g) {
      EXPECT_EQ(a.matrix * a.matrix.transpose(), Mat3<Q2>::identity());
      EXPECT_EQ(a.proper, a.matrix.det() == Q2(1));
      for (const auto& b : g) {
        const Mat3<Q2> c = a.matrix * b.matrix;
        EXPECT_TRUE(std::any_of(g.begin(), g.end(),
                                [&](const auto& x) { return x.matrix == c; }));
      }
    }
    EXPECT_EQ(proper_subgroup(g).size() * 2, g.size());
  }
}

TEST(Symmetry, RotationsHaveExactFiniteOrder) {
  const auto g = isometry_group(build_rhombicuboctahedron(Q2(2)), true);
  std::map<int, int> by_order;
  for (const auto& iso : g) {
    const int n = rotation_order(iso.matrix, 12);
    ASSERT_GT(n, 0);
    EXPECT_EQ(power(iso.matrix, n), Mat3<Q2>::identity());
    ++by_order[n];
  }
  EXPECT_EQ(by_order, (std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
}

TEST(Symmetry, IsometriesPreserveDistancesAndFaces) {
  const auto p = build_pseudo_rhombicuboctahedron(Q2(2));
  const auto g = isometry_group(p, false);
  const auto& v = p.vertices();
  for (const auto& iso : g) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_EQ(iso.matrix * v[i], v[iso.vertex_perm[i]]);
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        EXPECT_EQ(norm2(v[i] - v[j]),
                  norm2(v[iso.vertex_perm[i]] - v[iso.vertex_perm[j]]));
      }
    }
    for (std::size_t f = 0; f < p.num_faces(); ++f) {
      EXPECT_EQ(p.faces()[f].size(), p.faces()[iso.face_perm[f]].size());
      EXPECT_EQ(iso.matrix * p.face_center(static_cast<int>(f)),
                p.face_center(iso.face_perm[f]));
    }
  }
}

TEST(Symmetry, RcoAxes) {
  const SymmetryReport r = analyze_symmetry(build_rhombicuboctahedron(Q2(2)));
  EXPECT_FALSE(r.approximate);
  EXPECT_EQ(r.axes.size(), 13u);
  EXPECT_EQ(r.axis_count(4), 3);
  EXPECT_EQ(r.axis_count(3), 4);
  EXPECT_EQ(r.axis_count(2), 6);
  EXPECT_TRUE(r.class_equation_holds());
  // Every axis of the rco pierces a pair of face centres.
  for (const auto& a : r.axes) {
    EXPECT_EQ(a.features.first.kind, AxisFeature::Kind::face);
    EXPECT_EQ(a.features.second.kind, AxisFeature::Kind::face);
    const int expected_degree = a.order == 3 ? 3 : 4;
    EXPECT_EQ(a.features.first.face_degree, expected_degree);
    EXPECT_EQ(a.features.second.face_degree, expected_degree);
  }
}

TEST(Symmetry, PseudoAxes) {
  const SymmetryReport r = analyze_symmetry(build_pseudo_rhombicuboctahedron(Q2(2)));
  EXPECT_EQ(r.proper_order, 8);
  EXPECT_EQ(r.full_order, 16);
  EXPECT_EQ(r.axes.size(), 5u);
  EXPECT_EQ(r.axis_count(4), 1);
  EXPECT_EQ(r.axis_count(2), 4);
  EXPECT_EQ(r.axis_count(3), 0);
  EXPECT_TRUE(r.class_equation_holds());
  ASSERT_TRUE(r.axes.front().exact_direction);
  EXPECT_EQ(*r.axes.front().exact_direction, Point3(Q2(0), Q2(0), Q2(1)));
  EXPECT_EQ(r.axes.front().features.first.kind, AxisFeature::Kind::face);
  EXPECT_EQ(r.axes.front().features.first.face_degree, 4);
}

TEST(Symmetry, PolarRotations) {
  const std::vector<int> quarter{90, 180, 270};
  EXPECT_EQ(analyze_symmetry(build_rhombicuboctahedron(Q2(2))).polar_rotations, quarter);
  EXPECT_EQ(analyze_symmetry(build_pseudo_rhombicuboctahedron(Q2(2))).polar_rotations,
            quarter);
  EXPECT_EQ(analyze_symmetry(cube_fixture()).polar_rotations, quarter);
}

TEST(Symmetry, VertexTransitivity) {
  const auto rco = analyze_symmetry(build_rhombicuboctahedron(Q2(2)));
  EXPECT_TRUE(rco.vertex_transitive);
  EXPECT_TRUE(rco.rotation_vertex_transitive);
  ASSERT_EQ(rco.orbits.size(), 1u);
  EXPECT_EQ(rco.orbits[0].size(), 24u);

  const auto p = build_pseudo_rhombicuboctahedron(Q2(2));
  const auto pseudo = analyze_symmetry(p);
  EXPECT_FALSE(pseudo.vertex_transitive);
  std::vector<int> sizes;
  for (const auto& o : pseudo.orbits) sizes.push_back(static_cast<int>(o.size()));
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, oracle::orbit_sizes(p.vertices(), oracle::symmetries_of(p.vertices(), false)));

  EXPECT_TRUE(analyze_symmetry(cube_fixture()).vertex_transitive);
}

TEST(Symmetry, FloatPathAfterOffRoundTrip) {
  for (Solid s : {Solid::rhombicuboctahedron, Solid::pseudo_rhombicuboctahedron}) {
    const auto exact = analyze_symmetry(build_solid(s, Q2(5)));
    std::stringstream buffer;
    write_off(buffer, build_solid(s, Q2(5)));
    const FloatPolyhedron mesh = read_off(buffer);
    const auto approx = analyze_symmetry(mesh, Tolerance{1e-9});
    EXPECT_FALSE(approx.approximate);
    EXPECT_EQ(approx.proper_order, exact.proper_order);
    EXPECT_EQ(approx.full_order, exact.full_order);
    ASSERT_EQ(approx.axes.size(), exact.axes.size());
    for (std::size_t i = 0; i < exact.axes.size(); ++i) {
      EXPECT_EQ(approx.axes[i].order, exact.axes[i].order);
      EXPECT_EQ(approx.axes[i].exact_direction, exact.axes[i].exact_direction);
    }
    EXPECT_EQ(approx.polar_rotations, exact.polar_rotations);
    EXPECT_EQ(approx.vertex_transitive, exact.vertex_transitive);
  }
}

TEST(Symmetry, FloatPathSurvivesRigidMotion) {
  // Rotated off the coordinate frame, snapping fails, but orders survive.
  const auto rco = to_float(build_rhombicuboctahedron(Q2(2)));
  const double c = std::cos(0.3), s = std::sin(0.3);
  std::vector<Vec3<double>> moved;
  for (const auto& v : rco.vertices()) {
    moved.emplace_back(c * v.x - s * v.y + 7.0, s * v.x + c * v.y - 2.0, v.z + 0.5);
  }
  const auto r = analyze_symmetry(FloatPolyhedron(moved, rco.faces()), Tolerance{1e-9});
  EXPECT_EQ(r.proper_order, 24);
  EXPECT_EQ(r.full_order, 48);
  EXPECT_EQ(r.axes.size(), 13u);
}

TEST(Symmetry, SnapToQ2) {
  EXPECT_EQ(snap_to_q2(std::sqrt(0.5), 1e-12), Q2::rational(1, 2) * Q2::sqrt2());
  EXPECT_EQ(snap_to_q2(1.0 + std::sqrt(2.0), 1e-12), Q2(1) + Q2::sqrt2());
  EXPECT_EQ(snap_to_q2(-0.75, 1e-12), Q2::rational(-3, 4));
  EXPECT_FALSE(snap_to_q2(std::acos(-1.0), 1e-12));
}

TEST(Symmetry, DegenerateInputThrows) {
  const Polyhedron flat({Point3(Q2(0), Q2(0), Q2(0)), Point3(Q2(1), Q2(0), Q2(0)),
                         Point3(Q2(0), Q2(1), Q2(0))},
                        {{0, 1, 2}, {0, 2, 1}});
  EXPECT_THROW(isometry_group(flat, false), DegenerateGeometry);
}

}  // namespace
