#include <gtest/gtest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <random>
#include <sstream>

#include "gyrolab/analysis.hpp"
#include "gyrolab/off_io.hpp"
#include "gyrolab/solids.hpp"
#include "support.hpp"

namespace {

using namespace gyrolab;
using gyrolab::testing::cube_fixture;
using gyrolab::testing::data_path;

const AnalysisReport& rco_report() {
  static const AnalysisReport r =
      analyze(build_rhombicuboctahedron(Q2(2)), "rhombicuboctahedron");
  return r;
}

const AnalysisReport& pseudo_report() {
  static const AnalysisReport r =
      analyze(build_pseudo_rhombicuboctahedron(Q2(2)), "pseudo-rhombicuboctahedron");
  return r;
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

TEST(Analysis, Flags) {
  EXPECT_TRUE(rco_report().complete);
  EXPECT_TRUE(rco_report().archimedean_candidate);
  EXPECT_FALSE(rco_report().pseudo_uniform);
  EXPECT_TRUE(pseudo_report().pseudo_uniform);
  EXPECT_FALSE(pseudo_report().archimedean_candidate);
  EXPECT_TRUE(pseudo_report().regular_faces);
  const auto cube = analyze(cube_fixture(), "cube");
  EXPECT_TRUE(cube.archimedean_candidate);
  for (const auto* r : {&rco_report(), &pseudo_report(), &cube})
    EXPECT_FALSE(r->archimedean_candidate && r->pseudo_uniform);
}

TEST(Analysis, UniformVertexFigures) {
  for (const auto* r : {&rco_report(), &pseudo_report()}) {
    EXPECT_TRUE(r->uniform_vertex_figure);
    EXPECT_EQ(r->vertex_figures, (std::map<std::string, int>{{"3.4.4.4", 24}}));
  }
}

TEST(Analysis, IrregularFacesAreNoticed) {
  // A 2x2x4 box: same symmetry pattern on vertices, but rectangles.
  Polyhedron cube = cube_fixture();
  auto verts = cube.vertices();
  for (auto& v : verts) v.z = v.z * Q2(2);
  const auto r = analyze(Polyhedron(verts, cube.faces()), "box");
  EXPECT_FALSE(r.regular_faces);
  EXPECT_FALSE(r.archimedean_candidate);
  EXPECT_TRUE(r.symmetry->vertex_transitive);
}

TEST(Analysis, TextEndsWithAxisCount) {
  EXPECT_TRUE(ends_with(report_text(rco_report()), "rotation axes: 13\n"));
  EXPECT_TRUE(ends_with(report_text(pseudo_report()), "rotation axes: 5\n"));
}

TEST(Analysis, JsonReport) {
  const auto j = nlohmann::json::parse(report_json(rco_report()));
  EXPECT_EQ(j["schema"], "gyrolab/1");
  EXPECT_EQ(j["symmetry"]["axis_count"], 13);
  EXPECT_EQ(j["symmetry"]["proper_order"], 24);
  ASSERT_EQ(j["belts"].size(), 3u);
  for (const auto& b : j["belts"]) {
    EXPECT_EQ(b["length"], 8);
    EXPECT_TRUE(b["poles"].is_array());
  }
  EXPECT_EQ(j["flags"]["archimedean_candidate"], true);
  const auto p = nlohmann::json::parse(report_json(pseudo_report()));
  EXPECT_EQ(p["symmetry"]["axis_count"], 5);
  EXPECT_EQ(p["flags"]["pseudo_uniform"], true);
}

TEST(Analysis, CompareBuiltins) {
  const ComparisonTable t = compare(rco_report(), pseudo_report());
  EXPECT_EQ(t.row("faces").left, t.row("faces").right);
  EXPECT_TRUE(t.row("triangles").equal());
  EXPECT_TRUE(t.row("quads").equal());
  EXPECT_TRUE(t.row("vertex figures").equal());
  EXPECT_EQ(t.row("axes").left, "13");
  EXPECT_EQ(t.row("axes").right, "5");
  EXPECT_EQ(t.row("belts").left, "3");
  EXPECT_EQ(t.row("belts").right, "1");
  EXPECT_EQ(t.row("pole pairs").left, "3");
  EXPECT_EQ(t.row("pole pairs").right, "1");
  EXPECT_FALSE(t.all_equal());
  const std::string text = comparison_text(t);
  EXPECT_NE(text.find("\naxes: 13 | 5\n"), std::string::npos);
  EXPECT_NE(text.find("\nvertex-transitive: yes | no\n"), std::string::npos);
  EXPECT_TRUE(compare(rco_report(), rco_report()).all_equal());
  EXPECT_EQ(nlohmann::json::parse(comparison_json(t))["all_equal"], false);
}

TEST(Analysis, IndependentOfVertexAndFaceOrder) {
  const Polyhedron p = build_pseudo_rhombicuboctahedron(Q2(2));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<int> perm(p.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point3> verts(p.num_vertices());
    for (std::size_t i = 0; i < perm.size(); ++i) verts[perm[i]] = p.vertices()[i];
    std::vector<Face> faces;
    for (const Face& f : p.faces()) {
      Face g;
      for (int v : f) g.push_back(perm[v]);
      std::rotate(g.begin(), g.begin() + (rng() % g.size()), g.end());
      faces.push_back(g);
    }
    std::shuffle(faces.begin(), faces.end(), rng);
    const auto r = analyze(Polyhedron(verts, faces), "pseudo-rhombicuboctahedron");
    EXPECT_EQ(report_json(r), report_json(pseudo_report()));
    EXPECT_EQ(report_text(r), report_text(pseudo_report()));
  }
}

TEST(Analysis, OpenMeshGivesPartialReport) {
  const auto r = analyze(read_off_file(data_path("cube_open.off")), Tolerance{}, "cube_open");
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.symmetry);
  EXPECT_EQ(r.euler, 1);
  EXPECT_EQ(r.census.quads, 5);
  EXPECT_NE(report_text(r).find("partial"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(report_json(r))["validation"]["open_edges"].size(), 4u);
}

TEST(Analysis, FloatRoundTripAgreesWithExact) {
  for (Solid s : {Solid::rhombicuboctahedron, Solid::pseudo_rhombicuboctahedron}) {
    const Polyhedron exact = build_solid(s, Q2(5));
    std::stringstream buffer;
    write_off(buffer, exact);
    const auto a = analyze(exact, solid_name(s));
    const auto b = analyze(read_off(buffer), Tolerance{1e-9}, solid_name(s));
    ASSERT_TRUE(b.complete);
    EXPECT_EQ(a.symmetry->proper_order, b.symmetry->proper_order);
    EXPECT_EQ(a.symmetry->full_order, b.symmetry->full_order);
    EXPECT_EQ(a.symmetry->axes.size(), b.symmetry->axes.size());
    EXPECT_EQ(a.belts.size(), b.belts.size());
    EXPECT_EQ(a.archimedean_candidate, b.archimedean_candidate);
    EXPECT_EQ(a.pseudo_uniform, b.pseudo_uniform);
    EXPECT_TRUE(compare(a, b).all_equal()) << comparison_text(compare(a, b));
  }
}

}  // namespace
