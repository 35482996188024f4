#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gyrolab/polyhedron.hpp"
#include "gyrolab/symmetry.hpp"

namespace gyrolab {

struct BeltSummary {
  std::vector<int> faces;
  Vec3<double> normal;
  std::optional<Point3> exact_normal;
  std::optional<std::pair<int, int>> poles;
};

struct AnalysisReport {
  std::string name;
  bool exact = true;
  ValidationReport validation;
  /// False when validation failed; only counts and the validation are
  /// filled in then.
  bool complete = false;

  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;
  FaceCensus census;
  std::map<std::string, int> vertex_figures;  // label -> vertex count
  bool uniform_vertex_figure = false;
  /// Equal edges and equal corner angles in every face.
  bool regular_faces = false;
  std::optional<SymmetryReport> symmetry;
  std::vector<BeltSummary> belts;

  /// Vertex-transitive, one vertex figure, regular faces. Not a full
  /// classification: prisms and antiprisms pass too.
  bool archimedean_candidate = false;
  /// One vertex figure but not vertex-transitive.
  bool pseudo_uniform = false;

  int pole_pairs() const;
};

/// Exact analysis. The input is canonicalized first so that the report
/// does not depend on vertex or face order.
AnalysisReport analyze(const Polyhedron& p, std::string name);
/// Tolerance analysis of an ingested mesh (normalized to unit circumradius).
AnalysisReport analyze(const FloatPolyhedron& p, Tolerance tol, std::string name);

std::string report_text(const AnalysisReport& r);
std::string report_json(const AnalysisReport& r);

struct ComparisonRow {
  std::string label;
  std::string left;
  std::string right;
  bool equal() const { return left == right; }
};

struct ComparisonTable {
  std::string left_name;
  std::string right_name;
  std::vector<ComparisonRow> rows;
  bool all_equal() const;
  const ComparisonRow& row(const std::string& label) const;
};

ComparisonTable compare(const AnalysisReport& a, const AnalysisReport& b);
/// One "label: left | right" line per row, after a header line.
std::string comparison_text(const ComparisonTable& t);
std::string comparison_json(const ComparisonTable& t);

}  // namespace gyrolab
