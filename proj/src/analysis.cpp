#include "gyrolab/analysis.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "gyrolab/belts.hpp"

namespace gyrolab {

int AnalysisReport::pole_pairs() const {
  return static_cast<int>(
      std::count_if(belts.begin(), belts.end(), [](const auto& b) { return b.poles.has_value(); }));
}

namespace {

template <class S>
bool faces_regular(const BasicPolyhedron<S>& p, double eps) {
  for (int f = 0; f < static_cast<int>(p.num_faces()); ++f) {
    const Face& face = p.faces()[f];
    const std::size_t n = face.size();
    auto edge = [&](std::size_t i) {
      return p.vertices()[face[(i + 1) % n]] - p.vertices()[face[i]];
    };
    const S len = norm2(edge(0));
    const S turn = dot(edge(0), edge(1));
    for (std::size_t i = 1; i < n; ++i) {
      if (!is_zero(S(norm2(edge(i)) - len), eps)) return false;
      if (!is_zero(S(dot(edge(i), edge((i + 1) % n)) - turn), eps)) return false;
    }
  }
  return true;
}

BeltSummary summarize(const Belt<Q2>& b) {
  return {b.faces, to_double(b.normal), b.normal, b.poles};
}

BeltSummary summarize(const Belt<double>& b) {
  return {b.faces, b.normal, std::nullopt, b.poles};
}

template <class S>
AnalysisReport analyze_impl(const BasicPolyhedron<S>& input, Tolerance tol, std::string name) {
  AnalysisReport r;
  r.name = std::move(name);
  r.exact = is_exact_v<S>;
  const BasicPolyhedron<S> p = canonicalized(input);
  r.validation = validate(p, tol);
  r.vertices = static_cast<int>(p.num_vertices());
  r.edges = static_cast<int>(p.num_edges());
  r.faces = static_cast<int>(p.num_faces());
  r.euler = p.euler_characteristic();
  if (r.validation.indices_ok) r.census = face_census(p);
  if (!r.validation.ok()) return r;

  const double eps = is_exact_v<S> ? 0.0 : tol.eps;
  for (int v = 0; v < r.vertices; ++v) ++r.vertex_figures[vertex_figure_label(vertex_figure(p, v))];
  r.uniform_vertex_figure = r.vertex_figures.size() == 1;
  // Regularity is judged at unit circumradius for float meshes.
  r.regular_faces = faces_regular(analysis_frame(p), eps);
  if constexpr (is_exact_v<S>) r.symmetry = analyze_symmetry(p);
  else r.symmetry = analyze_symmetry(p, tol);
  for (const auto& b : find_belts(p, tol)) r.belts.push_back(summarize(b));

  r.archimedean_candidate =
      r.symmetry->vertex_transitive && r.uniform_vertex_figure && r.regular_faces;
  r.pseudo_uniform = r.uniform_vertex_figure && !r.symmetry->vertex_transitive;
  r.complete = true;
  return r;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::string figures_text(const AnalysisReport& r) {
  std::string out;
  for (const auto& [label, n] : r.vertex_figures) {
    if (!out.empty()) out += ", ";
    out += fmt::format("{} x{}", label, n);
  }
  return out;
}

std::vector<int> belt_lengths(const AnalysisReport& r) {
  std::vector<int> out;
  for (const auto& b : r.belts) out.push_back(static_cast<int>(b.faces.size()));
  return out;
}

nlohmann::ordered_json direction_json(const Vec3<double>& d, const std::optional<Point3>& exact) {
  if (exact) return {exact->x.to_string(), exact->y.to_string(), exact->z.to_string()};
  return {d.x, d.y, d.z};
}

nlohmann::ordered_json feature_json(const AxisFeature& f) {
  nlohmann::ordered_json j{{"kind", feature_kind_name(f.kind)}, {"index", f.index}};
  if (f.kind == AxisFeature::Kind::face) j["degree"] = f.face_degree;
  return j;
}

}  // namespace

AnalysisReport analyze(const Polyhedron& p, std::string name) {
  return analyze_impl(p, Tolerance{}, std::move(name));
}

AnalysisReport analyze(const FloatPolyhedron& p, Tolerance tol, std::string name) {
  return analyze_impl(p, tol, std::move(name));
}

std::string report_text(const AnalysisReport& r) {
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + ": " + v + "\n"; };
  line("solid", r.name);
  line("mode", r.exact ? "exact" : "tolerance");
  line("valid", yes_no(r.validation.ok()));
  line("vertices", std::to_string(r.vertices));
  line("edges", std::to_string(r.edges));
  line("faces", fmt::format("{} ({} triangles, {} quads, {} other)", r.faces, r.census.triangles,
                            r.census.quads, r.census.other));
  line("euler characteristic", std::to_string(r.euler));
  if (!r.complete) {
    for (const auto& issue : r.validation.issues) line("issue", issue);
    line("status", "partial report, validation failed");
    return out;
  }
  const SymmetryReport& s = *r.symmetry;
  line("vertex figures", figures_text(r));
  line("regular faces", yes_no(r.regular_faces));
  line("proper symmetry group order", std::to_string(s.proper_order));
  line("full symmetry group order", std::to_string(s.full_order));
  if (s.approximate) line("symmetry", "approximate (matrices not exact in Q(sqrt2))");
  line("vertex-transitive", yes_no(s.vertex_transitive));
  std::vector<int> orbit_sizes;
  for (const auto& o : s.orbits) orbit_sizes.push_back(static_cast<int>(o.size()));
  line("vertex orbits", join(orbit_sizes, " "));
  line("polar rotations", s.polar_rotations.empty() ? "none" : join(s.polar_rotations, " "));
  line("belts", fmt::format("{} ({})", r.belts.size(), join(belt_lengths(r), ", ")));
  line("pole pairs", std::to_string(r.pole_pairs()));
  line("archimedean candidate", yes_no(r.archimedean_candidate));
  line("pseudo-uniform", yes_no(r.pseudo_uniform));
  std::vector<int> orders;
  for (const auto& a : s.axes)
    if (std::find(orders.begin(), orders.end(), a.order) == orders.end()) orders.push_back(a.order);
  for (int n : orders) line(fmt::format("axes of order {}", n), std::to_string(s.axis_count(n)));
  line("rotation axes", std::to_string(s.axes.size()));
  return out;
}

std::string report_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "gyrolab/1";
  j["solid"] = r.name;
  j["mode"] = r.exact ? "exact" : "tolerance";
  j["complete"] = r.complete;
  auto& v = j["validation"];
  v["ok"] = r.validation.ok();
  v["manifold"] = r.validation.manifold;
  v["winding_consistent"] = r.validation.winding_consistent;
  v["planar"] = r.validation.planar;
  v["outward"] = r.validation.outward;
  v["convex"] = r.validation.convex;
  v["open_edges"] = r.validation.open_edges;
  v["issues"] = r.validation.issues;
  j["counts"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"faces", r.faces},
                 {"euler", r.euler}};
  j["census"] = {{"triangles", r.census.triangles}, {"quads", r.census.quads},
                 {"other", r.census.other}};
  if (!r.complete) return j.dump(2) + "\n";

  j["vertex_figures"] = r.vertex_figures;
  j["regular_faces"] = r.regular_faces;
  const SymmetryReport& s = *r.symmetry;
  auto& sym = j["symmetry"];
  sym["proper_order"] = s.proper_order;
  sym["full_order"] = s.full_order;
  sym["approximate"] = s.approximate;
  sym["vertex_transitive"] = s.vertex_transitive;
  sym["rotation_vertex_transitive"] = s.rotation_vertex_transitive;
  sym["vertex_orbits"] = s.orbits;
  sym["polar_rotations"] = s.polar_rotations;
  sym["class_equation_holds"] = s.class_equation_holds();
  auto& axes = sym["axes"] = nlohmann::ordered_json::array();
  for (const auto& a : s.axes) {
    axes.push_back({{"order", a.order},
                    {"direction", direction_json(a.direction, a.exact_direction)},
                    {"through", {feature_json(a.features.first), feature_json(a.features.second)}}});
  }
  sym["axis_count"] = s.axes.size();
  auto& belts = j["belts"] = nlohmann::ordered_json::array();
  for (const auto& b : r.belts) {
    nlohmann::ordered_json e{{"faces", b.faces},
                             {"length", b.faces.size()},
                             {"normal", direction_json(b.normal, b.exact_normal)}};
    e["poles"] = nullptr;
    if (b.poles) e["poles"] = {b.poles->first, b.poles->second};
    belts.push_back(std::move(e));
  }
  j["flags"] = {{"archimedean_candidate", r.archimedean_candidate},
                {"pseudo_uniform", r.pseudo_uniform}};
  return j.dump(2) + "\n";
}

bool ComparisonTable::all_equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.equal(); });
}

const ComparisonRow& ComparisonTable::row(const std::string& label) const {
  for (const auto& r : rows)
    if (r.label == label) return r;
  throw std::out_of_range("no comparison row '" + label + "'");
}

ComparisonTable compare(const AnalysisReport& a, const AnalysisReport& b) {
  ComparisonTable t{a.name, b.name, {}};
  auto add = [&](std::string label, auto get) {
    t.rows.push_back({std::move(label), get(a), get(b)});
  };
  auto num = [](auto f) { return [f](const AnalysisReport& r) { return std::to_string(f(r)); }; };
  auto sym = [](auto f) {
    return [f](const AnalysisReport& r) {
      return r.symmetry ? std::to_string(f(*r.symmetry)) : std::string("n/a");
    };
  };
  add("faces", num([](const auto& r) { return r.faces; }));
  add("triangles", num([](const auto& r) { return r.census.triangles; }));
  add("quads", num([](const auto& r) { return r.census.quads; }));
  add("vertices", num([](const auto& r) { return r.vertices; }));
  add("edges", num([](const auto& r) { return r.edges; }));
  add("vertex figures", [](const AnalysisReport& r) { return figures_text(r); });
  add("proper group order", sym([](const SymmetryReport& s) { return s.proper_order; }));
  add("full group order", sym([](const SymmetryReport& s) { return s.full_order; }));
  add("axes", sym([](const SymmetryReport& s) { return s.axes.size(); }));
  for (int n : {4, 3, 2})
    add(fmt::format("axes of order {}", n),
        sym([n](const SymmetryReport& s) { return s.axis_count(n); }));
  add("belts", num([](const auto& r) { return r.belts.size(); }));
  add("pole pairs", num([](const auto& r) { return r.pole_pairs(); }));
  add("vertex-transitive", [](const AnalysisReport& r) {
    return r.symmetry ? yes_no(r.symmetry->vertex_transitive) : std::string("n/a");
  });
  add("archimedean candidate",
      [](const AnalysisReport& r) { return yes_no(r.archimedean_candidate); });
  add("pseudo-uniform", [](const AnalysisReport& r) { return yes_no(r.pseudo_uniform); });
  return t;
}

std::string comparison_text(const ComparisonTable& t) {
  std::string out = fmt::format("compare: {} | {}\n", t.left_name, t.right_name);
  for (const auto& r : t.rows) out += fmt::format("{}: {} | {}\n", r.label, r.left, r.right);
  return out;
}

std::string comparison_json(const ComparisonTable& t) {
  nlohmann::ordered_json j;
  j["schema"] = "gyrolab/1";
  j["left"] = t.left_name;
  j["right"] = t.right_name;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"label", r.label}, {"left", r.left}, {"right", r.right}, {"equal", r.equal()}});
  j["all_equal"] = t.all_equal();
  return j.dump(2) + "\n";
}

}  // namespace gyrolab
