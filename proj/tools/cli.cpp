#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "gyrolab/analysis.hpp"
#include "gyrolab/foldsim.hpp"
#include "gyrolab/netgen.hpp"
#include "gyrolab/off_io.hpp"
#include "gyrolab/solids.hpp"

namespace gyrolab {

namespace {

// Bad option values found after CLI11 parsing; reported like parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Q2 parse_length(const std::string& text, const char* what) {
  Q2 v;
  try {
    v = Q2::from_decimal(text);
  } catch (const ParseError&) {
    try {
      v = Q2::parse(text);
    } catch (const ParseError&) {
      throw UsageError(fmt::format("{} '{}' is not a number", what, text));
    }
  }
  if (v.sign() <= 0) throw UsageError(fmt::format("{} must be positive, got '{}'", what, text));
  return v;
}

Solid solid_option(const std::string& name) {
  try {
    return parse_solid(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  file << text;
  if (!file.flush()) throw std::runtime_error(fmt::format("error writing '{}'", path));
}

std::string model_json(Solid s, const Q2& edge, const Polyhedron& p) {
  nlohmann::ordered_json j;
  j["schema"] = "gyrolab/1";
  j["solid"] = solid_name(s);
  j["edge"] = edge.to_string();
  auto& verts = j["vertices"] = nlohmann::ordered_json::array();
  for (const Point3& v : p.vertices())
    verts.push_back({v.x.to_string(), v.y.to_string(), v.z.to_string()});
  j["faces"] = p.faces();
  return j.dump(2) + "\n";
}

struct BuildOptions {
  std::string solid, edge = "5", format = "off", output;
};
struct AnalyzeOptions {
  std::string solid, input, edge = "5";
  double tolerance = 1e-9;
  bool json = false;
};
struct NetOptions {
  std::string edge = "50", paper, output;
};
struct FoldOptions {
  int gyration = 0;
  bool json = false;
};
struct CompareOptions {
  std::string left = "rco", right = "pseudo-rco";
  bool json = false;
};

int do_build(const BuildOptions& o, std::ostream& out) {
  const Solid s = solid_option(o.solid);
  const Q2 edge = parse_length(o.edge, "edge");
  const Polyhedron p = build_solid(s, edge);
  if (o.format == "json") {
    emit(model_json(s, edge, p), o.output, out);
  } else {
    std::ostringstream off;
    write_off(off, p);
    emit(off.str(), o.output, out);
  }
  return 0;
}

int do_analyze(const AnalyzeOptions& o, std::ostream& out) {
  if (o.solid.empty() == o.input.empty())
    throw UsageError("analyze needs exactly one of --solid or --input");
  if (!(o.tolerance > 0)) throw UsageError("tolerance must be positive");
  AnalysisReport r;
  if (!o.solid.empty()) {
    const Solid s = solid_option(o.solid);
    r = analyze(build_solid(s, parse_length(o.edge, "edge")), solid_name(s));
  } else {
    r = analyze(read_off_file(o.input), Tolerance{o.tolerance}, o.input);
  }
  out << (o.json ? report_json(r) : report_text(r));
  return r.complete ? 0 : 1;
}

int do_net(const NetOptions& o, std::ostream& out) {
  const Q2 edge = parse_length(o.edge, "edge");
  std::string paper_text = o.paper;
  if (paper_text.empty()) {
    const char* env = std::getenv("GYROLAB_PAPER");
    paper_text = env && *env ? env : "A2";
  }
  PaperSize paper;
  try {
    paper = parse_paper(paper_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(render_svg(generate_nets(edge), paper), o.output, out);
  return 0;
}

int do_fold(const FoldOptions& o, std::ostream& out) {
  if (o.gyration != 0 && o.gyration != 45)
    throw UsageError(fmt::format("gyration must be 0 or 45, got {}", o.gyration));
  const NetSpec net = generate_nets(Q2(50), o.gyration);
  const AssemblyResult r = fold(net, o.gyration);
  const bool ok = r.matched && r.closure.ok();
  if (o.json) {
    out << assembly_json(net, r);
    return ok ? 0 : 1;
  }
  int passed = 0;
  for (const auto& c : r.closure.checks) passed += c.ok;
  out << fmt::format("gyration: {}\n", o.gyration);
  out << fmt::format("target: {}\n", solid_name(r.target));
  out << fmt::format("closure: {} of {} checks passed, residual {}\n", passed,
                     r.closure.checks.size(), r.residual.to_string());
  for (const auto& c : r.closure.checks) {
    if (c.ok) continue;
    out << fmt::format("  failed {}: squared distance {}", c.name, c.residual.to_string());
    if (c.witness)
      out << fmt::format(" at ({}, {}, {})", c.witness->x.to_string(), c.witness->y.to_string(),
                         c.witness->z.to_string());
    out << "\n";
  }
  for (const auto& p : r.problems) out << "  " << p << "\n";
  out << (ok ? fmt::format("matched: {}\n", solid_name(r.target))
             : fmt::format("not matched: {}\n", solid_name(r.target)));
  return ok ? 0 : 1;
}

int do_compare(const CompareOptions& o, std::ostream& out) {
  const Solid a = solid_option(o.left), b = solid_option(o.right);
  const Q2 edge(5);
  const ComparisonTable t = compare(analyze(build_solid(a, edge), solid_name(a)),
                                    analyze(build_solid(b, edge), solid_name(b)));
  out << (o.json ? comparison_json(t) : comparison_text(t));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polyhedron builder, symmetry analyser and papercraft net generator",
               "gyrolab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "write a built-in solid as OFF or JSON");
  build_cmd->add_option("--solid", build.solid, "rco or pseudo-rco")->required();
  build_cmd->add_option("--edge", build.edge, "edge length (default 5)");
  build_cmd->add_option("--format", build.format, "off or json")
      ->check(CLI::IsMember({"off", "json"}));
  build_cmd->add_option("-o,--output", build.output, "output file (default stdout)");

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "symmetry, belts and census of a solid");
  auto* solid_opt = analyze_cmd->add_option("--solid", analyze_opts.solid, "built-in solid");
  auto* input_opt = analyze_cmd->add_option("--input", analyze_opts.input, "OFF mesh to ingest");
  solid_opt->excludes(input_opt);
  analyze_cmd->add_option("--edge", analyze_opts.edge, "edge length for built-ins")
      ->needs(solid_opt);
  analyze_cmd->add_option("--tolerance", analyze_opts.tolerance,
                          "tolerance for ingested meshes (default 1e-9)");
  analyze_cmd->add_flag("--json", analyze_opts.json, "JSON report");

  NetOptions net_opts;
  auto* net_cmd = app.add_subcommand("net", "papercraft nets as SVG");
  net_cmd->add_option("--edge", net_opts.edge, "square edge in mm (default 50)");
  net_cmd->add_option("--paper", net_opts.paper, "A0-A4 or WxH in mm (default A2)");
  net_cmd->add_option("-o,--output", net_opts.output, "SVG file")->required();

  FoldOptions fold_opts;
  auto* fold_cmd = app.add_subcommand("fold-check", "fold the nets and match the result");
  fold_cmd->add_option("--gyration", fold_opts.gyration, "north cap turn: 0 or 45");
  fold_cmd->add_flag("--json", fold_opts.json, "JSON assembly");

  CompareOptions compare_opts;
  auto* compare_cmd = app.add_subcommand("compare", "compare the two built-in solids");
  compare_cmd->add_flag("--json", compare_opts.json, "JSON table");
  compare_cmd->add_option("--left", compare_opts.left)->group("");
  compare_cmd->add_option("--right", compare_opts.right)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build_cmd) return do_build(build, out);
    if (*analyze_cmd) return do_analyze(analyze_opts, out);
    if (*net_cmd) return do_net(net_opts, out);
    if (*fold_cmd) return do_fold(fold_opts, out);
    if (*compare_cmd) return do_compare(compare_opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace gyrolab
