#include "gyrolab/netgen.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "gyrolab/solids.hpp"

namespace gyrolab {

std::string piece_name(Piece p) {
  switch (p) {
    case Piece::strip: return "strip";
    case Piece::cap_north: return "cap-north";
    case Piece::cap_south: return "cap-south";
  }
  return "?";
}

std::string role_name(SquareRole r) {
  switch (r) {
    case SquareRole::face: return "face";
    case SquareRole::glue: return "glue";
    case SquareRole::pole_face: return "pole-face";
  }
  return "?";
}

std::string side_name(Side s) {
  switch (s) {
    case Side::south: return "south";
    case Side::east: return "east";
    case Side::north: return "north";
    case Side::west: return "west";
  }
  return "?";
}

std::vector<int> NetSpec::piece_squares(Piece p) const {
  std::vector<int> out;
  for (const auto& s : squares)
    if (s.piece == p) out.push_back(s.id);
  return out;
}

int NetSpec::count_role(SquareRole r) const {
  return static_cast<int>(
      std::count_if(squares.begin(), squares.end(), [r](const auto& s) { return s.role == r; }));
}

int NetSpec::square_id(Piece p, int index) const {
  for (const auto& s : squares)
    if (s.piece == p && s.index == index) return s.id;
  throw std::out_of_range(fmt::format("no square {} in {}", index, piece_name(p)));
}

int dihedral_from_normals(const Point3& a, const Point3& b) {
  const Q2 d = dot(a, b);
  const Q2 c2 = d * d / (norm2(a) * norm2(b));
  int between;
  if (c2 == Q2(1)) between = d.sign() > 0 ? 0 : 180;
  else if (c2 == Q2::rational(1, 2)) between = d.sign() > 0 ? 45 : 135;
  else if (c2.is_zero()) between = 90;
  else throw std::invalid_argument("dihedral angle is not a multiple of 45 degrees");
  return 180 - between;
}

int cap_host_index(Piece cap, int side, int gyration) {
  if (gyration % 45 != 0) throw std::invalid_argument("gyration must be a multiple of 45");
  const int turn = ((gyration / 45) % 8 + 8) % 8;
  switch (cap) {
    case Piece::cap_north: return (2 * side + turn) % 8;
    case Piece::cap_south: return ((4 - 2 * side) % 8 + 8) % 8;
    case Piece::strip: break;
  }
  throw std::invalid_argument("cap_host_index needs a cap");
}

namespace {

constexpr std::array<GridPos, 4> kArms{{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};
constexpr std::array<Side, 4> kArmSides{Side::south, Side::east, Side::north, Side::west};

// Outward direction of strip square i in the assembled belt.
Point3 belt_direction(int i) {
  const auto cs = exact_cos_sin(-90 + 45 * i);
  return {cs->first, cs->second, Q2(0)};
}

std::optional<int> face_along(const Polyhedron& p, const Point3& dir) {
  for (int f = 0; f < static_cast<int>(p.num_faces()); ++f) {
    const Point3 c = p.face_center(f);
    if (parallel(c, dir, 0.0) && dot(c, dir).sign() > 0) return f;
  }
  return std::nullopt;
}

Point3 normal_along(const Polyhedron& p, const Point3& dir) {
  const auto f = face_along(p, dir);
  if (!f) throw std::logic_error("reference solid has no face in the expected direction");
  return p.face_normal(*f);
}

}  // namespace

NetSpec generate_nets(const Q2& edge_len, int gyration) {
  if (edge_len.sign() <= 0) throw std::invalid_argument("edge length must be positive");
  if (gyration % 45 != 0) throw std::invalid_argument("gyration must be a multiple of 45");

  // Fold targets come from the rhombicuboctahedron in standard pose: the
  // belt, the cap and the tab-over-belt angles are all read off its faces.
  const Polyhedron ref = build_rhombicuboctahedron(edge_len);
  const Point3 down(Q2(0), Q2(-1), Q2(0));
  const Point3 up_slant(Q2(0), Q2(-1), Q2(1));
  const int belt_fold = dihedral_from_normals(normal_along(ref, down),
                                              normal_along(ref, Point3(Q2(1), Q2(-1), Q2(0))));
  const int cap_fold = dihedral_from_normals(normal_along(ref, Point3(Q2(0), Q2(0), Q2(1))),
                                             normal_along(ref, up_slant));
  // A tab lies flat on its host belt square, so it meets the side square
  // at the same angle the host does.
  const int tab_fold = dihedral_from_normals(normal_along(ref, up_slant), normal_along(ref, down));

  const int turn = ((gyration / 45) % 8 + 8) % 8;
  const Polyhedron target = turn % 2 == 0 ? ref : build_pseudo_rhombicuboctahedron(edge_len);

  NetSpec net;
  net.edge_len = edge_len;
  net.gyration = gyration;
  auto add = [&](Piece piece, int index, GridPos pos, SquareRole role,
                 std::optional<Point3> dir) {
    NetSquare s{static_cast<int>(net.squares.size()), piece, index, pos, role, std::nullopt};
    if (dir) s.world_target = face_along(target, *dir);
    net.squares.push_back(s);
    return s.id;
  };

  for (int i = 0; i < 9; ++i) {
    const bool lap = i == 8;
    add(Piece::strip, i, {i, 0}, lap ? SquareRole::glue : SquareRole::face,
        lap ? std::nullopt : std::optional(belt_direction(i)));
    if (i > 0) net.creases.push_back({i - 1, i, belt_fold});
  }
  net.gluing.push_back({GlueInstruction::Kind::overlap, net.square_id(Piece::strip, 8),
                        net.square_id(Piece::strip, 0)});

  for (Piece cap : {Piece::cap_north, Piece::cap_south}) {
    const Q2 pole_z = cap == Piece::cap_north ? Q2(1) : Q2(-1);
    const int pole = add(cap, 0, {0, 0}, SquareRole::pole_face, Point3(Q2(0), Q2(0), pole_z));
    std::array<int, 4> sides{};
    for (int k = 0; k < 4; ++k) {
      Point3 dir = belt_direction(cap_host_index(cap, k, gyration));
      dir.z = pole_z;
      sides[k] = add(cap, 1 + k, kArms[k], SquareRole::face, dir);
      net.creases.push_back({pole, sides[k], cap_fold});
    }
    for (int k = 0; k < 4; ++k) {
      const int tab =
          add(cap, 5 + k, {2 * kArms[k].x, 2 * kArms[k].y}, SquareRole::glue, std::nullopt);
      net.creases.push_back({sides[k], tab, tab_fold});
      const int host = net.square_id(Piece::strip, cap_host_index(cap, k, gyration));
      net.gluing.push_back({GlueInstruction::Kind::overlap, tab, host});
      net.gluing.push_back({GlueInstruction::Kind::edge_join, sides[k], host, kArmSides[k],
                            cap == Piece::cap_north ? Side::north : Side::south});
    }
  }
  return net;
}

// ---- paper and packing ------------------------------------------------

namespace {

const std::array<PaperSize, 5> kStandard{{{"A4", 210, 297},
                                          {"A3", 297, 420},
                                          {"A2", 420, 594},
                                          {"A1", 594, 841},
                                          {"A0", 841, 1189}}};

struct Box {
  Piece piece;
  double w, h;  // unrotated, mm
};

std::vector<Box> piece_boxes(const NetSpec& net) {
  const double L = net.edge_len.to_double();
  std::vector<Box> out;
  for (Piece p : {Piece::strip, Piece::cap_north, Piece::cap_south}) {
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    bool first = true;
    for (int id : net.piece_squares(p)) {
      const GridPos g = net.squares[id].pos;
      if (first || g.x < x0) x0 = g.x;
      if (first || g.x + 1 > x1) x1 = g.x + 1;
      if (first || g.y < y0) y0 = g.y;
      if (first || g.y + 1 > y1) y1 = g.y + 1;
      first = false;
    }
    out.push_back({p, (x1 - x0) * L, (y1 - y0) * L});
  }
  return out;
}

std::optional<SheetLayout> try_pack(const std::vector<Box>& boxes, double sheet_w,
                                    double sheet_h) {
  const double W = sheet_w - 2 * kSheetMargin;
  const double H = sheet_h - 2 * kSheetMargin;
  std::vector<Box> order = boxes;
  std::stable_sort(order.begin(), order.end(), [](const Box& a, const Box& b) {
    return std::max(a.w, a.h) > std::max(b.w, b.h);
  });
  SheetLayout layout{sheet_w, sheet_h, sheet_w > sheet_h, {}};
  double x = 0, y = 0, shelf = 0;
  for (const Box& b : order) {
    const double lng = std::max(b.w, b.h), sht = std::min(b.w, b.h);
    double w = lng, h = sht;
    if (lng > W) std::swap(w, h);
    if (w > W) return std::nullopt;
    if (x > 0 && x + w > W) {
      y += shelf + kPieceGap;
      x = 0;
      shelf = 0;
    }
    if (y + h > H) return std::nullopt;
    const bool rotated = w != b.w;
    layout.pieces.push_back({b.piece, kSheetMargin + x, kSheetMargin + y, w, h, rotated});
    x += w + kPieceGap;
    shelf = std::max(shelf, h);
  }
  std::sort(layout.pieces.begin(), layout.pieces.end(),
            [](const auto& a, const auto& b) { return a.piece < b.piece; });
  return layout;
}

std::optional<SheetLayout> pack_on(const std::vector<Box>& boxes, const PaperSize& paper) {
  const double s = std::min(paper.width_mm, paper.height_mm);
  const double l = std::max(paper.width_mm, paper.height_mm);
  if (auto portrait = try_pack(boxes, s, l)) return portrait;
  return try_pack(boxes, l, s);
}

}  // namespace

PaperSize standard_paper(const std::string& name) {
  std::string upper;
  for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& p : kStandard)
    if (p.name == upper) return p;
  throw std::invalid_argument(fmt::format("unknown paper size '{}'", name));
}

PaperSize parse_paper(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) return standard_paper(text);
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || !(v > 0) || !std::isfinite(v))
      throw std::invalid_argument(fmt::format("bad paper size '{}' (expected A0-A4 or WxH)", text));
    return v;
  };
  return {text, number(text.substr(0, x)), number(text.substr(x + 1))};
}

SheetLayout pack_pieces(const NetSpec& net, const PaperSize& paper) {
  const auto boxes = piece_boxes(net);
  if (auto layout = pack_on(boxes, paper)) return *layout;
  std::optional<std::string> suggestion;
  for (const auto& p : kStandard) {
    if (pack_on(boxes, p)) {
      suggestion = p.name;
      break;
    }
  }
  std::string msg = fmt::format("pieces do not fit on {} ({}x{} mm) with {} mm margins",
                                paper.name, paper.width_mm, paper.height_mm, kSheetMargin);
  msg += suggestion ? fmt::format("; smallest sheet that fits: {}", *suggestion)
                    : std::string("; no standard sheet up to A0 fits");
  throw DoesNotFit(msg, suggestion);
}

// ---- SVG --------------------------------------------------------------

namespace {

std::string num(double v) {
  std::string s = fmt::format("{:.3f}", v);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

struct SheetMap {
  PlacedPiece place;
  double L, x0, y0, fw, fh;  // flat origin and flat size of the piece box

  std::pair<double, double> operator()(double u, double v) const {
    const double lu = u - x0, lv = v - y0;
    if (!place.rotated) return {place.x + lu, place.y + (fh - lv)};
    return {place.x + (fh - lv), place.y + (fw - lu)};
  }
};

std::string line(const char* cls, std::pair<double, double> a, std::pair<double, double> b,
                 const char* extra) {
  return fmt::format("<line class=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"{}/>\n", cls,
                     num(a.first), num(a.second), num(b.first), num(b.second), extra);
}

}  // namespace

std::string render_svg(const NetSpec& net, const PaperSize& paper) {
  if (net.edge_len.sign() <= 0) throw std::invalid_argument("edge length must be positive");
  const SheetLayout layout = pack_pieces(net, paper);
  const double L = net.edge_len.to_double();

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}mm\" "
      "height=\"{1}mm\" viewBox=\"0 0 {0} {1}\">\n",
      num(layout.width_mm), num(layout.height_mm));
  out << fmt::format("<title>{} papercraft nets</title>\n", kVersion);

  const char* cut_style = " stroke=\"#000000\" stroke-width=\"0.5\"";
  const char* crease_style =
      " stroke=\"#000000\" stroke-width=\"0.35\" stroke-dasharray=\"3 2\"";

  for (const PlacedPiece& place : layout.pieces) {
    const auto ids = net.piece_squares(place.piece);
    int gx0 = 0, gy0 = 0, gx1 = 0, gy1 = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const GridPos g = net.squares[ids[i]].pos;
      gx0 = i ? std::min(gx0, g.x) : g.x;
      gy0 = i ? std::min(gy0, g.y) : g.y;
      gx1 = i ? std::max(gx1, g.x + 1) : g.x + 1;
      gy1 = i ? std::max(gy1, g.y + 1) : g.y + 1;
    }
    const SheetMap map{place, L, gx0 * L, gy0 * L, (gx1 - gx0) * L, (gy1 - gy0) * L};
    std::map<std::pair<int, int>, int> at;
    for (int id : ids) at[{net.squares[id].pos.x, net.squares[id].pos.y}] = id;

    out << fmt::format("<g class=\"piece\" data-piece=\"{}\">\n", piece_name(place.piece));
    for (int id : ids) {
      const NetSquare& s = net.squares[id];
      const double u = s.pos.x * L, v = s.pos.y * L;
      const std::array<std::pair<double, double>, 4> c{map(u, v), map(u + L, v),
                                                       map(u + L, v + L), map(u, v + L)};
      out << fmt::format(
          "<path class=\"square\" data-piece=\"{}\" data-index=\"{}\" data-role=\"{}\" "
          "d=\"M {} {} L {} {} L {} {} L {} {} Z\" fill=\"{}\" stroke=\"none\"/>\n",
          piece_name(s.piece), s.index, role_name(s.role), num(c[0].first), num(c[0].second),
          num(c[1].first), num(c[1].second), num(c[2].first), num(c[2].second),
          num(c[3].first), num(c[3].second),
          s.role == SquareRole::glue ? "#cccccc" : "#ffffff");
    }
    for (const Crease& cr : net.creases) {
      const NetSquare& a = net.squares[cr.parent];
      const NetSquare& b = net.squares[cr.child];
      if (a.piece != place.piece) continue;
      // Shared edge of two grid-adjacent squares.
      const int ux = std::max(a.pos.x, b.pos.x), uy = std::max(a.pos.y, b.pos.y);
      const bool vertical = a.pos.x != b.pos.x;
      const double u = ux * L, v = uy * L;
      out << line("crease", map(u, v), vertical ? map(u, v + L) : map(u + L, v), crease_style);
    }
    for (int id : ids) {
      const NetSquare& s = net.squares[id];
      const double u = s.pos.x * L, v = s.pos.y * L;
      const int x = s.pos.x, y = s.pos.y;
      if (!at.count({x, y - 1})) out << line("cut", map(u, v), map(u + L, v), cut_style);
      if (!at.count({x + 1, y})) out << line("cut", map(u + L, v), map(u + L, v + L), cut_style);
      if (!at.count({x, y + 1})) out << line("cut", map(u + L, v + L), map(u, v + L), cut_style);
      if (!at.count({x - 1, y})) out << line("cut", map(u, v + L), map(u, v), cut_style);
    }
    for (int id : ids) {
      const NetSquare& s = net.squares[id];
      if (s.role != SquareRole::pole_face) continue;
      const auto [cx, cy] = map((s.pos.x + 0.5) * L, (s.pos.y + 0.5) * L);
      const double d = 3.0 / std::sqrt(2.0);  // half of a 6 mm stroke
      out << "<g class=\"pole-cross\">\n";
      out << line("pole", {cx - d, cy - d}, {cx + d, cy + d}, cut_style);
      out << line("pole", {cx - d, cy + d}, {cx + d, cy - d}, cut_style);
      out << "</g>\n";
    }
    out << "</g>\n";
  }

  const double tx = kSheetMargin, ty = layout.height_mm - kSheetMargin + 3;
  out << "<g class=\"title-block\" font-family=\"sans-serif\" font-size=\"2.2\">\n";
  const std::array<std::string, 3> lines{
      fmt::format("{} | edge {} mm | sheet {} {}", kVersion, num(L), paper.name,
                  layout.landscape ? "landscape" : "portrait"),
      "grey: glue surfaces | dashed: fold | cross: pole | cap layout is an interpretation: "
      "plus of five squares, glue tab on each arm",
      "north cap turned 0 deg gives the rhombicuboctahedron, 45 deg the "
      "pseudo-rhombicuboctahedron"};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", num(tx), num(ty + 2.6 * i),
                       lines[i]);
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace gyrolab
