#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <set>

#include "gyrolab/netgen.hpp"
#include "gyrolab/solids.hpp"

namespace {

using namespace gyrolab;

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

TEST(Nets, PieceStructure) {
  const NetSpec net = generate_nets(Q2(50));
  EXPECT_EQ(net.squares.size(), 27u);
  EXPECT_EQ(net.count_role(SquareRole::glue), 9);
  EXPECT_EQ(net.count_role(SquareRole::pole_face), 2);
  EXPECT_EQ(net.count_role(SquareRole::face), 16);
  for (Piece p : {Piece::strip, Piece::cap_north, Piece::cap_south}) {
    EXPECT_EQ(net.piece_squares(p).size(), 9u) << piece_name(p);
  }
  // Strip: nine collinear squares, the last one is the lap.
  for (int i = 0; i < 9; ++i) {
    const NetSquare& s = net.squares[net.square_id(Piece::strip, i)];
    EXPECT_EQ(s.pos, (GridPos{i, 0}));
    EXPECT_EQ(s.role, i == 8 ? SquareRole::glue : SquareRole::face);
  }
  // Face-role squares together equal the 18 quads of the solids.
  EXPECT_EQ(net.count_role(SquareRole::face) + net.count_role(SquareRole::pole_face),
            face_census(build_rhombicuboctahedron(Q2(50))).quads);
}

TEST(Nets, CreasesFormTreesOfNeighbours) {
  const NetSpec net = generate_nets(Q2(50));
  EXPECT_EQ(net.creases.size(), 24u);  // 8 per piece: a spanning tree of 9 squares
  std::set<int> children;
  for (const Crease& c : net.creases) {
    const NetSquare& a = net.squares[c.parent];
    const NetSquare& b = net.squares[c.child];
    EXPECT_EQ(a.piece, b.piece);
    EXPECT_EQ(std::abs(a.pos.x - b.pos.x) + std::abs(a.pos.y - b.pos.y), 1);
    EXPECT_TRUE(children.insert(c.child).second);
    EXPECT_EQ(c.fold_target, 135);
  }
}

TEST(Nets, DihedralFromNormals) {
  const Point3 z(Q2(0), Q2(0), Q2(1));
  EXPECT_EQ(dihedral_from_normals(z, z), 180);
  EXPECT_EQ(dihedral_from_normals(z, Point3(Q2(1), Q2(0), Q2(0))), 90);
  EXPECT_EQ(dihedral_from_normals(z, Point3(Q2(0), Q2(-1), Q2(1))), 135);
  EXPECT_EQ(dihedral_from_normals(z, Point3(Q2(0), Q2(-1), Q2(-1))), 45);
  EXPECT_THROW(dihedral_from_normals(z, Point3(Q2(0), Q2(1), Q2(2))), std::invalid_argument);
}

TEST(Nets, GluingInstructions) {
  const NetSpec net = generate_nets(Q2(50));
  ASSERT_EQ(net.gluing.size(), 17u);  // 1 lap + 8 tabs + 8 edge joins
  const GlueInstruction& lap = net.gluing.front();
  EXPECT_EQ(lap.square, net.square_id(Piece::strip, 8));
  EXPECT_EQ(lap.host, net.square_id(Piece::strip, 0));
  std::set<int> north_hosts, south_hosts;
  for (const auto& g : net.gluing) {
    if (g.kind != GlueInstruction::Kind::overlap) continue;
    const Piece p = net.squares[g.square].piece;
    if (p == Piece::cap_north) north_hosts.insert(net.squares[g.host].index);
    if (p == Piece::cap_south) south_hosts.insert(net.squares[g.host].index);
  }
  EXPECT_EQ(north_hosts, (std::set<int>{0, 2, 4, 6}));
  EXPECT_EQ(south_hosts, (std::set<int>{0, 2, 4, 6}));
  const NetSpec turned = generate_nets(Q2(50), 45);
  std::set<int> turned_hosts;
  for (int k = 0; k < 4; ++k) turned_hosts.insert(cap_host_index(Piece::cap_north, k, 45));
  EXPECT_EQ(turned_hosts, (std::set<int>{1, 3, 5, 7}));
}

TEST(Nets, WorldTargetsCoverEveryQuadOnce) {
  for (int g : {0, 45}) {
    const NetSpec net = generate_nets(Q2(50), g);
    std::set<int> targets;
    for (const auto& s : net.squares) {
      if (s.role == SquareRole::glue) {
        EXPECT_FALSE(s.world_target);
      } else {
        ASSERT_TRUE(s.world_target);
        targets.insert(*s.world_target);
      }
    }
    EXPECT_EQ(targets.size(), 18u);
  }
}

TEST(Nets, RejectsBadInput) {
  EXPECT_THROW(generate_nets(Q2(0)), std::invalid_argument);
  EXPECT_THROW(generate_nets(Q2(-5)), std::invalid_argument);
}

TEST(Paper, Parsing) {
  EXPECT_EQ(parse_paper("A2").width_mm, 420);
  EXPECT_EQ(parse_paper("a4").height_mm, 297);
  const PaperSize custom = parse_paper("500x300");
  EXPECT_EQ(custom.width_mm, 500);
  EXPECT_EQ(custom.height_mm, 300);
  EXPECT_THROW(parse_paper("B5"), std::invalid_argument);
  EXPECT_THROW(parse_paper("100x"), std::invalid_argument);
  EXPECT_THROW(parse_paper("0x100"), std::invalid_argument);
}

TEST(Paper, DefaultNetsFitA2) {
  const SheetLayout layout = pack_pieces(generate_nets(Q2(50)), standard_paper("A2"));
  EXPECT_EQ(layout.pieces.size(), 3u);
  for (const auto& p : layout.pieces) {
    EXPECT_GE(p.x, kSheetMargin);
    EXPECT_GE(p.y, kSheetMargin);
    EXPECT_LE(p.x + p.width, layout.width_mm - kSheetMargin);
    EXPECT_LE(p.y + p.height, layout.height_mm - kSheetMargin);
  }
  // Boxes keep the gap between each other.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto& a = layout.pieces[i];
      const auto& b = layout.pieces[j];
      const bool apart = a.x + a.width + kPieceGap <= b.x + 1e-9 ||
                         b.x + b.width + kPieceGap <= a.x + 1e-9 ||
                         a.y + a.height + kPieceGap <= b.y + 1e-9 ||
                         b.y + b.height + kPieceGap <= a.y + 1e-9;
      EXPECT_TRUE(apart);
    }
}

TEST(Paper, TooSmallSheetNamesOneThatFits) {
  const NetSpec net = generate_nets(Q2(50));
  try {
    pack_pieces(net, standard_paper("A4"));
    FAIL();
  } catch (const DoesNotFit& e) {
    ASSERT_TRUE(e.suggestion());
    EXPECT_EQ(*e.suggestion(), "A2");
    EXPECT_NE(std::string(e.what()).find("A2"), std::string::npos);
  }
  EXPECT_THROW(pack_pieces(net, standard_paper("A3")), DoesNotFit);
  // A 30 mm set has caps of 150 mm across; two of them need 305 mm.
  try {
    pack_pieces(generate_nets(Q2(30)), standard_paper("A4"));
    FAIL();
  } catch (const DoesNotFit& e) {
    EXPECT_EQ(e.suggestion(), std::optional<std::string>("A3"));
  }
  EXPECT_NO_THROW(pack_pieces(generate_nets(Q2(30)), standard_paper("A3")));
  EXPECT_NO_THROW(pack_pieces(generate_nets(Q2(20)), standard_paper("A4")));
}

TEST(Svg, CountsAndStyles) {
  const std::string svg = render_svg(generate_nets(Q2(50)), standard_paper("A2"));
  EXPECT_EQ(count(svg, "class=\"square\""), 27);
  EXPECT_EQ(count(svg, "data-role=\"glue\""), 9);
  EXPECT_EQ(count(svg, "fill=\"#cccccc\""), 9);
  EXPECT_EQ(count(svg, "class=\"pole-cross\""), 2);
  EXPECT_EQ(count(svg, "class=\"crease\""), 24);
  EXPECT_NE(svg.find("width=\"594mm\" height=\"420mm\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-width=\"0.5\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_NE(svg.find(kVersion), std::string::npos);
  EXPECT_NE(svg.find("interpretation"), std::string::npos);
}

TEST(Svg, PoleCrossStrokesAreSixMillimetres) {
  const std::string svg = render_svg(generate_nets(Q2(50)), standard_paper("A2"));
  const std::regex stroke(
      "<line class=\"pole\" x1=\"([-0-9.]+)\" y1=\"([-0-9.]+)\" x2=\"([-0-9.]+)\" "
      "y2=\"([-0-9.]+)\"");
  int n = 0;
  for (std::sregex_iterator it(svg.begin(), svg.end(), stroke), end; it != end; ++it, ++n) {
    const double dx = std::stod((*it)[3]) - std::stod((*it)[1]);
    const double dy = std::stod((*it)[4]) - std::stod((*it)[2]);
    EXPECT_NEAR(std::hypot(dx, dy), 6.0, 2e-3);
  }
  EXPECT_EQ(n, 4);
}

TEST(Svg, PathsParseBackToSquares) {
  for (double edge : {50.0, 12.5}) {
    const NetSpec net = generate_nets(Q2::from_decimal(edge == 50.0 ? "50" : "12.5"));
    const std::string svg = render_svg(net, standard_paper("A2"));
    const std::regex path(
        "d=\"M ([-0-9.]+) ([-0-9.]+) L ([-0-9.]+) ([-0-9.]+) L ([-0-9.]+) ([-0-9.]+) "
        "L ([-0-9.]+) ([-0-9.]+) Z\"");
    int n = 0;
    for (std::sregex_iterator it(svg.begin(), svg.end(), path), end; it != end; ++it, ++n) {
      double x[4], y[4];
      for (int i = 0; i < 4; ++i) {
        x[i] = std::stod((*it)[1 + 2 * i]);
        y[i] = std::stod((*it)[2 + 2 * i]);
      }
      for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) % 4;
        EXPECT_NEAR(std::hypot(x[j] - x[i], y[j] - y[i]), edge, 1e-3);
      }
      EXPECT_NEAR(std::hypot(x[2] - x[0], y[2] - y[0]), edge * std::sqrt(2.0), 1e-3);
      for (int i = 0; i < 4; ++i) {
        EXPECT_GE(x[i], kSheetMargin - 1e-9);
        EXPECT_GE(y[i], kSheetMargin - 1e-9);
      }
    }
    EXPECT_EQ(n, 27);
  }
}

TEST(Svg, Deterministic) {
  const NetSpec net = generate_nets(Q2(50));
  EXPECT_EQ(render_svg(net, standard_paper("A2")),
            render_svg(generate_nets(Q2(50)), standard_paper("A2")));
}

TEST(Svg, CustomSheetSizeIsUsed) {
  const std::string svg = render_svg(generate_nets(Q2(50)), parse_paper("700x500"));
  EXPECT_NE(svg.find("viewBox=\"0 0 "), std::string::npos);
  EXPECT_NE(svg.find("700"), std::string::npos);
}

}  // namespace
