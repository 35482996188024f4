#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gyrolab/geometry.hpp"
#include "gyrolab/polyhedron.hpp"

namespace gyrolab {

enum class Piece { strip, cap_north, cap_south };
enum class SquareRole { face, glue, pole_face };
/// Edges of a net square, named by the direction they face in the net plane.
enum class Side { south, east, north, west };

std::string piece_name(Piece p);  // "strip", "cap-north", "cap-south"
std::string role_name(SquareRole r);  // "face", "glue", "pole-face"
std::string side_name(Side s);

struct GridPos {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridPos&, const GridPos&) = default;
};

/**
 * One unit square of a piece. The square at grid (x, y) covers
 * [x L, (x+1) L] x [y L, (y+1) L] of its piece's plane; that plane's +z
 * side is the printed side and ends up outside the model.
 */
struct NetSquare {
  int id = 0;     // index into NetSpec::squares
  Piece piece = Piece::strip;
  int index = 0;  // position within its piece
  GridPos pos;
  SquareRole role = SquareRole::face;
  /// Face of the target solid this square becomes (face roles only).
  std::optional<int> world_target;
};

/// Fold line between two edge-adjacent squares of one piece. The child is
/// the square farther from the piece root; fold_target is the dihedral
/// angle between the two squares in the folded model, in degrees.
struct Crease {
  int parent = 0;
  int child = 0;
  int fold_target = 180;
};

struct GlueInstruction {
  enum class Kind { overlap, edge_join };
  Kind kind = Kind::overlap;
  int square = 0;  // the one carrying glue (tab) or the moving edge
  int host = 0;
  Side square_edge = Side::south;  // edge_join only
  Side host_edge = Side::south;    // edge_join only
};

struct NetSpec {
  Q2 edge_len;
  int gyration = 0;
  std::vector<NetSquare> squares;
  std::vector<Crease> creases;
  std::vector<GlueInstruction> gluing;

  std::vector<int> piece_squares(Piece p) const;
  int count_role(SquareRole r) const;
  int square_id(Piece p, int index) const;
};

/**
 * The three pieces: a 1x9 strip (8 belt faces and a lap square) and two
 * caps, each a plus of five squares (pole and four sides) with a glue tab
 * on the outer edge of every side square. Fold targets are derived from
 * the face normals of the target solid; world targets are looked up in the
 * solid that the given gyration produces. Gyration must be a multiple of 45.
 */
NetSpec generate_nets(const Q2& edge_len, int gyration = 0);

/// Strip square that cap side k (0..3 = south, east, north, west in the net)
/// sits on after assembly.
int cap_host_index(Piece cap, int side, int gyration);

/// Dihedral angle (degrees) between two faces with the given outward
/// normals meeting along an edge: 180 minus the angle between the normals.
/// Throws std::invalid_argument if it is not a multiple of 45.
int dihedral_from_normals(const Point3& a, const Point3& b);

// ---- SVG --------------------------------------------------------------

struct PaperSize {
  std::string name;  // "A2", or "WxH" for custom sizes
  double width_mm = 0;
  double height_mm = 0;
};

/// "A0".."A4" (case-insensitive) or "WxH" in millimetres.
PaperSize parse_paper(const std::string& text);
PaperSize standard_paper(const std::string& name);

class DoesNotFit : public std::runtime_error {
 public:
  DoesNotFit(const std::string& what, std::optional<std::string> suggestion)
      : std::runtime_error(what), suggestion_(std::move(suggestion)) {}
  const std::optional<std::string>& suggestion() const { return suggestion_; }

 private:
  std::optional<std::string> suggestion_;
};

struct PlacedPiece {
  Piece piece = Piece::strip;
  double x = 0, y = 0;  // top-left of the piece's box on the sheet, mm
  double width = 0, height = 0;
  bool rotated = false;  // turned 90 degrees
};

struct SheetLayout {
  double width_mm = 0, height_mm = 0;  // oriented sheet
  bool landscape = false;
  std::vector<PlacedPiece> pieces;
};

inline constexpr double kSheetMargin = 10.0;
inline constexpr double kPieceGap = 5.0;

/// Shelf packing of the piece bounding boxes; portrait is tried before
/// landscape. Throws DoesNotFit naming the smallest A-size sheet that fits.
SheetLayout pack_pieces(const NetSpec& net, const PaperSize& paper);

std::string render_svg(const NetSpec& net, const PaperSize& paper);

inline constexpr const char* kVersion = "gyrolab 1.0.0";

}  // namespace gyrolab
