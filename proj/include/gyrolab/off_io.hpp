#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "gyrolab/polyhedron.hpp"
#include "gyrolab/qfield.hpp"

namespace gyrolab {

/// OFF syntax error; what() carries the 1-based line number.
class OffParseError : public ParseError {
 public:
  OffParseError(int line, const std::string& what);
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

/// ASCII OFF: "OFF" header, "V F E" counts, vertex lines, "n i1 ... in" face
/// lines. '#' comments and blank lines are skipped; trailing per-face colour
/// values are ignored.
FloatPolyhedron read_off(std::istream& in);
FloatPolyhedron read_off_file(const std::filesystem::path& path);

/// Coordinates are written with 17 significant digits.
void write_off(std::ostream& out, const FloatPolyhedron& p);
void write_off(std::ostream& out, const Polyhedron& p);

}  // namespace gyrolab
