#include "gyrolab/off_io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace gyrolab {

OffParseError::OffParseError(int line, const std::string& what)
    : ParseError("line " + std::to_string(line) + ": " + what),
      line_(line),
      detail_(what) {}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line with comments stripped; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }
  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

}  // namespace

FloatPolyhedron read_off(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw OffParseError(reader.number(), "empty file");

  std::istringstream header(line);
  std::string magic;
  header >> magic;
  if (magic != "OFF") throw OffParseError(reader.number(), "expected 'OFF' header");

  long nv = -1, nf = -1, ne = 0;
  if (!(header >> nv)) {
    if (!reader.next(line)) throw OffParseError(reader.number(), "missing counts line");
    header = std::istringstream(line);
    header >> nv;
  }
  if (!(header >> nf)) throw OffParseError(reader.number(), "malformed counts line");
  header >> ne;
  if (nv < 0 || nf < 0) throw OffParseError(reader.number(), "negative counts");

  std::vector<Vec3<double>> verts;
  verts.reserve(static_cast<std::size_t>(nv));
  for (long i = 0; i < nv; ++i) {
    if (!reader.next(line)) {
      throw OffParseError(reader.number(), "expected " + std::to_string(nv) +
                                               " vertices, found " + std::to_string(i));
    }
    std::istringstream ls(line);
    Vec3<double> p;
    if (!(ls >> p.x >> p.y >> p.z)) {
      throw OffParseError(reader.number(), "malformed vertex line");
    }
    verts.push_back(p);
  }

  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(nf));
  for (long i = 0; i < nf; ++i) {
    if (!reader.next(line)) {
      throw OffParseError(reader.number(), "expected " + std::to_string(nf) +
                                               " faces, found " + std::to_string(i));
    }
    std::istringstream ls(line);
    int count = 0;
    if (!(ls >> count) || count < 3) {
      throw OffParseError(reader.number(), "malformed face line");
    }
    Face f(static_cast<std::size_t>(count));
    for (int& v : f) {
      if (!(ls >> v)) throw OffParseError(reader.number(), "face line too short");
    }
    faces.push_back(std::move(f));
  }
  return {std::move(verts), std::move(faces)};
}

FloatPolyhedron read_off_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  try {
    return read_off(in);
  } catch (const OffParseError& e) {
    throw OffParseError(e.line(), path.string() + ": " + e.detail());
  }
}

void write_off(std::ostream& out, const FloatPolyhedron& p) {
  out << "OFF\n" << p.num_vertices() << ' ' << p.num_faces() << ' ' << p.num_edges() << '\n';
  for (const auto& v : p.vertices()) {
    out << fmt::format("{:.17g} {:.17g} {:.17g}\n", v.x, v.y, v.z);
  }
  for (const Face& f : p.faces()) {
    out << f.size();
    for (int v : f) out << ' ' << v;
    out << '\n';
  }
}

void write_off(std::ostream& out, const Polyhedron& p) { write_off(out, to_float(p)); }

}  // namespace gyrolab
