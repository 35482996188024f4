#pragma once

#include <cmath>
#include <filesystem>
#include <string>

#include "gyrolab/off_io.hpp"
#include "gyrolab/polyhedron.hpp"

namespace gyrolab::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(GYROLAB_TEST_DATA) / name;
}

/// Exact copy of a float mesh whose coordinates are all integers.
inline Polyhedron exact_from_integral(const FloatPolyhedron& p) {
  std::vector<Point3> verts;
  for (const auto& v : p.vertices()) {
    verts.emplace_back(Q2(std::lround(v.x)), Q2(std::lround(v.y)), Q2(std::lround(v.z)));
  }
  return {std::move(verts), p.faces()};
}

inline Polyhedron cube_fixture() {
  return exact_from_integral(read_off_file(data_path("cube.off")));
}

}  // namespace gyrolab::testing
