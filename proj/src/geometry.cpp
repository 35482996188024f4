#include "gyrolab/geometry.hpp"

#include <stdexcept>
#include <string>

namespace gyrolab {

std::optional<std::pair<Q2, Q2>> exact_cos_sin(int degrees) {
  if (degrees % 45 != 0) return std::nullopt;
  const int k = ((degrees / 45) % 8 + 8) % 8;
  const Q2 h = Q2::rational(1, 2) * Q2::sqrt2();
  switch (k) {
    case 0: return std::pair{Q2(1), Q2(0)};
    case 1: return std::pair{h, h};
    case 2: return std::pair{Q2(0), Q2(1)};
    case 3: return std::pair{-h, h};
    case 4: return std::pair{Q2(-1), Q2(0)};
    case 5: return std::pair{-h, -h};
    case 6: return std::pair{Q2(0), Q2(-1)};
    default: return std::pair{h, -h};
  }
}

std::optional<int> exact_angle_degrees(const Q2& c, const Q2& s) {
  for (int deg = 0; deg < 360; deg += 45) {
    const auto cs = exact_cos_sin(deg);
    if (cs->first == c && cs->second == s) return deg;
  }
  return std::nullopt;
}

Mat3<Q2> exact_rotation(const Vec3<Q2>& u, int degrees) {
  const auto cs = exact_cos_sin(degrees);
  if (!cs) {
    throw std::invalid_argument("no exact rotation by " +
                                std::to_string(degrees) + " degrees");
  }
  if (norm2(u) != Q2(1)) throw std::invalid_argument("rotation axis not unit");
  const auto& [c, s] = *cs;
  // Rodrigues: c I + s [u]x + (1 - c) u u^T.
  const Q2 t = Q2(1) - c;
  Mat3<Q2> r;
  r.m = {{{c + t * u.x * u.x, t * u.x * u.y - s * u.z, t * u.x * u.z + s * u.y},
          {t * u.y * u.x + s * u.z, c + t * u.y * u.y, t * u.y * u.z - s * u.x},
          {t * u.z * u.x - s * u.y, t * u.z * u.y + s * u.x, c + t * u.z * u.z}}};
  return r;
}

}  // namespace gyrolab
