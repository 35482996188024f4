#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <type_traits>
#include <utility>

#include "gyrolab/qfield.hpp"

namespace gyrolab {

// Scalar policy. Geometry code is written once and instantiated for Q2
// (exact mode) and double (tolerance mode, used for ingested meshes). The
// tolerance argument is ignored for Q2.

inline int sign_of(const Q2& x, double /*tol*/) { return x.sign(); }
inline int sign_of(double x, double tol) {
  return x > tol ? 1 : (x < -tol ? -1 : 0);
}
template <class S>
bool is_zero(const S& x, double tol) {
  return sign_of(x, tol) == 0;
}

inline double to_double(const Q2& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, Q2>;

template <class S>
struct Vec3 {
  S x{}, y{}, z{};

  Vec3() = default;
  Vec3(S x_, S y_, S z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  const S& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  S& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Vec3& operator*=(const S& k) {
    x *= k;
    y *= k;
    z *= k;
    return *this;
  }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(Vec3 a, const S& k) { return a *= k; }
  friend Vec3 operator*(const S& k, Vec3 a) { return a *= k; }
  friend Vec3 operator/(const Vec3& a, const S& k) {
    return {a.x / k, a.y / k, a.z / k};
  }
  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

using Point3 = Vec3<Q2>;

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class S>
S norm2(const Vec3<S>& a) {
  return dot(a, a);
}

template <class S>
bool is_zero_vec(const Vec3<S>& v, double tol) {
  return is_zero(v.x, tol) && is_zero(v.y, tol) && is_zero(v.z, tol);
}

template <class S>
bool near(const Vec3<S>& a, const Vec3<S>& b, double tol) {
  if constexpr (is_exact_v<S>) {
    return a == b;
  } else {
    return is_zero_vec(a - b, tol);
  }
}

/// a and b lie on a common line through the origin.
template <class S>
bool parallel(const Vec3<S>& a, const Vec3<S>& b, double tol) {
  return is_zero_vec(cross(a, b), tol);
}

inline Vec3<double> to_double(const Vec3<Q2>& v) {
  return {v.x.to_double(), v.y.to_double(), v.z.to_double()};
}
inline Vec3<double> to_double(const Vec3<double>& v) { return v; }

/// Lexicographic numeric order; used to give point sets a canonical order.
template <class S>
bool lex_less(const Vec3<S>& a, const Vec3<S>& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

/// Scales v so its first nonzero coordinate is +1; zero stays zero.
template <class S>
Vec3<S> canonical_direction(const Vec3<S>& v, double tol) {
  for (int i = 0; i < 3; ++i) {
    if (!is_zero(v[i], tol)) return v / v[i];
  }
  return v;
}

template <class S>
struct Mat3 {
  std::array<std::array<S, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = S(1);
    return r;
  }
  static Mat3 from_columns(const Vec3<S>& c0, const Vec3<S>& c1,
                           const Vec3<S>& c2) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      r.m[i][0] = c0[i];
      r.m[i][1] = c1[i];
      r.m[i][2] = c2[i];
    }
    return r;
  }

  const S& operator()(int i, int j) const { return m[i][j]; }
  S& operator()(int i, int j) { return m[i][j]; }

  Vec3<S> column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
  Vec3<S> row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  S trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  S det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  /// Adjugate over determinant. Throws DivisionByZero when singular in
  /// exact mode; the caller checks conditioning in tolerance mode.
  Mat3 inverse() const {
    const S d = det();
    if constexpr (is_exact_v<S>) {
      if (d.is_zero()) throw DivisionByZero("singular matrix");
    }
    Mat3 r;
    r.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    r.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    r.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    r.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    r.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    r.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    r.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    r.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    r.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return r;
  }

  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] +
                    a.m[i][2] * b.m[2][j];
    return r;
  }
  friend Vec3<S> operator*(const Mat3& a, const Vec3<S>& v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
            a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
            a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
  }
  friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
};

template <class S>
bool near(const Mat3<S>& a, const Mat3<S>& b, double tol) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!is_zero(a.m[i][j] - b.m[i][j], tol)) return false;
  return true;
}

template <class S>
Mat3<S> power(const Mat3<S>& a, int n) {
  Mat3<S> r = Mat3<S>::identity();
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

inline Mat3<double> to_double(const Mat3<Q2>& a) {
  Mat3<double> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j].to_double();
  return r;
}

/// (cos, sin) of an angle given in degrees, when both lie in Q(sqrt 2):
/// exactly the multiples of 45 degrees.
std::optional<std::pair<Q2, Q2>> exact_cos_sin(int degrees);

/// Angle in [0, 360) whose exact (cos, sin) is (c, s), if it is a multiple
/// of 45 degrees.
std::optional<int> exact_angle_degrees(const Q2& c, const Q2& s);

/// Right-handed rotation about a unit axis (|axis| == 1 exactly) by a
/// multiple of 45 degrees. Throws std::invalid_argument otherwise.
Mat3<Q2> exact_rotation(const Vec3<Q2>& unit_axis, int degrees);

/// Rigid motion p -> linear * p + offset.
template <class S>
struct RigidMotion {
  Mat3<S> linear = Mat3<S>::identity();
  Vec3<S> offset{};

  Vec3<S> operator()(const Vec3<S>& p) const { return linear * p + offset; }
  /// Composition: (a * b)(p) == a(b(p)).
  friend RigidMotion operator*(const RigidMotion& a, const RigidMotion& b) {
    return {a.linear * b.linear, a.linear * b.offset + a.offset};
  }
};

}  // namespace gyrolab
