#pragma once

#include <cmath>

namespace logcave {

/// Point or vector in chart coordinates.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
/// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// Symmetric 2x2 tensor in chart components.
struct Sym2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  constexpr double operator()(Vec2 a, Vec2 b) const {
    return xx * a.x * b.x + xy * (a.x * b.y + a.y * b.x) + yy * a.y * b.y;
  }
  constexpr double trace() const { return xx + yy; }

  friend constexpr Sym2 operator+(Sym2 a, Sym2 b) { return {a.xx + b.xx, a.xy + b.xy, a.yy + b.yy}; }
  friend constexpr Sym2 operator-(Sym2 a, Sym2 b) { return {a.xx - b.xx, a.xy - b.xy, a.yy - b.yy}; }
  friend constexpr Sym2 operator*(double s, Sym2 a) { return {s * a.xx, s * a.xy, s * a.yy}; }
};

/// Outer product a ⊗ a.
constexpr Sym2 outer(Vec2 a) { return {a.x * a.x, a.x * a.y, a.y * a.y}; }

/// Closed-form spectral decomposition of a symmetric 2x2 matrix.
struct SymEigen {
  double hi = 0.0;
  double lo = 0.0;
  Vec2 vec_hi{1.0, 0.0};
  Vec2 vec_lo{0.0, 1.0};
  bool isotropic = false;
};

inline SymEigen eigen_sym2(const Sym2& m) {
  const double mean = 0.5 * (m.xx + m.yy);
  const double half_diff = 0.5 * (m.xx - m.yy);
  const double radius = std::hypot(half_diff, m.xy);
  SymEigen out;
  out.hi = mean + radius;
  out.lo = mean - radius;
  const double scale = std::abs(m.xx) + std::abs(m.yy) + std::abs(m.xy);
  if (radius <= 1e-14 * scale || radius == 0.0) {
    out.isotropic = true;
    return out;
  }
  const double angle = 0.5 * std::atan2(m.xy, half_diff);
  out.vec_hi = {std::cos(angle), std::sin(angle)};
  out.vec_lo = perp(out.vec_hi);
  return out;
}

/// Value of a scalar field with its chart partials through second order.
struct Jet {
  double f = 0.0;
  double fx = 0.0;
  double fy = 0.0;
  double fxx = 0.0;
  double fxy = 0.0;
  double fyy = 0.0;

  constexpr Vec2 grad() const { return {fx, fy}; }
  constexpr Sym2 hess() const { return {fxx, fxy, fyy}; }
};

struct Box {
  Vec2 lo;
  Vec2 hi;
};

inline constexpr double kPi = 3.14159265358979323846;

constexpr double sq(double x) { return x * x; }

}  // namespace logcave
