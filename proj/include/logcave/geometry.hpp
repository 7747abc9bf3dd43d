#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logcave/types.hpp"

namespace logcave {

enum class ChartKind { Euclidean, Sphere, Hyperbolic, PerturbedSphere };

std::string to_string(ChartKind kind);
ChartKind chart_kind_from_string(std::string_view name);

/// Smooth function added (scaled by the amplitude) to the spherical conformal exponent.
struct Bump {
  enum class Kind { Linear, Gaussian };
  Kind kind = Kind::Linear;
  Vec2 slope{1.0, 0.0};  ///< linear: psi = slope . p
  Vec2 center{};         ///< gaussian: psi = exp(-|p - center|^2 / width^2)
  double width = 1.0;
};

/// Conformal exponent phi with chart derivatives through third order.
struct PhiJet {
  double value = 0.0;
  Vec2 d1;
  Sym2 d2;
  std::array<double, 4> d3{};  ///< xxx, xxy, xyy, yyy

  /// Third partial by index triple, each index 0 (x) or 1 (y).
  double third(int i, int j, int k) const { return d3[static_cast<std::size_t>(i + j + k)]; }
  double second(int i, int j) const { return i + j == 0 ? d2.xx : (i + j == 1 ? d2.xy : d2.yy); }
  double first(int i) const { return i == 0 ? d1.x : d1.y; }
};

/// Conformal chart g = e^{2 phi} (dx^2 + dy^2) with analytic phi.
///
/// Supported kinds:
///   - euclidean:           phi = 0
///   - sphere:              phi = log(2 / (1 + r^2))   (stereographic)
///   - hyperbolic:          phi = log(2 / (1 - r^2))   (Poincare disk, r < 1)
///   - perturbed sphere:    phi = phi_sphere + amplitude * psi
///
/// Gauss curvature is K = -e^{-2 phi} (phi_xx + phi_yy).
class MetricChart {
 public:
  static MetricChart euclidean();
  static MetricChart sphere();
  static MetricChart hyperbolic();
  static MetricChart perturbed_sphere(double amplitude, const Bump& bump);

  ChartKind kind() const noexcept { return kind_; }
  double amplitude() const noexcept { return amplitude_; }
  const Bump& bump() const noexcept { return bump_; }

  /// False for a perturbed sphere whose curvature is not positive on the closed unit chart disk.
  bool valid() const noexcept { return valid_; }
  bool is_space_form() const noexcept { return kind_ != ChartKind::PerturbedSphere; }
  /// Constant curvature of a space-form chart; throws for the perturbed sphere.
  double space_form_curvature() const;

  PhiJet phi(Vec2 p) const;
  double conformal_factor(Vec2 p) const;  ///< e^{2 phi}
  double gauss_curvature(Vec2 p) const;
  Vec2 gauss_curvature_gradient(Vec2 p) const;  ///< chart partials of K

 private:
  MetricChart(ChartKind kind, double amplitude, Bump bump);

  ChartKind kind_;
  double amplitude_ = 0.0;
  Bump bump_;
  bool valid_ = true;
};

MetricChart make_chart(ChartKind kind, double amplitude = 0.0, std::optional<Bump> bump = std::nullopt);

enum class Shape { Disk, Ellipse, Rectangle, Radial };

std::string to_string(Shape shape);

/// Star-shaped boundary r(theta) = mean + sum_k (a_k cos k theta + b_k sin k theta), k >= 1.
struct RadialProfile {
  double mean = 1.0;
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  double radius(double theta) const;
  double d1(double theta) const;
  double d2(double theta) const;
};

/// Boundary point with chart-Euclidean frame and curvature of the chart curve.
struct CurvePoint {
  Vec2 point;
  Vec2 tangent;  ///< unit, counterclockwise
  Vec2 normal;   ///< unit, outward
  double curvature = 0.0;
};

/// Region in chart coordinates. The boundary is oriented counterclockwise and
/// parametrized by chart arc length s in [0, perimeter).
class Domain {
 public:
  static Domain disk(Vec2 center, double radius);
  static Domain ellipse(Vec2 center, double semi_x, double semi_y);
  static Domain rectangle(Vec2 center, double width, double height);
  static Domain radial(Vec2 center, RadialProfile profile);

  Shape shape() const noexcept { return shape_; }
  Vec2 center() const noexcept { return center_; }
  double radius() const noexcept { return a_; }  ///< disk radius
  double semi_x() const noexcept { return a_; }
  double semi_y() const noexcept { return b_; }
  double width() const noexcept { return a_; }
  double height() const noexcept { return b_; }
  const RadialProfile& profile() const noexcept { return profile_; }

  /// Negative inside, zero on the boundary. Not a distance except for disks and rectangles.
  double level(Vec2 p) const;
  bool contains(Vec2 p) const { return level(p) < 0.0; }
  /// Signed chart distance to the boundary, negative inside.
  double signed_distance(Vec2 p) const;

  double perimeter() const noexcept { return perimeter_; }
  /// Throws DomainError at rectangle corners.
  CurvePoint at_arclength(double s) const;
  std::vector<double> corner_arclengths() const;
  bool has_corners() const noexcept { return shape_ == Shape::Rectangle; }

  Box bounding_box() const;
  /// Length defining grid levels: h = characteristic_length / level.
  double characteristic_length() const;

 private:
  struct Native {
    Vec2 p;
    Vec2 d1;
    Vec2 d2;
  };

  Domain(Shape shape, Vec2 center, double a, double b, RadialProfile profile);

  Native native(double t) const;
  double native_speed(double t) const;
  double param_from_arclength(double s) const;
  double nearest_param(Vec2 p) const;
  void build_arc_table();

  Shape shape_;
  Vec2 center_;
  double a_ = 0.0;
  double b_ = 0.0;
  RadialProfile profile_;
  double perimeter_ = 0.0;
  std::vector<double> arc_table_;  // cumulative arc length at uniform native parameters
};

/// Sectional (Gauss) curvature bounds over a domain.
struct CurvatureBudget {
  double kappa_lo = 0.0;
  double kappa_hi = 0.0;
  double pinching = 0.0;         ///< kappa_hi - kappa_lo
  double ricci_deriv_sup = 0.0;  ///< sup |nabla Ric|_g = sqrt(2) sup |nabla K|_g in two dimensions
  bool exact = true;             ///< constants of a space form rather than sampled extrema
  bool curvature_positive = true;
  double refinement_delta = 0.0;  ///< largest change of any bound during the refinement pass
  std::size_t samples = 0;
};

/// Samples K on a samples_per_axis^2 lattice over the closed domain, then refines
/// 4x around the cells attaining the extrema. Space forms return exact constants.
CurvatureBudget curvature_budget(const MetricChart& chart, const Domain& domain, int samples_per_axis = 64);

struct BoundaryGeometry {
  Vec2 point;
  Vec2 normal;   ///< outward, g-unit, chart components
  Vec2 tangent;  ///< counterclockwise, g-unit, chart components
  /// Geodesic curvature k_g = e^{-phi} (k_e + d_n phi); the boundary second fundamental form.
  double geodesic_curvature = 0.0;
  double arclength = 0.0;
};

BoundaryGeometry boundary_geometry(const MetricChart& chart, const Domain& domain, double s);

struct ConvexityResult {
  bool uniformly_convex = false;
  double min_geodesic_curvature = 0.0;
  double argmin_arclength = 0.0;
};

/// Uniform convexity iff inf k_g exceeds a round-off threshold; domains with corners never qualify.
ConvexityResult convexity_check(const MetricChart& chart, const Domain& domain, int samples = 512);

/// Chart disk radius of a geodesic ball of the given radius centred at the chart origin.
double chart_radius_for_geodesic(ChartKind kind, double geodesic_radius);

}  // namespace logcave
