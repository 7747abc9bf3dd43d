#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "logcave/calculus.hpp"
#include "logcave/eigensolver.hpp"
#include "logcave/geometry.hpp"
#include "logcave/types.hpp"

namespace logcave::oracle {

/// Bessel function of the first kind, order 0 or 1, for 0 <= x <= 50.
double bessel_j(int order, double x);

/// First positive zero of J0, by bisection.
double bessel_j0_zero();

/// Radial eigenprofile f(s) on a geodesic ball of radius s0 in a space form of
/// curvature +1 or -1, with f(0) = 1, f'(0) = 0, f(s0) = 0.
class ShootingProfile {
 public:
  static constexpr int kSteps = 4096;

  /// curvature is +1 (sphere) or -1 (hyperbolic plane).
  ShootingProfile(double curvature, double radius);

  double lambda() const noexcept { return lambda_; }
  double radius() const noexcept { return radius_; }
  double curvature() const noexcept { return curvature_; }
  int bisection_steps() const noexcept { return bisections_; }

  /// f, f', f'' at geodesic distance s in [0, radius].
  void evaluate(double s, double& f, double& f1, double& f2) const;

 private:
  void integrate(double lambda, std::vector<double>* f, std::vector<double>* df) const;
  bool crosses(double lambda) const;

  double curvature_;
  double radius_;
  double lambda_ = 0.0;
  int bisections_ = 0;
  std::vector<double> f_;
  std::vector<double> df_;
};

enum class AnalyticKind { Rectangle, Disk, SphericalCap, HyperbolicBall };

std::string to_string(AnalyticKind kind);

/// Exact (or shooting-converged) principal eigenpair in chart coordinates, sup u = 1.
class AnalyticSolution {
 public:
  static AnalyticSolution rectangle(Vec2 center, double width, double height);
  static AnalyticSolution disk(Vec2 center, double radius);
  /// Cap of polar radius theta0 about the stereographic chart origin.
  static AnalyticSolution spherical_cap(double theta0);
  /// Geodesic ball of radius R about the Poincare chart origin.
  static AnalyticSolution hyperbolic_ball(double geodesic_radius);

  AnalyticKind kind() const noexcept { return kind_; }
  double lambda() const noexcept { return lambda_; }
  const MetricChart& chart() const noexcept { return chart_; }
  const Domain& domain() const noexcept { return domain_; }
  /// |grad u|_g on the boundary; constant for the radial kinds, NaN for the rectangle.
  double boundary_gradient() const noexcept { return boundary_gradient_; }

  /// u with chart partials through second order.
  Jet jet(Vec2 p) const;
  double value(Vec2 p) const { return jet(p).f; }

 private:
  AnalyticSolution(AnalyticKind kind, MetricChart chart, Domain domain);

  AnalyticKind kind_;
  MetricChart chart_;
  Domain domain_;
  double lambda_ = 0.0;
  double boundary_gradient_ = 0.0;
  /// Radial kinds: F, F', F'' in the chart radius.
  std::function<void(double, double&, double&, double&)> radial_;
};

struct OracleError {
  double lambda_relative = 0.0;
  double u_sup = 0.0;
  double grad_sup = 0.0;  ///< g-norm of the gradient difference on the safe band
};

/// Throws DomainError when the numeric solution was computed on a different chart or domain.
OracleError oracle_error(const EigenSolution& sol, const DerivedFields& fields, const MetricChart& chart,
                         const Domain& domain, const AnalyticSolution& exact);

/// Named reference quantities used by tests and the acceptance binary.
std::map<std::string, double> fixture_values();
nlohmann::json fixtures_json();

/// Path of the frozen fixtures file: LOGCAVE_FIXTURES if set, else the compiled-in default.
std::string fixtures_path(const std::string& compiled_default);

}  // namespace logcave::oracle
