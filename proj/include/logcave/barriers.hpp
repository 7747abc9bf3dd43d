#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logcave/calculus.hpp"
#include "logcave/eigensolver.hpp"
#include "logcave/geometry.hpp"

namespace logcave {

/// Interior admissible alpha.
///
/// kappa_lo >= 0: (sqrt((lam + 2k)^2 + 8 lam (C - eps - 2P)) - (lam + 2k)) / lam, needs C > 2P + eps.
/// kappa_lo < 0:  (sqrt((lam + 2k)^2 + 8 G (C - eps - 2P + 2k)) - (lam + 2k)) / G with G = sup |grad u|^2,
///                needs C > 2P - 2k + eps.
/// Throws HypothesisError naming the violated lower bound on C.
double interior_alpha(double lambda, double kappa_lo, double C, double eps, double pinching,
                      std::optional<double> grad_sup_sq = std::nullopt);

/// Smallest admissible d.
///
/// kappa_lo >= 0: max{(-(n+1)k + sqrt(((n+1)k)^2 - (4k - 2C) lam + (9 / (2 eps)) R^2)) / 2, 0}
/// kappa_lo < 0:  sqrt((C - 2k) lam + (9 / (4 eps)) R^2)
/// with R = sup |grad Ric|. The R term is dropped when R = 0; eps = 0 with R > 0 throws.
double interior_d(double lambda, double kappa_lo, double C, double eps, double ricci_deriv, int n);

/// The quadratic in d whose non-negativity interior_d guarantees.
double d_condition(double d, double lambda, double kappa_lo, double C, double eps, double ricci_deriv, int n);

/// 4 II / |grad u|_g at one boundary point.
inline double boundary_alpha_value(double geodesic_curvature, double boundary_gradient) {
  return 4.0 * geodesic_curvature / boundary_gradient;
}

struct BoundaryAlpha {
  double alpha = 0.0;          ///< 4 min_s k_g(s) / |grad u(x(s))|_g
  double min_curvature = 0.0;  ///< min_s k_g(s)
  double curvature_at_binding = 0.0;
  double gradient_at_binding = 0.0;
  double arclength = 0.0;
  Vec2 point;
  std::size_t samples = 0;
};

/// |grad u|_g on the boundary from local cubic fits over unknowns and cut points.
double boundary_gradient(const EigenSolution& sol, const MetricChart& chart, Vec2 point);

/// Throws HypothesisError when min k_g <= 0 (the domain is not uniformly convex).
BoundaryAlpha boundary_alpha(const EigenSolution& sol, const Domain& domain, const MetricChart& chart,
                             int samples = 256);

enum class Preset {
  SpaceFormSphere,  ///< round sphere, II > 1/3: C = 1, d = 0, eps = 0
  Euclidean,        ///< flat: C = 1, d = sqrt(lam / 2), alpha capped by the boundary bound
  NearRoundSphere,  ///< small pinching and Ricci derivative: C = 1, eps = 1/2
  Einstein,         ///< parallel Ricci: C = 2P + 1, eps = 0
  Hyperbolic,       ///< curvature -1: C = 3, eps = 0
  General,          ///< user C and eps, branch by the sign of kappa_lo
  Manual,           ///< user alpha, C, d, eps
};

std::string to_string(Preset preset);
Preset preset_from_string(std::string_view name);
std::vector<std::string> preset_names();

inline constexpr double kBoundarySafety = 0.999;

struct PresetInput {
  double lambda = 0.0;
  CurvatureBudget budget;
  std::optional<BoundaryAlpha> boundary;
  std::string boundary_error;           ///< why boundary is absent, if it is
  std::optional<double> grad_sup_sq;    ///< sup |grad u|_g^2, needed when kappa_lo < 0
  int n = 2;
  // General and Manual
  double C = 1.0;
  double eps = 0.0;
  double alpha = 0.0;
  double d = 0.0;
};

struct BarrierConstants {
  double alpha = 0.0;
  double C = 1.0;
  double d = 0.0;
  double eps = 0.0;
  Preset preset = Preset::Manual;
  std::string branch;   ///< "nonneg" or "neg" curvature branch of the interior bounds
  std::string binding;  ///< "interior", "boundary" or "none"
  bool valid = true;
  std::vector<std::string> failed_hypotheses;
  std::vector<std::string> notes;

  double alpha_interior = 0.0;
  double alpha_boundary = 0.0;  ///< raw 4 min II / |grad u|, NaN if unavailable
  double d_alternative = 0.0;   ///< second d formula reported alongside, NaN if none
  std::string d_alternative_label;

  double lambda = 0.0;
  int n = 2;
  CurvatureBudget budget;
  std::optional<BoundaryAlpha> boundary;
};

BarrierConstants preset_constants(Preset preset, const PresetInput& input);

struct ConcavityRegions {
  double u_star = 0.0;  ///< strict concavity predicted on {u > u_star}; NaN when kappa_lo < 0
  double grad_v_threshold = 0.0;  ///< strong log-concavity where |grad v| is below this; +inf if unbounded
};

/// Throws HypothesisError when kappa_hi <= 0.
ConcavityRegions concavity_regions(const CurvatureBudget& budget, double lambda);

struct BarrierField {
  std::vector<double> b;               ///< NaN outside the safe band
  std::vector<std::uint8_t> positive;  ///< b > 0
  double t = 0.0;
};

/// b(x, t) = t |grad sqrt(u)|_g^2 + C log u - d on the safe band.
BarrierField barrier_field(const DerivedFields& fields, double t, double C, double d);

}  // namespace logcave
