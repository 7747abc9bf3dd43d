#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "logcave/barriers.hpp"
#include "logcave/calculus.hpp"
#include "logcave/eigensolver.hpp"
#include "logcave/geometry.hpp"

namespace logcave {

enum class Status { Pass, Fail, Indeterminate, Diagnostic };

std::string to_string(Status status);

/// Tabulated auxiliary data attached to a check (margin against t, ratio against distance, ...).
struct Series {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct CheckReport {
  std::string name;
  Status status = Status::Indeterminate;
  double worst_margin = 0.0;
  Vec2 worst_location;
  long worst_node = -1;
  double tolerance = 0.0;
  double h = 0.0;
  std::size_t nodes = 0;
  std::map<std::string, double> values;
  std::vector<Series> series;
  std::vector<std::string> notes;
};

/// Everything the checks read. References must outlive the checks.
struct VerifyContext {
  const EigenSolution& sol;
  const DerivedFields& fields;
  const MetricChart& chart;
  const Domain& domain;
  double lambda;  ///< eigenvalue used in formulas (the extrapolated one in the pipeline)
  CurvatureBudget budget;
  double tol_scale = 1.0;

  /// 50 (h / L)^2 tol_scale with L the characteristic length of the domain.
  double tolerance() const;
  /// max(1e-3, 10 (h / L)^2 tol_scale) times max(1, |b|).
  double touch_tolerance(double b) const;
};

/// Largest g-eigenvalue of the Hessian of log u over the safe band; passes iff it is at most tol.
CheckReport check_log_concavity(const VerifyContext& ctx);

/// Worst mu_max + b over the safe band for b = t |grad w|^2 + C v - d.
/// Passes iff mu_max + b < -tol (1 + |b|) at every node; indeterminate within the band.
CheckReport check_barrier_inequality(const VerifyContext& ctx, const BarrierConstants& constants, double t);

/// Inputs of the barrier operator at a single point.
struct OperatorInputs {
  PhiJet phi;
  Jet v;
  Jet b;
  Vec2 X;  ///< g-unit, chart components
};

/// Evaluation through Christoffel symbols, the full Riemann tensor and covariant Ricci derivative.
double barrier_operator_generic(const OperatorInputs& in);

/// Two-dimensional reduction with Ric = K g; e2 is the g-unit vector orthogonal to X.
double barrier_operator_surface(const OperatorInputs& in, double K, Vec2 dK);

/// Barrier operator at a safe-band node, with b given by its jets. Throws DomainError off the b mask.
double barrier_operator_eval(const VerifyContext& ctx, const FieldJets& b, std::size_t node, Vec2 X);

/// Barrier operator at the worst direction of every near-touching node with b > 0; passes iff all positive.
/// Pass with a note when no node is near touching. diagnostic = true reports without asserting.
CheckReport check_barrier_criteria(const VerifyContext& ctx, const BarrierConstants& constants, double t,
                                   bool diagnostic = false);

/// Barrier inequality along t = 0 .. alpha in steps - 1 uniform increments.
CheckReport continuity_sweep(const VerifyContext& ctx, const BarrierConstants& constants, int steps = 11);

/// |grad u|_g^2 - lam (1 - u^2) over the safe band; passes iff at most tol * lam.
CheckReport check_ling(const VerifyContext& ctx);

struct ProbeOptions {
  int samples = 8;
  std::vector<double> offsets;  ///< decreasing chart distances, each at least 2h
};

/// Default offsets: 0.08 L down to 2h in geometric steps, always including 0.02 L when admissible.
std::vector<double> default_offsets(const Grid& grid);

/// Boundary asymptotics along inward normals; constants may be null (ratio only).
CheckReport boundary_probe(const VerifyContext& ctx, const ProbeOptions& options,
                           const BarrierConstants* constants = nullptr);

/// Strict log-concavity on {u > u*} and on the gradient sublevel set.
CheckReport check_strict_region(const VerifyContext& ctx);

/// Largest g-eigenvalue of Hess v - (dv x dv) / (2 v), away from the maximum point. Never asserted.
CheckReport check_half_log_concavity(const VerifyContext& ctx);

}  // namespace logcave
