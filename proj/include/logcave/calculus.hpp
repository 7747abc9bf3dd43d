#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "logcave/eigensolver.hpp"
#include "logcave/geometry.hpp"
#include "logcave/types.hpp"

namespace logcave {

/// Metric quantities of the eigenfunction on the safe band.
///
/// The safe band consists of unknowns whose eight neighbours are unknowns and
/// whose distance to the boundary is at least two grid spacings. Arrays are
/// indexed by unknown; entries outside the mask are NaN.
struct DerivedFields {
  std::shared_ptr<const Grid> grid;
  double band = 0.0;
  std::vector<std::uint8_t> mask;
  std::vector<Jet> u;
  std::vector<Jet> v;  ///< log u
  std::vector<Jet> w;  ///< sqrt u
  std::vector<PhiJet> phi;
  std::vector<double> conformal;  ///< e^{2 phi}
  std::vector<double> grad_u;     ///< |grad u|_g
  std::vector<double> grad_v_sq;  ///< |grad v|_g^2
  std::vector<double> grad_w_sq;  ///< |grad w|_g^2
  std::vector<std::size_t> dropped;  ///< safe-band nodes with u below the log floor
  std::size_t band_excluded = 0;
  std::size_t evaluated = 0;

  bool in_band(std::size_t k) const { return k < mask.size() && mask[k] != 0; }
  /// Throws DomainError if k is outside the evaluation mask.
  void require(std::size_t k) const;
  Vec2 position(std::size_t k) const { return grid->position(k); }
};

inline constexpr double kLogFloor = 1e-300;

DerivedFields derived_fields(const EigenSolution& sol, const MetricChart& chart);

/// Squared g-norm of a chart gradient: e^{-2 phi} |df|^2.
inline double norm_sq_g(Vec2 df, double conformal) { return dot(df, df) / conformal; }

/// Covariant Hessian in chart components, using the conformal Christoffel symbols.
Sym2 hessian_g(const Jet& f, const PhiJet& phi);

/// Laplace-Beltrami operator e^{-2 phi} (f_xx + f_yy).
inline double laplacian_g(const Jet& f, double conformal) { return (f.fxx + f.fyy) / conformal; }

struct HessianField {
  std::vector<Sym2> hessian;        ///< chart components
  std::vector<double> inv_conformal;  ///< e^{-2 phi}
  std::vector<std::uint8_t> mask;
};

/// Covariant Hessian of a field given by its jets, on the mask of the derived fields.
HessianField hessian_g(const DerivedFields& fields, std::span<const Jet> f);
std::vector<double> laplacian_g(const DerivedFields& fields, std::span<const Jet> f);

struct WorstDirection {
  double mu_max = 0.0;  ///< largest g-eigenvalue of the Hessian, plus b
  double mu_min = 0.0;  ///< smallest g-eigenvalue, plus b
  Vec2 direction;       ///< g-unit, chart components
  Vec2 orthogonal;      ///< g-unit, completes a positively oriented frame
  bool isotropic = false;
};

/// Maximizer of H(X, X) + b over g-unit X; the top eigenvector of e^{-2 phi} H.
WorstDirection worst_direction(const Sym2& hessian, double b, double conformal);

/// Central-difference jets of a node field, valid where the full 3x3 stencil lies in the mask.
struct FieldJets {
  std::vector<Jet> jet;
  std::vector<std::uint8_t> mask;
};

FieldJets field_jets(const Grid& grid, std::span<const double> values, std::span<const std::uint8_t> mask);

/// Weighted least-squares cubic fit of u around a chart point, using unknowns and
/// boundary cut points (u = 0) within the given radius.
struct LocalFit {
  Jet jet;
  std::size_t points = 0;
  double rms_residual = 0.0;
};

LocalFit local_fit(const EigenSolution& sol, Vec2 p, double radius);

}  // namespace logcave
