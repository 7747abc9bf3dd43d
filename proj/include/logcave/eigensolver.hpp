#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "logcave/geometry.hpp"
#include "logcave/kernels.hpp"
#include "logcave/types.hpp"

namespace logcave {

enum Direction : int { kEast = 0, kWest = 1, kNorth = 2, kSouth = 3 };

/// Uniform chart grid restricted to a domain.
///
/// Every unknown's four axis neighbours are either unknowns (fraction 1) or
/// boundary crossings at fraction theta in (0, 1] of the spacing, where u = 0.
/// Inside nodes closer than 1e-6 h to the boundary along an axis are folded into
/// the boundary.
struct Grid {
  Vec2 origin;
  double h = 0.0;
  int nx = 0;
  int ny = 0;
  double characteristic_length = 1.0;
  std::vector<int> id;  ///< i + nx * j -> unknown index or -1
  std::vector<int> node_i;
  std::vector<int> node_j;
  std::vector<std::array<double, 4>> theta;  ///< per unknown, indexed by Direction
  std::vector<double> distance;              ///< chart distance to the boundary (positive)
  int folded = 0;

  std::size_t size() const noexcept { return node_i.size(); }
  Vec2 position(std::size_t k) const { return origin + h * Vec2{double(node_i[k]), double(node_j[k])}; }
  int at(int i, int j) const {
    if (i < 0 || j < 0 || i >= nx || j >= ny) return -1;
    return id[static_cast<std::size_t>(i) + static_cast<std::size_t>(nx) * j];
  }
  int neighbour(std::size_t k, Direction d) const;
  kernels::StencilView stencil() const { return {nx, ny, h, id, node_i, node_j}; }
  /// Grid level: characteristic length over spacing.
  double level() const noexcept { return characteristic_length / h; }
};

/// Throws DomainError when the inside mask is disconnected or has fewer than 100 nodes.
Grid make_grid(const Domain& domain, double h);

/// Generalized problem K u = lambda W u with K the flat 5-point Laplacian
/// (Shortley-Weller cut rows) and W = diag(e^{2 phi}). Delta_g = e^{-2 phi} Delta_0.
struct DiscreteOperator {
  std::shared_ptr<const Grid> grid;
  Eigen::SparseMatrix<double, Eigen::RowMajor> stiffness;
  std::vector<double> weight;

  kernels::CsrView csr() const;
};

DiscreteOperator assemble_operator(const MetricChart& chart, const Domain& domain, double h);

struct SolverOptions {
  double tol = 1e-10;  ///< relative residual |K u - lambda W u|_inf / (lambda |W u|_inf)
  int max_iter = 500;
};

struct EigenSolution {
  std::shared_ptr<const Grid> grid;
  double lambda = 0.0;
  std::vector<double> u;           ///< sup-normalized, positive
  std::vector<double> weight;      ///< e^{2 phi} per unknown
  double residual = 0.0;           ///< |Delta_g u + lambda u|_inf over unknowns
  double relative_residual = 0.0;  ///< the stopping quantity
  int iterations = 0;
  std::size_t argmax = 0;          ///< unknown where u == 1
};

/// Smallest generalized eigenpair by inverse iteration with a sparse LU factorization.
/// Throws NumericalError on non-convergence or when the converged vector changes sign.
EigenSolution principal_eigenpair(const DiscreteOperator& op, const SolverOptions& options = {});

EigenSolution solve_level(const MetricChart& chart, const Domain& domain, double level,
                          const SolverOptions& options = {});

struct ConvergenceStudy {
  std::vector<double> h;
  std::vector<double> lambda;
  std::vector<double> residual;
  double observed_order = 0.0;  ///< NaN when the differences do not shrink monotonically
  double extrapolated = 0.0;    ///< second-order Richardson from the two finest levels
  bool warning = false;
  std::string note;
};

/// Analysis of eigenvalues on a sequence of halving spacings (coarse to fine).
ConvergenceStudy convergence_study(std::span<const EigenSolution> levels);

/// Solves on levels base/4, base/2, base (or the given list) and analyses the sequence.
ConvergenceStudy convergence_study(const MetricChart& chart, const Domain& domain, std::span<const double> levels,
                                   const SolverOptions& options = {},
                                   std::vector<EigenSolution>* solutions = nullptr);

}  // namespace logcave
