#pragma once

// Data-parallel inner loops. Each kernel has a serial reference implementation
// and an OpenMP implementation with identical results; the library calls the
// OpenMP versions, tests and the benchmark compare the two.

#include <cstdint>
#include <limits>
#include <span>

#include "logcave/types.hpp"

namespace logcave::kernels {

/// Compressed sparse row matrix, borrowed.
struct CsrView {
  int rows = 0;
  std::span<const int> row_ptr;
  std::span<const int> col;
  std::span<const double> val;
};

/// Node layout of a uniform grid, borrowed. id maps i + nx * j to an unknown or -1.
struct StencilView {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  std::span<const int> id;
  std::span<const int> node_i;
  std::span<const int> node_j;
};

struct MaxLoc {
  double value = -std::numeric_limits<double>::infinity();
  long index = -1;
};

namespace serial {

void spmv(const CsrView& a, std::span<const double> x, std::span<double> y);

/// Central-difference jets at every unknown whose eight neighbours are unknowns.
/// complete[k] is set to 1 where the jet is valid, 0 elsewhere.
void central_jets(const StencilView& grid, std::span<const double> values, std::span<Jet> out,
                  std::span<std::uint8_t> complete);

/// Largest value among entries with mask != 0; ties resolve to the lowest index.
MaxLoc max_loc(std::span<const double> values, std::span<const std::uint8_t> mask);

}  // namespace serial

namespace omp {

void spmv(const CsrView& a, std::span<const double> x, std::span<double> y);
void central_jets(const StencilView& grid, std::span<const double> values, std::span<Jet> out,
                  std::span<std::uint8_t> complete);
MaxLoc max_loc(std::span<const double> values, std::span<const std::uint8_t> mask);

}  // namespace omp

using omp::central_jets;
using omp::max_loc;
using omp::spmv;

}  // namespace logcave::kernels
