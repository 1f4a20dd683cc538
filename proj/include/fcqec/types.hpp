#pragma once

#include <Eigen/Dense>

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace fcqec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Default tolerance for approximate entrywise comparisons. Permutation
// fixtures with {0,1} entries are compared exactly instead.
inline constexpr double kDefaultTol = 1e-10;

// Eigenvalues closer than this are treated as one (inputs here are exact
// half-integers, so the merge is safe; exposed as a knob for general use).
inline constexpr double kEigenvalueMergeTol = 1e-9;

// Vertex snap tolerance of the planar geometry kernel.
inline constexpr double kGeometryTol = 1e-9;

inline Index dim_for_qubits(int n_qubits) {
  if (n_qubits < 0 || n_qubits > 62) {
    throw std::invalid_argument("qubit count out of range");
  }
  return Index{1} << n_qubits;
}

inline int qubits_for_dim(Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension is not a power of two");
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

inline int popcount_index(Index j) {
  return std::popcount(static_cast<std::uint64_t>(j));
}

// Parity (-1)^popcount(j).
inline double parity_sign(Index j) { return (popcount_index(j) & 1) ? -1.0 : 1.0; }

// Bitwise complement within an n-qubit index space.
inline Index complement_index(Index j, int n_qubits) {
  return ~j & (dim_for_qubits(n_qubits) - 1);
}

}  // namespace fcqec
