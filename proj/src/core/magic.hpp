#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace qf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using BMatrix = Eigen::MatrixXi;

/// Largest singular value.
double operator_norm(const CMatrix& m);

/// Haar-distributed unitary: complex Gaussian matrix, QR, then the phase
/// correction that makes the triangular factor's diagonal positive.
CMatrix haar_unitary(int k, Rng& rng);

/// Default tolerance ladder: construction 1e-12, validation 1e-10,
/// statistical decisions 1e-6.
inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kValidationTol = 1e-10;
inline constexpr double kStatisticalTol = 1e-6;

/// A complete family of K mutually orthogonal rank-one projections on C^K.
struct ProjectionFrame {
  int dimension = 0;
  std::vector<CMatrix> projections;
  std::optional<CMatrix> source_unitary;

  /// Column vector spanning the j-th projection (one-based), available when
  /// the frame came from a unitary.
  CVector vector(int j) const;
  /// Largest violation of the frame laws (idempotent, self-adjoint, rank one,
  /// mutually orthogonal, summing to the identity).
  double defect() const;
};

/// P_j = projection onto the j-th column of U. Throws on non-unitary input.
ProjectionFrame frame_from_unitary(const CMatrix& u, double tol = kValidationTol);

ProjectionFrame standard_frame(int k);

/// An N x N grid of K x K matrices meant to be magic: every entry a
/// projection, every row and column summing to the identity.
struct NumericMagicUnitary {
  int size = 0;   // N
  int fiber = 0;  // K
  std::vector<std::vector<CMatrix>> entries;

  const CMatrix& at(int i, int j) const { return entries[i - 1][j - 1]; }
};

struct MagicDefect {
  std::string kind;  // "projection", "self_adjoint", "row_sum", "col_sum"
  int i = 0;
  int j = 0;  // 0 for row/col defects
  double value = 0.0;
};

struct MagicValidation {
  bool passed = false;
  double max_defect = 0.0;
  std::vector<MagicDefect> defects;  // entries above tol
};

MagicValidation validate_magic(const NumericMagicUnitary& m, double tol = kValidationTol);

/// Block-diagonal grid; off-diagonal entries are zero matrices. All blocks
/// must share the fiber dimension.
NumericMagicUnitary assemble_block_magic(const std::vector<NumericMagicUnitary>& blocks);

struct OrbitDecomposition {
  std::vector<std::vector<int>> blocks;  // partition of {1..N}
  BMatrix epsilon;                       // support pattern, 1 = nonzero entry
  /// The support relation of a magic unitary is already an equivalence; a
  /// discrepancy between it and its transitive closure is diagnostic only.
  bool support_was_equivalence = true;
};

OrbitDecomposition orbit_decomposition(const BMatrix& support);

/// Support taken entrywise: nonzero iff the max over samples of the operator
/// norm exceeds `threshold`. Throws on an empty sample set.
OrbitDecomposition orbit_decomposition(std::span<const NumericMagicUnitary> samples,
                                       double threshold = 1e-8);

/// Common block size when all blocks agree, nothing otherwise.
std::optional<int> quasi_transitivity(const OrbitDecomposition& d);

/// Numerical rank of each entry (count of eigenvalues above 1/2 after
/// Hermitian symmetrization). With `expect_quasi_flat`, throws if an entry has
/// rank >= 2. Also verifies each row and column of the pattern sums to the
/// fiber dimension.
BMatrix rank_pattern(const NumericMagicUnitary& m, double tol = kValidationTol,
                     bool expect_quasi_flat = false);

}  // namespace qf
