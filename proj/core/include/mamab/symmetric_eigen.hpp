#pragma once

#include <vector>

#include "mamab/matrix.hpp"

namespace mamab {

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k pairs with values[k]
};

/// Cyclic Jacobi eigensolver for dense symmetric matrices.
///
/// Guarantees max|m - V diag(values) V^T| <= tol and V orthonormal to tol.
/// Throws ArgumentError if m is not symmetric within 1e-10 and NumericError
/// if the sweep budget runs out first.
EigenDecomposition symmetric_eigen(const Matrix& m, double tol = 1e-10);

/// Eigenvalues only (same solver, descending).
std::vector<double> symmetric_eigenvalues(const Matrix& m, double tol = 1e-10);

}  // namespace mamab
