#pragma once

#include "qchan/types.hpp"

namespace qchan {

Matrix identity(Eigen::Index dim);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Kronecker product; block (i,j) of the result equals a(i,j) * b.
Matrix tensor_product(const Matrix& a, const Matrix& b);
Vector tensor_product(const Vector& a, const Vector& b);

/// Trace out the qubits named in `lost` from a 2^n_qubits dimensional
/// operator. Remaining qubits keep their relative order (probe first).
Matrix partial_trace(const Matrix& m, int n_qubits, const LossPattern& lost);
DensityOperator partial_trace(const DensityOperator& rho, const LossPattern& lost);

/// Full orthonormal eigensystem of a Hermitian matrix, eigenvalues ascending.
struct EigenSystem {
    Eigen::VectorXd values;
    Matrix vectors;  // column k pairs with values(k)
};
EigenSystem herm_eig(const Matrix& m);

/// Square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are clipped to
/// zero; anything lower throws.
Matrix psd_sqrt(const Matrix& m);

/// Sum of singular values.
double trace_norm(const Matrix& m);

/// Uhlmann fidelity F(rho, sigma) = ||rho^{1/2} sigma^{1/2}||_1^2.
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

/// Squared Bures distance 2(1 - sqrt(F)).
double bures_distance_sq(const DensityOperator& rho, const DensityOperator& sigma);

}  // namespace qchan
