#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qclimit::hilbert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Max-entry deviation allowed between a density matrix and its adjoint.
inline constexpr double kDensityHermitianTol = 1e-12;
/// Allowed deviation of the trace from one.
inline constexpr double kDensityTraceTol = 1e-12;
/// Eigenvalues of a density matrix may undershoot zero by at most this.
inline constexpr double kDensityEigenvalueFloor = -1e-10;
/// Hermiticity tolerance for eigenvalue/trace-norm/evolution inputs.
inline constexpr double kHermitianInputTol = 1e-10;

/// Max-entry magnitude of m - m^dagger; infinity for non-square input.
double hermiticity_defect(const Eigen::Ref<const ComplexMatrix>& m);

/// Hermitian, unit-trace, positive-semidefinite matrix. The constructor
/// enforces all three invariants (to the tolerances above) and throws
/// validation_error on violation.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    ComplexMatrix matrix_;
};

/// Kronecker product; basis index (i,k) of the product space maps to row
/// i*dim(b)+k.
ComplexMatrix kron(const Eigen::Ref<const ComplexMatrix>& a,
                   const Eigen::Ref<const ComplexMatrix>& b);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::Ref<const ComplexMatrix>& m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Eigen::Ref<const ComplexMatrix>& m);

/// U rho U^dagger with U = exp(-i H t / hbar), via the spectral
/// decomposition of the Hermitian hamiltonian.
DensityOperator evolve(const DensityOperator& rho,
                       const Eigen::Ref<const ComplexMatrix>& hamiltonian,
                       double t, double hbar);

/// Max-entry magnitude of -i*hbar*(rho(t+dt)-rho(t-dt))/(2 dt) - [rho(t), H].
/// Second-order accurate in dt.
double von_neumann_residual(const DensityOperator& rho,
                            const Eigen::Ref<const ComplexMatrix>& hamiltonian,
                            double t, double dt, double hbar);

/// w*rho1 + (1-w)*rho2 for w strictly inside (0,1).
DensityOperator convex_combine(const DensityOperator& rho1, const DensityOperator& rho2,
                               double w);

ComplexMatrix identity(Eigen::Index dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

} // namespace qclimit::hilbert
