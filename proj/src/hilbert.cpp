#include "qclimit/hilbert.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "qclimit/errors.hpp"

namespace qclimit::hilbert {

namespace {

void require_hermitian(const Eigen::Ref<const ComplexMatrix>& m, double tol,
                       const std::string& where) {
    if (hermiticity_defect(m) > tol)
        throw validation_error(where + ": matrix is not Hermitian within tolerance");
}

Eigen::SelfAdjointEigenSolver<ComplexMatrix> solve_hermitian(
    const Eigen::Ref<const ComplexMatrix>& m, bool vectors) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver;
    solver.compute(m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian eigensolver failed to converge");
    return solver;
}

} // namespace

double hermiticity_defect(const Eigen::Ref<const ComplexMatrix>& m) {
    if (m.rows() != m.cols())
        return std::numeric_limits<double>::infinity();
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1)
        throw validation_error("density operator: matrix must be square and non-empty");
    if (hermiticity_defect(matrix_) > kDensityHermitianTol)
        throw validation_error("density operator: matrix is not Hermitian");
    if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > kDensityTraceTol)
        throw validation_error("density operator: trace must equal one");
    const Eigen::VectorXd evs = hermitian_eigenvalues(matrix_);
    if (evs.minCoeff() < kDensityEigenvalueFloor)
        throw validation_error("density operator: negative eigenvalue " +
                               std::to_string(evs.minCoeff()));
}

ComplexMatrix kron(const Eigen::Ref<const ComplexMatrix>& a,
                   const Eigen::Ref<const ComplexMatrix>& b) {
    return Eigen::kroneckerProduct(a, b);
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::Ref<const ComplexMatrix>& m) {
    require_hermitian(m, kHermitianInputTol, "hermitian_eigenvalues");
    return solve_hermitian(m, false).eigenvalues();
}

double trace_norm(const Eigen::Ref<const ComplexMatrix>& m) {
    require_hermitian(m, kHermitianInputTol, "trace_norm");
    return solve_hermitian(m, false).eigenvalues().cwiseAbs().sum();
}

DensityOperator evolve(const DensityOperator& rho,
                       const Eigen::Ref<const ComplexMatrix>& hamiltonian,
                       double t, double hbar) {
    if (hamiltonian.rows() != rho.dim() || hamiltonian.cols() != rho.dim())
        throw validation_error("evolve: hamiltonian dimension does not match the state");
    require_hermitian(hamiltonian, kHermitianInputTol, "evolve");
    if (!(hbar > 0.0))
        throw validation_error("evolve: hbar must be positive");

    const auto solver = solve_hermitian(hamiltonian, true);
    const Eigen::VectorXd energies = solver.eigenvalues();
    Eigen::VectorXcd phases(energies.size());
    for (Eigen::Index i = 0; i < energies.size(); ++i) {
        const double angle = -energies[i] * t / hbar;
        phases[i] = Complex(std::cos(angle), std::sin(angle));
    }
    const ComplexMatrix u =
        solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    return DensityOperator(u * rho.matrix() * u.adjoint());
}

double von_neumann_residual(const DensityOperator& rho,
                            const Eigen::Ref<const ComplexMatrix>& hamiltonian,
                            double t, double dt, double hbar) {
    if (!(dt > 0.0))
        throw validation_error("von_neumann_residual: dt must be positive");
    const ComplexMatrix forward = evolve(rho, hamiltonian, t + dt, hbar).matrix();
    const ComplexMatrix backward = evolve(rho, hamiltonian, t - dt, hbar).matrix();
    const ComplexMatrix at_t = evolve(rho, hamiltonian, t, hbar).matrix();

    const ComplexMatrix time_derivative = (forward - backward) / (2.0 * dt);
    const ComplexMatrix commutator = at_t * hamiltonian - hamiltonian * at_t;
    const ComplexMatrix residual = Complex(0.0, -hbar) * time_derivative - commutator;
    return residual.cwiseAbs().maxCoeff();
}

DensityOperator convex_combine(const DensityOperator& rho1, const DensityOperator& rho2,
                               double w) {
    if (!(w > 0.0 && w < 1.0))
        throw validation_error("convex_combine: weight must lie strictly inside (0,1)");
    if (rho1.dim() != rho2.dim())
        throw validation_error("convex_combine: dimensions differ");
    return DensityOperator(w * rho1.matrix() + (1.0 - w) * rho2.matrix());
}

ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

} // namespace qclimit::hilbert
