#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qclimit/hilbert.hpp"

namespace qclimit::semiclassical {

/// A confining one-dimensional potential: either a closed-form harmonic
/// well or a tabulated curve with monotone cubic interpolation. Confinement
/// of tabulated potentials is asserted by the caller, not inferred.
class Potential1D {
public:
    enum class Kind { Harmonic, Tabulated };

    static Potential1D harmonic(double mass, double omega);
    static Potential1D tabulated(std::vector<double> x, std::vector<double> v, double mass,
                                 bool confining);

    double operator()(double x) const;

    Kind kind() const { return kind_; }
    double mass() const { return mass_; }
    bool confining() const { return confining_; }
    bool has_domain() const { return kind_ == Kind::Tabulated; }
    double domain_min() const;
    double domain_max() const;
    double minimum_location() const;

private:
    Potential1D() = default;

    Kind kind_ = Kind::Harmonic;
    double mass_ = 0.0;
    double omega_ = 0.0;
    bool confining_ = true;
    std::vector<double> xs_;
    std::vector<double> vs_;
    std::vector<double> slopes_;
};

/// Classical turning points a < b with V(a) = V(b) = E, found by bisection
/// around the potential minimum.
std::pair<double, double> classical_turning_points(const Potential1D& pot, double E);

/// Action integral of p(x) = sqrt(2m(E-V)) between the turning points. The
/// substitution x = a + u^2 (mirrored at b) removes the inverse-sqrt
/// endpoint singularities before adaptive quadrature.
double action_integral(const Potential1D& pot, double E, double mass);

/// Leading-order semiclassical wave p(x)^(-1/2) exp(i sigma0(x)/hbar) with
/// sigma0 the momentum integral from the left turning point. x must lie in
/// the classically allowed region, away from the turning points by
/// margin_fraction of the well width.
std::complex<double> wkb_wavefunction(const Potential1D& pot, double E, double x, double hbar,
                                      double margin_fraction = 0.05);

/// Energies solving the half-integer quantization condition
/// action = (N - 1/2) h / 2 for N = 1..n_max, by bisection in E.
std::vector<double> bohr_sommerfeld_levels(const Potential1D& pot, int n_max, double mass,
                                           double hbar);

/// Rectangular phase-space cell.
struct PhaseSpaceCell {
    double mu;  ///< volume [(J s)^n]
    int n_dof;  ///< degrees of freedom
};

/// Number of quantum states the cell holds: mu / h^n.
double cell_state_count(const PhaseSpaceCell& cell, double h);

/// How far a Hermitian candidate is from a projector with the expected
/// state count: |Tr F - N| and the trace norm of F - F^2, both computed
/// from the eigenvalues of F.
struct QuasiProjectorDefect {
    double trace_gap;
    double idempotency_defect;
};

QuasiProjectorDefect quasi_projector_defect(const Eigen::Ref<const hilbert::ComplexMatrix>& f,
                                            double n_expected);

} // namespace qclimit::semiclassical
