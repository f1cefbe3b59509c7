#pragma once

#include <complex>

namespace qclimit::madelung {

/// Parameters of a coherent state of the linear harmonic oscillator.
struct CoherentStateParams {
    double mass;  ///< [kg]
    double omega; ///< angular frequency [s^-1]
    double x0;    ///< initial position expectation [m]
    double p0;    ///< initial momentum expectation [kg m s^-1]
    double hbar;  ///< [J s]
};

struct PhasePoint {
    double position; ///< <x(t)> [m]
    double momentum; ///< <p(t)> [kg m s^-1]
};

/// Polar decomposition psi = amplitude * exp(i*action/hbar) plus the
/// quantum potential it induces.
struct MadelungFields {
    double amplitude;         ///< R(x,t) >= 0 [m^-1/2]
    double action;            ///< S(x,t) [J s]
    double quantum_potential; ///< Q(x,t) [J]
};

/// Classical harmonic trajectories of the expectation values.
PhasePoint classical_trajectory(const CoherentStateParams& p, double t);

/// The coherent wave packet: a Gaussian of invariant width centered on the
/// classical trajectory, with phase <p>x - hbar*omega*t/2 - <x><p>/2.
std::complex<double> coherent_wavefunction(const CoherentStateParams& p, double x, double t);

/// R, S and the quantum potential Q = hbar*omega/2 - (m*omega^2/2)(x-<x>)^2.
/// Q is defined as -(hbar^2/2m) * R''/R (Bohm sign convention), which the
/// closed form above evaluates exactly for this state.
MadelungFields madelung_fields(const CoherentStateParams& p, double x, double t);

/// Central-difference residual of d(R^2)/dt + (1/m) d(R^2 dS/dx)/dx.
/// Identically zero for the coherent state, so the return value measures
/// only the discretization error (second order in dx, dt).
double continuity_residual(const CoherentStateParams& p, double x, double t,
                           double dx, double dt);

/// |dS/dt + (dS/dx)^2/2m + V + Q| with analytic derivatives of the closed
/// forms; zero up to floating-point cancellation.
double quantum_hj_residual(const CoherentStateParams& p, double x, double t);

/// |Q - Q0| where Q0 = -(m*omega^2/2)(x-<x>)^2 is the hbar-independent part
/// of the quantum potential. The difference reduces algebraically to
/// hbar*omega/2, so the reduced form is returned and the gap is exact.
double classical_limit_gap(const CoherentStateParams& p, double x, double t);

} // namespace qclimit::madelung
