#pragma once

#include "qclimit/constants.hpp"

namespace qclimit::gravatom {

/// A light body orbiting a heavy central body, treated hydrogen-like.
struct TwoBodySystem {
    double orbiting_mass; ///< M1 [kg]
    double central_mass;  ///< M2 [kg]
    double orbit_radius;  ///< a [m]
    double orbit_speed;   ///< v [m s^-1]
};

/// The earth around the sun, on the reference circular orbit.
TwoBodySystem sun_earth(const constants::PhysicalConstants& c);

/// Relative deviation of v^2 from G*M2/a (circular-orbit consistency).
double circular_orbit_deviation(const TwoBodySystem& sys, const constants::PhysicalConstants& c);

/// Characteristic scales of the gravitational bound-state problem.
struct GravAtomScales {
    double alpha;         ///< G*M1^2*M2/hbar^2 [m^-1]
    double bohr_radius;   ///< 1/alpha [m]
    double ground_energy; ///< E_1 [J]
};

GravAtomScales gravitational_scales(const TwoBodySystem& sys, const constants::PhysicalConstants& c);

/// E_n = -G^2 M1^3 M2^2 / (2 hbar^2 n^2); n is real-valued so that
/// astronomically large quantum numbers stay representable. Factors are
/// grouped as (G*M1*M2/hbar)^2 * (M1/2) to keep intermediates in range.
double energy_level(const TwoBodySystem& sys, const constants::PhysicalConstants& c, double n);

/// One classical number per convention: the signed total T + V and the
/// magnitude sum |T| + |V|, both reported because published figures for
/// this system follow the latter.
struct OrbitEnergy {
    double signed_total;  ///< T + V [J]
    double magnitude_sum; ///< |T| + |V| [J]
};

OrbitEnergy classical_orbit_energy(const TwoBodySystem& sys, const constants::PhysicalConstants& c);

/// The n whose |E_n| equals the given energy magnitude.
double matching_quantum_number(const TwoBodySystem& sys, const constants::PhysicalConstants& c,
                               double target_energy_magnitude);

/// Ground-state radial density 4*rho^2*exp(-2*rho) in the dimensionless
/// radius rho = r / bohr_radius.
double radial_density(double rho);

/// Location of the radial-density maximum in meters (the bohr radius).
double radial_density_peak(const TwoBodySystem& sys, const constants::PhysicalConstants& c);

/// Maximum principal quantum number at which radial wavefunctions are
/// evaluated; beyond it the required polynomial degrees are astronomically
/// out of reach.
inline constexpr int kMaxRadialQuantumNumber = 6;

/// Normalized hydrogen-like radial wavefunction R_{n,l}(rho) in units of the
/// bohr radius (integral of R^2 rho^2 drho is one). Requires
/// 1 <= n <= kMaxRadialQuantumNumber and 0 <= l < n.
double radial_wavefunction(int n, int l, double rho);

} // namespace qclimit::gravatom
