#include "qclimit/gravatom.hpp"

#include <cmath>

#include "qclimit/errors.hpp"

namespace qclimit::gravatom {

namespace {

double factorial(int n) {
    double out = 1.0;
    for (int i = 2; i <= n; ++i)
        out *= i;
    return out;
}

void require_valid(const TwoBodySystem& sys) {
    if (!(sys.orbiting_mass > 0.0 && sys.central_mass > 0.0 && sys.orbit_radius > 0.0 &&
          sys.orbit_speed > 0.0))
        throw validation_error("two-body system: all fields must be strictly positive");
}

} // namespace

TwoBodySystem sun_earth(const constants::PhysicalConstants& c) {
    return {c.M_earth, c.M_sun, c.AU, c.v_earth};
}

double circular_orbit_deviation(const TwoBodySystem& sys, const constants::PhysicalConstants& c) {
    require_valid(sys);
    const double v2_orbit = c.G * sys.central_mass / sys.orbit_radius;
    return std::abs(sys.orbit_speed * sys.orbit_speed - v2_orbit) / v2_orbit;
}

GravAtomScales gravitational_scales(const TwoBodySystem& sys, const constants::PhysicalConstants& c) {
    require_valid(sys);
    // Two factors of moderate magnitude instead of G*M1^2*M2 in one go.
    const double alpha = (c.G * sys.orbiting_mass / c.hbar) *
                         (sys.orbiting_mass * sys.central_mass / c.hbar);
    return {alpha, 1.0 / alpha, energy_level(sys, c, 1.0)};
}

double energy_level(const TwoBodySystem& sys, const constants::PhysicalConstants& c, double n) {
    require_valid(sys);
    if (!(n >= 1.0))
        throw validation_error("energy_level: quantum number must be >= 1");
    const double gm = c.G * sys.orbiting_mass * sys.central_mass / c.hbar;
    return -(gm * gm) * (0.5 * sys.orbiting_mass) / (n * n);
}

OrbitEnergy classical_orbit_energy(const TwoBodySystem& sys, const constants::PhysicalConstants& c) {
    require_valid(sys);
    const double kinetic = 0.5 * sys.orbiting_mass * sys.orbit_speed * sys.orbit_speed;
    const double potential_magnitude =
        c.G * sys.orbiting_mass * sys.central_mass / sys.orbit_radius;
    return {kinetic - potential_magnitude, kinetic + potential_magnitude};
}

double matching_quantum_number(const TwoBodySystem& sys, const constants::PhysicalConstants& c,
                               double target_energy_magnitude) {
    if (!(target_energy_magnitude > 0.0))
        throw validation_error("matching_quantum_number: target energy must be positive");
    return std::sqrt(std::abs(energy_level(sys, c, 1.0)) / target_energy_magnitude);
}

double radial_density(double rho) {
    if (!(rho >= 0.0))
        throw validation_error("radial_density: rho must be non-negative");
    return 4.0 * rho * rho * std::exp(-2.0 * rho);
}

double radial_density_peak(const TwoBodySystem& sys, const constants::PhysicalConstants& c) {
    // The density 4 rho^2 exp(-2 rho) peaks at rho = 1, i.e. one bohr radius.
    return gravitational_scales(sys, c).bohr_radius;
}

double radial_wavefunction(int n, int l, double rho) {
    if (n < 1)
        throw validation_error("radial_wavefunction: n must be >= 1");
    if (n > kMaxRadialQuantumNumber)
        throw out_of_range_error("radial_wavefunction: n exceeds the supported range");
    if (l < 0 || l >= n)
        throw validation_error("radial_wavefunction: l must satisfy 0 <= l < n");
    if (!(rho >= 0.0))
        throw validation_error("radial_wavefunction: rho must be non-negative");

    const double scaled = 2.0 * rho / n;
    const double norm = std::sqrt(std::pow(2.0 / n, 3) * factorial(n - l - 1) /
                                  (2.0 * n * factorial(n + l)));
    return norm * std::pow(scaled, l) * std::exp(-rho / n) *
           std::assoc_laguerre(static_cast<unsigned>(n - l - 1),
                               static_cast<unsigned>(2 * l + 1), scaled);
}

} // namespace qclimit::gravatom
