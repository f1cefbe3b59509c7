#include "qclimit/decay.hpp"

#include <cmath>
#include <numbers>

#include "qclimit/errors.hpp"

namespace qclimit::decay {

namespace {

using Complex = std::complex<double>;

/// E_1 - E_n written as E_1 (1 - 1/n^2); exact for any n, and the 1/n^2
/// correction is below double resolution at the astronomical defaults.
double level_gap(const PerturbationSetup& setup, const constants::PhysicalConstants& c) {
    const double e1 = gravatom::energy_level(setup.sys, c, 1.0);
    const double n = setup.n_initial;
    return e1 * (1.0 - 1.0 / (n * n));
}

Complex phase_minus_one(double theta) {
    return Complex(std::cos(theta) - 1.0, -std::sin(theta));
}

} // namespace

PerturbationSetup make_perturbation_setup(const gravatom::TwoBodySystem& sys,
                                          const constants::PhysicalConstants& c,
                                          double n_initial) {
    if (!(n_initial >= 1.0))
        throw validation_error("perturbation setup: initial quantum number must be >= 1");
    PerturbationSetup setup{};
    setup.sys = sys;
    setup.perturber_mass = c.M_jupiter;
    setup.perturber_distance = c.r_SJ;
    setup.n_initial = n_initial;
    setup.h_prime = c.G * sys.orbiting_mass * setup.perturber_mass / setup.perturber_distance;
    setup.beta = setup.h_prime;
    return setup;
}

double transition_frequency(const PerturbationSetup& setup, const constants::PhysicalConstants& c) {
    return level_gap(setup, c) / c.hbar;
}

std::complex<double> survival_coefficient(const PerturbationSetup& setup,
                                          const constants::PhysicalConstants& c, double t) {
    if (!(t >= 0.0))
        throw validation_error("survival_coefficient: time must be non-negative");
    const double theta = setup.h_prime / c.hbar * t;
    return phase_minus_one(theta);
}

double decay_time(const PerturbationSetup& setup, const constants::PhysicalConstants& c) {
    return c.hbar / setup.h_prime * std::acos(0.5);
}

std::complex<double> integrate_coefficient_ode(const PerturbationSetup& setup,
                                               const constants::PhysicalConstants& c,
                                               double t, long steps) {
    if (steps < 100)
        throw validation_error("integrate_coefficient_ode: needs at least 100 steps");
    if (!(t >= 0.0))
        throw validation_error("integrate_coefficient_ode: time must be non-negative");

    const double theta_end = setup.h_prime / c.hbar * t;
    const double h = theta_end / static_cast<double>(steps);
    const Complex minus_i(0.0, -1.0);
    const auto rhs = [&](const Complex& state) { return minus_i * (1.0 + state); };

    Complex state(0.0, 0.0);
    for (long i = 0; i < steps; ++i) {
        const Complex k1 = rhs(state);
        const Complex k2 = rhs(state + 0.5 * h * k1);
        const Complex k3 = rhs(state + 0.5 * h * k2);
        const Complex k4 = rhs(state + h * k3);
        state += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return state;
}

double perturbation_prefactor(const PerturbationSetup& setup,
                              const constants::PhysicalConstants& c, const DecayCase& dc) {
    const double beta_over_gap = setup.beta / level_gap(setup, c);
    const double r = setup.perturber_distance;
    switch (dc.selection_rule) {
    case SelectionRule::DeltaL0:
        return -beta_over_gap / (2.0 * r * r);
    case SelectionRule::DeltaL1:
        return std::numbers::pi * beta_over_gap / r;
    }
    throw validation_error("perturbation_prefactor: unknown selection rule");
}

std::complex<double> first_order_coefficient(const PerturbationSetup& setup,
                                             const constants::PhysicalConstants& c,
                                             const DecayCase& dc, double t) {
    if (!(dc.matrix_element >= 0.0))
        throw validation_error("first_order_coefficient: matrix element is a magnitude");
    const double amplitude = perturbation_prefactor(setup, c, dc) * dc.matrix_element;
    const double phase = transition_frequency(setup, c) * t;
    return amplitude * Complex(std::cos(phase) - 1.0, std::sin(phase));
}

std::optional<double> first_order_decay_time(const PerturbationSetup& setup,
                                             const constants::PhysicalConstants& c,
                                             const DecayCase& dc) {
    if (!(dc.matrix_element >= 0.0))
        throw validation_error("first_order_decay_time: matrix element is a magnitude");
    const double z = perturbation_prefactor(setup, c, dc) * dc.matrix_element;
    if (z == 0.0)
        return std::nullopt;
    const double argument = 1.0 - 1.0 / (2.0 * z * z);
    if (argument < -1.0)
        return std::nullopt;
    return std::acos(argument) / std::abs(transition_frequency(setup, c));
}

double max_decay_time(const PerturbationSetup& setup, const constants::PhysicalConstants& c) {
    return std::numbers::pi / std::abs(transition_frequency(setup, c));
}

} // namespace qclimit::decay
