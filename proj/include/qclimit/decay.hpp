#pragma once

#include <complex>
#include <optional>

#include "qclimit/constants.hpp"
#include "qclimit/gravatom.hpp"

namespace qclimit::decay {

/// Constant gravitational perturbation of a highly excited two-body bound
/// state by a third mass held at fixed distance from the center.
struct PerturbationSetup {
    gravatom::TwoBodySystem sys;
    double perturber_mass;   ///< M3 [kg]
    double perturber_distance; ///< r_SJ [m]
    double n_initial;        ///< quantum number of the initial state
    double h_prime;          ///< G*M1*M3/r_SJ [J]
    double beta;             ///< same magnitude; the first-order symbol
};

/// Builds a setup with h_prime (= beta) derived from the constants.
PerturbationSetup make_perturbation_setup(const gravatom::TwoBodySystem& sys,
                                          const constants::PhysicalConstants& c,
                                          double n_initial = 1e74);

/// (E_1 - E_n)/hbar for the setup's initial quantum number, computed as
/// E_1*(1 - 1/n^2)/hbar to avoid cancellation.
double transition_frequency(const PerturbationSetup& setup, const constants::PhysicalConstants& c);

/// c_n(t) = exp(-i H' t / hbar) - 1, evaluated through the dimensionless
/// phase theta = H' t / hbar.
std::complex<double> survival_coefficient(const PerturbationSetup& setup,
                                          const constants::PhysicalConstants& c, double t);

/// t_d = (hbar/H') arccos(1/2), the first time with |c_n|^2 = 1.
double decay_time(const PerturbationSetup& setup, const constants::PhysicalConstants& c);

/// Classical RK4 integration of dc/dtheta = -i (1 + c) up to
/// theta = H' t / hbar; a numerical cross-check of the closed form.
std::complex<double> integrate_coefficient_ode(const PerturbationSetup& setup,
                                               const constants::PhysicalConstants& c,
                                               double t, long steps);

enum class SelectionRule {
    DeltaL0, ///< s -> s transition; the r^2 matrix element survives
    DeltaL1, ///< p -> s transition; the r*cos(phi) matrix element survives
};

/// One first-order decay channel. The radial matrix element cannot be
/// evaluated at astronomical quantum numbers, so its magnitude is a
/// user-supplied input ([m^2] for DeltaL0, [m] for DeltaL1).
struct DecayCase {
    SelectionRule selection_rule;
    double matrix_element;
};

/// f = -beta/(2 (E_1-E_n) r_SJ^2) for DeltaL0 [m^-2], or
/// g = pi*beta/((E_1-E_n) r_SJ) for DeltaL1 [m^-1].
double perturbation_prefactor(const PerturbationSetup& setup,
                              const constants::PhysicalConstants& c, const DecayCase& dc);

/// c_1(t) = prefactor * matrix_element * (exp(i omega_1n t) - 1).
std::complex<double> first_order_coefficient(const PerturbationSetup& setup,
                                             const constants::PhysicalConstants& c,
                                             const DecayCase& dc, double t);

/// First t with |c_1|^2 = 1, i.e. arccos(1 - 1/(2 z^2))/|omega_1n| with
/// z = prefactor*matrix_element; empty when z^2 < 1/4 puts the arccos
/// argument below -1 and no full decay occurs.
std::optional<double> first_order_decay_time(const PerturbationSetup& setup,
                                             const constants::PhysicalConstants& c,
                                             const DecayCase& dc);

/// pi/|omega_1n|, the upper bound of the first-order decay time over all
/// admissible matrix elements.
double max_decay_time(const PerturbationSetup& setup, const constants::PhysicalConstants& c);

} // namespace qclimit::decay
