#include "qclimit/madelung.hpp"

#include <cmath>
#include <numbers>

#include "qclimit/errors.hpp"

namespace qclimit::madelung {

namespace {

void require_valid(const CoherentStateParams& p) {
    if (!(p.mass > 0.0 && p.omega > 0.0 && p.hbar > 0.0))
        throw validation_error("coherent state: mass, omega and hbar must be positive");
}

} // namespace

PhasePoint classical_trajectory(const CoherentStateParams& p, double t) {
    require_valid(p);
    const double c = std::cos(p.omega * t);
    const double s = std::sin(p.omega * t);
    return {p.x0 * c + p.p0 / (p.mass * p.omega) * s,
            p.p0 * c - p.mass * p.omega * p.x0 * s};
}

std::complex<double> coherent_wavefunction(const CoherentStateParams& p, double x, double t) {
    const MadelungFields f = madelung_fields(p, x, t);
    const double angle = f.action / p.hbar;
    return f.amplitude * std::complex<double>(std::cos(angle), std::sin(angle));
}

MadelungFields madelung_fields(const CoherentStateParams& p, double x, double t) {
    const PhasePoint mean = classical_trajectory(p, t);
    const double dx = x - mean.position;

    const double norm = std::pow(p.mass * p.omega / (std::numbers::pi * p.hbar), 0.25);
    MadelungFields f{};
    f.amplitude = norm * std::exp(-p.mass * p.omega / (2.0 * p.hbar) * dx * dx);
    f.action = mean.momentum * x - 0.5 * p.hbar * p.omega * t -
               0.5 * mean.position * mean.momentum;
    f.quantum_potential =
        0.5 * p.hbar * p.omega - 0.5 * p.mass * p.omega * p.omega * dx * dx;
    return f;
}

double continuity_residual(const CoherentStateParams& p, double x, double t,
                           double dx, double dt) {
    require_valid(p);
    if (!(dx > 0.0 && dt > 0.0))
        throw validation_error("continuity_residual: steps must be positive");

    const auto density = [&](double xx, double tt) {
        const double r = madelung_fields(p, xx, tt).amplitude;
        return r * r;
    };
    const auto action_slope = [&](double xx, double tt) {
        return (madelung_fields(p, xx + dx, tt).action -
                madelung_fields(p, xx - dx, tt).action) /
               (2.0 * dx);
    };
    const auto flux = [&](double xx) { return density(xx, t) * action_slope(xx, t); };

    const double time_term = (density(x, t + dt) - density(x, t - dt)) / (2.0 * dt);
    const double space_term = (flux(x + dx) - flux(x - dx)) / (2.0 * dx);
    return std::abs(time_term + space_term / p.mass);
}

double quantum_hj_residual(const CoherentStateParams& p, double x, double t) {
    const PhasePoint mean = classical_trajectory(p, t);
    const double x_dot = mean.momentum / p.mass;
    const double p_dot = -p.mass * p.omega * p.omega * mean.position;

    const double action_dt = p_dot * x - 0.5 * p.hbar * p.omega -
                             0.5 * (x_dot * mean.momentum + mean.position * p_dot);
    const double action_dx = mean.momentum;
    const double potential = 0.5 * p.mass * p.omega * p.omega * x * x;
    const double quantum = madelung_fields(p, x, t).quantum_potential;

    return std::abs(action_dt + action_dx * action_dx / (2.0 * p.mass) + potential + quantum);
}

double classical_limit_gap(const CoherentStateParams& p, double x, double t) {
    require_valid(p);
    (void)x;
    (void)t;
    // Q - Q0 cancels the position-dependent parts exactly; evaluating the
    // reduced form keeps the gap exact even far from the packet center.
    return 0.5 * p.hbar * p.omega;
}

} // namespace qclimit::madelung
