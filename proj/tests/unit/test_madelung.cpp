#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "qclimit/errors.hpp"
#include "qclimit/madelung.hpp"

using namespace qclimit::madelung;
using Complex = std::complex<double>;

namespace {

// Natural-unit packet used by most checks.
const CoherentStateParams kPacket{1.0, 1.0, 0.7, 0.4, 1.0};

double packet_width(const CoherentStateParams& p) {
    return std::sqrt(p.hbar / (p.mass * p.omega));
}

double period(const CoherentStateParams& p) {
    return 2.0 * std::numbers::pi / p.omega;
}

} // namespace

TEST_CASE("classical trajectory starts at the initial data and is periodic") {
    const PhasePoint start = classical_trajectory(kPacket, 0.0);
    CHECK(start.position == kPacket.x0);
    CHECK(start.momentum == kPacket.p0);

    const PhasePoint back = classical_trajectory(kPacket, period(kPacket));
    CHECK(back.position == doctest::Approx(kPacket.x0).epsilon(1e-12));
    CHECK(back.momentum == doctest::Approx(kPacket.p0).epsilon(1e-12));

    const CoherentStateParams rest{1.0, 1.0, 0.0, 0.0, 1.0};
    for (double t : {0.1, 1.7, 4.2}) {
        const PhasePoint point = classical_trajectory(rest, t);
        CHECK(point.position == 0.0);
        CHECK(point.momentum == 0.0);
    }
}

TEST_CASE("the wave packet is normalized") {
    const auto density = [&](double x) { return std::norm(coherent_wavefunction(kPacket, x, 0.37)); };
    const double width = packet_width(kPacket);
    const PhasePoint mean = classical_trajectory(kPacket, 0.37);
    const double integral =
        oracle::simpson(density, mean.position - 8.0 * width, mean.position + 8.0 * width, 4000);
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("peak value of the resting packet is the quartic normalization") {
    const CoherentStateParams p{2.0, 3.0, 0.5, 0.0, 1.3};
    const Complex value = coherent_wavefunction(p, p.x0, 0.0);
    const double expected = std::pow(p.mass * p.omega / (std::numbers::pi * p.hbar), 0.25);
    CHECK(value.real() == doctest::Approx(expected).epsilon(1e-13));
    CHECK(std::abs(value.imag()) <= 1e-13 * expected);
}

TEST_CASE("the packet solves the oscillator wave equation (finite-difference check)") {
    // residual of i*hbar dpsi/dt + hbar^2/(2m) d2psi/dx2 - V psi with
    // fourth-order stencils; the packet satisfies the equation exactly.
    const double h = 5e-3;
    const double width = packet_width(kPacket);
    for (double t : {0.0, 0.9, 2.3}) {
        const PhasePoint mean = classical_trajectory(kPacket, t);
        for (int i = -2; i <= 2; ++i) {
            const double x = mean.position + i * width;
            const auto psi_of_t = [&](double tt) { return coherent_wavefunction(kPacket, x, tt); };
            const auto psi_of_x = [&](double xx) { return coherent_wavefunction(kPacket, xx, t); };
            const Complex dpsi_dt = oracle::d1_central4(psi_of_t, t, h);
            const Complex d2psi_dx2 = oracle::d2_central4(psi_of_x, x, h);
            const Complex psi = coherent_wavefunction(kPacket, x, t);
            const Complex residual =
                Complex(0, 1) * kPacket.hbar * dpsi_dt +
                kPacket.hbar * kPacket.hbar / (2.0 * kPacket.mass) * d2psi_dx2 -
                0.5 * kPacket.mass * kPacket.omega * kPacket.omega * x * x * psi;
            CHECK(std::abs(residual) <=
                  1e-6 * kPacket.hbar * kPacket.omega * std::abs(psi));
        }
    }
}

TEST_CASE("the wave-equation residual converges at fourth order") {
    const double t = 0.7;
    const PhasePoint mean = classical_trajectory(kPacket, t);
    const double x = mean.position + 0.5 * packet_width(kPacket);
    const auto residual = [&](double h) {
        const auto psi_of_t = [&](double tt) { return coherent_wavefunction(kPacket, x, tt); };
        const auto psi_of_x = [&](double xx) { return coherent_wavefunction(kPacket, xx, t); };
        const Complex value = coherent_wavefunction(kPacket, x, t);
        return std::abs(Complex(0, 1) * kPacket.hbar * oracle::d1_central4(psi_of_t, t, h) +
                        kPacket.hbar * kPacket.hbar / (2.0 * kPacket.mass) *
                            oracle::d2_central4(psi_of_x, x, h) -
                        0.5 * kPacket.mass * kPacket.omega * kPacket.omega * x * x * value);
    };
    const double coarse = residual(2e-2);
    const double fine = residual(1e-2);
    CHECK(coarse > 0.0);
    CHECK(coarse / fine == doctest::Approx(16.0).epsilon(0.3));
}

TEST_CASE("fields reconstruct the wavefunction and R stays non-negative") {
    const double width = packet_width(kPacket);
    for (double t : {0.0, 0.5, 1.9}) {
        const PhasePoint mean = classical_trajectory(kPacket, t);
        for (int i = -4; i <= 4; ++i) {
            const double x = mean.position + 0.9 * i * width;
            const MadelungFields fields = madelung_fields(kPacket, x, t);
            CHECK(fields.amplitude >= 0.0);
            const Complex rebuilt =
                fields.amplitude *
                std::exp(Complex(0, fields.action / kPacket.hbar));
            const Complex direct = coherent_wavefunction(kPacket, x, t);
            CHECK(std::abs(rebuilt - direct) <= 1e-12 * std::abs(direct));
        }
    }
}

TEST_CASE("quantum potential at the packet center is hbar*omega/2") {
    for (double t : {0.0, 0.8, 3.1}) {
        const PhasePoint mean = classical_trajectory(kPacket, t);
        const MadelungFields fields = madelung_fields(kPacket, mean.position, t);
        CHECK(fields.quantum_potential ==
              doctest::Approx(0.5 * kPacket.hbar * kPacket.omega).epsilon(1e-12));
    }
}

TEST_CASE("quantum potential equals -(hbar^2/2m) R''/R (finite-difference check)") {
    const double t = 1.1;
    const double width = packet_width(kPacket);
    const PhasePoint mean = classical_trajectory(kPacket, t);
    const double x = mean.position + 0.8 * width;
    const auto amplitude = [&](double xx) { return madelung_fields(kPacket, xx, t).amplitude; };
    const double curvature = oracle::d2_central4(amplitude, x, 1e-3);
    const double q_numeric = -kPacket.hbar * kPacket.hbar / (2.0 * kPacket.mass) * curvature /
                             amplitude(x);
    CHECK(madelung_fields(kPacket, x, t).quantum_potential ==
          doctest::Approx(q_numeric).epsilon(1e-5));
}

TEST_CASE("continuity residual converges at second order") {
    const double width = packet_width(kPacket);
    const double dx = width / 100.0;
    const double dt = period(kPacket) / 1000.0;
    const double x = kPacket.x0 + 0.6 * width;
    const double coarse = continuity_residual(kPacket, x, 0.4, dx, dt);
    const double fine = continuity_residual(kPacket, x, 0.4, dx / 2.0, dt / 2.0);
    CHECK(coarse > 0.0);
    CHECK(fine / coarse == doctest::Approx(0.25).epsilon(0.15));
}

TEST_CASE("the static packet has zero continuity residual") {
    const CoherentStateParams rest{1.0, 1.0, 0.0, 0.0, 1.0};
    const double scale = std::sqrt(rest.mass * rest.omega / (std::numbers::pi * rest.hbar)) *
                         rest.omega;
    const double residual = continuity_residual(rest, 0.4, 0.9, 1e-2, 1e-2);
    CHECK(residual <= 1e-12 * scale);
}

TEST_CASE("quantum Hamilton-Jacobi residual vanishes on the standard grid") {
    // 20 x-points over <x> +- 4 widths, 20 t-points over one period.
    const double width = packet_width(kPacket);
    for (int ti = 0; ti < 20; ++ti) {
        const double t = period(kPacket) * ti / 19.0;
        const PhasePoint mean = classical_trajectory(kPacket, t);
        for (int xi = 0; xi < 20; ++xi) {
            const double x = mean.position + (-4.0 + 8.0 * xi / 19.0) * width;
            CHECK(quantum_hj_residual(kPacket, x, t) <=
                  1e-10 * kPacket.hbar * kPacket.omega);
        }
    }
}

TEST_CASE("the resting packet at the origin balances exactly") {
    // all terms are constants there: -hbar*omega/2 from the phase, +hbar*omega/2 from Q
    const CoherentStateParams rest{1.0, 1.0, 0.0, 0.0, 1.0};
    CHECK(quantum_hj_residual(rest, 0.0, 0.0) == 0.0);
    CHECK(quantum_hj_residual(rest, 0.0, 2.9) == 0.0);
}

TEST_CASE("without the quantum potential the Hamilton-Jacobi gap equals |Q|") {
    const double t = 0.6;
    const double width = packet_width(kPacket);
    const PhasePoint mean = classical_trajectory(kPacket, t);
    const double x = mean.position + 2.0 * width;

    // classical part assembled independently from the trajectory
    const double x_dot = mean.momentum / kPacket.mass;
    const double p_dot = -kPacket.mass * kPacket.omega * kPacket.omega * mean.position;
    const double action_dt = p_dot * x - 0.5 * kPacket.hbar * kPacket.omega -
                             0.5 * (x_dot * mean.momentum + mean.position * p_dot);
    const double classical_sum = action_dt +
                                 mean.momentum * mean.momentum / (2.0 * kPacket.mass) +
                                 0.5 * kPacket.mass * kPacket.omega * kPacket.omega * x * x;
    const MadelungFields fields = madelung_fields(kPacket, x, t);
    CHECK(fields.quantum_potential != 0.0);
    CHECK(classical_sum == doctest::Approx(-fields.quantum_potential).epsilon(1e-12));
}

TEST_CASE("the classical limit gap is exactly hbar*omega/2") {
    for (double x : {-3.0, 0.0, 17.0}) {
        CHECK(classical_limit_gap(kPacket, x, 0.9) == 0.5 * kPacket.hbar * kPacket.omega);
    }
    // linear in hbar
    CoherentStateParams half = kPacket;
    half.hbar *= 0.5;
    CHECK(classical_limit_gap(half, 1.0, 1.0) ==
          doctest::Approx(0.5 * classical_limit_gap(kPacket, 1.0, 1.0)).epsilon(1e-15));
}

TEST_CASE("the hbar-independent part matches the inverted-parabola form") {
    // Q0 at unit displacement with m = omega = 1 is -1/2 J.
    const CoherentStateParams p{1.0, 1.0, 0.0, 0.0, 1.0};
    const MadelungFields fields = madelung_fields(p, 1.0, 0.0);
    const double q0 = fields.quantum_potential - classical_limit_gap(p, 1.0, 0.0);
    CHECK(q0 == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(classical_trajectory({-1.0, 1.0, 0.0, 0.0, 1.0}, 0.0),
                    qclimit::validation_error);
    CHECK_THROWS_AS(continuity_residual(kPacket, 0.0, 0.0, -1e-3, 1e-3),
                    qclimit::validation_error);
}
