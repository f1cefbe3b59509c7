#pragma once

// Test-side numerical oracles. These deliberately avoid the library's own
// quadrature/differentiation helpers so that every check pits two
// independent routes against each other.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace oracle {

// Strict relative comparison. doctest's Approx mixes in an absolute scale
// of one, which is useless at the magnitudes this project works with
// (1e-216 ... 1e182), so extreme-magnitude checks go through this instead.
inline bool rel_close(double actual, double expected, double tol) {
    return std::abs(actual - expected) <= tol * std::abs(expected);
}

// Composite Simpson rule; n must be even.
template <class F>
double simpson(F&& f, double a, double b, long n) {
    const double h = (b - a) / static_cast<double>(n);
    double sum = f(a) + f(b);
    for (long i = 1; i < n; ++i)
        sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// Golden-section maximization of a unimodal function on [a,b].
template <class F>
double golden_section_max(F&& f, double a, double b, double x_tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > x_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Fourth-order central first derivative.
template <class F>
auto d1_central4(F&& f, double x, double h) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

// Fourth-order central second derivative.
template <class F>
auto d2_central4(F&& f, double x, double h) {
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
           (12.0 * h * h);
}

// Sixth-order central second derivative.
template <class F>
auto d2_central6(F&& f, double x, double h) {
    return (f(x + 3 * h) * (1.0 / 90.0) + f(x + 2 * h) * (-3.0 / 20.0) + f(x + h) * 1.5 +
            f(x) * (-49.0 / 18.0) + f(x - h) * 1.5 + f(x - 2 * h) * (-3.0 / 20.0) +
            f(x - 3 * h) * (1.0 / 90.0)) /
           (h * h);
}

// Platform-independent uniform double in [0,1) from a standard engine.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::complex<double> random_complex(std::mt19937_64& rng) {
    return {2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0};
}

// Random density matrix G G^dagger / tr, full rank almost surely.
inline Eigen::MatrixXcd random_density_matrix(Eigen::Index dim, std::mt19937_64& rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            g(i, j) = random_complex(rng);
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    // symmetrize away the last few ulp
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return rho;
}

inline Eigen::MatrixXcd random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            g(i, j) = random_complex(rng);
    return 0.5 * (g + g.adjoint()).eval();
}

// Random dichotomic two-level setting n . sigma with |n| = 1.
inline Eigen::Matrix2cd random_dichotomic(std::mt19937_64& rng) {
    const double z = 2.0 * uniform01(rng) - 1.0;
    const double angle = 2.0 * std::numbers::pi * uniform01(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double x = r * std::cos(angle);
    const double y = r * std::sin(angle);
    Eigen::Matrix2cd m;
    m << std::complex<double>(z, 0.0), std::complex<double>(x, -y),
        std::complex<double>(x, y), std::complex<double>(-z, 0.0);
    return m;
}

} // namespace oracle
