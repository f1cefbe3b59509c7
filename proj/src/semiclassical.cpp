#include "qclimit/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qclimit/errors.hpp"
#include "qclimit/numeric.hpp"

namespace qclimit::semiclassical {

namespace {

/// Fritsch-Carlson monotone slopes for cubic Hermite interpolation.
std::vector<double> pchip_slopes(const std::vector<double>& xs, const std::vector<double>& vs) {
    const size_t n = xs.size();
    std::vector<double> h(n - 1), delta(n - 1), m(n);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = xs[i + 1] - xs[i];
        if (!(h[i] > 0.0))
            throw validation_error("tabulated potential: abscissae must be strictly increasing");
        delta[i] = (vs[i + 1] - vs[i]) / h[i];
    }
    m[0] = delta[0];
    m[n - 1] = delta[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            m[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    return m;
}

double momentum(const Potential1D& pot, double e, double mass, double x) {
    return std::sqrt(std::max(2.0 * mass * (e - pot(x)), 0.0));
}

/// Integral of p over [a,b] where p vanishes like sqrt at x=a (left=true)
/// or x=b (left=false); the substitution x = a + u^2 (mirrored) makes the
/// integrand smooth.
double sqrt_edge_integral(const Potential1D& pot, double e, double mass, double a, double b,
                          bool singular_at_left, double abs_tol) {
    const double span = b - a;
    if (!(span > 0.0))
        return 0.0;
    const double u_max = std::sqrt(span);
    const auto integrand = [&](double u) {
        const double x = singular_at_left ? a + u * u : b - u * u;
        return 2.0 * u * momentum(pot, e, mass, x);
    };
    return numeric::integrate_adaptive(integrand, 0.0, u_max, abs_tol);
}

} // namespace

Potential1D Potential1D::harmonic(double mass, double omega) {
    if (!(mass > 0.0 && omega > 0.0))
        throw validation_error("harmonic potential: mass and omega must be positive");
    Potential1D pot;
    pot.kind_ = Kind::Harmonic;
    pot.mass_ = mass;
    pot.omega_ = omega;
    pot.confining_ = true;
    return pot;
}

Potential1D Potential1D::tabulated(std::vector<double> x, std::vector<double> v, double mass,
                                   bool confining) {
    if (x.size() < 4 || x.size() != v.size())
        throw validation_error("tabulated potential: need at least four matching samples");
    if (!(mass > 0.0))
        throw validation_error("tabulated potential: mass must be positive");
    Potential1D pot;
    pot.kind_ = Kind::Tabulated;
    pot.mass_ = mass;
    pot.confining_ = confining;
    pot.slopes_ = pchip_slopes(x, v);
    pot.xs_ = std::move(x);
    pot.vs_ = std::move(v);
    return pot;
}

double Potential1D::operator()(double x) const {
    if (kind_ == Kind::Harmonic)
        return 0.5 * mass_ * omega_ * omega_ * x * x;

    if (x < xs_.front() || x > xs_.back())
        throw domain_error("tabulated potential: evaluation outside the tabulated range");
    const auto upper = std::upper_bound(xs_.begin(), xs_.end(), x);
    const size_t i = std::min(static_cast<size_t>(std::distance(xs_.begin(), upper)),
                              xs_.size() - 1) - 1;
    const double h = xs_[i + 1] - xs_[i];

    // Factored Hermite basis, expanded about the nearer node. The raw
    // polynomial basis loses all absolute accuracy next to a node, which
    // matters when the interpolated value there is tiny.
    const auto hermite = [h](double v_near, double m_near, double v_far, double m_far,
                             double t) {
        const double omt = 1.0 - t;
        return v_near * (1.0 + 2.0 * t) * omt * omt + h * m_near * t * omt * omt +
               v_far * t * t * (3.0 - 2.0 * t) + h * m_far * t * t * (t - 1.0);
    };

    const double s = (x - xs_[i]) / h;
    if (s <= 0.5)
        return hermite(vs_[i], slopes_[i], vs_[i + 1], slopes_[i + 1], s);
    // mirrored evaluation from the right node; slopes flip sign
    const double t = (xs_[i + 1] - x) / h;
    return hermite(vs_[i + 1], -slopes_[i + 1], vs_[i], -slopes_[i], t);
}

double Potential1D::domain_min() const {
    if (!has_domain())
        throw validation_error("potential has no finite domain");
    return xs_.front();
}

double Potential1D::domain_max() const {
    if (!has_domain())
        throw validation_error("potential has no finite domain");
    return xs_.back();
}

double Potential1D::minimum_location() const {
    if (kind_ == Kind::Harmonic)
        return 0.0;
    size_t best = 0;
    for (size_t i = 1; i < vs_.size(); ++i)
        if (vs_[i] < vs_[best])
            best = i;
    return xs_[best];
}

std::pair<double, double> classical_turning_points(const Potential1D& pot, double E) {
    if (!pot.confining())
        throw validation_error("turning points: potential is not confining");
    const double x_min = pot.minimum_location();
    if (!(pot(x_min) < E))
        throw validation_error("turning points: energy does not exceed the potential minimum");

    const auto outer_point = [&](double direction) {
        if (pot.has_domain()) {
            const double edge = direction > 0.0 ? pot.domain_max() : pot.domain_min();
            if (!(pot(edge) > E))
                throw validation_error("turning points: potential not confining at this energy");
            return edge;
        }
        double step = 1.0;
        while (!(pot(x_min + direction * step) > E)) {
            step *= 2.0;
            if (step > 1e154)
                throw validation_error("turning points: potential not confining at this energy");
        }
        return x_min + direction * step;
    };

    const double left = outer_point(-1.0);
    const double right = outer_point(1.0);
    const auto gap = [&](double x) { return pot(x) - E; };
    const double scale = std::max({std::abs(left), std::abs(right), 1.0});
    const double a = numeric::bisect_root(gap, left, x_min, 1e-14 * scale);
    const double b = numeric::bisect_root(gap, x_min, right, 1e-14 * scale);
    return {a, b};
}

double action_integral(const Potential1D& pot, double E, double mass) {
    if (!(mass > 0.0))
        throw validation_error("action_integral: mass must be positive");
    const auto [a, b] = classical_turning_points(pot, E);
    const double mid = 0.5 * (a + b);
    const double rough = momentum(pot, E, mass, mid) * (b - a);
    const double tol = 1e-12 * std::max(rough, 1e-300);
    return sqrt_edge_integral(pot, E, mass, a, mid, true, 0.5 * tol) +
           sqrt_edge_integral(pot, E, mass, mid, b, false, 0.5 * tol);
}

std::complex<double> wkb_wavefunction(const Potential1D& pot, double E, double x, double hbar,
                                      double margin_fraction) {
    if (!(hbar > 0.0))
        throw validation_error("wkb_wavefunction: hbar must be positive");
    if (!(margin_fraction >= 0.0 && margin_fraction < 0.5))
        throw validation_error("wkb_wavefunction: margin fraction must lie in [0, 0.5)");
    const double mass = pot.mass();
    const auto [a, b] = classical_turning_points(pot, E);
    const double margin = margin_fraction * (b - a);
    if (!(x > a + margin && x < b - margin))
        throw domain_error(
            "wkb_wavefunction: x must lie between the turning points, outside the margin");

    const double p = momentum(pot, E, mass, x);
    const double rough = p * (x - a);
    const double tol = 1e-12 * std::max(rough, 1e-300);
    const double sigma0 = sqrt_edge_integral(pot, E, mass, a, x, true, tol);
    const double angle = sigma0 / hbar;
    return std::complex<double>(std::cos(angle), std::sin(angle)) / std::sqrt(p);
}

std::vector<double> bohr_sommerfeld_levels(const Potential1D& pot, int n_max, double mass,
                                           double hbar) {
    if (n_max < 1)
        throw validation_error("bohr_sommerfeld_levels: need n_max >= 1");
    if (!(mass > 0.0 && hbar > 0.0))
        throw validation_error("bohr_sommerfeld_levels: mass and hbar must be positive");
    if (!pot.confining())
        throw validation_error("bohr_sommerfeld_levels: potential is not confining");

    const double h = 2.0 * std::numbers::pi * hbar;
    const double v_min = pot(pot.minimum_location());
    const double top_target = (n_max - 0.5) * h / 2.0;

    // Tabulated wells only confine up to their rim.
    double e_cap = std::numeric_limits<double>::infinity();
    if (pot.has_domain()) {
        const double rim = std::min(pot(pot.domain_min()), pot(pot.domain_max()));
        e_cap = v_min + (rim - v_min) * (1.0 - 1e-9);
    }

    // Bracket the highest level first, then bisect each target inside it.
    double e_hi = v_min + std::max(std::abs(v_min), 1e-30);
    for (int i = 0; i < 2400 && action_integral(pot, e_hi, mass) <= top_target; ++i) {
        if (e_hi >= e_cap)
            throw validation_error(
                "bohr_sommerfeld_levels: requested levels do not fit below the potential rim");
        e_hi = std::min(v_min + 2.0 * (e_hi - v_min), e_cap);
    }

    std::vector<double> levels;
    levels.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double target = (n - 0.5) * h / 2.0;
        double lo = v_min;
        double hi = e_hi;
        // The action vanishes at the well bottom and grows monotonically;
        // classic bisection on action(E) - target.
        for (int iter = 0; iter < 200 && (hi - lo) > 1e-13 * std::max(std::abs(hi), 1e-300);
             ++iter) {
            const double mid = 0.5 * (lo + hi);
            double value;
            if (mid <= v_min) {
                value = -target;
            } else {
                value = action_integral(pot, mid, mass) - target;
            }
            if (value < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        levels.push_back(0.5 * (lo + hi));
    }
    return levels;
}

double cell_state_count(const PhaseSpaceCell& cell, double h) {
    if (!(cell.mu > 0.0))
        throw validation_error("cell_state_count: cell volume must be positive");
    if (cell.n_dof < 1)
        throw validation_error("cell_state_count: need at least one degree of freedom");
    if (!(h > 0.0))
        throw validation_error("cell_state_count: h must be positive");
    return cell.mu / std::pow(h, cell.n_dof);
}

QuasiProjectorDefect quasi_projector_defect(const Eigen::Ref<const hilbert::ComplexMatrix>& f,
                                            double n_expected) {
    const Eigen::VectorXd eigenvalues = hilbert::hermitian_eigenvalues(f);
    double trace = 0.0;
    double idempotency = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const double lambda = eigenvalues[i];
        trace += lambda;
        idempotency += std::abs(lambda - lambda * lambda);
    }
    return {std::abs(trace - n_expected), idempotency};
}

} // namespace qclimit::semiclassical
