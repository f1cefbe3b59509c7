#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "qclimit/errors.hpp"

namespace qclimit::numeric {

namespace detail {

struct AdaptBudget {
    long remaining;
};

template <class F>
double adapt_simpson(F& f, AdaptBudget& budget, double a, double fa, double b, double fb,
                     double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    budget.remaining -= 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    // Give up refining once the estimate meets the tolerance, the interval
    // degenerates, or the evaluation budget runs out; the Richardson term
    // still sharpens the final answer.
    const double interval_floor =
        4.0 * std::numeric_limits<double>::epsilon() * (std::abs(a) + std::abs(b));
    if (depth <= 0 || budget.remaining <= 0 || std::abs(delta) <= 15.0 * tol ||
        (b - a) <= interval_floor)
        return left + right + delta / 15.0;
    return adapt_simpson(f, budget, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt_simpson(f, budget, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature of f over [a,b] to absolute tolerance
/// abs_tol, with a hard cap on recursion depth and total evaluations.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol, int max_depth = 40,
                          long max_evals = 2000000) {
    if (!(b >= a))
        throw validation_error("integrate_adaptive: interval ends must satisfy a <= b");
    if (a == b)
        return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    detail::AdaptBudget budget{max_evals - 3};
    return detail::adapt_simpson(f, budget, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

/// Bisection root of f on [lo,hi]; the endpoint values must differ in sign.
template <class F>
double bisect_root(F&& f, double lo, double hi, double x_tol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw validation_error("bisect_root: endpoints do not bracket a sign change");
    for (int i = 0; i < max_iter && (hi - lo) > x_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0)
            return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace qclimit::numeric
