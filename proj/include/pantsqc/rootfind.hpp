#pragma once

#include <cmath>
#include <stdexcept>

namespace pantsqc {

/// Bisection on [lo, hi] assuming f(lo) and f(hi) have opposite signs
/// (or one of them vanishes).  Runs until the bracket is narrower than
/// xtol.  Derivative free; intended for strictly monotone functions.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::runtime_error("bisect: no sign change on the bracket");
    }
    for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Newton iteration with a finite-difference slope, safeguarded by the
/// bracket [lo, hi]: any step that leaves the bracket (or fails to shrink
/// it) is replaced by a bisection step.  Assumes a sign change on entry.
template <class F>
double newton_bisect(F&& f, double lo, double hi, double xtol, double ftol,
                     int max_iter = 100) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::runtime_error("newton_bisect: no sign change on the bracket");
    }
    double x = 0.5 * (lo + hi);
    double fx = f(x);
    double x_prev = lo;
    double f_prev = flo;
    for (int i = 0; i < max_iter; ++i) {
        if (std::abs(fx) <= ftol || (hi - lo) <= xtol) return x;
        // keep the bracket current
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        double x_next;
        const double slope = (fx - f_prev) / (x - x_prev);
        if (std::isfinite(slope) && slope != 0.0) {
            x_next = x - fx / slope;
        } else {
            x_next = 0.5 * (lo + hi);
        }
        if (!(x_next > lo && x_next < hi)) {
            x_next = 0.5 * (lo + hi);
        }
        x_prev = x;
        f_prev = fx;
        x = x_next;
        fx = f(x);
    }
    return x;
}

}  // namespace pantsqc
