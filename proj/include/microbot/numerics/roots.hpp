#pragma once

#include <cmath>
#include <functional>

#include "../errors.hpp"

namespace microbot::numerics {

/// Root of a sign-changing function on [lo, hi] by bisection.
template <class F>
double bisect(F&& f, double lo, double hi, double rel_tol = 1e-13, int max_iter = 200) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) throw NumericalError("bisection: root not bracketed");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

struct Extremum {
    double x;
    double value;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
template <class F>
Extremum golden_max(F&& f, double lo, double hi, double tol = 1e-12) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol * (1.0 + std::abs(lo) + std::abs(hi))) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    return f1 > f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

/// Maximum of f over [lo, hi]: scan n samples, then golden-section around the best one.
template <class F>
Extremum scan_max(F&& f, double lo, double hi, int n, double tol = 1e-12) {
    int best = 0;
    double best_val = -HUGE_VAL;
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double v = f(lo + i * h);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = std::max(lo, lo + (best - 1) * h);
    const double b = std::min(hi, lo + (best + 1) * h);
    Extremum refined = golden_max(f, a, b, tol);
    if (refined.value < best_val) return {lo + best * h, best_val};
    return refined;
}

}  // namespace microbot::numerics
