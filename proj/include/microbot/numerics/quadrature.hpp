#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "../constants.hpp"
#include "../errors.hpp"

namespace microbot::numerics {

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1], ascending
    std::vector<double> w;
};

namespace detail {

inline GaussRule build_gauss_legendre(int n) {
    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace detail

/// Gauss-Legendre rule with n nodes on [-1, 1]; rules are cached and shared.
inline const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw InvalidParameter("Gauss rule needs at least one node");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussRule>(detail::build_gauss_legendre(n));
    return *slot;
}

/// Integrate f over [lo, hi] with an n-point Gauss rule.
template <class F>
double integrate_gauss(F&& f, double lo, double hi, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.w[i] * f(mid + half * rule.x[i]);
    return sum * half;
}

/// Composite Gauss over sub-intervals split at the given breakpoints.
template <class F>
double integrate_piecewise(F&& f, const std::vector<double>& breaks, int n) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] > breaks[i]) sum += integrate_gauss(f, breaks[i], breaks[i + 1], n);
    }
    return sum;
}

}  // namespace microbot::numerics
