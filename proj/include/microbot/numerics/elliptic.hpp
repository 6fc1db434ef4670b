#pragma once

#include <cmath>

#include "../constants.hpp"
#include "../errors.hpp"

namespace microbot::numerics {

struct EllipticKE {
    double K;
    double E;
};

/// Complete elliptic integrals K(m), E(m) with parameter m = k^2, by the AGM.
inline EllipticKE elliptic_ke(double m) {
    if (!(m >= 0.0 && m < 1.0)) throw DomainError("elliptic parameter must lie in [0, 1)");
    double a = 1.0, b = std::sqrt(1.0 - m), c = std::sqrt(m);
    double sum = 0.5 * c * c;
    double pow2 = 0.5;
    for (int i = 0; i < 60 && std::abs(c) > 1e-17 * a; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    const double K = pi / (2.0 * a);
    return {K, K * (1.0 - sum)};
}

}  // namespace microbot::numerics
