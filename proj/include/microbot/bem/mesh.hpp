#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "../constants.hpp"
#include "../errors.hpp"
#include "../numerics/quadrature.hpp"

namespace microbot::bem {

struct Point2 {
    double x = 0.0;      ///< axial coordinate
    double sigma = 0.0;  ///< distance from the axis
};

/// Meridian curve from the north pole (t = t0) to the south pole (t = t1).
struct Generatrix {
    std::function<Point2(double)> point;
    std::function<Point2(double)> tangent;  ///< d point / dt
    double t0 = 0.0;
    double t1 = pi;
};

/// Prolate spheroid x = a cos t, sigma = b sin t.
inline Generatrix spheroid_generatrix(double a, double b) {
    Generatrix g;
    g.point = [a, b](double t) { return Point2{a * std::cos(t), b * std::sin(t)}; };
    g.tangent = [a, b](double t) { return Point2{-a * std::sin(t), b * std::cos(t)}; };
    return g;
}

/// Quadrature point on an element.
struct QuadPoint {
    double t;
    Point2 y;
    Point2 normal;  ///< outward unit normal in the meridian plane
    double weight;  ///< Gauss weight times |dX/dt|
    double dt;      ///< Gauss weight in the parameter
};

struct Element {
    double ta, tb, tm;        ///< parameter ends and collocation parameter
    Point2 mid;               ///< collocation point
    Point2 normal;            ///< outward normal at the collocation point
    double jac_mid;           ///< |dX/dt| at the collocation point
    double length;            ///< arc length
    double area;              ///< surface area of the ring band
    Point2 normal_area;       ///< \int n 2 pi sigma dl
    std::vector<QuadPoint> far;   ///< 8-point rule
    std::vector<QuadPoint> near;  ///< 16 points on each half, split at tm
};

struct BemMesh {
    Generatrix generatrix;
    std::vector<Element> elements;
    double total_length = 0.0;
    double total_area = 0.0;

    int size() const { return static_cast<int>(elements.size()); }
};

inline double jacobian(const Generatrix& g, double t) {
    const Point2 d = g.tangent(t);
    return std::hypot(d.x, d.sigma);
}

inline Point2 outward_normal(const Generatrix& g, double t) {
    const Point2 d = g.tangent(t);
    const double j = std::hypot(d.x, d.sigma);
    return {d.sigma / j, -d.x / j};
}

/// Arc length of the generatrix between parameters lo and hi.
inline double arc_length(const Generatrix& g, double lo, double hi, int panels = 8) {
    double s = 0.0;
    const double h = (hi - lo) / panels;
    for (int i = 0; i < panels; ++i) {
        s += numerics::integrate_gauss([&](double t) { return jacobian(g, t); }, lo + i * h, lo + (i + 1) * h, 16);
    }
    return s;
}

namespace detail {

// Parameter at which the arc length from lo reaches target, by safeguarded Newton.
inline double invert_arc_length(const Generatrix& g, double lo, double hi, double target) {
    double a = lo, b = hi, t = lo + (hi - lo) * 0.5;
    for (int it = 0; it < 100; ++it) {
        const double f = arc_length(g, lo, t, 2) - target;
        if (f > 0.0) b = t; else a = t;
        const double j = jacobian(g, t);
        double tn = j > 0.0 ? t - f / j : 0.5 * (a + b);
        if (!(tn > a && tn < b)) tn = 0.5 * (a + b);
        if (std::abs(tn - t) < 1e-15 * (1.0 + std::abs(t))) return tn;
        t = tn;
    }
    return t;
}

inline std::vector<QuadPoint> element_rule(const Generatrix& g, double lo, double hi, int n) {
    const auto& rule = numerics::gauss_legendre(n);
    std::vector<QuadPoint> pts;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < n; ++i) {
        const double t = mid + half * rule.x[i];
        pts.push_back({t, g.point(t), outward_normal(g, t), rule.w[i] * half * jacobian(g, t), rule.w[i] * half});
    }
    return pts;
}

}  // namespace detail

/**
 * @brief Mesh with nodes equally spaced in arc length.
 *
 * Parameters listed in `breaks` become element nodes (band edges, say);
 * each segment gets elements in proportion to its length.
 */
inline BemMesh make_mesh(const Generatrix& g, int n_elements, std::vector<double> breaks = {}) {
    if (n_elements < 4) throw GeometryError("mesh needs at least 4 elements");
    std::vector<double> seg{g.t0};
    std::sort(breaks.begin(), breaks.end());
    for (double b : breaks)
        if (b > g.t0 && b < g.t1) seg.push_back(b);
    seg.push_back(g.t1);

    // panelled cumulative arc length
    std::vector<double> seg_len;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
        seg_len.push_back(arc_length(g, seg[i], seg[i + 1], 64));
        total += seg_len.back();
    }
    if (!(total > 0.0)) throw GeometryError("generatrix has zero length");

    std::vector<int> counts;
    int assigned = 0;
    for (std::size_t i = 0; i < seg_len.size(); ++i) {
        const int c = std::max(1, static_cast<int>(std::lround(n_elements * seg_len[i] / total)));
        counts.push_back(c);
        assigned += c;
    }
    // fix rounding on the longest segment
    const auto longest = std::max_element(seg_len.begin(), seg_len.end()) - seg_len.begin();
    counts[longest] += n_elements - assigned;
    if (counts[longest] < 1) throw GeometryError("too few elements for the requested breakpoints");

    std::vector<double> nodes{g.t0};
    for (std::size_t i = 0; i < seg_len.size(); ++i) {
        // march through fixed sub-panels to keep each inversion local
        double lo = seg[i], acc = 0.0;
        const double h = seg_len[i] / counts[i];
        for (int k = 1; k < counts[i]; ++k) {
            const double target = k * h - acc;
            const double t = detail::invert_arc_length(g, lo, seg[i + 1], target);
            acc += arc_length(g, lo, t, 2);
            lo = t;
            nodes.push_back(t);
        }
        nodes.push_back(seg[i + 1]);
    }

    BemMesh mesh;
    mesh.generatrix = g;
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
        Element e;
        e.ta = nodes[k];
        e.tb = nodes[k + 1];
        if (!(e.tb > e.ta)) throw GeometryError("mesh nodes not increasing");
        e.tm = 0.5 * (e.ta + e.tb);
        e.mid = g.point(e.tm);
        e.normal = outward_normal(g, e.tm);
        e.jac_mid = jacobian(g, e.tm);
        e.far = detail::element_rule(g, e.ta, e.tb, 8);
        e.near = detail::element_rule(g, e.ta, e.tm, 16);
        const auto upper = detail::element_rule(g, e.tm, e.tb, 16);
        e.near.insert(e.near.end(), upper.begin(), upper.end());
        e.length = 0.0;
        e.area = 0.0;
        for (const auto& q : e.near) {
            e.length += q.weight;
            e.area += 2.0 * pi * q.y.sigma * q.weight;
            e.normal_area.x += 2.0 * pi * q.y.sigma * q.weight * q.normal.x;
            e.normal_area.sigma += 2.0 * pi * q.y.sigma * q.weight * q.normal.sigma;
        }
        mesh.total_length += e.length;
        mesh.total_area += e.area;
        mesh.elements.push_back(std::move(e));
    }
    return mesh;
}

}  // namespace microbot::bem
