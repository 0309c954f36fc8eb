#pragma once

#include <algorithm>
#include <cstddef>

#include "gdom/metrics.hpp"

namespace gdom {

/**
 * Analytic bracket L <= gamma_g(G) <= U.
 *
 * Lower bound: max of ceil(n/(Delta+1)), ceil(2r/3), ceil((d+1)/3) and
 * |Supp(G)|. Fractional terms are rounded up since gamma_g is an integer.
 * Upper bound: min of U1 = min(Delta(G), Delta(~G)) + 1 and
 * U2 = delta(G) + 2 when delta(G) = delta(~G) <= 2, else max(delta(G), delta(~G)) + 1.
 */
struct BoundsReport {
    std::size_t lb_degree = 0;
    std::size_t lb_radius = 0;
    std::size_t lb_diameter = 0;
    std::size_t lb_support = 0;
    std::size_t lower = 0;
    std::size_t u1 = 0;
    std::size_t u2 = 0;
    std::size_t upper = 0;
};

namespace detail {
constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }
}  // namespace detail

inline BoundsReport lower_bound(const Graph& g) {
    require_connected(g);
    const auto m = metrics(g);
    BoundsReport r;
    r.lb_degree = detail::ceil_div(g.vertex_count(), m.max_degree + 1);
    r.lb_radius = detail::ceil_div(2 * *m.radius, 3);
    r.lb_diameter = detail::ceil_div(*m.diameter + 1, 3);
    r.lb_support = m.support_count;
    r.lower = std::max({r.lb_degree, r.lb_radius, r.lb_diameter, r.lb_support});
    return r;
}

inline BoundsReport upper_bound(const Graph& g) {
    require_connected(g);
    BoundsReport r;
    r.u1 = std::min(g.max_degree(), g.max_degree(Side::complement)) + 1;
    const std::size_t dmin = g.min_degree();
    const std::size_t cmin = g.min_degree(Side::complement);
    r.u2 = (dmin == cmin && dmin <= 2) ? dmin + 2 : std::max(dmin, cmin) + 1;
    r.upper = std::min(r.u1, r.u2);
    return r;
}

inline BoundsReport bounds(const Graph& g) {
    BoundsReport r = lower_bound(g);
    const BoundsReport u = upper_bound(g);
    r.u1 = u.u1;
    r.u2 = u.u2;
    r.upper = u.upper;
    return r;
}

}  // namespace gdom
