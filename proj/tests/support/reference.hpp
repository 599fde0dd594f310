#pragma once

// Test-side reference implementations. These stay independent of the library
// kernels they check: centroids come from exhaustive switch-point
// enumeration, weighted-average bounds from dense weight grids.

#include "molop/codebook.hpp"
#include "molop/fou.hpp"
#include "molop/reduction.hpp"
#include "molop/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace molop::reference {

/// Type-1 centroid by direct grid summation.
inline double t1_centroid(const TrapezoidMF& mf, const DomainGrid& grid) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        const double mu = membership_at(mf, x);
        num += x * mu;
        den += mu;
    }
    return num / den;
}

/// KM centroid end points by enumerating every grid index as the switch
/// point and taking the min (left end) and max (right end).
inline CentroidInterval centroid_switchpoint(const IT2TrapezoidFOU& fou, const DomainGrid& grid) {
    const std::size_t n = grid.size();
    std::vector<double> x(n), up(n), lo(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = grid.x(i);
        up[i] = membership_at(fou.umf, x[i]);
        lo[i] = membership_at(fou.lmf, x[i]);
    }
    std::vector<double> cxu(n + 1, 0.0), cu(n + 1, 0.0), cxl(n + 1, 0.0), cl(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        cxu[i + 1] = cxu[i] + x[i] * up[i];
        cu[i + 1] = cu[i] + up[i];
        cxl[i + 1] = cxl[i] + x[i] * lo[i];
        cl[i + 1] = cl[i] + lo[i];
    }
    double best_l = 1e300, best_r = -1e300;
    for (std::size_t k = 0; k <= n; ++k) {
        const double num_l = cxu[k] + (cxl[n] - cxl[k]);
        const double den_l = cu[k] + (cl[n] - cl[k]);
        if (den_l > 1e-300)
            best_l = std::min(best_l, num_l / den_l);
        const double num_r = cxl[k] + (cxu[n] - cxu[k]);
        const double den_r = cl[k] + (cu[n] - cu[k]);
        if (den_r > 1e-300)
            best_r = std::max(best_r, num_r / den_r);
    }
    return {best_l, best_r};
}

/// min/max of sum(v_i w_i)/sum(w_i) over a dense weight grid
/// (`points` samples per weight interval).
inline std::pair<double, double> weight_grid_bounds(const std::vector<double>& values,
                                                    const std::vector<WeightInterval>& weights,
                                                    int points) {
    const std::size_t n = values.size();
    std::vector<int> idx(n, 0);
    double lo = 1e300, hi = -1e300;
    while (true) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = points > 1 ? static_cast<double>(idx[i]) / (points - 1) : 0.0;
            const double w = weights[i].lo + t * (weights[i].hi - weights[i].lo);
            num += values[i] * w;
            den += w;
        }
        if (den > 1e-300) {
            const double y = num / den;
            lo = std::min(lo, y);
            hi = std::max(hi, y);
        }
        std::size_t p = 0;
        while (p < n && ++idx[p] == points) {
            idx[p] = 0;
            ++p;
        }
        if (p == n)
            break;
    }
    return {lo, hi};
}

/// Random FOU with component-wise nested corners (which guarantees pointwise
/// containment), suitable wherever a generic valid word model is needed.
inline IT2TrapezoidFOU random_fou(Rng& rng, const DomainScale& scale) {
    const double span = scale.max - scale.min;
    double c[4];
    for (double& v : c)
        v = rng.uniform(scale.min, scale.max);
    std::sort(c, c + 4);
    // keep a usable support and plateau
    c[0] = std::max(scale.min, c[0] - 0.05 * span);
    c[3] = std::min(scale.max, c[3] + 0.05 * span);
    TrapezoidMF umf{c[0], c[1], c[2], c[3], 1.0};
    const double bl = rng.uniform(umf.b, 0.5 * (umf.b + umf.c));
    const double cl = rng.uniform(0.5 * (umf.b + umf.c), umf.c);
    TrapezoidMF lmf{rng.uniform(umf.a, bl), bl, cl, rng.uniform(cl, umf.d),
                    rng.uniform(0.3, 1.0)};
    return IT2TrapezoidFOU{umf, lmf};
}

/// Random endpoint spec with non-overlapping left and right ranges;
/// occasionally anchored at a domain end to exercise the shoulder paths.
inline EndpointSpec random_endpoint_spec(Rng& rng, const DomainScale& scale) {
    const int kind = static_cast<int>(rng.next() % 4);
    if (kind == 0) // left anchored
        return EndpointSpec{scale.min, scale.min, rng.uniform(scale.min + 1.0, scale.max - 1.0),
                            rng.uniform(scale.max - 1.0, scale.max)};
    if (kind == 1) { // right anchored
        const double lo = rng.uniform(scale.min, scale.min + 1.0);
        return EndpointSpec{lo, rng.uniform(lo, scale.min + 2.0), scale.max, scale.max};
    }
    double a = rng.uniform(scale.min, scale.max);
    double b = rng.uniform(scale.min, scale.max);
    double c = rng.uniform(scale.min, scale.max);
    double d = rng.uniform(scale.min, scale.max);
    double v[4] = {a, b, c, d};
    std::sort(v, v + 4);
    return EndpointSpec{v[0], v[1], v[2], v[3]};
}

} // namespace molop::reference
