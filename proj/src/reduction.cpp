#include "molop/reduction.hpp"

#include "molop/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace molop {

double jaccard_similarity(const IT2TrapezoidFOU& a, const IT2TrapezoidFOU& b, const DomainGrid& grid) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        const double ua = membership_at(a.umf, x);
        const double ub = membership_at(b.umf, x);
        const double la = membership_at(a.lmf, x);
        const double lb = membership_at(b.lmf, x);
        num += std::min(ua, ub) + std::min(la, lb);
        den += std::max(ua, ub) + std::max(la, lb);
    }
    if (den <= 0.0)
        throw degenerate_error("jaccard_similarity: both FOUs are identically zero on the grid");
    return num / den;
}

namespace {

struct GridMass {
    std::vector<double> x;
    std::vector<double> upper;
    std::vector<double> lower;
};

GridMass sample(const IT2TrapezoidFOU& fou, const DomainGrid& grid) {
    GridMass m;
    m.x.resize(grid.size());
    m.upper.resize(grid.size());
    m.lower.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        m.x[i] = grid.x(i);
        m.upper[i] = membership_at(fou.umf, m.x[i]);
        m.lower[i] = membership_at(fou.lmf, m.x[i]);
    }
    return m;
}

// Exhaustive switch-point search used as a fallback when the iteration
// degenerates (zero interim mass). O(n) via prefix sums.
double switch_search(const GridMass& m, bool left_end) {
    const std::size_t n = m.x.size();
    std::vector<double> cu(n), su(n), cl(n), sl(n);
    double au = 0, bu = 0, al = 0, bl = 0;
    for (std::size_t i = 0; i < n; ++i) {
        au += m.x[i] * m.upper[i];
        bu += m.upper[i];
        al += m.x[i] * m.lower[i];
        bl += m.lower[i];
        cu[i] = au; su[i] = bu; cl[i] = al; sl[i] = bl;
    }
    double best = left_end ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        double num, den;
        if (left_end) {
            num = cu[k] + (al - cl[k]);
            den = su[k] + (bl - sl[k]);
        } else {
            num = cl[k] + (au - cu[k]);
            den = sl[k] + (bu - su[k]);
        }
        if (den > 1e-300) {
            const double y = num / den;
            best = left_end ? std::min(best, y) : std::max(best, y);
        }
    }
    return best;
}

// One endpoint of the KM centroid by the enhanced iteration. `left_end`
// selects c_l (upper weights left of the switch) versus c_r.
double ekm_endpoint(const GridMass& m, bool left_end) {
    const std::size_t n = m.x.size();
    const double init = left_end ? static_cast<double>(n) / 2.4 : static_cast<double>(n) / 1.7;
    std::size_t k = std::min<std::size_t>(n - 1, static_cast<std::size_t>(std::llround(init)));

    auto mass_at = [&](std::size_t i) {
        // weight assignment for split after index k (inclusive)
        const bool head = i <= k;
        const bool use_upper = left_end ? head : !head;
        return use_upper ? m.upper[i] : m.lower[i];
    };

    double a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        a += m.x[i] * mass_at(i);
        b += mass_at(i);
    }
    if (b <= 0.0)
        return switch_search(m, left_end);

    double y = a / b;
    for (int iter = 0; iter < 64; ++iter) {
        // locate y between grid points, left-to-right tie-breaking
        std::size_t k2;
        if (y <= m.x.front())
            k2 = 0;
        else if (y >= m.x.back())
            k2 = n - 1;
        else
            k2 = static_cast<std::size_t>((y - m.x.front()) / (m.x[1] - m.x[0]));
        if (k2 == k)
            return y;
        // incremental update over the switched range (k, k2]
        const std::size_t lo = std::min(k, k2);
        const std::size_t hi = std::max(k, k2);
        const double s = (k2 > k) == left_end ? 1.0 : -1.0;
        double da = 0, db = 0;
        for (std::size_t i = lo + 1; i <= hi; ++i) {
            const double diff = m.upper[i] - m.lower[i];
            da += m.x[i] * diff;
            db += diff;
        }
        a += s * da;
        b += s * db;
        if (b <= 0.0)
            return switch_search(m, left_end);
        k = k2;
        y = a / b;
    }
    return switch_search(m, left_end); // no convergence: fall back to the exact scan
}

} // namespace

CentroidInterval centroid_ekm(const IT2TrapezoidFOU& fou, const DomainGrid& grid) {
    const GridMass m = sample(fou, grid);
    const double area = std::accumulate(m.upper.begin(), m.upper.end(), 0.0);
    if (area <= 0.0)
        throw degenerate_error("centroid_ekm: FOU has zero area under the UMF on the grid");
    CentroidInterval c{ekm_endpoint(m, true), ekm_endpoint(m, false)};
    if (c.left > c.right)
        std::swap(c.left, c.right);
    return c;
}

namespace {

void check_lwa_inputs(std::size_t sources, std::size_t weights) {
    if (sources == 0)
        throw invalid_argument("lwa: at least one source is required");
    if (sources != weights)
        throw invalid_argument("lwa: sources and weights must have equal length");
}

} // namespace

IT2TrapezoidFOU lwa_crisp(std::span<const IT2TrapezoidFOU> sources, std::span<const double> weights,
                          HeightMode mode) {
    check_lwa_inputs(sources.size(), weights.size());
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0 || std::isnan(w))
            throw invalid_argument("lwa_crisp: weights must be nonnegative");
        total += w;
    }
    if (total <= 0.0)
        throw no_fired_rule("lwa_crisp: all weights are zero");

    IT2TrapezoidFOU out{};
    out.umf = {};
    out.lmf = {};
    double height = (mode == HeightMode::Min) ? 1.0 : 0.0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const double w = weights[i] / total;
        out.umf.a += w * sources[i].umf.a;
        out.umf.b += w * sources[i].umf.b;
        out.umf.c += w * sources[i].umf.c;
        out.umf.d += w * sources[i].umf.d;
        out.lmf.a += w * sources[i].lmf.a;
        out.lmf.b += w * sources[i].lmf.b;
        out.lmf.c += w * sources[i].lmf.c;
        out.lmf.d += w * sources[i].lmf.d;
        if (mode == HeightMode::WeightedBlend)
            height += w * sources[i].lmf.h;
        else if (weights[i] > 0.0)
            height = std::min(height, sources[i].lmf.h);
    }
    out.umf.h = 1.0;
    out.lmf.h = height;
    return out;
}

namespace detail {

double fractional_bound(std::span<const double> values, std::span<const WeightInterval> weights,
                        bool maximize) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

    // prefix sums in sorted order, taken once with lo and once with hi
    std::vector<double> plo_v(n + 1, 0.0), plo_w(n + 1, 0.0), phi_v(n + 1, 0.0), phi_w(n + 1, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t i = order[p];
        plo_v[p + 1] = plo_v[p] + values[i] * weights[i].lo;
        plo_w[p + 1] = plo_w[p] + weights[i].lo;
        phi_v[p + 1] = phi_v[p] + values[i] * weights[i].hi;
        phi_w[p + 1] = phi_w[p] + weights[i].hi;
    }

    double best = maximize ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= n; ++k) {
        // minimize: hi weights on the k smallest values; maximize: mirrored
        double num, den;
        if (!maximize) {
            num = phi_v[k] + (plo_v[n] - plo_v[k]);
            den = phi_w[k] + (plo_w[n] - plo_w[k]);
        } else {
            num = plo_v[k] + (phi_v[n] - phi_v[k]);
            den = plo_w[k] + (phi_w[n] - phi_w[k]);
        }
        if (den <= 0.0)
            continue;
        const double y = num / den;
        best = maximize ? std::max(best, y) : std::min(best, y);
    }
    if (!std::isfinite(best))
        throw no_fired_rule("fractional_bound: every weight assignment has zero total weight");
    return best;
}

} // namespace detail

AlphaEnvelope lwa_alpha_envelope(std::span<const IT2TrapezoidFOU> sources,
                                 std::span<const WeightInterval> weights, int alpha_levels) {
    check_lwa_inputs(sources.size(), weights.size());
    if (alpha_levels < 2)
        throw invalid_argument("lwa_alpha: alpha_levels must be >= 2");
    double h_min = 1.0;
    bool any_positive = false;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i].lo < 0.0 || weights[i].hi < weights[i].lo)
            throw invalid_argument("lwa_alpha: weight intervals must satisfy 0 <= lo <= hi");
        if (weights[i].hi > 0.0) {
            any_positive = true;
            h_min = std::min(h_min, sources[i].lmf.h);
        }
    }
    if (!any_positive)
        throw no_fired_rule("lwa_alpha: all weight intervals are zero");

    AlphaEnvelope env;
    env.lmf_height = h_min;
    const std::size_t n = sources.size();
    std::vector<double> lefts(n), rights(n);

    for (int j = 0; j < alpha_levels; ++j) {
        const double alpha = static_cast<double>(j) / (alpha_levels - 1);
        for (std::size_t i = 0; i < n; ++i) {
            const AlphaCut cut = alpha_cut(sources[i].umf, alpha);
            lefts[i] = cut.left;
            rights[i] = cut.right;
        }
        env.upper_alpha.push_back(alpha);
        env.upper_left.push_back(detail::fractional_bound(lefts, weights, false));
        env.upper_right.push_back(detail::fractional_bound(rights, weights, true));
    }
    for (int j = 0; j < alpha_levels; ++j) {
        const double alpha = h_min * (static_cast<double>(j) / (alpha_levels - 1));
        for (std::size_t i = 0; i < n; ++i) {
            const AlphaCut cut = alpha_cut(sources[i].lmf, std::min(alpha, sources[i].lmf.h));
            lefts[i] = cut.left;
            rights[i] = cut.right;
        }
        env.lower_alpha.push_back(alpha);
        env.lower_left.push_back(detail::fractional_bound(lefts, weights, false));
        env.lower_right.push_back(detail::fractional_bound(rights, weights, true));
    }
    return env;
}

IT2TrapezoidFOU AlphaEnvelope::fitted_trapezoid() const {
    IT2TrapezoidFOU out;
    out.umf = {upper_left.front(), upper_left.back(), upper_right.back(), upper_right.front(), 1.0};
    out.lmf = {lower_left.front(), lower_left.back(), lower_right.back(), lower_right.front(), lmf_height};
    return out;
}

IT2TrapezoidFOU lwa_alpha(std::span<const IT2TrapezoidFOU> sources,
                          std::span<const WeightInterval> weights, int alpha_levels) {
    return lwa_alpha_envelope(sources, weights, alpha_levels).fitted_trapezoid();
}

} // namespace molop
