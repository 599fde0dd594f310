#pragma once

#include "molop/fou.hpp"

#include <span>
#include <vector>

namespace molop {

/// Karnik-Mendel centroid end points of an IT2 FOU, in domain units.
struct CentroidInterval {
    double left = 0.0;
    double right = 0.0;

    double mean() const { return 0.5 * (left + right); }
    bool operator==(const CentroidInterval&) const = default;
};

/// Per-source weight range. A crisp weight is the degenerate interval.
struct WeightInterval {
    double lo = 0.0;
    double hi = 0.0;

    static WeightInterval crisp(double w) { return {w, w}; }
    bool is_crisp() const { return lo == hi; }
};

/// How the LMF height of a weighted average is formed: the weight-blended
/// mean of source heights, or the minimum over positively weighted sources.
enum class HeightMode { WeightedBlend, Min };

/// Jaccard similarity of two FOUs on a shared grid:
///   (sum min(umf) + sum min(lmf)) / (sum max(umf) + sum max(lmf)).
/// Symmetric, in [0, 1], and 1 exactly when the FOUs coincide on the grid.
double jaccard_similarity(const IT2TrapezoidFOU& a, const IT2TrapezoidFOU& b, const DomainGrid& grid);

/// Centroid end points via the enhanced Karnik-Mendel iteration on the grid.
/// c_l minimizes and c_r maximizes the centroid over embedded type-1 sets
/// bounded by the LMF and UMF.
CentroidInterval centroid_ekm(const IT2TrapezoidFOU& fou, const DomainGrid& grid);

/// Weighted average of FOUs under crisp nonnegative weights: corner-wise
/// normalized averages of the UMF and LMF corners; the LMF height follows
/// `mode`. Rejects an all-zero weight vector.
IT2TrapezoidFOU lwa_crisp(std::span<const IT2TrapezoidFOU> sources, std::span<const double> weights,
                          HeightMode mode = HeightMode::WeightedBlend);

/// Alpha-cut sampled boundaries of a linguistic weighted average with
/// interval weights. Upper boundaries are sampled on alpha in [0, 1], lower
/// boundaries on [0, h] where h is the smallest LMF height among positively
/// weighted sources.
struct AlphaEnvelope {
    std::vector<double> upper_alpha;
    std::vector<double> upper_left;  // y_Ll
    std::vector<double> upper_right; // y_Rr
    std::vector<double> lower_alpha;
    std::vector<double> lower_left;  // y_Lr
    std::vector<double> lower_right; // y_Rl
    double lmf_height = 1.0;

    /// Trapezoid read off the envelope: corners at the first and last
    /// sampled level of each boundary.
    IT2TrapezoidFOU fitted_trapezoid() const;
};

AlphaEnvelope lwa_alpha_envelope(std::span<const IT2TrapezoidFOU> sources,
                                 std::span<const WeightInterval> weights, int alpha_levels = 101);

/// Convenience wrapper returning the fitted trapezoid of the envelope.
IT2TrapezoidFOU lwa_alpha(std::span<const IT2TrapezoidFOU> sources,
                          std::span<const WeightInterval> weights, int alpha_levels = 101);

namespace detail {
/// Extremum of sum(v_i w_i) / sum(w_i) over box weight intervals, found by
/// the switch-point characterization (upper weights on one side of the
/// sorted values, lower weights on the other).
double fractional_bound(std::span<const double> values, std::span<const WeightInterval> weights,
                        bool maximize);
} // namespace detail

} // namespace molop
