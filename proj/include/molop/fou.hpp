#pragma once

#include <cstddef>
#include <string>

namespace molop {

/// Closed numeric domain shared by every word model of a codebook.
struct DomainScale {
    double min = 0.0;
    double max = 10.0;

    bool operator==(const DomainScale&) const = default;
};

/// Uniform discretization of a DomainScale. All pointwise computations
/// (similarity, centroids, containment checks) run on this grid so that
/// results are reproducible for a fixed step.
class DomainGrid {
public:
    DomainGrid() : DomainGrid(DomainScale{}, 0.01) {}
    DomainGrid(DomainScale scale, double step);

    const DomainScale& scale() const { return scale_; }
    double step() const { return step_; }
    std::size_t size() const { return size_; }
    double x(std::size_t i) const { return scale_.min + static_cast<double>(i) * step_; }

private:
    DomainScale scale_;
    double step_;
    std::size_t size_;
};

/// Trapezoid membership function with corner abscissae a <= b <= c <= d and
/// height h in (0, 1]. The flanks are linear, the plateau [b, c] sits at h.
struct TrapezoidMF {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double h = 1.0;

    bool operator==(const TrapezoidMF&) const = default;
};

/// Interval type-2 word model: the region between a normal upper trapezoid
/// and a (possibly subnormal) lower trapezoid.
struct IT2TrapezoidFOU {
    TrapezoidMF umf; // height must be 1
    TrapezoidMF lmf; // height <= 1

    bool operator==(const IT2TrapezoidFOU&) const = default;
};

struct AlphaCut {
    double alpha = 0.0;
    double left = 0.0;
    double right = 0.0;

    bool operator==(const AlphaCut&) const = default;
};

enum class FouShape { LeftShoulder, Interior, RightShoulder };

std::string to_string(FouShape shape);

struct ValidationResult {
    bool ok = true;
    std::string message;

    explicit operator bool() const { return ok; }
};

/// Membership grade of `mf` at `x`. Total over finite x: 0 outside [a, d],
/// h on [b, c], linear on the flanks.
double membership_at(const TrapezoidMF& mf, double x);

/// Alpha-cut [a + (b-a)*alpha/h, d - (d-c)*alpha/h]. Requires 0 <= alpha <= h;
/// values above the height are rejected rather than clamped.
AlphaCut alpha_cut(const TrapezoidMF& mf, double alpha);

/// Checks corner ordering, domain containment, heights, and pointwise
/// LMF <= UMF containment sampled on `grid`. Reports the first violation.
ValidationResult validate_fou(const IT2TrapezoidFOU& fou, const DomainGrid& grid);

/// Throwing variant of validate_fou for internal contracts.
void require_valid(const IT2TrapezoidFOU& fou, const DomainGrid& grid, const std::string& context);

/// Shoulder classification with 1e-9 corner tolerance: a left shoulder has
/// all four left corners anchored at scale.min, a right shoulder the mirror.
FouShape classify_shape(const IT2TrapezoidFOU& fou, const DomainScale& scale);

} // namespace molop
