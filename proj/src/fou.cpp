#include "molop/fou.hpp"

#include "molop/errors.hpp"

#include <cmath>
#include <sstream>

namespace molop {

namespace {
constexpr double kShapeTol = 1e-9;

std::string describe(const TrapezoidMF& mf) {
    std::ostringstream os;
    os << "(" << mf.a << ", " << mf.b << ", " << mf.c << ", " << mf.d << "; h=" << mf.h << ")";
    return os.str();
}
} // namespace

DomainGrid::DomainGrid(DomainScale scale, double step) : scale_(scale), step_(step) {
    if (!(scale.min < scale.max))
        throw invalid_argument("DomainScale: min must be < max");
    if (!(step > 0.0))
        throw invalid_argument("DomainGrid: step must be positive");
    size_ = static_cast<std::size_t>(std::floor((scale.max - scale.min) / step + 0.5)) + 1;
}

std::string to_string(FouShape shape) {
    switch (shape) {
    case FouShape::LeftShoulder: return "left-shoulder";
    case FouShape::Interior: return "interior";
    case FouShape::RightShoulder: return "right-shoulder";
    }
    return "?";
}

double membership_at(const TrapezoidMF& mf, double x) {
    if (x < mf.a || x > mf.d)
        return 0.0;
    if (x >= mf.b && x <= mf.c)
        return mf.h;
    if (x < mf.b)
        return (x - mf.a) / (mf.b - mf.a) * mf.h; // b > a here since a <= x < b
    return (mf.d - x) / (mf.d - mf.c) * mf.h;     // c < x <= d, so d > c
}

AlphaCut alpha_cut(const TrapezoidMF& mf, double alpha) {
    if (alpha < 0.0 || alpha > mf.h) {
        std::ostringstream os;
        os << "alpha_cut: alpha " << alpha << " outside [0, h=" << mf.h << "]";
        throw invalid_argument(os.str());
    }
    const double t = alpha / mf.h;
    return AlphaCut{alpha, mf.a + (mf.b - mf.a) * t, mf.d - (mf.d - mf.c) * t};
}

namespace {

ValidationResult check_trapezoid(const TrapezoidMF& mf, const DomainScale& scale, const char* which) {
    auto fail = [&](const std::string& what) {
        return ValidationResult{false, std::string(which) + " " + describe(mf) + ": " + what};
    };
    if (std::isnan(mf.a) || std::isnan(mf.b) || std::isnan(mf.c) || std::isnan(mf.d) || std::isnan(mf.h))
        return fail("corner or height is NaN");
    if (!(mf.a <= mf.b))
        return fail("corner ordering violated (a > b)");
    if (!(mf.b <= mf.c))
        return fail("corner ordering violated (b > c)");
    if (!(mf.c <= mf.d))
        return fail("corner ordering violated (c > d)");
    if (mf.a < scale.min - kShapeTol || mf.d > scale.max + kShapeTol)
        return fail("support outside the domain");
    if (!(mf.h > 0.0) || mf.h > 1.0 + kShapeTol)
        return fail("height outside (0, 1]");
    return {};
}

} // namespace

ValidationResult validate_fou(const IT2TrapezoidFOU& fou, const DomainGrid& grid) {
    if (auto r = check_trapezoid(fou.umf, grid.scale(), "umf"); !r)
        return r;
    if (auto r = check_trapezoid(fou.lmf, grid.scale(), "lmf"); !r)
        return r;
    if (std::abs(fou.umf.h - 1.0) > kShapeTol)
        return ValidationResult{false, "umf height must be 1, got " + std::to_string(fou.umf.h)};
    // Pointwise containment on the standard grid.
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        const double lo = membership_at(fou.lmf, x);
        const double up = membership_at(fou.umf, x);
        if (lo > up + 1e-9) {
            std::ostringstream os;
            os << "containment violated at x=" << x << ": lmf=" << lo << " > umf=" << up;
            return ValidationResult{false, os.str()};
        }
    }
    return {};
}

void require_valid(const IT2TrapezoidFOU& fou, const DomainGrid& grid, const std::string& context) {
    if (auto r = validate_fou(fou, grid); !r)
        throw degenerate_error(context + ": invalid FOU: " + r.message);
}

FouShape classify_shape(const IT2TrapezoidFOU& fou, const DomainScale& scale) {
    auto at_min = [&](double v) { return std::abs(v - scale.min) <= kShapeTol; };
    auto at_max = [&](double v) { return std::abs(v - scale.max) <= kShapeTol; };
    if (at_min(fou.umf.a) && at_min(fou.umf.b) && at_min(fou.lmf.a) && at_min(fou.lmf.b))
        return FouShape::LeftShoulder;
    if (at_max(fou.umf.c) && at_max(fou.umf.d) && at_max(fou.lmf.c) && at_max(fou.lmf.d))
        return FouShape::RightShoulder;
    return FouShape::Interior;
}

} // namespace molop
