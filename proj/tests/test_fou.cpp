#include "molop/fou.hpp"

#include "molop/errors.hpp"
#include "molop/rng.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace molop;

TEST_CASE("membership evaluation on flanks, plateau, and outside") {
    const TrapezoidMF mf{2, 3, 7, 8, 1.0};
    CHECK(membership_at(mf, 2.5) == doctest::Approx(0.5));
    CHECK(membership_at(mf, 5.0) == doctest::Approx(1.0));
    CHECK(membership_at(mf, 9.0) == doctest::Approx(0.0));
    CHECK(membership_at(mf, 1.9) == doctest::Approx(0.0));
    CHECK(membership_at(mf, 7.5) == doctest::Approx(0.5));
}

TEST_CASE("membership handles vertical edges") {
    const TrapezoidMF box{0, 0, 4, 4, 1.0};
    CHECK(membership_at(box, 0.0) == doctest::Approx(1.0));
    CHECK(membership_at(box, 4.0) == doctest::Approx(1.0));
    CHECK(membership_at(box, 4.0001) == doctest::Approx(0.0));
}

TEST_CASE("alpha cuts at support, core, and midway") {
    const TrapezoidMF mf{2, 3, 7, 8, 1.0};
    CHECK(alpha_cut(mf, 0.0) == AlphaCut{0.0, 2.0, 8.0});
    CHECK(alpha_cut(mf, 1.0) == AlphaCut{1.0, 3.0, 7.0});
    CHECK(alpha_cut(mf, 0.5) == AlphaCut{0.5, 2.5, 7.5});
}

TEST_CASE("alpha above the height is an error, not a clamp") {
    const TrapezoidMF mf{2, 3, 7, 8, 0.8};
    CHECK_THROWS_AS((void)alpha_cut(mf, 0.9), Error);
    CHECK_THROWS_AS((void)alpha_cut(mf, -0.1), Error);
    CHECK(alpha_cut(mf, 0.8).left == doctest::Approx(3.0));
}

TEST_CASE("validate accepts the fixture words and rejects broken ones") {
    const DomainGrid grid;
    const IT2TrapezoidFOU beginner{{0, 0, 2, 3.54, 1.0}, {0, 0, 2, 3.26, 1.0}};
    CHECK(validate_fou(beginner, grid).ok);

    IT2TrapezoidFOU bad = beginner;
    bad.umf = {3, 2, 7, 8, 1.0};
    auto r1 = validate_fou(bad, grid);
    CHECK_FALSE(r1.ok);
    CHECK(r1.message.find("ordering") != std::string::npos);

    bad = beginner;
    bad.lmf.d = 5.0; // wider than the UMF support
    auto r2 = validate_fou(bad, grid);
    CHECK_FALSE(r2.ok);
    CHECK(r2.message.find("containment") != std::string::npos);

    bad = beginner;
    bad.umf.h = 0.9;
    CHECK_FALSE(validate_fou(bad, grid).ok);

    bad = beginner;
    bad.lmf.h = 1.2;
    CHECK_FALSE(validate_fou(bad, grid).ok);
}

TEST_CASE("shape classification of the fixture vocabulary") {
    const auto cb = testfx::hma_codebook();
    CHECK(classify_shape(cb.word("WA", "B").fou, cb.scale()) == FouShape::LeftShoulder);
    CHECK(classify_shape(cb.word("WA", "P").fou, cb.scale()) == FouShape::RightShoulder);
    CHECK(classify_shape(cb.word("WA", "M").fou, cb.scale()) == FouShape::Interior);
    CHECK(classify_shape(cb.word("BS", "S").fou, cb.scale()) == FouShape::LeftShoulder);
}

TEST_CASE("membership is piecewise linear and bounded") {
    Rng rng(7);
    const DomainScale scale;
    for (int trial = 0; trial < 20; ++trial) {
        const auto fou = reference::random_fou(rng, scale);
        const TrapezoidMF& mf = fou.lmf;
        for (int i = 0; i < 50; ++i) {
            const double x = rng.uniform(scale.min, scale.max);
            const double mu = membership_at(mf, x);
            CHECK(mu >= 0.0);
            CHECK(mu <= mf.h + 1e-12);
        }
        // linearity along each flank: midpoint value is the mean of the ends
        if (mf.b > mf.a) {
            const double x1 = rng.uniform(mf.a, mf.b);
            const double x2 = rng.uniform(mf.a, mf.b);
            const double mid = membership_at(mf, 0.5 * (x1 + x2));
            CHECK(mid == doctest::Approx(0.5 * (membership_at(mf, x1) + membership_at(mf, x2)))
                             .epsilon(1e-9));
        }
    }
}

TEST_CASE("alpha cuts nest and agree with membership") {
    Rng rng(11);
    const DomainScale scale;
    for (int trial = 0; trial < 50; ++trial) {
        const auto fou = reference::random_fou(rng, scale);
        const TrapezoidMF& mf = fou.umf;
        double a1 = rng.uniform(0.0, mf.h);
        double a2 = rng.uniform(0.0, mf.h);
        if (a1 > a2)
            std::swap(a1, a2);
        const auto c1 = alpha_cut(mf, a1);
        const auto c2 = alpha_cut(mf, a2);
        CHECK(c2.left >= c1.left - 1e-12);
        CHECK(c2.right <= c1.right + 1e-12);
        // every x inside the cut carries at least that much membership
        for (int i = 0; i < 10; ++i) {
            const double x = rng.uniform(c2.left, c2.right);
            CHECK(membership_at(mf, x) >= a2 - 1e-12);
        }
    }
}

TEST_CASE("shape classification is invariant under uniform rescaling") {
    Rng rng(13);
    const DomainScale scale;
    for (int trial = 0; trial < 30; ++trial) {
        auto fou = reference::random_fou(rng, scale);
        if ((rng.next() & 1u) != 0u) { // anchor as a left shoulder half the time
            fou.umf.a = fou.umf.b = fou.lmf.a = fou.lmf.b = scale.min;
        }
        const double k = rng.uniform(0.5, 4.0);
        auto scaled = fou;
        for (auto* mf : {&scaled.umf, &scaled.lmf}) {
            mf->a *= k;
            mf->b *= k;
            mf->c *= k;
            mf->d *= k;
        }
        const DomainScale big{scale.min * k, scale.max * k};
        CHECK(classify_shape(fou, scale) == classify_shape(scaled, big));
    }
}
