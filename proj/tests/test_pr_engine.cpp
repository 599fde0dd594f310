#include "molop/pr_engine.hpp"

#include "molop/errors.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace molop;

namespace {

InputWordVector welder(const char* wa, const char* bs, const char* we) {
    InputWordVector v;
    v.words = {{"WA", wa}, {"BS", bs}, {"WE", we}};
    return v;
}

} // namespace

TEST_CASE("rulebase fixture loads and binds against the codebook") {
    const auto rb = testfx::nominal_rules();
    CHECK(rb.rules.size() == 5);
    CHECK(rb.antecedent_variables == std::vector<std::string>{"WA", "BS", "WE"});
    CHECK(rb.objectives == std::vector<std::string>{"OT", "PP"});
    CHECK(rb.rules[0].antecedents.at("WA") == "P");
    CHECK(rb.rules[0].consequents.at("PP") == "VH");
    rb.bind_check(testfx::hma_codebook());
    rb.bind_check(testfx::ia_codebook());
}

TEST_CASE("binding check names the unresolved label") {
    auto rb = testfx::nominal_rules();
    rb.rules[2].antecedents["BS"] = "NOPE";
    CHECK_THROWS_WITH_AS(rb.bind_check(testfx::hma_codebook()), doctest::Contains("NOPE"), Error);
}

TEST_CASE("a codebook missing a referenced variable fails at bind time") {
    const auto full = testfx::hma_codebook();
    std::vector<LinguisticVariable> vars(full.variables().begin(), full.variables().end() - 1);
    const Codebook without_pp(full.scale(), "truncated", std::move(vars));
    const auto rb = testfx::nominal_rules(); // consequents reference PP
    CHECK_THROWS_WITH_AS(rb.bind_check(without_pp), doctest::Contains("PP"), Error);
}

TEST_CASE("an input identical to a rule's antecedents fires that rule fully") {
    const auto cb = testfx::hma_codebook();
    const auto rb = testfx::nominal_rules();
    const auto grid = cb.grid();
    const auto firing = fire_rules(rb, welder("M", "MS", "SM"), cb, grid);
    CHECK(firing.levels[2] == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < firing.levels.size(); ++i) {
        CHECK(firing.levels[i] >= 0.0);
        CHECK(firing.levels[i] <= 1.0);
    }
}

TEST_CASE("firing levels reproduce the reference vectors") {
    const auto cb = testfx::hma_codebook();
    const auto rb = testfx::hma_rules();
    const auto grid = cb.grid();

    const auto w1 = fire_rules(rb, welder("P", "VS", "SM"), cb, grid, 1e-3);
    const double expected1[] = {0.10, 0.39, 0.10, 0.001, 0.10};
    for (int i = 0; i < 5; ++i)
        CHECK(std::abs(w1.levels[i] - expected1[i]) <= 0.02);

    const auto w4 = fire_rules(rb, welder("SS", "L", "SM"), cb, grid, 1e-3);
    CHECK(std::abs(w4.levels[3] - 0.402) <= 0.02);
}

TEST_CASE("firing is invariant under rule reordering") {
    const auto cb = testfx::hma_codebook();
    auto rb = testfx::nominal_rules();
    const auto grid = cb.grid();
    const auto input = welder("G", "MS", "SVL");
    const auto before = fire_rules(rb, input, cb, grid);
    std::reverse(rb.rules.begin(), rb.rules.end());
    const auto after = fire_rules(rb, input, cb, grid);
    for (std::size_t i = 0; i < before.levels.size(); ++i)
        CHECK(before.levels[i] == doctest::Approx(after.levels[before.levels.size() - 1 - i]));
}

TEST_CASE("unresolved input label raises a binding error naming it") {
    const auto cb = testfx::hma_codebook();
    const auto rb = testfx::nominal_rules();
    CHECK_THROWS_WITH_AS((void)fire_rules(rb, welder("P", "XX", "SM"), cb, cb.grid()),
                         doctest::Contains("XX"), Error);
}

TEST_CASE("aggregation with a unit firing vector returns the rule consequent") {
    const auto cb = testfx::hma_codebook();
    const auto rb = testfx::nominal_rules();
    FiringVector f{{1, 0, 0, 0, 0}};
    const auto fou = aggregate_objective(rb, f, "OT", cb);
    CHECK(fou.umf == cb.word("OT", "VLI").fou.umf);
}

TEST_CASE("aggregation reproduces the reference welder-1 rows") {
    const auto cb = testfx::hma_codebook();
    const auto rb = testfx::hma_rules();
    FiringVector f{{0.10, 0.39, 0.1, 0.001, 0.10}};
    const auto ot = aggregate_objective(rb, f, "OT", cb);
    CHECK(std::abs(ot.umf.a - 1.12) <= 0.02);
    CHECK(std::abs(ot.umf.b - 1.60) <= 0.02);
    CHECK(std::abs(ot.umf.c - 5.32) <= 0.02);
    CHECK(std::abs(ot.umf.d - 6.85) <= 0.02);
    CHECK(std::abs(ot.lmf.a - 1.24) <= 0.02);
    CHECK(std::abs(ot.lmf.d - 6.40) <= 0.02);
    const auto pp = aggregate_objective(rb, f, "PP", cb);
    CHECK(std::abs(pp.umf.a - 3.15) <= 0.02);
    CHECK(std::abs(pp.umf.b - 4.67) <= 0.02);
    CHECK(std::abs(pp.umf.c - 8.41) <= 0.02);
    CHECK(std::abs(pp.umf.d - 8.94) <= 0.02);
}

TEST_CASE("aggregation is homogeneous of degree zero in the firing") {
    const auto cb = testfx::hma_codebook();
    const auto rb = testfx::nominal_rules();
    FiringVector f{{0.2, 0.4, 0.1, 0.05, 0.3}};
    FiringVector f3{{0.6, 1.2, 0.3, 0.15, 0.9}};
    const auto a = aggregate_objective(rb, f, "PP", cb);
    const auto b = aggregate_objective(rb, f3, "PP", cb);
    CHECK(a.umf.a == doctest::Approx(b.umf.a).epsilon(1e-12));
    CHECK(a.lmf.d == doctest::Approx(b.lmf.d).epsilon(1e-12));
    CHECK(a.lmf.h == doctest::Approx(b.lmf.h).epsilon(1e-12));
}

TEST_CASE("all-zero firing is reported as no fired rule") {
    const auto cb = testfx::hma_codebook();
    const auto rb = testfx::nominal_rules();
    FiringVector f{{0, 0, 0, 0, 0}};
    try {
        (void)aggregate_objective(rb, f, "OT", cb);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoFiredRule);
    }
}

TEST_CASE("numeric decoding averages the centroid end points") {
    const auto cb = testfx::hma_codebook();
    const auto grid = cb.grid();
    CHECK(std::abs(decode_numeric(cb.word("WA", "B").fou, grid) - 1.39) <= 0.03);

    const IT2TrapezoidFOU w1_ot{{1.12, 1.6, 5.32, 6.85, 1}, {1.24, 1.6, 5.32, 6.4, 1}};
    CHECK(std::abs(decode_numeric(w1_ot, grid) - 3.71) <= 0.05);

    const IT2TrapezoidFOU sym{{2, 3, 7, 8, 1}, {2, 3, 7, 8, 1}};
    CHECK(decode_numeric(sym, grid) == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("linguistic decoding retrieves every codebook word from itself") {
    const auto cb = testfx::hma_codebook();
    const auto grid = cb.grid();
    for (const auto& var : cb.variables()) {
        for (const auto& w : var.words) {
            const auto [label, sim, tie] = decode_linguistic(w.fou, var, grid);
            CHECK(label == w.label);
            CHECK(sim == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("linguistic decoding of reference aggregates") {
    const auto cb = testfx::hma_codebook();
    const auto grid = cb.grid();
    const IT2TrapezoidFOU w1_ot{{1.12, 1.6, 5.32, 6.85, 1}, {1.24, 1.6, 5.32, 6.4, 1}};
    CHECK(std::get<0>(decode_linguistic(w1_ot, cb.variable("OT"), grid)) == "SI");
    const IT2TrapezoidFOU overall_ct{{1.84, 2.76, 6.73, 7.87, 1}, {2.04, 2.76, 6.73, 7.55, 1}};
    CHECK(std::get<0>(decode_linguistic(overall_ct, cb.variable("OT"), grid)) == "MI");
}

TEST_CASE("linguistic decoding breaks exact ties by ordinal") {
    LinguisticVariable var;
    var.name = "X";
    const IT2TrapezoidFOU w{{1, 2, 3, 4, 1}, {1.5, 2.2, 2.8, 3.5, 0.9}};
    var.words = {{"first", "first", w}, {"second", "second", w}}; // identical models
    const auto [label, sim, tie] = decode_linguistic(w, var, DomainGrid{});
    CHECK(label == "first");
    REQUIRE(tie.has_value());
    CHECK(tie->runner_up == "second");
}

TEST_CASE("recommend bundles centroid, numeric, and linguistic parts") {
    const auto cb = testfx::hma_codebook();
    const auto rec = recommend(cb.word("OT", "MI").fou, cb.variable("OT"), cb.grid());
    CHECK(rec.linguistic == "MI");
    CHECK(rec.numeric == doctest::Approx(rec.centroid.mean()));
    CHECK(rec.numeric >= rec.fou.umf.a);
    CHECK(rec.numeric <= rec.fou.umf.d);
}
