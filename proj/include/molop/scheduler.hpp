#pragma once

#include "molop/codebook.hpp"
#include "molop/pr_engine.hpp"
#include "molop/two_tuple.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace molop {

enum class Sense { Minimize, Maximize };

std::string to_string(Sense s);

struct ObjectiveSpec {
    std::string name;
    Sense sense = Sense::Minimize; // report metadata; does not alter computation
};

struct WelderEntry {
    int id = 0;
    InputWordVector words;
    double weight = 1.0;
};

struct SchedulingScenario {
    std::vector<WelderEntry> welders;
    std::vector<ObjectiveSpec> objectives;
    std::vector<int> two_tuple_pairing; // 1-based rule index per welder
    // explicit term orderings; variables not listed fall back to codebook order
    std::map<std::string, std::vector<std::string>> term_set_overrides;

    static SchedulingScenario load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;
};

enum class Method { PR, TwoTuple };

enum class Exec { Serial, Parallel };

/// Knobs of the inference pipeline. Defaults reproduce the shipped golden
/// reports: 0.01 grid, blended LMF heights, and a 0.001 firing floor.
struct EngineConfig {
    double grid_step = 0.01;
    HeightMode height_mode = HeightMode::WeightedBlend;
    int alpha_levels = 101;
    double firing_floor = 1e-3;
    std::uint64_t seed = 0; // carried into report provenance
    Exec exec = Exec::Parallel;
    std::set<Method> methods = {Method::PR, Method::TwoTuple};
};

struct TwoTupleCell {
    double beta = 0.0;
    TwoTuple tuple;
};

struct WelderRow {
    int id = 0;
    FiringVector firing;                       // PR firing levels (when PR ran)
    long index_firing = 0;                     // 2-tuple index product (when 2-tuple ran)
    std::map<std::string, Recommendation> pr;  // objective -> recommendation
    std::map<std::string, TwoTupleCell> two_tuple;
};

struct ReportProvenance {
    std::string codebook;
    std::string height_mode;
    double grid_step = 0.01;
    int alpha_levels = 101;
    double firing_floor = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> methods;
};

struct RecommendationReport {
    ReportProvenance provenance;
    std::vector<std::string> objectives;
    std::vector<WelderRow> rows;
    std::map<std::string, Recommendation> overall_pr;
    std::map<std::string, TwoTupleCell> overall_two_tuple;
};

/// Fires the rulebase once for the welder and decodes every objective.
std::map<std::string, Recommendation> evaluate_welder(const WelderEntry& entry,
                                                      const RuleBase& rulebase,
                                                      const Codebook& codebook,
                                                      const EngineConfig& config);

/// Weighted average of per-welder FOUs followed by decoding against the
/// objective vocabulary.
Recommendation aggregate_overall(std::span<const IT2TrapezoidFOU> fous,
                                 std::span<const double> weights,
                                 const LinguisticVariable& vocabulary, const DomainGrid& grid,
                                 HeightMode mode);

/// Interval-weight variant, routed through the alpha-cut weighted average.
Recommendation aggregate_overall(std::span<const IT2TrapezoidFOU> fous,
                                 std::span<const WeightInterval> weights,
                                 const LinguisticVariable& vocabulary, const DomainGrid& grid,
                                 int alpha_levels = 101);

/// Runs the requested methods over the scenario and assembles the report.
/// Per-welder inference is independent and may run in parallel.
RecommendationReport solve_scenario(const SchedulingScenario& scenario, const RuleBase& rulebase,
                                    const Codebook& codebook, const EngineConfig& config);

} // namespace molop
