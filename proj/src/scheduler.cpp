#include "molop/scheduler.hpp"

#include "molop/batch.hpp"
#include "molop/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>

namespace molop {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Sense s) { return s == Sense::Minimize ? "min" : "max"; }

SchedulingScenario SchedulingScenario::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw io_error("scenario not found: " + file.string());
    ordered_json j;
    try {
        in >> j;
        SchedulingScenario sc;
        for (const auto& jw : j.at("welders")) {
            WelderEntry w;
            w.id = jw.at("id").get<int>();
            for (const auto& [k, v] : jw.items()) {
                if (k == "id")
                    continue;
                if (k == "weight") {
                    w.weight = v.get<double>();
                    continue;
                }
                w.words.words[k] = v.get<std::string>();
            }
            if (w.weight < 0.0)
                throw schema_error("scenario " + file.string() + ": welder " + std::to_string(w.id) +
                                   " has negative weight");
            sc.welders.push_back(std::move(w));
        }
        if (sc.welders.empty())
            throw schema_error("scenario " + file.string() + ": welder list is empty");
        for (const auto& jo : j.at("objectives")) {
            ObjectiveSpec o;
            o.name = jo.at("name").get<std::string>();
            const std::string sense = jo.at("sense").get<std::string>();
            if (sense == "min")
                o.sense = Sense::Minimize;
            else if (sense == "max")
                o.sense = Sense::Maximize;
            else
                throw schema_error("scenario " + file.string() + ": objective '" + o.name +
                                   "' has unknown sense '" + sense + "'");
            sc.objectives.push_back(std::move(o));
        }
        if (j.contains("two_tuple_pairing"))
            sc.two_tuple_pairing = j.at("two_tuple_pairing").get<std::vector<int>>();
        if (j.contains("term_sets"))
            for (const auto& [var, labels] : j.at("term_sets").items())
                sc.term_set_overrides[var] = labels.get<std::vector<std::string>>();
        return sc;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error("scenario " + file.string() + ": " + e.what());
    }
}

void SchedulingScenario::save(const std::filesystem::path& file) const {
    ordered_json j;
    j["welders"] = ordered_json::array();
    for (const auto& w : welders) {
        ordered_json jw;
        jw["id"] = w.id;
        for (const auto& [var, label] : w.words.words)
            jw[var] = label;
        jw["weight"] = w.weight;
        j["welders"].push_back(std::move(jw));
    }
    j["objectives"] = ordered_json::array();
    for (const auto& o : objectives)
        j["objectives"].push_back({{"name", o.name}, {"sense", to_string(o.sense)}});
    j["two_tuple_pairing"] = two_tuple_pairing;
    if (!term_set_overrides.empty()) {
        j["term_sets"] = ordered_json::object();
        for (const auto& [var, labels] : term_set_overrides)
            j["term_sets"][var] = labels;
    }
    std::ofstream out(file);
    if (!out)
        throw io_error("cannot write scenario: " + file.string());
    out << j.dump(2) << "\n";
}

namespace {

std::string welder_context(const WelderEntry& entry) {
    std::string ctx = "welder " + std::to_string(entry.id) + " (";
    bool first = true;
    for (const auto& [var, label] : entry.words.words) {
        if (!first)
            ctx += ", ";
        ctx += var + "=" + label;
        first = false;
    }
    return ctx + ")";
}

// firing plus per-objective recommendations, with welder context on failures
std::pair<FiringVector, std::map<std::string, Recommendation>>
infer_welder(const WelderEntry& entry, const RuleBase& rulebase, const Codebook& codebook,
             const DomainGrid& grid, const EngineConfig& config) {
    try {
        FiringVector firing = fire_rules(rulebase, entry.words, codebook, grid, config.firing_floor);
        std::map<std::string, Recommendation> recs;
        for (const auto& objective : rulebase.objectives) {
            const IT2TrapezoidFOU fou =
                aggregate_objective(rulebase, firing, objective, codebook, config.height_mode);
            recs[objective] = recommend(fou, codebook.variable(objective), grid);
        }
        return {std::move(firing), std::move(recs)};
    } catch (const Error& e) {
        throw Error(e.kind(), welder_context(entry) + ": " + e.what());
    }
}

} // namespace

std::map<std::string, Recommendation> evaluate_welder(const WelderEntry& entry,
                                                      const RuleBase& rulebase,
                                                      const Codebook& codebook,
                                                      const EngineConfig& config) {
    return infer_welder(entry, rulebase, codebook, codebook.grid(config.grid_step), config).second;
}

Recommendation aggregate_overall(std::span<const IT2TrapezoidFOU> fous,
                                 std::span<const double> weights,
                                 const LinguisticVariable& vocabulary, const DomainGrid& grid,
                                 HeightMode mode) {
    const IT2TrapezoidFOU fou = lwa_crisp(fous, weights, mode);
    return recommend(fou, vocabulary, grid);
}

Recommendation aggregate_overall(std::span<const IT2TrapezoidFOU> fous,
                                 std::span<const WeightInterval> weights,
                                 const LinguisticVariable& vocabulary, const DomainGrid& grid,
                                 int alpha_levels) {
    const IT2TrapezoidFOU fou = lwa_alpha(fous, weights, alpha_levels);
    return recommend(fou, vocabulary, grid);
}

RecommendationReport solve_scenario(const SchedulingScenario& scenario, const RuleBase& rulebase,
                                    const Codebook& codebook, const EngineConfig& config) {
    if (scenario.welders.empty())
        throw invalid_argument("solve_scenario: scenario has no welders");
    const DomainGrid grid = codebook.grid(config.grid_step);
    rulebase.bind_check(codebook);

    RecommendationReport report;
    report.provenance.codebook = codebook.provenance();
    report.provenance.height_mode = config.height_mode == HeightMode::WeightedBlend ? "blend" : "min";
    report.provenance.grid_step = config.grid_step;
    report.provenance.alpha_levels = config.alpha_levels;
    report.provenance.firing_floor = config.firing_floor;
    report.provenance.seed = config.seed;
    for (Method m : config.methods)
        report.provenance.methods.push_back(m == Method::PR ? "pr" : "two-tuple");
    std::sort(report.provenance.methods.begin(), report.provenance.methods.end());
    for (const auto& o : scenario.objectives)
        report.objectives.push_back(o.name);

    report.rows.resize(scenario.welders.size());
    for (std::size_t i = 0; i < scenario.welders.size(); ++i)
        report.rows[i].id = scenario.welders[i].id;

    const bool run_pr = config.methods.contains(Method::PR);
    const bool run_tt = config.methods.contains(Method::TwoTuple);

    if (run_pr) {
        // Per-welder inference is embarrassingly parallel; results land in
        // per-welder slots so the outcome is independent of thread count.
        batch::for_each_index(
            scenario.welders.size(), config.exec, [&](std::size_t i) {
                auto [firing, recs] = infer_welder(scenario.welders[i], rulebase, codebook, grid, config);
                report.rows[i].firing = std::move(firing);
                report.rows[i].pr = std::move(recs);
            });

        std::vector<double> weights;
        weights.reserve(scenario.welders.size());
        for (const auto& w : scenario.welders)
            weights.push_back(w.weight);
        for (const auto& objective : scenario.objectives) {
            std::vector<IT2TrapezoidFOU> fous;
            fous.reserve(report.rows.size());
            for (const auto& row : report.rows)
                fous.push_back(row.pr.at(objective.name).fou);
            report.overall_pr[objective.name] = aggregate_overall(
                fous, weights, codebook.variable(objective.name), grid, config.height_mode);
        }
    }

    if (run_tt) {
        auto term_sets = term_sets_from_codebook(codebook);
        for (const auto& [var, labels] : scenario.term_set_overrides) {
            const auto& vocab = codebook.variable(var);
            std::set<std::string> seen;
            for (const auto& label : labels) {
                if (vocab.find(label) == nullptr)
                    throw binding_error("term set override for '" + var +
                                        "' names unknown label '" + label + "'");
                if (!seen.insert(label).second)
                    throw schema_error("term set override for '" + var + "' repeats label '" +
                                       label + "'");
            }
            term_sets[var].labels = labels;
        }
        std::vector<int> pairing = scenario.two_tuple_pairing;
        if (pairing.empty()) {
            pairing.resize(scenario.welders.size());
            for (std::size_t i = 0; i < pairing.size(); ++i)
                pairing[i] = static_cast<int>(i) + 1;
        }
        if (pairing.size() != scenario.welders.size())
            throw schema_error("two_tuple_pairing length does not match the welder count");

        std::vector<long> firings(scenario.welders.size());
        for (std::size_t i = 0; i < scenario.welders.size(); ++i) {
            firings[i] = firing_index_product(scenario.welders[i].words, term_sets);
            report.rows[i].index_firing = firings[i];
        }
        for (const auto& objective : scenario.objectives) {
            const TermSet& ts = term_sets.at(objective.name);
            std::vector<int> consequent_indices(scenario.welders.size());
            for (std::size_t i = 0; i < scenario.welders.size(); ++i) {
                const int rule_index = pairing[i];
                if (rule_index < 1 || rule_index > static_cast<int>(rulebase.rules.size()))
                    throw schema_error("two_tuple_pairing: rule index " + std::to_string(rule_index) +
                                       " for welder " + std::to_string(scenario.welders[i].id) +
                                       " is out of range");
                const auto& label =
                    rulebase.rules[static_cast<std::size_t>(rule_index) - 1].consequents.at(objective.name);
                consequent_indices[i] = ts.index_of(label);
                const double beta = static_cast<double>(consequent_indices[i]);
                report.rows[i].two_tuple[objective.name] = TwoTupleCell{beta, to_two_tuple(beta, ts)};
            }
            const double beta = aggregate_beta(firings, consequent_indices);
            report.overall_two_tuple[objective.name] = TwoTupleCell{beta, to_two_tuple(beta, ts)};
        }
    }
    return report;
}

} // namespace molop
