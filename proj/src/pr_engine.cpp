#include "molop/pr_engine.hpp"

#include "molop/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace molop {

using ordered_json = nlohmann::ordered_json;

RuleBase RuleBase::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw io_error("rulebase not found: " + file.string());
    ordered_json j;
    try {
        in >> j;
        RuleBase rb;
        rb.antecedent_variables = j.at("antecedents").get<std::vector<std::string>>();
        rb.objectives = j.at("objectives").get<std::vector<std::string>>();
        for (const auto& jr : j.at("rules")) {
            Rule rule;
            for (const auto& [k, v] : jr.at("if").items())
                rule.antecedents[k] = v.get<std::string>();
            for (const auto& [k, v] : jr.at("then").items())
                rule.consequents[k] = v.get<std::string>();
            rb.rules.push_back(std::move(rule));
        }
        if (rb.rules.empty())
            throw schema_error("rulebase " + file.string() + ": needs at least one rule");
        for (std::size_t i = 0; i < rb.rules.size(); ++i) {
            for (const auto& v : rb.antecedent_variables)
                if (!rb.rules[i].antecedents.contains(v))
                    throw schema_error("rulebase " + file.string() + ": rule " + std::to_string(i + 1) +
                                       " misses antecedent variable '" + v + "'");
            for (const auto& o : rb.objectives)
                if (!rb.rules[i].consequents.contains(o))
                    throw schema_error("rulebase " + file.string() + ": rule " + std::to_string(i + 1) +
                                       " misses objective '" + o + "'");
        }
        return rb;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error("rulebase " + file.string() + ": " + e.what());
    }
}

void RuleBase::save(const std::filesystem::path& file) const {
    ordered_json j;
    j["antecedents"] = antecedent_variables;
    j["objectives"] = objectives;
    j["rules"] = ordered_json::array();
    for (const auto& rule : rules) {
        ordered_json jr;
        jr["if"] = ordered_json::object();
        for (const auto& v : antecedent_variables)
            jr["if"][v] = rule.antecedents.at(v);
        jr["then"] = ordered_json::object();
        for (const auto& o : objectives)
            jr["then"][o] = rule.consequents.at(o);
        j["rules"].push_back(std::move(jr));
    }
    std::ofstream out(file);
    if (!out)
        throw io_error("cannot write rulebase: " + file.string());
    out << j.dump(2) << "\n";
}

void RuleBase::bind_check(const Codebook& codebook) const {
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (const auto& [var, label] : rules[i].antecedents)
            codebook.word(var, label); // throws Binding when unresolved
        for (const auto& [obj, label] : rules[i].consequents)
            codebook.word(obj, label);
    }
}

const std::string& InputWordVector::label_for(const std::string& variable) const {
    auto it = words.find(variable);
    if (it == words.end())
        throw binding_error("input word vector has no word for variable '" + variable + "'");
    return it->second;
}

FiringVector fire_rules(const RuleBase& rulebase, const InputWordVector& input,
                        const Codebook& codebook, const DomainGrid& grid, double floor) {
    FiringVector out;
    out.levels.reserve(rulebase.rules.size());
    for (const auto& rule : rulebase.rules) {
        double level = 1.0;
        for (const auto& var : rulebase.antecedent_variables) {
            const Word& in_word = codebook.word(var, input.label_for(var));
            const Word& ant_word = codebook.word(var, rule.antecedents.at(var));
            level = std::min(level, jaccard_similarity(in_word.fou, ant_word.fou, grid));
        }
        out.levels.push_back(std::max(level, floor));
    }
    return out;
}

IT2TrapezoidFOU aggregate_objective(const RuleBase& rulebase, const FiringVector& firing,
                                    const std::string& objective, const Codebook& codebook,
                                    HeightMode mode) {
    if (firing.levels.size() != rulebase.rules.size())
        throw invalid_argument("aggregate_objective: firing vector length does not match rule count");
    std::vector<IT2TrapezoidFOU> consequents;
    consequents.reserve(rulebase.rules.size());
    for (const auto& rule : rulebase.rules) {
        auto it = rule.consequents.find(objective);
        if (it == rule.consequents.end())
            throw binding_error("rulebase has no consequent for objective '" + objective + "'");
        consequents.push_back(codebook.word(objective, it->second).fou);
    }
    double total = 0.0;
    for (double f : firing.levels)
        total += f;
    if (total <= 0.0)
        throw no_fired_rule("aggregate_objective('" + objective + "'): no rule fired");
    return lwa_crisp(consequents, firing.levels, mode);
}

double decode_numeric(const IT2TrapezoidFOU& fou, const DomainGrid& grid) {
    return centroid_ekm(fou, grid).mean();
}

std::tuple<std::string, double, std::optional<TieInfo>>
decode_linguistic(const IT2TrapezoidFOU& fou, const LinguisticVariable& variable,
                  const DomainGrid& grid) {
    if (variable.words.empty())
        throw invalid_argument("decode_linguistic: vocabulary '" + variable.name + "' is empty");
    std::string best;
    double best_sim = -1.0;
    std::optional<TieInfo> tie;
    for (const auto& word : variable.words) {
        const double sim = jaccard_similarity(fou, word.fou, grid);
        if (sim > best_sim + 1e-12) {
            best = word.label;
            best_sim = sim;
            tie.reset();
        } else if (std::abs(sim - best_sim) <= 1e-12 && !best.empty()) {
            // keep the lower ordinal, remember the runner-up
            tie = TieInfo{word.label, sim};
        }
    }
    return {best, best_sim, tie};
}

Recommendation recommend(const IT2TrapezoidFOU& fou, const LinguisticVariable& vocabulary,
                         const DomainGrid& grid) {
    Recommendation rec;
    rec.fou = fou;
    rec.centroid = centroid_ekm(fou, grid);
    rec.numeric = rec.centroid.mean();
    auto [label, sim, tie] = decode_linguistic(fou, vocabulary, grid);
    rec.linguistic = label;
    rec.similarity_to_word = sim;
    rec.tie = tie;
    return rec;
}

} // namespace molop
