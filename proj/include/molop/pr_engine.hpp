#pragma once

#include "molop/codebook.hpp"
#include "molop/fou.hpp"
#include "molop/reduction.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace molop {

/// One if-then rule: an antecedent word per input variable and a consequent
/// word per objective.
struct Rule {
    std::map<std::string, std::string> antecedents;
    std::map<std::string, std::string> consequents;

    bool operator==(const Rule&) const = default;
};

struct RuleBase {
    std::vector<std::string> antecedent_variables;
    std::vector<std::string> objectives;
    std::vector<Rule> rules;

    static RuleBase load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;

    /// Checks every referenced variable and label against the codebook.
    void bind_check(const Codebook& codebook) const;

    bool operator==(const RuleBase&) const = default;
};

/// One input word per antecedent variable.
struct InputWordVector {
    std::map<std::string, std::string> words;

    const std::string& label_for(const std::string& variable) const; // throws Binding
};

struct FiringVector {
    std::vector<double> levels; // one per rule, each in [0, 1]
};

struct TieInfo {
    std::string runner_up;
    double similarity = 0.0;
};

/// Decoded output for one objective: the aggregated FOU plus its numeric and
/// linguistic readings.
struct Recommendation {
    IT2TrapezoidFOU fou;
    CentroidInterval centroid;
    double numeric = 0.0;           // (c_l + c_r) / 2
    std::string linguistic;         // most similar codebook word
    double similarity_to_word = 0.0;
    std::optional<TieInfo> tie;
};

/// Firing level of each rule: the minimum over antecedent variables of the
/// Jaccard similarity between the input word and the rule's antecedent word.
/// Levels below `floor` are raised to it (0 disables the floor).
FiringVector fire_rules(const RuleBase& rulebase, const InputWordVector& input,
                        const Codebook& codebook, const DomainGrid& grid, double floor = 0.0);

/// Linguistic weighted average of the objective's consequent FOUs under the
/// firing levels. Rejects an all-zero firing vector.
IT2TrapezoidFOU aggregate_objective(const RuleBase& rulebase, const FiringVector& firing,
                                    const std::string& objective, const Codebook& codebook,
                                    HeightMode mode = HeightMode::WeightedBlend);

/// Average of the type-reduced centroid end points.
double decode_numeric(const IT2TrapezoidFOU& fou, const DomainGrid& grid);

/// Most similar word of the vocabulary (ties broken by lowest ordinal).
/// Returns the label, its similarity, and tie information when the best
/// similarity is shared.
std::tuple<std::string, double, std::optional<TieInfo>>
decode_linguistic(const IT2TrapezoidFOU& fou, const LinguisticVariable& variable,
                  const DomainGrid& grid);

/// Bundles centroid, numeric, and linguistic decoding of an aggregated FOU.
Recommendation recommend(const IT2TrapezoidFOU& fou, const LinguisticVariable& vocabulary,
                         const DomainGrid& grid);

} // namespace molop
