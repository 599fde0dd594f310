#pragma once

#include "molop/codebook.hpp"
#include "molop/pr_engine.hpp"

#include <map>
#include <string>
#include <vector>

namespace molop {

/// Ordered labels s_1..s_g of one linguistic variable; indices are 1-based.
struct TermSet {
    std::string variable;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(labels.size()); }
    /// 1-based ordinal of `label`; throws Binding when absent.
    int index_of(const std::string& label) const;
    const std::string& label_at(int index) const; // 1-based
};

/// A term with its symbolic translation alpha in [-0.5, 0.5).
struct TwoTuple {
    std::string label;
    double alpha = 0.0;
};

/// Product over antecedent variables of the 1-based ordinal of the input
/// word in its term set.
long firing_index_product(const InputWordVector& input,
                          const std::map<std::string, TermSet>& term_sets);

/// Firing-weighted mean of 1-based consequent indices; lands in [1, g].
double aggregate_beta(std::span<const long> firings, std::span<const int> consequent_indices);

/// Symbolic translation: label at round(beta) with alpha = beta - round(beta).
/// Ties at .5 round half-up so alpha stays in [-0.5, 0.5).
TwoTuple to_two_tuple(double beta, const TermSet& term_set);

/// Inverse translation: recovers beta exactly.
double two_tuple_value(const TwoTuple& t, const TermSet& term_set);

/// Term sets induced by codebook word order, one per variable.
std::map<std::string, TermSet> term_sets_from_codebook(const Codebook& codebook);

} // namespace molop
