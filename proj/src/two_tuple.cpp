#include "molop/two_tuple.hpp"

#include "molop/errors.hpp"

#include <cmath>
#include <sstream>

namespace molop {

int TermSet::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return static_cast<int>(i) + 1;
    throw binding_error("term set '" + variable + "': unknown label '" + label + "'");
}

const std::string& TermSet::label_at(int index) const {
    if (index < 1 || index > size())
        throw invalid_argument("term set '" + variable + "': index " + std::to_string(index) +
                               " outside [1, " + std::to_string(size()) + "]");
    return labels[static_cast<std::size_t>(index) - 1];
}

long firing_index_product(const InputWordVector& input,
                          const std::map<std::string, TermSet>& term_sets) {
    long product = 1;
    for (const auto& [variable, label] : input.words) {
        auto it = term_sets.find(variable);
        if (it == term_sets.end())
            throw binding_error("no term set for variable '" + variable + "'");
        product *= it->second.index_of(label);
    }
    return product;
}

double aggregate_beta(std::span<const long> firings, std::span<const int> consequent_indices) {
    if (firings.empty() || firings.size() != consequent_indices.size())
        throw invalid_argument("aggregate_beta: firings and indices must be nonempty and equal length");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < firings.size(); ++i) {
        if (firings[i] < 0)
            throw invalid_argument("aggregate_beta: firings must be nonnegative");
        num += static_cast<double>(firings[i]) * consequent_indices[i];
        den += static_cast<double>(firings[i]);
    }
    if (den <= 0.0)
        throw no_fired_rule("aggregate_beta: firing sum is zero");
    return num / den;
}

TwoTuple to_two_tuple(double beta, const TermSet& term_set) {
    if (beta < 1.0 || beta > static_cast<double>(term_set.size())) {
        std::ostringstream os;
        os << "to_two_tuple: beta " << beta << " outside [1, " << term_set.size() << "]";
        throw invalid_argument(os.str());
    }
    int r = static_cast<int>(std::floor(beta + 0.5)); // half-up keeps alpha in [-0.5, 0.5)
    if (r > term_set.size())
        r = term_set.size();
    return TwoTuple{term_set.label_at(r), beta - static_cast<double>(r)};
}

double two_tuple_value(const TwoTuple& t, const TermSet& term_set) {
    return static_cast<double>(term_set.index_of(t.label)) + t.alpha;
}

std::map<std::string, TermSet> term_sets_from_codebook(const Codebook& codebook) {
    std::map<std::string, TermSet> out;
    for (const auto& var : codebook.variables()) {
        TermSet ts;
        ts.variable = var.name;
        for (const auto& w : var.words)
            ts.labels.push_back(w.label);
        out[var.name] = std::move(ts);
    }
    return out;
}

} // namespace molop
