#pragma once

#include "molop/fou.hpp"
#include "molop/reduction.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace molop {

struct Word {
    std::string label;
    std::string long_name;
    IT2TrapezoidFOU fou;

    bool operator==(const Word&) const = default;
};

struct LinguisticVariable {
    std::string name;
    std::vector<Word> words; // order defines the ordinal rank (1-based)

    const Word* find(const std::string& label) const;
    /// 1-based ordinal of `label`; 0 if absent.
    int ordinal(const std::string& label) const;

    bool operator==(const LinguisticVariable&) const = default;
};

/// A validated vocabulary: named linguistic variables whose words carry FOU
/// models on a shared scale. Immutable after construction.
class Codebook {
public:
    Codebook(DomainScale scale, std::string provenance, std::vector<LinguisticVariable> variables,
             double grid_step = 0.01);

    const DomainScale& scale() const { return scale_; }
    const std::string& provenance() const { return provenance_; }
    const std::vector<LinguisticVariable>& variables() const { return variables_; }

    bool has_variable(const std::string& name) const;
    const LinguisticVariable& variable(const std::string& name) const; // throws Binding
    const Word& word(const std::string& variable, const std::string& label) const; // throws Binding

    DomainGrid grid(double step = 0.01) const { return DomainGrid(scale_, step); }

    static Codebook load(const std::filesystem::path& file, double grid_step = 0.01);
    void save(const std::filesystem::path& file) const;

    /// CSV with one word per row:
    ///   variable,label,long_name,umf a..d,lmf a..d,lmf height,
    ///   centroid left,centroid right,centroid mean
    /// The three centroid columns are cross-checks against the stored FOU
    /// (verified within `centroid_check_tol` when loading), never inputs.
    static Codebook import_csv(const std::filesystem::path& file, DomainScale scale,
                               std::string provenance, double grid_step = 0.01,
                               double centroid_check_tol = 0.05);
    void export_csv(const std::filesystem::path& file, double grid_step = 0.01) const;

private:
    DomainScale scale_;
    std::string provenance_;
    std::vector<LinguisticVariable> variables_;
};

/// End-point ranges a single expert assigns to a word on the scale.
struct EndpointSpec {
    double left_lo = 0.0;
    double left_hi = 0.0;
    double right_lo = 0.0;
    double right_hi = 0.0;
};

struct DataInterval {
    double l = 0.0;
    double r = 0.0;
};

/// Uniformly samples n left ends from [left_lo, left_hi] and n right ends
/// from [right_lo, right_hi], pairing them in draw order. Pairs with l > r
/// (possible only for overlapping spec ranges) are resampled, capped at
/// 1000 retries per pair.
std::vector<DataInterval> synthesize_person_intervals(const EndpointSpec& spec, int n,
                                                      std::uint64_t seed, const DomainScale& scale);

enum class EncoderMethod { IA, HMA };

std::string to_string(EncoderMethod m);
std::optional<EncoderMethod> encoder_from_string(const std::string& s);

/// Encodes surviving data intervals into an IT2 word model using the chosen
/// procedure. Requires at least 10 intervals to survive preprocessing.
IT2TrapezoidFOU encode_word(std::span<const DataInterval> intervals, EncoderMethod method,
                            const DomainScale& scale);

/// Word entry of an endpoint-spec document (Person-FOU input).
struct EndpointWord {
    std::string label;
    std::string long_name;
    EndpointSpec spec;
};

struct EndpointVariable {
    std::string name;
    std::vector<EndpointWord> words;
};

struct EndpointDocument {
    DomainScale scale;
    std::string provenance;
    std::vector<EndpointVariable> variables;

    static EndpointDocument load(const std::filesystem::path& file);
};

/// Full Person-FOU pipeline: synthesize intervals per word (seed advanced
/// word by word) and encode them, producing a ready codebook.
Codebook synthesize_codebook(const EndpointDocument& doc, EncoderMethod method, int n,
                             std::uint64_t seed, double grid_step = 0.01);

} // namespace molop
