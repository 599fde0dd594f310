// Command-line front end: codebook validation and synthesis, the inference
// pipeline, and report comparison.
//
// Exit codes: 0 success, 2 input error (missing file, schema, binding),
// 3 computation error (degenerate input, no fired rule). `compare` exits 1
// when the reports differ.

#include "molop/codebook.hpp"
#include "molop/errors.hpp"
#include "molop/pr_engine.hpp"
#include "molop/report.hpp"
#include "molop/scheduler.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiff = 1;
constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

int exit_code_for(const molop::Error& e) { return e.is_input_error() ? kExitInput : kExitCompute; }

struct InferOptions {
    std::string codebook;
    std::string rules;
    std::string scenario;
    std::string method = "both";
    std::string height_mode = "blend";
    int alpha_levels = 101;
    double grid_step = 0.01;
    double firing_floor = 1e-3;
    std::uint64_t seed = 0;
    std::string format = "md";
    std::string out;
};

int run_infer(const InferOptions& opt) {
    molop::EngineConfig config;
    config.grid_step = opt.grid_step;
    config.alpha_levels = opt.alpha_levels;
    config.firing_floor = opt.firing_floor;
    config.seed = opt.seed;
    if (opt.height_mode == "blend")
        config.height_mode = molop::HeightMode::WeightedBlend;
    else if (opt.height_mode == "min")
        config.height_mode = molop::HeightMode::Min;
    else {
        std::cerr << "error: unknown height mode '" << opt.height_mode << "'\n";
        return kExitInput;
    }
    if (opt.method == "pr")
        config.methods = {molop::Method::PR};
    else if (opt.method == "two-tuple")
        config.methods = {molop::Method::TwoTuple};
    else if (opt.method == "both")
        config.methods = {molop::Method::PR, molop::Method::TwoTuple};
    else {
        std::cerr << "error: unknown method '" << opt.method << "'\n";
        return kExitInput;
    }
    const auto format = molop::report_format_from_string(opt.format);
    if (!format) {
        std::cerr << "error: unknown format '" << opt.format << "'\n";
        return kExitInput;
    }

    const auto codebook = molop::Codebook::load(opt.codebook, config.grid_step);
    const auto rules = molop::RuleBase::load(opt.rules);
    const auto scenario = molop::SchedulingScenario::load(opt.scenario);
    const auto report = molop::solve_scenario(scenario, rules, codebook, config);
    if (opt.out.empty())
        std::cout << molop::render_report(report, *format);
    else
        molop::write_report(report, *format, opt.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linguistic multi-objective scheduling recommendations over IT2 fuzzy word models"};
    app.require_subcommand(1);

    auto* codebook_cmd = app.add_subcommand("codebook", "codebook utilities");
    codebook_cmd->require_subcommand(1);

    std::string cb_path;
    double cb_grid_step = 0.01;
    auto* validate_cmd = codebook_cmd->add_subcommand("validate", "validate a codebook file");
    validate_cmd->add_option("--codebook", cb_path, "codebook JSON file")->required();
    validate_cmd->add_option("--grid-step", cb_grid_step, "containment check grid step");

    std::string ep_path, synth_method = "ia", synth_out;
    int synth_n = 50;
    std::uint64_t synth_seed = 0;
    double synth_grid_step = 0.01;
    auto* synth_cmd =
        codebook_cmd->add_subcommand("synthesize", "build a codebook from end-point ranges");
    synth_cmd->add_option("--endpoints", ep_path, "end-point ranges JSON file")->required();
    synth_cmd->add_option("--method", synth_method, "encoder: ia or hma");
    synth_cmd->add_option("--seed", synth_seed, "sampling seed")->required();
    synth_cmd->add_option("--n", synth_n, "intervals per word (default 50)");
    synth_cmd->add_option("--grid-step", synth_grid_step, "validation grid step");
    synth_cmd->add_option("--out", synth_out, "output codebook path")->required();

    InferOptions infer;
    auto* infer_cmd = app.add_subcommand("infer", "run the recommendation pipeline");
    infer_cmd->add_option("--codebook", infer.codebook, "codebook JSON file")->required();
    infer_cmd->add_option("--rules", infer.rules, "rulebase JSON file")->required();
    infer_cmd->add_option("--scenario", infer.scenario, "scenario JSON file")->required();
    infer_cmd->add_option("--method", infer.method, "pr, two-tuple, or both");
    infer_cmd->add_option("--height-mode", infer.height_mode, "blend or min");
    infer_cmd->add_option("--alpha-levels", infer.alpha_levels, "alpha levels for interval weights")
        ->check(CLI::Range(2, 100000));
    infer_cmd->add_option("--grid-step", infer.grid_step, "domain grid step")
        ->check(CLI::PositiveNumber);
    infer_cmd->add_option("--firing-floor", infer.firing_floor, "minimum firing level (0 disables)");
    infer_cmd->add_option("--seed", infer.seed, "seed recorded in the report provenance");
    infer_cmd->add_option("--format", infer.format, "md, csv, or structured");
    infer_cmd->add_option("--out", infer.out, "output path (stdout when omitted)");

    std::string cmp_a, cmp_b;
    double cmp_tol = 1e-9;
    auto* compare_cmd = app.add_subcommand("compare", "diff two CSV reports cell-wise");
    compare_cmd->add_option("first", cmp_a, "first report CSV")->required();
    compare_cmd->add_option("second", cmp_b, "second report CSV")->required();
    compare_cmd->add_option("--tol", cmp_tol, "numeric tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) {
            const auto cb = molop::Codebook::load(cb_path, cb_grid_step);
            std::size_t words = 0;
            for (const auto& v : cb.variables())
                words += v.words.size();
            std::cout << "OK: " << cb.variables().size() << " variables, " << words
                      << " words, scale [" << cb.scale().min << ", " << cb.scale().max << "]\n";
            return kExitOk;
        }
        if (synth_cmd->parsed()) {
            const auto method = molop::encoder_from_string(synth_method);
            if (!method) {
                std::cerr << "error: unknown encoder '" << synth_method << "'\n";
                return kExitInput;
            }
            const auto doc = molop::EndpointDocument::load(ep_path);
            const auto cb =
                molop::synthesize_codebook(doc, *method, synth_n, synth_seed, synth_grid_step);
            cb.save(synth_out);
            std::cout << "wrote " << synth_out << " (" << cb.provenance() << ")\n";
            return kExitOk;
        }
        if (infer_cmd->parsed())
            return run_infer(infer);
        if (compare_cmd->parsed()) {
            const auto a = molop::parse_csv_report(cmp_a);
            const auto b = molop::parse_csv_report(cmp_b);
            const auto diffs = molop::compare_reports(a, b, cmp_tol);
            for (const auto& d : diffs)
                std::cout << d << "\n";
            if (diffs.empty()) {
                std::cout << "reports match (" << a.size() << " cells, tol " << cmp_tol << ")\n";
                return kExitOk;
            }
            return kExitDiff;
        }
    } catch (const molop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitOk;
}
