#pragma once

#include "molop/codebook.hpp"
#include "molop/pr_engine.hpp"
#include "molop/scheduler.hpp"

#include <filesystem>
#include <string>

namespace molop::testfx {

inline std::filesystem::path dir() { return std::filesystem::path(MOLOP_FIXTURES_DIR); }

inline Codebook hma_codebook() { return Codebook::load(dir() / "codebook_hma.json"); }
inline Codebook ia_codebook() { return Codebook::load(dir() / "codebook_ia.json"); }
inline RuleBase nominal_rules() { return RuleBase::load(dir() / "rulebase.json"); }
inline RuleBase hma_rules() { return RuleBase::load(dir() / "rulebase_hma_results.json"); }
inline RuleBase ia_rules() { return RuleBase::load(dir() / "rulebase_ia_results.json"); }
inline SchedulingScenario scenario() {
    return SchedulingScenario::load(dir() / "welding_scenario.json");
}

} // namespace molop::testfx
