#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tutgen/textgen.hpp"

namespace tutgen {

struct PipelineOptions {
    const Tables* tables = nullptr; // defaults to Tables::builtin()
    std::uint64_t seed = 0;
    bool include_optional = false;
    std::string game_name;
};

/// Everything the toolchain derives from one game description.
struct PipelineResult {
    GameDescription game;
    std::vector<Diagnostic> diagnostics;
    MechanicGraph graph;       // classified, with display labels
    CriticalPathSet paths;
    TutorialDocument document;
};

/// Full run: tokenize, parse, validate, discover, build/classify, generate.
/// Throws Error on parse failures and on NoWinPath; Error-severity
/// diagnostics abort before discovery with Error(NoWinPath-like) semantics
/// handled by the caller inspecting diagnostics.
PipelineResult run_pipeline(const std::string& source, const PipelineOptions& options = {});

/// Parse + validate only.
std::vector<Diagnostic> validate_source(const std::string& source,
                                        const PipelineOptions& options = {});

} // namespace tutgen
