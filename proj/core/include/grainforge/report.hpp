#pragma once

#include <optional>
#include <string>

#include "grainforge/analysis.hpp"
#include "grainforge/engine.hpp"
#include "grainforge/funlib.hpp"

namespace grainforge {

// Measured properties of a function bundle, computed from its truth table
// and circuit (as opposed to the transcribed claims it carries).
struct ComputedProps {
    std::int64_t nl = 0;
    int degree = 0;
    int resiliency = -1;
    Dyadic lb;
    GateCount gates;
    std::optional<int> ai;  // absent when the AI run was skipped
    bool ai_exact = false;
};

// with_ai additionally runs the annihilator search (cost grows quickly with
// arity; callers skip it for the largest functions).
ComputedProps compute_props(const FunctionBundle& f, bool with_ai);

std::string format_gates(const GateCount& g);  // e.g. "1N+6X+10A"

// Stable line-oriented reports: one "key: value" per line, golden-file safe.
std::string render_function_report(const FunctionBundle& f, const ComputedProps& c);
std::string render_validation_report(const GrainParams& p, const ValidationReport& r);

struct AnalysisResult {
    IndexSets sets;
    bool condition_holds = false;
    std::optional<Dyadic> exact;        // model enumeration
    std::optional<Dyadic> convolution;  // spectral route
    std::optional<double> empirical;
    std::optional<std::uint64_t> samples;
};

std::string render_analysis_report(const GrainParams& p, const ApproxSpec& spec,
                                   const AnalysisResult& res);

}  // namespace grainforge
