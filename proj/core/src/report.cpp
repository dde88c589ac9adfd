#include "grainforge/report.hpp"

#include <sstream>

#include "grainforge/hexfmt.hpp"

namespace grainforge {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

std::string ai_claim_string(const ClaimedProps& c) {
    switch (c.ai_kind) {
        case AiClaimKind::Exact: return std::to_string(c.ai);
        case AiClaimKind::LowerBound: return ">= " + std::to_string(c.ai);
        case AiClaimKind::UpperBound: return "<= " + std::to_string(c.ai);
        default: return "";
    }
}

}  // namespace

ComputedProps compute_props(const FunctionBundle& f, bool with_ai) {
    ComputedProps c;
    TruthTable tt = anf_to_tt(f.anf);
    SpectralProfile sp = spectral_profile(tt);
    c.nl = sp.nl;
    c.lb = sp.lb;
    c.resiliency = sp.resiliency;
    c.degree = degree(f.anf);
    c.gates = gate_count(f.circuit);
    if (with_ai) {
        AiResult ai = algebraic_immunity(tt);
        c.ai = ai.ai;
        c.ai_exact = ai.exact;
    }
    return c;
}

std::string format_gates(const GateCount& g) {
    return std::to_string(g.nots) + "N+" + std::to_string(g.xors) + "X+" +
           std::to_string(g.ands) + "A";
}

std::string render_function_report(const FunctionBundle& f, const ComputedProps& c) {
    std::ostringstream os;
    os << "name: " << f.name << "\n";
    os << "arity: " << f.n << "\n";
    os << "nl: " << c.nl << "\n";
    os << "degree: " << c.degree << "\n";
    os << "resiliency: " << c.resiliency << "\n";
    os << "lb: " << c.lb.to_string() << "\n";
    os << "lb-log2: " << c.lb.to_log2_string() << "\n";
    if (c.ai) os << "ai: " << *c.ai << (c.ai_exact ? "" : " (lower bound)") << "\n";
    os << "gates: " << format_gates(c.gates) << "\n";
    const ClaimedProps& cl = f.claimed;
    if (cl.nl) os << "recorded-nl: " << *cl.nl << "\n";
    if (cl.degree) os << "recorded-degree: " << *cl.degree << "\n";
    if (cl.resiliency) os << "recorded-resiliency: " << *cl.resiliency << "\n";
    if (cl.lb) os << "recorded-lb: " << cl.lb->to_string() << "\n";
    if (cl.ai_kind != AiClaimKind::None) os << "recorded-ai: " << ai_claim_string(cl) << "\n";
    if (cl.gates) os << "recorded-gates: " << format_gates(*cl.gates) << "\n";
    if (!cl.note.empty()) os << "note: " << cl.note << "\n";
    return os.str();
}

std::string render_validation_report(const GrainParams& p, const ValidationReport& r) {
    std::ostringstream os;
    os << "instance: " << p.name << "\n";
    for (const auto& it : r.items) {
        os << (it.condition == 0 ? "structural" : "condition-" + std::to_string(it.condition))
           << ": ";
        if (it.pass)
            os << "pass";
        else if (it.warning)
            os << "warn";
        else
            os << "FAIL";
        if (!it.detail.empty()) os << " (" << it.detail << ")";
        os << "\n";
    }
    os << r.summary() << "\n";
    os << "result: " << (r.ok() ? "ok" : "invalid") << "\n";
    return os.str();
}

std::string render_analysis_report(const GrainParams& p, const ApproxSpec& spec,
                                   const AnalysisResult& res) {
    std::ostringstream os;
    os << "instance: " << p.name << "\n";
    os << "T: " << join_ints(spec.T) << "\n";
    os << "gamma: " << bits_to_hex(spec.gamma) << "\n";
    const IndexSets& ix = res.sets;
    os << "r: " << ix.r << "\n";
    os << "s: " << ix.s << "\n";
    os << "S1': " << join_ints(ix.S1_prime) << "\n";
    os << "B: " << join_ints(ix.B) << "\n";
    os << "C: " << join_ints(ix.C) << "\n";
    os << "D: " << join_ints(ix.D) << "\n";
    os << "E: " << join_ints(ix.E) << "\n";
    os << "F: " << join_ints(ix.F) << "\n";
    os << "necessary-condition: " << (res.condition_holds ? "holds" : "fails") << "\n";
    if (!res.condition_holds) os << "bias: 0 (necessary condition failed)\n";
    if (res.exact)
        os << "exact-bias: " << res.exact->to_log2_string() << " (= "
           << res.exact->to_string() << ")\n";
    if (res.convolution)
        os << "convolution-bias: " << res.convolution->to_log2_string() << " (= "
           << res.convolution->to_string() << ")\n";
    if (res.empirical) {
        os.precision(6);
        os << "empirical-bias: " << *res.empirical << "\n";
    }
    if (res.samples) os << "samples: " << *res.samples << "\n";
    return os.str();
}

}  // namespace grainforge
