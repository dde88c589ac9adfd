// Command-line surface over the grainforge library: keystream generation,
// function property reports, instance validation, tap generation, and
// linear-approximation bias analysis.
//
// Exit codes: 0 success, 1 usage/input error, 2 validation failure.
// All stdout output is deterministic given the arguments (and seeds);
// diagnostics go to stderr.

#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grainforge/analysis.hpp"
#include "grainforge/config_file.hpp"
#include "grainforge/engine.hpp"
#include "grainforge/funlib.hpp"
#include "grainforge/hexfmt.hpp"
#include "grainforge/instances.hpp"
#include "grainforge/report.hpp"
#include "grainforge/tapgen.hpp"

namespace {

using namespace grainforge;

GrainParams resolve_instance(const std::string& name, const std::string& file) {
    if (!file.empty()) return load_instance_file(file);
    if (!name.empty()) return get_instance(name);
    throw std::invalid_argument("one of --instance/--cipher or --instance-file is required");
}

std::vector<int> parse_shifts(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in shift list");
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string list_str(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string pattern_hex(const std::vector<int>& bytes, int nbits) {
    static const char* d = "0123456789abcdef";
    std::string hex;
    for (int j = 0; j * 8 < nbits; ++j) {
        int v = bytes[std::size_t(j) % bytes.size()];
        hex.push_back(d[v >> 4]);
        hex.push_back(d[v & 15]);
    }
    return hex;
}

int cmd_keystream(const std::string& name, const std::string& file,
                  const std::string& key, const std::string& iv,
                  std::uint64_t nbits, bool allow_long) {
    GrainParams p = resolve_instance(name, file);
    std::vector<std::uint8_t> K = hex_to_bits(key, std::size_t(p.kappa));
    std::vector<std::uint8_t> IV = hex_to_bits(iv, std::size_t(p.v));
    std::vector<std::uint8_t> z = keystream(p, K, IV, nbits, allow_long);
    std::printf("%s\n", bits_to_hex(z).c_str());
    return 0;
}

int cmd_props(const std::string& name, bool force_ai, bool skip_ai) {
    FunctionBundle f = build_function(name);
    bool with_ai = !skip_ai && (force_ai || f.n <= 15);
    if (with_ai && f.n > 15)
        std::fprintf(stderr, "running annihilator search at %d variables; this may take "
                             "a while\n", f.n);
    std::fputs(render_function_report(f, compute_props(f, with_ai)).c_str(), stdout);
    return 0;
}

int cmd_validate(const std::string& name, const std::string& file, bool strict) {
    GrainParams p = resolve_instance(name, file);
    ValidationReport rep = validate_params(p, strict);
    std::fputs(render_validation_report(p, rep).c_str(), stdout);
    return rep.ok() ? 0 : 2;
}

int cmd_tapgen(const std::string& like, std::uint64_t seed) {
    GrainParams base = get_instance(like);
    TapRequest req;
    req.kappa1 = base.kappa1;
    req.kappa2 = base.kappa2;
    req.delta_speed = base.delta_speed;
    req.n0 = base.n0();
    req.n1 = base.n1();
    req.p0 = base.p0();
    req.p1 = base.p1();
    req.q0 = base.q0();
    req.q1 = base.q1();
    req.A = base.A;
    req.seed = seed;
    TapLists taps = generate_taps(req);
    std::printf("# tap lists shaped like %s, seed %llu\n", like.c_str(),
                static_cast<unsigned long long>(seed));
    std::printf("S0: %s\n", list_str(taps.S0).c_str());
    std::printf("S1: %s\n", list_str(taps.S1).c_str());
    std::printf("P0: %s\n", list_str(taps.P0).c_str());
    std::printf("P1: %s\n", list_str(taps.P1).c_str());
    std::printf("Q0: %s\n", list_str(taps.Q0).c_str());
    std::printf("Q1: %s\n", list_str(taps.Q1).c_str());
    return 0;
}

int cmd_analyze(const std::string& name, const std::string& file,
                const std::string& t_text, const std::string& gamma_hex,
                const std::string& mode, std::uint64_t samples, std::uint64_t seed) {
    GrainParams p = resolve_instance(name, file);
    ApproxSpec spec;
    spec.T = parse_shifts(t_text);
    WindowBounds wb = window_bounds(p, spec.T);
    spec.gamma = hex_to_bits(gamma_hex, std::size_t(wb.r));
    AnalysisResult res;
    res.sets = index_sets(p, spec.T, spec.gamma);
    res.condition_holds = necessary_condition(p, spec.T, spec.gamma);
    bool want_exact = mode == "exact" || mode == "all";
    bool want_conv = mode == "conv" || mode == "all";
    bool want_emp = mode == "empirical" || mode == "all";
    if (res.condition_holds) {
        if (want_exact) res.exact = exact_model_bias(p, spec.T, spec.gamma);
        if (want_conv) res.convolution = convolution_bias(p, spec.T, spec.gamma);
        if (want_emp) {
            res.empirical = empirical_bias(p, spec.T, spec.gamma, samples, seed);
            res.samples = samples;
        }
    }
    std::fputs(render_analysis_report(p, spec, res).c_str(), stdout);
    return 0;
}

int cmd_instances() {
    for (const std::string& name : instance_names()) {
        GrainParams p = get_instance(name);
        std::printf("%s kappa=%d v=%d kappa1=%d kappa2=%d delta=%d\n", name.c_str(),
                    p.kappa, p.v, p.kappa1, p.kappa2, p.delta_speed);
    }
    return 0;
}

int cmd_vectors() {
    for (const std::string& name : instance_names()) {
        GrainParams p = get_instance(name);
        std::string zero_key(std::size_t(p.kappa / 4), '0');
        std::string zero_iv(std::size_t(p.v / 4), '0');
        std::string pat_key =
            pattern_hex({0x01, 0x23, 0x45, 0x67, 0x89, 0xab, 0xcd, 0xef}, p.kappa);
        std::string pat_iv =
            pattern_hex({0x12, 0x34, 0x56, 0x78, 0x9a, 0xbc, 0xde, 0xf0}, p.v);
        for (auto [key, iv] : {std::pair{zero_key, zero_iv}, std::pair{pat_key, pat_iv}}) {
            std::vector<std::uint8_t> K = hex_to_bits(key, std::size_t(p.kappa));
            std::vector<std::uint8_t> IV = hex_to_bits(iv, std::size_t(p.v));
            std::vector<std::uint8_t> z = keystream(p, K, IV, 256);
            std::printf("%s %s %s %s\n", name.c_str(), key.c_str(), iv.c_str(),
                        bits_to_hex(z).c_str());
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shift-register cipher family toolkit"};
    app.require_subcommand(1);

    std::string name, file, key, iv, function, t_text, gamma_hex;
    std::string mode = "all", like = "r80";
    std::uint64_t nbits = 128, samples = 1000000, seed = 1;
    bool allow_long = false, strict = false, force_ai = false, skip_ai = false;
    bool all = false;

    CLI::App* ks = app.add_subcommand("keystream", "generate keystream bits");
    ks->add_option("--cipher,--instance", name, "registered instance name");
    ks->add_option("--instance-file", file, "instance description file");
    ks->add_option("--key", key, "key, hex")->required();
    ks->add_option("--iv", iv, "IV, hex")->required();
    ks->add_option("--nbits", nbits, "number of keystream bits");
    ks->add_flag("--allow-long", allow_long, "ignore the keystream length policy");

    CLI::App* pr = app.add_subcommand("props", "report function properties");
    pr->add_option("--function", function, "function registry name")->required();
    pr->add_flag("--ai", force_ai, "run the annihilator search even at high arity");
    pr->add_flag("--no-ai", skip_ai, "skip the annihilator search");

    CLI::App* va = app.add_subcommand("validate", "check instance tap conditions");
    va->add_option("--instance", name, "registered instance name");
    va->add_option("--instance-file", file, "instance description file");
    va->add_flag("--strict", strict, "fail on legacy-tolerated violations");

    CLI::App* tg = app.add_subcommand("tapgen", "generate tap lists");
    tg->add_option("--like", like, "instance whose dimensions to reuse");
    tg->add_option("--seed", seed, "generator seed");

    CLI::App* an = app.add_subcommand("analyze", "linear approximation bias");
    an->add_option("--instance", name, "registered instance name");
    an->add_option("--instance-file", file, "instance description file");
    an->add_option("--T", t_text, "comma-separated output shifts")->required();
    an->add_option("--gamma", gamma_hex, "mask over the L window, hex")->required();
    an->add_option("--mode", mode, "exact | conv | empirical | all")
        ->check(CLI::IsMember({"exact", "conv", "empirical", "all"}));
    an->add_option("--samples", samples, "sample count for the empirical estimate");
    an->add_option("--seed", seed, "sampling seed");

    CLI::App* li = app.add_subcommand("instances", "list registered instances");
    (void)li;

    CLI::App* ve = app.add_subcommand("vectors", "print keystream reference vectors");
    ve->add_flag("--all", all, "all instances, both fixed key/IV pairs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ks->parsed())
            return cmd_keystream(name, file, key, iv, nbits, allow_long);
        if (pr->parsed()) return cmd_props(function, force_ai, skip_ai);
        if (va->parsed()) return cmd_validate(name, file, strict);
        if (tg->parsed()) return cmd_tapgen(like, seed);
        if (an->parsed())
            return cmd_analyze(name, file, t_text, gamma_hex, mode, samples, seed);
        if (li->parsed()) return cmd_instances();
        if (ve->parsed()) return cmd_vectors();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
