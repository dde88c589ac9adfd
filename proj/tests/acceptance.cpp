// Acceptance suite: nine independent criteria, one verdict line each.
// Exit code is the number of failed criteria. Detail lines explain any
// mismatch; deviations between computed and recorded values are printed
// rather than absorbed.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grainforge/analysis.hpp"
#include "grainforge/boolfn.hpp"
#include "grainforge/circuit.hpp"
#include "grainforge/engine.hpp"
#include "grainforge/funlib.hpp"
#include "grainforge/gf2poly.hpp"
#include "grainforge/hexfmt.hpp"
#include "grainforge/instances.hpp"
#include "grainforge/rng.hpp"
#include "grainforge/tapgen.hpp"
#include "oracle.hpp"

using namespace grainforge;

namespace {

std::vector<std::string> details;

void note(const std::string& s) { details.push_back(s); }

bool check(bool ok, const std::string& what) {
    if (!ok) note("mismatch: " + what);
    return ok;
}

CipherState random_state(const GrainParams& p, Xorshift64Star& rng) {
    CipherState s;
    s.N = BitVec(std::size_t(p.kappa1));
    s.L = BitVec(std::size_t(p.kappa2));
    for (int i = 0; i < p.kappa1; ++i) s.N.set(std::size_t(i), rng.bit());
    for (int i = 0; i < p.kappa2; ++i) s.L.set(std::size_t(i), rng.bit());
    return s;
}

// ---------------------------------------------------------------- criterion 1

struct PropRow {
    const char* name;
    std::int64_t nl;
    int deg;
    int res;  // -2 = not recorded, skip
    int ai;   // -1 = skip (too wide or only bounded)
};

bool criterion1() {
    const std::vector<PropRow> rows = {
        {"h5", 12, 3, 1, 2},
        {"h7", 56, 4, 1, 3},
        {"h10", 496, 5, -1, 3},
        {"h15", (1 << 14) - (1 << 7), 5, 1, 4},
        {"h19", (1 << 18) - (1 << 9), 7, 1, 4},
        {"g10", 492, 7, -1, 4},
        {"f10", 494, 8, -2, 3},
        {"g24", (1 << 23) - (1 << 11), 6, -1, -1},
        {"grainv1_g", 430, 6, -1, 4},
        {"grainv1_h", 12, 3, 1, 2},
        {"grain128a_g", 8356352, 4, -1, -1},
        {"grain128a_h", 240, 3, -1, 3},
    };
    bool ok = true;
    for (const PropRow& row : rows) {
        FunctionBundle f = build_function(row.name);
        TruthTable tt = anf_to_tt(f.anf);
        SpectralProfile sp = spectral_profile(tt);
        ok &= check(sp.nl == row.nl, std::string(row.name) + " nonlinearity " +
                                         std::to_string(sp.nl) + " vs recorded " +
                                         std::to_string(row.nl));
        ok &= check(degree(f.anf) == row.deg,
                    std::string(row.name) + " degree " + std::to_string(degree(f.anf)) +
                        " vs recorded " + std::to_string(row.deg));
        if (row.res != -2)
            ok &= check(sp.resiliency == row.res,
                        std::string(row.name) + " resiliency " +
                            std::to_string(sp.resiliency) + " vs recorded " +
                            std::to_string(row.res));
        if (row.ai >= 0) {
            // Capping the search at the recorded value checks both halves:
            // no annihilator below it, and a verified witness at it.
            AiResult ar = algebraic_immunity(tt, row.ai);
            ok &= check(ar.ai == row.ai && ar.exact,
                        std::string(row.name) + " immunity " + std::to_string(ar.ai) +
                            (ar.exact ? " (witnessed)" : " (no witness)") +
                            " vs recorded " + std::to_string(row.ai));
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2() {
    bool ok = true;
    for (int k = 5; k <= 12; ++k) {
        for (std::string base : {std::string("h"), std::string("g")}) {
            if (base == "g" && k == 5) continue;  // flat family starts at 12 vars
            std::string name = base + std::to_string(2 * k);
            FunctionBundle f = build_function(name);
            WalshSpectrum ws = walsh_spectrum(anf_to_tt(f.anf));
            bool flat = true;
            for (std::int32_t w : ws.values)
                if (w != (1 << k) && w != -(1 << k)) flat = false;
            ok &= check(flat, name + " spectrum is not flat at 2^" + std::to_string(k));
            if (2 * k <= 20) {
                // Closed form: the inner-product part contributes the sign
                // <u,v>, the core contributes its value at v.
                TruthTable part =
                    base == "h" ? anf_to_tt(AnfPoly(k, {(std::uint64_t(1) << k) - 1}))
                                : anf_to_tt(build_function("e" + std::to_string(k)).anf);
                bool match = true;
                for (std::uint32_t u = 0; u < (1u << k) && match; ++u)
                    for (std::uint32_t v = 0; v < (1u << k); ++v)
                        if (std::int64_t(ws.values[u | (v << k)]) != mm_walsh(part, u, v)) {
                            match = false;
                            break;
                        }
                ok &= check(match, name + " closed-form spectrum differs from transform");
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 3

std::string gc_str(const GateCount& g) {
    return std::to_string(g.nots) + "N+" + std::to_string(g.xors) + "X+" +
           std::to_string(g.ands) + "A";
}

bool criterion3() {
    const std::vector<std::pair<const char*, GateCount>> recorded = {
        {"g10", {1, 6, 10}},         {"h7", {2, 9, 8}},
        {"g24", {1, 14, 17}},        {"g30", {1, 19, 21}},
        {"g36", {1, 22, 27}},        {"h10", {0, 5, 8}},
        {"grainv1_g", {6, 12, 17}},  {"grainv1_h", {1, 7, 6}},
        {"grain128a_g", {0, 9, 14}}, {"grain128a_h", {0, 4, 6}},
    };
    bool ok = true;
    for (const auto& [name, want] : recorded) {
        GateCount got = gate_count(build_function(name).circuit);
        ok &= check(got == want, std::string(name) + " circuit " + gc_str(got) +
                                     " vs recorded " + gc_str(want));
    }
    // h15/h19 are measured against the construction formula (7+k XOR,
    // 2k+2 AND for h_{5+2k}); the recorded tally has one extra AND each.
    for (int k : {5, 7}) {
        std::string name = "h" + std::to_string(5 + 2 * k);
        GateCount formula{0, 7 + k, 2 * k + 2};
        GateCount table{0, 7 + k, 2 * k + 3};
        GateCount got = gate_count(build_function(name).circuit);
        note(name + ": recorded tally " + gc_str(table) + " has one AND more than the " +
             "construction formula " + gc_str(formula) + "; circuit has " + gc_str(got));
        ok &= check(got == formula, name + " circuit " + gc_str(got) +
                                        " vs construction formula " + gc_str(formula));
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4() {
    bool ok = true;
    std::vector<GrainParams> all;
    for (const std::string& name : instance_names()) all.push_back(get_instance(name));
    all.push_back(make_toy({12, 8, 12, 12, "h4", "h5", 9}));
    Xorshift64Star rng(0xACCE97);
    for (const GrainParams& p : all) {
        for (StepMode mode : {StepMode::NS, StepMode::NSI, StepMode::NSIG}) {
            int bad = 0;
            for (int i = 0; i < 1000; ++i) {
                CipherState s = random_state(p, rng);
                if (!(step_inverse(p, step(p, s, mode), mode) == s)) ++bad;
            }
            ok &= check(bad == 0, p.name + " round trips failed: " + std::to_string(bad));
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 5

bool criterion5() {
    bool ok = true;
    ok &= check(epsilon_bounds(get_instance("grainv1"), 10).eps_h == Dyadic::make(1, 20),
                "grainv1 filter-sum bound at 10 terms");
    ok &= check(epsilon_bounds(get_instance("grain128a"), 6).eps_h == Dyadic::make(1, 24),
                "grain128a filter-sum bound at 6 terms");
    const std::vector<std::pair<const char*, std::string>> gexp = {
        {"r80", "2^-28.068"}, {"r128", "2^-48"}, {"r192", "2^-75"}, {"r256", "2^-108"}};
    for (const auto& [name, want] : gexp) {
        EpsilonBounds e = epsilon_bounds(get_instance(name), 1);
        ok &= check(e.eps_g_applicable, std::string(name) + " product bound inapplicable");
        std::string got = e.eps_g.to_log2_string();
        ok &= check(got == want,
                    std::string(name) + " feedback-sum bound " + got + " vs " + want);
    }
    // The 80-bit value exactly: (5/2^7)^6 = 15625/2^42.
    ok &= check(epsilon_bounds(get_instance("r80"), 1).eps_g == Dyadic::make(15625, 42),
                "r80 feedback-sum bound exact rational");
    return ok;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6() {
    struct Case {
        GrainParams p;
        std::vector<int> T;
        std::vector<std::uint8_t> gamma;
    };
    std::vector<Case> cases;
    std::vector<GrainParams> toys;
    for (std::uint64_t seed : {1u, 3u, 5u, 7u, 11u})
        toys.push_back(make_toy({10, 8, 10, 10, "h4", "h5", seed}));
    for (std::uint64_t seed : {2u, 4u})
        toys.push_back(make_toy({12, 8, 12, 12, "h4", "h5", seed}));
    Xorshift64Star rng(0x6A77A);
    for (const GrainParams& p : toys) {
        for (std::vector<int> T : {std::vector<int>{0}, {1}, {0, 1}, {2}, {0, 2}}) {
            WindowBounds wb = window_bounds(p, T);
            if (wb.r + wb.s > 26) continue;
            std::vector<std::vector<std::uint8_t>> gammas;
            gammas.emplace_back(std::size_t(wb.r), 0);
            IndexSets ix = index_sets(p, T, gammas[0]);
            std::vector<std::uint8_t> cancel(std::size_t(wb.r), 0);
            for (int i : ix.B) cancel[std::size_t(i)] = 1;
            gammas.push_back(cancel);
            for (int extra = 0; extra < 2; ++extra) {
                std::vector<std::uint8_t> g(std::size_t(wb.r), 0);
                for (auto& b : g) b = std::uint8_t(rng.bit());
                gammas.push_back(g);
            }
            for (auto& g : gammas) cases.push_back({p, T, g});
        }
    }
    bool ok = check(cases.size() >= 50,
                    "only " + std::to_string(cases.size()) + " cases in the corpus");
    int within = 0, nonzero_checked = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const Case& c = cases[i];
        Dyadic ex = exact_model_bias(c.p, c.T, c.gamma);
        Dyadic cv = convolution_bias(c.p, c.T, c.gamma);
        if (!(ex == cv)) {
            ok = check(false, "case " + std::to_string(i) + ": enumeration " +
                                  ex.to_string() + " vs spectral " + cv.to_string());
            continue;
        }
        if (!necessary_condition(c.p, c.T, c.gamma))
            ok &= check(ex.is_zero(), "case " + std::to_string(i) +
                                          ": condition fails but bias " + ex.to_string());
        const std::uint64_t samples = 1000000;
        double est = empirical_bias(c.p, c.T, c.gamma, samples, 0xE5717 + i);
        ++nonzero_checked;
        if (std::abs(est - ex.to_double()) <= 3.0 / std::sqrt(double(samples))) ++within;
    }
    double frac = nonzero_checked ? double(within) / double(nonzero_checked) : 0.0;
    note("sampled estimates within three standard errors: " + std::to_string(within) +
         "/" + std::to_string(nonzero_checked));
    ok &= check(frac >= 0.95, "only " + std::to_string(frac * 100) +
                                  "% of sampled estimates within three standard errors");
    return ok;
}

// ---------------------------------------------------------------- criterion 7

bool criterion7() {
    bool ok = true;
    std::ifstream in(std::string(GRAINFORGE_DATA_DIR) + "/vectors.txt");
    if (!in) {
        note("cannot open vectors file");
        return false;
    }
    std::string name, key, iv, ks;
    int lines = 0;
    while (in >> name >> key >> iv >> ks) {
        ++lines;
        GrainParams p = get_instance(name);
        std::vector<std::uint8_t> K = hex_to_bits(key, std::size_t(p.kappa));
        std::vector<std::uint8_t> IV = hex_to_bits(iv, std::size_t(p.v));
        std::string engine_hex = bits_to_hex(keystream(p, K, IV, 256));
        ok &= check(engine_hex == ks, name + " engine keystream differs from file");
        std::vector<int> Ki(K.begin(), K.end()), IVi(IV.begin(), IV.end());
        std::vector<int> z = oracle::keystream(p, Ki, IVi, 256);
        std::vector<std::uint8_t> zb(z.begin(), z.end());
        ok &= check(bits_to_hex(zb) == ks, name + " reference keystream differs from file");
    }
    ok &= check(lines == 18, "vector file has " + std::to_string(lines) + " lines");

    // Wide stepping against serial stepping on post-mixing states.
    for (const std::string& iname : instance_names()) {
        GrainParams p = get_instance(iname);
        std::vector<std::uint8_t> K(std::size_t(p.kappa), 0), IV(std::size_t(p.v), 0);
        K[1] = 1;
        CipherState s = run_init(p, K, IV);
        for (int i = 1; i <= p.delta_speed; ++i) {
            auto [ws, bits] = step_wide(p, s, i);
            CipherState serial = s;
            std::vector<std::uint8_t> expect;
            for (int j = 0; j < i; ++j) {
                expect.push_back(std::uint8_t(component_bits(p, serial).ob));
                serial = step(p, serial, StepMode::NS);
            }
            if (!(ws == serial) || bits != expect) {
                ok = check(false, iname + " wide step of " + std::to_string(i) +
                                      " differs from serial");
                break;
            }
        }
    }

    // Mixing on the 80-bit instance is exactly 160 update steps.
    {
        GrainParams p = get_instance("r80");
        std::vector<std::uint8_t> K(80, 0), IV(64, 0);
        IV[2] = 1;
        CipherState manual = load_state(p, K, IV);
        CipherState ran = run_init(p, K, IV);
        CipherState at159, at161;
        for (int t = 0; t < 161; ++t) {
            if (t == 159) at159 = manual;
            manual = step(p, manual, StepMode::NSIG);
            if (t == 159) {
                CipherState m160 = manual;
                m160.t = 0;
                ok &= check(ran == m160, "mixing differs from 160 update steps");
            }
        }
        at161 = manual;
        at159.t = at161.t = 0;
        ok &= check(!(ran == at159) && !(ran == at161),
                    "mixing state coincides with 159 or 161 steps");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 8

bool criterion8() {
    bool ok = true;
    for (const std::string& name :
         {"r80", "r128", "w128", "r192", "w192", "r256", "w256"}) {
        GrainParams p = get_instance(name);
        auto [P1, S0] = p1_s0_lists(p.p1(), p.n0());
        ok &= check(P1 == p.P1 && S0 == p.S0,
                    name + " published quadratic taps differ from the grid");
        ok &= check(check_cartesian(p.P1, p.S0), name + " pairwise sums collide");
    }
    for (const std::string& name : {"r80", "r128", "r192", "r256"}) {
        GrainParams base = get_instance(name);
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
        int bad = 0;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            req.seed = seed;
            TapLists taps = generate_taps(req);
            GrainParams p = base;
            p.S0 = taps.S0;
            p.S1 = taps.S1;
            p.P0 = taps.P0;
            p.P1 = taps.P1;
            p.Q0 = taps.Q0;
            p.Q1 = taps.Q1;
            if (!validate_params(p, /*strict=*/true).ok()) ++bad;
        }
        ok &= check(bad == 0, name + " profile: " + std::to_string(bad) +
                                  " generated tap sets fail strict validation");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 9

bool criterion9() {
    bool ok = true;
    for (const std::string& name : instance_names()) {
        GrainParams p = get_instance(name);
        ok &= check(gf2_is_irreducible(Gf2Poly::from_exponents(p.tau)),
                    name + " feedback polynomial is reducible");
    }
    GrainParams toy = make_toy({12, 8, 12, 12, "h4", "h5", 9});
    ok &= check(gf2_is_primitive(Gf2Poly::from_exponents(toy.tau)),
                "toy feedback polynomial is not primitive");

    // The linear register alone cycles through distinct states.
    std::uint64_t limit = std::min<std::uint64_t>(
        (std::uint64_t(1) << toy.kappa2) - 1, std::uint64_t(1) << 16);
    std::uint32_t state = 1;  // nonzero load
    std::set<std::uint32_t> seen;
    bool distinct = true;
    for (std::uint64_t t = 0; t < limit; ++t) {
        if (!seen.insert(state).second) {
            distinct = false;
            break;
        }
        std::uint32_t fb = 0;
        for (int a : toy.A) fb ^= (state >> a) & 1;
        state = (state >> 1) | (fb << (toy.kappa2 - 1));
    }
    ok &= check(distinct, "linear register state repeats before the full period");
    return ok;
}

}  // namespace

int main() {
    bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                            criterion6, criterion7, criterion8, criterion9};
    int failures = 0;
    for (int i = 0; i < 9; ++i) {
        details.clear();
        bool pass = false;
        try {
            pass = criteria[i]();
        } catch (const std::exception& e) {
            note(std::string("exception: ") + e.what());
        }
        for (const std::string& d : details) std::printf("  - %s\n", d.c_str());
        std::printf("criterion %d: %s\n", i + 1, pass ? "PASS" : "FAIL");
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    return failures;
}
