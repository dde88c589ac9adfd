#include "grainforge/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grainforge {

std::vector<int> lfsr_taps_from_tau(const std::vector<int>& tau, int kappa2) {
    std::vector<int> A = {0};
    for (int e : tau)
        if (e > 0 && e < kappa2) A.push_back(kappa2 - e);
    std::sort(A.begin(), A.end());
    return A;
}

bool ValidationReport::ok() const {
    for (const auto& it : items)
        if (!it.pass && !it.warning) return false;
    return true;
}

int ValidationReport::warnings() const {
    int w = 0;
    for (const auto& it : items)
        if (it.warning) ++w;
    return w;
}

std::string ValidationReport::summary() const {
    int total = 0, pass = 0;
    for (const auto& it : items) {
        if (it.condition == 0) continue;
        ++total;
        if (it.pass) ++pass;
    }
    std::string s = "conditions: " + std::to_string(pass) + "/" + std::to_string(total) + " pass";
    if (int w = warnings(); w > 0) s += " (" + std::to_string(w) + " downgraded to warnings)";
    return s;
}

namespace {

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<int> overlap(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int x : a)
        if (contains(b, x) && !contains(out, x)) out.push_back(x);
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

int eval_bundle(const FunctionBundle& f, std::uint64_t x) { return eval_anf(f.anf, x); }

std::uint64_t gather(const std::vector<int>& taps, const BitVec& reg, int shift = 0) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < taps.size(); ++i)
        x |= std::uint64_t(reg.get(taps[i] + shift)) << i;
    return x;
}

int xor_taps(const std::vector<int>& taps, const BitVec& reg, int shift = 0) {
    int b = 0;
    for (int t : taps) b ^= reg.get(t + shift);
    return b;
}

// h input assembly: core tuple per assembly_order, then the bit permutation.
std::uint64_t h_input(const GrainParams& p, const BitVec& N, const BitVec& L, int shift = 0) {
    std::vector<int> core;
    core.reserve(p.p0() + p.q0());
    auto push = [&](const std::vector<int>& taps, const BitVec& reg) {
        for (int t : taps) core.push_back(reg.get(t + shift));
    };
    if (p.assembly_order == AssemblyOrder::LFirst) {
        push(p.Q0, L);
        push(p.P0, N);
    } else {
        push(p.P0, N);
        push(p.Q0, L);
    }
    std::uint64_t x = 0;
    for (std::size_t j = 0; j < p.psi.size(); ++j)
        x |= std::uint64_t(core[p.psi[j] - 1]) << j;
    return x;
}

int ob_bit(const GrainParams& p, const BitVec& N, const BitVec& L, int shift = 0) {
    return xor_taps(p.P1, N, shift) ^ xor_taps(p.Q1, L, shift) ^
           eval_bundle(p.h_bundle, h_input(p, N, L, shift));
}

int nnb_bit(const GrainParams& p, const BitVec& N, int shift = 0) {
    return xor_taps(p.S1, N, shift) ^ eval_bundle(p.g_bundle, gather(p.S0, N, shift));
}

int nlb_bit(const GrainParams& p, const BitVec& L, int shift = 0) {
    return xor_taps(p.A, L, shift);
}

}  // namespace

ValidationReport validate_params(const GrainParams& p, bool strict) {
    ValidationReport rep;
    auto add = [&](int cond, bool pass, bool downgrade, const std::string& detail) {
        bool warn = !pass && !strict && downgrade;
        rep.items.push_back({cond, pass || warn, warn, detail});
    };
    auto structural = [&](bool pass, const std::string& detail) {
        rep.items.push_back({0, pass, false, detail});
    };

    // Structural checks: these make the parameter set meaningless if violated.
    structural(p.kappa1 >= p.kappa, "kappa1 >= kappa");
    structural(int(p.pad.size()) == p.kappa1 + p.kappa2 - p.kappa - p.v,
               "pad length = kappa1+kappa2-kappa-v");
    bool tau_ok = contains(p.tau, p.kappa2) && contains(p.tau, 0);
    for (int e : p.tau) tau_ok = tau_ok && e >= 0 && e <= p.kappa2;
    structural(tau_ok, "tau has degree kappa2 and nonzero constant term");
    structural(p.A == lfsr_taps_from_tau(p.tau, p.kappa2), "A derived from tau");
    bool n_range = true, l_range = true;
    for (const auto* lst : {&p.S0, &p.S1, &p.P0, &p.P1})
        for (int x : *lst) n_range = n_range && x >= 0 && x < p.kappa1;
    for (const auto* lst : {&p.A, &p.Q0, &p.Q1})
        for (int x : *lst) l_range = l_range && x >= 0 && x < p.kappa2;
    structural(n_range, "N tap indices within register");
    structural(l_range, "L tap indices within register");
    structural(p.g_bundle.n == p.n0(), "g arity = #S0");
    structural(p.h_bundle.n == p.p0() + p.q0(), "h arity = p0+q0");
    std::vector<int> psi_sorted = p.psi;
    std::sort(psi_sorted.begin(), psi_sorted.end());
    bool psi_ok = int(p.psi.size()) == p.p0() + p.q0();
    for (std::size_t i = 0; i < psi_sorted.size(); ++i)
        psi_ok = psi_ok && psi_sorted[i] == int(i) + 1;
    structural(psi_ok, "psi is a permutation of 1..p0+q0");
    structural(p.delta_speed >= 1, "delta >= 1");

    // Condition 1: no register position tapped twice.
    {
        std::vector<std::string> clashes;
        const std::vector<std::pair<const std::vector<int>*, const char*>> nlists = {
            {&p.S0, "S0"}, {&p.S1, "S1"}, {&p.P0, "P0"}, {&p.P1, "P1"}};
        for (std::size_t i = 0; i < nlists.size(); ++i)
            for (std::size_t j = i + 1; j < nlists.size(); ++j) {
                auto ov = overlap(*nlists[i].first, *nlists[j].first);
                if (!ov.empty())
                    clashes.push_back(std::string(nlists[i].second) + "&" + nlists[j].second +
                                      " at " + join_ints(ov));
            }
        const std::vector<std::pair<const std::vector<int>*, const char*>> llists = {
            {&p.A, "A"}, {&p.Q0, "Q0"}, {&p.Q1, "Q1"}};
        for (std::size_t i = 0; i < llists.size(); ++i)
            for (std::size_t j = i + 1; j < llists.size(); ++j) {
                auto ov = overlap(*llists[i].first, *llists[j].first);
                if (!ov.empty())
                    clashes.push_back(std::string(llists[i].second) + "&" + llists[j].second +
                                      " at " + join_ints(ov));
            }
        std::string detail = "lists pairwise disjoint per register";
        for (const auto& c : clashes) detail += "; overlap " + c;
        add(1, clashes.empty(), true, detail);
    }
    add(2, p.n0() % 2 == 0, false, "n0 is even");
    add(3, contains(p.S1, 0), false, "0 in S1");
    add(4,
        !contains(p.P0, 0) && !contains(p.P1, 0) && !contains(p.Q0, 0) && !contains(p.Q1, 0),
        false, "0 not in P0,P1,Q0,Q1");
    {
        bool ok = true;
        for (const auto* lst : {&p.S0, &p.S1, &p.P0, &p.P1})
            for (int x : *lst) ok = ok && x <= p.kappa1 - p.delta_speed;
        for (const auto* lst : {&p.A, &p.Q0, &p.Q1})
            for (int x : *lst) ok = ok && x <= p.kappa2 - p.delta_speed;
        add(5, ok, false, "all taps at most kappa-delta for their register");
    }
    {
        std::set<int> sums;
        for (int a : p.P1)
            for (int b : p.S0) sums.insert(a + b);
        bool ok = int(sums.size()) == p.p1() * p.n0();
        add(6, ok, true,
            "#(P1+S0) = #P1*#S0 (" + std::to_string(sums.size()) + " of " +
                std::to_string(p.p1() * p.n0()) + ")");
    }
    return rep;
}

CipherState load_state(const GrainParams& p, const std::vector<std::uint8_t>& K,
                       const std::vector<std::uint8_t>& IV) {
    if (int(K.size()) != p.kappa) throw std::invalid_argument("key length != kappa");
    if (int(IV.size()) != p.v) throw std::invalid_argument("iv length != v");
    std::vector<std::uint8_t> all;
    all.reserve(p.kappa1 + p.kappa2);
    all.insert(all.end(), K.begin(), K.end());
    all.insert(all.end(), IV.begin(), IV.end());
    all.insert(all.end(), p.pad.begin(), p.pad.end());
    if (int(all.size()) != p.kappa1 + p.kappa2)
        throw std::invalid_argument("kappa+v+pad != kappa1+kappa2");
    CipherState s{BitVec(p.kappa1), BitVec(p.kappa2), 0};
    for (int i = 0; i < p.kappa1; ++i) s.N.set(i, all[i]);
    for (int i = 0; i < p.kappa2; ++i) s.L.set(i, all[p.kappa1 + i]);
    return s;
}

ComponentBits component_bits(const GrainParams& p, const CipherState& s) {
    return {nlb_bit(p, s.L), nnb_bit(p, s.N), ob_bit(p, s.N, s.L)};
}

CipherState step(const GrainParams& p, const CipherState& s, StepMode mode) {
    ComponentBits c = component_bits(p, s);
    int lambda0 = s.L.get(0);
    int b, bp;
    switch (mode) {
        case StepMode::NS:
            b = c.nnb ^ lambda0;
            bp = c.nlb;
            break;
        case StepMode::NSI:
            b = c.nnb ^ lambda0 ^ c.ob;
            bp = c.nlb ^ c.ob;
            break;
        default:  // NSIG
            b = lambda0 ^ c.nnb ^ c.ob;
            bp = c.nlb ^ b;
            break;
    }
    CipherState r = s;
    r.N.shift_down_push_top(b);
    r.L.shift_down_push_top(bp);
    r.t = s.t + 1;
    return r;
}

CipherState step_inverse(const GrainParams& p, const CipherState& s, StepMode mode) {
    if (contains(p.S0, 0) || !contains(p.S1, 0) || contains(p.P0, 0) ||
        contains(p.P1, 0) || contains(p.Q0, 0) || contains(p.Q1, 0))
        throw std::invalid_argument("tap preconditions for inversion not met");
    int b = s.N.get(p.kappa1 - 1);
    int bp = s.L.get(p.kappa2 - 1);
    // Rebuild the predecessor with unknown eta_0 / lambda_0 left as 0.
    CipherState r{BitVec(p.kappa1), BitVec(p.kappa2), s.t == 0 ? 0 : s.t - 1};
    for (int i = 1; i < p.kappa1; ++i) r.N.set(i, s.N.get(i - 1));
    for (int i = 1; i < p.kappa2; ++i) r.L.set(i, s.L.get(i - 1));
    // Taps of OB, g, and the nonzero parts of S1/A never touch index 0, so
    // these pieces are already determined.
    int eta_prime = xor_taps(p.S1, r.N) ^ eval_bundle(p.g_bundle, gather(p.S0, r.N));
    int lambda_prime = xor_taps(p.A, r.L);
    int eta0, lambda0;
    if (mode == StepMode::NSIG) {
        int ob = ob_bit(p, r.N, r.L);
        eta0 = bp ^ eta_prime ^ ob ^ lambda_prime;
        lambda0 = b ^ eta0 ^ eta_prime ^ ob;
    } else {
        int bn = b, bl = bp;
        if (mode == StepMode::NSI) {
            int ob = ob_bit(p, r.N, r.L);
            bn ^= ob;
            bl ^= ob;
        }
        lambda0 = bl ^ lambda_prime;
        eta0 = bn ^ lambda0 ^ eta_prime;
    }
    r.N.set(0, eta0);
    r.L.set(0, lambda0);
    return r;
}

CipherState run_init(const GrainParams& p, const std::vector<std::uint8_t>& K,
                     const std::vector<std::uint8_t>& IV) {
    CipherState s = load_state(p, K, IV);
    int m = std::max(p.kappa1, p.kappa2);
    switch (p.init_variant) {
        case InitVariant::Init1:
            for (int i = 0; i < 2 * m; ++i) s = step(p, s, StepMode::NSI);
            break;
        case InitVariant::InitG:
            for (int i = 0; i < 2 * m; ++i) s = step(p, s, StepMode::NSIG);
            break;
        case InitVariant::Init2:
            for (int i = 0; i < 5 * m / 2; ++i) s = step(p, s, StepMode::NSI);
            for (int t = 0; t < p.kappa / 2; ++t) {
                s = step(p, s, StepMode::NSI);
                if (K[t]) s.N.flip(p.kappa1 - 1);
                if (K[t + p.kappa / 2]) s.L.flip(p.kappa2 - 1);
            }
            for (int i = 0; i < m; ++i) s = step(p, s, StepMode::NS);
            break;
    }
    s.t = 0;
    return s;
}

std::vector<std::uint8_t> keystream(const GrainParams& p,
                                    const std::vector<std::uint8_t>& K,
                                    const std::vector<std::uint8_t>& IV,
                                    std::uint64_t nbits, bool allow_beyond_policy) {
    if (p.max_keystream_log2 < 64 &&
        nbits > (std::uint64_t(1) << p.max_keystream_log2) && !allow_beyond_policy)
        throw std::invalid_argument("requested keystream exceeds the documented policy");
    CipherState s = run_init(p, K, IV);
    std::vector<std::uint8_t> out;
    out.reserve(nbits);
    for (std::uint64_t i = 0; i < nbits; ++i) {
        out.push_back(std::uint8_t(ob_bit(p, s.N, s.L)));
        s = step(p, s, StepMode::NS);
    }
    return out;
}

std::pair<CipherState, std::vector<std::uint8_t>> step_wide(const GrainParams& p,
                                                            const CipherState& s, int i) {
    if (i < 1 || i > p.delta_speed)
        throw std::invalid_argument("wide step count must be in [1, delta]");
    std::vector<std::uint8_t> out(i), bn(i), bl(i);
    // Every tap is at most kappa-delta, so position tap+j (j < delta) always
    // reads a bit of the starting registers, never a freshly produced one.
    for (int j = 0; j < i; ++j) {
        out[j] = std::uint8_t(ob_bit(p, s.N, s.L, j));
        bn[j] = std::uint8_t(nnb_bit(p, s.N, j) ^ s.L.get(j));
        bl[j] = std::uint8_t(nlb_bit(p, s.L, j));
    }
    CipherState r{BitVec(p.kappa1), BitVec(p.kappa2), s.t + i};
    for (int x = 0; x < p.kappa1; ++x)
        r.N.set(x, x < p.kappa1 - i ? s.N.get(x + i) : bn[x - (p.kappa1 - i)]);
    for (int x = 0; x < p.kappa2; ++x)
        r.L.set(x, x < p.kappa2 - i ? s.L.get(x + i) : bl[x - (p.kappa2 - i)]);
    return {r, out};
}

}  // namespace grainforge
