#include "grainforge/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "grainforge/boolfn.hpp"
#include "grainforge/rng.hpp"
#include "grainforge/tapgen.hpp"
#include "grainforge/threads.hpp"

namespace grainforge {

namespace {

std::vector<int> checked_shifts(const std::vector<int>& T) {
    if (T.empty()) throw std::invalid_argument("shift set T must be non-empty");
    std::vector<int> t = T;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (t.front() < 0) throw std::invalid_argument("shifts must be non-negative");
    return t;
}

// All pairwise sums a+b; keeps only the sums hit an odd number of times
// (xor semantics: even-multiplicity terms cancel in the bit expression).
std::vector<int> sumset_odd(const std::vector<int>& a, const std::vector<int>& b) {
    std::map<int, int> mult;
    for (int x : a)
        for (int y : b) ++mult[x + y];
    std::vector<int> out;
    for (auto& [v, m] : mult)
        if (m & 1) out.push_back(v);
    return out;
}

int max_sum(const std::vector<int>& a, const std::vector<int>& b) {
    // Both lists non-empty; the extreme sum never cancels.
    return *std::max_element(a.begin(), a.end()) + *std::max_element(b.begin(), b.end());
}

std::vector<int> s1_prime_of(const GrainParams& p, const std::vector<int>& T) {
    std::set<int> s(p.S1.begin(), p.S1.end());
    s.insert(p.kappa1);
    for (int i : T) {
        auto it = s.find(i);
        if (it != s.end())
            s.erase(it);
        else
            s.insert(i);
    }
    return {s.begin(), s.end()};
}

std::vector<int> sym_diff(std::vector<int> acc, const std::vector<int>& other) {
    std::set<int> s(acc.begin(), acc.end());
    for (int v : other) {
        auto it = s.find(v);
        if (it != s.end())
            s.erase(it);
        else
            s.insert(v);
    }
    return {s.begin(), s.end()};
}

bool subset_of(const std::vector<int>& a, const std::set<int>& b) {
    for (int v : a)
        if (!b.count(v)) return false;
    return true;
}

int parity64(std::uint64_t x) { return __builtin_parityll(x); }

// Precompiled window expression: masks for the linear parts and, for every h
// and g invocation, the window position feeding each truth-table input bit.
struct SlotRef {
    int pos;
    bool from_eta;
};

struct WindowExpr {
    IndexSets ix;
    std::uint64_t b_mask = 0, c_mask = 0;
    std::vector<std::vector<SlotRef>> h_slots;  // per shift in T
    std::vector<std::vector<int>> g_slots;      // per j in P1 (eta positions)
    TruthTable h_tt, g_tt;
};

WindowExpr build_window_expr(const GrainParams& p, const std::vector<int>& T,
                             const std::vector<std::uint8_t>& gamma) {
    WindowExpr w;
    w.ix = index_sets(p, T, gamma);
    if (w.ix.r + w.ix.s > 30)
        throw std::invalid_argument("window too large: r+s = " +
                                    std::to_string(w.ix.r + w.ix.s) + " > 30");
    for (int i = 0; i < w.ix.r; ++i)
        if (w.ix.gamma_prime[i]) w.b_mask |= std::uint64_t(1) << i;
    for (int i = 0; i < w.ix.s; ++i)
        if (w.ix.delta_mask[i]) w.c_mask |= std::uint64_t(1) << i;

    int m = p.h_bundle.n;
    for (std::size_t k = 0; k < w.ix.D_i.size(); ++k) {
        // Core tuple in the instance's assembly order, then the bit
        // permutation: input bit b of h reads core slot psi[b]-1.
        std::vector<SlotRef> core;
        auto push_l = [&] { for (int pos : w.ix.D_i[k]) core.push_back({pos, false}); };
        auto push_n = [&] { for (int pos : w.ix.E_i[k]) core.push_back({pos, true}); };
        if (p.assembly_order == AssemblyOrder::LFirst) {
            push_l();
            push_n();
        } else {
            push_n();
            push_l();
        }
        std::vector<SlotRef> slots(m);
        for (int b = 0; b < m; ++b) slots[b] = core[p.psi[b] - 1];
        w.h_slots.push_back(std::move(slots));
    }
    w.g_slots = w.ix.F_j;
    w.h_tt = anf_to_tt(p.h_bundle.anf);
    w.g_tt = anf_to_tt(p.g_bundle.anf);
    return w;
}

inline int eval_window_bit(const WindowExpr& w, std::uint64_t lam, std::uint64_t eta) {
    int b = parity64(lam & w.b_mask) ^ parity64(eta & w.c_mask);
    for (const auto& slots : w.h_slots) {
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            std::uint64_t bit =
                slots[k].from_eta ? (eta >> slots[k].pos) & 1 : (lam >> slots[k].pos) & 1;
            idx |= bit << k;
        }
        b ^= w.h_tt.bits[idx];
    }
    for (const auto& slots : w.g_slots) {
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < slots.size(); ++k)
            idx |= ((eta >> slots[k]) & 1) << k;
        b ^= w.g_tt.bits[idx];
    }
    return b;
}

void fwht64_in_place(std::vector<std::int64_t>& v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1)
        for (std::size_t i = 0; i < v.size(); i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                std::int64_t a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
}

Dyadic claimed_or_computed_lb(const FunctionBundle& f) {
    if (f.claimed.lb) return *f.claimed.lb;
    if (f.n > 20)
        throw std::runtime_error("no recorded linear bias for " + f.name +
                                 " and arity too large to compute");
    return spectral_profile(anf_to_tt(f.anf)).lb;
}

}  // namespace

WindowBounds window_bounds(const GrainParams& p, const std::vector<int>& T) {
    std::vector<int> t = checked_shifts(T);
    WindowBounds wb;
    int rm = -1;
    if (!p.Q1.empty()) rm = std::max(rm, max_sum(p.Q1, t));
    if (!p.P1.empty()) rm = std::max(rm, *std::max_element(p.P1.begin(), p.P1.end()));
    if (!p.Q0.empty()) rm = std::max(rm, max_sum(p.Q0, t));
    int sm = -1;
    if (!p.P1.empty() && !p.S0.empty()) sm = std::max(sm, max_sum(p.P1, p.S0));
    std::vector<int> s1p = s1_prime_of(p, t);
    if (!p.P1.empty() && !s1p.empty()) sm = std::max(sm, max_sum(p.P1, s1p));
    if (!p.P0.empty()) sm = std::max(sm, max_sum(p.P0, t));
    wb.r = 1 + rm;
    wb.s = 1 + sm;
    return wb;
}

IndexSets index_sets(const GrainParams& p, const std::vector<int>& T,
                     const std::vector<std::uint8_t>& gamma) {
    std::vector<int> t = checked_shifts(T);
    WindowBounds wb = window_bounds(p, t);
    if (int(gamma.size()) != wb.r)
        throw std::invalid_argument("gamma must have length r = " + std::to_string(wb.r));

    IndexSets ix;
    ix.r = wb.r;
    ix.s = wb.s;
    ix.S1_prime = s1_prime_of(p, t);

    std::vector<int> supp_gamma;
    for (int i = 0; i < wb.r; ++i)
        if (gamma[i]) supp_gamma.push_back(i);
    ix.B = sym_diff(sym_diff(sumset_odd(t, p.Q1), p.P1), supp_gamma);
    ix.C = sumset_odd(p.P1, ix.S1_prime);

    std::set<int> d, e, f;
    for (int i : t) {
        std::vector<int> di, ei;
        for (int q : p.Q0) di.push_back(q + i);
        for (int q : p.P0) ei.push_back(q + i);
        d.insert(di.begin(), di.end());
        e.insert(ei.begin(), ei.end());
        ix.D_i.push_back(std::move(di));
        ix.E_i.push_back(std::move(ei));
    }
    for (int j : p.P1) {
        std::vector<int> fj;
        for (int s0 : p.S0) fj.push_back(s0 + j);
        f.insert(fj.begin(), fj.end());
        ix.F_j.push_back(std::move(fj));
    }
    ix.D.assign(d.begin(), d.end());
    ix.E.assign(e.begin(), e.end());
    ix.F.assign(f.begin(), f.end());

    ix.gamma_prime.assign(ix.r, 0);
    for (int b : ix.B) ix.gamma_prime[b] = 1;
    ix.delta_mask.assign(ix.s, 0);
    for (int c : ix.C) ix.delta_mask[c] = 1;
    return ix;
}

bool necessary_condition(const GrainParams& p, const std::vector<int>& T,
                         const std::vector<std::uint8_t>& gamma) {
    IndexSets ix = index_sets(p, T, gamma);
    std::set<int> d(ix.D.begin(), ix.D.end());
    std::set<int> ef(ix.E.begin(), ix.E.end());
    ef.insert(ix.F.begin(), ix.F.end());
    return subset_of(ix.B, d) && subset_of(ix.C, ef);
}

EpsilonBounds epsilon_bounds(const GrainParams& p, int t_card) {
    if (t_card < 1) throw std::invalid_argument("t_card must be >= 1");
    EpsilonBounds eb;
    eb.eps_h = claimed_or_computed_lb(p.h_bundle).pow(unsigned(t_card));
    eb.eps_g_applicable = check_cartesian(p.P1, p.S0);
    if (eb.eps_g_applicable)
        eb.eps_g = claimed_or_computed_lb(p.g_bundle).pow(unsigned(p.p1()));
    return eb;
}

Dyadic exact_model_bias(const GrainParams& p, const std::vector<int>& T,
                        const std::vector<std::uint8_t>& gamma) {
    std::vector<int> t = checked_shifts(T);
    WindowExpr w = build_window_expr(p, t, gamma);
    std::uint64_t nlam = std::uint64_t(1) << w.ix.r;
    std::uint64_t neta = std::uint64_t(1) << w.ix.s;

    std::vector<std::int64_t> partial(thread_count(), 0);
    parallel_blocks(nlam, [&](unsigned blk, std::size_t lo, std::size_t hi) {
        std::int64_t acc = 0;
        for (std::uint64_t lam = lo; lam < hi; ++lam)
            for (std::uint64_t eta = 0; eta < neta; ++eta)
                acc += eval_window_bit(w, lam, eta) ? -1 : 1;
        partial[blk] = acc;
    });
    std::int64_t total = 0;
    for (std::int64_t v : partial) total += v;
    return Dyadic::make(total, w.ix.r + w.ix.s);
}

Dyadic convolution_bias(const GrainParams& p, const std::vector<int>& T,
                        const std::vector<std::uint8_t>& gamma) {
    std::vector<int> t = checked_shifts(T);
    WindowExpr w = build_window_expr(p, t, gamma);
    int r = w.ix.r, s = w.ix.s;
    std::uint64_t nlam = std::uint64_t(1) << r;
    std::uint64_t neta = std::uint64_t(1) << s;

    // Spectrum of the h-sum at first argument gamma_prime: one full pass over
    // the joint window space, then a transform over the eta coordinates.
    std::vector<std::int64_t> u(neta, 0);
    parallel_blocks(neta, [&](unsigned, std::size_t lo, std::size_t hi) {
        for (std::uint64_t eta = lo; eta < hi; ++eta) {
            std::int64_t acc = 0;
            for (std::uint64_t lam = 0; lam < nlam; ++lam) {
                int b = parity64(lam & w.b_mask);
                for (const auto& slots : w.h_slots) {
                    std::uint64_t idx = 0;
                    for (std::size_t k = 0; k < slots.size(); ++k) {
                        std::uint64_t bit = slots[k].from_eta ? (eta >> slots[k].pos) & 1
                                                              : (lam >> slots[k].pos) & 1;
                        idx |= bit << k;
                    }
                    b ^= w.h_tt.bits[idx];
                }
                acc += b ? -1 : 1;
            }
            u[eta] = acc;
        }
    });
    fwht64_in_place(u);  // u[beta] = 2^(r+s) * corr of the h-sum at (gamma_prime, beta)

    // Spectrum of the g-sum, scaled by 2^(n0*p1).
    int n0 = p.n0(), p1 = p.p1();
    if (n0 * p1 > 62) throw std::invalid_argument("g-sum spectrum scale too large");
    WalshSpectrum wg = walsh_spectrum(w.g_tt);
    std::vector<std::int64_t> cg(neta, 0);
    if (check_cartesian(p.P1, p.S0)) {
        // Disjoint copies: the correlation factors through the copies.
        std::uint64_t f_mask = 0;
        for (int pos : w.ix.F) f_mask |= std::uint64_t(1) << pos;
        parallel_blocks(neta, [&](unsigned, std::size_t lo, std::size_t hi) {
            for (std::uint64_t beta = lo; beta < hi; ++beta) {
                if (beta & ~f_mask) continue;
                std::int64_t prod = 1;
                for (const auto& slots : w.g_slots) {
                    std::uint64_t sub = 0;
                    for (std::size_t k = 0; k < slots.size(); ++k)
                        sub |= ((beta >> slots[k]) & 1) << k;
                    prod *= wg.values[sub];
                }
                cg[beta] = prod;
            }
        });
    } else {
        // Overlapping copies: fold the per-copy spectra together one at a
        // time (each copy's spectrum lives on the 2^n0 masks inside F_j).
        std::uint64_t ng = std::uint64_t(1) << n0;
        std::vector<std::vector<std::uint64_t>> scatter(w.g_slots.size());
        for (std::size_t j = 0; j < w.g_slots.size(); ++j) {
            scatter[j].resize(ng);
            for (std::uint64_t sub = 0; sub < ng; ++sub) {
                std::uint64_t beta = 0;
                for (int k = 0; k < n0; ++k)
                    if ((sub >> k) & 1) beta |= std::uint64_t(1) << w.g_slots[j][k];
                scatter[j][sub] = beta;
            }
        }
        for (std::uint64_t sub = 0; sub < ng; ++sub) cg[scatter[0][sub]] += wg.values[sub];
        std::vector<std::int64_t> next(neta);
        for (std::size_t j = 1; j < w.g_slots.size(); ++j) {
            std::fill(next.begin(), next.end(), 0);
            parallel_blocks(neta, [&](unsigned, std::size_t lo, std::size_t hi) {
                for (std::uint64_t beta = lo; beta < hi; ++beta) {
                    std::int64_t acc = 0;
                    for (std::uint64_t sub = 0; sub < ng; ++sub) {
                        std::int32_t wv = wg.values[sub];
                        if (wv) acc += cg[beta ^ scatter[j][sub]] * wv;
                    }
                    next[beta] = acc;
                }
            });
            cg.swap(next);
        }
    }

    std::uint64_t d_mask = w.c_mask;
    __int128 acc = 0;
    for (std::uint64_t beta = 0; beta < neta; ++beta)
        acc += __int128(u[beta]) * cg[beta ^ d_mask];
    return Dyadic::make(acc, r + s + n0 * p1);
}

double empirical_bias(const GrainParams& p, const std::vector<int>& T,
                      const std::vector<std::uint8_t>& gamma,
                      std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1000) throw std::invalid_argument("need at least 1000 samples");
    std::vector<int> t = checked_shifts(T);
    WindowBounds wb = window_bounds(p, t);
    if (int(gamma.size()) != wb.r)
        throw std::invalid_argument("gamma must have length r = " + std::to_string(wb.r));
    int max_t = t.back();
    int steps = std::max(wb.r, max_t + 1);
    std::set<int> tset(t.begin(), t.end());

    std::vector<std::int64_t> partial(thread_count(), 0);
    parallel_blocks(samples, [&](unsigned blk, std::size_t lo, std::size_t hi) {
        std::int64_t acc = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            // Per-sample generator keyed by the sample index, so the estimate
            // does not depend on how samples are split across threads.
            Xorshift64Star rng(seed ^ (0x9E3779B97F4A7C15ull * (i + 1)));
            CipherState st;
            st.N = BitVec(p.kappa1);
            st.L = BitVec(p.kappa2);
            for (int b = 0; b < p.kappa1; ++b) st.N.set(b, rng.bit());
            for (int b = 0; b < p.kappa2; ++b) st.L.set(b, rng.bit());
            int bit = 0;
            for (int j = 0; j < steps; ++j) {
                if (j < wb.r && gamma[j]) bit ^= st.L.get(0);
                if (tset.count(j)) bit ^= component_bits(p, st).ob;
                st = step(p, st, StepMode::NS);
            }
            acc += bit ? -1 : 1;
        }
        partial[blk] = acc;
    });
    std::int64_t total = 0;
    for (std::int64_t v : partial) total += v;
    return double(total) / double(samples);
}

}  // namespace grainforge
