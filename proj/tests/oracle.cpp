#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

using grainforge::AnfPoly;
using grainforge::AssemblyOrder;
using grainforge::GrainParams;
using grainforge::InitVariant;
using grainforge::TruthTable;

struct St {
    std::vector<int> N, L;
};

int eval_anf_naive(const AnfPoly& f, const std::vector<int>& x) {
    int y = 0;
    for (std::uint64_t mask : f.monomials) {
        int prod = 1;
        for (int i = 0; i < 64; ++i)
            if ((mask >> i) & 1) prod &= x[std::size_t(i)];
        y ^= prod;
    }
    return y;
}

std::vector<int> proj(const std::vector<int>& taps, const std::vector<int>& reg) {
    std::vector<int> out;
    for (int t : taps) out.push_back(reg.at(std::size_t(t)));
    return out;
}

int xorl(const std::vector<int>& bits) {
    int y = 0;
    for (int b : bits) y ^= b;
    return y;
}

int nlb(const GrainParams& p, const St& s) { return xorl(proj(p.A, s.L)); }

int nnb(const GrainParams& p, const St& s) {
    return xorl(proj(p.S1, s.N)) ^ eval_anf_naive(p.g_bundle.anf, proj(p.S0, s.N));
}

int ob(const GrainParams& p, const St& s) {
    std::vector<int> core;
    std::vector<int> lpart = proj(p.Q0, s.L);
    std::vector<int> npart = proj(p.P0, s.N);
    if (p.assembly_order == AssemblyOrder::LFirst) {
        core = lpart;
        core.insert(core.end(), npart.begin(), npart.end());
    } else {
        core = npart;
        core.insert(core.end(), lpart.begin(), lpart.end());
    }
    std::vector<int> permuted;
    for (int slot : p.psi) permuted.push_back(core.at(std::size_t(slot - 1)));
    return xorl(proj(p.Q1, s.L)) ^ xorl(proj(p.P1, s.N)) ^
           eval_anf_naive(p.h_bundle.anf, permuted);
}

St shift(const St& s, int b, int bp) {
    St r;
    r.N.assign(s.N.begin() + 1, s.N.end());
    r.N.push_back(b);
    r.L.assign(s.L.begin() + 1, s.L.end());
    r.L.push_back(bp);
    return r;
}

St ns(const GrainParams& p, const St& s) { return shift(s, nnb(p, s) ^ s.L[0], nlb(p, s)); }

St nsi(const GrainParams& p, const St& s) {
    int o = ob(p, s);
    return shift(s, nnb(p, s) ^ s.L[0] ^ o, nlb(p, s) ^ o);
}

St nsig(const GrainParams& p, const St& s) {
    int o = ob(p, s);
    int b = nnb(p, s) ^ s.L[0] ^ o;
    return shift(s, b, nlb(p, s) ^ b);
}

St load(const GrainParams& p, const std::vector<int>& K, const std::vector<int>& IV) {
    std::vector<int> flat = K;
    flat.insert(flat.end(), IV.begin(), IV.end());
    for (auto b : p.pad) flat.push_back(int(b));
    if (int(flat.size()) != p.kappa1 + p.kappa2)
        throw std::invalid_argument("oracle load: size mismatch");
    St s;
    s.N.assign(flat.begin(), flat.begin() + p.kappa1);
    s.L.assign(flat.begin() + p.kappa1, flat.end());
    return s;
}

St init(const GrainParams& p, const std::vector<int>& K, St s) {
    int m = std::max(p.kappa1, p.kappa2);
    if (p.init_variant == InitVariant::Init1) {
        for (int t = 0; t < 2 * m; ++t) s = nsi(p, s);
    } else if (p.init_variant == InitVariant::InitG) {
        for (int t = 0; t < 2 * m; ++t) s = nsig(p, s);
    } else {
        for (int t = 0; t < 5 * m / 2; ++t) s = nsi(p, s);
        for (int t = 0; t < p.kappa / 2; ++t) {
            s = nsi(p, s);
            s.N[std::size_t(p.kappa1 - 1)] ^= K[std::size_t(t)];
            s.L[std::size_t(p.kappa2 - 1)] ^= K[std::size_t(t + p.kappa / 2)];
        }
        for (int t = 0; t < m; ++t) s = ns(p, s);
    }
    return s;
}

}  // namespace

std::vector<int> keystream(const GrainParams& p, const std::vector<int>& K,
                           const std::vector<int>& IV, int nbits) {
    St s = init(p, K, load(p, K, IV));
    std::vector<int> z;
    for (int t = 0; t < nbits; ++t) {
        z.push_back(ob(p, s));
        s = ns(p, s);
    }
    return z;
}

long long walsh_at(const TruthTable& tt, std::uint64_t alpha) {
    long long w = 0;
    for (std::uint64_t x = 0; x < tt.size(); ++x) {
        int dot = 0;
        for (int i = 0; i < tt.n; ++i) dot ^= int((x >> i) & (alpha >> i) & 1);
        w += (tt.bits[x] ^ dot) ? -1 : 1;
    }
    return w;
}

long long nonlinearity(const TruthTable& tt) {
    long long best = 0;
    for (std::uint64_t a = 0; a < tt.size(); ++a)
        best = std::max(best, std::abs(walsh_at(tt, a)));
    return (1ll << (tt.n - 1)) - best / 2;
}

TruthTable tt_from_anf(const AnfPoly& anf) {
    TruthTable tt = TruthTable::zero(anf.n);
    for (std::uint64_t x = 0; x < tt.size(); ++x) {
        std::vector<int> bits;
        for (int i = 0; i < anf.n; ++i) bits.push_back(int((x >> i) & 1));
        tt.bits[x] = std::uint8_t(eval_anf_naive(anf, bits));
    }
    return tt;
}

}  // namespace oracle
