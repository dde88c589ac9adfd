#include "grainforge/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace grainforge {

namespace {

void require_table_n(int n) {
    if (n < 1 || n > kMaxTableVars)
        throw std::invalid_argument("full-table operation requires 1 <= n <= 24");
}

}  // namespace

TruthTable TruthTable::zero(int n) {
    require_table_n(n);
    return TruthTable(n, std::vector<std::uint8_t>(std::size_t(1) << n, 0));
}

std::uint64_t TruthTable::weight() const {
    std::uint64_t w = 0;
    for (auto b : bits) w += b;
    return w;
}

AnfPoly::AnfPoly(int n_, std::vector<std::uint64_t> m) : n(n_), monomials(std::move(m)) {
    canonicalize();
}

void AnfPoly::canonicalize() {
    std::sort(monomials.begin(), monomials.end());
    // XOR semantics: a monomial appearing twice cancels.
    std::vector<std::uint64_t> out;
    out.reserve(monomials.size());
    std::size_t i = 0;
    while (i < monomials.size()) {
        std::size_t j = i;
        while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
        if ((j - i) & 1) out.push_back(monomials[i]);
        i = j;
    }
    monomials = std::move(out);
}

std::int32_t WalshSpectrum::max_abs() const {
    std::int32_t m = 0;
    for (auto v : values) m = std::max(m, std::int32_t(std::abs(v)));
    return m;
}

bool WalshSpectrum::parseval_holds() const {
    std::uint64_t sum = 0;
    for (auto v : values) sum += std::uint64_t(std::int64_t(v) * std::int64_t(v));
    return sum == (std::uint64_t(1) << (2 * n));
}

void mobius_in_place(std::vector<std::uint8_t>& bits) {
    std::size_t sz = bits.size();
    for (std::size_t step = 1; step < sz; step <<= 1)
        for (std::size_t block = 0; block < sz; block += step << 1)
            for (std::size_t i = block; i < block + step; ++i) bits[i + step] ^= bits[i];
}

void fwht_in_place(std::vector<std::int32_t>& v) {
    std::size_t sz = v.size();
    for (std::size_t step = 1; step < sz; step <<= 1) {
        for (std::size_t block = 0; block < sz; block += step << 1) {
            for (std::size_t i = block; i < block + step; ++i) {
                std::int32_t a = v[i], b = v[i + step];
                v[i] = a + b;
                v[i + step] = a - b;
            }
        }
    }
}

TruthTable anf_to_tt(const AnfPoly& anf) {
    require_table_n(anf.n);
    TruthTable tt = TruthTable::zero(anf.n);
    for (auto m : anf.monomials) {
        if (m >> anf.n) throw std::invalid_argument("monomial uses variable beyond n");
        tt.bits[std::size_t(m)] ^= 1;
    }
    mobius_in_place(tt.bits);
    return tt;
}

AnfPoly tt_to_anf(const TruthTable& tt) {
    require_table_n(tt.n);
    std::vector<std::uint8_t> coeff = tt.bits;
    mobius_in_place(coeff);
    AnfPoly anf;
    anf.n = tt.n;
    for (std::size_t m = 0; m < coeff.size(); ++m)
        if (coeff[m]) anf.monomials.push_back(std::uint64_t(m));
    return anf;  // already sorted unique
}

WalshSpectrum walsh_spectrum(const TruthTable& tt) {
    require_table_n(tt.n);
    WalshSpectrum ws;
    ws.n = tt.n;
    ws.values.resize(tt.bits.size());
    for (std::size_t i = 0; i < tt.bits.size(); ++i) ws.values[i] = tt.bits[i] ? -1 : 1;
    fwht_in_place(ws.values);
    return ws;
}

SpectralProfile spectral_profile(const WalshSpectrum& ws) {
    SpectralProfile p;
    std::int32_t ma = ws.max_abs();
    p.nl = (std::int64_t(1) << (ws.n - 1)) - ma / 2;
    p.lb = Dyadic::make(ma, ws.n);
    if (ws.values[0] != 0) {
        p.resiliency = -1;
    } else {
        int minwt = ws.n + 1;
        for (std::size_t a = 1; a < ws.values.size(); ++a)
            if (ws.values[a] != 0) minwt = std::min(minwt, std::popcount(std::uint64_t(a)));
        p.resiliency = minwt - 1;
    }
    return p;
}

SpectralProfile spectral_profile(const TruthTable& tt) {
    return spectral_profile(walsh_spectrum(tt));
}

int degree(const AnfPoly& anf) {
    int d = 0;
    for (auto m : anf.monomials) d = std::max(d, std::popcount(m));
    return d;
}

Dyadic correlation_at(const WalshSpectrum& ws, std::uint32_t alpha) {
    if (alpha >= ws.values.size()) throw std::out_of_range("correlation mask out of range");
    return Dyadic::make(ws.values[alpha], ws.n);
}

Dyadic correlation_at(const TruthTable& tt, std::uint32_t alpha) {
    return correlation_at(walsh_spectrum(tt), alpha);
}

TruthTable direct_sum(const TruthTable& f, const TruthTable& g) {
    if (f.n + g.n > kMaxTableVars)
        throw std::invalid_argument("direct_sum: combined variable count exceeds table limit");
    TruthTable out = TruthTable::zero(f.n + g.n);
    std::size_t fsz = f.bits.size();
    for (std::size_t y = 0; y < g.bits.size(); ++y)
        for (std::size_t x = 0; x < fsz; ++x) out.bits[(y << f.n) | x] = f.bits[x] ^ g.bits[y];
    return out;
}

int eval_anf(const AnfPoly& anf, std::uint64_t x) {
    int acc = 0;
    for (auto m : anf.monomials) acc ^= ((m & x) == m) ? 1 : 0;
    return acc;
}

// ---------------------------------------------------------------------------
// Algebraic immunity via nullspace filtering.
//
// Columns are monomials of degree <= d ordered by (degree, ascending mask),
// indexed through the combinatorial number system. Each x in supp(f) imposes
// one GF(2) constraint on the annihilator coefficients. We maintain a basis
// of the current solution space (initially the identity) and filter it by
// each constraint; dimension drops by at most 1 per row, so the expensive
// phase lasts only about ncols rows and the search exits early when the
// space becomes empty.
// ---------------------------------------------------------------------------

namespace {

class BinomTable {
public:
    BinomTable(int n, int d) : d_(d), c_((n + 1) * (d + 1), 0) {
        for (int i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= d && j <= i; ++j)
                at(i, j) = (j == i) ? 1 : at(i - 1, j - 1) + at(i - 1, j);
        }
    }
    std::uint64_t operator()(int i, int j) const {
        if (j < 0 || j > d_ || j > i) return 0;
        return c_[std::size_t(i) * (d_ + 1) + j];
    }

private:
    std::uint64_t& at(int i, int j) { return c_[std::size_t(i) * (d_ + 1) + j]; }
    int d_;
    std::vector<std::uint64_t> c_;
};

struct ColumnSpace {
    int n, d;
    std::size_t ncols;
    std::vector<std::size_t> offset;  // offset[w] = first column of weight w
    BinomTable binom;

    ColumnSpace(int n_, int d_) : n(n_), d(d_), binom(n_, d_) {
        offset.resize(d + 2, 0);
        ncols = 0;
        for (int w = 0; w <= d; ++w) {
            offset[w] = ncols;
            ncols += binom(n, w);
        }
        offset[d + 1] = ncols;
    }

    std::uint64_t mask_of_column(std::size_t col) const {
        int w = 0;
        while (offset[w + 1] <= col) ++w;
        std::uint64_t rank = col - offset[w];
        std::uint64_t mask = 0;
        // Unrank in the combinatorial number system: choose bits high to low.
        for (int i = w; i >= 1; --i) {
            int p = i - 1;
            while (binom(p + 1, i) <= rank) ++p;
            rank -= binom(p, i);
            mask |= std::uint64_t(1) << p;
        }
        return mask;
    }
};

class RowMask {
public:
    explicit RowMask(std::size_t nbits) : w_((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::vector<std::uint64_t> w_;
};

// Fill `row` with the columns m <= x (subset) of degree <= d.
void build_row(const ColumnSpace& cs, std::uint32_t x, RowMask& row) {
    row.clear();
    int pos[32], npos = 0;
    for (int i = 0; i < cs.n; ++i)
        if ((x >> i) & 1) pos[npos++] = i;
    row.set(0);  // constant-1 column
    // Iterative DFS over combinations of set bits, sizes 1..d.
    struct Frame {
        int idx;          // index into pos[] chosen at this level
        std::uint64_t r;  // partial combinatorial rank
    };
    Frame stack[32];
    int depth = 0;
    stack[0] = {0, 0};
    while (depth >= 0) {
        Frame& f = stack[depth];
        if (f.idx >= npos) {
            --depth;
            if (depth >= 0) ++stack[depth].idx;
            continue;
        }
        int level = depth + 1;  // number of bits chosen including this one
        std::uint64_t r = f.r + cs.binom(pos[f.idx], level);
        row.set(cs.offset[level] + r);
        if (level < cs.d && f.idx + 1 < npos) {
            stack[depth + 1] = {f.idx + 1, r};
            ++depth;
        } else {
            ++f.idx;
        }
    }
}

struct NullspaceBasis {
    std::size_t ncols, nwords;
    std::vector<std::uint64_t> data;  // dim rows of nwords each
    std::size_t dim;

    NullspaceBasis(std::size_t ncols_) : ncols(ncols_), nwords((ncols_ + 63) / 64) {
        data.assign(ncols * nwords, 0);
        dim = ncols;
        for (std::size_t i = 0; i < ncols; ++i)
            data[i * nwords + (i >> 6)] = std::uint64_t(1) << (i & 63);
    }

    std::uint64_t* vec(std::size_t i) { return &data[i * nwords]; }

    // Filter by constraint row; returns false when the space becomes empty.
    bool filter(const RowMask& row) {
        const auto& rw = row.words();
        std::size_t first_bad = dim;
        for (std::size_t i = 0; i < dim; ++i) {
            std::uint64_t acc = 0;
            const std::uint64_t* v = vec(i);
            for (std::size_t w = 0; w < nwords; ++w) acc ^= v[w] & rw[w];
            bool bad = std::popcount(acc) & 1;
            if (bad) {
                if (first_bad == dim) {
                    first_bad = i;
                } else {
                    std::uint64_t* fb = vec(first_bad);
                    std::uint64_t* vi = vec(i);
                    for (std::size_t w = 0; w < nwords; ++w) vi[w] ^= fb[w];
                }
            }
        }
        if (first_bad == dim) return dim > 0;
        // Remove the pivot violator by swapping in the last vector.
        --dim;
        if (first_bad != dim) {
            std::uint64_t* fb = vec(first_bad);
            std::uint64_t* last = vec(dim);
            for (std::size_t w = 0; w < nwords; ++w) fb[w] = last[w];
        }
        return dim > 0;
    }
};

// Search for a nonzero annihilator of `side` (table of f or f+1) with
// degree <= d. Returns monomial masks of a witness, or empty if none.
std::vector<std::uint64_t> annihilator_at_degree(const TruthTable& side, int d) {
    ColumnSpace cs(side.n, d);
    constexpr std::size_t kMaxCols = 200000;
    if (cs.ncols > kMaxCols)
        throw std::length_error("algebraic_immunity: monomial matrix exceeds memory ceiling");
    NullspaceBasis basis(cs.ncols);
    RowMask row(cs.ncols);
    for (std::size_t x = 0; x < side.bits.size(); ++x) {
        if (!side.bits[x]) continue;
        build_row(cs, std::uint32_t(x), row);
        if (!basis.filter(row)) return {};
    }
    if (basis.dim == 0) return {};
    std::vector<std::uint64_t> monos;
    const std::uint64_t* v = basis.vec(0);
    for (std::size_t c = 0; c < cs.ncols; ++c)
        if ((v[c >> 6] >> (c & 63)) & 1) monos.push_back(cs.mask_of_column(c));
    return monos;
}

bool verify_annihilator(const TruthTable& side, const AnfPoly& g) {
    if (g.monomials.empty()) return false;
    for (std::size_t x = 0; x < side.bits.size(); ++x)
        if (side.bits[x] && eval_anf(g, x)) return false;
    return true;
}

}  // namespace

AiResult algebraic_immunity(const TruthTable& tt, int max_deg) {
    require_table_n(tt.n);
    if (max_deg < 0) max_deg = (tt.n + 1) / 2;
    AiResult res;
    std::uint64_t w = tt.weight();
    if (w == 0 || w == tt.size()) {
        // A constant function is annihilated by the constant 1 (of its
        // complementary side), degree 0.
        res.ai = 0;
        res.exact = true;
        res.witness = AnfPoly(tt.n, {0});
        return res;
    }
    TruthTable comp = tt;
    for (auto& b : comp.bits) b ^= 1;
    for (int d = 1; d <= max_deg; ++d) {
        for (const TruthTable* side : {&tt, const_cast<const TruthTable*>(&comp)}) {
            auto monos = annihilator_at_degree(*side, d);
            if (!monos.empty()) {
                res.ai = d;
                res.witness = AnfPoly(tt.n, std::move(monos));
                res.exact = verify_annihilator(*side, res.witness);
                return res;
            }
        }
    }
    res.ai = max_deg + 1;  // "> max_deg": no annihilator found up to the cap
    res.exact = false;
    return res;
}

}  // namespace grainforge
