#include "doctest.h"

#include "grainforge/boolfn.hpp"
#include "grainforge/funlib.hpp"
#include "grainforge/rng.hpp"
#include "oracle.hpp"

using namespace grainforge;

namespace {

TruthTable random_tt(int n, std::uint64_t seed) {
    Xorshift64Star rng(seed);
    TruthTable tt = TruthTable::zero(n);
    for (auto& b : tt.bits) b = std::uint8_t(rng.bit());
    return tt;
}

}  // namespace

TEST_CASE("mobius transform is an involution") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        TruthTable tt = random_tt(10, seed);
        std::vector<std::uint8_t> v = tt.bits;
        mobius_in_place(v);
        mobius_in_place(v);
        CHECK(v == tt.bits);
    }
}

TEST_CASE("truth table <-> normal form round trip") {
    for (std::uint64_t seed : {7u, 8u}) {
        TruthTable tt = random_tt(8, seed);
        AnfPoly anf = tt_to_anf(tt);
        CHECK(anf_to_tt(anf).bits == tt.bits);
        // Point evaluation agrees with the table.
        for (std::uint64_t x = 0; x < tt.size(); ++x)
            CHECK(eval_anf(anf, x) == int(tt.bits[x]));
    }
}

TEST_CASE("fast transform matches the direct-definition coefficients") {
    TruthTable tt = random_tt(8, 42);
    WalshSpectrum ws = walsh_spectrum(tt);
    for (std::uint64_t a = 0; a < tt.size(); ++a)
        CHECK(std::int64_t(ws.values[a]) == oracle::walsh_at(tt, a));
}

TEST_CASE("Parseval identity holds") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        CHECK(walsh_spectrum(random_tt(10, seed)).parseval_holds());
    }
}

TEST_CASE("nonlinearity matches exhaustive affine distance") {
    TruthTable tt = random_tt(8, 99);
    CHECK(spectral_profile(tt).nl == oracle::nonlinearity(tt));
}

TEST_CASE("five-variable filter profile") {
    TruthTable tt = anf_to_tt(build_function("h5").anf);
    SpectralProfile sp = spectral_profile(tt);
    CHECK(sp.nl == 12);
    CHECK(sp.resiliency == 1);
    CHECK(sp.lb == Dyadic::make(1, 2));
}

TEST_CASE("correlation matches spectrum scaling") {
    TruthTable tt = random_tt(6, 5);
    WalshSpectrum ws = walsh_spectrum(tt);
    for (std::uint32_t a = 0; a < tt.size(); ++a)
        CHECK(correlation_at(tt, a) == Dyadic::make(ws.values[a], 6));
}

TEST_CASE("direct sum multiplies spectra") {
    TruthTable f = random_tt(4, 21), g = random_tt(3, 22);
    TruthTable fg = direct_sum(f, g);
    WalshSpectrum wf = walsh_spectrum(f), wg = walsh_spectrum(g), wfg = walsh_spectrum(fg);
    for (std::uint32_t a = 0; a < f.size(); ++a)
        for (std::uint32_t b = 0; b < g.size(); ++b)
            CHECK(std::int64_t(wfg.values[a | (b << 4)]) ==
                  std::int64_t(wf.values[a]) * wg.values[b]);
}

TEST_CASE("annihilator search on known functions") {
    AiResult r = algebraic_immunity(anf_to_tt(build_function("h5").anf));
    CHECK(r.ai == 2);
    CHECK(r.exact);

    // Constant functions are annihilated at degree 0.
    CHECK(algebraic_immunity(TruthTable::zero(4)).ai == 0);

    // A single variable is annihilated by its own complement at degree 1.
    TruthTable x1 = anf_to_tt(AnfPoly(4, {1}));
    AiResult rx = algebraic_immunity(x1);
    CHECK(rx.ai == 1);
    CHECK(rx.exact);
}
