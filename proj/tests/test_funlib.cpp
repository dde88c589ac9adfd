#include "doctest.h"

#include "grainforge/circuit.hpp"
#include "grainforge/funlib.hpp"
#include "grainforge/rng.hpp"

using namespace grainforge;

TEST_CASE("every registry circuit computes its normal form") {
    for (const std::string& name : function_registry()) {
        FunctionBundle f = build_function(name);
        INFO("function ", name);
        if (f.n <= 20) {
            CHECK(circuit_to_tt(f.circuit).bits == anf_to_tt(f.anf).bits);
        } else {
            // Too wide to tabulate here; spot-check random points.
            Xorshift64Star rng(0xF00D + std::uint64_t(f.n));
            for (int i = 0; i < 20000; ++i) {
                std::uint64_t x = rng.next() & ((std::uint64_t(1) << f.n) - 1);
                CHECK(eval_circuit(f.circuit, x) == eval_anf(f.anf, x));
            }
        }
    }
}

TEST_CASE("wide registry circuits match on full tables") {
    // The 24-variable tables, checked once each (a few seconds).
    for (const std::string& name : {"g24", "grain128a_g"}) {
        FunctionBundle f = build_function(name);
        INFO("function ", name);
        CHECK(circuit_to_tt(f.circuit).bits == anf_to_tt(f.anf).bits);
    }
}

TEST_CASE("parametric names build consistently") {
    CHECK(build_function("h12").n == 12);
    CHECK(build_function("h13").n == 13);
    CHECK(build_function("g26").n == 26);
    CHECK(build_function("e9").n == 9);
    CHECK(build_function("h4").n == 4);
    CHECK_THROWS(build_function("h3"));
    CHECK_THROWS(build_function("g10x"));
    CHECK_THROWS(build_function("nosuch"));
}

TEST_CASE("closed-form spectrum for the inner-product constructions") {
    // f(U,V) = <U,V> + core(U): the spectrum factors through the closed form.
    for (int k : {3, 5}) {
        FunctionBundle f = build_function("h" + std::to_string(2 * k));
        std::uint64_t full = (std::uint64_t(1) << k) - 1;
        TruthTable h_part = anf_to_tt(AnfPoly(k, {full}));
        WalshSpectrum ws = walsh_spectrum(anf_to_tt(f.anf));
        for (std::uint32_t u = 0; u <= std::uint32_t(full); ++u)
            for (std::uint32_t v = 0; v <= std::uint32_t(full); ++v)
                CHECK(std::int64_t(ws.values[u | (v << k)]) == mm_walsh(h_part, u, v));
    }
}

TEST_CASE("recorded table rows are present") {
    FunctionBundle g10 = build_function("g10");
    CHECK(g10.claimed.nl == 492);
    CHECK(g10.claimed.degree == 7);
    CHECK(g10.claimed.ai == 4);
    CHECK(*g10.claimed.gates == GateCount{1, 6, 10});
    CHECK(!g10.claimed.note.empty());

    FunctionBundle h19 = build_function("h19");
    CHECK(h19.claimed.nl == (std::int64_t(1) << 18) - (std::int64_t(1) << 9));
    CHECK(h19.claimed.lb == Dyadic::make(1, 9));
}
