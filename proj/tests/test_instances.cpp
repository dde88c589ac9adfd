#include "doctest.h"

#include <algorithm>
#include <set>

#include "grainforge/gf2poly.hpp"
#include "grainforge/instances.hpp"
#include "grainforge/tapgen.hpp"

using namespace grainforge;

TEST_CASE("registry contents") {
    std::vector<std::string> names = instance_names();
    CHECK(names.size() == 9);
    for (const char* n : {"grainv1", "grain128a", "r80", "r128", "w128", "r192",
                          "w192", "r256", "w256"}) {
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
        CHECK(get_instance(n).name == n);
    }
    CHECK_THROWS(get_instance("grainv2"));
}

TEST_CASE("dimension bookkeeping") {
    for (const std::string& name : instance_names()) {
        GrainParams p = get_instance(name);
        INFO("instance ", name);
        CHECK(p.tau.front() == p.kappa2);
        CHECK(p.tau.back() == 0);
        CHECK(p.g_bundle.n == p.n0());
        CHECK(p.h_bundle.n == p.p0() + p.q0());
        CHECK(int(p.psi.size()) == p.p0() + p.q0());
        CHECK(int(p.pad.size()) == p.kappa1 + p.kappa2 - p.kappa - p.v);
        CHECK(p.A == lfsr_taps_from_tau(p.tau, p.kappa2));
    }
}

TEST_CASE("LFSR taps derive from the feedback exponents") {
    // tau = x^80 + x^67 + x^57 + x^42 + x^29 + x^18 + 1 gives taps
    // {0, 13, 23, 38, 51, 62}.
    std::vector<int> taps =
        lfsr_taps_from_tau({80, 67, 57, 42, 29, 18, 0}, 80);
    std::vector<int> want = {0, 13, 23, 38, 51, 62};
    std::sort(taps.begin(), taps.end());
    CHECK(taps == want);
}

TEST_CASE("quadratic tap grid matches the published 80-bit lists") {
    GrainParams p = get_instance("r80");
    auto [P1, S0] = p1_s0_lists(p.p1(), p.n0());
    CHECK(P1 == p.P1);
    CHECK(S0 == p.S0);
    CHECK(check_cartesian(P1, S0));
}

TEST_CASE("toy construction is deterministic and strictly valid") {
    ToySpec spec{12, 8, 12, 12, "h4", "h5", 42};
    GrainParams a = make_toy(spec), b = make_toy(spec);
    CHECK(a.S0 == b.S0);
    CHECK(a.tau == b.tau);
    CHECK(validate_params(a, /*strict=*/true).ok());
    CHECK(gf2_is_primitive(Gf2Poly::from_exponents(a.tau)));

    GrainParams c = make_toy({12, 8, 12, 12, "h4", "h5", 43});
    CHECK(validate_params(c, /*strict=*/true).ok());
}

TEST_CASE("output slot permutations") {
    std::vector<int> id = psi_identity(4);
    CHECK(id == std::vector<int>{1, 2, 3, 4});
    // p0 = 3, q0 = 4: (b1, a1, b2, a2, b3, a3, b4) over the core
    // (a1, a2, a3, b1, b2, b3, b4).
    std::vector<int> il = psi_interleave(3, 4);
    CHECK(il == std::vector<int>{4, 1, 5, 2, 6, 3, 7});
    std::set<int> uniq(il.begin(), il.end());
    CHECK(uniq.size() == il.size());
}
