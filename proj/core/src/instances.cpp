#include "grainforge/instances.hpp"

#include <stdexcept>

#include "grainforge/gf2poly.hpp"
#include "grainforge/rng.hpp"
#include "grainforge/tapgen.hpp"

namespace grainforge {

std::vector<int> psi_identity(int m) {
    std::vector<int> psi(m);
    for (int i = 0; i < m; ++i) psi[i] = i + 1;
    return psi;
}

std::vector<int> psi_interleave(int p0, int q0) {
    if (q0 != p0 + 1) throw std::invalid_argument("interleaving needs q0 = p0+1");
    std::vector<int> psi = {p0 + 1, 1, p0 + 2, 2, p0 + 3};
    for (int i = 3; i <= p0; ++i) psi.push_back(i);
    for (int j = 4; j <= q0; ++j) psi.push_back(p0 + j);
    return psi;
}

namespace {

std::vector<std::uint8_t> pad_alternating(int pairs) {  // (10)^pairs
    std::vector<std::uint8_t> p;
    for (int i = 0; i < pairs; ++i) {
        p.push_back(1);
        p.push_back(0);
    }
    return p;
}

std::vector<std::uint8_t> pad_ones_then_zero(int ones) {  // 1^ones || 0
    std::vector<std::uint8_t> p(ones, 1);
    p.push_back(0);
    return p;
}

struct InstanceRow {
    const char* name;
    int kappa, v, kappa1, kappa2, delta;
    std::vector<int> tau;
    std::vector<int> S0, S1, P0, P1, Q0, Q1;
    const char* g_name;
    const char* h_name;
    std::vector<int> psi;
    AssemblyOrder order;
    InitVariant init;
    std::vector<std::uint8_t> pad;
    std::vector<std::string> errata;
};

InstanceRow instance_row(const std::string& name) {
    if (name == "grainv1")
        return {"grainv1", 80, 64, 80, 80, 16,
                {80, 67, 57, 42, 29, 18, 0},
                {9, 15, 21, 28, 33, 37, 45, 52, 60, 63},
                {0, 14, 62},
                {63},
                {1, 2, 4, 10, 31, 43, 56},
                {3, 25, 46, 64},
                {},
                "grainv1_g", "grainv1_h", psi_identity(5),
                AssemblyOrder::LFirst, InitVariant::Init1,
                std::vector<std::uint8_t>(16, 1),
                {}};
    if (name == "grain128a")
        return {"grain128a", 128, 96, 128, 128, 32,
                {128, 121, 90, 58, 47, 32, 0},
                {3, 67, 11, 13, 17, 18, 27, 59, 40, 48, 61, 65,
                 68, 84, 88, 92, 93, 95, 22, 24, 25, 70, 78, 82},
                {0, 26, 56, 91, 96},
                {12, 95},
                {2, 15, 36, 45, 64, 73, 89},
                {8, 13, 20, 42, 60, 79, 94},
                {93},
                "grain128a_g", "grain128a_h", {8, 1, 2, 3, 9, 4, 5, 6, 7},
                AssemblyOrder::LFirst, InitVariant::Init1,
                pad_ones_then_zero(31),
                {}};
    if (name == "r80")
        return {"r80", 80, 64, 80, 80, 16,
                {80, 77, 65, 29, 19, 16, 0},
                {7, 13, 19, 25, 31, 61, 55, 49, 43, 37},
                {0, 54, 57},
                {15, 16, 39},
                {1, 2, 3, 4, 5, 6},
                {5, 12, 16, 19},
                {11},
                "g10", "h7", psi_interleave(3, 4),
                AssemblyOrder::NFirst, InitVariant::InitG,
                pad_alternating(8),
                {}};
    if (name == "r128")
        return {"r128", 128, 96, 128, 128, 31,
                {128, 108, 97, 54, 46, 32, 0},
                {5, 9, 13, 17, 21, 25, 29, 33, 37, 41, 45, 49,
                 97, 93, 89, 85, 81, 77, 73, 69, 65, 61, 57, 53},
                {0, 36, 55, 71, 91},
                {6, 31, 39, 50, 67},
                {1, 2, 3, 4},
                {1, 12, 38, 87, 97},
                {5, 10, 30, 85},
                "g24", "h10", psi_identity(10),
                AssemblyOrder::NFirst, InitVariant::InitG,
                pad_alternating(16),
                {"pad is (10)^16: the instance text says (10)^32, but the "
                 "register tail holds kappa1+kappa2-kappa-v = 32 bits"}};
    if (name == "w128")
        return {"w128", 128, 96, 128, 112, 31,
                {112, 93, 84, 74, 43, 32, 0},
                {5, 9, 13, 17, 21, 25, 29, 33, 37, 41, 45, 49,
                 97, 93, 89, 85, 81, 77, 73, 69, 65, 61, 57, 53},
                {0, 28, 54, 67, 68},
                {11, 26, 30, 44, 76},
                {1, 2, 3, 4},
                {11, 36, 56, 73, 76},
                {13, 31, 39, 77},
                "g24", "h10", psi_identity(10),
                AssemblyOrder::NFirst, InitVariant::InitG,
                pad_alternating(8),
                {}};
    if (name == "r192")
        return {"r192", 192, 128, 192, 192, 32,
                {192, 131, 123, 118, 79, 32, 0},
                {6, 11, 16, 21, 26, 31, 36, 41, 46, 51, 56, 61, 66, 71, 76,
                 151, 146, 141, 136, 131, 126, 121, 116, 111, 106, 101, 96, 91, 86, 81},
                {0, 22, 68, 75, 82, 89, 129},
                {35, 69, 83, 88, 98, 104, 150},
                {1, 2, 3, 4, 5},
                {1, 26, 57, 77, 83, 103, 116, 127},
                {60, 75, 101, 122, 123},
                "g30", "h15", psi_interleave(7, 8),
                AssemblyOrder::NFirst, InitVariant::InitG,
                pad_alternating(32),
                {}};
    if (name == "w192")
        return {"w192", 192, 128, 192, 160, 32,
                {160, 142, 76, 57, 44, 32, 0},
                {6, 11, 16, 21, 26, 31, 36, 41, 46, 51, 56, 61, 66, 71, 76,
                 151, 146, 141, 136, 131, 126, 121, 116, 111, 106, 101, 96, 91, 86, 81},
                {0, 43, 53, 72, 75, 123, 140},
                {30, 54, 58, 80, 112, 156, 160},
                {1, 2, 3, 4, 5},
                {10, 43, 51, 91, 96, 110, 111, 127},
                {8, 26, 108, 113, 115},
                "g30", "h15", psi_interleave(7, 8),
                AssemblyOrder::NFirst, InitVariant::InitG,
                pad_alternating(16),
                {}};
    if (name == "r256")
        return {"r256", 256, 192, 256, 256, 32,
                {256, 203, 138, 76, 46, 32, 0},
                {7, 13, 19, 25, 31, 37, 43, 49, 55, 61, 67, 73, 79, 85, 91, 97, 103, 109,
                 217, 211, 205, 199, 193, 187, 181, 175, 169, 163, 157, 151, 145, 139, 133,
                 127, 121, 115},
                {0, 16, 26, 83, 84, 92, 134, 160, 192},
                {8, 74, 99, 131, 135, 136, 144, 189, 218},
                {1, 2, 3, 4, 5, 6},
                {1, 11, 61, 110, 131, 133, 170, 198, 208, 218},
                {66, 74, 90, 97, 124, 193},
                "g36", "h19", psi_interleave(9, 10),
                AssemblyOrder::NFirst, InitVariant::InitG,
                pad_alternating(32),
                {"v = 192: the parameter table lists 128, but the IV-size text "
                 "says 192 and only 192 balances the pad length"}};
    if (name == "w256")
        return {"w256", 256, 192, 256, 208, 32,
                {208, 169, 164, 114, 35, 32, 0},
                {7, 13, 19, 25, 31, 37, 43, 49, 55, 61, 67, 73, 79, 85, 91, 97, 103, 109,
                 217, 211, 205, 199, 193, 187, 181, 175, 169, 163, 157, 151, 145, 139, 133,
                 127, 121, 115},
                {0, 17, 38, 41, 89, 132, 146, 186, 190},
                {8, 72, 75, 99, 128, 176, 188, 212, 215},
                {1, 2, 3, 4, 5, 6},
                {22, 53, 54, 73, 82, 86, 99, 143, 148, 167},
                {8, 70, 118, 151, 157, 171},
                "g36", "h19", psi_interleave(9, 10),
                AssemblyOrder::NFirst, InitVariant::InitG,
                pad_alternating(8),
                {"v = 192: the parameter table lists 128, but the IV-size text "
                 "says 192 and only 192 balances the pad length"}};
    throw std::invalid_argument("unknown instance: " + name);
}

GrainParams params_from_row(InstanceRow row) {
    GrainParams p;
    p.name = row.name;
    p.kappa = row.kappa;
    p.v = row.v;
    p.kappa1 = row.kappa1;
    p.kappa2 = row.kappa2;
    p.tau = row.tau;
    p.A = lfsr_taps_from_tau(row.tau, row.kappa2);
    p.S0 = row.S0;
    p.S1 = row.S1;
    p.P0 = row.P0;
    p.P1 = row.P1;
    p.Q0 = row.Q0;
    p.Q1 = row.Q1;
    p.g_bundle = build_function(row.g_name);
    p.h_bundle = build_function(row.h_name);
    p.psi = row.psi;
    p.assembly_order = row.order;
    p.delta_speed = row.delta;
    p.pad = row.pad;
    p.init_variant = row.init;
    p.max_keystream_log2 = 64;
    p.errata = row.errata;
    return p;
}

}  // namespace

std::vector<std::string> instance_names() {
    return {"grainv1", "grain128a", "r80", "r128", "w128",
            "r192",    "w192",      "r256", "w256"};
}

GrainParams get_instance(const std::string& name) {
    return params_from_row(instance_row(name));
}

GrainParams make_toy(const ToySpec& spec) {
    if (spec.kappa1 > 24 || spec.kappa2 > 24 || spec.kappa1 < 4 || spec.kappa2 < 4)
        throw std::invalid_argument("toy register sizes must be in [4, 24]");
    if (spec.kappa1 < spec.kappa) throw std::invalid_argument("kappa1 < kappa");
    int pad_bits = spec.kappa1 + spec.kappa2 - spec.kappa - spec.v;
    if (pad_bits < 0 || pad_bits % 2)
        throw std::invalid_argument("kappa1+kappa2-kappa-v must be even and >= 0");

    GrainParams p;
    p.kappa = spec.kappa;
    p.v = spec.v;
    p.kappa1 = spec.kappa1;
    p.kappa2 = spec.kappa2;
    p.delta_speed = 2;
    p.g_bundle = build_function(spec.g_choice);
    p.h_bundle = build_function(spec.h_choice);
    int n0 = p.g_bundle.n;
    int m = p.h_bundle.n;
    if (n0 % 2) throw std::invalid_argument("toy g arity must be even");
    int h_p0, h_q0;
    if (m % 2) {
        h_p0 = (m - 1) / 2;
        h_q0 = h_p0 + 1;
        p.psi = psi_interleave(h_p0, h_q0);
    } else {
        h_p0 = h_q0 = m / 2;
        p.psi = psi_identity(m);
    }
    int d = p.delta_speed;
    int p1 = (spec.kappa1 - d - 1) / n0;
    if (p1 < 1) throw std::invalid_argument("no room for S0 taps at this size");
    if (p1 > 3) p1 = 3;
    int room = (spec.kappa1 - d) - p1 - n0 - h_p0;  // slots left for S1\{0}
    int n1 = room >= 2 ? 3 : (room == 1 ? 2 : -1);
    if (n1 < 0) throw std::invalid_argument("no room for S1/P0 taps at this size");
    int q1 = 1;
    if (h_q0 + q1 + 4 > spec.kappa2 - d + 1)
        throw std::invalid_argument("no room for Q taps at this size");

    Xorshift64Star rng(spec.seed);
    // Search for a primitive feedback polynomial with three middle exponents,
    // all at least delta so every LFSR tap lands at most kappa2 - delta.
    bool found = false;
    for (int attempt = 0; attempt < 4000 && !found; ++attempt) {
        std::vector<int> mid;
        while (int(mid.size()) < 3) {
            int e = d + int(rng.below(std::uint64_t(spec.kappa2 - d)));
            bool dup = false;
            for (int x : mid) dup = dup || x == e;
            if (!dup) mid.push_back(e);
        }
        std::vector<int> tau = {spec.kappa2};
        for (int e : mid) tau.push_back(e);
        tau.push_back(0);
        if (gf2_is_primitive(Gf2Poly::from_exponents(tau))) {
            p.tau = tau;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("no primitive feedback polynomial found in budget");
    p.A = lfsr_taps_from_tau(p.tau, p.kappa2);

    TapRequest req;
    req.kappa1 = spec.kappa1;
    req.kappa2 = spec.kappa2;
    req.delta_speed = d;
    req.n0 = n0;
    req.n1 = n1;
    req.p0 = h_p0;
    req.p1 = p1;
    req.q0 = h_q0;
    req.q1 = q1;
    req.A = p.A;
    req.seed = rng.next();
    TapLists taps = generate_taps(req);
    p.S0 = taps.S0;
    p.S1 = taps.S1;
    p.P0 = taps.P0;
    p.P1 = taps.P1;
    p.Q0 = taps.Q0;
    p.Q1 = taps.Q1;

    p.assembly_order = AssemblyOrder::NFirst;
    p.init_variant = InitVariant::InitG;
    for (int i = 0; i < pad_bits / 2; ++i) {
        p.pad.push_back(1);
        p.pad.push_back(0);
    }
    p.max_keystream_log2 = 64;
    p.name = "toy-" + std::to_string(spec.kappa1) + "x" + std::to_string(spec.kappa2) +
             "-" + spec.g_choice + "-" + spec.h_choice + "-s" + std::to_string(spec.seed);

    ValidationReport rep = validate_params(p, true);
    if (!rep.ok()) throw std::runtime_error("generated toy failed validation");
    return p;
}

}  // namespace grainforge
