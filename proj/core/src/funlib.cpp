#include "grainforge/funlib.hpp"

#include <bit>
#include <stdexcept>

namespace grainforge {

namespace {

std::uint64_t mono(std::initializer_list<int> vars) {
    std::uint64_t m = 0;
    for (int v : vars) m |= std::uint64_t(1) << (v - 1);
    return m;
}

// Largest k1 with k1*(k1+1)/2 <= k, and k2 = k1*(k1+1)/2.
void triangular_split(int k, int& k1, int& k2) {
    k1 = 1;
    while ((k1 + 1) * (k1 + 2) / 2 <= k) ++k1;
    k2 = k1 * (k1 + 1) / 2;
}

// ---- ANF builders -------------------------------------------------------

// Variables (all 1-based, shifted by off): X1,X2,Z1,Z2,Z3 = off+1..off+5.
std::vector<std::uint64_t> anf_h5(int off) {
    int X1 = off + 1, X2 = off + 2, Z1 = off + 3, Z2 = off + 4, Z3 = off + 5;
    return {mono({Z1}),         mono({Z2}),         mono({X1, Z1}),
            mono({X1, Z3}),     mono({X2, Z2}),     mono({X2, Z3}),
            mono({X1, X2, Z1}), mono({X1, X2, Z2}), mono({X1, X2, Z3})};
}

// U_i = off+i, V_i = off+k+i; sum of U_i V_i plus the full product U_1..U_k.
std::vector<std::uint64_t> anf_h2k(int k, int off) {
    std::vector<std::uint64_t> ms;
    for (int i = 1; i <= k; ++i) ms.push_back(mono({off + i, off + k + i}));
    std::uint64_t all_u = 0;
    for (int i = 1; i <= k; ++i) all_u |= std::uint64_t(1) << (off + i - 1);
    ms.push_back(all_u);
    return ms;
}

// Triangular sum X1 + X2X3 + X4X5X6 + ...; the last of the k1 monomials
// absorbs the leftover variables up to X_k.
std::vector<std::uint64_t> anf_ek(int k, int off) {
    int k1, k2;
    triangular_split(k, k1, k2);
    std::vector<std::uint64_t> ms;
    for (int j = 1; j <= k1; ++j) {
        int start = j * (j - 1) / 2 + 1;
        int end = (j < k1) ? j * (j + 1) / 2 : k;
        std::uint64_t m = 0;
        for (int v = start; v <= end; ++v) m |= std::uint64_t(1) << (off + v - 1);
        ms.push_back(m);
    }
    return ms;
}

std::vector<std::uint64_t> anf_g2k(int k) {
    std::vector<std::uint64_t> ms;
    for (int i = 1; i <= k; ++i) ms.push_back(mono({i, k + i}));
    for (std::uint64_t m : anf_ek(k, 0)) ms.push_back(m);
    return ms;
}

// ---- circuit emitters ---------------------------------------------------

int emit_h5(CircuitBuilder& b, int off) {
    int X1 = b.in(off + 1), X2 = b.in(off + 2);
    int Z1 = b.in(off + 3), Z2 = b.in(off + 4), Z3 = b.in(off + 5);
    int t1 = b.XOR(Z1, Z3);
    int t2 = b.XOR(Z2, Z3);
    int t3 = b.XOR(t1, Z2);  // Z1+Z2+Z3
    int a1 = b.AND(X1, t1);
    int a2 = b.AND(X2, t2);
    int a4 = b.AND(b.AND(X1, X2), t3);
    return b.xor_chain({Z1, Z2, a1, a2, a4});
}

int emit_h2k(CircuitBuilder& b, int k, int off) {
    auto U = [&](int i) { return b.in(off + i); };
    auto V = [&](int i) { return b.in(off + k + i); };
    if (k == 1) return b.AND(U(1), b.NOT(V(1)));  // U1 V1 + U1
    std::vector<int> prefix;
    for (int i = 1; i < k; ++i) prefix.push_back(U(i));
    int chain = b.and_chain(prefix);  // U1..U_{k-1}
    std::vector<int> terms;
    for (int i = 1; i < k; ++i) terms.push_back(b.AND(U(i), V(i)));
    terms.push_back(b.AND(U(k), b.XOR(V(k), chain)));
    return b.xor_chain(terms);
}

int emit_ek(CircuitBuilder& b, int k, int off) {
    int k1, k2;
    triangular_split(k, k1, k2);
    std::vector<int> terms;
    for (int j = 1; j <= k1; ++j) {
        int start = j * (j - 1) / 2 + 1;
        int end = (j < k1) ? j * (j + 1) / 2 : k;
        std::vector<int> vars;
        for (int v = start; v <= end; ++v) vars.push_back(b.in(off + v));
        terms.push_back(b.and_chain(vars));
    }
    return b.xor_chain(terms);
}

Circuit circuit_h2k(int k) {
    CircuitBuilder b(2 * k);
    return b.finish(emit_h2k(b, k, 0));
}

Circuit circuit_h5p2k(int k) {
    CircuitBuilder b(5 + 2 * k);
    int o1 = emit_h5(b, 0);
    int o2 = emit_h2k(b, k, 5);
    return b.finish(b.XOR(o1, o2));
}

Circuit circuit_ek(int k) {
    CircuitBuilder b(k);
    return b.finish(emit_ek(b, k, 0));
}

// Sum of U_i V_i plus the triangular sum over U, folded so that each
// triangular monomial's leading variable absorbs its U_i V_i product:
// U1(1+V1) + U_s(V_s + U_{s+1}..U_e) + plain U_i V_i elsewhere.
Circuit circuit_g2k(int k) {
    int k1, k2;
    triangular_split(k, k1, k2);
    CircuitBuilder b(2 * k);
    auto U = [&](int i) { return b.in(i); };
    auto V = [&](int i) { return b.in(k + i); };
    std::vector<bool> leader(k + 1, false);
    std::vector<int> terms;
    terms.push_back(b.AND(U(1), b.NOT(V(1))));
    leader[1] = true;
    for (int j = 2; j <= k1; ++j) {
        int start = j * (j - 1) / 2 + 1;
        int end = (j < k1) ? j * (j + 1) / 2 : k;
        leader[start] = true;
        std::vector<int> rest;
        for (int v = start + 1; v <= end; ++v) rest.push_back(U(v));
        terms.push_back(b.AND(U(start), b.XOR(V(start), b.and_chain(rest))));
    }
    for (int i = 1; i <= k; ++i)
        if (!leader[i]) terms.push_back(b.AND(U(i), V(i)));
    return b.finish(b.xor_chain(terms));
}

Circuit circuit_h5() {
    CircuitBuilder b(5);
    return b.finish(emit_h5(b, 0));
}

Circuit circuit_h7() {
    CircuitBuilder b(7);
    int X1 = b.in(1), X2 = b.in(2), X3 = b.in(3);
    int Z1 = b.in(4), Z2 = b.in(5), Z3 = b.in(6), Z4 = b.in(7);
    int T1 = b.NOT(X1);
    int T2 = b.AND(X1, X2);
    int T3 = b.AND(X2, X3);
    int T4 = b.AND(X2, T1);
    int T5 = b.AND(T3, T1);
    int td = b.AND(Z4, b.XOR(X3, T4));
    int tc = b.AND(Z3, b.XOR(X1, T3));
    int tb = b.AND(Z2, b.XOR(b.XOR(T1, X2), T5));
    int ta = b.AND(Z1, b.NOT(b.XOR(b.XOR(X3, T5), T2)));
    return b.finish(b.xor_chain({ta, tb, tc, td}));
}

// U4(V4 + U1V1 U2V2 U3V3) and V5(U5 + U1U2V4 + U3U4) fold the degree-7 and
// the two mixed monomials into the quadratic terms they share variables with.
Circuit circuit_g10() {
    CircuitBuilder b(10);
    auto U = [&](int i) { return b.in(i); };
    auto V = [&](int i) { return b.in(5 + i); };
    int p1 = b.AND(U(1), V(1));
    int p2 = b.AND(U(2), V(2));
    int p3 = b.AND(U(3), V(3));
    int pq3 = b.AND(b.AND(p1, p2), p3);
    int tC = b.AND(U(4), b.XOR(V(4), pq3));
    int bb = b.AND(b.AND(U(1), U(2)), V(4));
    int w = b.AND(U(3), U(4));
    int t5 = b.AND(V(5), b.XOR(b.XOR(U(5), bb), w));
    return b.finish(b.xor_chain({p1, p2, p3, tC, t5}));
}

Circuit circuit_f10() {
    CircuitBuilder b(10);
    auto U = [&](int i) { return b.in(i); };
    auto V = [&](int i) { return b.in(5 + i); };
    int p1 = b.AND(U(1), V(1));
    int p2 = b.AND(U(2), V(2));
    int p3 = b.AND(U(3), V(3));
    int pq3 = b.AND(b.AND(p1, p2), p3);
    int p4 = b.AND(U(4), V(4));
    int tC = b.AND(p4, b.NOT(pq3));  // U4V4 (1 + U1V1 U2V2 U3V3)
    int bb = b.AND(b.AND(U(1), U(2)), V(4));
    int t5 = b.AND(V(5), b.XOR(U(5), bb));  // V5(U5 + U1U2V4)
    return b.finish(b.xor_chain({p1, p2, p3, tC, t5}));
}

Circuit circuit_grainv1_g() {
    CircuitBuilder b(10);
    auto X = [&](int i) { return b.in(i); };
    int a1 = b.AND(X(1), X(2));
    int a3 = b.AND(b.AND(X(6), X(7)), X(8));
    int n1 = b.NOT(b.XOR(a1, a3));
    int a5 = b.AND(b.AND(X(4), X(5)), n1);
    int a7 = b.AND(b.AND(X(2), X(9)), X(10));
    int t3 = b.AND(X(3), b.NOT(b.XOR(a5, a7)));
    int a8 = b.AND(X(7), X(10));
    int a9 = b.AND(X(8), X(9));
    int a10 = b.AND(a9, b.XOR(X(5), a8));
    int t6 = b.AND(X(6), b.NOT(b.XOR(X(5), a10)));
    int a12 = b.AND(b.AND(X(1), X(4)), X(10));
    int t7 = b.AND(X(7), b.NOT(b.XOR(a9, a12)));
    int t1 = b.AND(X(1), b.NOT(X(2)));
    int t9 = b.AND(X(9), b.NOT(X(10)));
    return b.finish(b.xor_chain({t3, t6, t7, t1, t9, X(4), X(5), X(8)}));
}

Circuit circuit_grainv1_h() {
    CircuitBuilder b(5);
    auto Y = [&](int i) { return b.in(i); };
    int t = b.XOR(Y(1), Y(5));
    int a2 = b.AND(Y(4), b.XOR(b.AND(Y(3), b.NOT(t)), t));
    int a4 = b.AND(Y(5), b.AND(Y(3), b.XOR(Y(1), Y(2))));
    int a6 = b.AND(b.AND(Y(1), Y(2)), Y(3));
    return b.finish(b.xor_chain({Y(2), Y(5), a2, a4, a6}));
}

Circuit circuit_grain128a_g() {
    CircuitBuilder b(24);
    auto Y = [&](int i) { return b.in(i); };
    auto Z = [&](int i) { return b.in(14 + i); };
    std::vector<int> terms;
    for (int i = 1; i <= 13; i += 2) terms.push_back(b.AND(Y(i), Y(i + 1)));
    terms.push_back(b.and_chain({Z(1), Z(2), Z(3), Z(4)}));
    terms.push_back(b.and_chain({Z(5), Z(6), Z(7)}));
    terms.push_back(b.and_chain({Z(8), Z(9), Z(10)}));
    return b.finish(b.xor_chain(terms));
}

Circuit circuit_grain128a_h() {
    CircuitBuilder b(9);
    auto Y = [&](int i) { return b.in(i); };
    std::vector<int> terms;
    for (int i = 1; i <= 7; i += 2) terms.push_back(b.AND(Y(i), Y(i + 1)));
    terms.push_back(b.and_chain({Y(1), Y(5), Y(9)}));
    return b.finish(b.xor_chain(terms));
}

// ---- bundle assembly ----------------------------------------------------

FunctionBundle make_h2k(int k) {
    if (k < 1 || k > 32) throw std::invalid_argument("h2k: k out of range [1,32]");
    FunctionBundle f;
    f.name = "h" + std::to_string(2 * k);
    f.n = 2 * k;
    f.family = FunFamily::H2k;
    f.anf = AnfPoly(f.n, anf_h2k(k, 0));
    f.circuit = circuit_h2k(k);
    f.claimed.degree = k;
    f.claimed.resiliency = -1;
    if (k < 32) {
        f.claimed.nl = (std::int64_t(1) << (2 * k - 1)) - (std::int64_t(1) << (k - 1));
        f.claimed.lb = Dyadic::make(1, k);
    }
    f.claimed.gates = (k == 1) ? GateCount{1, 0, 1} : GateCount{0, k, 2 * k - 2};
    return f;
}

FunctionBundle make_h5p2k(int k) {
    if (k < 1 || k > 29) throw std::invalid_argument("h5p2k: k out of range [1,29]");
    FunctionBundle f;
    f.name = "h" + std::to_string(5 + 2 * k);
    f.n = 5 + 2 * k;
    f.family = FunFamily::H5p2k;
    std::vector<std::uint64_t> ms = anf_h5(0);
    for (std::uint64_t m : anf_h2k(k, 5)) ms.push_back(m);
    f.anf = AnfPoly(f.n, std::move(ms));
    f.circuit = circuit_h5p2k(k);
    f.claimed.degree = std::max(3, k);
    f.claimed.resiliency = 1;
    f.claimed.nl = (std::int64_t(1) << (4 + 2 * k)) - (std::int64_t(1) << (k + 2));
    f.claimed.lb = Dyadic::make(1, k + 2);
    if (k >= 2) {
        f.claimed.gates = GateCount{0, 7 + k, 2 * k + 2};
        f.claimed.note =
            "stated xor count is one below the direct-sum construction, "
            "which needs 8+k xors";
    }
    return f;
}

FunctionBundle make_g2k(int k) {
    if (k < 6 || k > 32) throw std::invalid_argument("g2k: k out of range [6,32]");
    int k1, k2;
    triangular_split(k, k1, k2);
    FunctionBundle f;
    f.name = "g" + std::to_string(2 * k);
    f.n = 2 * k;
    f.family = FunFamily::G2k;
    f.anf = AnfPoly(f.n, anf_g2k(k));
    f.circuit = circuit_g2k(k);
    f.claimed.degree = k + k1 - k2;
    f.claimed.resiliency = -1;
    if (k < 32) {
        f.claimed.nl = (std::int64_t(1) << (2 * k - 1)) - (std::int64_t(1) << (k - 1));
        f.claimed.lb = Dyadic::make(1, k);
    }
    f.claimed.gates = GateCount{1, k + k1 - 2, 2 * (k - k1) + 1};
    return f;
}

FunctionBundle make_ek(int k) {
    if (k < 2 || k > 64) throw std::invalid_argument("triangular: k out of range [2,64]");
    int k1, k2;
    triangular_split(k, k1, k2);
    FunctionBundle f;
    f.name = "e" + std::to_string(k);
    f.n = k;
    f.family = FunFamily::Triangular;
    f.anf = AnfPoly(k, anf_ek(k, 0));
    f.circuit = circuit_ek(k);
    f.claimed.degree = k + k1 - k2;
    f.claimed.gates = GateCount{0, k1 - 1, k - k2 + k1 * (k1 - 1) / 2};
    return f;
}

FunctionBundle make_h5() {
    FunctionBundle f;
    f.name = "h5";
    f.n = 5;
    f.family = FunFamily::NamedLegacy;
    f.anf = AnfPoly(5, anf_h5(0));
    f.circuit = circuit_h5();
    f.claimed = {3, 1, 12, Dyadic::make(1, 2), AiClaimKind::Exact, 2, GateCount{0, 7, 4}, ""};
    return f;
}

FunctionBundle make_h7() {
    FunctionBundle f;
    f.name = "h7";
    f.n = 7;
    f.family = FunFamily::NamedLegacy;
    int X1 = 1, X2 = 2, X3 = 3, Z1 = 4, Z2 = 5, Z3 = 6, Z4 = 7;
    f.anf = AnfPoly(
        7, {mono({Z1, X1, X2, X3}), mono({Z1, X1, X2}), mono({Z1, X2, X3}),
            mono({Z1, X3}), mono({Z1}), mono({Z2, X1, X2, X3}), mono({Z2, X1}),
            mono({Z2, X2, X3}), mono({Z2, X2}), mono({Z2}), mono({Z3, X1}),
            mono({Z3, X2, X3}), mono({Z4, X1, X2}), mono({Z4, X2}), mono({Z4, X3})});
    f.circuit = circuit_h7();
    f.claimed = {4, 1, 56, Dyadic::make(1, 3), AiClaimKind::Exact, 3, GateCount{2, 9, 8}, ""};
    return f;
}

FunctionBundle make_g10() {
    FunctionBundle f;
    f.name = "g10";
    f.n = 10;
    f.family = FunFamily::NamedLegacy;
    std::vector<std::uint64_t> ms;
    for (int i = 1; i <= 5; ++i) ms.push_back(mono({i, 5 + i}));
    ms.push_back(mono({1, 2, 3, 4, 6, 7, 8}));
    ms.push_back(mono({1, 2, 9, 10}));
    ms.push_back(mono({3, 4, 10}));
    f.anf = AnfPoly(10, std::move(ms));
    f.circuit = circuit_g10();
    f.claimed = {7, -1, 492, Dyadic::make(5, 7), AiClaimKind::Exact, 4, GateCount{1, 6, 10},
                 "stated tally is not met by the published rewriting (which needs "
                 "1N+6X+11A); the shipped circuit uses 0N+7X+10A, same total"};
    return f;
}

FunctionBundle make_f10() {
    FunctionBundle f;
    f.name = "f10";
    f.n = 10;
    f.family = FunFamily::NamedLegacy;
    std::vector<std::uint64_t> ms;
    for (int i = 1; i <= 5; ++i) ms.push_back(mono({i, 5 + i}));
    ms.push_back(mono({1, 2, 3, 4, 6, 7, 8, 9}));
    ms.push_back(mono({1, 2, 9, 10}));
    f.anf = AnfPoly(10, std::move(ms));
    f.circuit = circuit_f10();
    f.claimed = {8, -1, 494, Dyadic::make(9, 8), AiClaimKind::Exact, 3, std::nullopt, ""};
    return f;
}

FunctionBundle make_grainv1_g() {
    FunctionBundle f;
    f.name = "grainv1_g";
    f.n = 10;
    f.family = FunFamily::NamedLegacy;
    f.anf = AnfPoly(
        10, {mono({1}), mono({3}), mono({4}), mono({5}), mono({6}), mono({7}),
             mono({8}), mono({9}), mono({9, 10}), mono({5, 6}), mono({1, 2}),
             mono({7, 8, 9}), mono({3, 4, 5}), mono({1, 4, 7, 10}),
             mono({5, 6, 8, 9}), mono({2, 3, 9, 10}), mono({6, 7, 8, 9, 10}),
             mono({1, 2, 3, 4, 5}), mono({3, 4, 5, 6, 7, 8})});
    f.circuit = circuit_grainv1_g();
    f.claimed = {6, -1, 430, Dyadic::make(41, 8), AiClaimKind::Exact, 4,
                 GateCount{6, 12, 17}, ""};
    return f;
}

FunctionBundle make_grainv1_h() {
    FunctionBundle f;
    f.name = "grainv1_h";
    f.n = 5;
    f.family = FunFamily::NamedLegacy;
    f.anf = AnfPoly(5, {mono({2}), mono({5}), mono({1, 4}), mono({3, 4}), mono({4, 5}),
                        mono({1, 2, 3}), mono({1, 3, 4}), mono({1, 3, 5}),
                        mono({2, 3, 5}), mono({3, 4, 5})});
    f.circuit = circuit_grainv1_h();
    f.claimed = {3, 1, 12, Dyadic::make(1, 2), AiClaimKind::Exact, 2, GateCount{1, 7, 6}, ""};
    return f;
}

FunctionBundle make_grain128a_g() {
    FunctionBundle f;
    f.name = "grain128a_g";
    f.n = 24;
    f.family = FunFamily::NamedLegacy;
    std::vector<std::uint64_t> ms;
    for (int i = 1; i <= 13; i += 2) ms.push_back(mono({i, i + 1}));
    ms.push_back(mono({15, 16, 17, 18}));
    ms.push_back(mono({19, 20, 21}));
    ms.push_back(mono({22, 23, 24}));
    f.anf = AnfPoly(24, std::move(ms));
    f.circuit = circuit_grain128a_g();
    f.claimed = {4, -1, 8356352, Dyadic::make(63, 14), AiClaimKind::UpperBound, 4,
                 GateCount{0, 9, 14}, ""};
    return f;
}

FunctionBundle make_grain128a_h() {
    FunctionBundle f;
    f.name = "grain128a_h";
    f.n = 9;
    f.family = FunFamily::NamedLegacy;
    std::vector<std::uint64_t> ms;
    for (int i = 1; i <= 7; i += 2) ms.push_back(mono({i, i + 1}));
    ms.push_back(mono({1, 5, 9}));
    f.anf = AnfPoly(9, std::move(ms));
    f.circuit = circuit_grain128a_h();
    f.claimed = {3, -1, 240, Dyadic::make(1, 4), AiClaimKind::Exact, 3, GateCount{0, 4, 6}, ""};
    return f;
}

}  // namespace

FunctionBundle build_function(const std::string& name) {
    if (name == "h5") return make_h5();
    if (name == "h7") return make_h7();
    if (name == "h10") {
        FunctionBundle f = make_h2k(5);
        f.claimed.ai_kind = AiClaimKind::Exact;
        f.claimed.ai = 3;
        f.claimed.gates = GateCount{0, 5, 8};
        return f;
    }
    if (name == "h15") {
        FunctionBundle f = make_h5p2k(5);
        f.claimed.ai_kind = AiClaimKind::Exact;
        f.claimed.ai = 4;
        return f;
    }
    if (name == "h19") {
        FunctionBundle f = make_h5p2k(7);
        f.claimed.ai_kind = AiClaimKind::Exact;
        f.claimed.ai = 4;
        return f;
    }
    if (name == "g10") return make_g10();
    if (name == "f10") return make_f10();
    if (name == "g24") {
        FunctionBundle f = make_g2k(12);
        f.claimed.ai_kind = AiClaimKind::LowerBound;
        f.claimed.ai = 4;
        return f;
    }
    if (name == "g30") {
        FunctionBundle f = make_g2k(15);
        f.claimed.ai_kind = AiClaimKind::LowerBound;
        f.claimed.ai = 5;
        f.claimed.gates = GateCount{1, 19, 21};
        f.claimed.note =
            "stated tally has one more xor than the construction, which needs "
            "1N+18X+21A";
        return f;
    }
    if (name == "g36") {
        FunctionBundle f = make_g2k(18);
        f.claimed.ai_kind = AiClaimKind::LowerBound;
        f.claimed.ai = 5;
        f.claimed.gates = GateCount{1, 22, 27};
        f.claimed.note =
            "stated tally has one more xor than the construction, which needs "
            "1N+21X+27A; the source also asserts immunity >= 6 but the "
            "18-variable triangular part has immunity exactly 5, so only >= 5 "
            "is recorded";
        return f;
    }
    if (name == "e12") return make_ek(12);
    if (name == "e15") return make_ek(15);
    if (name == "e18") return make_ek(18);
    if (name == "grainv1_g") return make_grainv1_g();
    if (name == "grainv1_h") return make_grainv1_h();
    if (name == "grain128a_g") return make_grain128a_g();
    if (name == "grain128a_h") return make_grain128a_h();
    // Parametric names outside the fixed registry: h<n> (even n, or odd
    // n >= 9), g<2k> (k >= 6), e<k>.
    if (name.size() >= 2 && (name[0] == 'h' || name[0] == 'g' || name[0] == 'e')) {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            digits = digits && name[i] >= '0' && name[i] <= '9';
        if (digits) {
            int n = std::stoi(name.substr(1));
            if (name[0] == 'h' && n >= 2 && n % 2 == 0) return make_h2k(n / 2);
            if (name[0] == 'h' && n >= 9 && n % 2 == 1) return make_h5p2k((n - 5) / 2);
            if (name[0] == 'g' && n >= 12 && n % 2 == 0) return make_g2k(n / 2);
            if (name[0] == 'e' && n >= 2) return make_ek(n);
        }
    }
    throw std::invalid_argument("unknown function name: " + name);
}

FunctionBundle build_function(const FunctionSpec& spec) {
    if (!spec.name.empty()) return build_function(spec.name);
    switch (spec.family) {
        case FunFamily::H2k: return make_h2k(spec.k);
        case FunFamily::H5p2k: return make_h5p2k(spec.k);
        case FunFamily::G2k: return make_g2k(spec.k);
        case FunFamily::Triangular: return make_ek(spec.k);
        default: throw std::invalid_argument("build_function: name or parametric family required");
    }
}

std::vector<std::string> function_registry() {
    return {"h5",  "h7",  "h10", "h15", "h19", "g10", "f10", "g24", "g30",
            "g36", "e12", "e15", "e18", "grainv1_g", "grainv1_h",
            "grain128a_g", "grain128a_h"};
}

std::int64_t mm_walsh(const TruthTable& h_part, std::uint32_t u, std::uint32_t v) {
    std::uint64_t size = h_part.size();
    if (u >= size || v >= size)
        throw std::invalid_argument("mm_walsh: mask out of range");
    int sign = h_part.bits[v] ^ (std::popcount(u & v) & 1);
    std::int64_t mag = std::int64_t(1) << h_part.n;
    return sign ? -mag : mag;
}

}  // namespace grainforge
