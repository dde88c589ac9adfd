#include "grainforge/circuit.hpp"

#include <stdexcept>

namespace grainforge {

void Circuit::validate() const {
    if (output < 0 || output >= n + int(gates.size()))
        throw std::logic_error("circuit: output wire out of range");
    for (std::size_t i = 0; i < gates.size(); ++i) {
        int self = n + int(i);
        const Gate& g = gates[i];
        if (g.a < 0 || g.a >= self) throw std::logic_error("circuit: operand not defined earlier");
        if (g.kind != Gate::NOT && (g.b < 0 || g.b >= self))
            throw std::logic_error("circuit: operand not defined earlier");
    }
}

GateCount gate_count(const Circuit& c) {
    GateCount gc;
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case Gate::NOT: ++gc.nots; break;
            case Gate::XOR: ++gc.xors; break;
            case Gate::AND: ++gc.ands; break;
        }
    }
    return gc;
}

int eval_circuit(const Circuit& c, std::uint64_t x) {
    std::vector<std::uint8_t> w(c.n + c.gates.size());
    for (int i = 0; i < c.n; ++i) w[i] = std::uint8_t((x >> i) & 1);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        std::uint8_t v;
        switch (g.kind) {
            case Gate::NOT: v = w[g.a] ^ 1; break;
            case Gate::XOR: v = w[g.a] ^ w[g.b]; break;
            default: v = w[g.a] & w[g.b]; break;
        }
        w[c.n + i] = v;
    }
    return w[c.output];
}

TruthTable circuit_to_tt(const Circuit& c) {
    if (c.n > kMaxTableVars) throw std::invalid_argument("circuit_to_tt: too many inputs");
    TruthTable tt = TruthTable::zero(c.n);
    for (std::size_t x = 0; x < tt.bits.size(); ++x)
        tt.bits[x] = std::uint8_t(eval_circuit(c, x));
    return tt;
}

int CircuitBuilder::xor_chain(const std::vector<int>& ws) {
    if (ws.empty()) throw std::invalid_argument("xor_chain: empty");
    int acc = ws[0];
    for (std::size_t i = 1; i < ws.size(); ++i) acc = XOR(acc, ws[i]);
    return acc;
}

int CircuitBuilder::and_chain(const std::vector<int>& ws) {
    if (ws.empty()) throw std::invalid_argument("and_chain: empty");
    int acc = ws[0];
    for (std::size_t i = 1; i < ws.size(); ++i) acc = AND(acc, ws[i]);
    return acc;
}

}  // namespace grainforge
