#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "grainforge/boolfn.hpp"

namespace grainforge {

// DAG of NOT/XOR/AND gates over n input wires. Wire ids: 0..n-1 are inputs,
// n+i is the output of gate i. Gates are topologically ordered by
// construction (every operand id is smaller than the gate's own wire id).
struct Gate {
    enum Kind : std::uint8_t { NOT, XOR, AND };
    Kind kind;
    int a;
    int b;  // unused for NOT
};

struct GateCount {
    int nots = 0, xors = 0, ands = 0;
    bool operator==(const GateCount& o) const {
        return nots == o.nots && xors == o.xors && ands == o.ands;
    }
    bool operator!=(const GateCount& o) const { return !(*this == o); }
};

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;
    int output = -1;  // wire id

    void validate() const;
};

GateCount gate_count(const Circuit& c);
int eval_circuit(const Circuit& c, std::uint64_t x);  // x bit i-1 = variable X_i
TruthTable circuit_to_tt(const Circuit& c);           // n <= kMaxTableVars

// Convenience builder used by funlib's hand-transcribed circuits.
class CircuitBuilder {
public:
    explicit CircuitBuilder(int n) { c_.n = n; }
    int in(int i) const { return i - 1; }  // variable X_i -> wire id
    int NOT(int a) { return emit({Gate::NOT, a, -1}); }
    int XOR(int a, int b) { return emit({Gate::XOR, a, b}); }
    int AND(int a, int b) { return emit({Gate::AND, a, b}); }
    // Left-fold XOR chain over >= 1 wires.
    int xor_chain(const std::vector<int>& ws);
    int and_chain(const std::vector<int>& ws);
    Circuit finish(int output) {
        c_.output = output;
        c_.validate();
        return c_;
    }

private:
    int emit(Gate g) {
        c_.gates.push_back(g);
        return c_.n + int(c_.gates.size()) - 1;
    }
    Circuit c_;
};

}  // namespace grainforge
