#include "grainforge/config_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "grainforge/anf_text.hpp"
#include "grainforge/funlib.hpp"

namespace grainforge {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& value, const std::string& field) {
    std::string v = trim(value);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw std::invalid_argument(field + ": expected [..] list, got '" + value + "'");
    std::vector<int> out;
    std::string body = v.substr(1, v.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw std::invalid_argument(field + ": empty list element");
        std::size_t used = 0;
        int n = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument(field + ": bad integer '" + item + "'");
        out.push_back(n);
    }
    return out;
}

int parse_int(const std::string& value, const std::string& field) {
    std::string v = trim(value);
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(v, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(field + ": bad integer '" + value + "'");
    }
    if (used != v.size()) throw std::invalid_argument(field + ": bad integer '" + value + "'");
    return n;
}

// Mechanical circuit for an inline definition: an AND chain per monomial and
// one XOR chain over the monomials; the constant term becomes a final NOT.
Circuit synthesize_circuit(const AnfPoly& anf) {
    int n = std::max(anf.n, 1);
    CircuitBuilder b(n);
    bool constant_one = false;
    std::vector<int> terms;
    for (std::uint64_t mono : anf.monomials) {
        if (mono == 0) {
            constant_one = true;
            continue;
        }
        std::vector<int> vars;
        for (int i = 0; i < 64; ++i)
            if ((mono >> i) & 1) vars.push_back(b.in(i + 1));
        terms.push_back(b.and_chain(vars));
    }
    int out;
    if (terms.empty())
        out = b.XOR(b.in(1), b.in(1));  // constant 0
    else
        out = b.xor_chain(terms);
    if (constant_one) out = b.NOT(out);
    return b.finish(out);
}

FunctionBundle parse_function(const std::string& value, const std::string& field) {
    std::string v = trim(value);
    // A registry name never parses as a polynomial, and vice versa.
    try {
        return build_function(v);
    } catch (const std::exception&) {
    }
    AnfPoly anf;
    try {
        anf = parse_anf(v);
    } catch (const std::exception& e) {
        throw std::invalid_argument(field + ": '" + v +
                                    "' is neither a known function name nor a polynomial (" +
                                    e.what() + ")");
    }
    FunctionBundle f;
    f.name = field + "-inline";
    f.n = anf.n;
    f.family = FunFamily::Custom;
    f.anf = anf;
    f.circuit = synthesize_circuit(anf);
    return f;
}

std::vector<std::uint8_t> parse_bit_string(const std::string& value, const std::string& field) {
    std::vector<std::uint8_t> out;
    for (char c : trim(value)) {
        if (c == '0')
            out.push_back(0);
        else if (c == '1')
            out.push_back(1);
        else
            throw std::invalid_argument(field + ": bad bit '" + std::string(1, c) + "'");
    }
    return out;
}

std::string render_int_list(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

GrainParams parse_instance_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'field: value'");
        std::string key = trim(t.substr(0, colon));
        if (kv.count(key))
            throw std::invalid_argument("duplicate field '" + key + "'");
        kv[key] = trim(t.substr(colon + 1));
    }

    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::invalid_argument("missing field '" + key + "'");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto take_optional = [&](const std::string& key, const std::string& fallback) {
        auto it = kv.find(key);
        if (it == kv.end()) return fallback;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    GrainParams p;
    p.name = take_optional("name", "custom");
    p.kappa = parse_int(take("kappa"), "kappa");
    p.v = parse_int(take("v"), "v");
    p.kappa1 = parse_int(take("kappa1"), "kappa1");
    p.kappa2 = parse_int(take("kappa2"), "kappa2");
    p.tau = parse_int_list(take("tau"), "tau");
    p.S0 = parse_int_list(take("S0"), "S0");
    p.S1 = parse_int_list(take("S1"), "S1");
    p.P0 = parse_int_list(take("P0"), "P0");
    p.P1 = parse_int_list(take("P1"), "P1");
    p.Q0 = parse_int_list(take("Q0"), "Q0");
    p.Q1 = parse_int_list(take("Q1"), "Q1");
    p.g_bundle = parse_function(take("g"), "g");
    p.h_bundle = parse_function(take("h"), "h");
    std::string psi = take_optional("psi", "");
    if (psi.empty()) {
        p.psi.resize(p.h_bundle.n);
        for (int i = 0; i < p.h_bundle.n; ++i) p.psi[i] = i + 1;
    } else {
        p.psi = parse_int_list(psi, "psi");
    }
    std::string assembly = take_optional("assembly", "n-first");
    if (assembly == "l-first")
        p.assembly_order = AssemblyOrder::LFirst;
    else if (assembly == "n-first")
        p.assembly_order = AssemblyOrder::NFirst;
    else
        throw std::invalid_argument("assembly: expected l-first or n-first");
    std::string init = take_optional("init", "initg");
    if (init == "init1")
        p.init_variant = InitVariant::Init1;
    else if (init == "init2")
        p.init_variant = InitVariant::Init2;
    else if (init == "initg")
        p.init_variant = InitVariant::InitG;
    else
        throw std::invalid_argument("init: expected init1, init2 or initg");
    p.delta_speed = parse_int(take_optional("delta", "1"), "delta");
    p.pad = parse_bit_string(take_optional("pad", ""), "pad");
    p.max_keystream_log2 = parse_int(take_optional("max-keystream-log2", "64"),
                                     "max-keystream-log2");
    p.A = lfsr_taps_from_tau(p.tau, p.kappa2);

    if (!kv.empty())
        throw std::invalid_argument("unknown field '" + kv.begin()->first + "'");
    return p;
}

std::string render_instance_config(const GrainParams& p) {
    std::ostringstream os;
    os << "name: " << p.name << "\n";
    os << "kappa: " << p.kappa << "\n";
    os << "v: " << p.v << "\n";
    os << "kappa1: " << p.kappa1 << "\n";
    os << "kappa2: " << p.kappa2 << "\n";
    os << "tau: " << render_int_list(p.tau) << "\n";
    os << "S0: " << render_int_list(p.S0) << "\n";
    os << "S1: " << render_int_list(p.S1) << "\n";
    os << "P0: " << render_int_list(p.P0) << "\n";
    os << "P1: " << render_int_list(p.P1) << "\n";
    os << "Q0: " << render_int_list(p.Q0) << "\n";
    os << "Q1: " << render_int_list(p.Q1) << "\n";
    os << "g: "
       << (p.g_bundle.family == FunFamily::Custom ? format_anf(p.g_bundle.anf)
                                                  : p.g_bundle.name)
       << "\n";
    os << "h: "
       << (p.h_bundle.family == FunFamily::Custom ? format_anf(p.h_bundle.anf)
                                                  : p.h_bundle.name)
       << "\n";
    os << "psi: " << render_int_list(p.psi) << "\n";
    os << "assembly: "
       << (p.assembly_order == AssemblyOrder::LFirst ? "l-first" : "n-first") << "\n";
    std::string init = "initg";
    if (p.init_variant == InitVariant::Init1) init = "init1";
    if (p.init_variant == InitVariant::Init2) init = "init2";
    os << "init: " << init << "\n";
    os << "delta: " << p.delta_speed << "\n";
    std::string pad;
    for (auto b : p.pad) pad.push_back(b ? '1' : '0');
    os << "pad: " << pad << "\n";
    os << "max-keystream-log2: " << p.max_keystream_log2 << "\n";
    return os.str();
}

GrainParams load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_instance_config(os.str());
}

}  // namespace grainforge
