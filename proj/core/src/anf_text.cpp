#include "grainforge/anf_text.hpp"

#include <cctype>
#include <stdexcept>

namespace grainforge {

AnfPoly parse_anf(const std::string& text, int n) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(char(std::tolower(static_cast<unsigned char>(c))));
    if (s.empty()) throw std::invalid_argument("empty ANF expression");

    std::vector<std::uint64_t> monomials;
    int max_var = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        // Parse one monomial: factors separated by '*'.
        std::uint64_t mask = 0;
        bool is_zero = false;
        for (;;) {
            if (i >= s.size()) throw std::invalid_argument("ANF: unexpected end of input");
            if (s[i] == '1') {
                ++i;  // constant factor, multiplicative identity
            } else if (s[i] == '0') {
                ++i;
                is_zero = true;
            } else if (s[i] == 'x') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw std::invalid_argument("ANF: variable index expected after 'x'");
                int idx = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    idx = idx * 10 + (s[i] - '0');
                    if (idx > 64) throw std::invalid_argument("ANF: variable index out of range");
                    ++i;
                }
                if (idx < 1) throw std::invalid_argument("ANF: variable index must be >= 1");
                mask |= std::uint64_t(1) << (idx - 1);
                max_var = std::max(max_var, idx);
            } else {
                throw std::invalid_argument(std::string("ANF: unexpected character '") + s[i] + "'");
            }
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!is_zero) monomials.push_back(mask);
        if (i < s.size()) {
            if (s[i] != '+') throw std::invalid_argument("ANF: expected '+' between monomials");
            ++i;
            if (i >= s.size()) throw std::invalid_argument("ANF: trailing '+'");
        }
    }
    if (n == 0) n = std::max(max_var, 1);
    if (max_var > n) throw std::invalid_argument("ANF: variable index exceeds declared n");
    return AnfPoly(n, std::move(monomials));
}

std::string format_anf(const AnfPoly& anf) {
    if (anf.monomials.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < anf.monomials.size(); ++i) {
        if (i) out += " + ";
        std::uint64_t m = anf.monomials[i];
        if (m == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (int v = 0; v < 64; ++v) {
            if ((m >> v) & 1) {
                if (!first) out += "*";
                out += "x" + std::to_string(v + 1);
                first = false;
            }
        }
    }
    return out;
}

}  // namespace grainforge
