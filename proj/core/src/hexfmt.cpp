#include "grainforge/hexfmt.hpp"

#include <stdexcept>

namespace grainforge {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
}

}  // namespace

std::vector<std::uint8_t> hex_to_bits(const std::string& hex) {
    if (hex.size() % 2) throw std::invalid_argument("hex string must have even length");
    std::vector<std::uint8_t> bits;
    bits.reserve(hex.size() * 4);
    for (std::size_t j = 0; j * 2 < hex.size(); ++j) {
        int v = hex_digit(hex[2 * j]) * 16 + hex_digit(hex[2 * j + 1]);
        for (int k = 0; k < 8; ++k) bits.push_back(std::uint8_t((v >> k) & 1));
    }
    return bits;
}

std::vector<std::uint8_t> hex_to_bits(const std::string& hex, std::size_t nbits) {
    std::vector<std::uint8_t> bits = hex_to_bits(hex);
    if (bits.size() != (nbits + 7) / 8 * 8)
        throw std::invalid_argument("hex string encodes " + std::to_string(bits.size()) +
                                    " bits, expected " + std::to_string(nbits));
    for (std::size_t i = nbits; i < bits.size(); ++i)
        if (bits[i]) throw std::invalid_argument("nonzero bits beyond position " +
                                                 std::to_string(nbits));
    bits.resize(nbits);
    return bits;
}

std::string bits_to_hex(const std::vector<std::uint8_t>& bits) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::size_t j = 0; j * 8 < bits.size(); ++j) {
        int v = 0;
        for (int k = 0; k < 8; ++k) {
            std::size_t i = j * 8 + k;
            if (i < bits.size() && bits[i]) v |= 1 << k;
        }
        out.push_back(digits[v >> 4]);
        out.push_back(digits[v & 15]);
    }
    return out;
}

}  // namespace grainforge
