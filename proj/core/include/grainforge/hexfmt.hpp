#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grainforge {

// Hex <-> bit-sequence convention used for keys, IVs and keystream: hex byte
// j (characters 2j, 2j+1) carries logical bits 8j..8j+7 with bit 8j at the
// byte's least significant position.

// Requires an even number of hex digits; case-insensitive.
std::vector<std::uint8_t> hex_to_bits(const std::string& hex);

// As above, then truncated/validated to exactly nbits: the string must encode
// ceil(nbits/8) bytes and any excess bits must be zero.
std::vector<std::uint8_t> hex_to_bits(const std::string& hex, std::size_t nbits);

// Inverse; a partial final byte is zero-padded.
std::string bits_to_hex(const std::vector<std::uint8_t>& bits);

}  // namespace grainforge
