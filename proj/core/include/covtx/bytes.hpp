// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_BYTES_HPP
#define COVTX_BYTES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace covtx {

using Bytes8 = std::array<uint8_t, 8>;
using Bytes32 = std::array<uint8_t, 32>;
using Bytes64 = std::array<uint8_t, 64>;
using Digest32 = Bytes32;
using ByteView = std::span<const uint8_t>;

inline ByteView view(const std::vector<uint8_t>& v) { return {v.data(), v.size()}; }
template <size_t N>
ByteView view(const std::array<uint8_t, N>& a) { return {a.data(), a.size()}; }
inline ByteView view(const std::string& s) {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

template <size_t N>
std::array<uint8_t, N> xor_bytes(const std::array<uint8_t, N>& a, const std::array<uint8_t, N>& b) {
    std::array<uint8_t, N> out;
    for (size_t i = 0; i < N; ++i) out[i] = a[i] ^ b[i];
    return out;
}

std::string to_hex(ByteView data);
// Rejects odd length and non-hex characters.
std::vector<uint8_t> from_hex(const std::string& hex);

template <size_t N>
std::array<uint8_t, N> from_hex_array(const std::string& hex) {
    auto v = from_hex(hex);
    if (v.size() != N) throw std::invalid_argument("hex string has wrong length");
    std::array<uint8_t, N> out;
    std::copy(v.begin(), v.end(), out.begin());
    return out;
}

inline void store_le64(uint8_t* p, uint64_t x) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<uint8_t>(x >> (8 * i));
}
inline uint64_t load_le64(const uint8_t* p) {
    uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<uint64_t>(p[i]) << (8 * i);
    return x;
}
inline void store_le32(uint8_t* p, uint32_t x) {
    for (int i = 0; i < 4; ++i) p[i] = static_cast<uint8_t>(x >> (8 * i));
}
inline uint32_t load_le32(const uint8_t* p) {
    uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= static_cast<uint32_t>(p[i]) << (8 * i);
    return x;
}

}  // namespace covtx

#endif  // COVTX_BYTES_HPP
