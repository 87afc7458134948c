// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/hash.hpp>

#include <cstring>

namespace covtx {

namespace {

constexpr int kRounds = 24;
constexpr size_t kRate = 136;  // 1600 - 2*256 bits

constexpr uint64_t kRC[kRounds] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// Rotation offsets, indexed x + 5*y.
constexpr int kRho[25] = {
    0,  1,  62, 28, 27,  //
    36, 44, 6,  55, 20,  //
    3,  10, 43, 25, 39,  //
    41, 45, 15, 21, 8,   //
    18, 2,  61, 56, 14,  //
};

uint64_t rotl(uint64_t v, int n) { return n == 0 ? v : (v << n) | (v >> (64 - n)); }

void keccakf(uint64_t a[25]) {
    for (int round = 0; round < kRounds; ++round) {
        // theta
        uint64_t c[5], d[5];
        for (int x = 0; x < 5; ++x)
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (int x = 0; x < 5; ++x)
            d[x] = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) a[x + 5 * y] ^= d[x];

        // rho and pi
        uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = rotl(a[x + 5 * y], kRho[x + 5 * y]);

        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                a[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);

        // iota
        a[0] ^= kRC[round];
    }
}

void absorb_block(uint64_t state[25], const uint8_t* block) {
    for (size_t i = 0; i < kRate / 8; ++i) {
        uint64_t lane;
        std::memcpy(&lane, block + 8 * i, 8);  // little-endian host
        state[i] ^= lane;
    }
    keccakf(state);
}

}  // namespace

Digest32 keccak256(ByteView data) {
    uint64_t state[25] = {};
    size_t off = 0;
    while (data.size() - off >= kRate) {
        absorb_block(state, data.data() + off);
        off += kRate;
    }
    // Final block with original-Keccak multirate padding: 0x01 ... 0x80.
    uint8_t last[kRate] = {};
    size_t rem = data.size() - off;
    if (rem > 0) std::memcpy(last, data.data() + off, rem);
    last[rem] = 0x01;
    last[kRate - 1] |= 0x80;
    absorb_block(state, last);

    Digest32 out;
    std::memcpy(out.data(), state, out.size());
    return out;
}

}  // namespace covtx
