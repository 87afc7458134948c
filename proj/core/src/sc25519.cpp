// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "sc25519.hpp"

#include <cstring>

namespace covtx::detail {

namespace {

using u128 = unsigned __int128;

// delta = l - 2^252 (125 bits); 16*delta is the negative fold constant for
// 2^256: 2^256 = 16 * 2^252 = 16*(l - delta) == -16*delta (mod l).
constexpr uint64_t kDelta0 = 0x5812631a5cf5d3edULL;
constexpr uint64_t kDelta1 = 0x14def9dea2f79cd6ULL;
constexpr uint64_t k16Delta[3] = {
    kDelta0 << 4,
    (kDelta1 << 4) | (kDelta0 >> 60),
    kDelta1 >> 60,
};

// 8-limb little-endian helpers.
int bn_cmp(const uint64_t* a, const uint64_t* b, int n) {
    for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// out = a - b, requires a >= b.
void bn_sub(uint64_t* out, const uint64_t* a, const uint64_t* b, int n) {
    uint64_t borrow = 0;
    for (int i = 0; i < n; ++i) {
        uint64_t bi = b[i] + borrow;
        uint64_t next_borrow = (bi < borrow) || (a[i] < bi);
        out[i] = a[i] - bi;
        borrow = next_borrow;
    }
}

bool bn_iszero(const uint64_t* a, int n) {
    uint64_t acc = 0;
    for (int i = 0; i < n; ++i) acc |= a[i];
    return acc == 0;
}

// Reduces an up-to-512-bit magnitude (8 limbs) mod l.
sc mod_l(const uint64_t in[8]) {
    uint64_t mag[8];
    std::memcpy(mag, in, sizeof(mag));
    bool neg = false;

    // Fold the high 256 bits: hi*2^256 + lo == lo - hi*16*delta (mod l).
    // Each pass shrinks the magnitude by ~127 bits; three passes suffice.
    while (!bn_iszero(mag + 4, 4)) {
        uint64_t lo[8] = {mag[0], mag[1], mag[2], mag[3], 0, 0, 0, 0};
        uint64_t hi[4] = {mag[4], mag[5], mag[6], mag[7]};
        uint64_t prod[8] = {};
        for (int i = 0; i < 4; ++i) {
            uint64_t carry = 0;
            for (int j = 0; j < 3; ++j) {
                u128 t = (u128)hi[i] * k16Delta[j] + prod[i + j] + carry;
                prod[i + j] = (uint64_t)t;
                carry = (uint64_t)(t >> 64);
            }
            prod[i + 3] += carry;
        }
        if (bn_cmp(prod, lo, 8) > 0) {
            bn_sub(mag, prod, lo, 8);
            neg = !neg;
        } else {
            bn_sub(mag, lo, prod, 8);
        }
    }

    uint64_t l_wide[8] = {kDelta0, kDelta1, 0, 1ULL << 60, 0, 0, 0, 0};
    while (bn_cmp(mag, l_wide, 8) >= 0) bn_sub(mag, mag, l_wide, 8);
    if (neg && !bn_iszero(mag, 8)) bn_sub(mag, l_wide, mag, 8);

    return {{mag[0], mag[1], mag[2], mag[3]}};
}

}  // namespace

const sc sc_l_value = {{kDelta0, kDelta1, 0, 1ULL << 60}};

sc sc_zero() { return {{0, 0, 0, 0}}; }

sc sc_from_u64(uint64_t x) { return {{x, 0, 0, 0}}; }

bool sc_frombytes_canonical(sc& out, const uint8_t* s) {
    sc a;
    std::memcpy(a.v, s, 32);  // little-endian host
    if (bn_cmp(a.v, sc_l_value.v, 4) >= 0) return false;
    out = a;
    return true;
}

sc sc_reduce(const uint8_t* s, int n) {
    uint64_t wide[8] = {};
    uint8_t buf[64] = {};
    if (n > 0) std::memcpy(buf, s, n);
    for (int i = 0; i < 8; ++i) {
        uint64_t limb;
        std::memcpy(&limb, buf + 8 * i, 8);
        wide[i] = limb;
    }
    return mod_l(wide);
}

void sc_tobytes(uint8_t* s, const sc& a) { std::memcpy(s, a.v, 32); }

sc sc_add(const sc& a, const sc& b) {
    // Both inputs < l < 2^253, so the sum fits in 4 limbs.
    sc r;
    uint64_t carry = 0;
    for (int i = 0; i < 4; ++i) {
        uint64_t bi = b.v[i] + carry;
        uint64_t next = (bi < carry) || (a.v[i] + bi < a.v[i]);
        r.v[i] = a.v[i] + bi;
        carry = next;
    }
    if (bn_cmp(r.v, sc_l_value.v, 4) >= 0) bn_sub(r.v, r.v, sc_l_value.v, 4);
    return r;
}

sc sc_mul(const sc& a, const sc& b) {
    uint64_t wide[8] = {};
    for (int i = 0; i < 4; ++i) {
        uint64_t carry = 0;
        for (int j = 0; j < 4; ++j) {
            u128 t = (u128)a.v[i] * b.v[j] + wide[i + j] + carry;
            wide[i + j] = (uint64_t)t;
            carry = (uint64_t)(t >> 64);
        }
        wide[i + 4] = carry;
    }
    return mod_l(wide);
}

sc sc_muladd(const sc& a, const sc& b, const sc& c) {
    return sc_add(sc_mul(a, b), c);
}

bool sc_iszero(const sc& a) { return bn_iszero(a.v, 4); }

bool sc_eq(const sc& a, const sc& b) { return bn_cmp(a.v, b.v, 4) == 0; }

}  // namespace covtx::detail
