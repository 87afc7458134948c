// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "fe25519.hpp"

#include <cstring>

namespace covtx::detail {

namespace {

using u128 = unsigned __int128;

constexpr uint64_t kMask51 = (1ULL << 51) - 1;

uint64_t load64(const uint8_t* p) {
    uint64_t x;
    std::memcpy(&x, p, 8);
    return x;
}

// One carry pass; limbs < 2^63 in, < 2^51 + tiny spill out.
void carry(fe& h) {
    uint64_t c;
    c = h.v[0] >> 51; h.v[0] &= kMask51; h.v[1] += c;
    c = h.v[1] >> 51; h.v[1] &= kMask51; h.v[2] += c;
    c = h.v[2] >> 51; h.v[2] &= kMask51; h.v[3] += c;
    c = h.v[3] >> 51; h.v[3] &= kMask51; h.v[4] += c;
    c = h.v[4] >> 51; h.v[4] &= kMask51; h.v[0] += 19 * c;
    c = h.v[0] >> 51; h.v[0] &= kMask51; h.v[1] += c;
}

// Generic square-and-multiply over a big-endian bit scan of `exp`.
// Used only for one-time constants; hot paths use dedicated chains.
fe fe_pow(const fe& base, const uint8_t exp_le[32]) {
    fe r = fe_one;
    bool started = false;
    for (int byte = 31; byte >= 0; --byte) {
        for (int bit = 7; bit >= 0; --bit) {
            if (started) r = fe_sq(r);
            if ((exp_le[byte] >> bit) & 1) {
                if (started) r = fe_mul(r, base);
                else { r = base; started = true; }
            }
        }
    }
    return r;
}

}  // namespace

const fe fe_zero = {{0, 0, 0, 0, 0}};
const fe fe_one = {{1, 0, 0, 0, 0}};

fe fe_from_u64(uint64_t x) { return {{x & kMask51, x >> 51, 0, 0, 0}}; }

fe fe_frombytes(const uint8_t* s) {
    fe h;
    h.v[0] = load64(s) & kMask51;
    h.v[1] = (load64(s + 6) >> 3) & kMask51;
    h.v[2] = (load64(s + 12) >> 6) & kMask51;
    h.v[3] = (load64(s + 19) >> 1) & kMask51;
    h.v[4] = (load64(s + 24) >> 12) & kMask51;
    return h;
}

void fe_tobytes(uint8_t* s, const fe& f) {
    fe t = f;
    carry(t);
    carry(t);

    // q = 1 iff value >= p; fold the wraparound in and drop bit 255.
    uint64_t q = (t.v[0] + 19) >> 51;
    q = (t.v[1] + q) >> 51;
    q = (t.v[2] + q) >> 51;
    q = (t.v[3] + q) >> 51;
    q = (t.v[4] + q) >> 51;
    t.v[0] += 19 * q;
    uint64_t c;
    c = t.v[0] >> 51; t.v[0] &= kMask51; t.v[1] += c;
    c = t.v[1] >> 51; t.v[1] &= kMask51; t.v[2] += c;
    c = t.v[2] >> 51; t.v[2] &= kMask51; t.v[3] += c;
    c = t.v[3] >> 51; t.v[3] &= kMask51; t.v[4] += c;
    t.v[4] &= kMask51;

    uint64_t out[4];
    out[0] = t.v[0] | (t.v[1] << 51);
    out[1] = (t.v[1] >> 13) | (t.v[2] << 38);
    out[2] = (t.v[2] >> 26) | (t.v[3] << 25);
    out[3] = (t.v[3] >> 39) | (t.v[4] << 12);
    std::memcpy(s, out, 32);
}

fe fe_add(const fe& f, const fe& g) {
    fe h;
    for (int i = 0; i < 5; ++i) h.v[i] = f.v[i] + g.v[i];
    return h;
}

fe fe_sub(const fe& f, const fe& g) {
    // f + 8p - g keeps limbs nonnegative for any g with limbs < 2^54.
    constexpr uint64_t eight_p0 = ((1ULL << 51) - 19) << 3;
    constexpr uint64_t eight_pi = ((1ULL << 51) - 1) << 3;
    fe h;
    h.v[0] = f.v[0] + eight_p0 - g.v[0];
    for (int i = 1; i < 5; ++i) h.v[i] = f.v[i] + eight_pi - g.v[i];
    carry(h);
    return h;
}

fe fe_neg(const fe& f) { return fe_sub(fe_zero, f); }

fe fe_mul(const fe& f, const fe& g) {
    u128 r0, r1, r2, r3, r4;
    uint64_t f0 = f.v[0], f1 = f.v[1], f2 = f.v[2], f3 = f.v[3], f4 = f.v[4];
    uint64_t g0 = g.v[0], g1 = g.v[1], g2 = g.v[2], g3 = g.v[3], g4 = g.v[4];
    uint64_t g1_19 = 19 * g1, g2_19 = 19 * g2, g3_19 = 19 * g3, g4_19 = 19 * g4;

    r0 = (u128)f0 * g0 + (u128)f1 * g4_19 + (u128)f2 * g3_19 + (u128)f3 * g2_19 + (u128)f4 * g1_19;
    r1 = (u128)f0 * g1 + (u128)f1 * g0 + (u128)f2 * g4_19 + (u128)f3 * g3_19 + (u128)f4 * g2_19;
    r2 = (u128)f0 * g2 + (u128)f1 * g1 + (u128)f2 * g0 + (u128)f3 * g4_19 + (u128)f4 * g3_19;
    r3 = (u128)f0 * g3 + (u128)f1 * g2 + (u128)f2 * g1 + (u128)f3 * g0 + (u128)f4 * g4_19;
    r4 = (u128)f0 * g4 + (u128)f1 * g3 + (u128)f2 * g2 + (u128)f3 * g1 + (u128)f4 * g0;

    fe h;
    uint64_t c;
    c = (uint64_t)(r0 >> 51); h.v[0] = (uint64_t)r0 & kMask51; r1 += c;
    c = (uint64_t)(r1 >> 51); h.v[1] = (uint64_t)r1 & kMask51; r2 += c;
    c = (uint64_t)(r2 >> 51); h.v[2] = (uint64_t)r2 & kMask51; r3 += c;
    c = (uint64_t)(r3 >> 51); h.v[3] = (uint64_t)r3 & kMask51; r4 += c;
    c = (uint64_t)(r4 >> 51); h.v[4] = (uint64_t)r4 & kMask51;
    h.v[0] += 19 * c;
    c = h.v[0] >> 51; h.v[0] &= kMask51; h.v[1] += c;
    return h;
}

fe fe_sq(const fe& f) { return fe_mul(f, f); }

fe fe_invert(const fe& z) {
    // z^(p-2) = z^(2^255 - 21) via the standard addition chain.
    fe t0 = fe_sq(z);                                      // 2
    fe t1 = fe_sq(fe_sq(t0));                              // 8
    t1 = fe_mul(z, t1);                                    // 9
    t0 = fe_mul(t0, t1);                                   // 11
    fe t2 = fe_sq(t0);                                     // 22
    t1 = fe_mul(t1, t2);                                   // 2^5 - 1
    t2 = t1;
    for (int i = 0; i < 5; ++i) t2 = fe_sq(t2);
    t1 = fe_mul(t1, t2);                                   // 2^10 - 1
    t2 = t1;
    for (int i = 0; i < 10; ++i) t2 = fe_sq(t2);
    t2 = fe_mul(t2, t1);                                   // 2^20 - 1
    fe t3 = t2;
    for (int i = 0; i < 20; ++i) t3 = fe_sq(t3);
    t2 = fe_mul(t2, t3);                                   // 2^40 - 1
    for (int i = 0; i < 10; ++i) t2 = fe_sq(t2);
    t1 = fe_mul(t1, t2);                                   // 2^50 - 1
    t2 = t1;
    for (int i = 0; i < 50; ++i) t2 = fe_sq(t2);
    t2 = fe_mul(t2, t1);                                   // 2^100 - 1
    t3 = t2;
    for (int i = 0; i < 100; ++i) t3 = fe_sq(t3);
    t2 = fe_mul(t2, t3);                                   // 2^200 - 1
    for (int i = 0; i < 50; ++i) t2 = fe_sq(t2);
    t1 = fe_mul(t1, t2);                                   // 2^250 - 1
    for (int i = 0; i < 5; ++i) t1 = fe_sq(t1);
    return fe_mul(t1, t0);                                 // 2^255 - 21
}

fe fe_pow22523(const fe& z) {
    // z^(2^252 - 3).
    fe t0 = fe_sq(z);                                      // 2
    fe t1 = fe_sq(fe_sq(t0));                              // 8
    t1 = fe_mul(z, t1);                                    // 9
    t0 = fe_mul(t0, t1);                                   // 11
    t0 = fe_sq(t0);                                        // 22
    t0 = fe_mul(t1, t0);                                   // 2^5 - 1
    t1 = t0;
    for (int i = 0; i < 5; ++i) t1 = fe_sq(t1);
    t0 = fe_mul(t1, t0);                                   // 2^10 - 1
    t1 = t0;
    for (int i = 0; i < 10; ++i) t1 = fe_sq(t1);
    t1 = fe_mul(t1, t0);                                   // 2^20 - 1
    fe t2 = t1;
    for (int i = 0; i < 20; ++i) t2 = fe_sq(t2);
    t1 = fe_mul(t2, t1);                                   // 2^40 - 1
    for (int i = 0; i < 10; ++i) t1 = fe_sq(t1);
    t0 = fe_mul(t1, t0);                                   // 2^50 - 1
    t1 = t0;
    for (int i = 0; i < 50; ++i) t1 = fe_sq(t1);
    t1 = fe_mul(t1, t0);                                   // 2^100 - 1
    t2 = t1;
    for (int i = 0; i < 100; ++i) t2 = fe_sq(t2);
    t1 = fe_mul(t2, t1);                                   // 2^200 - 1
    for (int i = 0; i < 50; ++i) t1 = fe_sq(t1);
    t0 = fe_mul(t1, t0);                                   // 2^250 - 1
    t0 = fe_sq(fe_sq(t0));                                 // 2^252 - 4
    return fe_mul(t0, z);                                  // 2^252 - 3
}

bool fe_iszero(const fe& f) {
    uint8_t s[32];
    fe_tobytes(s, f);
    uint8_t acc = 0;
    for (uint8_t b : s) acc |= b;
    return acc == 0;
}

bool fe_eq(const fe& f, const fe& g) { return fe_iszero(fe_sub(f, g)); }

bool fe_isnegative(const fe& f) {
    uint8_t s[32];
    fe_tobytes(s, f);
    return s[0] & 1;
}

const fe& fe_d() {
    static const fe d = fe_mul(fe_neg(fe_from_u64(121665)), fe_invert(fe_from_u64(121666)));
    return d;
}

const fe& fe_d2() {
    static const fe d2 = fe_add(fe_d(), fe_d());
    return d2;
}

const fe& fe_sqrtm1() {
    // 2 is a non-residue mod p, so 2^((p-1)/4) squares to -1.
    // (p-1)/4 = 2^253 - 5.
    static const fe r = [] {
        uint8_t e[32];
        std::memset(e, 0xff, 32);
        e[0] = 0xfb;
        e[31] = 0x1f;
        return fe_pow(fe_from_u64(2), e);
    }();
    return r;
}

}  // namespace covtx::detail
