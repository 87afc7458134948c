// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "ge25519.hpp"

#include <array>
#include <cstring>
#include <stdexcept>

namespace covtx::detail {

namespace {

// Canonical encoding of the generator: y = 4/5, x even.
constexpr uint8_t kBaseBytes[32] = {
    0x58, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66,
    0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66,
    0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66, 0x66};

// p as bytes, for the y < p canonicity check.
constexpr uint8_t kFieldPrime[32] = {
    0xed, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff,
    0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff,
    0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0x7f};

bool y_is_canonical(const uint8_t s[32]) {
    // Compare s (with the sign bit masked off) against p, little-endian.
    uint8_t t[32];
    std::memcpy(t, s, 32);
    t[31] &= 0x7f;
    for (int i = 31; i >= 0; --i) {
        if (t[i] != kFieldPrime[i]) return t[i] < kFieldPrime[i];
    }
    return false;  // equal to p
}

ge_niels ge_to_niels(const ge& p) {
    fe zinv = fe_invert(p.Z);
    fe x = fe_mul(p.X, zinv);
    fe y = fe_mul(p.Y, zinv);
    return {fe_add(y, x), fe_sub(y, x), fe_mul(fe_d2(), fe_mul(x, y))};
}

// Base-point table: kBaseTable[i][j] = (j+1) * 16^i * B, i < 64, j < 15.
using BaseTable = std::array<std::array<ge_niels, 15>, 64>;

const BaseTable& base_table() {
    static const BaseTable table = [] {
        BaseTable t;
        ge window_base = ge_base();  // 16^i * B
        for (int i = 0; i < 64; ++i) {
            ge multiple = window_base;
            for (int j = 0; j < 15; ++j) {
                t[i][j] = ge_to_niels(multiple);
                multiple = ge_add(multiple, window_base);
            }
            window_base = ge_dbl(ge_dbl(ge_dbl(ge_dbl(window_base))));
        }
        return t;
    }();
    return table;
}

}  // namespace

ge ge_identity() { return {fe_zero, fe_one, fe_one, fe_zero}; }

const ge& ge_base() {
    static const ge base = [] {
        ge b;
        if (!ge_frombytes(b, kBaseBytes)) throw std::logic_error("generator decode failed");
        return b;
    }();
    return base;
}

ge ge_add(const ge& p, const ge& q) {
    fe a = fe_mul(fe_sub(p.Y, p.X), fe_sub(q.Y, q.X));
    fe b = fe_mul(fe_add(p.Y, p.X), fe_add(q.Y, q.X));
    fe c = fe_mul(fe_mul(p.T, fe_d2()), q.T);
    fe d = fe_mul(p.Z, fe_add(q.Z, q.Z));
    fe e = fe_sub(b, a);
    fe f = fe_sub(d, c);
    fe g = fe_add(d, c);
    fe h = fe_add(b, a);
    return {fe_mul(e, f), fe_mul(g, h), fe_mul(f, g), fe_mul(e, h)};
}

ge ge_madd(const ge& p, const ge_niels& q) {
    fe a = fe_mul(fe_sub(p.Y, p.X), q.ymx);
    fe b = fe_mul(fe_add(p.Y, p.X), q.ypx);
    fe c = fe_mul(q.xy2d, p.T);
    fe d = fe_add(p.Z, p.Z);
    fe e = fe_sub(b, a);
    fe f = fe_sub(d, c);
    fe g = fe_add(d, c);
    fe h = fe_add(b, a);
    return {fe_mul(e, f), fe_mul(g, h), fe_mul(f, g), fe_mul(e, h)};
}

ge ge_dbl(const ge& p) {
    fe a = fe_sq(p.X);
    fe b = fe_sq(p.Y);
    fe zz = fe_sq(p.Z);
    fe c = fe_add(zz, zz);
    fe d = fe_neg(a);
    fe xy = fe_add(p.X, p.Y);
    fe e = fe_sub(fe_sub(fe_sq(xy), a), b);
    fe g = fe_add(d, b);
    fe f = fe_sub(g, c);
    fe h = fe_sub(d, b);
    return {fe_mul(e, f), fe_mul(g, h), fe_mul(f, g), fe_mul(e, h)};
}

ge ge_neg(const ge& p) { return {fe_neg(p.X), p.Y, p.Z, fe_neg(p.T)}; }

bool ge_eq(const ge& p, const ge& q) {
    // x1/z1 == x2/z2 and y1/z1 == y2/z2, cross-multiplied.
    return fe_eq(fe_mul(p.X, q.Z), fe_mul(q.X, p.Z)) &&
           fe_eq(fe_mul(p.Y, q.Z), fe_mul(q.Y, p.Z));
}

bool ge_is_identity(const ge& p) { return fe_iszero(p.X) && fe_eq(p.Y, p.Z); }

bool ge_is_small_order(const ge& p) {
    return ge_is_identity(ge_dbl(ge_dbl(ge_dbl(p))));
}

void ge_tobytes(uint8_t s[32], const ge& p) {
    fe zinv = fe_invert(p.Z);
    fe x = fe_mul(p.X, zinv);
    fe y = fe_mul(p.Y, zinv);
    fe_tobytes(s, y);
    if (fe_isnegative(x)) s[31] |= 0x80;
}

bool ge_frombytes(ge& out, const uint8_t s[32]) {
    if (!y_is_canonical(s)) return false;
    int sign = s[31] >> 7;

    fe y = fe_frombytes(s);
    fe yy = fe_sq(y);
    fe u = fe_sub(yy, fe_one);           // y^2 - 1
    fe v = fe_add(fe_mul(yy, fe_d()), fe_one);  // d y^2 + 1

    // Candidate root x = u v^3 (u v^7)^((p-5)/8).
    fe v3 = fe_mul(fe_sq(v), v);
    fe v7 = fe_mul(fe_sq(v3), v);
    fe x = fe_mul(fe_mul(u, v3), fe_pow22523(fe_mul(u, v7)));

    fe vxx = fe_mul(v, fe_sq(x));
    if (!fe_eq(vxx, u)) {
        if (!fe_eq(vxx, fe_neg(u))) return false;  // not on the curve
        x = fe_mul(x, fe_sqrtm1());
    }

    if (fe_iszero(x)) {
        if (sign) return false;  // -0 is not a canonical encoding
    } else if (fe_isnegative(x) != (sign != 0)) {
        x = fe_neg(x);
    }

    out.X = x;
    out.Y = y;
    out.Z = fe_one;
    out.T = fe_mul(x, y);
    return true;
}

ge ge_scalarmult(const sc& k, const ge& p) {
    // Fixed 4-bit windows, most significant nibble first. Variable time.
    ge multiples[15];
    multiples[0] = p;
    for (int j = 1; j < 15; ++j) multiples[j] = ge_add(multiples[j - 1], p);

    uint8_t kb[32];
    sc_tobytes(kb, k);

    ge acc = ge_identity();
    bool started = false;
    for (int i = 63; i >= 0; --i) {
        if (started) acc = ge_dbl(ge_dbl(ge_dbl(ge_dbl(acc))));
        int nibble = (kb[i / 2] >> ((i % 2) * 4)) & 0x0f;
        if (nibble) {
            acc = ge_add(acc, multiples[nibble - 1]);
            started = true;
        }
    }
    return acc;
}

ge ge_scalarmult_base(const sc& k) {
    const BaseTable& table = base_table();
    uint8_t kb[32];
    sc_tobytes(kb, k);

    ge acc = ge_identity();
    for (int i = 0; i < 64; ++i) {
        int nibble = (kb[i / 2] >> ((i % 2) * 4)) & 0x0f;
        if (nibble) acc = ge_madd(acc, table[i][nibble - 1]);
    }
    return acc;
}

}  // namespace covtx::detail
