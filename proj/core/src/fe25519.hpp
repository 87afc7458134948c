// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_SRC_FE25519_HPP
#define COVTX_SRC_FE25519_HPP

#include <cstdint>

namespace covtx::detail {

// Arithmetic in GF(2^255 - 19). Radix-2^51 representation: value is
// sum(v[i] << (51*i)). Limbs are not kept fully reduced between operations;
// every routine documents the bounds it tolerates. Not constant-time.
struct fe {
    uint64_t v[5];
};

extern const fe fe_zero;
extern const fe fe_one;

fe fe_from_u64(uint64_t x);

// Loads 32 little-endian bytes, ignoring bit 255.
fe fe_frombytes(const uint8_t* s);
// Stores the fully reduced value (< p) as 32 little-endian bytes.
void fe_tobytes(uint8_t* s, const fe& f);

// add/sub accept limbs < 2^53 and produce limbs < 2^54; mul/sq accept < 2^54
// and produce limbs < 2^52.
fe fe_add(const fe& f, const fe& g);
fe fe_sub(const fe& f, const fe& g);
fe fe_neg(const fe& f);
fe fe_mul(const fe& f, const fe& g);
fe fe_sq(const fe& f);

fe fe_invert(const fe& f);    // f^(p-2); returns 0 for input 0
fe fe_pow22523(const fe& f);  // f^((p-5)/8), the exponent used in square roots

bool fe_iszero(const fe& f);
bool fe_eq(const fe& f, const fe& g);
bool fe_isnegative(const fe& f);  // low bit of the reduced value

// Curve constants, computed on first use: d = -121665/121666,
// d2 = 2*d, sqrtm1 = sqrt(-1) = 2^((p-1)/4).
const fe& fe_d();
const fe& fe_d2();
const fe& fe_sqrtm1();

}  // namespace covtx::detail

#endif  // COVTX_SRC_FE25519_HPP
