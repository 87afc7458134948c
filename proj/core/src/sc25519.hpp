// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_SRC_SC25519_HPP
#define COVTX_SRC_SC25519_HPP

#include <cstdint>

namespace covtx::detail {

// Arithmetic mod the group order
// l = 2^252 + 27742317777372353535851937790883648493.
// Values are 4 little-endian 64-bit limbs, always canonical (< l).
struct sc {
    uint64_t v[4];
};

extern const sc sc_l_value;  // l itself, for range checks

sc sc_zero();
sc sc_from_u64(uint64_t x);

// Loads 32 little-endian bytes; returns false if the value is >= l.
bool sc_frombytes_canonical(sc& out, const uint8_t* s);
// Loads `n` (<= 64) little-endian bytes and reduces mod l.
sc sc_reduce(const uint8_t* s, int n);
void sc_tobytes(uint8_t* s, const sc& a);

sc sc_add(const sc& a, const sc& b);
sc sc_mul(const sc& a, const sc& b);
sc sc_muladd(const sc& a, const sc& b, const sc& c);  // a*b + c mod l

bool sc_iszero(const sc& a);
bool sc_eq(const sc& a, const sc& b);

}  // namespace covtx::detail

#endif  // COVTX_SRC_SC25519_HPP
