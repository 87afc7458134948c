// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_SRC_GE25519_HPP
#define COVTX_SRC_GE25519_HPP

#include "fe25519.hpp"
#include "sc25519.hpp"

#include <cstdint>

namespace covtx::detail {

// Curve points in extended twisted Edwards coordinates (X:Y:Z:T),
// x = X/Z, y = Y/Z, x*y = T/Z, on -x^2 + y^2 = 1 + d x^2 y^2.
struct ge {
    fe X, Y, Z, T;
};

// Precomputed affine point for mixed addition.
struct ge_niels {
    fe ypx, ymx, xy2d;  // y+x, y-x, 2d*x*y
};

ge ge_identity();
const ge& ge_base();  // the conventional generator

ge ge_add(const ge& p, const ge& q);
ge ge_madd(const ge& p, const ge_niels& q);
ge ge_dbl(const ge& p);
ge ge_neg(const ge& p);
bool ge_eq(const ge& p, const ge& q);
bool ge_is_identity(const ge& p);

// Order-8 subgroup test: true iff 8*P is the identity.
bool ge_is_small_order(const ge& p);

void ge_tobytes(uint8_t s[32], const ge& p);
// Strict decoder: rejects y >= p, off-curve values, and the non-canonical
// sign of x = 0. Does NOT reject small-order points; callers decide.
bool ge_frombytes(ge& out, const uint8_t s[32]);

ge ge_scalarmult(const sc& k, const ge& p);
ge ge_scalarmult_base(const sc& k);

}  // namespace covtx::detail

#endif  // COVTX_SRC_GE25519_HPP
