// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/group.hpp>

#include <covtx/errors.hpp>

#include "ge25519.hpp"
#include "sc25519.hpp"

#include <cstring>

namespace covtx {

using detail::ge;
using detail::sc;

// Scalar <-> detail bridging. The public Repr mirrors detail::sc exactly.
static_assert(sizeof(Scalar::Repr) == sizeof(sc));

namespace {
sc to_sc(const Scalar::Repr& r) {
    sc s;
    std::memcpy(&s, &r, sizeof(s));
    return s;
}

Scalar::Repr from_sc(const sc& s) {
    Scalar::Repr r;
    std::memcpy(&r, &s, sizeof(r));
    return r;
}
}  // namespace

Scalar::Scalar() : r_{{0, 0, 0, 0}} {}

std::optional<Scalar> Scalar::from_bytes(const Bytes32& b) {
    sc s;
    if (!detail::sc_frombytes_canonical(s, b.data())) return std::nullopt;
    Scalar out;
    out.r_ = from_sc(s);
    return out;
}

Scalar Scalar::reduce_wide(ByteView b) {
    if (b.size() > 64) throw UsageError("reduce_wide input exceeds 64 bytes");
    Scalar out;
    out.r_ = from_sc(detail::sc_reduce(b.data(), static_cast<int>(b.size())));
    return out;
}

Scalar Scalar::from_u64(uint64_t x) {
    Scalar out;
    out.r_ = from_sc(detail::sc_from_u64(x));
    return out;
}

Scalar Scalar::random(Rng& rng) {
    for (;;) {
        auto wide = rng.bytes(64);
        Scalar s = reduce_wide(view(wide));
        if (!s.is_zero()) return s;
    }
}

Bytes32 Scalar::to_bytes() const {
    Bytes32 b;
    detail::sc_tobytes(b.data(), to_sc(r_));
    return b;
}

bool Scalar::is_zero() const { return detail::sc_iszero(to_sc(r_)); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar out;
    out.r_ = from_sc(detail::sc_add(to_sc(a.r_), to_sc(b.r_)));
    return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    out.r_ = from_sc(detail::sc_mul(to_sc(a.r_), to_sc(b.r_)));
    return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return detail::sc_eq(to_sc(a.r_), to_sc(b.r_));
}

// Point <-> detail bridging. The public Repr mirrors detail::ge exactly.
static_assert(sizeof(Point::Repr) == sizeof(ge));

namespace {
ge to_ge(const Point::Repr& r) {
    ge g;
    std::memcpy(&g, &r, sizeof(g));
    return g;
}

Point::Repr from_ge(const ge& g) {
    Point::Repr r;
    std::memcpy(&r, &g, sizeof(r));
    return r;
}
}  // namespace

Point::Point() : r_(from_ge(detail::ge_identity())) {}

const Point& Point::base() {
    static const Point b = [] {
        Point p;
        p.r_ = from_ge(detail::ge_base());
        return p;
    }();
    return b;
}

std::optional<Point> Point::decode(const Bytes32& b) {
    ge g;
    if (!detail::ge_frombytes(g, b.data())) return std::nullopt;
    if (detail::ge_is_small_order(g)) return std::nullopt;
    Point p;
    p.r_ = from_ge(g);
    return p;
}

Bytes32 Point::encode() const {
    Bytes32 b;
    detail::ge_tobytes(b.data(), to_ge(r_));
    return b;
}

bool Point::is_identity() const { return detail::ge_is_identity(to_ge(r_)); }

bool Point::is_small_order() const { return detail::ge_is_small_order(to_ge(r_)); }

Point Point::operator-() const {
    Point p;
    p.r_ = from_ge(detail::ge_neg(to_ge(r_)));
    return p;
}

Point operator+(const Point& a, const Point& b) {
    Point p;
    p.r_ = from_ge(detail::ge_add(to_ge(a.r_), to_ge(b.r_)));
    return p;
}

bool operator==(const Point& a, const Point& b) {
    return detail::ge_eq(to_ge(a.r_), to_ge(b.r_));
}

Point Point::mul_base(const Scalar& k) {
    Point p;
    p.r_ = from_ge(detail::ge_scalarmult_base(to_sc(k.r_)));
    return p;
}

Point Point::mul(const Scalar& k) const {
    Point p;
    p.r_ = from_ge(detail::ge_scalarmult(to_sc(k.r_), to_ge(r_)));
    return p;
}

Point scalar_mul_base(const Scalar& k) {
    if (k.is_zero()) throw UsageError("scalar_mul_base: scalar must be in [1, l)");
    return Point::mul_base(k);
}

Point point_mul(const Scalar& k, const Point& p) {
    if (k.is_zero()) throw UsageError("point_mul: scalar must be in [1, l)");
    if (p.is_small_order()) throw UsageError("point_mul: small-order point");
    return p.mul(k);
}

Scalar hash_to_scalar(ByteView data) {
    Digest32 d = keccak256(data);
    return Scalar::reduce_wide(view(d));
}

Scalar scalar_from_digest(const Digest32& d) { return Scalar::reduce_wide(view(d)); }

}  // namespace covtx
