// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_GROUP_HPP
#define COVTX_GROUP_HPP

#include <covtx/bytes.hpp>
#include <covtx/hash.hpp>
#include <covtx/rng.hpp>

#include <optional>

namespace covtx {

// Scalar mod the prime group order l = 2^252 + 27742...3493. Always canonical.
class Scalar {
  public:
    Scalar();  // zero

    // Strict parse of 32 little-endian bytes; nullopt if the value is >= l.
    static std::optional<Scalar> from_bytes(const Bytes32& b);
    // Little-endian bytes (up to 64) reduced mod l.
    static Scalar reduce_wide(ByteView b);
    static Scalar from_u64(uint64_t x);
    // Uniform nonzero scalar: 64 RNG bytes reduced mod l, redrawn on zero.
    static Scalar random(Rng& rng);

    Bytes32 to_bytes() const;
    bool is_zero() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);

    // Opaque limb storage; layout asserted against the arithmetic backend.
    struct Repr {
        uint64_t v[4];
    };

  private:
    Repr r_;
    friend class Point;
};

// Point on the Edwards curve, including the identity and the seven other
// small-order points (they can be produced by arithmetic and by decode of
// attacker-supplied strings; the strict decoder below refuses them).
class Point {
  public:
    Point();  // identity
    static const Point& base();

    // Validity predicate for 32-byte strings: accepts canonical encodings of
    // curve points outside the order-8 subgroup, rejects everything else.
    // Roughly half of uniform strings are valid, which is what the embedding
    // retry loops rely on.
    static std::optional<Point> decode(const Bytes32& b);

    Bytes32 encode() const;

    bool is_identity() const;
    bool is_small_order() const;

    Point operator-() const;
    friend Point operator+(const Point& a, const Point& b);
    friend bool operator==(const Point& a, const Point& b);

    // Total scalar multiplications (accept zero); the checked spec-surface
    // wrappers below are what protocol code uses.
    static Point mul_base(const Scalar& k);
    Point mul(const Scalar& k) const;

    // Opaque coordinate storage; layout asserted against the arithmetic backend.
    struct Repr {
        uint64_t x[5], y[5], z[5], t[5];
    };

  private:
    Repr r_;
};

// k*G; rejects k = 0 (keys and nonces are never zero).
Point scalar_mul_base(const Scalar& k);
// k*P; rejects k = 0 and small-order P (degenerate Diffie-Hellman inputs).
Point point_mul(const Scalar& k, const Point& p);

// keccak256(x) interpreted as a little-endian integer, reduced mod l.
Scalar hash_to_scalar(ByteView data);
Scalar scalar_from_digest(const Digest32& d);

}  // namespace covtx

#endif  // COVTX_GROUP_HPP
