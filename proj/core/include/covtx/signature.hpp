// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_SIGNATURE_HPP
#define COVTX_SIGNATURE_HPP

#include <covtx/bytes.hpp>
#include <covtx/group.hpp>

namespace covtx {

// Schnorr signature over the edwards25519 group. Both halves are uniform-ish
// 32-byte strings: r encodes a group element, s a canonical scalar.
struct Signature {
    Bytes32 r{};
    Bytes32 s{};

    bool operator==(const Signature&) const = default;
};

// Message bound by covert signatures: the hash of the published tx key.
Digest32 tx_key_digest(const Point& tx_pub);

// Deterministic signature with the raw scalar as the secret:
//   nonce = sha512(key || msg) mod l, R = nonce*G,
//   c = sha512(enc(R) || enc(key*G) || msg) mod l, s = nonce + c*key.
Signature sign_digest(const Digest32& msg, const Scalar& key);

// Accepts iff s is canonical, r decodes to a usable point and
// s*G == R + c*pub. Rejects garbage bytes in either half.
bool verify_digest(const Digest32& msg, const Signature& sig, const Point& pub);

}  // namespace covtx

#endif  // COVTX_SIGNATURE_HPP
