// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/signature.hpp>

#include <covtx/hash.hpp>

namespace covtx {

Digest32 tx_key_digest(const Point& tx_pub) {
    const Bytes32 enc = tx_pub.encode();
    return keccak256(view(enc));
}

Signature sign_digest(const Digest32& msg, const Scalar& key) {
    const Bytes64 nonce_hash = HashWriter().write(view(key.to_bytes())).write(view(msg)).sha();
    Scalar nonce = Scalar::reduce_wide(view(nonce_hash));
    // A zero nonce is astronomically unlikely; fold it to one to stay total.
    if (nonce.is_zero()) nonce = Scalar::from_u64(1);

    const Point big_r = Point::mul_base(nonce);
    const Point pub = Point::mul_base(key);
    const Bytes32 r = big_r.encode();

    const Bytes64 c_hash = HashWriter()
                               .write(view(r))
                               .write(view(pub.encode()))
                               .write(view(msg))
                               .sha();
    const Scalar c = Scalar::reduce_wide(view(c_hash));

    Signature sig;
    sig.r = r;
    sig.s = (nonce + c * key).to_bytes();
    return sig;
}

bool verify_digest(const Digest32& msg, const Signature& sig, const Point& pub) {
    const auto s = Scalar::from_bytes(sig.s);
    if (!s) return false;
    const auto big_r = Point::decode(sig.r);
    if (!big_r) return false;

    const Bytes64 c_hash = HashWriter()
                               .write(view(sig.r))
                               .write(view(pub.encode()))
                               .write(view(msg))
                               .sha();
    const Scalar c = Scalar::reduce_wide(view(c_hash));
    return Point::mul_base(*s) == *big_r + pub.mul(c);
}

}  // namespace covtx
