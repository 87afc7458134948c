// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/stealth.hpp>

#include <covtx/hash.hpp>

#include <cstring>

namespace covtx {

namespace {

constexpr char kAmountDomain[] = {'a', 'm', 'o', 'u', 'n', 't'};

}  // namespace

Point derive_shared_secret(const Scalar& priv, const Point& pub) {
    return point_mul(priv, pub);
}

Digest32 output_secret(const Point& shared, uint64_t t) {
    std::vector<uint8_t> buf;
    buf.reserve(32 + 10);
    const Bytes32 enc = shared.encode();
    buf.insert(buf.end(), enc.begin(), enc.end());
    append_varint(buf, t);
    return keccak256(view(buf));
}

Scalar output_secret_scalar(const Point& shared, uint64_t t) {
    return scalar_from_digest(output_secret(shared, t));
}

Point stealth_address(const Point& shared, uint64_t t, const Point& spend_pub) {
    return scalar_mul_base(output_secret_scalar(shared, t)) + spend_pub;
}

Bytes8 amount_pad(const Point& shared, uint64_t t) {
    const Digest32 secret = output_secret(shared, t);
    std::vector<uint8_t> buf;
    buf.reserve(sizeof(kAmountDomain) + 32);
    buf.insert(buf.end(), kAmountDomain, kAmountDomain + sizeof(kAmountDomain));
    buf.insert(buf.end(), secret.begin(), secret.end());
    const Digest32 d = keccak256(view(buf));
    Bytes8 pad;
    std::memcpy(pad.data(), d.data(), 8);
    return pad;
}

Bytes8 mask_amount(uint64_t amount, const Point& shared, uint64_t t) {
    Bytes8 le;
    store_le64(le.data(), amount);
    return xor_bytes(le, amount_pad(shared, t));
}

uint64_t unmask_amount(const Bytes8& masked, const Point& shared, uint64_t t) {
    const Bytes8 le = xor_bytes(masked, amount_pad(shared, t));
    return load_le64(le.data());
}

uint64_t random_amount(Rng& rng) {
    return rng.uniform(1'000'000'000'000ULL) + 1;
}

Transaction build_normal_tx(Rng& rng, const KeyQuad& sender, const Point& recipient_view_pub,
                            const Point& recipient_spend_pub, uint64_t amount, uint64_t fee) {
    const TxKeys keys = TxKeys::generate(rng);
    Transaction tx;
    tx.tx_pub = keys.tx_pub;
    tx.fee = fee;

    const Point s_recipient = derive_shared_secret(keys.tx_priv, recipient_view_pub);
    Output pay;
    pay.index = 0;
    pay.stealth_address = stealth_address(s_recipient, 0, recipient_spend_pub).encode();
    pay.masked_amount = mask_amount(amount, s_recipient, 0);
    tx.outputs.push_back(pay);

    const Point s_self = derive_shared_secret(keys.tx_priv, sender.view_pub);
    Output change;
    change.index = 1;
    change.stealth_address = stealth_address(s_self, 1, sender.spend_pub).encode();
    change.masked_amount = mask_amount(random_amount(rng), s_self, 1);
    tx.outputs.push_back(change);

    return tx;
}

std::optional<uint64_t> scan_output(const Transaction& tx, const Output& out,
                                    const Scalar& view_priv, const Point& spend_pub) {
    const Point shared = derive_shared_secret(view_priv, tx.tx_pub);
    const Bytes32 expected = stealth_address(shared, out.index, spend_pub).encode();
    if (expected != out.stealth_address) return std::nullopt;
    return unmask_amount(out.masked_amount, shared, out.index);
}

}  // namespace covtx
