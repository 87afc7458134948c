// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/covert.hpp>

#include <covtx/errors.hpp>
#include <covtx/hash.hpp>

#include "cipher.hpp"

#include <cstring>

namespace covtx {

namespace {

constexpr char kAmountDomain[] = {'a', 'm', 'o', 'u', 'n', 't'};

Bytes8 signed_pad(const Point& shared, uint64_t t, const Signature& sig) {
    const Digest32 secret = output_secret(shared, t);
    const Digest32 d = HashWriter()
                           .write(ByteView(reinterpret_cast<const uint8_t*>(kAmountDomain),
                                           sizeof(kAmountDomain)))
                           .write(view(secret))
                           .write(view(sig.r))
                           .write(view(sig.s))
                           .keccak();
    Bytes8 pad;
    std::memcpy(pad.data(), d.data(), 8);
    return pad;
}

// Standard self-addressed change output at index t.
Output change_output(Rng& rng, const TxKeys& keys, const KeyQuad& self, uint32_t t) {
    const Point shared = derive_shared_secret(keys.tx_priv, self.view_pub);
    Output out;
    out.index = t;
    out.stealth_address = stealth_address(shared, t, self.spend_pub).encode();
    out.masked_amount = mask_amount(random_amount(rng), shared, t);
    return out;
}

}  // namespace

Bytes32 derive_session_key(const Point& base_key, const PeerKeys& recipient) {
    return HashWriter()
        .write(view(base_key.encode()))
        .write(view(recipient.view_pub.encode()))
        .write(view(recipient.spend_pub.encode()))
        .keccak();
}

Bytes32 encrypt_segment(const Bytes32& m, const Bytes32& key) {
    return detail::aes256ctr_block(key, m);
}

Bytes32 decrypt_segment(const Bytes32& c, const Bytes32& key) {
    return detail::aes256ctr_block(key, c);
}

Bytes8 mask_amount_signed(uint64_t amount, const Point& shared, uint64_t t,
                          const Signature& sig) {
    Bytes8 le;
    store_le64(le.data(), amount);
    return xor_bytes(le, signed_pad(shared, t, sig));
}

uint64_t unmask_amount_signed(const Bytes8& masked, const Point& shared, uint64_t t,
                              const Signature& sig) {
    const Bytes8 le = xor_bytes(masked, signed_pad(shared, t, sig));
    return load_le64(le.data());
}

AuthFieldAttempt try_auth_field(const TxKeys& keys, const Scalar& signer_view_priv,
                                const PeerKeys& addressee) {
    AuthFieldAttempt a;
    a.sig = sign_digest(tx_key_digest(keys.tx_pub), signer_view_priv);
    a.shared = derive_shared_secret(keys.tx_priv, addressee.view_pub);
    a.base_keys[0] = stealth_address(a.shared, 0, addressee.spend_pub);
    a.base_keys[1] = stealth_address(a.shared, 1, addressee.spend_pub);
    a.fields[0] = xor_bytes(a.base_keys[0].encode(), a.sig.r);
    a.fields[1] = xor_bytes(a.base_keys[1].encode(), a.sig.s);
    a.ok = Point::decode(a.fields[0]).has_value() && Point::decode(a.fields[1]).has_value();
    return a;
}

TransFieldAttempt try_trans_field(const TxKeys& keys, const Bytes32& m, uint64_t code,
                                  const PeerKeys& recipient, const Signature& sig) {
    TransFieldAttempt a;
    a.shared = derive_shared_secret(keys.tx_priv, recipient.view_pub);
    a.base_key = stealth_address(a.shared, 0, recipient.spend_pub);
    a.session_key = derive_session_key(a.base_key, recipient);
    a.field = xor_bytes(a.base_key.encode(), encrypt_segment(m, a.session_key));
    a.masked_code = mask_amount_signed(code, a.shared, 0, sig);
    a.ok = Point::decode(a.field).has_value();
    return a;
}

AuthField gen_auth_field(Rng& rng, const Scalar& signer_view_priv, const PeerKeys& addressee,
                         size_t retry_budget) {
    for (size_t i = 0; i < retry_budget; ++i) {
        AuthField f;
        f.keys = TxKeys::generate(rng);
        f.attempt = try_auth_field(f.keys, signer_view_priv, addressee);
        f.draws = static_cast<uint32_t>(i + 1);
        if (f.attempt.ok) return f;
    }
    throw RetryExhausted(retry_budget);
}

TransField gen_trans_field(Rng& rng, const Bytes32& m, uint32_t seq, bool is_final,
                           const PeerKeys& recipient, const Signature& sig,
                           size_t retry_budget) {
    for (size_t i = 0; i < retry_budget; ++i) {
        TransField f;
        f.keys = TxKeys::generate(rng);
        f.code = encode_amount(seq, is_final, rng);
        f.attempt = try_trans_field(f.keys, m, f.code, recipient, sig);
        f.draws = static_cast<uint32_t>(i + 1);
        if (f.attempt.ok) return f;
    }
    throw RetryExhausted(retry_budget);
}

FbField gen_fb_field(Rng& rng, const Scalar& responder_view_priv, const PeerKeys& originator,
                     uint32_t missing_seq, size_t retry_budget) {
    FbField f;
    f.auth = gen_auth_field(rng, responder_view_priv, originator, retry_budget);
    if (missing_seq > 0) {
        const uint64_t code = encode_amount(missing_seq, /*is_final=*/true, rng);
        f.masked_code = mask_amount_signed(code, f.auth.attempt.shared, 0, f.auth.attempt.sig);
    }
    return f;
}

AuthTxResult build_auth_tx(Rng& rng, const KeyQuad& sender, const PeerKeys& recipient,
                           uint64_t fee, size_t retry_budget) {
    const AuthField f = gen_auth_field(rng, sender.view_priv, recipient, retry_budget);

    AuthTxResult result;
    result.sig = f.attempt.sig;
    result.draws = f.draws;
    result.tx.tx_pub = f.keys.tx_pub;
    result.tx.fee = fee;
    for (uint32_t t = 0; t < 2; ++t) {
        Output out;
        out.index = t;
        out.stealth_address = f.attempt.fields[t];
        out.masked_amount = mask_amount(random_amount(rng), f.attempt.shared, t);
        result.tx.outputs.push_back(out);
    }
    result.tx.outputs.push_back(change_output(rng, f.keys, sender, 2));
    return result;
}

TransTxResult build_trans_tx(Rng& rng, const KeyQuad& sender, const PeerKeys& recipient,
                             const Bytes32& m, uint32_t seq, bool is_final, const Signature& sig,
                             uint64_t fee, size_t retry_budget) {
    const TransField f = gen_trans_field(rng, m, seq, is_final, recipient, sig, retry_budget);

    TransTxResult result;
    result.draws = f.draws;
    result.tx.tx_pub = f.keys.tx_pub;
    result.tx.fee = fee;
    Output out;
    out.index = 0;
    out.stealth_address = f.attempt.field;
    out.masked_amount = f.attempt.masked_code;
    result.tx.outputs.push_back(out);
    result.tx.outputs.push_back(change_output(rng, f.keys, sender, 1));
    return result;
}

FbTxResult build_fb_tx(Rng& rng, const KeyQuad& responder, const PeerKeys& originator,
                       uint32_t missing_seq, uint64_t fee, size_t retry_budget) {
    const FbField f = gen_fb_field(rng, responder.view_priv, originator, missing_seq,
                                   retry_budget);

    FbTxResult result;
    result.draws = f.auth.draws;
    result.tx.tx_pub = f.auth.keys.tx_pub;
    result.tx.fee = fee;
    for (uint32_t t = 0; t < 2; ++t) {
        Output out;
        out.index = t;
        out.stealth_address = f.auth.attempt.fields[t];
        if (t == 0 && f.masked_code)
            out.masked_amount = *f.masked_code;
        else
            out.masked_amount = mask_amount(random_amount(rng), f.auth.attempt.shared, t);
        result.tx.outputs.push_back(out);
    }
    result.tx.outputs.push_back(change_output(rng, f.auth.keys, responder, 2));
    return result;
}

std::optional<AuthInfo> extract_auth(const Transaction& tx, const KeyQuad& self,
                                     std::span<const Point> candidate_view_pubs) {
    if (tx.outputs.size() < 3) return std::nullopt;

    const Point shared = derive_shared_secret(self.view_priv, tx.tx_pub);
    Signature sig;
    sig.r = xor_bytes(tx.outputs[0].stealth_address,
                      stealth_address(shared, 0, self.spend_pub).encode());
    sig.s = xor_bytes(tx.outputs[1].stealth_address,
                      stealth_address(shared, 1, self.spend_pub).encode());

    const Digest32 msg = tx_key_digest(tx.tx_pub);
    for (size_t i = 0; i < candidate_view_pubs.size(); ++i) {
        if (verify_digest(msg, sig, candidate_view_pubs[i]))
            return AuthInfo{i, candidate_view_pubs[i], sig};
    }
    return std::nullopt;
}

std::optional<Segment> extract_segment(const Transaction& tx, const KeyQuad& self,
                                       const Signature& sig) {
    if (tx.outputs.size() < 2) return std::nullopt;

    const Point shared = derive_shared_secret(self.view_priv, tx.tx_pub);
    const Point base_key = stealth_address(shared, 0, self.spend_pub);
    const Bytes32 base_enc = base_key.encode();

    // An untouched one-time key means a plain payment, not a carrier.
    if (tx.outputs[0].stealth_address == base_enc) return std::nullopt;

    const uint64_t a = unmask_amount_signed(tx.outputs[0].masked_amount, shared, 0, sig);
    const auto code = decode_amount(a);
    if (!code) return std::nullopt;

    Segment seg;
    seg.seq = code->seq;
    seg.is_final = code->is_final();
    const Bytes32 c = xor_bytes(tx.outputs[0].stealth_address, base_enc);
    seg.m = decrypt_segment(c, derive_session_key(base_key, peer_keys(self)));
    return seg;
}

std::optional<Feedback> parse_feedback(const Transaction& tx, const KeyQuad& self,
                                       const Point& responder_view_pub) {
    const Point candidates[1] = {responder_view_pub};
    const auto auth = extract_auth(tx, self, candidates);
    if (!auth) return std::nullopt;

    const Point shared = derive_shared_secret(self.view_priv, tx.tx_pub);
    const uint64_t a = unmask_amount_signed(tx.outputs[0].masked_amount, shared, 0, auth->sig);
    const auto code = decode_amount(a);
    // A parsable final-flagged control word names the lowest missing segment;
    // anything else in the amount slot is the completion signal.
    if (code && code->flag == 0 && code->seq >= 1) return Feedback{Nack{code->seq}};
    return Feedback{Ack{}};
}

}  // namespace covtx
