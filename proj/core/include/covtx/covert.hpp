// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_COVERT_HPP
#define COVTX_COVERT_HPP

#include <covtx/amount_code.hpp>
#include <covtx/keys.hpp>
#include <covtx/signature.hpp>
#include <covtx/stealth.hpp>
#include <covtx/transaction.hpp>

#include <optional>
#include <span>
#include <variant>

namespace covtx {

// Default draw budget for the rejection-sampling loops below. Each draw
// succeeds with probability ~1/4 (two fields) or ~1/2 (one field), so 1000
// draws fail with negligible probability.
inline constexpr size_t kRetryBudget = 1000;

// ---------------------------------------------------------------------------
// Per-transaction message key and segment cipher.
// ---------------------------------------------------------------------------

// keccak256(enc(base_key) || enc(recipient view pub) || enc(recipient spend
// pub)). base_key is the t=0 one-time output key of the carrying transaction,
// so every transaction encrypts under a fresh key that only the recipient's
// view key can recompute.
Bytes32 derive_session_key(const Point& base_key, const PeerKeys& recipient);

// AES-256-CTR with zero IV; the key is used for exactly one 32-byte block.
Bytes32 encrypt_segment(const Bytes32& m, const Bytes32& key);
Bytes32 decrypt_segment(const Bytes32& c, const Bytes32& key);

// ---------------------------------------------------------------------------
// Signature-bound amount masking. Same shape as the standard mask but the
// keystream also commits to a signature, so only a party that recovered the
// signature can read the control word.
// ---------------------------------------------------------------------------

Bytes8 mask_amount_signed(uint64_t amount, const Point& shared, uint64_t t, const Signature& sig);
uint64_t unmask_amount_signed(const Bytes8& masked, const Point& shared, uint64_t t,
                              const Signature& sig);

// ---------------------------------------------------------------------------
// Attempt-level field construction. Deterministic in the supplied tx keys;
// the gen_* wrappers below drive them with fresh keys until every embedded
// field is a decodable group element.
// ---------------------------------------------------------------------------

// Two address slots carrying a signature over the tx key's digest, XOR-masked
// with the addressee's one-time output keys at t = 0 and 1.
struct AuthFieldAttempt {
    Signature sig;
    std::array<Bytes32, 2> fields;
    Point shared;                    // ECDH secret with the addressee
    std::array<Point, 2> base_keys;  // one-time keys the mask was built from
    bool ok = false;                 // both fields decode
};
AuthFieldAttempt try_auth_field(const TxKeys& keys, const Scalar& signer_view_priv,
                                const PeerKeys& addressee);

// One address slot carrying an encrypted 32-byte segment, plus the
// signature-masked control word for the amount slot.
struct TransFieldAttempt {
    Bytes32 field;
    Bytes8 masked_code;
    Point shared;
    Point base_key;       // t=0 one-time key
    Bytes32 session_key;  // per-transaction message key
    bool ok = false;      // the field decodes
};
TransFieldAttempt try_trans_field(const TxKeys& keys, const Bytes32& m, uint64_t code,
                                  const PeerKeys& recipient, const Signature& sig);

// ---------------------------------------------------------------------------
// Field generators. Throw RetryExhausted when the budget runs out.
// ---------------------------------------------------------------------------

struct AuthField {
    TxKeys keys;
    AuthFieldAttempt attempt;
    uint32_t draws = 0;  // draws consumed, including the successful one
};
AuthField gen_auth_field(Rng& rng, const Scalar& signer_view_priv, const PeerKeys& addressee,
                         size_t retry_budget = kRetryBudget);

struct TransField {
    TxKeys keys;
    TransFieldAttempt attempt;
    uint64_t code = 0;
    uint32_t draws = 0;
};
TransField gen_trans_field(Rng& rng, const Bytes32& m, uint32_t seq, bool is_final,
                           const PeerKeys& recipient, const Signature& sig,
                           size_t retry_budget = kRetryBudget);

// Feedback field: an auth-shaped field signed by the responder and addressed
// to the originator. missing_seq >= 1 requests a resend (the control word
// rides output 0's amount); missing_seq == 0 acknowledges completion.
struct FbField {
    AuthField auth;
    std::optional<Bytes8> masked_code;  // engaged iff this is a resend request
};
FbField gen_fb_field(Rng& rng, const Scalar& responder_view_priv, const PeerKeys& originator,
                     uint32_t missing_seq, size_t retry_budget = kRetryBudget);

// ---------------------------------------------------------------------------
// Whole-transaction builders. Every transaction gets a standard self-addressed
// change output after the special slots, and plausible random amounts in any
// amount slot that does not carry a control word.
// ---------------------------------------------------------------------------

struct AuthTxResult {
    Transaction tx;
    Signature sig;  // session signature; binds subsequent segment amounts
    uint32_t draws = 0;
};
AuthTxResult build_auth_tx(Rng& rng, const KeyQuad& sender, const PeerKeys& recipient,
                           uint64_t fee, size_t retry_budget = kRetryBudget);

struct TransTxResult {
    Transaction tx;
    uint32_t draws = 0;
};
TransTxResult build_trans_tx(Rng& rng, const KeyQuad& sender, const PeerKeys& recipient,
                             const Bytes32& m, uint32_t seq, bool is_final, const Signature& sig,
                             uint64_t fee, size_t retry_budget = kRetryBudget);

struct FbTxResult {
    Transaction tx;
    uint32_t draws = 0;
};
FbTxResult build_fb_tx(Rng& rng, const KeyQuad& responder, const PeerKeys& originator,
                       uint32_t missing_seq, uint64_t fee, size_t retry_budget = kRetryBudget);

// ---------------------------------------------------------------------------
// Receiver-side extraction.
// ---------------------------------------------------------------------------

// Recovers a signature from output addresses 0/1 and tests it against each
// candidate sender view pub; nullopt when no candidate verifies or the
// transaction has fewer than three outputs.
struct AuthInfo {
    size_t sender_index = 0;  // position in the candidate list
    Point sender_view_pub;
    Signature sig;
};
std::optional<AuthInfo> extract_auth(const Transaction& tx, const KeyQuad& self,
                                     std::span<const Point> candidate_view_pubs);

// Recovers a message segment from output 0 of a transaction sent by the peer
// whose session signature is `sig`. nullopt means "not covert": a plain
// payment, somebody else's transaction, or a control word that fails to parse.
struct Segment {
    Bytes32 m{};
    uint32_t seq = 0;
    bool is_final = false;
};
std::optional<Segment> extract_segment(const Transaction& tx, const KeyQuad& self,
                                       const Signature& sig);

// Feedback decoded by the originator. Ack: transfer complete. Nack: resend
// segment missing_seq.
struct Ack {
    bool operator==(const Ack&) const = default;
};
struct Nack {
    uint32_t missing_seq = 0;
    bool operator==(const Nack&) const = default;
};
using Feedback = std::variant<Ack, Nack>;
std::optional<Feedback> parse_feedback(const Transaction& tx, const KeyQuad& self,
                                       const Point& responder_view_pub);

}  // namespace covtx

#endif  // COVTX_COVERT_HPP
