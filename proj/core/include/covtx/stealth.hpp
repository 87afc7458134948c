// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_STEALTH_HPP
#define COVTX_STEALTH_HPP

#include <covtx/keys.hpp>
#include <covtx/rng.hpp>
#include <covtx/transaction.hpp>

#include <optional>

namespace covtx {

// ECDH between a private key and a counterparty public key.
Point derive_shared_secret(const Scalar& priv, const Point& pub);

// Per-output secret digest: keccak256(encode(S) || varint(t)).
Digest32 output_secret(const Point& shared, uint64_t t);

// The digest reduced to a scalar; feeds the one-time address.
Scalar output_secret_scalar(const Point& shared, uint64_t t);

// One-time output key: output_secret_scalar(S, t) * G + spend_pub.
Point stealth_address(const Point& shared, uint64_t t, const Point& spend_pub);

// Keystream for the amount field: first 8 bytes of
// keccak256("amount" || output_secret(S, t)).
Bytes8 amount_pad(const Point& shared, uint64_t t);

Bytes8 mask_amount(uint64_t amount, const Point& shared, uint64_t t);
uint64_t unmask_amount(const Bytes8& masked, const Point& shared, uint64_t t);

// Plausible payment amount for filler outputs, in atomic units.
uint64_t random_amount(Rng& rng);

// Standard two-output payment: output 0 pays the recipient, output 1 returns
// change to the sender. Amounts are masked with the per-recipient shared
// secret; change uses a fresh random amount.
Transaction build_normal_tx(Rng& rng, const KeyQuad& sender, const Point& recipient_view_pub,
                            const Point& recipient_spend_pub, uint64_t amount, uint64_t fee);

// Wallet-side scan: recompute the one-time key for this output and return the
// unmasked amount when it matches, nullopt when the output is not ours.
std::optional<uint64_t> scan_output(const Transaction& tx, const Output& out,
                                    const Scalar& view_priv, const Point& spend_pub);

}  // namespace covtx

#endif  // COVTX_STEALTH_HPP
