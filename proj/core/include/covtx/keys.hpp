// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_KEYS_HPP
#define COVTX_KEYS_HPP

#include <covtx/group.hpp>
#include <covtx/rng.hpp>

#include <string>

namespace covtx {

// Wallet identity: view pair detects incoming outputs, spend pair owns them.
struct KeyQuad {
    Scalar view_priv;
    Point view_pub;
    Scalar spend_priv;
    Point spend_pub;

    static KeyQuad generate(Rng& rng);
};

// The public half of a counterparty's wallet.
struct PeerKeys {
    Point view_pub;
    Point spend_pub;
};

inline PeerKeys peer_keys(const KeyQuad& k) { return {k.view_pub, k.spend_pub}; }

// Per-transaction ephemeral pair; tx_pub is published in the transaction.
struct TxKeys {
    Scalar tx_priv;
    Point tx_pub;

    static TxKeys generate(Rng& rng);
};

// Wallet files are flat JSON with hex fields view_priv/view_pub/spend_priv/
// spend_pub; a pub-only file omits the two priv fields.
void save_wallet(const std::string& path, const KeyQuad& keys, bool overwrite = false);
KeyQuad load_wallet(const std::string& path);
// Accepts a full wallet or a pub-only file.
PeerKeys load_peer_keys(const std::string& path);
void save_peer_keys(const std::string& path, const PeerKeys& keys, bool overwrite = false);

}  // namespace covtx

#endif  // COVTX_KEYS_HPP
