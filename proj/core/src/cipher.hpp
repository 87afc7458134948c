// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

// AES-256-CTR with a zero IV. Keys are single-use (one fresh key per
// transaction), which is what makes the fixed IV sound.

#ifndef COVTX_SRC_CIPHER_HPP
#define COVTX_SRC_CIPHER_HPP

#include <covtx/bytes.hpp>

namespace covtx::detail {

std::vector<uint8_t> aes256ctr(const Bytes32& key, ByteView data);

Bytes32 aes256ctr_block(const Bytes32& key, const Bytes32& data);

}  // namespace covtx::detail

#endif  // COVTX_SRC_CIPHER_HPP
