// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_TRANSACTION_HPP
#define COVTX_TRANSACTION_HPP

#include <covtx/bytes.hpp>
#include <covtx/group.hpp>

#include <cstdint>
#include <vector>

namespace covtx {

// One-time output. The address is kept as raw bytes on purpose: ledger
// consumers treat it as an opaque 32-byte field and only wallet-side scanning
// interprets it as a group element.
struct Output {
    Bytes32 stealth_address{};
    Bytes8 masked_amount{};
    uint32_t index = 0;

    bool operator==(const Output&) const = default;
};

struct Transaction {
    Point tx_pub;
    std::vector<Output> outputs;
    uint64_t fee = 0;

    // Canonical wire form:
    //   tx_pub(32) || n_out(u32le) || n_out * (address(32) || masked(8) ||
    //   index(u32le)) || fee(u64le)
    std::vector<uint8_t> serialize() const;
    static Transaction deserialize(ByteView bytes);

    // Hash of the canonical wire form.
    Digest32 id() const;

    bool operator==(const Transaction&) const = default;
};

// Unsigned LEB128, used wherever an integer is fed into a hash.
void append_varint(std::vector<uint8_t>& out, uint64_t value);
std::vector<uint8_t> varint_bytes(uint64_t value);

}  // namespace covtx

#endif  // COVTX_TRANSACTION_HPP
