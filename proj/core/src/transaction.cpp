// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/transaction.hpp>

#include <covtx/errors.hpp>
#include <covtx/hash.hpp>

#include <cstring>

namespace covtx {

namespace {

// Guards against absurd allocation from corrupt length fields.
constexpr uint32_t kMaxOutputs = 16384;

constexpr size_t kOutputWireSize = 32 + 8 + 4;

}  // namespace

std::vector<uint8_t> Transaction::serialize() const {
    std::vector<uint8_t> out;
    out.reserve(32 + 4 + outputs.size() * kOutputWireSize + 8);
    const Bytes32 pub = tx_pub.encode();
    out.insert(out.end(), pub.begin(), pub.end());
    uint8_t n[4];
    store_le32(n, static_cast<uint32_t>(outputs.size()));
    out.insert(out.end(), n, n + 4);
    for (const Output& o : outputs) {
        out.insert(out.end(), o.stealth_address.begin(), o.stealth_address.end());
        out.insert(out.end(), o.masked_amount.begin(), o.masked_amount.end());
        uint8_t idx[4];
        store_le32(idx, o.index);
        out.insert(out.end(), idx, idx + 4);
    }
    uint8_t f[8];
    store_le64(f, fee);
    out.insert(out.end(), f, f + 8);
    return out;
}

Transaction Transaction::deserialize(ByteView bytes) {
    size_t off = 0;
    auto need = [&](size_t n, const char* what) {
        if (bytes.size() - off < n)
            throw ParseError(std::string("transaction truncated in ") + what, off);
    };

    Transaction tx;
    need(32, "tx_pub");
    Bytes32 pub;
    std::memcpy(pub.data(), bytes.data() + off, 32);
    auto decoded = Point::decode(pub);
    if (!decoded) throw ParseError("transaction tx_pub is not a valid point", off);
    tx.tx_pub = *decoded;
    off += 32;

    need(4, "output count");
    const uint32_t n_out = load_le32(bytes.data() + off);
    if (n_out > kMaxOutputs) throw ParseError("transaction output count is implausible", off);
    off += 4;

    tx.outputs.resize(n_out);
    for (uint32_t i = 0; i < n_out; ++i) {
        Output& o = tx.outputs[i];
        need(kOutputWireSize, "output");
        std::memcpy(o.stealth_address.data(), bytes.data() + off, 32);
        std::memcpy(o.masked_amount.data(), bytes.data() + off + 32, 8);
        o.index = load_le32(bytes.data() + off + 40);
        off += kOutputWireSize;
    }

    need(8, "fee");
    tx.fee = load_le64(bytes.data() + off);
    off += 8;

    if (off != bytes.size())
        throw ParseError("transaction has trailing bytes", off);
    return tx;
}

Digest32 Transaction::id() const {
    return keccak256(view(serialize()));
}

void append_varint(std::vector<uint8_t>& out, uint64_t value) {
    while (value >= 0x80) {
        out.push_back(static_cast<uint8_t>(value) | 0x80);
        value >>= 7;
    }
    out.push_back(static_cast<uint8_t>(value));
}

std::vector<uint8_t> varint_bytes(uint64_t value) {
    std::vector<uint8_t> out;
    append_varint(out, value);
    return out;
}

}  // namespace covtx
