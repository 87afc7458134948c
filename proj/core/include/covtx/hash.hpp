// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_HASH_HPP
#define COVTX_HASH_HPP

#include <covtx/bytes.hpp>

namespace covtx {

// Original Keccak-256 (pad byte 0x01, rate 136). This is the variant used by
// pre-SHA3 blockchains; it is NOT FIPS-202 SHA3-256.
Digest32 keccak256(ByteView data);

Bytes64 sha512(ByteView data);

// Incremental byte sink, convenient for hashing concatenations.
class HashWriter {
  public:
    HashWriter& write(ByteView data) {
        buf_.insert(buf_.end(), data.begin(), data.end());
        return *this;
    }
    Digest32 keccak() const { return keccak256(view(buf_)); }
    Bytes64 sha() const { return sha512(view(buf_)); }

  private:
    std::vector<uint8_t> buf_;
};

}  // namespace covtx

#endif  // COVTX_HASH_HPP
