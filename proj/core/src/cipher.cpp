// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "cipher.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace covtx::detail {

std::vector<uint8_t> aes256ctr(const Bytes32& key, ByteView data) {
    std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)> ctx(
        EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
    if (!ctx) throw std::runtime_error("EVP_CIPHER_CTX_new failed");

    const uint8_t iv[16] = {};
    if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_ctr(), nullptr, key.data(), iv) != 1)
        throw std::runtime_error("EVP_EncryptInit_ex failed");

    std::vector<uint8_t> out(data.size());
    int len = 0;
    if (!data.empty() &&
        EVP_EncryptUpdate(ctx.get(), out.data(), &len, data.data(),
                          static_cast<int>(data.size())) != 1)
        throw std::runtime_error("EVP_EncryptUpdate failed");
    // CTR is a stream cipher: no buffered tail to flush.
    return out;
}

Bytes32 aes256ctr_block(const Bytes32& key, const Bytes32& data) {
    const auto out = aes256ctr(key, view(data));
    Bytes32 result;
    std::copy(out.begin(), out.end(), result.begin());
    return result;
}

}  // namespace covtx::detail
