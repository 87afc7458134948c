// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/amount_code.hpp>

#include <covtx/errors.hpp>

namespace covtx {

uint64_t encode_amount(uint32_t seq, bool is_final, Rng& rng) {
    AmountCode code;
    code.flag = is_final ? 0 : 1;
    code.middle = static_cast<uint32_t>(rng.uniform(1'000'000));
    code.seq = seq;
    return encode_amount_code(code);
}

uint64_t encode_amount_code(const AmountCode& code) {
    if (code.seq > kMaxSeq) throw UsageError("segment number exceeds 999");
    if (code.flag > 1) throw UsageError("amount code flag must be 0 or 1");
    if (code.middle > 999'999) throw UsageError("amount code middle exceeds 6 digits");
    return static_cast<uint64_t>(code.flag) * 1'000'000'000ULL +
           static_cast<uint64_t>(code.middle) * 1'000ULL + code.seq;
}

std::optional<AmountCode> decode_amount(uint64_t amount) {
    if (amount >= kAmountCodeLimit) return std::nullopt;
    AmountCode code;
    code.flag = static_cast<uint32_t>(amount / 1'000'000'000ULL);
    code.middle = static_cast<uint32_t>((amount / 1'000ULL) % 1'000'000ULL);
    code.seq = static_cast<uint32_t>(amount % 1'000ULL);
    return code;
}

}  // namespace covtx
