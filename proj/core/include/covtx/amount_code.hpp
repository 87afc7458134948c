// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_AMOUNT_CODE_HPP
#define COVTX_AMOUNT_CODE_HPP

#include <covtx/rng.hpp>

#include <cstdint>
#include <optional>

namespace covtx {

// Control word carried in an amount field, read as ten decimal digits:
//   flag(1) | middle(6) | seq(3)
// flag 1 marks a non-final segment, flag 0 a final one; middle is random
// cover noise; seq is the segment number. Values >= 2e9 are not codes.
inline constexpr uint32_t kMaxSeq = 999;
inline constexpr uint64_t kAmountCodeLimit = 2'000'000'000;

struct AmountCode {
    uint32_t flag = 0;
    uint32_t middle = 0;
    uint32_t seq = 0;

    bool is_final() const { return flag == 0; }
    bool operator==(const AmountCode&) const = default;
};

// Builds a code for `seq` with fresh random cover digits. Throws UsageError
// when seq > 999.
uint64_t encode_amount(uint32_t seq, bool is_final, Rng& rng);

uint64_t encode_amount_code(const AmountCode& code);

// nullopt when the value cannot be a code (>= 2e9).
std::optional<AmountCode> decode_amount(uint64_t amount);

}  // namespace covtx

#endif  // COVTX_AMOUNT_CODE_HPP
