// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_FRAMING_HPP
#define COVTX_FRAMING_HPP

#include <covtx/bytes.hpp>
#include <covtx/rng.hpp>

#include <span>
#include <vector>

namespace covtx {

// A message is framed as len(u16be) || payload || random padding up to a
// 32-byte multiple, then cut into 32-byte segments. 999 segments maximum.
inline constexpr size_t kSegmentBytes = 32;
inline constexpr size_t kMaxSegments = 999;
inline constexpr size_t kMaxMessageBytes = kMaxSegments * kSegmentBytes - 2;

// Throws UsageError when the message exceeds kMaxMessageBytes (split such
// payloads across several sessions).
std::vector<Bytes32> segment_message(ByteView message, Rng& rng);

// Inverse of segment_message over a complete in-order segment list.
// Throws ParseError when the header length is inconsistent with the input.
std::vector<uint8_t> reassemble(std::span<const Bytes32> segments);

}  // namespace covtx

#endif  // COVTX_FRAMING_HPP
