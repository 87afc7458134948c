// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/framing.hpp>

#include <covtx/errors.hpp>

#include <cstring>

namespace covtx {

std::vector<Bytes32> segment_message(ByteView message, Rng& rng) {
    if (message.size() > kMaxMessageBytes)
        throw UsageError("message of " + std::to_string(message.size()) +
                         " bytes exceeds the " + std::to_string(kMaxMessageBytes) +
                         "-byte session limit; split it across sessions");

    const size_t framed = 2 + message.size();
    const size_t n_segments = (framed + kSegmentBytes - 1) / kSegmentBytes;
    const size_t padded = n_segments * kSegmentBytes;

    std::vector<uint8_t> frame(padded);
    frame[0] = static_cast<uint8_t>(message.size() >> 8);
    frame[1] = static_cast<uint8_t>(message.size() & 0xff);
    if (!message.empty()) std::memcpy(frame.data() + 2, message.data(), message.size());
    if (padded > framed) rng.fill(frame.data() + framed, padded - framed);

    std::vector<Bytes32> segments(n_segments);
    for (size_t i = 0; i < n_segments; ++i)
        std::memcpy(segments[i].data(), frame.data() + i * kSegmentBytes, kSegmentBytes);
    return segments;
}

std::vector<uint8_t> reassemble(std::span<const Bytes32> segments) {
    if (segments.empty()) throw ParseError("no segments to reassemble", 0);
    const size_t total = segments.size() * kSegmentBytes;
    const size_t length = (static_cast<size_t>(segments[0][0]) << 8) | segments[0][1];
    if (2 + length > total)
        throw ParseError("frame header claims " + std::to_string(length) +
                             " payload bytes but only " + std::to_string(total - 2) +
                             " are present",
                         0);
    // The header must also not leave a whole trailing segment of pure padding.
    if (segments.size() > 1 && 2 + length <= total - kSegmentBytes)
        throw ParseError("frame shorter than the delivered segment count", 0);

    std::vector<uint8_t> flat;
    flat.reserve(total);
    for (const Bytes32& s : segments) flat.insert(flat.end(), s.begin(), s.end());
    return std::vector<uint8_t>(flat.begin() + 2, flat.begin() + 2 + static_cast<ptrdiff_t>(length));
}

}  // namespace covtx
