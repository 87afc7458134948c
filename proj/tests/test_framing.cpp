// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/errors.hpp>
#include <covtx/framing.hpp>
#include <covtx/rng.hpp>

#include "doctest.h"

#include <vector>

using namespace covtx;

namespace {

std::vector<uint8_t> pattern_bytes(size_t n) {
    std::vector<uint8_t> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = static_cast<uint8_t>((i * 131 + 7) & 0xff);
    return out;
}

}  // namespace

TEST_CASE("segment counts track the two-byte header plus payload") {
    Rng rng(1);
    CHECK(segment_message(view(pattern_bytes(0)), rng).size() == 1);
    CHECK(segment_message(view(pattern_bytes(30)), rng).size() == 1);
    CHECK(segment_message(view(pattern_bytes(31)), rng).size() == 2);
    CHECK(segment_message(view(pattern_bytes(32)), rng).size() == 2);
    CHECK(segment_message(view(pattern_bytes(62)), rng).size() == 2);
    CHECK(segment_message(view(pattern_bytes(63)), rng).size() == 3);
    CHECK(segment_message(view(pattern_bytes(kMaxMessageBytes)), rng).size() == kMaxSegments);
}

TEST_CASE("oversize messages are refused with the limit in the error") {
    Rng rng(1);
    CHECK_THROWS_WITH_AS(segment_message(view(pattern_bytes(kMaxMessageBytes + 1)), rng),
                         doctest::Contains("31966"), UsageError);
}

TEST_CASE("round trip recovers the exact message at many sizes") {
    Rng rng(7);
    for (size_t n : {size_t{0}, size_t{1}, size_t{29}, size_t{30}, size_t{31}, size_t{32},
                     size_t{33}, size_t{64}, size_t{1000}, kMaxMessageBytes}) {
        const auto msg = pattern_bytes(n);
        const auto segs = segment_message(view(msg), rng);
        CHECK(reassemble(segs) == msg);
    }
}

TEST_CASE("padding draws come from the supplied stream") {
    const auto msg = pattern_bytes(10);
    Rng a(42), b(42), c(43);
    const auto sa = segment_message(view(msg), a);
    const auto sb = segment_message(view(msg), b);
    const auto sc = segment_message(view(msg), c);
    CHECK(sa == sb);
    CHECK(sa != sc);          // different padding...
    CHECK(reassemble(sa) == reassemble(sc));  // ...same message
}

TEST_CASE("reassemble rejects inconsistent inputs") {
    Rng rng(9);
    CHECK_THROWS_AS(reassemble({}), ParseError);

    // Header claims more payload than the segments hold.
    auto segs = segment_message(view(pattern_bytes(40)), rng);
    segs[0][0] = 0x7f;
    CHECK_THROWS_AS(reassemble(segs), ParseError);

    // A whole extra segment of nothing but padding cannot come from
    // segment_message.
    auto short_msg = segment_message(view(pattern_bytes(10)), rng);
    short_msg.push_back(Bytes32{});
    CHECK_THROWS_AS(reassemble(short_msg), ParseError);
}
