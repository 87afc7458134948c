// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/covert.hpp>
#include <covtx/errors.hpp>
#include <covtx/session.hpp>

#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

using namespace covtx;

namespace {

struct Net {
    ChainStore chain{1};
    KeyQuad alice;  // originator
    KeyQuad bob;    // responder
    KeyQuad carol;  // bystander candidate

    explicit Net(uint64_t seed = 100) {
        Rng rng(seed);
        alice = KeyQuad::generate(rng);
        bob = KeyQuad::generate(rng);
        carol = KeyQuad::generate(rng);
    }

    SenderSession sender(uint64_t seed = 200, SessionConfig cfg = {}) {
        return SenderSession(chain, Rng(seed), alice, peer_keys(bob), cfg);
    }
    ReceiverSession receiver(uint64_t seed = 300, SessionConfig cfg = {}) {
        // The true sender sits at index 1 to exercise candidate selection.
        return ReceiverSession(chain, Rng(seed), bob, {peer_keys(carol), peer_keys(alice)}, cfg);
    }

    // One network iteration: confirm what was submitted, let both ends react.
    Block step(ReceiverSession& rx, SenderSession& sx) {
        Block b = chain.produce_block();
        rx.on_block(b);
        sx.on_block(b);
        return b;
    }

    // Runs iterations until the sender leaves AwaitFeedback or the bound hits.
    void run(ReceiverSession& rx, SenderSession& sx, int max_steps = 60) {
        for (int i = 0; i < max_steps; ++i) {
            step(rx, sx);
            if (sx.state() == SenderState::Done || sx.state() == SenderState::TimedOut) return;
        }
    }
};

std::vector<uint8_t> text_bytes(const std::string& s) {
    return {s.begin(), s.end()};
}

size_t count_actions(const Transcript& t, const std::string& action) {
    return std::count_if(t.begin(), t.end(),
                         [&](const TranscriptRecord& r) { return r.action == action; });
}

}  // namespace

TEST_CASE("a clean session delivers the message with one feedback round") {
    Net net;
    auto sx = net.sender();
    auto rx = net.receiver();
    const auto msg = text_bytes("meet at the usual place, bring the ledger printouts");

    sx.start(view(msg));
    CHECK(sx.state() == SenderState::AwaitFeedback);
    CHECK(sx.segment_count() == 2);  // 51 bytes + 2-byte header -> 2 segments
    CHECK(net.chain.mempool_size() == 3);  // auth + 2 segments

    net.step(rx, sx);  // stream confirms; receiver completes and acks
    CHECK(rx.complete());
    CHECK(rx.message() == msg);
    CHECK(sx.state() == SenderState::AwaitFeedback);  // ack still in mempool

    net.step(rx, sx);  // ack confirms
    CHECK(sx.state() == SenderState::Done);
    CHECK(sx.feedback_rounds() == 1);
    CHECK(sx.resend_count() == 0);

    CHECK(rx.sender_view_pub() == net.alice.view_pub);

    // Stage ordering on both transcripts.
    const auto& st = sx.transcript();
    REQUIRE(st.size() >= 5);
    CHECK(st.front().stage == "auth");
    CHECK(st.front().action == "auth-sent");
    CHECK(st[1].action == "segment-sent");
    CHECK(st.back().stage == "done");
    CHECK(count_actions(st, "ack-seen") == 1);
    CHECK(count_actions(rx.transcript(), "auth-seen") == 1);
    CHECK(count_actions(rx.transcript(), "segment-seen") == 2);
    CHECK(count_actions(rx.transcript(), "fb-ack-sent") == 1);

    // JSONL export: one line per record.
    const std::string jsonl = transcript_to_jsonl(st);
    CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == static_cast<long>(st.size()));
    CHECK(jsonl.find("\"auth-sent\"") != std::string::npos);
}

TEST_CASE("a targeted drop costs exactly one resend and one extra round") {
    Net net;
    net.chain.set_drop_policy(DropPolicy::target_seqs({2}));
    auto sx = net.sender();
    auto rx = net.receiver();
    const auto msg = text_bytes(std::string(80, 'x') + "tail");  // 3 segments

    sx.start(view(msg));
    net.run(rx, sx);

    CHECK(sx.state() == SenderState::Done);
    CHECK(sx.resend_count() == 1);
    CHECK(sx.feedback_rounds() == 2);  // nack(2), then ack
    CHECK(rx.message() == msg);
    CHECK(net.chain.drop_log().size() == 1);
    CHECK(count_actions(rx.transcript(), "fb-nack-sent") == 1);
}

TEST_CASE("a dropped final segment is recovered by receiver patience") {
    Net net;
    net.chain.set_drop_policy(DropPolicy::target_seqs({3}));
    auto sx = net.sender();
    auto rx = net.receiver();
    const auto msg = text_bytes(std::string(80, 'y'));  // 3 segments, 3 is final

    sx.start(view(msg));
    net.run(rx, sx);

    CHECK(sx.state() == SenderState::Done);
    CHECK(sx.resend_count() == 1);
    CHECK(sx.feedback_rounds() == 2);
    CHECK(rx.message() == msg);
    CHECK(count_actions(rx.transcript(), "patience") == 1);
}

TEST_CASE("losing every first transmission still converges within drops+1 rounds") {
    Net net;
    net.chain.set_drop_policy(DropPolicy::target_seqs({1, 2, 3}));
    auto sx = net.sender();
    auto rx = net.receiver();
    const auto msg = text_bytes(std::string(70, 'z'));  // 3 segments

    sx.start(view(msg));
    net.run(rx, sx);

    CHECK(sx.state() == SenderState::Done);
    CHECK(sx.resend_count() == 3);
    CHECK(sx.feedback_rounds() <= net.chain.drop_log().size() + 1);
    CHECK(rx.message() == msg);
}

TEST_CASE("random first-transmission losses converge and respect the round bound") {
    Net net;
    net.chain.set_drop_policy(DropPolicy::random_rate_first_attempts(0.3, 77));
    auto sx = net.sender();
    auto rx = net.receiver();
    const auto msg = Rng(5).bytes(20 * 32 - 2);  // exactly 20 segments

    sx.start(view(msg));
    CHECK(sx.segment_count() == 20);
    net.run(rx, sx, 200);

    CHECK(sx.state() == SenderState::Done);
    CHECK(rx.message() == msg);
    const auto drops = net.chain.drop_log();
    CHECK(drops.size() > 0);  // seed 77 at 30% over 20 txs drops some
    CHECK(sx.feedback_rounds() <= drops.size() + 1);
    for (const auto& d : drops) {
        auto tag = net.chain.tag_of(d.txid);
        REQUIRE(tag.has_value());
        CHECK(tag->kind == TxKind::Segment);
        CHECK(tag->attempt == 1);
    }
}

TEST_CASE("a sender with no reachable responder times out honestly") {
    Net net;
    net.chain.set_drop_policy(DropPolicy::window_blocks(0, 1'000'000));
    auto sx = net.sender();
    auto rx = net.receiver();

    sx.start(view(text_bytes("anyone there?")));
    for (int i = 0; i < 12; ++i) net.step(rx, sx);

    CHECK(sx.state() == SenderState::TimedOut);
    CHECK(rx.state() == ReceiverState::WaitAuth);
    CHECK(!rx.message().has_value());
    CHECK(count_actions(sx.transcript(), "timeout") == 1);
}

TEST_CASE("replayed blocks change nothing on either side") {
    Net net;
    auto sx = net.sender();
    auto rx = net.receiver();
    sx.start(view(text_bytes("replay me")));
    net.run(rx, sx);
    REQUIRE(sx.state() == SenderState::Done);

    const std::string sx_before = sx.save_state();
    const std::string rx_before = rx.save_state();
    for (uint64_t h = 0; h < net.chain.height(); ++h) {
        const auto blk = net.chain.block_at(h);
        REQUIRE(blk.has_value());
        sx.on_block(*blk);
        rx.on_block(*blk);
    }
    CHECK(sx.save_state() == sx_before);
    CHECK(rx.save_state() == rx_before);
}

TEST_CASE("duplicate segments are ignored without overwriting content") {
    Net net;
    net.chain.set_drop_policy(DropPolicy::target_seqs({3}));
    auto sx = net.sender();
    auto rx = net.receiver();
    const auto msg = text_bytes(std::string(80, 'q'));

    sx.start(view(msg));
    net.step(rx, sx);  // receiver holds 1..2, waits on the tail

    // A stray duplicate of segment 1 with different content must not displace
    // the stored copy.
    Rng forge_rng(9999);
    Bytes32 bogus{};
    bogus.fill(0xee);
    auto dup = build_trans_tx(forge_rng, net.alice, peer_keys(net.bob), bogus, 1, false,
                              sx.session_sig(), SessionConfig{}.fee);
    REQUIRE(!net.chain.submit_tx(dup.tx).has_value());
    net.run(rx, sx);

    CHECK(sx.state() == SenderState::Done);
    CHECK(rx.message() == msg);  // original content survived
    CHECK(count_actions(rx.transcript(), "segment-duplicate") == 1);
}

TEST_CASE("a fresh handshake supersedes an unfinished session") {
    Net net;
    // First session loses its tail and will never finish: the sender is
    // abandoned before it can answer any feedback.
    net.chain.set_drop_policy(DropPolicy::target_seqs({2, 3}));
    auto sx1 = net.sender(201);
    auto rx = net.receiver();
    sx1.start(view(text_bytes(std::string(80, 'a'))));
    Block b = net.chain.produce_block();
    rx.on_block(b);
    CHECK(rx.state() == ReceiverState::Receiving);

    net.chain.set_drop_policy(DropPolicy::none());
    auto sx2 = net.sender(202);
    const auto msg2 = text_bytes("second attempt, fresh handshake");
    sx2.start(view(msg2));
    for (int i = 0; i < 10 && sx2.state() != SenderState::Done; ++i) net.step(rx, sx2);

    CHECK(sx2.state() == SenderState::Done);
    CHECK(rx.message() == msg2);
    CHECK(count_actions(rx.transcript(), "auth-superseded") == 1);
}

TEST_CASE("a completed session re-acks when the sender keeps transmitting") {
    Net net;
    auto sx = net.sender();
    auto rx = net.receiver();
    const auto msg = text_bytes("short note");
    sx.start(view(msg));
    net.step(rx, sx);
    REQUIRE(rx.complete());

    // The ack is in the mempool; pretend it got lost so the sender resends.
    // A duplicate segment arriving post-completion must trigger a repeat ack.
    Rng forge_rng(4242);
    auto dup = build_trans_tx(forge_rng, net.alice, peer_keys(net.bob), Bytes32{}, 1, true,
                              sx.session_sig(), SessionConfig{}.fee);
    REQUIRE(!net.chain.submit_tx(dup.tx).has_value());
    Block b = net.chain.produce_block();
    rx.on_block(b);

    CHECK(count_actions(rx.transcript(), "fb-ack-sent") == 2);
    CHECK(rx.message() == msg);  // content untouched
}

TEST_CASE("sessions survive a save and restore round trip mid-flight") {
    Net net;
    net.chain.set_drop_policy(DropPolicy::target_seqs({2}));
    auto sx = net.sender();
    auto rx = net.receiver();
    const auto msg = text_bytes(std::string(100, 'r') + "resume");

    sx.start(view(msg));
    net.step(rx, sx);  // receiver nacks segment 2

    const std::string sx_blob = sx.save_state();
    const std::string rx_blob = rx.save_state();
    auto sx2 = SenderSession::restore_state(net.chain, sx_blob);
    auto rx2 = ReceiverSession::restore_state(net.chain, rx_blob);
    CHECK(sx2.save_state() == sx_blob);
    CHECK(rx2.save_state() == rx_blob);

    net.run(rx2, sx2);
    CHECK(sx2.state() == SenderState::Done);
    CHECK(sx2.resend_count() == 1);
    CHECK(rx2.message() == msg);
}

TEST_CASE("state blobs are validated on restore") {
    Net net;
    CHECK_THROWS_AS(SenderSession::restore_state(net.chain, "not json"), UsageError);
    CHECK_THROWS_AS(SenderSession::restore_state(net.chain, "{\"kind\":\"bogus\"}"), UsageError);
    auto sx = net.sender();
    sx.start(view(text_bytes("x")));
    // Sender state fed to the receiver loader must be refused.
    CHECK_THROWS_AS(ReceiverSession::restore_state(net.chain, sx.save_state()), UsageError);
}

TEST_CASE("the plaintext never appears in any confirmed transaction") {
    Net net;
    auto sx = net.sender();
    auto rx = net.receiver();
    const auto msg = text_bytes("TOPSECRET-MARKER-0123456789-the-payload-itself");
    sx.start(view(msg));
    net.run(rx, sx);
    REQUIRE(rx.message() == msg);

    // Slide an 8-byte window over the message and look for it in every
    // confirmed transaction image.
    for (uint64_t h = 0; h < net.chain.height(); ++h) {
        for (const auto& tx : net.chain.block_at(h)->txs) {
            const auto blob = tx.serialize();
            for (size_t off = 0; off + 8 <= msg.size(); ++off) {
                const auto hit = std::search(blob.begin(), blob.end(), msg.begin() + off,
                                             msg.begin() + off + 8);
                CHECK(hit == blob.end());
            }
        }
    }
}

TEST_CASE("starting twice is refused") {
    Net net;
    auto sx = net.sender();
    sx.start(view(text_bytes("once")));
    CHECK_THROWS_AS(sx.start(view(text_bytes("twice"))), UsageError);
}

TEST_CASE("sender rejects out-of-range nacks without burning a round") {
    Net net;
    auto sx = net.sender();
    sx.start(view(text_bytes("bounded")));     // one segment
    sx.on_block(net.chain.produce_block());    // stream confirms, no feedback

    // Forge a nack asking for a segment that does not exist.
    Rng forge_rng(31337);
    auto bogus = build_fb_tx(forge_rng, net.bob, peer_keys(net.alice), 999, SessionConfig{}.fee);
    REQUIRE(!net.chain.submit_tx(bogus.tx).has_value());
    sx.on_block(net.chain.produce_block());

    CHECK(sx.resend_count() == 0);
    CHECK(count_actions(sx.transcript(), "nack-ignored") == 1);
    CHECK(sx.state() == SenderState::AwaitFeedback);  // not a feedback round
}
