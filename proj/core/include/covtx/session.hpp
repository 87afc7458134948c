// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_SESSION_HPP
#define COVTX_SESSION_HPP

#include <covtx/covert.hpp>
#include <covtx/framing.hpp>
#include <covtx/keys.hpp>
#include <covtx/ledger.hpp>
#include <covtx/rng.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace covtx {

struct SessionConfig {
    // Blocks without feedback after the last send before the sender gives up.
    uint64_t feedback_timeout_blocks = 10;
    // Blocks without progress before the receiver repeats its feedback.
    uint64_t fb_retry_blocks = 3;
    size_t retry_budget = kRetryBudget;
    uint64_t fee = 30'000'000;
};

// One line of a session transcript; serializes to JSONL for tools and tests.
struct TranscriptRecord {
    std::string stage;   // auth | transmit | feedback | done
    std::string action;  // e.g. auth-sent, segment-seen, fb-nack-sent, timeout
    uint64_t block = 0;  // chain height when the event was recorded
    std::string tx_id;   // hex, empty when not tied to a transaction
    uint32_t seq = 0;    // segment or mms number, 0 when not applicable
    std::string note;
};
using Transcript = std::vector<TranscriptRecord>;

std::string transcript_to_jsonl(const Transcript& t);

enum class SenderState : uint8_t {
    Idle,
    AuthSent,
    Transmitting,
    AwaitFeedback,
    Resending,
    Done,
    TimedOut,
};
const char* to_string(SenderState s);

// Originator state machine: authenticate, stream segments, then react to
// feedback blocks until acknowledged or timed out. Event-driven and
// single-threaded; all transactions go through the supplied ledger.
class SenderSession {
  public:
    SenderSession(ChainStore& chain, Rng rng, const KeyQuad& self, const PeerKeys& recipient,
                  SessionConfig config = {});

    // Emits one AuthTx plus one TransTx per segment (seq 1..n, final flagged)
    // and enters AwaitFeedback. Throws UsageError on oversize input or ledger
    // rejection.
    void start(ByteView message);

    // Feed one confirmed block. Replayed blocks (height already consumed) are
    // ignored. Nack -> one fresh resend; Ack -> Done; prolonged silence ->
    // TimedOut.
    void on_block(const Block& block);

    SenderState state() const { return state_; }
    const Signature& session_sig() const { return sig_; }
    size_t segment_count() const { return segments_.size(); }
    uint32_t feedback_rounds() const { return fb_rounds_; }
    uint32_t resend_count() const { return resends_; }
    const Transcript& transcript() const { return transcript_; }

    // JSON state blob for resumable runs. Contains wallet secrets; treat the
    // file like a wallet.
    std::string save_state() const;
    static SenderSession restore_state(ChainStore& chain, const std::string& json);

  private:
    explicit SenderSession(ChainStore& chain) : chain_(chain) {}

    void send_segment(uint32_t seq);
    void record(std::string stage, std::string action, uint64_t block, std::string tx_id = {},
                uint32_t seq = 0, std::string note = {});

    ChainStore& chain_;
    Rng rng_;
    KeyQuad self_;
    PeerKeys recipient_;
    SessionConfig config_;

    SenderState state_ = SenderState::Idle;
    std::vector<Bytes32> segments_;
    Signature sig_{};
    std::vector<uint32_t> attempts_;        // per seq (1-based; [0] unused)
    std::set<Digest32> own_txids_;
    uint64_t next_height_ = 0;              // first unconsumed block height
    uint64_t silent_blocks_ = 0;            // blocks since last send without feedback
    uint32_t fb_rounds_ = 0;
    uint32_t resends_ = 0;
    Transcript transcript_;
};

enum class ReceiverState : uint8_t { WaitAuth, Receiving, Complete };
const char* to_string(ReceiverState s);

// Responder state machine: watch blocks for an authenticated session from a
// known sender, collect segments, and answer with feedback transactions.
class ReceiverSession {
  public:
    ReceiverSession(ChainStore& chain, Rng rng, const KeyQuad& self,
                    std::vector<PeerKeys> known_senders, SessionConfig config = {});

    void on_block(const Block& block);

    ReceiverState state() const { return state_; }
    bool complete() const { return state_ == ReceiverState::Complete; }
    size_t segments_received() const { return received_.size(); }
    uint32_t final_seq() const { return final_seq_; }  // 0 until the final arrives
    // Reassembled message, available once complete.
    std::optional<std::vector<uint8_t>> message() const;
    std::optional<Point> sender_view_pub() const;
    const Transcript& transcript() const { return transcript_; }

    std::string save_state() const;
    static ReceiverSession restore_state(ChainStore& chain, const std::string& json);

  private:
    explicit ReceiverSession(ChainStore& chain) : chain_(chain) {}

    void bootstrap(const AuthInfo& info, const Digest32& txid, uint64_t height);
    bool try_segment(const Transaction& tx, uint64_t height);  // true on progress
    void emit_feedback(uint32_t mms, uint64_t height);
    bool is_complete() const;
    uint32_t next_wanted() const;  // lowest missing seq, or max seen + 1
    void record(std::string stage, std::string action, uint64_t block, std::string tx_id = {},
                uint32_t seq = 0, std::string note = {});

    ChainStore& chain_;
    Rng rng_;
    KeyQuad self_;
    std::vector<PeerKeys> known_senders_;
    SessionConfig config_;

    ReceiverState state_ = ReceiverState::WaitAuth;
    size_t sender_index_ = 0;
    Signature sig_{};
    std::map<uint32_t, Bytes32> received_;
    uint32_t final_seq_ = 0;  // 0 = not yet known
    std::vector<Transaction> pending_;  // txs seen before authentication
    std::set<Digest32> own_txids_;
    uint64_t next_height_ = 0;
    uint64_t silent_blocks_ = 0;
    bool patience_spent_ = false;  // one post-completion reminder per activity
    Transcript transcript_;
};

}  // namespace covtx

#endif  // COVTX_SESSION_HPP
