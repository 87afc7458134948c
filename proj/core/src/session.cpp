// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/session.hpp>

#include <covtx/errors.hpp>

#include <algorithm>
#include <utility>

#include "../../vendor/json.hpp"

namespace covtx {

namespace {

using nlohmann::json;

json point_json(const Point& p) {
    return to_hex(view(p.encode()));
}

Point json_point(const json& j, const char* field) {
    if (!j.is_string()) throw UsageError(std::string("state field is not a string: ") + field);
    auto p = Point::decode(from_hex_array<32>(j.get<std::string>()));
    if (!p) throw UsageError(std::string("state field is not a valid point: ") + field);
    return *p;
}

json scalar_json(const Scalar& s) {
    return to_hex(view(s.to_bytes()));
}

Scalar json_scalar(const json& j, const char* field) {
    if (!j.is_string()) throw UsageError(std::string("state field is not a string: ") + field);
    auto s = Scalar::from_bytes(from_hex_array<32>(j.get<std::string>()));
    if (!s) throw UsageError(std::string("state field is not a valid scalar: ") + field);
    return *s;
}

json keyquad_json(const KeyQuad& k) {
    return {{"view_priv", scalar_json(k.view_priv)},
            {"view_pub", point_json(k.view_pub)},
            {"spend_priv", scalar_json(k.spend_priv)},
            {"spend_pub", point_json(k.spend_pub)}};
}

KeyQuad json_keyquad(const json& j) {
    return {json_scalar(j.at("view_priv"), "view_priv"), json_point(j.at("view_pub"), "view_pub"),
            json_scalar(j.at("spend_priv"), "spend_priv"),
            json_point(j.at("spend_pub"), "spend_pub")};
}

json peer_json(const PeerKeys& k) {
    return {{"view_pub", point_json(k.view_pub)}, {"spend_pub", point_json(k.spend_pub)}};
}

PeerKeys json_peer(const json& j) {
    return {json_point(j.at("view_pub"), "view_pub"), json_point(j.at("spend_pub"), "spend_pub")};
}

json sig_json(const Signature& s) {
    return {{"r", to_hex(view(s.r))}, {"s", to_hex(view(s.s))}};
}

Signature json_sig(const json& j) {
    return {from_hex_array<32>(j.at("r").get<std::string>()),
            from_hex_array<32>(j.at("s").get<std::string>())};
}

json config_json(const SessionConfig& c) {
    return {{"feedback_timeout_blocks", c.feedback_timeout_blocks},
            {"fb_retry_blocks", c.fb_retry_blocks},
            {"retry_budget", c.retry_budget},
            {"fee", c.fee}};
}

SessionConfig json_config(const json& j) {
    SessionConfig c;
    c.feedback_timeout_blocks = j.at("feedback_timeout_blocks").get<uint64_t>();
    c.fb_retry_blocks = j.at("fb_retry_blocks").get<uint64_t>();
    c.retry_budget = j.at("retry_budget").get<size_t>();
    c.fee = j.at("fee").get<uint64_t>();
    return c;
}

json record_json(const TranscriptRecord& r) {
    return {{"stage", r.stage}, {"action", r.action}, {"block", r.block},
            {"tx", r.tx_id},    {"seq", r.seq},       {"note", r.note}};
}

TranscriptRecord json_record(const json& j) {
    TranscriptRecord r;
    r.stage = j.at("stage").get<std::string>();
    r.action = j.at("action").get<std::string>();
    r.block = j.at("block").get<uint64_t>();
    r.tx_id = j.at("tx").get<std::string>();
    r.seq = j.at("seq").get<uint32_t>();
    r.note = j.at("note").get<std::string>();
    return r;
}

json transcript_json(const Transcript& t) {
    json out = json::array();
    for (const auto& r : t) out.push_back(record_json(r));
    return out;
}

Transcript json_transcript(const json& j) {
    Transcript out;
    for (const auto& e : j) out.push_back(json_record(e));
    return out;
}

json txids_json(const std::set<Digest32>& ids) {
    json out = json::array();
    for (const auto& id : ids) out.push_back(to_hex(view(id)));
    return out;
}

std::set<Digest32> json_txids(const json& j) {
    std::set<Digest32> out;
    for (const auto& e : j) out.insert(from_hex_array<32>(e.get<std::string>()));
    return out;
}

json parse_state_blob(const std::string& blob, const char* expected_kind) {
    json j;
    try {
        j = json::parse(blob);
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed session state: ") + e.what());
    }
    if (!j.is_object() || j.value("kind", "") != expected_kind)
        throw UsageError(std::string("session state is not a ") + expected_kind + " blob");
    if (j.value("version", 0) != 1) throw UsageError("unsupported session state version");
    return j;
}

// Fatal in a session: an accepted protocol transaction is a precondition for
// everything that follows, so a configuration-level reject aborts.
Digest32 must_submit(ChainStore& chain, const Transaction& tx, const char* what) {
    if (auto reject = chain.submit_tx(tx)) {
        throw UsageError(std::string("ledger rejected ") + what + ": " +
                         to_string(reject->code) + " (" + reject->detail + ")");
    }
    return tx.id();
}

}  // namespace

std::string transcript_to_jsonl(const Transcript& t) {
    std::string out;
    for (const auto& r : t) {
        out += record_json(r).dump();
        out += '\n';
    }
    return out;
}

const char* to_string(SenderState s) {
    switch (s) {
        case SenderState::Idle: return "idle";
        case SenderState::AuthSent: return "auth-sent";
        case SenderState::Transmitting: return "transmitting";
        case SenderState::AwaitFeedback: return "await-feedback";
        case SenderState::Resending: return "resending";
        case SenderState::Done: return "done";
        case SenderState::TimedOut: return "timed-out";
    }
    return "?";
}

const char* to_string(ReceiverState s) {
    switch (s) {
        case ReceiverState::WaitAuth: return "wait-auth";
        case ReceiverState::Receiving: return "receiving";
        case ReceiverState::Complete: return "complete";
    }
    return "?";
}

namespace {

template <typename E>
E state_from_string(const std::string& name, std::initializer_list<E> all) {
    for (E s : all)
        if (name == to_string(s)) return s;
    throw UsageError("unknown session state name: " + name);
}

}  // namespace

// ---------------------------------------------------------------------------
// SenderSession
// ---------------------------------------------------------------------------

SenderSession::SenderSession(ChainStore& chain, Rng rng, const KeyQuad& self,
                             const PeerKeys& recipient, SessionConfig config)
    : chain_(chain),
      rng_(std::move(rng)),
      self_(self),
      recipient_(recipient),
      config_(config),
      next_height_(chain.height()) {}

void SenderSession::record(std::string stage, std::string action, uint64_t block,
                           std::string tx_id, uint32_t seq, std::string note) {
    transcript_.push_back({std::move(stage), std::move(action), block, std::move(tx_id), seq,
                           std::move(note)});
}

void SenderSession::start(ByteView message) {
    if (state_ != SenderState::Idle) throw UsageError("session already started");

    segments_ = segment_message(message, rng_);
    attempts_.assign(segments_.size() + 1, 0);

    auto auth = build_auth_tx(rng_, self_, recipient_, config_.fee, config_.retry_budget);
    sig_ = auth.sig;
    const Digest32 auth_id = must_submit(chain_, auth.tx, "auth tx");
    chain_.annotate(auth_id, {TxKind::Auth, 0, 1});
    own_txids_.insert(auth_id);
    state_ = SenderState::AuthSent;
    record("auth", "auth-sent", chain_.height(), to_hex(view(auth_id)), 0,
           std::to_string(segments_.size()) + " segments queued");

    state_ = SenderState::Transmitting;
    for (uint32_t seq = 1; seq <= segments_.size(); ++seq) send_segment(seq);

    state_ = SenderState::AwaitFeedback;
    silent_blocks_ = 0;
}

void SenderSession::send_segment(uint32_t seq) {
    const bool is_final = seq == segments_.size();
    auto built = build_trans_tx(rng_, self_, recipient_, segments_[seq - 1], seq, is_final, sig_,
                                config_.fee, config_.retry_budget);
    const Digest32 id = must_submit(chain_, built.tx, "segment tx");
    attempts_[seq] += 1;
    chain_.annotate(id, {TxKind::Segment, seq, attempts_[seq]});
    own_txids_.insert(id);
    record("transmit", attempts_[seq] == 1 ? "segment-sent" : "segment-resent", chain_.height(),
           to_hex(view(id)), seq, is_final ? "final" : "");
    silent_blocks_ = 0;
}

void SenderSession::on_block(const Block& block) {
    if (block.height < next_height_) return;  // replayed or stale block
    next_height_ = block.height + 1;
    if (state_ != SenderState::AwaitFeedback) return;

    bool got_feedback = false;
    for (const Transaction& tx : block.txs) {
        if (own_txids_.count(tx.id())) continue;
        auto fb = parse_feedback(tx, self_, recipient_.view_pub);
        if (!fb) continue;

        if (std::holds_alternative<Ack>(*fb)) {
            got_feedback = true;
            fb_rounds_ += 1;
            record("feedback", "ack-seen", block.height, to_hex(view(tx.id())));
            state_ = SenderState::Done;
            record("done", "complete", block.height, {}, 0,
                   std::to_string(resends_) + " resends over " + std::to_string(fb_rounds_) +
                       " feedback rounds");
            return;
        }

        const uint32_t missing = std::get<Nack>(*fb).missing_seq;
        if (missing < 1 || missing > segments_.size()) {
            record("feedback", "nack-ignored", block.height, to_hex(view(tx.id())), missing,
                   "out of range");
            continue;
        }
        got_feedback = true;
        fb_rounds_ += 1;
        record("feedback", "nack-seen", block.height, to_hex(view(tx.id())), missing);
        state_ = SenderState::Resending;
        send_segment(missing);
        resends_ += 1;
        state_ = SenderState::AwaitFeedback;
    }

    if (got_feedback) {
        silent_blocks_ = 0;
    } else if (++silent_blocks_ >= config_.feedback_timeout_blocks) {
        state_ = SenderState::TimedOut;
        record("done", "timeout", block.height, {}, 0,
               std::to_string(silent_blocks_) + " blocks without feedback");
    }
}

std::string SenderSession::save_state() const {
    json segs = json::array();
    for (const auto& s : segments_) segs.push_back(to_hex(view(s)));
    json j{{"kind", "covtx-sender-state"},
           {"version", 1},
           {"config", config_json(config_)},
           {"rng", rng_.save_state()},
           {"self", keyquad_json(self_)},
           {"recipient", peer_json(recipient_)},
           {"state", to_string(state_)},
           {"segments", segs},
           {"sig", sig_json(sig_)},
           {"attempts", attempts_},
           {"own_txids", txids_json(own_txids_)},
           {"next_height", next_height_},
           {"silent_blocks", silent_blocks_},
           {"fb_rounds", fb_rounds_},
           {"resends", resends_},
           {"transcript", transcript_json(transcript_)}};
    return j.dump(2);
}

SenderSession SenderSession::restore_state(ChainStore& chain, const std::string& blob) {
    const json j = parse_state_blob(blob, "covtx-sender-state");
    SenderSession s(chain);
    try {
        s.config_ = json_config(j.at("config"));
        s.rng_ = Rng::restore_state(j.at("rng").get<std::string>());
        s.self_ = json_keyquad(j.at("self"));
        s.recipient_ = json_peer(j.at("recipient"));
        s.state_ = state_from_string<SenderState>(
            j.at("state").get<std::string>(),
            {SenderState::Idle, SenderState::AuthSent, SenderState::Transmitting,
             SenderState::AwaitFeedback, SenderState::Resending, SenderState::Done,
             SenderState::TimedOut});
        for (const auto& e : j.at("segments"))
            s.segments_.push_back(from_hex_array<32>(e.get<std::string>()));
        s.sig_ = json_sig(j.at("sig"));
        s.attempts_ = j.at("attempts").get<std::vector<uint32_t>>();
        s.own_txids_ = json_txids(j.at("own_txids"));
        s.next_height_ = j.at("next_height").get<uint64_t>();
        s.silent_blocks_ = j.at("silent_blocks").get<uint64_t>();
        s.fb_rounds_ = j.at("fb_rounds").get<uint32_t>();
        s.resends_ = j.at("resends").get<uint32_t>();
        s.transcript_ = json_transcript(j.at("transcript"));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed session state: ") + e.what());
    }
    if (s.attempts_.size() != s.segments_.size() + 1)
        throw UsageError("session state attempts/segments mismatch");
    return s;
}

// ---------------------------------------------------------------------------
// ReceiverSession
// ---------------------------------------------------------------------------

namespace {
constexpr size_t kPendingCap = 4096;  // pre-auth buffer bound
}

ReceiverSession::ReceiverSession(ChainStore& chain, Rng rng, const KeyQuad& self,
                                 std::vector<PeerKeys> known_senders, SessionConfig config)
    : chain_(chain),
      rng_(std::move(rng)),
      self_(self),
      known_senders_(std::move(known_senders)),
      config_(config) {
    if (known_senders_.empty()) throw UsageError("receiver needs at least one known sender");
}

void ReceiverSession::record(std::string stage, std::string action, uint64_t block,
                             std::string tx_id, uint32_t seq, std::string note) {
    transcript_.push_back({std::move(stage), std::move(action), block, std::move(tx_id), seq,
                           std::move(note)});
}

bool ReceiverSession::is_complete() const {
    if (final_seq_ == 0) return false;
    for (uint32_t seq = 1; seq <= final_seq_; ++seq)
        if (!received_.count(seq)) return false;
    return true;
}

uint32_t ReceiverSession::next_wanted() const {
    const uint32_t max_seen = received_.empty() ? 0 : received_.rbegin()->first;
    const uint32_t limit = final_seq_ != 0 ? final_seq_ : max_seen;
    for (uint32_t seq = 1; seq <= limit; ++seq)
        if (!received_.count(seq)) return seq;
    // No interior gap. With the final still unknown the tail was lost, so the
    // next unseen number is the right request.
    return max_seen + 1;
}

void ReceiverSession::bootstrap(const AuthInfo& info, const Digest32& txid, uint64_t height) {
    const bool superseding = state_ == ReceiverState::Receiving;
    sender_index_ = info.sender_index;
    sig_ = info.sig;
    received_.clear();
    final_seq_ = 0;
    silent_blocks_ = 0;
    patience_spent_ = false;
    state_ = ReceiverState::Receiving;
    record("auth", superseding ? "auth-superseded" : "auth-seen", height, to_hex(view(txid)), 0,
           "sender #" + std::to_string(sender_index_));
}

bool ReceiverSession::try_segment(const Transaction& tx, uint64_t height) {
    auto seg = extract_segment(tx, self_, sig_);
    if (!seg) return false;
    if (seg->seq < 1) return false;  // control word with no valid number
    const std::string id = to_hex(view(tx.id()));
    if (received_.count(seg->seq)) {
        record("transmit", "segment-duplicate", height, id, seg->seq);
        return false;
    }
    received_[seg->seq] = seg->m;
    if (seg->is_final) {
        if (final_seq_ != 0 && final_seq_ != seg->seq)
            record("transmit", "final-conflict", height, id, seg->seq,
                   "previous final " + std::to_string(final_seq_));
        final_seq_ = seg->seq;
    }
    record("transmit", "segment-seen", height, id, seg->seq, seg->is_final ? "final" : "");
    return true;
}

void ReceiverSession::emit_feedback(uint32_t mms, uint64_t height) {
    auto built = build_fb_tx(rng_, self_, known_senders_[sender_index_], mms, config_.fee,
                             config_.retry_budget);
    const Digest32 id = must_submit(chain_, built.tx, "feedback tx");
    chain_.annotate(id, {TxKind::Feedback, mms, 1});
    own_txids_.insert(id);
    record("feedback", mms == 0 ? "fb-ack-sent" : "fb-nack-sent", height, to_hex(view(id)), mms);
    silent_blocks_ = 0;
}

void ReceiverSession::on_block(const Block& block) {
    if (block.height < next_height_) return;  // replayed or stale block
    next_height_ = block.height + 1;

    bool progressed = false;
    bool sender_activity = false;  // post-completion signs of a lost ack

    for (const Transaction& tx : block.txs) {
        if (own_txids_.count(tx.id())) continue;

        if (state_ == ReceiverState::WaitAuth) {
            std::vector<Point> views;
            views.reserve(known_senders_.size());
            for (const auto& k : known_senders_) views.push_back(k.view_pub);
            if (auto info = extract_auth(tx, self_, views)) {
                bootstrap(*info, tx.id(), block.height);
                progressed = true;
                // Catch up on anything that confirmed ahead of the handshake.
                auto pending = std::move(pending_);
                pending_.clear();
                for (const auto& buffered : pending)
                    progressed |= try_segment(buffered, block.height);
            } else if (tx.outputs.size() >= 2) {
                if (pending_.size() == kPendingCap) pending_.erase(pending_.begin());
                pending_.push_back(tx);
            }
            continue;
        }

        // A fresh handshake from a known sender replaces an unfinished
        // session; a finished one stays finished.
        if (tx.outputs.size() >= 3 && state_ == ReceiverState::Receiving) {
            std::vector<Point> views;
            views.reserve(known_senders_.size());
            for (const auto& k : known_senders_) views.push_back(k.view_pub);
            if (auto info = extract_auth(tx, self_, views)) {
                bootstrap(*info, tx.id(), block.height);
                progressed = true;
                continue;
            }
        }

        if (state_ == ReceiverState::Receiving) {
            progressed |= try_segment(tx, block.height);
        } else if (extract_segment(tx, self_, sig_)) {
            sender_activity = true;  // duplicate after completion
        }
    }

    if (state_ == ReceiverState::Receiving) {
        if (is_complete()) {
            state_ = ReceiverState::Complete;
            record("done", "complete", block.height, {}, final_seq_,
                   std::to_string(final_seq_) + " segments");
            emit_feedback(0, block.height);
            patience_spent_ = false;
            return;
        }
        if (progressed) {
            silent_blocks_ = 0;
            // Gaps with a known tail are certainly losses: request the first.
            // With the tail unknown the stream may still be in flight, so
            // stay quiet until the patience timer below runs out.
            if (final_seq_ != 0) emit_feedback(next_wanted(), block.height);
        } else if (++silent_blocks_ >= config_.fb_retry_blocks) {
            record("feedback", "patience", block.height, {}, 0,
                   std::to_string(silent_blocks_) + " blocks without progress");
            emit_feedback(next_wanted(), block.height);
        }
        return;
    }

    if (state_ == ReceiverState::Complete) {
        if (sender_activity) {
            // The sender is still transmitting, so the ack was lost: repeat it.
            emit_feedback(0, block.height);
            patience_spent_ = false;
        } else if (!patience_spent_ && ++silent_blocks_ >= config_.fb_retry_blocks) {
            emit_feedback(0, block.height);
            patience_spent_ = true;
        }
    }
}

std::optional<std::vector<uint8_t>> ReceiverSession::message() const {
    if (!is_complete()) return std::nullopt;
    std::vector<Bytes32> segs;
    segs.reserve(final_seq_);
    for (uint32_t seq = 1; seq <= final_seq_; ++seq) segs.push_back(received_.at(seq));
    try {
        return reassemble(segs);
    } catch (const ParseError&) {
        return std::nullopt;  // peer sent a malformed frame
    }
}

std::optional<Point> ReceiverSession::sender_view_pub() const {
    if (state_ == ReceiverState::WaitAuth) return std::nullopt;
    return known_senders_[sender_index_].view_pub;
}

std::string ReceiverSession::save_state() const {
    json senders = json::array();
    for (const auto& k : known_senders_) senders.push_back(peer_json(k));
    json recv = json::object();
    for (const auto& [seq, m] : received_) recv[std::to_string(seq)] = to_hex(view(m));
    json pending = json::array();
    for (const auto& tx : pending_) pending.push_back(to_hex(view(tx.serialize())));
    json j{{"kind", "covtx-receiver-state"},
           {"version", 1},
           {"config", config_json(config_)},
           {"rng", rng_.save_state()},
           {"self", keyquad_json(self_)},
           {"known_senders", senders},
           {"state", to_string(state_)},
           {"sender_index", sender_index_},
           {"sig", sig_json(sig_)},
           {"received", recv},
           {"final_seq", final_seq_},
           {"pending", pending},
           {"own_txids", txids_json(own_txids_)},
           {"next_height", next_height_},
           {"silent_blocks", silent_blocks_},
           {"patience_spent", patience_spent_},
           {"transcript", transcript_json(transcript_)}};
    return j.dump(2);
}

ReceiverSession ReceiverSession::restore_state(ChainStore& chain, const std::string& blob) {
    const json j = parse_state_blob(blob, "covtx-receiver-state");
    ReceiverSession r(chain);
    try {
        r.config_ = json_config(j.at("config"));
        r.rng_ = Rng::restore_state(j.at("rng").get<std::string>());
        r.self_ = json_keyquad(j.at("self"));
        for (const auto& e : j.at("known_senders")) r.known_senders_.push_back(json_peer(e));
        r.state_ = state_from_string<ReceiverState>(
            j.at("state").get<std::string>(),
            {ReceiverState::WaitAuth, ReceiverState::Receiving, ReceiverState::Complete});
        r.sender_index_ = j.at("sender_index").get<size_t>();
        r.sig_ = json_sig(j.at("sig"));
        for (const auto& [key, value] : j.at("received").items()) {
            uint32_t seq = 0;
            for (char c : key) {
                if (c < '0' || c > '9' || seq > kMaxSegments)
                    throw UsageError("state segment number off range");
                seq = seq * 10 + static_cast<uint32_t>(c - '0');
            }
            if (seq < 1 || seq > kMaxSegments) throw UsageError("state segment number off range");
            r.received_[seq] = from_hex_array<32>(value.get<std::string>());
        }
        r.final_seq_ = j.at("final_seq").get<uint32_t>();
        for (const auto& e : j.at("pending")) {
            const auto raw = from_hex(e.get<std::string>());
            r.pending_.push_back(Transaction::deserialize(view(raw)));
        }
        r.own_txids_ = json_txids(j.at("own_txids"));
        r.next_height_ = j.at("next_height").get<uint64_t>();
        r.silent_blocks_ = j.at("silent_blocks").get<uint64_t>();
        r.patience_spent_ = j.at("patience_spent").get<bool>();
        r.transcript_ = json_transcript(j.at("transcript"));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed session state: ") + e.what());
    }
    if (r.known_senders_.empty()) throw UsageError("session state has no known senders");
    if (r.state_ != ReceiverState::WaitAuth && r.sender_index_ >= r.known_senders_.size())
        throw UsageError("session state sender index off range");
    return r;
}

}  // namespace covtx
