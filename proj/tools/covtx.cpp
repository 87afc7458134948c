// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

// covtx: wallets, covert sessions, the simulated chain, and the concealment
// statistics behind one binary. Commands print transcript records as JSONL on
// stdout (one object per line, the last line a summary) and a one-line human
// digest on stderr. Every command is deterministic once its seed is fixed;
// state files make multi-invocation send/receive runs resumable.

#include <covtx/covert.hpp>
#include <covtx/errors.hpp>
#include <covtx/keys.hpp>
#include <covtx/ledger.hpp>
#include <covtx/session.hpp>
#include <covtx/stealth.hpp>
#include <covtx/stego.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace covtx;

// Exit codes shared with scripts: 1 is any error, protocol outcomes get
// their own values so callers can branch without parsing output.
constexpr int kOk = 0;
constexpr int kNoSession = 2;
constexpr int kTimedOut = 3;
constexpr int kIncomplete = 4;
constexpr int kIntegrityFailed = 5;

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open file: " + path);
    return std::vector<uint8_t>((std::istreambuf_iterator<char>(f)),
                                std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, ByteView data) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write file: " + path);
    f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!f) throw UsageError("short write to file: " + path);
}

std::string read_text(const std::string& path) {
    const auto raw = read_file(path);
    return std::string(raw.begin(), raw.end());
}

void write_text(const std::string& path, const std::string& text) {
    write_file(path, view(text));
}

// Delivery-attack spec strings: none | random:RATE:SEED |
// random-first:RATE:SEED | seqs:N[,N...] | window:FROM:TO
DropPolicy parse_drop_policy(const std::string& spec) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ':')) parts.push_back(item);

    const auto bad = [&](const char* why) {
        return UsageError("bad --drop-policy \"" + spec + "\": " + why);
    };
    const auto num = [&](const std::string& s, const char* what) -> uint64_t {
        try {
            size_t used = 0;
            const uint64_t v = std::stoull(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw bad(what);
        }
    };

    if (parts.empty()) throw bad("empty spec");
    if (parts[0] == "none") {
        if (parts.size() != 1) throw bad("none takes no arguments");
        return DropPolicy::none();
    }
    if (parts[0] == "random" || parts[0] == "random-first") {
        if (parts.size() != 3) throw bad("expected RATE:SEED");
        double rate = 0;
        try {
            size_t used = 0;
            rate = std::stod(parts[1], &used);
            if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        } catch (const std::exception&) {
            throw bad("rate is not a number");
        }
        if (rate < 0.0 || rate > 1.0) throw bad("rate must lie in [0, 1]");
        const uint64_t seed = num(parts[2], "seed is not a number");
        return parts[0] == "random" ? DropPolicy::random_rate(rate, seed)
                                    : DropPolicy::random_rate_first_attempts(rate, seed);
    }
    if (parts[0] == "seqs") {
        if (parts.size() != 2) throw bad("expected a comma-separated list");
        std::set<uint32_t> seqs;
        std::string n;
        std::istringstream list(parts[1]);
        while (std::getline(list, n, ','))
            seqs.insert(static_cast<uint32_t>(num(n, "sequence number is not a number")));
        if (seqs.empty()) throw bad("empty sequence list");
        return DropPolicy::target_seqs(std::move(seqs));
    }
    if (parts[0] == "window") {
        if (parts.size() != 3) throw bad("expected FROM:TO");
        const uint64_t from = num(parts[1], "FROM is not a number");
        const uint64_t to = num(parts[2], "TO is not a number");
        if (from > to) throw bad("FROM exceeds TO");
        return DropPolicy::window_blocks(from, to);
    }
    throw bad("unknown kind (none, random, random-first, seqs, window)");
}

Rng make_rng(const std::optional<uint64_t>& seed) { return seed ? Rng(*seed) : Rng(); }

// Bystander payments riding in every produced block, so covert transactions
// are not the only traffic on a demo chain. Uses the covert fee: a fee gap
// would hand an observer a trivial classifier.
struct CoverTraffic {
    Rng rng;
    KeyQuad crowd;
    uint64_t per_block = 0;
    uint64_t fee = 0;

    CoverTraffic(Rng r, uint64_t n, uint64_t f) : rng(std::move(r)), crowd(KeyQuad::generate(rng)),
                                                  per_block(n), fee(f) {}

    void submit(ChainStore& chain) {
        for (uint64_t i = 0; i < per_block; ++i) {
            const Transaction tx = build_normal_tx(rng, crowd, crowd.view_pub, crowd.spend_pub,
                                                   random_amount(rng), fee);
            chain.submit_tx(tx);  // untagged: reads as normal traffic
        }
    }
};

ChainStore open_chain(const std::string& path, uint64_t min_fee, bool must_exist) {
    if (std::filesystem::exists(path)) return ChainStore::load(path);
    if (must_exist) throw UsageError("chain file not found: " + path);
    return ChainStore(min_fee);
}

json record_json(const TranscriptRecord& r, const char* role) {
    return json{{"role", role},   {"stage", r.stage}, {"action", r.action},
                {"block", r.block}, {"tx", r.tx_id},    {"seq", r.seq},
                {"note", r.note}};
}

// stdout carries only the records added by this invocation; the --transcript
// file, when given, gets the whole session history.
void emit_transcript(const Transcript& t, size_t from, const char* role,
                     const std::string& file) {
    for (size_t i = from; i < t.size(); ++i) std::cout << record_json(t[i], role).dump() << "\n";
    if (!file.empty()) write_text(file, transcript_to_jsonl(t));
}

void emit_summary(const json& fields) {
    std::cout << json{{"summary", fields}}.dump() << "\n";
}

// ---------------------------------------------------------------------------
// keygen
// ---------------------------------------------------------------------------

struct KeygenOpts {
    std::string out;
    std::string pub_out;
    std::optional<uint64_t> seed;
    bool force = false;
};

int cmd_keygen(const KeygenOpts& o) {
    Rng rng = make_rng(o.seed);
    const KeyQuad keys = KeyQuad::generate(rng);
    const std::string pub_path = o.pub_out.empty() ? o.out + ".pub" : o.pub_out;
    save_wallet(o.out, keys, o.force);
    save_peer_keys(pub_path, peer_keys(keys), o.force);

    emit_summary({{"command", "keygen"},
                  {"wallet", o.out},
                  {"pub_file", pub_path},
                  {"view_pub", to_hex(view(keys.view_pub.encode()))},
                  {"spend_pub", to_hex(view(keys.spend_pub.encode()))}});
    std::cerr << "covtx keygen: wrote " << o.out << " and " << pub_path << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// send
// ---------------------------------------------------------------------------

struct SendOpts {
    std::string wallet;
    std::string to;
    std::string message;
    std::string chain;
    std::string state;
    std::string transcript;
    std::string drop_policy = "none";
    std::string respond_wallet;
    std::optional<uint64_t> seed;
    uint64_t wait_blocks = 0;
    uint64_t max_blocks = 1000;
    uint64_t min_fee = 1;
    uint64_t cover_txs = 0;
    bool fresh = false;
    SessionConfig session;
};

int cmd_send(const SendOpts& o) {
    ChainStore chain = open_chain(o.chain, o.min_fee, false);
    chain.set_drop_policy(parse_drop_policy(o.drop_policy));

    const bool resuming = !o.fresh && !o.state.empty() && std::filesystem::exists(o.state);

    std::optional<SenderSession> sender;
    PeerKeys to{};
    if (resuming) {
        sender.emplace(SenderSession::restore_state(chain, read_text(o.state)));
    } else {
        if (o.wallet.empty()) throw UsageError("--wallet is required to start a session");
        if (o.to.empty()) throw UsageError("--to is required to start a session");
        if (o.message.empty()) throw UsageError("--message is required to start a session");
        to = load_peer_keys(o.to);
        sender.emplace(chain, make_rng(o.seed), load_wallet(o.wallet), to, o.session);
    }

    // Loopback responder for single-invocation demos: requires the recipient
    // wallet, so it only exists when one operator plays both ends.
    std::optional<ReceiverSession> responder;
    if (!o.respond_wallet.empty()) {
        if (resuming) throw UsageError("--respond-wallet cannot be combined with a resumed state");
        const KeyQuad rw = load_wallet(o.respond_wallet);
        if (rw.view_pub.encode() != to.view_pub.encode() ||
            rw.spend_pub.encode() != to.spend_pub.encode())
            throw UsageError("--respond-wallet keys do not match --to");
        Rng rrng = o.seed ? Rng(*o.seed).child("responder", 0) : Rng();
        responder.emplace(chain, std::move(rrng), rw,
                          std::vector<PeerKeys>{load_peer_keys(o.wallet)}, o.session);
    }

    const size_t new_records = sender->transcript().size();
    uint64_t next = 0;

    if (!resuming) {
        // Feed history before the handshake so stale blocks never count as
        // post-send silence.
        for (const Block& b : chain.get_blocks(0)) {
            if (responder) responder->on_block(b);
            sender->on_block(b);
        }
        next = chain.height();
        const auto message = read_file(o.message);
        sender->start(view(message));
    }

    // With a responder attached the run should reach a terminal state, so it
    // is allowed to sit through silence up to the sender's own timeout.
    const uint64_t wait_budget =
        responder ? std::max(o.wait_blocks, o.session.feedback_timeout_blocks) : o.wait_blocks;

    CoverTraffic cover(o.seed ? Rng(*o.seed).child("cover", 0) : Rng(), o.cover_txs,
                       o.session.fee);
    uint64_t waited = 0;
    uint64_t produced = 0;
    while (true) {
        for (const Block& b : chain.get_blocks(next)) {
            if (responder) responder->on_block(b);
            sender->on_block(b);
        }
        next = chain.height();
        if (sender->state() == SenderState::Done || sender->state() == SenderState::TimedOut)
            break;
        if (produced >= o.max_blocks) break;  // liveness guard for hostile policies
        if (chain.mempool_size() > 0) {
            cover.submit(chain);
            chain.produce_block();
            ++produced;
            continue;
        }
        if (sender->state() == SenderState::AwaitFeedback && waited < wait_budget) {
            cover.submit(chain);
            chain.produce_block();
            ++produced;
            ++waited;
            continue;
        }
        break;
    }

    chain.save(o.chain);
    if (!o.state.empty())
        write_text(o.state, sender->save_state());
    else if (sender->state() == SenderState::AwaitFeedback)
        std::cerr << "covtx send: warning: awaiting feedback but no --state file to resume from\n";

    emit_transcript(sender->transcript(), new_records, "sender", o.transcript);
    emit_summary({{"command", "send"},
                  {"state", to_string(sender->state())},
                  {"segments", sender->segment_count()},
                  {"feedback_rounds", sender->feedback_rounds()},
                  {"resends", sender->resend_count()},
                  {"drops", chain.drop_log().size()},
                  {"height", chain.height()}});
    std::cerr << "covtx send: state=" << to_string(sender->state())
              << " segments=" << sender->segment_count()
              << " rounds=" << sender->feedback_rounds() << " resends=" << sender->resend_count()
              << " height=" << chain.height() << "\n";

    return sender->state() == SenderState::TimedOut ? kTimedOut : kOk;
}

// ---------------------------------------------------------------------------
// receive
// ---------------------------------------------------------------------------

struct RecvOpts {
    std::string wallet;
    std::vector<std::string> from;
    std::string chain;
    std::string out;
    std::string state;
    std::string transcript;
    std::string drop_policy = "none";
    std::optional<uint64_t> seed;
    uint64_t cover_txs = 0;
    bool fresh = false;
    SessionConfig session;
};

int cmd_receive(const RecvOpts& o) {
    ChainStore chain = open_chain(o.chain, 1, true);
    chain.set_drop_policy(parse_drop_policy(o.drop_policy));

    const bool resuming = !o.fresh && !o.state.empty() && std::filesystem::exists(o.state);

    std::optional<ReceiverSession> rx;
    if (resuming) {
        rx.emplace(ReceiverSession::restore_state(chain, read_text(o.state)));
    } else {
        if (o.wallet.empty()) throw UsageError("--wallet is required to start a session");
        if (o.from.empty()) throw UsageError("at least one --from is required to start a session");
        std::vector<PeerKeys> senders;
        senders.reserve(o.from.size());
        for (const auto& path : o.from) senders.push_back(load_peer_keys(path));
        rx.emplace(chain, make_rng(o.seed), load_wallet(o.wallet), std::move(senders), o.session);
    }

    const size_t new_records = rx->transcript().size();
    CoverTraffic cover(o.seed ? Rng(*o.seed).child("cover", 0) : Rng(), o.cover_txs,
                       o.session.fee);
    uint64_t next = 0;
    while (true) {
        for (const Block& b : chain.get_blocks(next)) rx->on_block(b);
        next = chain.height();
        // Confirm our own feedback so the counterparty can observe it.
        if (chain.mempool_size() > 0) {
            cover.submit(chain);
            chain.produce_block();
            continue;
        }
        break;
    }

    chain.save(o.chain);
    if (!o.state.empty()) write_text(o.state, rx->save_state());

    size_t bytes = 0;
    if (rx->complete()) {
        const auto message = rx->message();
        if (!message) throw UsageError("session complete but the frame failed to reassemble");
        bytes = message->size();
        write_file(o.out, view(*message));
    }

    emit_transcript(rx->transcript(), new_records, "receiver", o.transcript);
    emit_summary({{"command", "receive"},
                  {"state", to_string(rx->state())},
                  {"segments_received", rx->segments_received()},
                  {"final_seq", rx->final_seq()},
                  {"message_bytes", bytes},
                  {"height", chain.height()}});
    std::cerr << "covtx receive: state=" << to_string(rx->state())
              << " segments=" << rx->segments_received() << " final=" << rx->final_seq()
              << " height=" << chain.height() << "\n";

    if (rx->complete()) return kOk;
    if (rx->state() == ReceiverState::WaitAuth) {
        std::cerr << "covtx receive: no session found on this chain\n";
        return kNoSession;
    }
    return kIncomplete;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOpts {
    std::string chain;
    std::string out;
    std::string json_out;
    AnalysisConfig cfg;
};

int cmd_analyze(const AnalyzeOpts& o) {
    std::optional<ChainStore> chain;
    AnalysisConfig cfg = o.cfg;
    if (!o.chain.empty()) {
        chain.emplace(ChainStore::load(o.chain));
        cfg.from_chain = true;
    }

    const AnalysisReport report = run_experiment(chain ? &*chain : nullptr, cfg);
    if (o.out.empty())
        std::cout << report.to_text();
    else
        write_text(o.out, report.to_text());
    if (!o.json_out.empty()) write_text(o.json_out, report.to_json());

    std::cerr << "covtx analyze: " << cfg.groups << " groups x " << cfg.group_size
              << ", ks " << cfg.ks_samples << " x " << cfg.ks_instances << ", seed " << cfg.seed
              << (o.out.empty() ? "" : ", report " + o.out) << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimOpts {
    std::string scenario = "none";
    uint64_t seed = 7;
    uint64_t message_bytes = 100;
    std::string message;
    std::string out_dir;
    uint64_t max_blocks = 200;
    uint64_t cover_txs = 0;
    SessionConfig session;
};

DropPolicy scenario_policy(const std::string& name, uint64_t seed) {
    if (name == "none") return DropPolicy::none();
    if (name == "drop-seq-2") return DropPolicy::target_seqs({2});
    if (name == "drop-all-forever") return DropPolicy::random_rate(1.0, seed);
    if (name == "random-20") return DropPolicy::random_rate_first_attempts(0.2, seed);
    throw UsageError("unknown scenario: " + name);
}

int cmd_simulate(const SimOpts& o) {
    Rng root(o.seed);
    Rng sender_wallet_rng = root.child("sender-wallet", 0);
    Rng receiver_wallet_rng = root.child("receiver-wallet", 0);
    const KeyQuad alice = KeyQuad::generate(sender_wallet_rng);
    const KeyQuad bob = KeyQuad::generate(receiver_wallet_rng);

    Rng message_rng = root.child("message", 0);
    const std::vector<uint8_t> message =
        o.message.empty() ? message_rng.bytes(o.message_bytes) : read_file(o.message);

    ChainStore chain(1);
    chain.set_drop_policy(scenario_policy(o.scenario, o.seed));

    SenderSession sx(chain, root.child("sender", 0), alice, peer_keys(bob), o.session);
    ReceiverSession rx(chain, root.child("receiver", 0), bob, {peer_keys(alice)}, o.session);

    CoverTraffic cover(root.child("cover", 0), o.cover_txs, o.session.fee);
    sx.start(view(message));
    while (sx.state() != SenderState::Done && sx.state() != SenderState::TimedOut &&
           chain.height() < o.max_blocks) {
        cover.submit(chain);
        const Block b = chain.produce_block();
        rx.on_block(b);
        sx.on_block(b);
    }

    const auto delivered = rx.message();
    const bool integrity = sx.state() == SenderState::Done && rx.complete() && delivered &&
                           *delivered == message;

    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        const auto in_dir = [&](const char* name) { return o.out_dir + "/" + name; };
        save_wallet(in_dir("sender.json"), alice, true);
        save_wallet(in_dir("receiver.json"), bob, true);
        save_peer_keys(in_dir("sender.json.pub"), peer_keys(alice), true);
        save_peer_keys(in_dir("receiver.json.pub"), peer_keys(bob), true);
        chain.save(in_dir("chain.bin"));
        write_file(in_dir("message.bin"), view(message));
        if (delivered) write_file(in_dir("received.bin"), view(*delivered));
        write_text(in_dir("sender.jsonl"), transcript_to_jsonl(sx.transcript()));
        write_text(in_dir("receiver.jsonl"), transcript_to_jsonl(rx.transcript()));
    }

    emit_transcript(sx.transcript(), 0, "sender", {});
    emit_transcript(rx.transcript(), 0, "receiver", {});
    emit_summary({{"command", "simulate"},
                  {"scenario", o.scenario},
                  {"seed", o.seed},
                  {"message_bytes", message.size()},
                  {"segments", sx.segment_count()},
                  {"sender_state", to_string(sx.state())},
                  {"receiver_state", to_string(rx.state())},
                  {"feedback_rounds", sx.feedback_rounds()},
                  {"resends", sx.resend_count()},
                  {"drops", chain.drop_log().size()},
                  {"blocks", chain.height()},
                  {"integrity", integrity}});
    std::cerr << "covtx simulate: scenario=" << o.scenario << " integrity="
              << (integrity ? "ok" : "FAILED") << " sender=" << to_string(sx.state())
              << " receiver=" << to_string(rx.state()) << " drops=" << chain.drop_log().size()
              << " resends=" << sx.resend_count() << " blocks=" << chain.height() << "\n";

    if (integrity) return kOk;
    return sx.state() == SenderState::TimedOut ? kTimedOut : kIntegrityFailed;
}

void add_session_flags(CLI::App* cmd, SessionConfig& cfg) {
    cmd->add_option("--timeout-blocks", cfg.feedback_timeout_blocks,
                    "Sender gives up after this many blocks without feedback")
        ->capture_default_str();
    cmd->add_option("--fb-retry-blocks", cfg.fb_retry_blocks,
                    "Receiver repeats feedback after this many blocks without progress")
        ->capture_default_str();
    cmd->add_option("--retry-budget", cfg.retry_budget,
                    "Rejection-sampling draw budget per covert field")
        ->capture_default_str();
    cmd->add_option("--fee", cfg.fee, "Fee attached to covert transactions")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covert transactions over a simulated ledger"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "covtx 1.0.0");

    int rc = kOk;

    KeygenOpts ko;
    auto* keygen = app.add_subcommand("keygen", "Generate a wallet (view and spend key pairs)");
    keygen->set_config("--config");
    keygen->add_option("--out", ko.out, "Wallet file to write")->required();
    keygen->add_option("--pub-out", ko.pub_out, "Public-half file (default <out>.pub)");
    keygen->add_option("--seed", ko.seed, "Deterministic wallet seed");
    keygen->add_flag("--force", ko.force, "Overwrite existing files");
    keygen->callback([&] { rc = cmd_keygen(ko); });

    SendOpts so;
    auto* send = app.add_subcommand("send", "Transmit a message through covert transactions");
    send->set_config("--config");
    send->add_option("--wallet", so.wallet, "Sender wallet (ignored when resuming)");
    send->add_option("--to", so.to, "Recipient public keys (ignored when resuming)");
    send->add_option("--message", so.message, "File with the message bytes");
    send->add_option("--chain", so.chain, "Chain file, created when missing")->required();
    send->add_option("--state", so.state, "Session state file for resumable runs");
    send->add_option("--transcript", so.transcript, "Write the full transcript JSONL here");
    send->add_option("--drop-policy", so.drop_policy,
                     "none | random:RATE:SEED | random-first:RATE:SEED | seqs:N[,N] | "
                     "window:FROM:TO")
        ->capture_default_str();
    send->add_option("--respond-wallet", so.respond_wallet,
                     "Drive an in-process responder with this wallet (single-run demo)");
    send->add_option("--seed", so.seed, "Session randomness seed");
    send->add_option("--wait-blocks", so.wait_blocks,
                     "Produce up to this many empty blocks while awaiting feedback")
        ->capture_default_str();
    send->add_option("--max-blocks", so.max_blocks, "Block production cap for this invocation")
        ->capture_default_str();
    send->add_option("--min-fee", so.min_fee, "Minimum relay fee when creating a new chain")
        ->capture_default_str();
    send->add_option("--cover-txs", so.cover_txs, "Bystander payments added to each produced block")
        ->capture_default_str();
    send->add_flag("--fresh", so.fresh, "Start a new session even if --state exists");
    add_session_flags(send, so.session);
    send->callback([&] { rc = cmd_send(so); });

    RecvOpts ro;
    auto* recv = app.add_subcommand("receive", "Scan a chain for a covert session and answer it");
    recv->set_config("--config");
    recv->add_option("--wallet", ro.wallet, "Receiver wallet (ignored when resuming)");
    recv->add_option("--from", ro.from, "Known sender public keys (repeatable)");
    recv->add_option("--chain", ro.chain, "Chain file to scan")->required();
    recv->add_option("--out", ro.out, "Write the reassembled message here")->required();
    recv->add_option("--state", ro.state, "Session state file for resumable runs");
    recv->add_option("--transcript", ro.transcript, "Write the full transcript JSONL here");
    recv->add_option("--drop-policy", ro.drop_policy, "Delivery attack applied to produced blocks")
        ->capture_default_str();
    recv->add_option("--seed", ro.seed, "Session randomness seed");
    recv->add_option("--cover-txs", ro.cover_txs, "Bystander payments added to each produced block")
        ->capture_default_str();
    recv->add_flag("--fresh", ro.fresh, "Start a new session even if --state exists");
    add_session_flags(recv, ro.session);
    recv->callback([&] { rc = cmd_receive(ro); });

    AnalyzeOpts ao;
    auto* analyze = app.add_subcommand("analyze", "Concealment statistics report (KLD, CDF, KS)");
    analyze->set_config("--config");
    analyze->add_option("--chain", ao.chain, "Read special fields off this chain instead of generating");
    analyze->add_option("--groups", ao.cfg.groups, "KLD group count")->capture_default_str();
    analyze->add_option("--group-size", ao.cfg.group_size, "Instances per kind per group")
        ->capture_default_str();
    analyze->add_option("--reference-size", ao.cfg.reference_size, "Fresh reference corpus size")
        ->capture_default_str();
    analyze->add_option("--ks-samples", ao.cfg.ks_samples, "KS battery repetitions per pair")
        ->capture_default_str();
    analyze->add_option("--ks-instances", ao.cfg.ks_instances, "Instances resampled per repetition")
        ->capture_default_str();
    analyze->add_option("--seed", ao.cfg.seed, "Analysis seed")->capture_default_str();
    analyze->add_option("--out", ao.out, "Write the text report here instead of stdout");
    analyze->add_option("--json-out", ao.json_out, "Write the machine-readable report here");
    analyze->callback([&] { rc = cmd_analyze(ao); });

    SimOpts mo;
    auto* sim = app.add_subcommand("simulate",
                                   "Keygen + send + receive in one process under a drop scenario");
    sim->set_config("--config");
    sim->add_option("--scenario", mo.scenario,
                    "none | drop-seq-2 | drop-all-forever | random-20")
        ->check(CLI::IsMember({"none", "drop-seq-2", "drop-all-forever", "random-20"}))
        ->capture_default_str();
    sim->add_option("--seed", mo.seed, "Scenario seed (wallets, message, drops)")
        ->capture_default_str();
    sim->add_option("--message-bytes", mo.message_bytes, "Random message length when no file given")
        ->capture_default_str();
    sim->add_option("--message", mo.message, "Use this file instead of a random message");
    sim->add_option("--out-dir", mo.out_dir, "Dump wallets, chain, message and transcripts here");
    sim->add_option("--max-blocks", mo.max_blocks, "Abort the run after this many blocks")
        ->capture_default_str();
    sim->add_option("--cover-txs", mo.cover_txs, "Bystander payments added to each produced block")
        ->capture_default_str();
    add_session_flags(sim, mo.session);
    sim->callback([&] { rc = cmd_simulate(mo); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const covtx::ParseError& e) {
        std::cerr << "covtx: malformed input: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "covtx: error: " << e.what() << "\n";
        return 1;
    } catch (const RetryExhausted& e) {
        std::cerr << "covtx: error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "covtx: unexpected error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
