// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_LEDGER_HPP
#define COVTX_LEDGER_HPP

#include <covtx/bytes.hpp>
#include <covtx/transaction.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

namespace covtx {

struct Block {
    uint64_t height = 0;
    Digest32 prev_id{};
    std::vector<Transaction> txs;
    Digest32 id{};

    // height(u64le) || prev_id(32) || n_tx(u32le) || n_tx * (len(u32le) || tx).
    // The block id is the hash of this body.
    std::vector<uint8_t> serialize_body() const;
    Digest32 compute_id() const;
};

// Role annotation for a submitted transaction. This is observer-side
// knowledge used by targeted delivery attacks and by the statistics
// harness; consensus validation never reads it.
enum class TxKind : uint8_t { Normal = 0, Auth = 1, Segment = 2, Feedback = 3 };

struct TxTag {
    TxKind kind = TxKind::Normal;
    uint32_t seq = 0;      // segment number, when kind == Segment
    uint32_t attempt = 1;  // 1 = first transmission, 2+ = resends
};

// Adversarial delivery model applied at block production time. Deterministic:
// random drops are a pure function of (seed, tx id), independent of call
// order and of how submissions are batched into blocks.
class DropPolicy {
  public:
    DropPolicy() = default;  // drops nothing

    static DropPolicy none();
    // Drop each tx independently with probability `rate`.
    static DropPolicy random_rate(double rate, uint64_t seed);
    // Same draw, but only first-transmission segment txs are at risk; auth,
    // feedback and resends always go through.
    static DropPolicy random_rate_first_attempts(double rate, uint64_t seed);
    // Drop the first transmission of the given segment numbers.
    static DropPolicy target_seqs(std::set<uint32_t> seqs);
    // Drop every tx while the block being produced lies in [from, to].
    static DropPolicy window_blocks(uint64_t from, uint64_t to);

    bool should_drop(const Digest32& txid, const std::optional<TxTag>& tag,
                     uint64_t block_height) const;

    bool drops_anything() const { return mode_ != Mode::None; }

  private:
    enum class Mode : uint8_t { None, RandomRate, RandomRateFirst, TargetSeqs, WindowBlocks };
    Mode mode_ = Mode::None;
    double rate_ = 0.0;
    uint64_t seed_ = 0;
    std::set<uint32_t> seqs_;
    uint64_t from_ = 0, to_ = 0;
};

// Why a transaction was refused.
enum class RejectCode : uint8_t { InvalidPoint, IndexOrder, LowFee, Duplicate };

struct Reject {
    RejectCode code;
    std::string detail;
};

const char* to_string(RejectCode code);

// Single-producer simulated blockchain: a FIFO mempool, deterministic block
// production, and an append-only confirmed chain. One writer at a time;
// concurrent readers see only fully produced blocks.
class ChainStore {
  public:
    explicit ChainStore(uint64_t min_fee = 1);

    // Copyable snapshot semantics for tests and tooling.
    ChainStore(const ChainStore& other);
    ChainStore& operator=(const ChainStore& other);

    // nullopt = acceptable. Checks output addresses decode as group elements,
    // output indices run 0..n-1, and fee >= the configured minimum.
    std::optional<Reject> validate_tx(const Transaction& tx) const;

    // Validate, refuse ids already seen, then enqueue.
    std::optional<Reject> submit_tx(const Transaction& tx);

    void annotate(const Digest32& txid, const TxTag& tag);
    std::optional<TxTag> tag_of(const Digest32& txid) const;

    void set_drop_policy(DropPolicy policy);

    // Drain the mempool into exactly one new block (possibly empty), applying
    // the drop policy; suppressed txs vanish silently. Returns the new block.
    Block produce_block();

    uint64_t height() const;  // number of confirmed blocks
    std::optional<Block> block_at(uint64_t height) const;
    std::vector<Block> get_blocks(uint64_t from_height) const;
    std::optional<Block> find_block(const Digest32& block_id) const;

    // Confirmed transaction lookup: (block height, tx).
    std::optional<std::pair<uint64_t, Transaction>> find_tx(const Digest32& txid) const;

    size_t mempool_size() const;
    std::vector<Transaction> mempool_txs() const;
    uint64_t min_fee() const { return min_fee_; }

    struct DropRecord {
        Digest32 txid;
        uint64_t block_height;  // block whose production dropped it
    };
    std::vector<DropRecord> drop_log() const;

    // Re-run validate_tx over every confirmed transaction; first failure.
    std::optional<std::pair<uint64_t, Reject>> revalidate() const;

    // Binary chain file (magic "COVTXCH1"): confirmed blocks, mempool and
    // tags. Loading reconstructs ids and verifies chain linkage; malformed
    // input raises ParseError with a byte offset and no partial state.
    void save(const std::string& path) const;
    static ChainStore load(const std::string& path);

  private:
    std::optional<Reject> validate_locked(const Transaction& tx) const;

    mutable std::shared_mutex mu_;
    uint64_t min_fee_ = 1;
    DropPolicy policy_;
    std::vector<Block> blocks_;
    std::vector<Transaction> mempool_;
    std::set<Digest32> seen_;  // ids on chain or queued
    std::map<Digest32, TxTag> tags_;
    std::vector<DropRecord> drops_;
};

}  // namespace covtx

#endif  // COVTX_LEDGER_HPP
