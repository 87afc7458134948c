// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/ledger.hpp>

#include <covtx/errors.hpp>
#include <covtx/group.hpp>
#include <covtx/hash.hpp>

#include <cstring>
#include <fstream>
#include <mutex>

namespace covtx {

namespace {

constexpr char kMagic[8] = {'C', 'O', 'V', 'T', 'X', 'C', 'H', '1'};

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t fnv1a64(const Digest32& d) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (uint8_t b : d) h = (h ^ b) * 0x100000001b3ULL;
    return h;
}

void append_u32(std::vector<uint8_t>& out, uint32_t v) {
    uint8_t b[4];
    store_le32(b, v);
    out.insert(out.end(), b, b + 4);
}

void append_u64(std::vector<uint8_t>& out, uint64_t v) {
    uint8_t b[8];
    store_le64(b, v);
    out.insert(out.end(), b, b + 8);
}

// Bounds-checked little-endian reader with absolute offsets for ParseError.
class Reader {
  public:
    explicit Reader(ByteView data) : data_(data) {}

    size_t offset() const { return off_; }
    bool done() const { return off_ == data_.size(); }

    void need(size_t n, const char* what) {
        if (data_.size() - off_ < n)
            throw ParseError(std::string("chain file truncated in ") + what, off_);
    }
    uint32_t u32(const char* what) {
        need(4, what);
        uint32_t v = load_le32(data_.data() + off_);
        off_ += 4;
        return v;
    }
    uint64_t u64(const char* what) {
        need(8, what);
        uint64_t v = load_le64(data_.data() + off_);
        off_ += 8;
        return v;
    }
    ByteView take(size_t n, const char* what) {
        need(n, what);
        ByteView v = data_.subspan(off_, n);
        off_ += n;
        return v;
    }

  private:
    ByteView data_;
    size_t off_ = 0;
};

}  // namespace

std::vector<uint8_t> Block::serialize_body() const {
    std::vector<uint8_t> out;
    append_u64(out, height);
    out.insert(out.end(), prev_id.begin(), prev_id.end());
    append_u32(out, static_cast<uint32_t>(txs.size()));
    for (const Transaction& tx : txs) {
        const auto bytes = tx.serialize();
        append_u32(out, static_cast<uint32_t>(bytes.size()));
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
}

Digest32 Block::compute_id() const {
    return keccak256(view(serialize_body()));
}

DropPolicy DropPolicy::none() {
    return DropPolicy{};
}

DropPolicy DropPolicy::random_rate(double rate, uint64_t seed) {
    if (rate < 0.0 || rate > 1.0) throw UsageError("drop rate must lie in [0, 1]");
    DropPolicy p;
    p.mode_ = Mode::RandomRate;
    p.rate_ = rate;
    p.seed_ = seed;
    return p;
}

DropPolicy DropPolicy::random_rate_first_attempts(double rate, uint64_t seed) {
    DropPolicy p = random_rate(rate, seed);
    p.mode_ = Mode::RandomRateFirst;
    return p;
}

DropPolicy DropPolicy::target_seqs(std::set<uint32_t> seqs) {
    DropPolicy p;
    p.mode_ = Mode::TargetSeqs;
    p.seqs_ = std::move(seqs);
    return p;
}

DropPolicy DropPolicy::window_blocks(uint64_t from, uint64_t to) {
    if (to < from) throw UsageError("drop window is empty");
    DropPolicy p;
    p.mode_ = Mode::WindowBlocks;
    p.from_ = from;
    p.to_ = to;
    return p;
}

bool DropPolicy::should_drop(const Digest32& txid, const std::optional<TxTag>& tag,
                             uint64_t block_height) const {
    switch (mode_) {
        case Mode::None:
            return false;
        case Mode::RandomRate:
        case Mode::RandomRateFirst: {
            if (mode_ == Mode::RandomRateFirst &&
                !(tag && tag->kind == TxKind::Segment && tag->attempt == 1)) {
                return false;
            }
            // Keyed Bernoulli draw: a pure function of (seed, txid), so the
            // outcome does not depend on production batching.
            const uint64_t h = splitmix64(seed_ ^ fnv1a64(txid));
            const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
            return u < rate_;
        }
        case Mode::TargetSeqs:
            return tag && tag->kind == TxKind::Segment && tag->attempt == 1 &&
                   seqs_.count(tag->seq) > 0;
        case Mode::WindowBlocks:
            return block_height >= from_ && block_height <= to_;
    }
    return false;
}

const char* to_string(RejectCode code) {
    switch (code) {
        case RejectCode::InvalidPoint:
            return "invalid-point";
        case RejectCode::IndexOrder:
            return "index-order";
        case RejectCode::LowFee:
            return "fee";
        case RejectCode::Duplicate:
            return "duplicate";
    }
    return "unknown";
}

ChainStore::ChainStore(uint64_t min_fee) : min_fee_(min_fee) {}

ChainStore::ChainStore(const ChainStore& other) {
    std::shared_lock lock(other.mu_);
    min_fee_ = other.min_fee_;
    policy_ = other.policy_;
    blocks_ = other.blocks_;
    mempool_ = other.mempool_;
    seen_ = other.seen_;
    tags_ = other.tags_;
    drops_ = other.drops_;
}

ChainStore& ChainStore::operator=(const ChainStore& other) {
    if (this == &other) return *this;
    ChainStore copy(other);
    std::unique_lock lock(mu_);
    min_fee_ = copy.min_fee_;
    policy_ = std::move(copy.policy_);
    blocks_ = std::move(copy.blocks_);
    mempool_ = std::move(copy.mempool_);
    seen_ = std::move(copy.seen_);
    tags_ = std::move(copy.tags_);
    drops_ = std::move(copy.drops_);
    return *this;
}

std::optional<Reject> ChainStore::validate_locked(const Transaction& tx) const {
    if (tx.outputs.empty())
        return Reject{RejectCode::IndexOrder, "transaction has no outputs"};
    for (size_t i = 0; i < tx.outputs.size(); ++i) {
        const Output& out = tx.outputs[i];
        if (out.index != i)
            return Reject{RejectCode::IndexOrder,
                          "output " + std::to_string(i) + " carries index " +
                              std::to_string(out.index)};
        if (!Point::decode(out.stealth_address))
            return Reject{RejectCode::InvalidPoint,
                          "output " + std::to_string(i) + " address is not a group element"};
    }
    if (tx.fee < min_fee_)
        return Reject{RejectCode::LowFee, "fee " + std::to_string(tx.fee) +
                                              " is below the minimum " +
                                              std::to_string(min_fee_)};
    return std::nullopt;
}

std::optional<Reject> ChainStore::validate_tx(const Transaction& tx) const {
    std::shared_lock lock(mu_);
    return validate_locked(tx);
}

std::optional<Reject> ChainStore::submit_tx(const Transaction& tx) {
    std::unique_lock lock(mu_);
    if (auto reject = validate_locked(tx)) return reject;
    const Digest32 txid = tx.id();
    if (seen_.count(txid))
        return Reject{RejectCode::Duplicate, "tx id already submitted"};
    seen_.insert(txid);
    mempool_.push_back(tx);
    return std::nullopt;
}

void ChainStore::annotate(const Digest32& txid, const TxTag& tag) {
    std::unique_lock lock(mu_);
    tags_[txid] = tag;
}

std::optional<TxTag> ChainStore::tag_of(const Digest32& txid) const {
    std::shared_lock lock(mu_);
    auto it = tags_.find(txid);
    if (it == tags_.end()) return std::nullopt;
    return it->second;
}

void ChainStore::set_drop_policy(DropPolicy policy) {
    std::unique_lock lock(mu_);
    policy_ = std::move(policy);
}

Block ChainStore::produce_block() {
    std::unique_lock lock(mu_);
    Block block;
    block.height = blocks_.size();
    block.prev_id = blocks_.empty() ? Digest32{} : blocks_.back().id;

    for (Transaction& tx : mempool_) {
        const Digest32 txid = tx.id();
        std::optional<TxTag> tag;
        if (auto it = tags_.find(txid); it != tags_.end()) tag = it->second;
        if (policy_.should_drop(txid, tag, block.height)) {
            // Modeling network loss: the tx vanishes without a diagnostic to
            // the submitter. The id stays in seen_, matching a network where
            // a dropped payment cannot be re-broadcast verbatim.
            drops_.push_back({txid, block.height});
            continue;
        }
        block.txs.push_back(std::move(tx));
    }
    mempool_.clear();

    block.id = block.compute_id();
    blocks_.push_back(block);
    return block;
}

uint64_t ChainStore::height() const {
    std::shared_lock lock(mu_);
    return blocks_.size();
}

std::optional<Block> ChainStore::block_at(uint64_t height) const {
    std::shared_lock lock(mu_);
    if (height >= blocks_.size()) return std::nullopt;
    return blocks_[height];
}

std::vector<Block> ChainStore::get_blocks(uint64_t from_height) const {
    std::shared_lock lock(mu_);
    if (from_height >= blocks_.size()) return {};
    return std::vector<Block>(blocks_.begin() + static_cast<ptrdiff_t>(from_height),
                              blocks_.end());
}

std::optional<Block> ChainStore::find_block(const Digest32& block_id) const {
    std::shared_lock lock(mu_);
    for (const Block& b : blocks_)
        if (b.id == block_id) return b;
    return std::nullopt;
}

std::optional<std::pair<uint64_t, Transaction>> ChainStore::find_tx(const Digest32& txid) const {
    std::shared_lock lock(mu_);
    for (const Block& b : blocks_)
        for (const Transaction& tx : b.txs)
            if (tx.id() == txid) return std::make_pair(b.height, tx);
    return std::nullopt;
}

size_t ChainStore::mempool_size() const {
    std::shared_lock lock(mu_);
    return mempool_.size();
}

std::vector<Transaction> ChainStore::mempool_txs() const {
    std::shared_lock lock(mu_);
    return mempool_;
}

std::vector<ChainStore::DropRecord> ChainStore::drop_log() const {
    std::shared_lock lock(mu_);
    return drops_;
}

std::optional<std::pair<uint64_t, Reject>> ChainStore::revalidate() const {
    std::shared_lock lock(mu_);
    for (const Block& b : blocks_)
        for (const Transaction& tx : b.txs)
            if (auto reject = validate_locked(tx)) return std::make_pair(b.height, *reject);
    return std::nullopt;
}

void ChainStore::save(const std::string& path) const {
    std::shared_lock lock(mu_);

    std::vector<uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + sizeof(kMagic));
    append_u64(out, min_fee_);

    append_u32(out, static_cast<uint32_t>(blocks_.size()));
    for (const Block& b : blocks_) {
        const auto body = b.serialize_body();
        append_u32(out, static_cast<uint32_t>(body.size()));
        out.insert(out.end(), body.begin(), body.end());
    }

    append_u32(out, static_cast<uint32_t>(mempool_.size()));
    for (const Transaction& tx : mempool_) {
        const auto bytes = tx.serialize();
        append_u32(out, static_cast<uint32_t>(bytes.size()));
        out.insert(out.end(), bytes.begin(), bytes.end());
    }

    append_u32(out, static_cast<uint32_t>(tags_.size()));
    for (const auto& [txid, tag] : tags_) {
        out.insert(out.end(), txid.begin(), txid.end());
        out.push_back(static_cast<uint8_t>(tag.kind));
        append_u32(out, tag.seq);
        append_u32(out, tag.attempt);
    }

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write chain file: " + path);
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) throw UsageError("short write to chain file: " + path);
}

ChainStore ChainStore::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open chain file: " + path);
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(f)),
                              std::istreambuf_iterator<char>());

    Reader r(view(data));
    {
        ByteView magic = r.take(sizeof(kMagic), "magic");
        if (std::memcmp(magic.data(), kMagic, sizeof(kMagic)) != 0)
            throw ParseError("not a chain file (bad magic)", 0);
    }

    ChainStore store(r.u64("min fee"));

    const uint32_t n_blocks = r.u32("block count");
    for (uint32_t i = 0; i < n_blocks; ++i) {
        const size_t body_start = r.offset() + 4;
        const uint32_t body_len = r.u32("block length");
        ByteView body = r.take(body_len, "block body");
        Reader br(body);

        Block b;
        b.height = br.u64("block height");
        if (b.height != i)
            throw ParseError("block height out of sequence", body_start);
        {
            ByteView prev = br.take(32, "prev id");
            std::memcpy(b.prev_id.data(), prev.data(), 32);
        }
        const Digest32 expect_prev = i == 0 ? Digest32{} : store.blocks_.back().id;
        if (b.prev_id != expect_prev)
            throw ParseError("block does not link to its parent", body_start + 8);

        const uint32_t n_tx = br.u32("tx count");
        for (uint32_t j = 0; j < n_tx; ++j) {
            const uint32_t tx_len = br.u32("tx length");
            const size_t tx_start = body_start + br.offset();
            ByteView tx_bytes = br.take(tx_len, "tx body");
            try {
                b.txs.push_back(Transaction::deserialize(tx_bytes));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), tx_start + e.offset());
            }
            store.seen_.insert(b.txs.back().id());
        }
        if (!br.done())
            throw ParseError("block body has trailing bytes", body_start + br.offset());

        b.id = b.compute_id();
        store.blocks_.push_back(std::move(b));
    }

    const uint32_t n_mempool = r.u32("mempool count");
    for (uint32_t i = 0; i < n_mempool; ++i) {
        const uint32_t tx_len = r.u32("mempool tx length");
        const size_t tx_start = r.offset();
        ByteView tx_bytes = r.take(tx_len, "mempool tx");
        try {
            store.mempool_.push_back(Transaction::deserialize(tx_bytes));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), tx_start + e.offset());
        }
        store.seen_.insert(store.mempool_.back().id());
    }

    const uint32_t n_tags = r.u32("tag count");
    for (uint32_t i = 0; i < n_tags; ++i) {
        Digest32 txid;
        ByteView id_bytes = r.take(32, "tag tx id");
        std::memcpy(txid.data(), id_bytes.data(), 32);
        TxTag tag;
        const uint8_t kind = r.take(1, "tag kind")[0];
        if (kind > static_cast<uint8_t>(TxKind::Feedback))
            throw ParseError("unknown tag kind", r.offset() - 1);
        tag.kind = static_cast<TxKind>(kind);
        tag.seq = r.u32("tag seq");
        tag.attempt = r.u32("tag attempt");
        store.tags_[txid] = tag;
    }

    if (!r.done()) throw ParseError("chain file has trailing bytes", r.offset());
    return store;
}

}  // namespace covtx
