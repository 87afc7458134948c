// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_STEGO_HPP
#define COVTX_STEGO_HPP

#include <covtx/ledger.hpp>
#include <covtx/rng.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace covtx {

// Statistical concealment harness: hex-character frequency statistics over
// transaction fields, comparing covert carriers against standard outputs.
// A detector that cannot tell the two apart at the character level has no
// handle on the channel.

// Which field of which transaction kind a hex string was read from.
enum class FieldKind : uint8_t {
    AuthAddr0,     // first special stealth address of an auth tx
    AuthAddr1,     // second special stealth address of an auth tx
    TransAddr,     // ciphertext-bearing stealth address of a segment tx
    TransAmount,   // control-word masked amount of a segment tx
    NormalAddr,    // standard stealth address
    NormalAmount,  // standard masked amount
};
const char* to_string(FieldKind kind);

// Frequency table of the 16 hex symbols.
struct CharFreq {
    std::array<uint64_t, 16> counts{};
    uint64_t total = 0;

    // Throws UsageError on a non-hex character.
    void add(std::string_view hex);
};

CharFreq char_freq(std::span<const std::string> strings);

// Kullback-Leibler divergence in bits with one-count additive smoothing on
// both sides. Throws UsageError when either table is empty.
double kld(const CharFreq& p, const CharFreq& q);

// Cumulative probabilities over the symbols 0..f; non-decreasing, ends at
// exactly 1. Throws UsageError on an empty table.
std::array<double, 16> ecdf(const CharFreq& f);

// Survival function of the Kolmogorov distribution, Q(lambda) =
// 2 sum_k (-1)^(k-1) exp(-2 k^2 lambda^2); the asymptotic two-sample KS
// p-value at lambda = sqrt(nm/(n+m)) * D.
double kolmogorov_q(double lambda);

struct KsResult {
    double statistic = 0;  // sup distance between the two empirical CDFs
    double p_value = 1;
};

// Two-sample KS test over pooled per-character values (each hex character of
// each instance contributes its integer value 0..15).
KsResult ks_test(const CharFreq& a, const CharFreq& b);
KsResult ks_test(std::span<const std::string> sample_a, std::span<const std::string> sample_b);

// Reads n field hex strings of the given kind from confirmed transactions,
// classified by their chain tags (untagged transactions count as normal).
// Throws UsageError naming the shortfall when the chain has fewer than n.
std::vector<std::string> collect_fields(const ChainStore& chain, FieldKind kind, size_t n);

// Per-kind field corpora. Address strings are 64 hex chars, amounts 16.
struct FieldCorpus {
    std::vector<std::string> auth_addr0;
    std::vector<std::string> auth_addr1;
    std::vector<std::string> trans_addr;
    std::vector<std::string> trans_amount;
    std::vector<std::string> normal_addr;
    std::vector<std::string> normal_amount;

    const std::vector<std::string>& of(FieldKind kind) const;
    std::vector<std::string>& of(FieldKind kind);
};

// Standard (non-covert) output fields for one freshly drawn wallet.
struct NormalFieldSet {
    std::vector<std::string> addrs;
    std::vector<std::string> amounts;
};
NormalFieldSet generate_normal_fields(Rng& rng, size_t n);

// Builds n_special covert fields per kind plus n_normal standard fields,
// without touching any chain (the statistics need the bytes, not the
// broadcast).
FieldCorpus generate_corpus(Rng& rng, size_t n_special, size_t n_normal);

struct AnalysisConfig {
    uint32_t groups = 5;
    uint32_t group_size = 2000;      // instances per kind per group
    uint32_t reference_size = 10000; // fresh reference corpus instances
    uint32_t ks_samples = 1000;      // battery repetitions per field pair
    uint32_t ks_instances = 500;     // instances resampled per repetition
    uint64_t seed = 2;
    bool from_chain = false;         // read corpora from a chain instead of generating
};

struct AnalysisReport {
    AnalysisConfig config;

    struct KldRow {
        FieldKind kind;
        uint32_t group;  // 1-based
        double bits;     // divergence against the fresh reference corpus
    };
    std::vector<KldRow> kld;

    struct CdfRow {
        FieldKind kind;
        std::array<double, 16> cum;  // all groups pooled
    };
    std::vector<CdfRow> cdf;

    struct KsRow {
        FieldKind special;
        FieldKind baseline;
        std::vector<double> p_values;
        double fraction_above_alpha = 0;  // alpha = 0.05
        double min_p = 0;
        double median_p = 0;
        double max_p = 0;
    };
    std::vector<KsRow> ks;

    std::string to_text() const;
    std::string to_json() const;
};

// Runs the full battery: per-group KLD against a fresh reference corpus,
// pooled CDF tables, and the resampled KS battery for every special-vs-normal
// field pair. Deterministic in config.seed. chain may be null unless
// config.from_chain is set.
AnalysisReport run_experiment(const ChainStore* chain, const AnalysisConfig& config);

}  // namespace covtx

#endif  // COVTX_STEGO_HPP
