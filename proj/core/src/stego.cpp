// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/stego.hpp>

#include <covtx/covert.hpp>
#include <covtx/errors.hpp>
#include <covtx/framing.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "../../vendor/json.hpp"

namespace covtx {

const char* to_string(FieldKind kind) {
    switch (kind) {
        case FieldKind::AuthAddr0: return "auth_addr0";
        case FieldKind::AuthAddr1: return "auth_addr1";
        case FieldKind::TransAddr: return "trans_addr";
        case FieldKind::TransAmount: return "trans_amount";
        case FieldKind::NormalAddr: return "normal_addr";
        case FieldKind::NormalAmount: return "normal_amount";
    }
    return "?";
}

void CharFreq::add(std::string_view hex) {
    for (char c : hex) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw UsageError(std::string("non-hex character in field string: '") + c + "'");
        counts[static_cast<size_t>(v)] += 1;
        total += 1;
    }
}

CharFreq char_freq(std::span<const std::string> strings) {
    CharFreq f;
    for (const auto& s : strings) f.add(s);
    return f;
}

double kld(const CharFreq& p, const CharFreq& q) {
    if (p.total == 0 || q.total == 0) throw UsageError("divergence of an empty distribution");
    const double pd = static_cast<double>(p.total) + 16.0;
    const double qd = static_cast<double>(q.total) + 16.0;
    double sum = 0;
    for (size_t i = 0; i < 16; ++i) {
        const double pi = (static_cast<double>(p.counts[i]) + 1.0) / pd;
        const double qi = (static_cast<double>(q.counts[i]) + 1.0) / qd;
        sum += pi * std::log2(pi / qi);
    }
    // Non-negative by Gibbs' inequality; shave off float residue only.
    return sum < 0 && sum > -1e-12 ? 0.0 : sum;
}

std::array<double, 16> ecdf(const CharFreq& f) {
    if (f.total == 0) throw UsageError("cumulative distribution of an empty table");
    std::array<double, 16> out{};
    uint64_t cum = 0;
    for (size_t i = 0; i < 16; ++i) {
        cum += f.counts[i];
        out[i] = static_cast<double>(cum) / static_cast<double>(f.total);
    }
    return out;
}

double kolmogorov_q(double lambda) {
    if (lambda <= 0) return 1.0;
    if (lambda < 1.18) {
        // Theta-transformed series: fast for small lambda where the direct
        // alternating series converges slowly.
        const double y = std::exp(-std::numbers::pi * std::numbers::pi / (8 * lambda * lambda));
        const double cdf = std::sqrt(2 * std::numbers::pi) / lambda *
                           (y + std::pow(y, 9) + std::pow(y, 25) + std::pow(y, 49));
        return std::clamp(1.0 - cdf, 0.0, 1.0);
    }
    double sum = 0;
    double sign = 1;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-17) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(const CharFreq& a, const CharFreq& b) {
    if (a.total == 0 || b.total == 0) throw UsageError("KS test over an empty sample");
    const auto fa = ecdf(a);
    const auto fb = ecdf(b);
    double d = 0;
    for (size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(fa[i] - fb[i]));
    if (d == 0) return {0.0, 1.0};
    const double n = static_cast<double>(a.total);
    const double m = static_cast<double>(b.total);
    const double lambda = std::sqrt(n * m / (n + m)) * d;
    return {d, kolmogorov_q(lambda)};
}

KsResult ks_test(std::span<const std::string> sample_a, std::span<const std::string> sample_b) {
    return ks_test(char_freq(sample_a), char_freq(sample_b));
}

std::vector<std::string> collect_fields(const ChainStore& chain, FieldKind kind, size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    const uint64_t height = chain.height();
    for (uint64_t h = 0; h < height && out.size() < n; ++h) {
        const auto block = chain.block_at(h);
        for (const Transaction& tx : block->txs) {
            if (out.size() == n) break;
            const auto tag = chain.tag_of(tx.id());
            const TxKind tk = tag ? tag->kind : TxKind::Normal;
            switch (kind) {
                case FieldKind::AuthAddr0:
                case FieldKind::AuthAddr1: {
                    if (tk != TxKind::Auth || tx.outputs.size() < 2) continue;
                    const size_t slot = kind == FieldKind::AuthAddr0 ? 0 : 1;
                    out.push_back(to_hex(view(tx.outputs[slot].stealth_address)));
                    break;
                }
                case FieldKind::TransAddr:
                case FieldKind::TransAmount: {
                    if (tk != TxKind::Segment || tx.outputs.empty()) continue;
                    out.push_back(kind == FieldKind::TransAddr
                                      ? to_hex(view(tx.outputs[0].stealth_address))
                                      : to_hex(view(tx.outputs[0].masked_amount)));
                    break;
                }
                case FieldKind::NormalAddr:
                case FieldKind::NormalAmount: {
                    if (tk != TxKind::Normal || tx.outputs.empty()) continue;
                    out.push_back(kind == FieldKind::NormalAddr
                                      ? to_hex(view(tx.outputs[0].stealth_address))
                                      : to_hex(view(tx.outputs[0].masked_amount)));
                    break;
                }
            }
        }
    }
    if (out.size() < n) {
        throw UsageError("needed " + std::to_string(n) + " " + to_string(kind) +
                         " fields, the chain holds " + std::to_string(out.size()));
    }
    return out;
}

std::vector<std::string>& FieldCorpus::of(FieldKind kind) {
    switch (kind) {
        case FieldKind::AuthAddr0: return auth_addr0;
        case FieldKind::AuthAddr1: return auth_addr1;
        case FieldKind::TransAddr: return trans_addr;
        case FieldKind::TransAmount: return trans_amount;
        case FieldKind::NormalAddr: return normal_addr;
        case FieldKind::NormalAmount: return normal_amount;
    }
    throw UsageError("unknown field kind");
}

const std::vector<std::string>& FieldCorpus::of(FieldKind kind) const {
    return const_cast<FieldCorpus*>(this)->of(kind);
}

NormalFieldSet generate_normal_fields(Rng& rng, size_t n) {
    NormalFieldSet out;
    out.addrs.reserve(n);
    out.amounts.reserve(n);
    const KeyQuad recipient = KeyQuad::generate(rng);
    for (size_t i = 0; i < n; ++i) {
        const TxKeys keys = TxKeys::generate(rng);
        const Point shared = derive_shared_secret(keys.tx_priv, recipient.view_pub);
        out.addrs.push_back(to_hex(view(stealth_address(shared, 0, recipient.spend_pub).encode())));
        out.amounts.push_back(to_hex(view(mask_amount(random_amount(rng), shared, 0))));
    }
    return out;
}

FieldCorpus generate_corpus(Rng& rng, size_t n_special, size_t n_normal) {
    FieldCorpus c;
    const KeyQuad sender = KeyQuad::generate(rng);
    const KeyQuad recipient = KeyQuad::generate(rng);
    const PeerKeys peer = peer_keys(recipient);

    // One session signature keys all segment control words, as in a real
    // transfer.
    const Signature sig = gen_auth_field(rng, sender.view_priv, peer).attempt.sig;

    c.auth_addr0.reserve(n_special);
    c.auth_addr1.reserve(n_special);
    for (size_t i = 0; i < n_special; ++i) {
        const auto f = gen_auth_field(rng, sender.view_priv, peer);
        c.auth_addr0.push_back(to_hex(view(f.attempt.fields[0])));
        c.auth_addr1.push_back(to_hex(view(f.attempt.fields[1])));
    }

    c.trans_addr.reserve(n_special);
    c.trans_amount.reserve(n_special);
    for (size_t i = 0; i < n_special; ++i) {
        const uint32_t seq = static_cast<uint32_t>(i % kMaxSegments) + 1;
        const auto f = gen_trans_field(rng, rng.bytes32(), seq, seq == kMaxSegments, peer, sig);
        c.trans_addr.push_back(to_hex(view(f.attempt.field)));
        c.trans_amount.push_back(to_hex(view(f.attempt.masked_code)));
    }

    auto normal = generate_normal_fields(rng, n_normal);
    c.normal_addr = std::move(normal.addrs);
    c.normal_amount = std::move(normal.amounts);
    return c;
}

namespace {

constexpr FieldKind kAllKinds[] = {FieldKind::AuthAddr0,   FieldKind::AuthAddr1,
                                   FieldKind::TransAddr,   FieldKind::TransAmount,
                                   FieldKind::NormalAddr,  FieldKind::NormalAmount};

bool is_amount_kind(FieldKind k) {
    return k == FieldKind::TransAmount || k == FieldKind::NormalAmount;
}

struct KsPair {
    FieldKind special;
    FieldKind baseline;
};
constexpr KsPair kKsPairs[] = {
    {FieldKind::AuthAddr0, FieldKind::NormalAddr},
    {FieldKind::AuthAddr1, FieldKind::NormalAddr},
    {FieldKind::TransAddr, FieldKind::NormalAddr},
    {FieldKind::TransAmount, FieldKind::NormalAmount},
};

CharFreq resample_freq(Rng& rng, const std::vector<std::string>& corpus, uint32_t instances) {
    CharFreq f;
    for (uint32_t i = 0; i < instances; ++i)
        f.add(corpus[rng.uniform(corpus.size())]);
    return f;
}

std::string fmt(const char* spec, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string pad(std::string s, size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

}  // namespace

AnalysisReport run_experiment(const ChainStore* chain, const AnalysisConfig& config) {
    if (config.groups == 0 || config.group_size == 0 || config.reference_size == 0)
        throw UsageError("analysis needs nonzero groups, group size and reference size");
    if (config.ks_samples == 0 || config.ks_instances == 0)
        throw UsageError("analysis needs nonzero KS battery dimensions");

    AnalysisReport report;
    report.config = config;

    const size_t per_kind = static_cast<size_t>(config.groups) * config.group_size;
    Rng corpus_rng = Rng(config.seed).child("corpus", 0);

    FieldCorpus corpus;
    if (config.from_chain) {
        if (chain == nullptr) throw UsageError("chain-sourced analysis needs a chain");
        for (FieldKind kind : kAllKinds) corpus.of(kind) = collect_fields(*chain, kind, per_kind);
    } else {
        corpus = generate_corpus(corpus_rng, per_kind, per_kind);
    }

    // Fresh reference corpus, never part of the comparison corpora.
    Rng ref_rng = Rng(config.seed).child("reference", 0);
    const NormalFieldSet reference = generate_normal_fields(ref_rng, config.reference_size);
    const CharFreq ref_addr = char_freq(reference.addrs);
    const CharFreq ref_amount = char_freq(reference.amounts);

    // Per-group divergence against the reference.
    for (FieldKind kind : kAllKinds) {
        const auto& fields = corpus.of(kind);
        for (uint32_t g = 0; g < config.groups; ++g) {
            const std::span<const std::string> slice(fields.data() +
                                                         static_cast<size_t>(g) * config.group_size,
                                                     config.group_size);
            const double bits = kld(char_freq(slice), is_amount_kind(kind) ? ref_amount : ref_addr);
            report.kld.push_back({kind, g + 1, bits});
        }
    }

    // Pooled cumulative distributions.
    for (FieldKind kind : kAllKinds)
        report.cdf.push_back({kind, ecdf(char_freq(corpus.of(kind)))});

    // Resampled KS battery per special/baseline pair.
    Rng ks_rng = Rng(config.seed).child("ks", 0);
    for (const KsPair& pair : kKsPairs) {
        AnalysisReport::KsRow row;
        row.special = pair.special;
        row.baseline = pair.baseline;
        row.p_values.reserve(config.ks_samples);
        for (uint32_t s = 0; s < config.ks_samples; ++s) {
            const CharFreq a = resample_freq(ks_rng, corpus.of(pair.special), config.ks_instances);
            const CharFreq b = resample_freq(ks_rng, corpus.of(pair.baseline), config.ks_instances);
            row.p_values.push_back(ks_test(a, b).p_value);
        }
        auto sorted = row.p_values;
        std::sort(sorted.begin(), sorted.end());
        row.min_p = sorted.front();
        row.max_p = sorted.back();
        row.median_p = sorted[sorted.size() / 2];
        row.fraction_above_alpha =
            static_cast<double>(std::count_if(sorted.begin(), sorted.end(),
                                              [](double p) { return p > 0.05; })) /
            static_cast<double>(sorted.size());
        report.ks.push_back(std::move(row));
    }

    return report;
}

std::string AnalysisReport::to_text() const {
    std::string out;
    out += "hex-character concealment report\n";
    out += "corpus: " + std::to_string(config.groups) + " groups x " +
           std::to_string(config.group_size) + " instances per kind, reference " +
           std::to_string(config.reference_size) + ", seed " + std::to_string(config.seed) +
           (config.from_chain ? ", chain-sourced\n" : ", generated\n");

    out += "\nKLD vs fresh reference corpus (bits)\n";
    out += pad("field", 17);
    for (uint32_t g = 1; g <= config.groups; ++g) out += pad("group" + std::to_string(g), 11);
    out += "\n";
    for (size_t i = 0; i < kld.size(); i += config.groups) {
        out += pad(to_string(kld[i].kind), 17);
        for (uint32_t g = 0; g < config.groups; ++g) out += fmt("%-11.3e", kld[i + g].bits);
        out += "\n";
    }

    out += "\ncumulative hex-character distribution (all groups pooled)\n";
    out += pad("field", 17);
    for (char c : std::string("0123456789abcdef")) out += pad(std::string(1, c), 7);
    out += "\n";
    for (const auto& row : cdf) {
        out += pad(to_string(row.kind), 17);
        for (double v : row.cum) out += fmt("%-7.4f", v);
        out += "\n";
    }

    out += "\ntwo-sample KS battery (" + std::to_string(config.ks_samples) + " samples x " +
           std::to_string(config.ks_instances) + " instances, alpha 0.05)\n";
    out += pad("pair", 36) + pad("p>alpha", 10) + pad("min p", 10) + pad("median p", 10) +
           "max p\n";
    for (const auto& row : ks) {
        out += pad(std::string(to_string(row.special)) + " vs " + to_string(row.baseline), 36);
        out += pad(fmt("%.1f", 100 * row.fraction_above_alpha) + "%", 10);
        out += fmt("%-10.3f", row.min_p);
        out += fmt("%-10.3f", row.median_p);
        out += fmt("%.3f", row.max_p);
        out += "\n";
    }
    return out;
}

std::string AnalysisReport::to_json() const {
    nlohmann::json j;
    j["config"] = {{"groups", config.groups},
                   {"group_size", config.group_size},
                   {"reference_size", config.reference_size},
                   {"ks_samples", config.ks_samples},
                   {"ks_instances", config.ks_instances},
                   {"seed", config.seed},
                   {"from_chain", config.from_chain}};
    j["kld"] = nlohmann::json::array();
    for (const auto& row : kld)
        j["kld"].push_back(
            {{"field", to_string(row.kind)}, {"group", row.group}, {"bits", row.bits}});
    j["cdf"] = nlohmann::json::array();
    for (const auto& row : cdf)
        j["cdf"].push_back({{"field", to_string(row.kind)}, {"cum", row.cum}});
    j["ks"] = nlohmann::json::array();
    for (const auto& row : ks)
        j["ks"].push_back({{"special", to_string(row.special)},
                           {"baseline", to_string(row.baseline)},
                           {"fraction_above_alpha", row.fraction_above_alpha},
                           {"min_p", row.min_p},
                           {"median_p", row.median_p},
                           {"max_p", row.max_p},
                           {"p_values", row.p_values}});
    return j.dump(2);
}

}  // namespace covtx
