// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/covert.hpp>
#include <covtx/group.hpp>
#include <covtx/hash.hpp>
#include <covtx/keys.hpp>
#include <covtx/rng.hpp>
#include <covtx/stealth.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_keccak256_32B(benchmark::State& state) {
    covtx::Rng rng(1);
    covtx::Bytes32 buf = rng.bytes32();
    for (auto _ : state) {
        benchmark::DoNotOptimize(covtx::keccak256(covtx::view(buf)));
    }
}
BENCHMARK(BM_keccak256_32B);

void BM_scalar_mul_base(benchmark::State& state) {
    covtx::Rng rng(2);
    covtx::Scalar k = covtx::Scalar::random(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(covtx::scalar_mul_base(k));
    }
}
BENCHMARK(BM_scalar_mul_base);

void BM_point_mul(benchmark::State& state) {
    covtx::Rng rng(3);
    covtx::Scalar k = covtx::Scalar::random(rng);
    covtx::Point p = covtx::scalar_mul_base(covtx::Scalar::random(rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(covtx::point_mul(k, p));
    }
}
BENCHMARK(BM_point_mul);

void BM_point_decode(benchmark::State& state) {
    covtx::Rng rng(4);
    covtx::Bytes32 enc = covtx::scalar_mul_base(covtx::Scalar::random(rng)).encode();
    for (auto _ : state) {
        benchmark::DoNotOptimize(covtx::Point::decode(enc));
    }
}
BENCHMARK(BM_point_decode);

// Codec fixtures shared by the create/extract benchmarks. Wallets and the
// session signature are deterministic so timings compare across runs.
struct CodecFixture {
    covtx::Rng rng{5};
    covtx::KeyQuad alice = covtx::KeyQuad::generate(rng);
    covtx::KeyQuad bob = covtx::KeyQuad::generate(rng);
    covtx::Signature sig =
        covtx::build_auth_tx(rng, alice, covtx::peer_keys(bob), 30'000'000).sig;
};

CodecFixture& fixture() {
    static CodecFixture fx;
    return fx;
}

void BM_build_auth_tx(benchmark::State& state) {
    auto& fx = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            covtx::build_auth_tx(fx.rng, fx.alice, covtx::peer_keys(fx.bob), 30'000'000));
    }
}
BENCHMARK(BM_build_auth_tx);

void BM_build_trans_tx(benchmark::State& state) {
    auto& fx = fixture();
    uint32_t seq = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(covtx::build_trans_tx(fx.rng, fx.alice,
                                                       covtx::peer_keys(fx.bob),
                                                       fx.rng.bytes32(), seq % 999 + 1, false,
                                                       fx.sig, 30'000'000));
        ++seq;
    }
}
BENCHMARK(BM_build_trans_tx);

void BM_build_normal_tx(benchmark::State& state) {
    auto& fx = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(covtx::build_normal_tx(fx.rng, fx.alice, fx.bob.view_pub,
                                                        fx.bob.spend_pub,
                                                        covtx::random_amount(fx.rng),
                                                        30'000'000));
    }
}
BENCHMARK(BM_build_normal_tx);

void BM_extract_auth(benchmark::State& state) {
    auto& fx = fixture();
    const covtx::Transaction tx =
        covtx::build_auth_tx(fx.rng, fx.alice, covtx::peer_keys(fx.bob), 30'000'000).tx;
    const std::vector<covtx::Point> candidates{fx.alice.view_pub};
    for (auto _ : state) {
        benchmark::DoNotOptimize(covtx::extract_auth(tx, fx.bob, candidates));
    }
}
BENCHMARK(BM_extract_auth);

void BM_extract_segment(benchmark::State& state) {
    auto& fx = fixture();
    const covtx::Transaction tx =
        covtx::build_trans_tx(fx.rng, fx.alice, covtx::peer_keys(fx.bob), fx.rng.bytes32(), 1,
                              false, fx.sig, 30'000'000)
            .tx;
    for (auto _ : state) {
        benchmark::DoNotOptimize(covtx::extract_segment(tx, fx.bob, fx.sig));
    }
}
BENCHMARK(BM_extract_segment);

void BM_scan_output_miss(benchmark::State& state) {
    auto& fx = fixture();
    const covtx::Transaction tx =
        covtx::build_normal_tx(fx.rng, fx.alice, fx.bob.view_pub, fx.bob.spend_pub,
                               covtx::random_amount(fx.rng), 30'000'000);
    covtx::KeyQuad carol = covtx::KeyQuad::generate(fx.rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            covtx::scan_output(tx, tx.outputs[0], carol.view_priv, carol.spend_pub));
    }
}
BENCHMARK(BM_scan_output_miss);

}  // namespace

BENCHMARK_MAIN();
