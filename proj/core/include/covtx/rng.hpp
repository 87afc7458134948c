// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_RNG_HPP
#define COVTX_RNG_HPP

#include <covtx/bytes.hpp>

#include <random>
#include <string>

namespace covtx {

// Deterministic random source. All randomness in the library flows through
// one of these so that every run is reproducible from its seed. Draw results
// are part of the observable behavior: changing the engine or the sampling
// strategy is a breaking change for anything that pins seeds.
class Rng {
  public:
    Rng();  // seeded from std::random_device
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    // Uniform in [0, bound) via rejection; bound must be nonzero.
    uint64_t uniform(uint64_t bound);
    void fill(uint8_t* out, size_t n);
    Bytes32 bytes32();
    std::vector<uint8_t> bytes(size_t n);
    double uniform_real();  // [0, 1)

    // Independent deterministic child stream; used to keep parallel or
    // per-unit draws stable regardless of interleaving.
    Rng child(const std::string& label, uint64_t index) const;

    // Engine state round-trip for resumable runs.
    std::string save_state() const;
    static Rng restore_state(const std::string& state);

  private:
    std::mt19937_64 eng_;
    uint64_t seed_ = 0;
};

}  // namespace covtx

#endif  // COVTX_RNG_HPP
