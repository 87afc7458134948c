// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/rng.hpp>

#include <covtx/errors.hpp>

#include <sstream>

namespace covtx {

namespace {
uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}
}  // namespace

Rng::Rng() : Rng(std::random_device{}()) {}

Rng::Rng(uint64_t seed) : eng_(seed), seed_(seed) {}

uint64_t Rng::next_u64() { return eng_(); }

uint64_t Rng::uniform(uint64_t bound) {
    if (bound == 0) throw UsageError("uniform() bound must be nonzero");
    // Rejection sampling; kept explicit (not std::uniform_int_distribution)
    // so draws are identical across standard library implementations.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return x % bound;
}

void Rng::fill(uint8_t* out, size_t n) {
    size_t i = 0;
    while (i + 8 <= n) {
        store_le64(out + i, eng_());
        i += 8;
    }
    if (i < n) {
        uint64_t last = eng_();
        for (; i < n; ++i) {
            out[i] = static_cast<uint8_t>(last);
            last >>= 8;
        }
    }
}

Bytes32 Rng::bytes32() {
    Bytes32 out;
    fill(out.data(), out.size());
    return out;
}

std::vector<uint8_t> Rng::bytes(size_t n) {
    std::vector<uint8_t> out(n);
    fill(out.data(), n);
    return out;
}

double Rng::uniform_real() {
    // 53 uniform bits, exactly representable.
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

Rng Rng::child(const std::string& label, uint64_t index) const {
    uint64_t derived = splitmix64(seed_ ^ fnv1a(label) ^ splitmix64(index));
    return Rng(derived);
}

std::string Rng::save_state() const {
    std::ostringstream os;
    os << seed_ << ' ' << eng_;
    return os.str();
}

Rng Rng::restore_state(const std::string& state) {
    std::istringstream is(state);
    Rng r(0);
    is >> r.seed_ >> r.eng_;
    if (!is) throw UsageError("malformed RNG state string");
    return r;
}

}  // namespace covtx
