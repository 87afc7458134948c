// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef COVTX_ERRORS_HPP
#define COVTX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covtx {

// Contract violation: a caller handed in data that breaks a documented
// precondition (out-of-range scalar, oversized message, bad file contents).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed serialized input; `offset` is the byte position that failed.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    size_t offset() const { return offset_; }

  private:
    size_t offset_;
};

// A rejection-sampling loop exceeded its draw budget.
class RetryExhausted : public std::runtime_error {
  public:
    explicit RetryExhausted(size_t budget)
        : std::runtime_error("retry budget of " + std::to_string(budget) + " draws exhausted") {}
};

}  // namespace covtx

#endif  // COVTX_ERRORS_HPP
