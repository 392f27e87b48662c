#pragma once

#include <cstdint>

#include "frobq/errors.hpp"

namespace frobq {

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a prime 2 <= p <= 2^31 - 1. Elements are plain
/// residues in [0, p-1]; the field object carries the modulus.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 2147483647u;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // a, b < 2^31 so no wraparound
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Throws InvalidArgument on zero.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace frobq
