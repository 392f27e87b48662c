#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

#include "frobq/errors.hpp"

namespace frobq {

inline constexpr std::size_t kMaxVars = 16;
/// Per-variable exponent ceiling; keeps total degrees inside 32 bits.
inline constexpr std::uint32_t kMaxExponent = 1u << 26;

/// Exponent vector of fixed length. Unused slots beyond size() are zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  explicit Monomial(std::span<const std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index,
                           std::uint32_t power = 1);

  std::size_t size() const { return size_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t value);
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const std::uint32_t> exponents() const {
    return {exps_.data(), size_};
  }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::uint64_t e) const;

  /// Bit i set iff variable i occurs.
  std::uint32_t support_mask() const;

  bool operator==(const Monomial& o) const {
    return size_ == o.size_ && degree_ == o.degree_ && exps_ == o.exps_;
  }
  /// Plain lexicographic comparison of exponent tuples; used for map keys,
  /// not a monomial order.
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  std::size_t hash() const;

 private:
  std::array<std::uint32_t, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t size_ = 0;
};

enum class OrderKind { Grevlex, Lex, Elimination };

/// A monomial order on a fixed number of variables. `Elimination` is the
/// product order (grevlex on the first `block` variables, then grevlex on
/// the rest), which eliminates the first block.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t nvars, std::size_t block = 0);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Grevlex:
        return grevlex(a, b, 0, nvars_, a.degree(), b.degree());
      case OrderKind::Lex:
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (a[i] != b[i]) return a[i] <=> b[i];
        }
        return std::strong_ordering::equal;
      case OrderKind::Elimination:
        return elimination(a, b);
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && nvars_ == o.nvars_ && block_ == o.block_;
  }

 private:
  static std::strong_ordering grevlex(const Monomial& a, const Monomial& b,
                                      std::size_t lo, std::size_t hi,
                                      std::uint32_t deg_a,
                                      std::uint32_t deg_b) {
    if (deg_a != deg_b) return deg_a <=> deg_b;
    for (std::size_t i = hi; i > lo; --i) {
      if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering elimination(const Monomial& a, const Monomial& b) const;

  OrderKind kind_ = OrderKind::Grevlex;
  std::size_t nvars_ = 0;
  std::size_t block_ = 0;
};

/// Checked comparison: throws InvalidArgument on length mismatch.
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace frobq
