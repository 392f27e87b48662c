#include "frobq/monomial.hpp"

#include <algorithm>
#include <string>

namespace frobq {

namespace {

void check_size(std::size_t nvars) {
  if (nvars > kMaxVars) {
    throw InvalidArgument("at most " + std::to_string(kMaxVars) +
                          " variables are supported");
  }
}

std::uint32_t checked_exponent(std::uint64_t e) {
  if (e > kMaxExponent) {
    throw ExponentOverflow("exponent " + std::to_string(e) +
                           " exceeds the supported maximum " +
                           std::to_string(kMaxExponent));
  }
  return static_cast<std::uint32_t>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_size(nvars);
  size_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::span<const std::uint32_t> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            std::uint32_t power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t value) {
  checked_exponent(value);
  degree_ = degree_ - exps_[i] + value;
  exps_[i] = value;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exps_[i] = exps_[i] - divisor.exps_[i];
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} + other.exps_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::pow(std::uint64_t e) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != 0 && e > kMaxExponent / exps_[i]) {
      throw ExponentOverflow("exponent overflow in monomial power");
    }
    r.exps_[i] = checked_exponent(exps_[i] * e);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars,
                             std::size_t block)
    : kind_(kind), nvars_(nvars), block_(block) {
  if (nvars > kMaxVars) {
    throw InvalidArgument("at most " + std::to_string(kMaxVars) +
                          " variables are supported");
  }
  if (kind == OrderKind::Elimination && (block == 0 || block > nvars)) {
    throw InvalidArgument("elimination block must cover 1..nvars variables");
  }
}

std::strong_ordering MonomialOrder::elimination(const Monomial& a,
                                                const Monomial& b) const {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = 0; i < block_; ++i) {
    da += a[i];
    db += b[i];
  }
  if (auto c = grevlex(a, b, 0, block_, da, db); c != 0) return c;
  return grevlex(a, b, block_, nvars_, a.degree() - da, b.degree() - db);
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order) {
  if (a.size() != b.size() || a.size() != order.nvars()) {
    throw InvalidArgument("monomial length mismatch");
  }
  return order.compare(a, b);
}

}  // namespace frobq
