#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobq/groebner.hpp"
#include "frobq/polynomial.hpp"

namespace frobq {

/// An ideal of a polynomial ring, given by generators. The reduced Groebner
/// basis is computed on first use and shared by all copies; concurrent
/// readers either compute it or see the finished value, never a partial one.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);
  /// Generators separated by ';'.
  static Ideal parse(std::string_view text, const RingPtr& ring);
  /// Wraps a list already known to be the reduced basis in `ring`'s order.
  static Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  /// Reduced Groebner basis (monic, sorted by descending leading monomial).
  const std::vector<Polynomial>& basis() const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;
  /// f * I.
  Ideal scaled(const Polynomial& f) const;
  Ideal with(const Polynomial& f) const;

  /// The reduced basis joined by "; ", or "0" for the zero ideal.
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

std::vector<Polynomial> groebner_basis(const Ideal& ideal);

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);
bool ideal_member(const Polynomial& f, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// small is a subset of big.
bool ideal_contains(const Ideal& big, const Ideal& small);

Ideal intersect(const Ideal& a, const Ideal& b);
/// (I : K) = {r : rK in I}; (I : 0) is the unit ideal.
Ideal colon(const Ideal& ideal, const Ideal& divisor);
/// (I : f), via I ∩ (f) divided by f.
Ideal colon(const Ideal& ideal, const Polynomial& f);

struct Saturation {
  Ideal ideal;
  /// First s with (I : K^s) = (I : K^{s+1}).
  int index;
};
Saturation saturate(const Ideal& ideal, const Ideal& divisor);

/// Dimension of R/I from the leading-term ideal; -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);

/// Monomials outside the leading-term ideal of I, in ascending order, or
/// nullopt when there are infinitely many or more than `limit`.
std::optional<std::vector<Monomial>> standard_monomials(const Ideal& ideal,
                                                        std::size_t limit);

/// f in the radical of I, via 1 in I + (1 - t f).
bool radical_member(const Polynomial& f, const Ideal& ideal);

}  // namespace frobq
