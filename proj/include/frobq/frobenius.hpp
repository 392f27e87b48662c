#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "frobq/ideal.hpp"

namespace frobq {

/// Largest Frobenius exponent e accepted anywhere (q = p^e).
inline constexpr std::uint32_t kMaxFrobeniusExponent = 8;

struct FrobeniusExponent {
  std::uint32_t e = 0;
  std::uint64_t q = 1;

  /// Throws ExponentOverflow when e exceeds kMaxFrobeniusExponent or p^e
  /// exceeds the monomial exponent ceiling.
  static FrobeniusExponent make(std::uint32_t p, std::uint32_t e);
};

/// R = S/J for a polynomial ring S. Ideals of R are handled through their
/// preimages in S, which always contain J.
class QuotientRing {
 public:
  /// Throws InvalidArgument if J is the unit ideal or lives in another ring.
  QuotientRing(RingPtr ambient, Ideal relations);
  static QuotientRing polynomial(RingPtr ambient);

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& relations() const { return relations_; }
  std::uint32_t characteristic() const { return ambient_->characteristic(); }
  /// Krull dimension of S/J.
  int dimension() const { return dimension_; }

  /// The maximal ideal (all variables) plus J.
  Ideal maximal_ideal() const;
  /// a + J.
  Ideal lift(const Ideal& a) const;
  /// Parses ';'-separated generators and adjoins J.
  Ideal ideal(std::string_view text) const;
  bool is_zero(const Polynomial& f) const { return ideal_member(f, relations_); }

 private:
  RingPtr ambient_;
  Ideal relations_;
  int dimension_;
};

/// I^[q]: generated by the q-th powers of the generators of I.
Ideal frobenius_power(const Ideal& ideal, std::uint32_t e);
/// I^[q] + J.
Ideal frobenius_power(const Ideal& ideal, std::uint32_t e, const QuotientRing& ring);

/// I^[1/q]: the smallest K with I contained in K^[q], generated by the
/// components of the base-q decompositions of the generators of I.
Ideal frobenius_root(const Ideal& ideal, std::uint32_t e);

/// {r : r^q in I}. `known` must be contained in the answer; it only speeds
/// up the computation.
Ideal frobenius_preimage(const Ideal& ideal, std::uint32_t e,
                         const Ideal& known);

struct ClosureOptions {
  std::uint32_t e_max = 5;
  std::uint32_t lookahead = 2;
};

struct ClosureResult {
  /// `lookahead` consecutive equal chain members were seen.
  bool stabilized = false;
  /// Last chain member, F_e = {r : r^q in a^[q] + J}.
  Ideal closure;
  /// First e from which the chain stayed constant.
  std::uint32_t e_star = 0;
  /// Every element of `closure` satisfies r^(p^e_star) in a^[p^e_star] + J.
  bool certified_lower = true;
  /// Largest exponent examined.
  std::uint32_t window = 0;
  std::vector<Ideal> chain;
};

/// Frobenius closure of a in R = S/J by the ascending chain F_0 = a + J,
/// F_e = {r : r^q in a^[q] + J}.
ClosureResult frobenius_closure(const Ideal& a, const QuotientRing& ring,
                                const ClosureOptions& options = {});

enum class QStatus { Found, NotFound, Unstabilized };

struct QExponent {
  QStatus status = QStatus::NotFound;
  /// Valid when status is Found.
  FrobeniusExponent exponent;
  ClosureResult closure;
};

/// Least Q = p^e, e <= e_max, with (a^F)^[Q] + J = a^[Q] + J.
QExponent q_exponent(const Ideal& a, const QuotientRing& ring,
                     const ClosureOptions& options = {});
/// Same, reusing an already computed closure.
QExponent q_exponent(const Ideal& a, const QuotientRing& ring,
                     const ClosureResult& closure, std::uint32_t e_max);

}  // namespace frobq
