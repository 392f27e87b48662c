#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobq/field.hpp"
#include "frobq/monomial.hpp"

namespace frobq {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// F_p[x_1, ..., x_n] with a fixed monomial order. Immutable once built.
class PolyRing {
 public:
  static RingPtr make(std::uint32_t p, std::vector<std::string> variables,
                      OrderKind kind = OrderKind::Grevlex,
                      std::size_t block = 0);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Structural equality: same p, variables and order.
  bool same_as(const PolyRing& other) const;

 private:
  PolyRing(PrimeField field, std::vector<std::string> variables,
           MonomialOrder order)
      : field_(field), variables_(std::move(variables)), order_(order) {}

  PrimeField field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  std::uint32_t coeff;
  Monomial mono;
};

/// Sparse polynomial in canonical form: nonzero coefficients, distinct
/// monomials, terms sorted descending in the ring's order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::int64_t value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, std::uint32_t coeff, Monomial mono);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  std::uint32_t leading_coeff() const { return terms_.front().coeff; }
  std::uint32_t total_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  Polynomial scaled(std::uint32_t c) const;
  Polynomial mul_term(std::uint32_t c, const Monomial& m) const;
  /// this - c * m * g, computed by a single merge.
  Polynomial sub_mul_term(std::uint32_t c, const Monomial& m,
                          const Polynomial& g) const;
  Polynomial pow(std::uint64_t e) const;
  Polynomial monic() const;
  /// f(x_1^q, ..., x_n^q). Over F_p this equals f^q whenever q is a power
  /// of p.
  Polynomial frobenius(std::uint64_t q) const;
  /// Exact division; throws InvalidArgument when divisor does not divide.
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Re-expresses this polynomial in `target`, sending variable i to
  /// variable var_map[i].
  Polynomial remap(const RingPtr& target,
                   std::span<const std::size_t> var_map) const;

  std::string to_string() const;

  bool operator==(const Polynomial& o) const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  void require_same_ring(const Polynomial& o) const;
  Polynomial merge(const Polynomial& o, bool subtract) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the polynomial grammar: integer literals, identifiers, + - * ^ and
/// parentheses. ^ binds tightest, then *, then + and -. Juxtaposition is an
/// error. Throws ParseError with the offending position.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Splits on ';' and parses each non-empty piece.
std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const RingPtr& ring);

std::string monomial_to_string(const Monomial& m, const PolyRing& ring);

/// p^e with an overflow check against the exponent ceiling.
std::uint64_t checked_prime_power(std::uint32_t p, std::uint32_t e);

/// Base-q split of f (q = p^e): f = sum_alpha g_alpha^q * x^alpha with every
/// alpha in [0, q-1]^n. Only nonzero components are returned.
std::map<Monomial, Polynomial> frobenius_decompose(const Polynomial& f,
                                                   std::uint32_t e);

}  // namespace frobq
