#include "frobq/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace frobq {

// ---------------------------------------------------------------- PolyRing

RingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> variables,
                       OrderKind kind, std::size_t block) {
  if (variables.empty()) {
    throw InvalidArgument("a polynomial ring needs at least one variable");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) ||
                       v[0] == '_')) {
      throw InvalidArgument("invalid variable name '" + v + "'");
    }
    for (char c : v) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw InvalidArgument("invalid variable name '" + v + "'");
      }
    }
    if (!seen.insert(v).second) {
      throw InvalidArgument("duplicate variable name '" + v + "'");
    }
  }
  PrimeField field(p);
  MonomialOrder order(kind, variables.size(), block);
  return RingPtr(new PolyRing(field, std::move(variables), order));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

bool PolyRing::same_as(const PolyRing& other) const {
  return field_ == other.field_ && variables_ == other.variables_ &&
         order_ == other.order_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
  std::uint32_t c = ring->field().reduce(value);
  std::vector<Term> terms;
  if (c != 0) terms.push_back({c, Monomial(ring->nvars())});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw InvalidArgument("variable index out of range");
  Monomial m = Monomial::variable(ring->nvars(), index);
  return Polynomial(std::move(ring), {Term{1, m}});
}

Polynomial Polynomial::term(RingPtr ring, std::uint32_t coeff, Monomial mono) {
  coeff = ring->field().reduce(coeff);
  std::vector<Term> terms;
  if (coeff != 0) terms.push_back({coeff, mono});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % field.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, c);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back({c, t.mono});
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch();
}

Polynomial Polynomial::merge(const Polynomial& o, bool subtract) const {
  require_same_ring(o);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = order.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      std::uint32_t v = o.terms_[j].coeff;
      out.push_back({subtract ? field.neg(v) : v, o.terms_[j].mono});
      ++j;
    } else {
      std::uint32_t v = subtract ? field.sub(terms_[i].coeff, o.terms_[j].coeff)
                                 : field.add(terms_[i].coeff, o.terms_[j].coeff);
      if (v != 0) out.push_back({v, terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) {
    std::uint32_t v = o.terms_[j].coeff;
    out.push_back({subtract ? field.neg(v) : v, o.terms_[j].mono});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  return merge(o, false);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return merge(o, true);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].coeff, o.terms_[0].mono);
  if (terms_.size() == 1) return o.mul_term(terms_[0].coeff, terms_[0].mono);

  const auto& field = ring_->field();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, 0);
      it->second = field.add(it->second, field.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) out.push_back({c, m});
  }
  const auto& order = ring_->order();
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.mono, b.mono);
  });
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  *this = *this + o;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  *this = *this - o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mul_term(std::uint32_t c, const Monomial& m) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  const auto& field = ring_->field();
  for (const auto& t : terms_) out.push_back({field.mul(t.coeff, c), t.mono * m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::sub_mul_term(std::uint32_t c, const Monomial& m,
                                    const Polynomial& g) const {
  require_same_ring(g);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (j < g.terms_.size()) {
    Monomial gm = g.terms_[j].mono * m;
    while (i < terms_.size() && order.greater(terms_[i].mono, gm)) {
      out.push_back(terms_[i++]);
    }
    std::uint32_t gc = field.mul(g.terms_[j].coeff, c);
    if (i < terms_.size() && terms_[i].mono == gm) {
      std::uint32_t v = field.sub(terms_[i].coeff, gc);
      if (v != 0) out.push_back({v, gm});
      ++i;
    } else {
      out.push_back({field.neg(gc), gm});
    }
    ++j;
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  if (e == 0) return constant(ring_, 1);
  if (is_zero()) return *this;
  if (terms_.size() == 1) {
    const auto& t = terms_[0];
    return term(ring_, ring_->field().pow(t.coeff, e), t.mono.pow(e));
  }
  // Split off the largest power of p dividing e and apply it as a Frobenius
  // substitution.
  const std::uint64_t p = ring_->characteristic();
  std::uint64_t q = 1;
  while (e % (q * p) == 0) q *= p;
  std::uint64_t m = e / q;
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return q == 1 ? result : result.frobenius(q);
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::frobenius(std::uint64_t q) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono.pow(q);
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  require_same_ring(divisor);
  if (divisor.is_zero()) throw InvalidArgument("division by zero polynomial");
  const auto& field = ring_->field();
  std::uint32_t inv_lc = field.inv(divisor.leading_coeff());
  std::vector<Term> quotient;
  Polynomial rem = *this;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!divisor.leading_monomial().divides(lt.mono)) {
      throw InvalidArgument("polynomial division is not exact");
    }
    Term t{field.mul(lt.coeff, inv_lc), lt.mono / divisor.leading_monomial()};
    quotient.push_back(t);
    rem = rem.sub_mul_term(t.coeff, t.mono, divisor);
  }
  return Polynomial(ring_, std::move(quotient));
}

Polynomial Polynomial::remap(const RingPtr& target,
                             std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->nvars()) {
    throw InvalidArgument("variable map has the wrong length");
  }
  if (target->characteristic() != ring_->characteristic()) throw RingMismatch();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] != 0) m.set(var_map[i], m[var_map[i]] + t.mono[i]);
    }
    out.push_back({t.coeff, m});
  }
  return from_terms(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff ||
        !(terms_[i].mono == o.terms_[i].mono)) {
      return false;
    }
  }
  return true;
}

std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += monomial_to_string(t.mono, *ring_);
    } else {
      out += std::to_string(t.coeff) + '*' + monomial_to_string(t.mono, *ring_);
    }
  }
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail_unexpected();
    return result;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                 c == '(') {
        throw ParseError("missing operator (juxtaposition is not multiplication)",
                         pos_);
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    Polynomial base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected a non-negative integer exponent", pos_);
      }
      std::uint64_t e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        if (e > kMaxExponent) throw ExponentOverflow("exponent too large at position " + std::to_string(at));
      }
      skip_ws();
      if (peek() == '^') throw ParseError("chained '^' needs parentheses", pos_);
      return base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint32_t p = ring_->characteristic();
      std::uint64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
      }
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      }
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    fail_unexpected();
  }

  [[noreturn]] void fail_unexpected() {
    throw ParseError(std::string("unexpected character '") + text_[pos_] + "'",
                     pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      try {
        out.push_back(parse_polynomial(piece, ring));
      } catch (const ParseError& e) {
        throw ParseError(e.reason(), start + e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

// ------------------------------------------------------ Frobenius splitting

std::uint64_t checked_prime_power(std::uint32_t p, std::uint32_t e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent) {
      throw ExponentOverflow(std::to_string(p) + "^" + std::to_string(e) +
                             " exceeds the exponent ceiling");
    }
  }
  return q;
}

std::map<Monomial, Polynomial> frobenius_decompose(const Polynomial& f,
                                                   std::uint32_t e) {
  const RingPtr& ring = f.ring();
  const std::uint64_t q = checked_prime_power(ring->characteristic(), e);
  const std::size_t n = ring->nvars();
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial offset(n), root(n);
    for (std::size_t i = 0; i < n; ++i) {
      offset.set(i, static_cast<std::uint32_t>(t.mono[i] % q));
      root.set(i, static_cast<std::uint32_t>(t.mono[i] / q));
    }
    buckets[offset].push_back({t.coeff, root});
  }
  std::map<Monomial, Polynomial> out;
  for (auto& [offset, terms] : buckets) {
    out.emplace(offset, Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace frobq
