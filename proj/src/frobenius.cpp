#include "frobq/frobenius.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "linalg.hpp"

namespace frobq {

namespace {

constexpr std::size_t kMaxLinearColength = 6000;

std::string fresh_prefix(const PolyRing& ring) {
  for (int k = 0;; ++k) {
    std::string stem = "_y" + std::to_string(k) + "_";
    bool clash = std::any_of(
        ring.variables().begin(), ring.variables().end(),
        [&](const std::string& v) { return v.rfind(stem, 0) == 0; });
    if (!clash) return stem;
  }
}

// {r : r^q in I} when S/known is finite dimensional: r is a combination of
// standard monomials b of `known`, and r -> r^q is F_p-linear.
std::optional<Ideal> preimage_by_kernel(const Ideal& ideal, std::uint64_t q,
                                        const Ideal& known) {
  auto standard = standard_monomials(known, kMaxLinearColength);
  if (!standard) return std::nullopt;
  const RingPtr& ring = ideal.ring();
  const PrimeField& k = ring->field();
  std::vector<Polynomial> images;
  std::map<Monomial, std::size_t> column;
  for (const auto& b : *standard) {
    images.push_back(normal_form(Polynomial::term(ring, 1, b.pow(q)), ideal));
    for (const auto& t : images.back().terms()) {
      column.emplace(t.mono, column.size());
    }
  }
  std::vector<detail::Row> rows;
  for (const auto& img : images) {
    detail::Row row(column.size(), 0);
    for (const auto& t : img.terms()) row[column.at(t.mono)] = t.coeff;
    rows.push_back(std::move(row));
  }
  std::vector<Polynomial> gens = known.generators();
  for (const auto& v : detail::left_kernel(rows, column.size(), k)) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) terms.push_back({v[i], (*standard)[i]});
    }
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(gens));
}

// Elimination: with y_i = x_i^q, (I + (x_i^q - y_i)) meets F[y] exactly in
// {r(y) : r(x^q) in I}.
Ideal preimage_by_elimination(const Ideal& ideal, std::uint64_t q,
                              const Ideal& known) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::string> names = ring->variables();
  const std::string prefix = fresh_prefix(*ring);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  RingPtr ext = PolyRing::make(ring->characteristic(), std::move(names),
                               OrderKind::Elimination, n);
  std::vector<std::size_t> to_x(n), to_y(n);
  std::iota(to_x.begin(), to_x.end(), 0);
  std::iota(to_y.begin(), to_y.end(), n);

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.basis()) gens.push_back(g.remap(ext, to_x));
  for (const auto& g : known.generators()) gens.push_back(g.remap(ext, to_y));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial x = Polynomial::variable(ext, i);
    gens.push_back(x.frobenius(q) - Polynomial::variable(ext, n + i));
  }
  std::vector<Polynomial> basis = buchberger(ext, gens, default_budget());

  std::vector<std::size_t> back(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) back[n + i] = i;
  std::vector<Polynomial> result;
  for (const auto& g : basis) {
    bool has_x = std::any_of(g.terms().begin(), g.terms().end(),
                             [&](const Term& t) {
                               for (std::size_t i = 0; i < n; ++i) {
                                 if (t.mono[i] != 0) return true;
                               }
                               return false;
                             });
    if (!has_x) result.push_back(g.remap(ring, back));
  }
  return Ideal(ring, std::move(result));
}

}  // namespace

FrobeniusExponent FrobeniusExponent::make(std::uint32_t p, std::uint32_t e) {
  if (e > kMaxFrobeniusExponent) {
    throw ExponentOverflow("Frobenius exponent " + std::to_string(e) +
                           " exceeds the cap " +
                           std::to_string(kMaxFrobeniusExponent));
  }
  return {e, checked_prime_power(p, e)};
}

// ------------------------------------------------------------ QuotientRing

QuotientRing::QuotientRing(RingPtr ambient, Ideal relations)
    : ambient_(std::move(ambient)), relations_(std::move(relations)) {
  if (!same_ring(ambient_, relations_.ring())) throw RingMismatch();
  if (relations_.is_unit()) {
    throw InvalidArgument("defining ideal is the unit ideal");
  }
  dimension_ = krull_dimension(relations_);
}

QuotientRing QuotientRing::polynomial(RingPtr ambient) {
  Ideal zero = Ideal::zero(ambient);
  return QuotientRing(std::move(ambient), std::move(zero));
}

Ideal QuotientRing::maximal_ideal() const {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ambient_->nvars(); ++i) {
    gens.push_back(Polynomial::variable(ambient_, i));
  }
  return lift(Ideal(ambient_, std::move(gens)));
}

Ideal QuotientRing::lift(const Ideal& a) const {
  if (!same_ring(a.ring(), ambient_)) throw RingMismatch();
  if (relations_.is_zero()) return a;
  return a + relations_;
}

Ideal QuotientRing::ideal(std::string_view text) const {
  return lift(Ideal::parse(text, ambient_));
}

// --------------------------------------------------------------- operations

Ideal frobenius_power(const Ideal& ideal, std::uint32_t e) {
  const auto fe = FrobeniusExponent::make(ideal.ring()->characteristic(), e);
  if (fe.q == 1) return ideal;
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius(fe.q));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal frobenius_power(const Ideal& ideal, std::uint32_t e,
                      const QuotientRing& ring) {
  return ring.lift(frobenius_power(ideal, e));
}

Ideal frobenius_root(const Ideal& ideal, std::uint32_t e) {
  FrobeniusExponent::make(ideal.ring()->characteristic(), e);
  if (e == 0) return ideal;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    for (auto& [offset, component] : frobenius_decompose(g, e)) {
      gens.push_back(std::move(component));
    }
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal frobenius_preimage(const Ideal& ideal, std::uint32_t e,
                         const Ideal& known) {
  if (!same_ring(ideal.ring(), known.ring())) throw RingMismatch();
  const auto fe = FrobeniusExponent::make(ideal.ring()->characteristic(), e);
  for (const auto& g : known.generators()) {
    if (!ideal_member(g.frobenius(fe.q), ideal)) {
      throw InvalidArgument("known part " + g.to_string() +
                            " is not in the Frobenius preimage");
    }
  }
  if (fe.q == 1) return ideal;
  if (ideal.is_unit()) return Ideal::unit(ideal.ring());
  if (auto by_kernel = preimage_by_kernel(ideal, fe.q, known)) {
    return *by_kernel;
  }
  return preimage_by_elimination(ideal, fe.q, known);
}

ClosureResult frobenius_closure(const Ideal& a, const QuotientRing& ring,
                                const ClosureOptions& options) {
  ClosureResult result{.closure = ring.lift(a), .chain = {}};
  result.chain.push_back(result.closure);
  std::uint32_t stable = 0;
  if (stable == options.lookahead) result.stabilized = true;
  for (std::uint32_t e = 1; e <= options.e_max && !result.stabilized; ++e) {
    Ideal target = frobenius_power(result.chain.front(), e, ring);
    Ideal next = [&] {
      try {
        return frobenius_preimage(target, e, result.chain.back());
      } catch (const InvalidArgument&) {
        throw Error("Frobenius closure chain is not ascending at e = " +
                    std::to_string(e));
      }
    }();
    result.window = e;
    if (ideal_equal(next, result.chain.back())) {
      ++stable;
    } else {
      stable = 0;
      result.e_star = e;
    }
    result.chain.push_back(next);
    if (stable == options.lookahead) result.stabilized = true;
  }
  result.closure = result.chain[result.e_star];
  return result;
}

QExponent q_exponent(const Ideal& a, const QuotientRing& ring,
                     const ClosureOptions& options) {
  return q_exponent(a, ring, frobenius_closure(a, ring, options),
                    options.e_max);
}

QExponent q_exponent(const Ideal& a, const QuotientRing& ring,
                     const ClosureResult& closure, std::uint32_t e_max) {
  QExponent out{.exponent = {}, .closure = closure};
  if (!closure.stabilized) {
    out.status = QStatus::Unstabilized;
    return out;
  }
  const std::uint32_t p = ring.characteristic();
  for (std::uint32_t e = 0; e <= e_max; ++e) {
    if (ideal_equal(frobenius_power(closure.closure, e, ring),
                    frobenius_power(a, e, ring))) {
      out.status = QStatus::Found;
      out.exponent = FrobeniusExponent::make(p, e);
      return out;
    }
  }
  out.status = QStatus::NotFound;
  return out;
}

}  // namespace frobq
