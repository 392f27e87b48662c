#include "frobq/ideal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace frobq {

namespace {

std::string fresh_name(const PolyRing& ring, std::string_view stem) {
  for (int k = 0;; ++k) {
    std::string name = std::string(stem) + std::to_string(k);
    if (!ring.index_of(name)) return name;
  }
}

void require_same(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

}  // namespace

// ------------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same(g.ring(), ring_);
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return from_reduced_basis(std::move(ring), {one});
}

Ideal Ideal::parse(std::string_view text, const RingPtr& ring) {
  return Ideal(ring, parse_polynomial_list(text, ring));
}

Ideal Ideal::from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis) {
  Ideal ideal(std::move(ring), basis);
  std::call_once(ideal.cache_->once,
                 [&] { ideal.cache_->basis = std::move(basis); });
  return ideal;
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = buchberger(ring_, generators_, default_budget());
  });
  return cache_->basis;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_constant();
}

Ideal Ideal::operator+(const Ideal& other) const {
  require_same(ring_, other.ring_);
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::operator*(const Ideal& other) const {
  require_same(ring_, other.ring_);
  std::vector<Polynomial> gens;
  for (const auto& a : generators_) {
    for (const auto& b : other.generators_) gens.push_back(a * b);
  }
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::scaled(const Polynomial& f) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g * f);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const Polynomial& f) const {
  std::vector<Polynomial> gens = generators_;
  gens.push_back(f);
  return Ideal(ring_, std::move(gens));
}

std::string Ideal::to_string() const {
  const auto& b = basis();
  if (b.empty()) return "0";
  std::string out;
  for (const auto& g : b) {
    if (!out.empty()) out += "; ";
    out += g.to_string();
  }
  return out;
}

// -------------------------------------------------------------- operations

std::vector<Polynomial> groebner_basis(const Ideal& ideal) {
  return ideal.basis();
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) {
  require_same(f.ring(), ideal.ring());
  return reduce_full(f, ideal.basis());
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  return normal_form(f, ideal).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same(a.ring(), b.ring());
  return a.basis() == b.basis();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  require_same(big.ring(), small.ring());
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return ideal_member(g, big); });
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  const std::size_t n = ring->nvars();
  std::vector<std::string> names{fresh_name(*ring, "_t")};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  RingPtr ext = PolyRing::make(ring->characteristic(), std::move(names),
                               OrderKind::Elimination, 1);
  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), 1);

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.basis()) gens.push_back(t * g.remap(ext, up));
  for (const auto& g : b.basis()) gens.push_back(one_minus_t * g.remap(ext, up));
  std::vector<Polynomial> eliminated = buchberger(ext, gens, default_budget());

  std::vector<std::size_t> down(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) down[i + 1] = i;
  std::vector<Polynomial> result;
  for (const auto& g : eliminated) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(),
                             [](const Term& term) { return term.mono[0] != 0; });
    if (!has_t) result.push_back(g.remap(ring, down));
  }
  // The t-free part of a reduced basis in the elimination order is the
  // reduced basis of the intersection for the induced grevlex order.
  if (ring->order().kind() == OrderKind::Grevlex) {
    return Ideal::from_reduced_basis(ring, std::move(result));
  }
  return Ideal(ring, std::move(result));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  require_same(ideal.ring(), f.ring());
  const RingPtr& ring = ideal.ring();
  if (f.is_zero() || ideal.is_unit() || ideal_member(f, ideal)) {
    return Ideal::unit(ring);
  }
  if (f.is_constant()) return ideal;
  Ideal meet = intersect(ideal, Ideal(ring, {f}));
  std::vector<Polynomial> quotients;
  quotients.reserve(meet.generators().size());
  for (const auto& g : meet.generators()) quotients.push_back(g.divide_exact(f));
  return Ideal(ring, std::move(quotients));
}

Ideal colon(const Ideal& ideal, const Ideal& divisor) {
  require_same(ideal.ring(), divisor.ring());
  if (divisor.is_zero()) return Ideal::unit(ideal.ring());
  std::vector<Polynomial> gens = divisor.generators();
  // Divisor generators already in I contribute the unit ideal; skip them.
  std::optional<Ideal> acc;
  for (const auto& g : gens) {
    if (ideal_member(g, ideal)) continue;
    Ideal part = colon(ideal, g);
    acc = acc ? intersect(*acc, part) : part;
  }
  return acc ? *acc : Ideal::unit(ideal.ring());
}

Saturation saturate(const Ideal& ideal, const Ideal& divisor) {
  constexpr int kMaxSteps = 256;
  Ideal current = ideal;
  for (int s = 0; s < kMaxSteps; ++s) {
    Ideal next = colon(current, divisor);
    if (ideal_equal(next, current)) return {current, s};
    current = next;
  }
  throw BudgetExceeded("saturation did not stabilize within " +
                       std::to_string(kMaxSteps) + " steps");
}

int krull_dimension(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.basis()) {
    supports.push_back(g.leading_monomial().support_mask());
  }
  int best = 0;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t subset = 0; subset <= full; ++subset) {
    int size = std::popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(
        supports.begin(), supports.end(),
        [&](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
    if (subset == full) break;
  }
  return best;
}

std::optional<std::vector<Monomial>> standard_monomials(const Ideal& ideal,
                                                        std::size_t limit) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : ideal.basis()) leads.push_back(g.leading_monomial());
  // Finite iff every variable has a pure power among the leading monomials.
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& m : leads) {
    std::uint32_t mask = m.support_mask();
    if (std::popcount(mask) != 1) continue;
    std::size_t i = std::countr_zero(mask);
    if (bound[i] == 0 || m[i] < bound[i]) bound[i] = m[i];
  }
  if (leads.empty() || std::any_of(bound.begin(), bound.end(),
                                   [](std::uint32_t b) { return b == 0; })) {
    if (!(leads.size() == 1 && leads[0].is_one())) return std::nullopt;
  }
  std::vector<Monomial> out;
  if (leads.size() == 1 && leads[0].is_one()) return out;
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(),
                        [&](const Monomial& l) { return l.divides(m); });
  };
  // Depth-first over the exponent box; a non-standard monomial has no
  // standard multiples, so its branch is pruned.
  Monomial current(n);
  bool overflow = false;
  auto visit = [&](auto&& self, std::size_t var) -> void {
    if (overflow) return;
    if (var == n) {
      if (out.size() == limit) {
        overflow = true;
        return;
      }
      out.push_back(current);
      return;
    }
    for (std::uint32_t k = 0; k < bound[var]; ++k) {
      current.set(var, k);
      if (!standard(current)) break;
      self(self, var + 1);
    }
    current.set(var, 0);
  };
  visit(visit, 0);
  if (overflow) return std::nullopt;
  const MonomialOrder& order = ring->order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return order.greater(b, a);
  });
  return out;
}

bool radical_member(const Polynomial& f, const Ideal& ideal) {
  require_same(f.ring(), ideal.ring());
  if (f.is_zero() || ideal.is_unit()) return true;
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::string> names = ring->variables();
  names.push_back(fresh_name(*ring, "_r"));
  RingPtr ext = PolyRing::make(ring->characteristic(), std::move(names));
  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.basis()) gens.push_back(g.remap(ext, up));
  Polynomial t = Polynomial::variable(ext, n);
  gens.push_back(Polynomial::constant(ext, 1) - t * f.remap(ext, up));
  auto basis = buchberger(ext, gens, default_budget());
  return basis.size() == 1 && basis[0].is_constant();
}

}  // namespace frobq
