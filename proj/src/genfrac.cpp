#include "frobq/genfrac.hpp"

#include <algorithm>

namespace frobq {

GenFracElem::GenFracElem(Polynomial numerator, SequenceSpec sequence,
                         std::vector<std::uint32_t> denominators,
                         std::uint64_t certificate)
    : numerator_(std::move(numerator)),
      sequence_(std::move(sequence)),
      denominators_(std::move(denominators)),
      certificate_exponent_(certificate) {}

namespace {

Ideal denominator_ideal(const SequenceSpec& x, const std::vector<std::uint32_t>& n) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n.size(); ++i) gens.push_back(x.elements()[i].pow(n[i]));
  return x.ring().lift(Ideal(x.ring().ambient(), std::move(gens)));
}

bool certificate_holds(const Polynomial& h, const SequenceSpec& x,
                       const std::vector<std::uint32_t>& n, std::uint64_t c) {
  Polynomial next = x.elements()[n.size()].pow(c);
  return ideal_member(h * next, denominator_ideal(x, n));
}

}  // namespace

GenFracElem make_elem(const Polynomial& h, const SequenceSpec& x, std::size_t r,
                      std::vector<std::uint32_t> n) {
  if (r >= x.length()) {
    throw InvalidArgument("fraction length " + std::to_string(r) +
                          " must be below the sequence length " +
                          std::to_string(x.length()));
  }
  if (n.empty()) n.assign(r, 1);
  if (n.size() != r) throw InvalidArgument("need one denominator exponent per position");
  if (std::any_of(n.begin(), n.end(), [](std::uint32_t v) { return v == 0; })) {
    throw InvalidArgument("denominator exponents must be positive");
  }
  if (!same_ring(h.ring(), x.ring().ambient())) throw RingMismatch();
  if (!certificate_holds(h, x, n, 1)) {
    throw InvalidArgument("numerator " + h.to_string() + " times " +
                          x.elements()[r].to_string() + " is not in " +
                          denominator_ideal(x, n).to_string());
  }
  return GenFracElem(h, x, std::move(n), 1);
}

Tristate is_zero_in_cohomology(const GenFracElem& elem) {
  const SequenceSpec& x = elem.sequence();
  const QuotientRing& R = x.ring();
  const std::size_t r = elem.length();
  if (r == 0) return R.is_zero(elem.numerator()) ? Tristate::True : Tristate::False;
  const auto& n = elem.denominators();
  const std::uint32_t top = *std::max_element(n.begin(), n.end());
  Polynomial h = elem.numerator();
  for (std::size_t i = 0; i < r; ++i) h *= x.elements()[i].pow(top - n[i]);
  SequenceSpec head = x.prefix(r).with_exponents(std::vector<std::uint32_t>(r, top));
  LimitIdeal lim = limit_ideal(head, head.all());
  if (ideal_member(h, lim.ideal)) return Tristate::True;
  return lim.stabilized ? Tristate::False : Tristate::Indeterminate;
}

GenFracElem t_action(const GenFracElem& elem, std::uint32_t e) {
  const SequenceSpec& x = elem.sequence();
  const auto fe = FrobeniusExponent::make(x.ring().characteristic(), e);
  if (fe.q == 1) return elem;
  std::vector<std::uint32_t> n = elem.denominators();
  for (auto& v : n) {
    std::uint64_t scaled = v * fe.q;
    if (scaled > kMaxExponent) throw ExponentOverflow("denominator exponent overflow");
    v = static_cast<std::uint32_t>(scaled);
  }
  Polynomial h = elem.numerator().frobenius(fe.q);
  const std::uint64_t c = elem.certificate_exponent() * fe.q;
  if (!certificate_holds(h, x, n, c)) {
    throw Error("kernel certificate lost under the Frobenius action");
  }
  return GenFracElem(std::move(h), x, std::move(n), c);
}

HslExponent hsl_exponent(const GenFracElem& elem, std::uint32_t e_max) {
  for (std::uint32_t e = 0; e <= e_max; ++e) {
    switch (is_zero_in_cohomology(t_action(elem, e))) {
      case Tristate::True:
        return {HslStatus::Found, e};
      case Tristate::Indeterminate:
        return {HslStatus::Indeterminate, e};
      case Tristate::False:
        break;
    }
  }
  return {HslStatus::NotFound, 0};
}

}  // namespace frobq
