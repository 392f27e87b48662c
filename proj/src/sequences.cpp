#include "frobq/sequences.hpp"

#include <algorithm>
#include <numeric>

namespace frobq {

namespace {

bool contains(IndexSet set, std::size_t i) { return (set >> i) & 1u; }

std::string exponents_to_string(const std::vector<std::uint32_t>& n) {
  std::string out = "(";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(n[i]);
  }
  return out + ")";
}

// Calls f on every vector in [1, n_max]^l in lexicographic order; stops
// early when f returns false.
template <typename F>
void for_each_exponent_vector(std::size_t l, std::uint32_t n_max, F&& f) {
  std::vector<std::uint32_t> n(l, 1);
  while (true) {
    if (!f(n)) return;
    std::size_t i = l;
    while (i > 0 && n[i - 1] == n_max) n[--i] = 1;
    if (i == 0) return;
    ++n[i - 1];
  }
}

}  // namespace

std::string index_set_to_string(IndexSet set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!contains(set, i)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

// ------------------------------------------------------------ SequenceSpec

SequenceSpec::SequenceSpec(QuotientRing ring, std::vector<Polynomial> elements,
                           std::vector<std::uint32_t> exponents)
    : ring_(std::move(ring)),
      elements_(std::move(elements)),
      exponents_(std::move(exponents)) {
  if (elements_.empty()) throw InvalidArgument("sequence is empty");
  if (elements_.size() > 16) throw InvalidArgument("sequence is too long");
  if (exponents_.empty()) exponents_.assign(elements_.size(), 1);
  if (exponents_.size() != elements_.size()) {
    throw InvalidArgument("sequence has " + std::to_string(elements_.size()) +
                          " elements but " + std::to_string(exponents_.size()) +
                          " exponents");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!same_ring(elements_[i].ring(), ring_.ambient())) throw RingMismatch();
    if (ring_.is_zero(elements_[i])) {
      throw InvalidArgument("element " + std::to_string(i + 1) +
                            " is zero in the quotient ring");
    }
    if (exponents_[i] == 0) throw InvalidArgument("exponents must be positive");
  }
}

Polynomial SequenceSpec::power(std::size_t i) const {
  return elements_[i].pow(exponents_[i]);
}

SequenceSpec SequenceSpec::with_exponents(std::vector<std::uint32_t> exponents) const {
  return SequenceSpec(ring_, elements_, std::move(exponents));
}

SequenceSpec SequenceSpec::permuted(const std::vector<std::size_t>& order) const {
  std::vector<Polynomial> elems;
  std::vector<std::uint32_t> exps;
  for (std::size_t i : order) {
    elems.push_back(elements_.at(i));
    exps.push_back(exponents_.at(i));
  }
  return SequenceSpec(ring_, std::move(elems), std::move(exps));
}

SequenceSpec SequenceSpec::prefix(std::size_t r) const {
  return SequenceSpec(ring_,
                      std::vector<Polynomial>(elements_.begin(), elements_.begin() + r),
                      std::vector<std::uint32_t>(exponents_.begin(), exponents_.begin() + r));
}

Ideal SequenceSpec::power_ideal(IndexSet set) const { return power_ideal(set, 0); }

Ideal SequenceSpec::power_ideal(IndexSet set, std::uint32_t shift) const {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < length(); ++i) {
    if (contains(set, i)) gens.push_back(elements_[i].pow(exponents_[i] + shift));
  }
  return ring_.lift(Ideal(ring_.ambient(), std::move(gens)));
}

Ideal SequenceSpec::element_ideal(IndexSet set) const {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < length(); ++i) {
    if (contains(set, i)) gens.push_back(elements_[i]);
  }
  return Ideal(ring_.ambient(), std::move(gens));
}

Polynomial SequenceSpec::monomial(IndexSet set, std::uint32_t k) const {
  Polynomial out = Polynomial::constant(ring_.ambient(), 1);
  for (std::size_t i = 0; i < length(); ++i) {
    if (contains(set, i)) out *= elements_[i].pow(k);
  }
  return out;
}

Polynomial SequenceSpec::reduced_power_product(IndexSet set) const {
  Polynomial out = Polynomial::constant(ring_.ambient(), 1);
  for (std::size_t i = 0; i < length(); ++i) {
    if (contains(set, i)) out *= elements_[i].pow(exponents_[i] - 1);
  }
  return out;
}

// ------------------------------------------------------------- predicates

bool is_system_of_parameters(const SequenceSpec& x) {
  const QuotientRing& R = x.ring();
  if (static_cast<int>(x.length()) != R.dimension()) return false;
  Ideal I = R.lift(x.element_ideal(x.all()));
  for (std::size_t v = 0; v < R.ambient()->nvars(); ++v) {
    if (!radical_member(Polynomial::variable(R.ambient(), v), I)) return false;
  }
  return true;
}

bool is_subsystem_of_parameters(const SequenceSpec& x) {
  const QuotientRing& R = x.ring();
  Ideal I = R.lift(x.element_ideal(x.all()));
  return krull_dimension(I) == R.dimension() - static_cast<int>(x.length());
}

DSequenceCheck is_d_sequence(const SequenceSpec& x) {
  const std::size_t l = x.length();
  std::vector<Polynomial> powers;
  for (std::size_t i = 0; i < l; ++i) powers.push_back(x.power(i));
  for (std::size_t j = 0; j < l; ++j) {
    Ideal base = x.power_ideal((IndexSet{1} << j) - 1);
    for (std::size_t k = j + 1; k <= l; ++k) {
      Ideal left = colon(base, powers[j] * powers[k - 1]);
      Ideal right = colon(base, powers[k - 1]);
      if (!ideal_equal(left, right)) return {false, std::make_pair(j, k)};
    }
  }
  return {};
}

UsdCheck is_usd_bounded(const SequenceSpec& x, std::uint32_t n_max,
                        std::size_t max_length) {
  const std::size_t l = x.length();
  if (l > max_length) {
    throw BudgetExceeded("sequence length " + std::to_string(l) +
                         " exceeds the permutation cap " + std::to_string(max_length));
  }
  UsdCheck result;
  std::vector<std::size_t> order(l);
  std::iota(order.begin(), order.end(), 0);
  do {
    SequenceSpec ordered = x.permuted(order);
    for_each_exponent_vector(l, n_max, [&](const std::vector<std::uint32_t>& n) {
      auto check = is_d_sequence(ordered.with_exponents(n));
      if (check.holds) return true;
      result.passes = false;
      result.witness = UsdWitness{order, n, *check.violation};
      return false;
    });
    if (!result.passes) return result;
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

bool is_filter_regular(const SequenceSpec& x, const Ideal& reference) {
  for (std::size_t j = 0; j < x.length(); ++j) {
    Ideal base = x.power_ideal((IndexSet{1} << j) - 1);
    Ideal quotient = colon(base, x.power(j));
    if (ideal_equal(quotient, base)) continue;
    Ideal sat = saturate(base, reference).ideal;
    if (!ideal_contains(sat, quotient)) return false;
  }
  return true;
}

bool is_filter_regular(const SequenceSpec& x) {
  return is_filter_regular(x, x.ring().maximal_ideal());
}

UnmixedPart unmixed_part(const SequenceSpec& x, IndexSet subset) {
  Ideal base = x.power_ideal(subset);
  IndexSet rest = x.all() & ~subset;
  if (rest == 0) return {Ideal::unit(x.ring().ambient()), true};
  return {colon(base, x.element_ideal(rest)), false};
}

LimitIdeal limit_ideal(const SequenceSpec& x, IndexSet subset,
                       std::uint32_t max_steps) {
  if (subset == 0) {
    const Ideal& J = x.ring().relations();
    return {.stabilized = true, .ideal = J, .j_star = 0, .chain = {J}};
  }
  LimitIdeal result{.stabilized = false,
                    .ideal = x.power_ideal(subset),
                    .j_star = 0,
                    .chain = {x.power_ideal(subset)}};
  for (std::uint32_t j = 1; j <= max_steps; ++j) {
    Ideal next = colon(x.power_ideal(subset, j), x.monomial(subset, j));
    if (!ideal_contains(next, result.chain.back())) {
      throw Error("limit ideal chain is not ascending at j = " + std::to_string(j));
    }
    bool equal = ideal_equal(next, result.chain.back());
    result.chain.push_back(std::move(next));
    if (equal) {
      result.stabilized = true;
      result.j_star = j - 1;
      break;
    }
  }
  result.ideal = result.chain.back();
  return result;
}

Ideal limit_ideal_closed_form(const SequenceSpec& x) {
  const std::size_t l = x.length();
  if (l == 1) {
    return x.power_ideal(1) + colon(x.ring().relations(), x.elements()[0]);
  }
  std::optional<Ideal> sum;
  for (std::size_t i = 0; i < l; ++i) {
    Ideal term = colon(x.power_ideal(x.all() & ~(IndexSet{1} << i)), x.elements()[i]);
    sum = sum ? *sum + term : term;
  }
  return *sum;
}

Ideal limit_ideal_unmixed_form(const SequenceSpec& x) {
  if (x.length() < 2) {
    throw InvalidArgument("the unmixed-part form needs at least two elements");
  }
  SequenceSpec plain = x.with_exponents({});
  std::vector<Polynomial> gens = x.ring().relations().generators();
  for (IndexSet L = 0; L < x.all(); ++L) {
    Polynomial factor = x.reduced_power_product(L);
    Ideal un = unmixed_part(plain, L).ideal;
    for (const auto& g : un.generators()) gens.push_back(factor * g);
  }
  return Ideal(x.ring().ambient(), std::move(gens));
}

// -------------------------------------------------------------------- suite

std::string Counterexample::to_string() const {
  std::string out = "n=" + exponents_to_string(exponents);
  if (subset) out += " subset=" + index_set_to_string(*subset);
  if (position) out += " j=" + std::to_string(*position + 1);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

bool SuiteReport::all_passed() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityVerdict& v) { return v.passed; });
}

const IdentityVerdict* SuiteReport::find(std::string_view name) const {
  for (const auto& v : identities) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

namespace {

class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::vector<std::string> names) {
    for (auto& name : names) verdicts_.push_back({std::move(name), true, 0, std::nullopt});
  }

  void record(std::size_t which, bool ok, Counterexample where) {
    auto& v = verdicts_[which];
    ++v.checks;
    if (!ok && v.passed) {
      v.passed = false;
      v.counterexample = std::move(where);
    }
  }

  std::vector<IdentityVerdict> take() { return std::move(verdicts_); }

 private:
  std::vector<IdentityVerdict> verdicts_;
};

enum Identity : std::size_t {
  kColon,
  kColonPowers,
  kLimitClosedForm,
  kLimitProduct,
  kLimitUnmixedForm,
  kHunekePrefix,
  kHunekeUnmixed,
};

}  // namespace

SuiteReport verify_gy_suite(const SequenceSpec& x, std::uint32_t n_max) {
  SuiteReport report;
  UsdCheck usd = is_usd_bounded(x, n_max);
  report.hypothesis_verified = usd.passes;
  report.hypothesis_witness = usd.witness;

  const std::size_t l = x.length();
  const IndexSet all = x.all();
  SequenceSpec plain = x.with_exponents({});
  std::vector<Ideal> plain_unmixed;
  for (IndexSet L = 0; L < all; ++L) plain_unmixed.push_back(unmixed_part(plain, L).ideal);

  SuiteRecorder rec({"colon", "colon_powers", "limit_closed_form", "limit_product",
                     "limit_unmixed_form", "huneke_prefix", "huneke_unmixed"});
  for_each_exponent_vector(l, n_max, [&](const std::vector<std::uint32_t>& n) {
    SequenceSpec xn = x.with_exponents(n);
    auto at = [&](std::optional<IndexSet> subset, std::optional<std::size_t> j,
                  std::string detail) {
      return Counterexample{n, subset, j, std::move(detail)};
    };
    Ideal full = xn.power_ideal(all);

    for (IndexSet delta = 0; delta < all; ++delta) {
      Ideal base = xn.power_ideal(delta);
      Ideal un = unmixed_part(xn, delta).ideal;
      std::vector<Polynomial> sum_gens = x.ring().relations().generators();
      for (IndexSet L = delta;; L = (L - 1) & delta) {
        Polynomial factor = xn.reduced_power_product(L);
        for (const auto& g : plain_unmixed[L].generators()) sum_gens.push_back(factor * g);
        if (L == 0) break;
      }
      Ideal sum(x.ring().ambient(), std::move(sum_gens));
      for (std::size_t j = 0; j < l; ++j) {
        if (contains(delta, j)) continue;
        Ideal by_element = colon(base, x.elements()[j]);
        bool first = ideal_equal(un, by_element);
        bool second = ideal_equal(by_element, sum);
        rec.record(kColon, first && second,
                   at(delta, j, !first ? "unmixed part differs from the colon by x_j"
                                       : "colon by x_j differs from the sum over subsets"));
        rec.record(kColonPowers, ideal_equal(colon(base, xn.power(j)), by_element),
                   at(delta, j, "colon by x_j^n_j differs from the colon by x_j"));
      }
      Ideal meet = intersect(un, full);
      rec.record(kHunekeUnmixed, ideal_equal(meet, base),
                 at(delta, std::nullopt, "unmixed part meets the full ideal in more than the base"));
    }

    LimitIdeal lim = limit_ideal(xn, all);
    if (!lim.stabilized) {
      Counterexample where = at(std::nullopt, std::nullopt, "limit ideal did not stabilize");
      rec.record(kLimitClosedForm, false, where);
      rec.record(kLimitProduct, false, where);
      if (l >= 2) rec.record(kLimitUnmixedForm, false, where);
    } else {
      bool closed = ideal_equal(lim.ideal, limit_ideal_closed_form(xn));
      if (closed && l >= 2) {
        std::optional<Ideal> sum;
        for (std::size_t i = 0; i < l; ++i) {
          Ideal term = unmixed_part(xn, all & ~(IndexSet{1} << i)).ideal;
          sum = sum ? *sum + term : term;
        }
        closed = ideal_equal(lim.ideal, *sum);
      }
      rec.record(kLimitClosedForm, closed,
                 at(std::nullopt, std::nullopt, "limit ideal differs from the closed form"));
      rec.record(kLimitProduct,
                 ideal_contains(xn.power_ideal(all, 1), lim.ideal.scaled(x.monomial(all, 1))),
                 at(std::nullopt, std::nullopt,
                    "x_1...x_l times the limit ideal is not in the ideal of (n+1)-th powers"));
      if (l >= 2) {
        rec.record(kLimitUnmixedForm, ideal_equal(lim.ideal, limit_ideal_unmixed_form(xn)),
                   at(std::nullopt, std::nullopt,
                      "limit ideal differs from the sum of scaled unmixed parts"));
      }
    }

    for (std::size_t r = 0; r < l; ++r) {
      IndexSet head = (IndexSet{1} << r) - 1;
      Ideal base = xn.power_ideal(head);
      Ideal meet = intersect(colon(base, xn.power(r)), full);
      rec.record(kHunekePrefix, ideal_equal(meet, base),
                 at(head, r, "colon by the next element meets the full ideal in more than the prefix"));
    }
    return true;
  });
  report.identities = rec.take();
  return report;
}

}  // namespace frobq
