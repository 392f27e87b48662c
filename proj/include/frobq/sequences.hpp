#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobq/frobenius.hpp"

namespace frobq {

/// A subset of sequence positions; bit i stands for x_{i+1}.
using IndexSet = std::uint32_t;

/// 1-based listing such as "{1,3}".
std::string index_set_to_string(IndexSet set);

/// x_1, ..., x_l in R = S/J with exponents n_1, ..., n_l.
class SequenceSpec {
 public:
  /// Throws InvalidArgument when the sequence is empty, an element is zero
  /// modulo J, an exponent is zero, or the lengths differ. Empty exponents
  /// mean all ones.
  SequenceSpec(QuotientRing ring, std::vector<Polynomial> elements,
               std::vector<std::uint32_t> exponents = {});

  const QuotientRing& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::size_t length() const { return elements_.size(); }
  IndexSet all() const { return (IndexSet{1} << length()) - 1; }

  /// x_i^{n_i}, 0-based.
  Polynomial power(std::size_t i) const;
  SequenceSpec with_exponents(std::vector<std::uint32_t> exponents) const;
  /// Element order given by `order` (0-based positions).
  SequenceSpec permuted(const std::vector<std::size_t>& order) const;
  /// The first r elements.
  SequenceSpec prefix(std::size_t r) const;

  /// sum_{i in set} x_i^{n_i} R + J.
  Ideal power_ideal(IndexSet set) const;
  /// sum_{i in set} x_i^{n_i + shift} R + J.
  Ideal power_ideal(IndexSet set, std::uint32_t shift) const;
  /// sum_{i in set} x_i R, without J.
  Ideal element_ideal(IndexSet set) const;
  /// prod_{i in set} x_i^k.
  Polynomial monomial(IndexSet set, std::uint32_t k) const;
  /// prod_{i in set} x_i^{n_i - 1}.
  Polynomial reduced_power_product(IndexSet set) const;

 private:
  QuotientRing ring_;
  std::vector<Polynomial> elements_;
  std::vector<std::uint32_t> exponents_;
};

/// l = dim R and J + (x) is primary to the maximal ideal.
bool is_system_of_parameters(const SequenceSpec& x);
/// dim S/(J + (x)) = dim R - l.
bool is_subsystem_of_parameters(const SequenceSpec& x);

struct DSequenceCheck {
  bool holds = true;
  /// First (j, k), 0 <= j < k <= l, with
  /// (x_1..x_j : x_{j+1} x_k) != (x_1..x_j : x_k).
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// d-sequence test for x_1^{n_1}, ..., x_l^{n_l}.
DSequenceCheck is_d_sequence(const SequenceSpec& x);

inline constexpr std::size_t kMaxUsdLength = 5;

struct UsdWitness {
  /// 0-based positions of the failing order.
  std::vector<std::size_t> order;
  /// Exponents of the failing order, listed in that order.
  std::vector<std::uint32_t> exponents;
  std::pair<std::size_t, std::size_t> violation;
};

struct UsdCheck {
  /// Every permutation of every exponent choice in [1, n_max]^l passed.
  bool passes = true;
  std::optional<UsdWitness> witness;
};

/// Bounded check of the unconditioned strong d-sequence condition. Throws
/// BudgetExceeded when l > max_length.
UsdCheck is_usd_bounded(const SequenceSpec& x, std::uint32_t n_max,
                        std::size_t max_length = kMaxUsdLength);

/// For each j, ((x_1..x_{j-1}) + J : x_j) lies in the saturation of
/// (x_1..x_{j-1}) + J by `reference` (powers x_i^{n_i} are used).
bool is_filter_regular(const SequenceSpec& x, const Ideal& reference);
/// Same, with the maximal ideal as reference.
bool is_filter_regular(const SequenceSpec& x);

struct UnmixedPart {
  Ideal ideal;
  /// The divisor was the zero ideal (subset = all positions).
  bool colon_by_zero = false;
};

/// ((sum_{i in subset} x_i^{n_i}) + J : sum_{i not in subset} x_i).
UnmixedPart unmixed_part(const SequenceSpec& x, IndexSet subset);

inline constexpr std::uint32_t kMaxLimitSteps = 12;

struct LimitIdeal {
  bool stabilized = false;
  Ideal ideal;
  /// First j with chain[j] = chain[j + 1].
  std::uint32_t j_star = 0;
  std::vector<Ideal> chain;
};

/// The chain ((sum_{i in subset} x_i^{n_i + j}) + J : x_subset^j), j = 0, 1,
/// ..., stopped at the first two equal consecutive members or at max_steps.
LimitIdeal limit_ideal(const SequenceSpec& x, IndexSet subset,
                       std::uint32_t max_steps = kMaxLimitSteps);

/// Closed form of the limit ideal of the full sequence, valid for
/// unconditioned strong d-sequences: x_1^{n_1} + (J : x_1) when l = 1, and
/// sum_i ((sum_{j != i} x_j^{n_j}) + J : x_i) when l >= 2.
Ideal limit_ideal_closed_form(const SequenceSpec& x);

/// sum over proper subsets L of x_L^{n - 1} * (sum_{i in L} x_i)^un, l >= 2.
Ideal limit_ideal_unmixed_form(const SequenceSpec& x);

struct Counterexample {
  std::vector<std::uint32_t> exponents;
  std::optional<IndexSet> subset;
  std::optional<std::size_t> position;
  std::string detail;

  std::string to_string() const;
};

struct IdentityVerdict {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::optional<Counterexample> counterexample;
};

struct SuiteReport {
  /// The input passed is_usd_bounded for the same n_max.
  bool hypothesis_verified = false;
  std::optional<UsdWitness> hypothesis_witness;
  std::vector<IdentityVerdict> identities;

  bool all_passed() const;
  const IdentityVerdict* find(std::string_view name) const;
};

/// Checks the colon identity, the limit ideal formulas, the two product
/// identities of the limit ideal, the intersection identities and colon
/// stability under powers over every n in [1, n_max]^l, every proper
/// subset and every index outside it.
SuiteReport verify_gy_suite(const SequenceSpec& x, std::uint32_t n_max);

}  // namespace frobq
