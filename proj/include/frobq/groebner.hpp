#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frobq/polynomial.hpp"

namespace frobq {

/// Limits on a single Buchberger run. Exceeding any of them raises
/// BudgetExceeded.
struct GbBudget {
  std::size_t max_basis_size = 20000;
  std::uint32_t max_degree = 1u << 20;
  std::size_t max_pairs = 5'000'000;
};

GbBudget default_budget();
void set_default_budget(const GbBudget& budget);

/// Installs a budget for the lifetime of the scope (process-wide).
class BudgetScope {
 public:
  explicit BudgetScope(const GbBudget& budget);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  GbBudget saved_;
};

struct GbStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis of the ideal generated by `generators`, in the
/// order of `ring`. Buchberger's algorithm with the Gebauer-Moeller
/// installation of the coprime and chain criteria; pairs are selected by
/// sugar degree, then by the smallest lcm in the monomial order, then by
/// index. Output is monic and sorted by descending leading monomial.
std::vector<Polynomial> buchberger(const RingPtr& ring,
                                   const std::vector<Polynomial>& generators,
                                   const GbBudget& budget,
                                   GbStats* stats = nullptr);

/// Full reduction of f by `divisors` (any set; the result is the unique
/// normal form only when `divisors` is a Groebner basis).
Polynomial reduce_full(const Polynomial& f,
                       const std::vector<Polynomial>& divisors);

/// Checks that every S-polynomial of `basis` reduces to zero modulo it.
bool is_groebner_basis(const std::vector<Polynomial>& basis);

}  // namespace frobq
