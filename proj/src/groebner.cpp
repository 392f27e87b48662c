#include "frobq/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>

namespace frobq {

namespace {

std::mutex& budget_mutex() {
  static std::mutex m;
  return m;
}

GbBudget& budget_storage() {
  static GbBudget b;
  return b;
}

/// Divisibility lookup over a growing list of monic polynomials.
class DivisorTable {
 public:
  void add(const Polynomial* g) {
    polys_.push_back(g);
    masks_.push_back(g->leading_monomial().support_mask());
    active_.push_back(true);
  }
  void deactivate(std::size_t i) { active_[i] = false; }
  std::size_t size() const { return polys_.size(); }

  const Polynomial* find(const Monomial& m) const {
    const std::uint32_t mask = m.support_mask();
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i] || (masks_[i] & ~mask) != 0) continue;
      if (polys_[i]->leading_monomial().divides(m)) return polys_[i];
    }
    return nullptr;
  }

 private:
  std::vector<const Polynomial*> polys_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
};

/// out = work[from..] - c * m * g[1..], merged in descending order.
void sub_mul_tail(const std::vector<Term>& work, std::size_t from,
                  std::uint32_t c, const Monomial& m, const Polynomial& g,
                  const PolyRing& ring, std::vector<Term>& out) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  const auto& gt = g.terms();
  out.clear();
  out.reserve(work.size() - from + gt.size());
  std::size_t i = from;
  for (std::size_t j = 1; j < gt.size(); ++j) {
    Monomial gm = gt[j].mono * m;
    while (i < work.size() && order.greater(work[i].mono, gm)) {
      out.push_back(work[i++]);
    }
    std::uint32_t gc = field.mul(gt[j].coeff, c);
    if (i < work.size() && work[i].mono == gm) {
      std::uint32_t v = field.sub(work[i].coeff, gc);
      if (v != 0) out.push_back({v, gm});
      ++i;
    } else {
      out.push_back({field.neg(gc), gm});
    }
  }
  for (; i < work.size(); ++i) out.push_back(work[i]);
}

/// Full reduction against monic divisors found through `table`.
Polynomial reduce_with(const Polynomial& f, const DivisorTable& table) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  std::vector<Term> rem;
  std::vector<Term> work = f.terms();
  std::vector<Term> scratch;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term lt = work[head];
    const Polynomial* g = table.find(lt.mono);
    if (g == nullptr) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    std::uint32_t c = g->leading_coeff() == 1
                          ? lt.coeff
                          : field.mul(lt.coeff, field.inv(g->leading_coeff()));
    sub_mul_tail(work, head + 1, c, lt.mono / g->leading_monomial(), *g, *ring,
                 scratch);
    std::swap(work, scratch);
    head = 0;
  }
  return Polynomial::from_terms(ring, std::move(rem));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

struct PairLess {
  const MonomialOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    auto c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GbBudget& budget)
      : ring_(std::move(ring)),
        budget_(budget),
        pairs_(PairLess{&ring_->order()}) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& generators,
                              GbStats* stats) {
    std::vector<Polynomial> inputs;
    for (const auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) throw RingMismatch();
      if (!g.is_zero()) inputs.push_back(g.monic());
    }
    // Deterministic input order: ascending leading monomial, then position.
    std::stable_sort(inputs.begin(), inputs.end(),
                     [&](const Polynomial& a, const Polynomial& b) {
                       return ring_->order().greater(b.leading_monomial(),
                                                     a.leading_monomial());
                     });
    for (const auto& f : inputs) {
      if (insert(reduce_with(f, table_), f.total_degree())) return unit();
    }
    while (!pairs_.empty()) {
      Pair pair = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++stats_.pairs_considered;
      if (stats_.pairs_considered > budget_.max_pairs) {
        throw BudgetExceeded("Groebner pair budget exceeded (" +
                             std::to_string(budget_.max_pairs) + " pairs)");
      }
      Polynomial s = s_polynomial(pair);
      ++stats_.pairs_reduced;
      Polynomial h = reduce_with(s, table_);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (insert(h, pair.sugar)) return unit();
    }
    if (stats) *stats = stats_;
    return interreduce();
  }

 private:
  std::vector<Polynomial> unit() const {
    return {Polynomial::constant(ring_, 1)};
  }

  Polynomial s_polynomial(const Pair& pair) const {
    const Polynomial& f = basis_[pair.i];
    const Polynomial& g = basis_[pair.j];
    // Both monic: S = (lcm/lm f) f - (lcm/lm g) g; leading terms cancel.
    Polynomial a = f.mul_term(1, pair.lcm / f.leading_monomial());
    return a.sub_mul_term(1, pair.lcm / g.leading_monomial(), g);
  }

  /// Adds h (reduced, nonzero) and updates the pair set. Returns true when
  /// h is a unit.
  bool insert(const Polynomial& reduced, std::uint32_t sugar) {
    if (reduced.is_zero()) return false;
    Polynomial h = reduced.monic();
    if (h.is_constant()) return true;
    if (h.total_degree() > budget_.max_degree) {
      throw BudgetExceeded("Groebner degree budget exceeded (degree " +
                           std::to_string(h.total_degree()) + ")");
    }
    if (basis_.size() + 1 > budget_.max_basis_size) {
      throw BudgetExceeded("Groebner basis size budget exceeded (" +
                           std::to_string(budget_.max_basis_size) + ")");
    }
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    sugar_.push_back(std::max(sugar, basis_[hi].total_degree()));
    active_.push_back(true);
    update(hi);
    // basis_ may have reallocated, so the table is rebuilt from scratch.
    rebuild_table();
    return false;
  }

  void rebuild_table() {
    table_ = DivisorTable();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      table_.add(&basis_[i]);
      if (!active_[i]) table_.deactivate(i);
    }
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const Monomial& a = basis_[i].leading_monomial();
    const Monomial& b = basis_[j].leading_monomial();
    Monomial l = a.lcm(b);
    std::uint32_t s = std::max(sugar_[i] + (l.degree() - a.degree()),
                               sugar_[j] + (l.degree() - b.degree()));
    return Pair{std::min(i, j), std::max(i, j), l, s};
  }

  // Gebauer-Moeller update.
  void update(std::size_t hi) {
    const Monomial& lh = basis_[hi].leading_monomial();
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) candidates.push_back(make_pair(g, hi));
    }
    std::vector<bool> coprime(candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      coprime[k] = lh.coprime(basis_[candidates[k].i].leading_monomial());
    }
    // Keep a candidate unless another candidate's lcm properly divides it,
    // or an equal lcm appears earlier (keep exactly one per lcm, preferring
    // coprime representatives so that criterion 1 can discard the class).
    std::vector<bool> keep(candidates.size(), true);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      for (std::size_t m = 0; m < candidates.size() && keep[k]; ++m) {
        if (m == k || !keep[m]) continue;
        const Monomial& lk = candidates[k].lcm;
        const Monomial& lm = candidates[m].lcm;
        if (!lm.divides(lk)) continue;
        if (!(lm == lk)) {
          keep[k] = false;
        } else if (coprime[m] && !coprime[k]) {
          keep[k] = false;
        } else if (coprime[m] == coprime[k] && m < k) {
          keep[k] = false;
        }
      }
    }
    // Chain criterion on old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lh.divides(l) &&
          !(basis_[it->i].leading_monomial().lcm(lh) == l) &&
          !(basis_[it->j].leading_monomial().lcm(lh) == l)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (keep[k] && !coprime[k]) pairs_.insert(candidates[k]);
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) {
        active_[g] = false;
      }
    }
  }

  std::vector<Polynomial> interreduce() const {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) minimal.push_back(basis_[i]);
    }
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      DivisorTable others;
      for (std::size_t m = 0; m < minimal.size(); ++m) {
        if (m != k) others.add(&minimal[m]);
      }
      const Polynomial& g = minimal[k];
      Polynomial tail = g - Polynomial::term(ring_, g.leading_coeff(),
                                             g.leading_monomial());
      Polynomial lead = Polynomial::term(ring_, 1, g.leading_monomial());
      out.push_back(lead + reduce_with(tail, others));
    }
    std::sort(out.begin(), out.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                return ring_->order().greater(a.leading_monomial(),
                                              b.leading_monomial());
              });
    return out;
  }

  RingPtr ring_;
  GbBudget budget_;
  std::vector<Polynomial> basis_;
  std::vector<std::uint32_t> sugar_;
  std::vector<bool> active_;
  DivisorTable table_;
  std::set<Pair, PairLess> pairs_;
  GbStats stats_;
};

}  // namespace

GbBudget default_budget() {
  std::lock_guard lock(budget_mutex());
  return budget_storage();
}

void set_default_budget(const GbBudget& budget) {
  std::lock_guard lock(budget_mutex());
  budget_storage() = budget;
}

BudgetScope::BudgetScope(const GbBudget& budget) : saved_(default_budget()) {
  set_default_budget(budget);
}

BudgetScope::~BudgetScope() { set_default_budget(saved_); }

std::vector<Polynomial> buchberger(const RingPtr& ring,
                                   const std::vector<Polynomial>& generators,
                                   const GbBudget& budget, GbStats* stats) {
  return Buchberger(ring, budget).run(generators, stats);
}

Polynomial reduce_full(const Polynomial& f,
                       const std::vector<Polynomial>& divisors) {
  std::vector<Polynomial> monic;
  monic.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (!same_ring(g.ring(), f.ring())) throw RingMismatch();
    if (!g.is_zero()) monic.push_back(g.monic());
  }
  DivisorTable table;
  for (const auto& g : monic) table.add(&g);
  return reduce_with(f, table);
}

bool is_groebner_basis(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Polynomial f = basis[i].monic();
      const Polynomial g = basis[j].monic();
      Monomial l = f.leading_monomial().lcm(g.leading_monomial());
      Polynomial s = f.mul_term(1, l / f.leading_monomial())
                         .sub_mul_term(1, l / g.leading_monomial(), g);
      if (!reduce_full(s, basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace frobq
