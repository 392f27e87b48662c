#pragma once

// Degree-bounded membership oracle, independent of the Groebner engine:
// decides whether f = sum_i h_i g_i with deg(h_i g_i) <= D by Gaussian
// elimination over F_p on the truncated Macaulay matrix. A "true" answer is
// a certificate of membership; "false" only means no certificate below D.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "frobq/polynomial.hpp"

namespace frobq::oracle {

inline std::vector<Monomial> monomials_up_to(std::size_t nvars,
                                             std::uint32_t degree) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  // odometer over exponent vectors with total degree <= degree
  std::vector<std::uint32_t> e(nvars, 0);
  for (;;) {
    std::uint32_t total = 0;
    for (auto v : e) total += v;
    if (total <= degree) out.emplace_back(std::span<const std::uint32_t>(e));
    std::size_t i = 0;
    while (i < nvars) {
      if (++e[i] <= degree) break;
      e[i] = 0;
      ++i;
    }
    if (i == nvars) break;
  }
  return out;
}

inline bool member_up_to_degree(const Polynomial& f,
                                const std::vector<Polynomial>& gens,
                                std::uint32_t bound) {
  const RingPtr& ring = f.ring();
  const PrimeField& field = ring->field();
  if (f.is_zero()) return true;

  // Columns: the products m * g_i. Row index: monomial of degree <= bound.
  std::map<Monomial, std::size_t> row_of;
  for (const auto& m : monomials_up_to(ring->nvars(), bound)) {
    row_of.emplace(m, row_of.size());
  }
  if (f.total_degree() > bound) return false;
  std::vector<std::vector<std::uint32_t>> columns;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > bound) continue;
    for (const auto& m : monomials_up_to(ring->nvars(), bound - g.total_degree())) {
      std::vector<std::uint32_t> col(row_of.size(), 0);
      for (const auto& t : g.terms()) col[row_of.at(t.mono * m)] = t.coeff;
      columns.push_back(std::move(col));
    }
  }
  std::vector<std::uint32_t> target(row_of.size(), 0);
  for (const auto& t : f.terms()) target[row_of.at(t.mono)] = t.coeff;

  // Echelonize the column space, then reduce the target against it.
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<std::size_t> pivots;
  auto reduce = [&](std::vector<std::uint32_t>& v) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::uint32_t c = v[pivots[b]];
      if (c == 0) continue;
      for (std::size_t r = 0; r < v.size(); ++r) {
        if (basis[b][r] != 0) v[r] = field.sub(v[r], field.mul(c, basis[b][r]));
      }
    }
  };
  for (auto& col : columns) {
    reduce(col);
    auto it = std::find_if(col.begin(), col.end(), [](auto x) { return x != 0; });
    if (it == col.end()) continue;
    std::size_t pivot = static_cast<std::size_t>(it - col.begin());
    std::uint32_t inv = field.inv(*it);
    for (auto& x : col) x = field.mul(x, inv);
    // keep the basis fully reduced at pivot positions
    for (auto& b : basis) {
      std::uint32_t c = b[pivot];
      if (c == 0) continue;
      for (std::size_t r = 0; r < b.size(); ++r) {
        if (col[r] != 0) b[r] = field.sub(b[r], field.mul(c, col[r]));
      }
    }
    basis.push_back(std::move(col));
    pivots.push_back(pivot);
  }
  reduce(target);
  return std::all_of(target.begin(), target.end(), [](auto x) { return x == 0; });
}

/// Bound used by the acceptance criterion: deg f + max deg g_i + 2.
inline std::uint32_t default_bound(const Polynomial& f,
                                   const std::vector<Polynomial>& gens) {
  std::uint32_t d = 0;
  for (const auto& g : gens) d = std::max(d, g.total_degree());
  return f.total_degree() + d + 2;
}

}  // namespace frobq::oracle
