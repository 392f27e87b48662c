#pragma once

// Exhaustive Frobenius chain scans for two small quotient rings, written
// without the Groebner engine: each ring has a hand-derived normal form for
// a^[q] + J and the chain member F_e / (a + J) is found by enumerating every
// coefficient vector over the standard monomials of a + J.

#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace frobq::oracle {

inline std::uint64_t power_of(std::uint64_t p, std::uint32_t e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  return q;
}

/// Binomial coefficients C(n, k) mod p for k = 0..n by Pascal's rule.
inline std::vector<std::uint64_t> binomial_row(std::uint64_t n, std::uint64_t p) {
  std::vector<std::uint64_t> row{1};
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 0);
    next[0] = next[i] = 1;
    for (std::uint64_t k = 1; k < i; ++k) next[k] = (row[k - 1] + row[k]) % p;
    row = std::move(next);
  }
  return row;
}

/// F_2[x,y]/(x^2), a = (y). a + J has standard monomials {1, x}; a^[q] + J is
/// the monomial ideal (y^q, x^2). Returns, for each coefficient vector
/// (c0, c1) in F_2^2, whether (c0 + c1 x)^q lies in a^[q] + J.
inline std::map<std::array<std::uint32_t, 2>, bool> nilline_chain_member(std::uint32_t e) {
  const std::uint64_t q = power_of(2, e);
  std::map<std::array<std::uint32_t, 2>, bool> out;
  for (std::uint32_t c0 = 0; c0 < 2; ++c0) {
    for (std::uint32_t c1 = 0; c1 < 2; ++c1) {
      // (c0 + c1 x)^q = c0 + c1 x^q in characteristic 2.
      bool constant_survives = c0 != 0;               // 1 is outside (y^q, x^2)
      bool x_term_survives = c1 != 0 && q < 2;         // x^q in (x^2) iff q >= 2
      out[{c0, c1}] = !constant_survives && !x_term_survives;
    }
  }
  return out;
}

/// Sparse polynomial in x, y, z keyed by exponent triples, coefficients mod p.
using Sparse3 = std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t>;

/// Normal form of c * x^k modulo (x^3 + y^3 + z^3, y^q, z^q) over F_p. The
/// three generators have pairwise coprime grevlex leading terms x^3, y^q, z^q,
/// so x^k -> x^(k mod 3) (-(y^3 + z^3))^(k div 3) followed by discarding every
/// monomial with a y- or z-exponent >= q is the unique normal form.
inline void add_fermat_reduced_xpower(Sparse3& acc, std::uint64_t c, std::uint64_t k,
                                      std::uint64_t p, std::uint64_t q) {
  const std::uint64_t m = k / 3;
  const std::uint64_t r = k % 3;
  const auto row = binomial_row(m, p);
  // (-1)^m * sum_i C(m,i) y^(3i) z^(3(m-i))
  const std::uint64_t sign = (m % 2 == 0) ? 1 : p - 1;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (row[i] == 0) continue;
    const std::uint64_t ey = 3 * i, ez = 3 * (m - i);
    if (ey >= q || ez >= q) continue;
    auto& slot = acc[{r, ey, ez}];
    slot = (slot + c % p * row[i] % p * sign) % p;
  }
}

/// F_p[x,y,z]/(x^3+y^3+z^3), a = (y, z). a + J has standard monomials
/// {1, x, x^2}. Returns the set of (c0, c1, c2) with (c0 + c1 x + c2 x^2)^q in
/// a^[q] + J, q = p^e.
inline std::vector<std::array<std::uint32_t, 3>> fermat3_chain_member(std::uint32_t p,
                                                                     std::uint32_t e) {
  const std::uint64_t q = power_of(p, e);
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t c0 = 0; c0 < p; ++c0) {
    for (std::uint32_t c1 = 0; c1 < p; ++c1) {
      for (std::uint32_t c2 = 0; c2 < p; ++c2) {
        // coefficients are fixed by Frobenius: r^q = c0 + c1 x^q + c2 x^(2q)
        Sparse3 acc;
        add_fermat_reduced_xpower(acc, c0, 0, p, q);
        add_fermat_reduced_xpower(acc, c1, q, p, q);
        add_fermat_reduced_xpower(acc, c2, 2 * q, p, q);
        bool zero = true;
        for (const auto& [mono, c] : acc) {
          if (c != 0) zero = false;
        }
        if (zero) out.push_back({c0, c1, c2});
      }
    }
  }
  return out;
}

}  // namespace frobq::oracle
