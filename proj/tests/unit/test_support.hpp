#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frobq/polynomial.hpp"

namespace frobq::testing {

/// Uniform-ish integer in [0, bound) from a 64-bit engine. Plain modulo keeps
/// the stream identical across standard libraries.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars,
                                std::uint32_t max_degree) {
  Monomial m(nvars);
  std::uint32_t budget = static_cast<std::uint32_t>(draw(rng, max_degree + 1));
  for (std::uint32_t k = 0; k < budget; ++k) {
    std::size_t i = draw(rng, nvars);
    m.set(i, m[i] + 1);
  }
  return m;
}

inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng,
                                    std::size_t max_terms,
                                    std::uint32_t max_degree) {
  std::vector<Term> terms;
  std::size_t count = 1 + draw(rng, max_terms);
  for (std::size_t k = 0; k < count; ++k) {
    auto c = static_cast<std::uint32_t>(draw(rng, ring->characteristic()));
    terms.push_back({c, random_monomial(rng, ring->nvars(), max_degree)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace frobq::testing
