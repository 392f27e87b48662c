#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobq/sequences.hpp"

namespace frobq {

enum class Tristate { False, True, Indeterminate };

/// A generalized fraction h / (x_1^{n_1}, ..., x_r^{n_r}) over a system of
/// parameters x_1, ..., x_t (r < t), carrying the certificate
/// h * x_{r+1}^c in (x_1^{n_1}, ..., x_r^{n_r}) + J.
class GenFracElem {
 public:
  const Polynomial& numerator() const { return numerator_; }
  const SequenceSpec& sequence() const { return sequence_; }
  std::size_t length() const { return denominators_.size(); }
  const std::vector<std::uint32_t>& denominators() const { return denominators_; }
  /// c above; 1 for elements built by make_elem, q after the T^e action.
  std::uint64_t certificate_exponent() const { return certificate_exponent_; }

 private:
  friend GenFracElem make_elem(const Polynomial&, const SequenceSpec&, std::size_t,
                               std::vector<std::uint32_t>);
  friend GenFracElem t_action(const GenFracElem&, std::uint32_t);

  GenFracElem(Polynomial numerator, SequenceSpec sequence,
              std::vector<std::uint32_t> denominators, std::uint64_t certificate);

  Polynomial numerator_;
  SequenceSpec sequence_;
  std::vector<std::uint32_t> denominators_;
  std::uint64_t certificate_exponent_;
};

/// Builds h / (x_1^{n_1}, ..., x_r^{n_r}); empty n means all ones. Throws
/// InvalidArgument when r >= t or h x_{r+1} is outside
/// (x_1^{n_1}, ..., x_r^{n_r}) + J.
GenFracElem make_elem(const Polynomial& h, const SequenceSpec& x, std::size_t r,
                      std::vector<std::uint32_t> n = {});

/// Zero test in cohomology: after raising all denominator exponents to
/// N = max n_i (and multiplying h by the matching powers), h lies in the
/// limit ideal of x_1^N, ..., x_r^N. For r = 0 this is h in J.
Tristate is_zero_in_cohomology(const GenFracElem& elem);

/// T^e: h -> h^q, n_i -> q n_i, q = p^e.
GenFracElem t_action(const GenFracElem& elem, std::uint32_t e);

enum class HslStatus { Found, NotFound, Indeterminate };

struct HslExponent {
  HslStatus status = HslStatus::NotFound;
  std::uint32_t e = 0;
};

/// Least e <= e_max with T^e(elem) zero in cohomology.
HslExponent hsl_exponent(const GenFracElem& elem, std::uint32_t e_max);

}  // namespace frobq
