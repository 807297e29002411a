#pragma once

#include <vector>

#include "fareylab/rational.hpp"

namespace fareylab {

/// Finite regular continued fraction word [x1,...,xk], all digits >= 1.
/// Canonical form: xk >= 2 whenever k >= 2; the value 1 is exactly [1].
struct ContinuedFraction {
  std::vector<mpz_class> digits;

  bool valid() const;
  bool canonical() const;
  mpz_class digit_sum() const;
};

// Folds a trailing [..., a, 1] into [..., a+1]; identity on canonical words.
ContinuedFraction cf_normalize(ContinuedFraction w);

// Euclidean expansion of r in (0,1]; result is canonical.
// Throws std::domain_error for r outside (0,1].
ContinuedFraction cf_encode(const Rational& r);

// Exact value of a word; inverse of cf_encode on canonical words.
// Throws std::invalid_argument on empty words or digits < 1.
Rational cf_decode(const ContinuedFraction& w);

}  // namespace fareylab
