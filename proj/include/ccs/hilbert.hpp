#pragma once

#include <gmpxx.h>

#include <limits>
#include <vector>

#include "ccs/monomial.hpp"

namespace ccs {

// affine dimension sentinel for the unit ideal / empty scheme: ordered below
// every honest dimension so genericity comparisons stay total
inline constexpr long kDimEmpty = std::numeric_limits<long>::min() / 2;

struct HilbertSeries {
  std::vector<mpz_class> numerator;  // N(T); the series is N(T)/(1-T)^arity
  std::size_t arity = 0;
};

// Hilbert series numerator of the quotient by a monomial ideal, via the
// pivot-variable recursion N(I) = N(I + (x)) + T * N(I : x).
HilbertSeries hilbert_numerator(std::vector<Monomial> lt_gens, std::size_t arity);

struct SchemeMetrics {
  long projective_dimension = -1;  // -1 means empty
  mpz_class degree = 0;            // 0 iff empty
};

// pole order of the series at T=1, i.e. the affine Krull dimension of the
// quotient; kDimEmpty for the unit ideal
long affine_dimension_from_series(const HilbertSeries& hs);

// projective dimension = pole order - 1; degree = reduced numerator at T=1
SchemeMetrics metrics_from_series(const HilbertSeries& hs);

// drop generators that are multiples of others (and duplicates)
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

}  // namespace ccs
