#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "crmostow/exact.hpp"

namespace crmostow {

/// Coefficients lowest degree first; the zero polynomial is empty.
using Poly = std::vector<ExactScalar>;
using RatPoly = std::vector<Rational>;

void trim(Poly& p);
Poly poly_derivative(const Poly& p);
/// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Monic gcd (empty when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);
ExactMatrix poly_eval(const Poly& p, const ExactMatrix& x);

/// Monic minimal polynomial via Krylov dependence of I, x, x^2, ...
Poly minimal_polynomial(const ExactMatrix& x);
/// Characteristic polynomial det(tI - x) via Hessenberg reduction.
Poly characteristic_polynomial(const ExactMatrix& x);
/// Real part of a polynomial whose coefficients are all real; throws otherwise.
RatPoly real_coefficients(const Poly& p);

struct SignCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Root sign counts of a real-rooted polynomial by Descartes' rule (exact for
/// characteristic polynomials of Hermitian matrices).
SignCounts descartes_counts(const RatPoly& p);

/// All roots with multiplicity, each exactly rational; throws
/// IrrationalWeights when some root is not rational.
std::vector<Rational> rational_roots(const RatPoly& p);

}  // namespace crmostow
