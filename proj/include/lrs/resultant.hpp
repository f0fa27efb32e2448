#pragma once

#include "lrs/poly.hpp"

namespace lrs {

// Res(p, q). Sylvester determinant when both degrees are at most 8,
// subresultant PRS otherwise. Throws invalid_argument on a zero input.
Rational resultant(const Poly& p, const Poly& q);

Rational sylvester_resultant(const Poly& p, const Poly& q);
Rational subresultant_resultant(const Poly& p, const Poly& q);

} // namespace lrs
