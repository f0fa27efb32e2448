#pragma once

#include "json.hpp"

#include "lrs/lambert.hpp"
#include "lrs/zeros.hpp"

namespace lrs {

using Json = nlohmann::json;

// Rationals travel as canonical strings "p" or "p/q"; integers are accepted on input.
Json to_json(const Rational& x);
Json to_json(const Poly& p);
Json to_json(const RationalFunction& f);
Json to_json(const LinearRecurrence& rec);
Json to_json(const GammaSpec& gamma);
Json to_json(const RatioAnalysis& ra);
Json to_json(const ZeroSetDescription& zs);
Json to_json(const DominantGroup& g);
Json to_json(const ProperPowerDecomposition& dec);
Json to_json(const PrimeSquareReport& report);
Json to_json(const PeriodReport& period);
Json to_json(const RefutationCertificate& cert);
Json to_json(const BerlekampMassey& bm);

// All parsers throw Error(parse) on malformed input.
Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
LinearRecurrence recurrence_from_json(const Json& j);
GammaSpec gamma_from_json(const Json& j);
ZeroSetDescription zero_set_from_json(const Json& j);
ProperPowerDecomposition decomposition_from_json(const Json& j);
PrimeSquareReport prime_square_from_json(const Json& j);
RefutationCertificate certificate_from_json(const Json& j);

} // namespace lrs
