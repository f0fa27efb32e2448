#pragma once

#include <cstdint>

#include "lrs/poly.hpp"

namespace lrs {

// The d-th cyclotomic polynomial. Memoized per process; safe to call concurrently.
const Poly& cyclotomic(std::uint64_t d);

} // namespace lrs
