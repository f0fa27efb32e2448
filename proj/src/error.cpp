#include "lrs/error.hpp"

namespace lrs {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::division_by_zero: return "division by zero";
    case ErrorKind::search_cap_exceeded: return "search cap exceeded";
    case ErrorKind::bound_too_small: return "bound too small";
    case ErrorKind::hypothesis_violated: return "hypothesis violated";
    case ErrorKind::coprime_support_class: return "support class coprime to modulus";
    case ErrorKind::precision_exhausted: return "precision exhausted";
    case ErrorKind::no_witness: return "no witness below cap";
    case ErrorKind::not_refuted: return "candidate not refuted";
    case ErrorKind::unsupported: return "unsupported";
    }
    return "error";
}

} // namespace lrs
