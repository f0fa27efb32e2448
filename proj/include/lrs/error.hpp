#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrs {

enum class ErrorKind {
    invalid_argument,
    parse,
    division_by_zero,
    search_cap_exceeded,
    bound_too_small,
    hypothesis_violated,
    coprime_support_class,
    precision_exhausted,
    no_witness,
    not_refuted,
    unsupported,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library. `witness` carries the offending
// value (a prime, a residue class, an input offset) when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::string witness = {})
        : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::string witness_;
};

} // namespace lrs
