#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace weakore {

enum class ErrorKind {
    NotAssociative,
    UnitFails,
    NotCoassociative,
    CounitFails,
    ZeroDimension,
    DimensionMismatch,
    FieldMismatch,
    NotAlgebraMap,
    NotAutomorphism,
    NotDerivation,
    NotInvertible,
    NotCentral,
    NotGrouplike,
    InvalidGroupCharacter,
    ZeroScale,
    TooLarge,
    ConditionsFailed,
    ParseError,
    ValidationError,
};

const char* to_string(ErrorKind kind);

/// Rejected input: carries the kind and, where meaningful, basis indices witnessing it.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {});

    ErrorKind kind() const { return kind_; }
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    ErrorKind kind_;
    std::vector<std::size_t> witness_;
};

/// An identity the library guarantees by construction failed to hold.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace weakore
