#pragma once

#include <stdexcept>
#include <string>

namespace qzx {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A q-deformed quantity was requested with base exponent k = 0.
struct invalid_base_error : error {
    using error::error;
};

/// Division by the zero rational function.
struct divide_by_zero_error : error {
    using error::error;
};

/// Evaluation point is a pole of the reduced rational function.
struct pole_error : error {
    using error::error;
};

/// Two series with different truncation orders were combined.
struct order_mismatch_error : error {
    using error::error;
};

/// Series inversion requires the constant term to be the algebra identity.
struct not_invertible_error : error {
    using error::error;
};

/// Derivation order outside the supported range.
struct invalid_order_error : error {
    using error::error;
};

/// Malformed textual input (polynomial strings, export documents).
struct parse_error : error {
    using error::error;
};

/// Invalid numeric-oracle configuration.
struct config_error : error {
    using error::error;
};

} // namespace qzx
