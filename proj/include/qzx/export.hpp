#pragma once

#include <string>

#include "qzx/disentangler.hpp"

namespace qzx {

inline constexpr const char* kToolName = "qzx";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

/// Non-mathematical metadata attached to an exported document.
struct Provenance {
    std::string generated_at; // ISO-8601 UTC, empty allowed
    std::string config;       // the command/config that produced the document
};

Provenance make_provenance(std::string config);

/// Versioned machine-readable document ("qzx-format-version": 1). Words are
/// serialized as strings over {A,B} and every coefficient as two canonical
/// polynomial strings, so parse(serialize(f)) == f exactly.
std::string serialize_factorization(const Factorization& f, const Provenance& prov);

/// Inverse of serialize_factorization; validates the format version and the
/// canonicality of every coefficient. Throws parse_error on malformed input.
Factorization parse_factorization(const std::string& text);

/// Human-readable rendering with one line per factor.
std::string to_text(const Factorization& f);

/// Deterministic LaTeX rendering of the full factorized identity.
std::string to_latex(const Factorization& f);

} // namespace qzx
