#pragma once

#include <string>

#include "alignlint/model.hpp"
#include "alignlint/resolve.hpp"

namespace alignlint {

/// Serializes a model as a JSON document with sorted keys, 2-space indent,
/// newline-terminated. Deterministic: equal models yield identical bytes.
std::string to_interchange(const Model& model);

/// Inverse of to_interchange on its image, fingerprint included. Structural
/// problems surface as E000_MALFORMED_DOCUMENT; semantic problems get the
/// same codes resolve() uses. The stored fingerprint field is informational
/// and recomputed, never trusted.
ResolveResult from_interchange(const std::string& text);

}  // namespace alignlint
