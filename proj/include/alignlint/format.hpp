#pragma once

#include <string>

#include "alignlint/model.hpp"

namespace alignlint {

/// Canonical DSL rendering: statements grouped by kind in declaration
/// order, 2-space indentation, one declaration per line, entity refs always
/// written as full dotted paths. parse(format(m)) resolves back to m, and
/// format is idempotent on its own output.
std::string format(const Model& model);

}  // namespace alignlint
