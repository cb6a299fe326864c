#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace alignlint {

/// Element categories of the four-layer metamodel. Values mirror the
/// modeling vocabulary: business layer (process, activity), application
/// layer (application, functionality), information layer (data_source,
/// information_entity, attribute), technology layer (operating_system,
/// technology).
enum class ElementKind {
    process,
    activity,
    application,
    functionality,
    data_source,
    information_entity,
    attribute,
    operating_system,
    technology,
};

std::string_view kind_name(ElementKind kind);

/// Identifier token: letters, digits, underscore; must start with a letter.
/// Ids live in one global, case-sensitive namespace per model.
bool is_valid_element_id(std::string_view id);

/// Address of one element: its kind plus the containment path, outermost
/// first. Top-level elements have a single-segment path; an attribute path
/// is [data_source, entity, attribute].
struct ElementRef {
    ElementKind kind{};
    std::vector<std::string> path;

    bool operator==(const ElementRef&) const = default;

    // Ordering is by path only; kinds never collide because ids are
    // globally unique.
    bool operator<(const ElementRef& other) const { return path < other.path; }

    /// Path joined with '.', e.g. "DataCapture.Scanning".
    std::string path_string() const;

    /// Path joined with "__", the node-id convention of the DOT output.
    std::string node_id() const;
};

}  // namespace alignlint
