#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alignlint/model.hpp"

namespace alignlint {

/// 1-based line/column position counting text characters (UTF-8 code
/// points), not bytes.
struct SourcePos {
    int line = 1;
    int column = 1;

    bool operator==(const SourcePos&) const = default;
};

/// Unresolved textual reference: one or two dot-separated segments as
/// written in the source. Positions are absent for models decoded from the
/// interchange format.
struct RawRef {
    std::vector<std::string> path;
    std::optional<SourcePos> pos;
};

struct RawActivity {
    std::string id;
    std::optional<SourcePos> pos;
    std::vector<RawRef> supported_by;
    std::vector<RawRef> uses;
};

struct RawProcessNode;

struct RawProcess {
    std::string id;
    std::optional<SourcePos> pos;
    Criticality criticality = Criticality::medium;
    std::vector<RawProcessNode> children;
};

struct RawProcessNode {
    std::variant<RawProcess, RawActivity> value;
};

struct RawQualityEntry {
    QualityFactor factor{};
    double score = 0.0;
    std::optional<SourcePos> pos;
};

struct RawFunctionality {
    std::string id;
    std::optional<SourcePos> pos;
};

struct RawApplication {
    std::string id;
    std::optional<SourcePos> pos;
    std::vector<RawFunctionality> functionalities;
    std::vector<RawQualityEntry> quality;
    std::vector<RawRef> runs_on;
    std::vector<RawRef> accesses;
};

struct RawAttribute {
    std::string id;
    std::optional<SourcePos> pos;
    std::vector<AttributeQualifier> qualifiers;  // as written, duplicates kept
};

struct RawEntity {
    std::string id;
    std::optional<SourcePos> pos;
    std::vector<RawAttribute> attributes;
};

struct RawDataSource {
    std::string id;
    std::optional<SourcePos> pos;
    std::vector<RawEntity> entities;
};

struct RawPlatform {
    std::string id;
    std::optional<SourcePos> pos;
};

/// Syntactically well-formed parse product. Declaration order is preserved
/// within each kind; semantic checks happen in resolve().
struct RawModel {
    std::vector<RawProcess> processes;
    std::vector<RawApplication> applications;
    std::vector<RawDataSource> data_sources;
    std::vector<RawPlatform> operating_systems;
    std::vector<RawPlatform> technologies;
};

}  // namespace alignlint
