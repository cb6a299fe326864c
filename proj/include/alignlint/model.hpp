#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "alignlint/element.hpp"
#include "alignlint/ratio.hpp"

namespace alignlint {

/// Business-process priority. Weight is a pure function of the level.
enum class Criticality { low, medium, high };

std::string_view criticality_name(Criticality c);
std::optional<Criticality> criticality_from_name(std::string_view name);

/// low -> 1/3, medium -> 2/3, high -> 1.
Ratio criticality_weight(Criticality c);

/// The eleven McCall product quality factors. Closed enumeration; unknown
/// factor names are rejected at parse time.
enum class QualityFactor {
    correctness,
    reliability,
    efficiency,
    integrity,
    usability,
    maintainability,
    testability,
    flexibility,
    portability,
    reusability,
    interoperability,
};

inline constexpr int kQualityFactorCount = 11;

std::string_view quality_factor_name(QualityFactor f);
std::optional<QualityFactor> quality_factor_from_name(std::string_view name);

enum class AttributeQualifier { secure, confidential, redundant };

std::string_view qualifier_name(AttributeQualifier q);
std::optional<AttributeQualifier> qualifier_from_name(std::string_view name);

// --- Business layer ---

struct Activity {
    std::string id;
    std::vector<ElementRef> supported_by;  // applications, declaration order, deduped
    std::vector<ElementRef> uses;          // information entities, declaration order, deduped

    bool operator==(const Activity&) const = default;
};

struct ProcessNode;

struct Process {
    std::string id;
    Criticality criticality = Criticality::medium;
    std::vector<ProcessNode> children;  // activities and subprocesses, declaration order

    bool operator==(const Process&) const = default;
};

struct ProcessNode {
    std::variant<Process, Activity> value;

    bool operator==(const ProcessNode&) const = default;
};

// --- Application layer ---

struct Application {
    std::string id;
    std::vector<std::string> functionalities;
    std::map<QualityFactor, double> quality;  // scores in [0,1]
    std::vector<ElementRef> runs_on;          // operating systems / technologies
    std::vector<ElementRef> accesses;         // information entities

    bool operator==(const Application&) const = default;
};

// --- Information layer ---

struct Attribute {
    std::string id;
    std::vector<AttributeQualifier> qualifiers;  // set semantics, kept in enum order

    bool operator==(const Attribute&) const = default;
    bool has_qualifier(AttributeQualifier q) const;
};

struct InformationEntity {
    std::string id;
    std::vector<Attribute> attributes;

    bool operator==(const InformationEntity&) const = default;
};

struct DataSource {
    std::string id;
    std::vector<InformationEntity> entities;

    bool operator==(const DataSource&) const = default;
};

// --- Technology layer ---

struct OperatingSystem {
    std::string id;

    bool operator==(const OperatingSystem&) const = default;
};

struct Technology {
    std::string id;

    bool operator==(const Technology&) const = default;
};

/// Resolved, validated architecture model. Immutable after construction
/// (resolve() is the only producer); every stored ElementRef resolves and
/// all ids are globally unique. Safe for unlimited concurrent readers.
struct Model {
    std::vector<Process> processes;
    std::vector<Application> applications;
    std::vector<DataSource> data_sources;
    std::vector<OperatingSystem> operating_systems;
    std::vector<Technology> technologies;

    /// Content hash of the canonical serialization; equal models hash equal.
    std::uint64_t fingerprint = 0;

    bool operator==(const Model&) const = default;
};

/// Fingerprint rendered as 16 hex digits, the form used in reports.
std::string fingerprint_string(std::uint64_t fingerprint);

/// Recomputes the structural content hash (positions and timestamps never
/// enter it). resolve() stores this on the Model it returns.
std::uint64_t compute_fingerprint(const Model& model);

/// One leaf activity paired with its innermost owning process.
struct LeafActivity {
    ElementRef process;        // kind process, full containment path
    ElementRef ref;            // kind activity, full containment path
    const Activity* activity;  // borrowed from the model
    Criticality owner_criticality;
};

/// Every activity reachable through process nesting, depth-first in
/// declaration order.
std::vector<LeafActivity> leaf_activities(const Model& model);

/// Non-owning view of one element inside a Model.
using ElementView = std::variant<const Process*, const Activity*, const Application*,
                                 const std::string*,  // functionality (bare id)
                                 const DataSource*, const InformationEntity*, const Attribute*,
                                 const OperatingSystem*, const Technology*>;

/// Resolves a ref against the model. Accepts full containment paths and,
/// since ids are globally unique, unambiguous suffixes (a bare entity name
/// for example). Returns nullopt when the path or kind does not match.
std::optional<ElementView> lookup(const Model& model, const ElementRef& ref);

}  // namespace alignlint
