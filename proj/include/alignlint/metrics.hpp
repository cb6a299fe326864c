#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alignlint/model.hpp"
#include "alignlint/ratio.hpp"

namespace alignlint {

/// Relationship classes between adjacent architecture layers; metrics are
/// grouped under the link they assess.
enum class LayerLink {
    business_application,
    business_information,
    application_information,
    application_technology,
};

inline constexpr int kLayerLinkCount = 4;

std::string_view layer_link_name(LayerLink link);
std::optional<LayerLink> layer_link_from_name(std::string_view name);

enum class MetricOrigin { paper, extension };

std::string_view metric_origin_name(MetricOrigin origin);

struct MetricDescriptor {
    std::string id;    // M1..M11
    std::string name;  // short human title
    LayerLink link{};
    MetricOrigin origin = MetricOrigin::extension;
    std::string description;
    std::string remediation_template;
};

/// Analysis policy knobs. Thresholds are explicit constants, overridable
/// from the CLI; they are not part of the model.
struct MetricConfig {
    int m9_runs_on_threshold = 3;      // offender iff |runs_on| >= this (>= 2)
    double m11_quality_threshold = 0.5;  // offender iff mean app quality < this
};

/// One element violating a metric's predicate, with a metric-specific
/// magnitude (e.g. the application count for M2) and supporting context
/// (e.g. the applications themselves).
struct Offender {
    ElementRef element;
    int magnitude = 0;
    std::vector<ElementRef> context;

    bool operator==(const Offender&) const = default;
};

struct MetricResult {
    std::string metric;
    std::size_t population_size = 0;
    std::vector<Offender> offenders;  // sorted by containment path
    std::size_t value = 0;            // always offenders.size()

    /// offenders / population; not assessable when the population is empty.
    std::optional<Ratio> violation_ratio() const {
        if (population_size == 0) return std::nullopt;
        return Ratio{static_cast<std::int64_t>(value), static_cast<std::int64_t>(population_size)};
    }

    bool operator==(const MetricResult&) const = default;
};

/// Full metric sweep over one model. `evaluated_at` is wall-clock metadata
/// and excluded from every deterministic rendering.
struct Assessment {
    std::uint64_t model_fingerprint = 0;
    std::map<std::string, MetricResult> results;  // one entry per registered metric
    std::chrono::system_clock::time_point evaluated_at{};
};

/// The metric registry in its deterministic M1..M11 order. M1 and M2 are
/// the paper-origin metrics; the rest are extensions grounded in the
/// metamodel and labeled as such everywhere they are reported.
const std::vector<MetricDescriptor>& list_metrics();

/// Registry lookup; nullptr for unknown ids.
const MetricDescriptor* find_metric(std::string_view id);

/// Position of a metric in registry order; findings sort by this rather
/// than by id string (so M2 precedes M11).
int metric_order(std::string_view id);

/// Evaluates one registered metric. Throws std::invalid_argument
/// ("UNKNOWN_METRIC") for ids outside the registry.
MetricResult evaluate_metric(const Model& model, std::string_view id,
                             const MetricConfig& config = {});

/// Evaluates every registered metric. Pure function of the model apart
/// from the timestamp.
Assessment evaluate_all(const Model& model, const MetricConfig& config = {});

/// Registry metrics contributing to one layer link, in registry order.
std::vector<const MetricDescriptor*> metrics_for_link(LayerLink link);

}  // namespace alignlint
