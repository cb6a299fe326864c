#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alignlint/maturity.hpp"
#include "alignlint/metrics.hpp"
#include "alignlint/model.hpp"
#include "alignlint/validation.hpp"

namespace alignlint {

/// One element-level diagnostic. Paper-origin metrics report errors,
/// extension metrics warnings; message and suggestion are template-built
/// from (metric, element, magnitude, context) so goldens stay stable.
struct Finding {
    std::string metric;
    ElementRef element;
    Severity severity = Severity::warning;
    std::string message;
    std::string suggestion;
    int magnitude = 0;

    bool operator==(const Finding&) const = default;
};

struct Summary {
    std::map<std::string, int> by_metric;  // every reported metric, zeros included
    int errors = 0;
    int warnings = 0;

    bool operator==(const Summary&) const = default;
};

struct Report {
    std::uint64_t model_fingerprint = 0;
    MaturityTable maturity{};
    std::vector<Finding> findings;  // sorted by (link, metric order, element path)
    Summary summary;

    bool operator==(const Report&) const = default;
};

/// One Finding per Offender across all metrics in the assessment. Throws
/// std::invalid_argument ("FINGERPRINT_MISMATCH") when the assessment was
/// not computed from this model.
std::vector<Finding> findings(const Model& model, const Assessment& assessment);

/// Assembles maturity table, findings and summary. `metric_filter`, when
/// given, restricts findings and summary to the listed metric ids; the
/// maturity table always reflects the full assessment.
Report build_report(const Model& model, const Assessment& assessment,
                    const std::vector<std::string>& metric_filter = {});

/// Plain-text rendering: maturity table (link, ratio to 3 decimals or
/// "n/a", level), findings one per line, then the summary. Deterministic,
/// newline-terminated.
std::string render_text(const Report& report);

/// JSON rendering with sorted keys and a schema_version field; the schema
/// is documented in docs/formats.md.
std::string render_interchange(const Report& report);

/// Re-parses a render_interchange document. Returns nullopt on malformed
/// input; round-trips structurally.
std::optional<Report> report_from_interchange(const std::string& text);

/// DOT source: one node per element with a kind-specific shape, processes
/// as clusters, layer links as labeled edges. Every element named in a
/// finding is filled red; nothing else is. Node ids are containment paths
/// joined by "__". Throws on fingerprint mismatch like findings().
std::string render_dot(const Model& model, const Report& report);

}  // namespace alignlint
