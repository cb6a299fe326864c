#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alignlint/metrics.hpp"
#include "alignlint/ratio.hpp"

namespace alignlint {

/// Five ordered alignment ratings, chaotic lowest.
enum class MaturityLevel { chaotic, poor, average, good, very_good };

std::string_view maturity_level_name(MaturityLevel level);
std::optional<MaturityLevel> maturity_level_from_name(std::string_view name);

/// Per-metric contribution to a link's ratio; `ratio` absent when the
/// metric's population was empty (not assessable).
struct MetricContribution {
    std::string metric;
    std::optional<Ratio> ratio;

    bool operator==(const MetricContribution&) const = default;
};

struct LinkMaturity {
    LayerLink link{};
    std::optional<Ratio> ratio;           // absent iff no metric was assessable
    std::optional<MaturityLevel> level;   // defined iff ratio is
    std::vector<MetricContribution> contributing_metrics;

    bool operator==(const LinkMaturity&) const = default;
};

/// Exactly one row per layer link, in enumeration order.
using MaturityTable = std::array<LinkMaturity, kLayerLinkCount>;

/// 1 minus the arithmetic mean of violation ratios over the link's metrics
/// with nonempty populations; not assessable when every such population is
/// empty.
std::optional<Ratio> link_ratio(const Assessment& assessment, LayerLink link);

/// Equal-width quintiles, left-closed: chaotic [0,0.2), poor [0.2,0.4),
/// average [0.4,0.6), good [0.6,0.8), very_good [0.8,1]. Throws
/// std::domain_error ("RATIO_RANGE") outside [0,1].
MaturityLevel maturity_level(double ratio);
MaturityLevel maturity_level(Ratio ratio);

MaturityTable maturity_table(const Assessment& assessment);

}  // namespace alignlint
