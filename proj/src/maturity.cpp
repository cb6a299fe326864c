#include "alignlint/maturity.hpp"

#include <stdexcept>

namespace alignlint {

std::string_view maturity_level_name(MaturityLevel level) {
    switch (level) {
        case MaturityLevel::chaotic: return "chaotic";
        case MaturityLevel::poor: return "poor";
        case MaturityLevel::average: return "average";
        case MaturityLevel::good: return "good";
        case MaturityLevel::very_good: return "very_good";
    }
    return "chaotic";
}

std::optional<MaturityLevel> maturity_level_from_name(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(MaturityLevel::very_good); ++i) {
        const auto level = static_cast<MaturityLevel>(i);
        if (maturity_level_name(level) == name) return level;
    }
    return std::nullopt;
}

std::optional<Ratio> link_ratio(const Assessment& assessment, LayerLink link) {
    Ratio sum{0, 1};
    int assessable = 0;
    for (const MetricDescriptor* d : metrics_for_link(link)) {
        auto it = assessment.results.find(d->id);
        if (it == assessment.results.end()) continue;
        if (auto ratio = it->second.violation_ratio()) {
            sum = sum + *ratio;
            ++assessable;
        }
    }
    if (assessable == 0) return std::nullopt;
    return Ratio{1, 1} - sum / assessable;
}

MaturityLevel maturity_level(double ratio) {
    if (!(ratio >= 0.0 && ratio <= 1.0)) {
        throw std::domain_error("RATIO_RANGE: maturity ratio must lie in [0,1]");
    }
    if (ratio < 0.2) return MaturityLevel::chaotic;
    if (ratio < 0.4) return MaturityLevel::poor;
    if (ratio < 0.6) return MaturityLevel::average;
    if (ratio < 0.8) return MaturityLevel::good;
    return MaturityLevel::very_good;
}

MaturityLevel maturity_level(Ratio ratio) {
    if (ratio < Ratio{0, 1} || ratio > Ratio{1, 1}) {
        throw std::domain_error("RATIO_RANGE: maturity ratio must lie in [0,1]");
    }
    if (ratio < Ratio{1, 5}) return MaturityLevel::chaotic;
    if (ratio < Ratio{2, 5}) return MaturityLevel::poor;
    if (ratio < Ratio{3, 5}) return MaturityLevel::average;
    if (ratio < Ratio{4, 5}) return MaturityLevel::good;
    return MaturityLevel::very_good;
}

MaturityTable maturity_table(const Assessment& assessment) {
    MaturityTable table{};
    for (int i = 0; i < kLayerLinkCount; ++i) {
        const auto link = static_cast<LayerLink>(i);
        LinkMaturity& row = table[static_cast<std::size_t>(i)];
        row.link = link;
        for (const MetricDescriptor* d : metrics_for_link(link)) {
            auto it = assessment.results.find(d->id);
            std::optional<Ratio> ratio;
            if (it != assessment.results.end()) ratio = it->second.violation_ratio();
            row.contributing_metrics.push_back(MetricContribution{d->id, ratio});
        }
        row.ratio = link_ratio(assessment, link);
        if (row.ratio) row.level = maturity_level(*row.ratio);
    }
    return table;
}

}  // namespace alignlint
