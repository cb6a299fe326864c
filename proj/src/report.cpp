#include "alignlint/report.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace alignlint {

std::string_view severity_name(Severity s) {
    return s == Severity::error ? "error" : "warning";
}

namespace {

std::string name_list(const std::vector<ElementRef>& refs) {
    std::string out;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        if (i > 0) out += ", ";
        out += refs[i].path_string();
    }
    return out;
}

Finding make_finding(const MetricDescriptor& metric, const Offender& offender) {
    Finding f;
    f.metric = metric.id;
    f.element = offender.element;
    f.severity = metric.origin == MetricOrigin::paper ? Severity::error : Severity::warning;
    f.magnitude = offender.magnitude;

    const std::string path = offender.element.path_string();
    const std::string names = name_list(offender.context);
    if (metric.id == "M1") {
        f.message = fmt::format("activity '{}' is not automated: no application supports it", path);
        f.suggestion = metric.remediation_template;
    } else if (metric.id == "M2") {
        f.message = fmt::format("activity '{}' is supported by {} applications ({})", path,
                                offender.magnitude, names);
        f.suggestion = fmt::format(
            "Consolidate onto one supporting application (candidates: {}); changes then stay "
            "local, data is entered once and users log in once.",
            names);
    } else if (metric.id == "M3") {
        f.message = fmt::format("application '{}' supports activities in {} distinct top-level "
                                "processes ({})",
                                path, offender.magnitude, names);
        f.suggestion = metric.remediation_template;
    } else if (metric.id == "M4") {
        f.message = fmt::format("activity '{}' uses no information entity", path);
        f.suggestion = metric.remediation_template;
    } else if (metric.id == "M5") {
        f.message = fmt::format("information entity '{}' is used by no activity", path);
        f.suggestion = metric.remediation_template;
    } else if (metric.id == "M6") {
        f.message = fmt::format("information entity '{}' is accessed by {} applications ({})",
                                path, offender.magnitude, names);
        f.suggestion = fmt::format(
            "Give the entity a single owning application (current accessors: {}); fewer "
            "accessors reduce the need for distributed transactions across applications.",
            names);
    } else if (metric.id == "M7") {
        f.message = fmt::format("attribute '{}' is marked redundant", path);
        f.suggestion = metric.remediation_template;
    } else if (metric.id == "M8") {
        f.message = fmt::format("attribute '{}' is confidential but not secure", path);
        f.suggestion = metric.remediation_template;
    } else if (metric.id == "M9") {
        f.message = fmt::format("application '{}' runs on {} platforms ({})", path,
                                offender.magnitude, names);
        f.suggestion = metric.remediation_template;
    } else if (metric.id == "M10") {
        f.message = fmt::format("platform '{}' hosts no application", path);
        f.suggestion = metric.remediation_template;
    } else {  // M11
        f.message = fmt::format("activity '{}' belongs to a high-criticality process but is "
                                "supported by {} low-quality application(s) ({})",
                                path, offender.magnitude, names);
        f.suggestion = metric.remediation_template;
    }
    return f;
}

void check_fingerprint(const Model& model, const Assessment& assessment) {
    if (model.fingerprint != assessment.model_fingerprint) {
        throw std::invalid_argument(
            "FINGERPRINT_MISMATCH: assessment was not computed from this model");
    }
}

void sort_findings(std::vector<Finding>& out) {
    std::sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
        const MetricDescriptor* da = find_metric(a.metric);
        const MetricDescriptor* db = find_metric(b.metric);
        if (da->link != db->link) return da->link < db->link;
        const int oa = metric_order(a.metric);
        const int ob = metric_order(b.metric);
        if (oa != ob) return oa < ob;
        return a.element.path < b.element.path;
    });
}

}  // namespace

std::vector<Finding> findings(const Model& model, const Assessment& assessment) {
    check_fingerprint(model, assessment);
    std::vector<Finding> out;
    for (const MetricDescriptor& metric : list_metrics()) {
        auto it = assessment.results.find(metric.id);
        if (it == assessment.results.end()) continue;
        for (const Offender& offender : it->second.offenders) {
            out.push_back(make_finding(metric, offender));
        }
    }
    sort_findings(out);
    return out;
}

Report build_report(const Model& model, const Assessment& assessment,
                    const std::vector<std::string>& metric_filter) {
    Report report;
    report.model_fingerprint = model.fingerprint;
    report.maturity = maturity_table(assessment);

    auto selected = [&](const std::string& id) {
        return metric_filter.empty() ||
               std::find(metric_filter.begin(), metric_filter.end(), id) != metric_filter.end();
    };

    for (Finding& f : findings(model, assessment)) {
        if (!selected(f.metric)) continue;
        report.findings.push_back(std::move(f));
    }
    for (const MetricDescriptor& metric : list_metrics()) {
        if (selected(metric.id)) report.summary.by_metric[metric.id] = 0;
    }
    for (const Finding& f : report.findings) {
        ++report.summary.by_metric[f.metric];
        if (f.severity == Severity::error) {
            ++report.summary.errors;
        } else {
            ++report.summary.warnings;
        }
    }
    return report;
}

std::string render_text(const Report& report) {
    std::string out = "Maturity\n";
    for (const LinkMaturity& row : report.maturity) {
        const std::string ratio =
            row.ratio ? fmt::format("{:.3f}", row.ratio->to_double()) : "n/a";
        const std::string level =
            row.level ? std::string(maturity_level_name(*row.level)) : "n/a";
        out += fmt::format("  {:<23}  {:>5}  {}\n", layer_link_name(row.link), ratio, level);
    }
    out += "\nFindings\n";
    for (const Finding& f : report.findings) {
        std::string severity(severity_name(f.severity));
        std::transform(severity.begin(), severity.end(), severity.begin(),
                       [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        out += fmt::format("  {} {} {}: {} | {}\n", severity, f.metric,
                           f.element.path_string(), f.message, f.suggestion);
    }
    out += "\nSummary\n";
    out += fmt::format("  errors: {}, warnings: {}\n", report.summary.errors,
                       report.summary.warnings);
    std::string per_metric;
    for (const MetricDescriptor& metric : list_metrics()) {
        auto it = report.summary.by_metric.find(metric.id);
        if (it == report.summary.by_metric.end()) continue;
        if (!per_metric.empty()) per_metric += ", ";
        per_metric += fmt::format("{}: {}", metric.id, it->second);
    }
    out += fmt::format("  {}\n", per_metric);
    return out;
}

namespace {

using nlohmann::json;

json ratio_to_json(const std::optional<Ratio>& ratio) {
    if (!ratio) return nullptr;
    return json{{"num", ratio->num}, {"den", ratio->den}};
}

std::optional<std::optional<Ratio>> ratio_from_json(const json& v) {
    if (v.is_null()) return std::optional<Ratio>{};
    if (!v.is_object() || !v.contains("num") || !v.contains("den")) return std::nullopt;
    if (!v["num"].is_number_integer() || !v["den"].is_number_integer()) return std::nullopt;
    return std::optional<Ratio>{Ratio{v["num"].get<std::int64_t>(), v["den"].get<std::int64_t>()}};
}

std::vector<std::string> split_path(const std::string& text) {
    std::vector<std::string> path;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = text.find('.', start);
        path.push_back(dot == std::string::npos ? text.substr(start)
                                                : text.substr(start, dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return path;
}

std::optional<ElementKind> kind_from_name(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(ElementKind::technology); ++i) {
        const auto kind = static_cast<ElementKind>(i);
        if (kind_name(kind) == name) return kind;
    }
    return std::nullopt;
}

}  // namespace

std::string render_interchange(const Report& report) {
    json doc;
    doc["schema_version"] = 1;
    doc["model_fingerprint"] = fingerprint_string(report.model_fingerprint);

    json maturity = json::array();
    for (const LinkMaturity& row : report.maturity) {
        json contributing = json::array();
        for (const MetricContribution& c : row.contributing_metrics) {
            contributing.push_back(json{{"metric", c.metric}, {"ratio", ratio_to_json(c.ratio)}});
        }
        maturity.push_back(
            json{{"link", std::string(layer_link_name(row.link))},
                 {"ratio", ratio_to_json(row.ratio)},
                 {"level", row.level ? json(std::string(maturity_level_name(*row.level))) : json()},
                 {"contributing", std::move(contributing)}});
    }
    doc["maturity"] = std::move(maturity);

    json findings_json = json::array();
    for (const Finding& f : report.findings) {
        findings_json.push_back(json{{"metric", f.metric},
                                     {"element", json{{"kind", std::string(kind_name(f.element.kind))},
                                                      {"path", f.element.path_string()}}},
                                     {"severity", std::string(severity_name(f.severity))},
                                     {"message", f.message},
                                     {"suggestion", f.suggestion},
                                     {"magnitude", f.magnitude}});
    }
    doc["findings"] = std::move(findings_json);

    json by_metric = json::object();
    for (const auto& [id, count] : report.summary.by_metric) by_metric[id] = count;
    doc["summary"] = json{{"by_metric", std::move(by_metric)},
                          {"errors", report.summary.errors},
                          {"warnings", report.summary.warnings}};
    return doc.dump(2) + "\n";
}

std::optional<Report> report_from_interchange(const std::string& text) {
    const json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    if (!doc.contains("schema_version") || doc["schema_version"] != 1) return std::nullopt;
    if (!doc.contains("model_fingerprint") || !doc["model_fingerprint"].is_string()) {
        return std::nullopt;
    }

    Report report;
    const std::string fp = doc["model_fingerprint"].get<std::string>();
    auto [ptr, ec] = std::from_chars(fp.data(), fp.data() + fp.size(), report.model_fingerprint, 16);
    if (ec != std::errc{} || ptr != fp.data() + fp.size()) return std::nullopt;

    if (!doc.contains("maturity") || !doc["maturity"].is_array() ||
        doc["maturity"].size() != static_cast<std::size_t>(kLayerLinkCount)) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < report.maturity.size(); ++i) {
        const json& row = doc["maturity"][i];
        if (!row.is_object() || !row.contains("link") || !row["link"].is_string()) {
            return std::nullopt;
        }
        auto link = layer_link_from_name(row["link"].get<std::string>());
        if (!link) return std::nullopt;
        LinkMaturity& out = report.maturity[i];
        out.link = *link;
        auto ratio = ratio_from_json(row.contains("ratio") ? row["ratio"] : json());
        if (!ratio) return std::nullopt;
        out.ratio = *ratio;
        if (row.contains("level") && row["level"].is_string()) {
            out.level = maturity_level_from_name(row["level"].get<std::string>());
            if (!out.level) return std::nullopt;
        }
        if (!row.contains("contributing") || !row["contributing"].is_array()) return std::nullopt;
        for (const json& c : row["contributing"]) {
            if (!c.is_object() || !c.contains("metric") || !c["metric"].is_string()) {
                return std::nullopt;
            }
            auto c_ratio = ratio_from_json(c.contains("ratio") ? c["ratio"] : json());
            if (!c_ratio) return std::nullopt;
            out.contributing_metrics.push_back(
                MetricContribution{c["metric"].get<std::string>(), *c_ratio});
        }
    }

    if (!doc.contains("findings") || !doc["findings"].is_array()) return std::nullopt;
    for (const json& f : doc["findings"]) {
        if (!f.is_object()) return std::nullopt;
        for (const char* key : {"metric", "message", "suggestion", "severity"}) {
            if (!f.contains(key) || !f[key].is_string()) return std::nullopt;
        }
        if (!f.contains("magnitude") || !f["magnitude"].is_number_integer()) return std::nullopt;
        if (!f.contains("element") || !f["element"].is_object()) return std::nullopt;
        const json& element = f["element"];
        if (!element.contains("kind") || !element["kind"].is_string() ||
            !element.contains("path") || !element["path"].is_string()) {
            return std::nullopt;
        }
        auto kind = kind_from_name(element["kind"].get<std::string>());
        if (!kind) return std::nullopt;
        Finding finding;
        finding.metric = f["metric"].get<std::string>();
        finding.element = ElementRef{*kind, split_path(element["path"].get<std::string>())};
        finding.severity =
            f["severity"].get<std::string>() == "error" ? Severity::error : Severity::warning;
        finding.message = f["message"].get<std::string>();
        finding.suggestion = f["suggestion"].get<std::string>();
        finding.magnitude = f["magnitude"].get<int>();
        report.findings.push_back(std::move(finding));
    }

    if (!doc.contains("summary") || !doc["summary"].is_object()) return std::nullopt;
    const json& summary = doc["summary"];
    if (!summary.contains("by_metric") || !summary["by_metric"].is_object() ||
        !summary.contains("errors") || !summary["errors"].is_number_integer() ||
        !summary.contains("warnings") || !summary["warnings"].is_number_integer()) {
        return std::nullopt;
    }
    for (auto it = summary["by_metric"].begin(); it != summary["by_metric"].end(); ++it) {
        if (!it.value().is_number_integer()) return std::nullopt;
        report.summary.by_metric[it.key()] = it.value().get<int>();
    }
    report.summary.errors = summary["errors"].get<int>();
    report.summary.warnings = summary["warnings"].get<int>();
    return report;
}

}  // namespace alignlint
