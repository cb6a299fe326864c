// align-lint: strategic-alignment linter for layered architecture models.
//
// Exit codes: 0 clean, 1 strict-mode findings (or fmt --check difference),
// 2 validation or usage errors, 3 I/O failures. Diagnostics go to stderr,
// reports to stdout; identical invocations produce identical bytes.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "alignlint/format.hpp"
#include "alignlint/interchange.hpp"
#include "alignlint/metrics.hpp"
#include "alignlint/parser.hpp"
#include "alignlint/report.hpp"
#include "alignlint/resolve.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return buffer.str();
}

void print_parse_errors(const std::string& path, const std::vector<alignlint::ParseError>& errors) {
    for (const auto& e : errors) {
        fmt::print(stderr, "{}:{}:{}: error: expected {}, found '{}'\n", path, e.pos.line,
                   e.pos.column, e.expected, e.found);
    }
}

void print_issues(const std::string& path, const std::vector<alignlint::ValidationIssue>& issues) {
    for (const auto& issue : issues) {
        const auto severity = alignlint::severity_name(issue.severity);
        if (issue.pos) {
            fmt::print(stderr, "{}:{}:{}: {}[{}]: {}\n", path, issue.pos->line, issue.pos->column,
                       severity, issue.code, issue.message);
        } else if (!issue.location.empty()) {
            fmt::print(stderr, "{}: {}[{}]: {} (at {})\n", path, severity, issue.code,
                       issue.message, issue.location);
        } else {
            fmt::print(stderr, "{}: {}[{}]: {}\n", path, severity, issue.code, issue.message);
        }
    }
}

// Parses and resolves, printing every diagnostic. Returns the model only
// when no error-severity issue exists; `exit_code` carries the verdict.
std::optional<alignlint::Model> load_model(const std::string& path, int& exit_code) {
    const auto text = read_file(path);
    if (!text) {
        fmt::print(stderr, "error: cannot read '{}'\n", path);
        exit_code = kExitIo;
        return std::nullopt;
    }
    auto parsed = alignlint::parse(*text);
    if (!parsed.ok()) {
        print_parse_errors(path, parsed.errors);
        exit_code = kExitValidation;
        return std::nullopt;
    }
    auto resolved = alignlint::resolve(*parsed.model);
    print_issues(path, resolved.issues);
    if (!resolved.ok()) {
        exit_code = kExitValidation;
        return std::nullopt;
    }
    exit_code = kExitClean;
    return std::move(resolved.model);
}

int cmd_validate(const std::string& path) {
    int exit_code = kExitClean;
    load_model(path, exit_code);
    return exit_code;
}

struct AssessOptions {
    std::string input;
    std::string format = "text";
    std::string dot_path;
    bool strict = false;
    std::vector<std::string> metrics;
    alignlint::MetricConfig config;
};

int cmd_assess(const AssessOptions& options) {
    for (const std::string& id : options.metrics) {
        if (alignlint::find_metric(id) == nullptr) {
            fmt::print(stderr, "error: unknown metric '{}' in --metrics\n", id);
            return kExitValidation;
        }
    }
    int exit_code = kExitClean;
    auto model = load_model(options.input, exit_code);
    if (!model) return exit_code;

    const auto assessment = alignlint::evaluate_all(*model, options.config);
    const auto report = alignlint::build_report(*model, assessment, options.metrics);

    if (options.format == "interchange") {
        fmt::print(stdout, "{}", alignlint::render_interchange(report));
    } else {
        fmt::print(stdout, "{}", alignlint::render_text(report));
    }

    if (!options.dot_path.empty()) {
        std::ofstream out(options.dot_path, std::ios::binary);
        if (!out) {
            fmt::print(stderr, "error: cannot write '{}'\n", options.dot_path);
            return kExitIo;
        }
        out << alignlint::render_dot(*model, report);
        if (!out.good()) {
            fmt::print(stderr, "error: cannot write '{}'\n", options.dot_path);
            return kExitIo;
        }
    }

    if (options.strict && !report.findings.empty()) return kExitFindings;
    return kExitClean;
}

int cmd_explain(const std::string& id) {
    const alignlint::MetricDescriptor* metric = alignlint::find_metric(id);
    if (metric == nullptr) {
        fmt::print(stderr, "error: unknown metric '{}'\n", id);
        return kExitValidation;
    }
    fmt::print(stdout, "{}: {}\n", metric->id, metric->name);
    fmt::print(stdout, "  link: {}\n", alignlint::layer_link_name(metric->link));
    fmt::print(stdout, "  origin: {}\n", alignlint::metric_origin_name(metric->origin));
    fmt::print(stdout, "  description: {}\n", metric->description);
    fmt::print(stdout, "  remediation: {}\n", metric->remediation_template);
    return kExitClean;
}

int cmd_fmt(const std::string& path, bool check) {
    const auto text = read_file(path);
    if (!text) {
        fmt::print(stderr, "error: cannot read '{}'\n", path);
        return kExitIo;
    }
    auto parsed = alignlint::parse(*text);
    if (!parsed.ok()) {
        print_parse_errors(path, parsed.errors);
        return kExitValidation;
    }
    auto resolved = alignlint::resolve(*parsed.model);
    if (!resolved.ok()) {
        print_issues(path, resolved.issues);
        return kExitValidation;
    }
    const std::string canonical = alignlint::format(*resolved.model);
    if (check) {
        if (canonical != *text) {
            fmt::print(stderr, "{}: not in canonical form\n", path);
            return kExitFindings;
        }
        return kExitClean;
    }
    fmt::print(stdout, "{}", canonical);
    return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"align-lint: strategic-alignment analysis of architecture models"};
    app.require_subcommand(1);

    std::string validate_input;
    CLI::App* validate =
        app.add_subcommand("validate", "Parse and validate a model, printing every issue");
    validate->add_option("input", validate_input, "model file")->required();

    AssessOptions assess_options;
    CLI::App* assess =
        app.add_subcommand("assess", "Evaluate metrics, maturity and findings for a model");
    assess->add_option("input", assess_options.input, "model file")->required();
    assess->add_option("--format", assess_options.format, "report format")
        ->check(CLI::IsMember({"text", "interchange"}));
    assess->add_option("--dot", assess_options.dot_path,
                       "write a DOT graph with findings highlighted to this path");
    assess->add_flag("--strict", assess_options.strict, "exit 1 when any finding exists");
    assess->add_option("--metrics", assess_options.metrics, "only report these metric ids")
        ->delimiter(',');
    assess
        ->add_option("--m9-threshold", assess_options.config.m9_runs_on_threshold,
                     "M9 offender threshold for |runs_on|")
        ->check(CLI::Range(2, 1000000));
    assess
        ->add_option("--m11-threshold", assess_options.config.m11_quality_threshold,
                     "M11 mean-quality threshold")
        ->check(CLI::Range(0.0, 1.0));

    std::string explain_id;
    CLI::App* explain = app.add_subcommand("explain", "Describe a registered metric");
    explain->add_option("metric", explain_id, "metric id, e.g. M2")->required();

    std::string fmt_input;
    bool fmt_check = false;
    CLI::App* fmt_cmd = app.add_subcommand("fmt", "Print the canonical form of a model");
    fmt_cmd->add_option("input", fmt_input, "model file")->required();
    fmt_cmd->add_flag("--check", fmt_check, "exit 1 if the input is not canonical");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitClean : kExitValidation;
    }

    if (validate->parsed()) return cmd_validate(validate_input);
    if (assess->parsed()) return cmd_assess(assess_options);
    if (explain->parsed()) return cmd_explain(explain_id);
    if (fmt_cmd->parsed()) return cmd_fmt(fmt_input, fmt_check);
    return kExitClean;
}
