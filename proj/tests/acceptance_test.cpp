// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exit status is
// the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "alignlint/format.hpp"
#include "alignlint/interchange.hpp"
#include "alignlint/maturity.hpp"
#include "alignlint/metrics.hpp"
#include "alignlint/parser.hpp"
#include "alignlint/report.hpp"
#include "alignlint/resolve.hpp"
#include "support/dot_checker.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"
#include "support/proc.hpp"

using namespace alignlint;

#define CHECK_OR_FAIL(cond, what)                                  \
    do {                                                           \
        if (!(cond)) {                                             \
            std::fprintf(stderr, "  check failed: %s\n", (what)); \
            return false;                                          \
        }                                                          \
    } while (0)

namespace {

std::string golden(const std::string& name) {
    return fixtures::read_file(fixtures::source_dir() + "/tests/golden/" + name);
}

// Criterion 1: assessing the shipped fixture reproduces exactly the two
// paper-metric findings, matches the committed golden reports byte for
// byte, and finishes in under 100 ms.
bool criterion_1() {
    const std::string text = fixtures::data_capture_text();

    const auto started = std::chrono::steady_clock::now();
    auto parsed = parse(text);
    CHECK_OR_FAIL(parsed.ok(), "fixture parses");
    auto resolved = resolve(*parsed.model);
    CHECK_OR_FAIL(resolved.ok(), "fixture resolves");
    const Model& model = *resolved.model;
    const auto assessment = evaluate_all(model);
    const auto report = build_report(model, assessment);
    const std::string rendered_text = render_text(report);
    const std::string rendered_doc = render_interchange(report);
    const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();

    CHECK_OR_FAIL(elapsed < 100000, "assessment completes in under 100 ms");
    CHECK_OR_FAIL(rendered_text == golden("data_capture_report.txt"),
                  "text report equals the committed golden");
    CHECK_OR_FAIL(rendered_doc == golden("data_capture_report.json"),
                  "interchange report equals the committed golden");

    std::vector<Finding> paper_findings;
    for (const auto& f : report.findings) {
        if (find_metric(f.metric)->origin == MetricOrigin::paper) paper_findings.push_back(f);
    }
    CHECK_OR_FAIL(paper_findings.size() == 2, "exactly two paper-metric findings");
    CHECK_OR_FAIL(paper_findings[0].metric == "M1", "first paper finding is M1");
    CHECK_OR_FAIL(paper_findings[0].element.path ==
                      (std::vector<std::string>{"DataCapture", "ReceivingOfQuestionnaires"}),
                  "M1 flags ReceivingOfQuestionnaires");
    CHECK_OR_FAIL(paper_findings[1].metric == "M2", "second paper finding is M2");
    CHECK_OR_FAIL(paper_findings[1].element.path ==
                      (std::vector<std::string>{"DataCapture", "Scanning"}),
                  "M2 flags Scanning");
    CHECK_OR_FAIL(paper_findings[1].magnitude == 3, "M2 magnitude is 3");

    const auto& m2 = assessment.results.at("M2");
    CHECK_OR_FAIL(m2.offenders.size() == 1, "one M2 offender");
    const auto& context = m2.offenders[0].context;
    CHECK_OR_FAIL(context.size() == 3 && context[0].path_string() == "DigiScan" &&
                      context[1].path_string() == "DigiOcr" &&
                      context[2].path_string() == "DigiLad",
                  "M2 context is DigiScan, DigiOcr, DigiLad");
    return true;
}

// Criterion 2: for >= 1000 generated models every metric value equals the
// independent brute-force recount.
bool criterion_2() {
    std::mt19937 rng(6001);
    for (int i = 0; i < 1000; ++i) {
        const auto generated = gen::random_model(rng);
        for (const auto& d : list_metrics()) {
            const auto result = evaluate_metric(generated.model, d.id);
            const auto expected = oracle::recount(generated.model, d.id);
            CHECK_OR_FAIL(result.population_size == expected.population,
                          "population matches the oracle");
            CHECK_OR_FAIL(result.value == expected.offenders.size(),
                          "value matches the oracle recount");
            CHECK_OR_FAIL(oracle::offender_paths(result) == expected.offenders,
                          "offender sets match the oracle");
        }
    }
    return true;
}

// Criterion 3: for >= 500 generated models both round-trips preserve the
// fingerprint.
bool criterion_3() {
    std::mt19937 rng(6002);
    for (int i = 0; i < 500; ++i) {
        const auto generated = gen::random_model(rng);
        const Model& model = generated.model;

        auto reparsed = parse(format(model));
        CHECK_OR_FAIL(reparsed.ok(), "canonical text reparses");
        auto re_resolved = resolve(*reparsed.model);
        CHECK_OR_FAIL(re_resolved.ok(), "canonical text re-resolves");
        CHECK_OR_FAIL(re_resolved.model->fingerprint == model.fingerprint,
                      "DSL round-trip preserves the fingerprint");

        auto from_doc = from_interchange(to_interchange(model));
        CHECK_OR_FAIL(from_doc.ok(), "interchange document decodes");
        CHECK_OR_FAIL(from_doc.model->fingerprint == model.fingerprint,
                      "interchange round-trip preserves the fingerprint");
    }
    return true;
}

// Criterion 4: maturity mapping is monotone on a 0.01 grid with changes
// exactly at the quintile boundaries; the fixture ratio is 19/21 within
// 1e-9 and maps to very_good.
bool criterion_4() {
    MaturityLevel previous = maturity_level(0.0);
    for (int i = 1; i <= 100; ++i) {
        const MaturityLevel level = maturity_level(i / 100.0);
        CHECK_OR_FAIL(level >= previous, "maturity level is monotone");
        if (level != previous) {
            CHECK_OR_FAIL(i == 20 || i == 40 || i == 60 || i == 80,
                          "level changes only at 0.2/0.4/0.6/0.8");
        }
        previous = level;
    }
    CHECK_OR_FAIL(previous == MaturityLevel::very_good, "grid ends at very_good");

    const auto assessment = evaluate_all(fixtures::data_capture_model());
    const auto ratio = link_ratio(assessment, LayerLink::business_application);
    CHECK_OR_FAIL(ratio.has_value(), "fixture business_application is assessable");
    const double difference = ratio->to_double() - 19.0 / 21.0;
    CHECK_OR_FAIL(difference < 1e-9 && difference > -1e-9, "fixture ratio equals 19/21");
    CHECK_OR_FAIL(maturity_level(*ratio) == MaturityLevel::very_good,
                  "fixture ratio maps to very_good");
    return true;
}

// Criterion 5: the canonical M1 repair removes exactly one M1 offender,
// leaves every other offender set unchanged and never lowers the
// business_application maturity level.
bool criterion_5() {
    std::mt19937 rng(6003);
    int qualifying = 0;
    for (int attempt = 0; attempt < 2000 && qualifying < 200; ++attempt) {
        const auto generated = gen::random_model(rng);
        const auto before_m1 = evaluate_metric(generated.model, "M1");
        if (before_m1.offenders.empty()) continue;
        ++qualifying;

        const auto before_assessment = evaluate_all(generated.model);
        const auto before_ratio = link_ratio(before_assessment, LayerLink::business_application);

        for (const auto& offender : before_m1.offenders) {
            auto repaired = resolve(
                gen::with_repair(generated.raw, offender.element.path, "acceptrepair"));
            CHECK_OR_FAIL(repaired.ok(), "repaired model resolves");
            const Model& after = *repaired.model;

            CHECK_OR_FAIL(evaluate_metric(after, "M1").value == before_m1.value - 1,
                          "repair lowers M1 by exactly one");
            for (const auto& d : list_metrics()) {
                if (d.id == "M1") continue;
                CHECK_OR_FAIL(oracle::offender_paths(evaluate_metric(after, d.id)) ==
                                  oracle::offender_paths(before_assessment.results.at(d.id)),
                              "repair leaves other offender sets unchanged");
            }

            const auto after_ratio =
                link_ratio(evaluate_all(after), LayerLink::business_application);
            CHECK_OR_FAIL(before_ratio.has_value() && after_ratio.has_value(),
                          "business_application stays assessable");
            CHECK_OR_FAIL(maturity_level(*after_ratio) >= maturity_level(*before_ratio),
                          "repair never lowers the maturity level");
        }
    }
    CHECK_OR_FAIL(qualifying >= 100, "enough models with M1 offenders were generated");
    return true;
}

// Criterion 6: red nodes in the DOT output equal the distinct finding
// elements, for the fixture and 100 random models, and the output parses.
bool criterion_6() {
    auto verify = [](const Model& model) {
        const auto report = build_report(model, evaluate_all(model));
        const std::string dot = render_dot(model, report);
        if (!dotcheck::is_valid(dot)) return false;
        std::set<std::string> expected;
        for (const auto& f : report.findings) expected.insert(f.element.node_id());
        return dotcheck::red_nodes(dot) == expected;
    };

    CHECK_OR_FAIL(verify(fixtures::data_capture_model()), "fixture DOT is sound");
    std::mt19937 rng(6004);
    for (int i = 0; i < 100; ++i) {
        CHECK_OR_FAIL(verify(gen::random_model(rng).model), "random model DOT is sound");
    }
    return true;
}

// Criterion 7: twelve scripted CLI invocations covering exit codes 0/1/2/3,
// stream separation, metric filtering and fmt --check idempotence, with
// byte-identical reruns.
bool criterion_7() {
    const std::string bin = ALIGNLINT_CLI_PATH;
    const std::string fixture_path = fixtures::data_capture_path();
    auto cli = [&](const std::string& args) { return proc::run(bin, args); };

    // 1. validate: clean fixture.
    const auto v1 = cli("validate " + fixture_path);
    CHECK_OR_FAIL(v1.exit_code == 0 && v1.out.empty() && v1.err.empty(),
                  "validate fixture: exit 0, silent streams");

    // 2. validate: missing file.
    const auto v2 = cli("validate /nonexistent/model.eam");
    CHECK_OR_FAIL(v2.exit_code == 3 && v2.out.empty() && !v2.err.empty(),
                  "validate missing file: exit 3, stderr only");

    // 3. validate: dangling reference.
    const auto dangling = proc::write_file(
        "accept_dangling.eam", "process P { activity A { supported_by Ghost } }\n");
    const auto v3 = cli("validate " + dangling);
    CHECK_OR_FAIL(v3.exit_code == 2 && v3.out.empty() &&
                      v3.err.find("E001_DANGLING_REF") != std::string::npos,
                  "validate dangling ref: exit 2, E001 on stderr");

    // 4. validate: warning only.
    const auto warn = proc::write_file("accept_warn.eam", "process P { }\n");
    const auto v4 = cli("validate " + warn);
    CHECK_OR_FAIL(v4.exit_code == 0 && v4.out.empty() &&
                      v4.err.find("W001_EMPTY_PROCESS") != std::string::npos,
                  "validate warning: exit 0, warning on stderr");

    // 5. assess: golden text report on stdout, stderr silent.
    const auto a1 = cli("assess " + fixture_path);
    CHECK_OR_FAIL(a1.exit_code == 0 && a1.err.empty() &&
                      a1.out == golden("data_capture_report.txt"),
                  "assess fixture: golden report on stdout");

    // 6. assess rerun: byte-identical.
    const auto a2 = cli("assess " + fixture_path);
    CHECK_OR_FAIL(a2.exit_code == a1.exit_code && a2.out == a1.out && a2.err == a1.err,
                  "assess rerun: byte-identical streams");

    // 7. assess --strict on the fixture.
    CHECK_OR_FAIL(cli("assess --strict " + fixture_path).exit_code == 1,
                  "assess --strict fixture: exit 1");

    // 8. assess --strict on a clean model.
    const auto clean = proc::write_file(
        "accept_clean.eam",
        "process P { activity A { supported_by X uses DS.E } }\n"
        "application X { accesses DS.E runs_on L }\n"
        "datasource DS { entity E { } }\n"
        "os L\n");
    CHECK_OR_FAIL(cli("assess --strict " + clean).exit_code == 0,
                  "assess --strict clean model: exit 0");

    // 9. assess --metrics M1: only the M1 finding.
    const auto filtered = cli("assess --metrics M1 " + fixture_path);
    CHECK_OR_FAIL(filtered.exit_code == 0 &&
                      filtered.out.find("M1 DataCapture.ReceivingOfQuestionnaires") !=
                          std::string::npos &&
                      filtered.out.find("M2 DataCapture.Scanning") == std::string::npos &&
                      filtered.out.find("WARNING") == std::string::npos,
                  "assess --metrics M1: only the M1 finding");

    // 10. assess --format interchange: golden document.
    const auto doc = cli("assess --format interchange " + fixture_path);
    CHECK_OR_FAIL(doc.exit_code == 0 && doc.out == golden("data_capture_report.json"),
                  "assess interchange: golden document on stdout");

    // 11. explain: paper origin and unknown id.
    const auto explain = cli("explain M2");
    CHECK_OR_FAIL(explain.exit_code == 0 &&
                      explain.out.find("origin: paper") != std::string::npos,
                  "explain M2: origin paper");
    CHECK_OR_FAIL(cli("explain M99").exit_code == 2, "explain M99: exit 2");

    // 12. fmt --check: canonical passes, messy fails, output is idempotent.
    CHECK_OR_FAIL(cli("fmt --check " + fixture_path).exit_code == 0,
                  "fmt --check fixture: exit 0");
    const auto messy = proc::write_file("accept_messy.eam", "process   P {\n}\n");
    CHECK_OR_FAIL(cli("fmt --check " + messy).exit_code == 1, "fmt --check messy: exit 1");
    const auto formatted = cli("fmt " + messy);
    CHECK_OR_FAIL(formatted.exit_code == 0, "fmt messy: exit 0");
    const auto canonical = proc::write_file("accept_canonical.eam", formatted.out);
    CHECK_OR_FAIL(cli("fmt --check " + canonical).exit_code == 0,
                  "fmt --check on fmt output: idempotent");
    return true;
}

struct Criterion {
    int number;
    const char* description;
    bool (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "paper-finding reproduction against the golden report", criterion_1},
        {2, "metric values equal the brute-force oracle on 1000 models", criterion_2},
        {3, "DSL and interchange round-trips on 500 models", criterion_3},
        {4, "maturity mapping boundaries and fixture ratio 19/21", criterion_4},
        {5, "M1 repair monotonicity across generated models", criterion_5},
        {6, "DOT red-node soundness on the fixture and 100 models", criterion_6},
        {7, "CLI contract matrix of 12 scripted invocations", criterion_7},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const bool ok = criterion.run();
        std::printf("%s: criterion %d - %s\n", ok ? "PASS" : "FAIL", criterion.number,
                    criterion.description);
        if (!ok) ++failures;
    }
    return failures;
}
