#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "alignlint/report.hpp"
#include "support/dot_checker.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace alignlint;

namespace {

// One supported activity using one entity, everything hosted and accessed
// exactly once: no metric fires.
const char* kCleanModel =
    "process P { activity A { supported_by X uses DS.E } }\n"
    "application X { accesses DS.E runs_on L }\n"
    "datasource DS { entity E { } }\n"
    "os L\n";

}  // namespace

TEST_CASE("fixture findings: the two paper diagnostics lead") {
    const Model model = fixtures::data_capture_model();
    const auto assessment = evaluate_all(model);
    const auto all = findings(model, assessment);

    REQUIRE(all.size() == 9);  // M1 + M2 + seven M4 warnings
    CHECK(all[0].metric == "M1");
    CHECK(all[0].severity == Severity::error);
    CHECK(all[0].element.path ==
          std::vector<std::string>{"DataCapture", "ReceivingOfQuestionnaires"});
    CHECK(all[0].message ==
          "activity 'DataCapture.ReceivingOfQuestionnaires' is not automated: no application "
          "supports it");

    CHECK(all[1].metric == "M2");
    CHECK(all[1].severity == Severity::error);
    CHECK(all[1].element.path == std::vector<std::string>{"DataCapture", "Scanning"});
    CHECK(all[1].magnitude == 3);
    CHECK(all[1].suggestion ==
          "Consolidate onto one supporting application (candidates: DigiScan, DigiOcr, "
          "DigiLad); changes then stay local, data is entered once and users log in once.");

    for (std::size_t i = 2; i < all.size(); ++i) {
        CHECK(all[i].metric == "M4");
        CHECK(all[i].severity == Severity::warning);
    }
    // M4 block sorted by element path.
    CHECK(all[2].element.path ==
          std::vector<std::string>{"DataCapture", "CharacterRecognizing"});
}

TEST_CASE("clean model produces no findings") {
    const Model model = fixtures::model_from(kCleanModel);
    const auto assessment = evaluate_all(model);
    CHECK(findings(model, assessment).empty());
}

TEST_CASE("fingerprint mismatch is rejected") {
    const Model model = fixtures::data_capture_model();
    auto assessment = evaluate_all(model);
    assessment.model_fingerprint ^= 1;
    CHECK_THROWS_WITH_AS(findings(model, assessment), doctest::Contains("FINGERPRINT_MISMATCH"),
                         std::invalid_argument);
    Report report;
    report.model_fingerprint = model.fingerprint ^ 1;
    CHECK_THROWS_AS(render_dot(model, report), std::invalid_argument);
}

TEST_CASE("render_text carries the expected fragments and determinism") {
    const Model model = fixtures::data_capture_model();
    const auto report = build_report(model, evaluate_all(model));
    const std::string text = render_text(report);

    CHECK(text.find("M1 DataCapture.ReceivingOfQuestionnaires") != std::string::npos);
    CHECK(text.find("M2 DataCapture.Scanning") != std::string::npos);
    CHECK(text.find("0.905") != std::string::npos);
    CHECK(text.find("very_good") != std::string::npos);
    CHECK(text.back() == '\n');
    CHECK(render_text(report) == text);
}

TEST_CASE("render_text on the empty model") {
    const Model model = fixtures::model_from("");
    const auto report = build_report(model, evaluate_all(model));
    const std::string text = render_text(report);
    CHECK(text.find("n/a") != std::string::npos);
    CHECK(report.findings.empty());
    CHECK(report.summary.errors == 0);
    CHECK(report.summary.warnings == 0);
    for (const auto& [metric, count] : report.summary.by_metric) CHECK(count == 0);
}

TEST_CASE("metric filter restricts findings and summary, not maturity") {
    const Model model = fixtures::data_capture_model();
    const auto assessment = evaluate_all(model);
    const auto report = build_report(model, assessment, {"M1"});
    REQUIRE(report.findings.size() == 1);
    CHECK(report.findings[0].metric == "M1");
    CHECK(report.summary.by_metric.size() == 1);
    CHECK(report.summary.by_metric.at("M1") == 1);
    REQUIRE(report.maturity[0].ratio.has_value());
    CHECK(*report.maturity[0].ratio == Ratio{19, 21});  // full assessment behind the table
}

TEST_CASE("interchange report round-trips structurally") {
    const Model model = fixtures::data_capture_model();
    const auto report = build_report(model, evaluate_all(model));
    const std::string text = render_interchange(report);
    CHECK(text.back() == '\n');
    const auto reparsed = report_from_interchange(text);
    REQUIRE(reparsed.has_value());
    CHECK(*reparsed == report);

    CHECK_FALSE(report_from_interchange("{").has_value());
    CHECK_FALSE(report_from_interchange("{}").has_value());
}

TEST_CASE("render_dot highlights exactly the finding elements") {
    const Model model = fixtures::data_capture_model();
    const auto report = build_report(model, evaluate_all(model));
    const std::string dot = render_dot(model, report);

    CHECK(dotcheck::is_valid(dot));
    const auto reds = dotcheck::red_nodes(dot);
    std::set<std::string> expected;
    for (const auto& f : report.findings) expected.insert(f.element.node_id());
    CHECK(reds == expected);
    CHECK(reds.count("DataCapture__ReceivingOfQuestionnaires") == 1);
    CHECK(reds.count("DataCapture__CharacterRecognizing") == 1);  // an M4 offender
    CHECK(dot.find("\"DataCapture__Scanning\" -> \"DigiScan\"") != std::string::npos);
    CHECK(dot.find("\"DataCapture__Scanning\" -> \"DigiOcr\"") != std::string::npos);
    CHECK(dot.find("\"DataCapture__Scanning\" -> \"DigiLad\"") != std::string::npos);
}

TEST_CASE("clean models render without any red nodes") {
    const Model model = fixtures::model_from(kCleanModel);
    const auto report = build_report(model, evaluate_all(model));
    const std::string dot = render_dot(model, report);
    CHECK(dotcheck::is_valid(dot));
    CHECK(dotcheck::red_nodes(dot).empty());
    CHECK(dot.find("fillcolor") == std::string::npos);
}

TEST_CASE("empty model renders an empty digraph") {
    const Model model = fixtures::model_from("");
    const auto report = build_report(model, evaluate_all(model));
    CHECK(render_dot(model, report) == "digraph architecture {\n}\n");
}

TEST_CASE("property: findings count equals the sum of metric values") {
    std::mt19937 rng(5001);
    for (int i = 0; i < 100; ++i) {
        const auto generated = gen::random_model(rng);
        const auto assessment = evaluate_all(generated.model);
        std::size_t total = 0;
        for (const auto& [id, result] : assessment.results) total += result.value;
        CHECK(findings(generated.model, assessment).size() == total);
    }
}

TEST_CASE("property: dot red nodes equal distinct finding elements") {
    std::mt19937 rng(5002);
    for (int i = 0; i < 50; ++i) {
        const auto generated = gen::random_model(rng);
        const auto report = build_report(generated.model, evaluate_all(generated.model));
        const std::string dot = render_dot(generated.model, report);
        REQUIRE(dotcheck::is_valid(dot));
        std::set<std::string> expected;
        for (const auto& f : report.findings) expected.insert(f.element.node_id());
        CHECK(dotcheck::red_nodes(dot) == expected);
    }
}

TEST_CASE("property: findings are a pure function of the model") {
    std::mt19937 rng(5003);
    for (int i = 0; i < 30; ++i) {
        const auto generated = gen::random_model(rng);
        const auto a = findings(generated.model, evaluate_all(generated.model));
        const auto b = findings(generated.model, evaluate_all(generated.model));
        CHECK(a == b);
    }
}
