#include "alignlint/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace alignlint {

std::string_view layer_link_name(LayerLink link) {
    switch (link) {
        case LayerLink::business_application: return "business_application";
        case LayerLink::business_information: return "business_information";
        case LayerLink::application_information: return "application_information";
        case LayerLink::application_technology: return "application_technology";
    }
    return "business_application";
}

std::optional<LayerLink> layer_link_from_name(std::string_view name) {
    for (int i = 0; i < kLayerLinkCount; ++i) {
        const auto link = static_cast<LayerLink>(i);
        if (layer_link_name(link) == name) return link;
    }
    return std::nullopt;
}

std::string_view metric_origin_name(MetricOrigin origin) {
    return origin == MetricOrigin::paper ? "paper" : "extension";
}

const std::vector<MetricDescriptor>& list_metrics() {
    static const std::vector<MetricDescriptor> registry = {
        {"M1", "Activities not automated", LayerLink::business_application, MetricOrigin::paper,
         "Counts leaf activities with no supporting application. Every activity should be "
         "automated by at least one application.",
         "Introduce an application that supports the activity; manual handling needs more staff "
         "time and slows the process down."},
        {"M2", "Activities supported by several applications", LayerLink::business_application,
         MetricOrigin::paper,
         "Counts leaf activities supported by two or more applications. Splitting one activity "
         "across applications invites entering the same data more than once and logging in once "
         "per application, and makes changes ripple across systems.",
         "Consolidate support onto a single application so changes stay local, data is entered "
         "once and users log in once."},
        {"M3", "Applications spanning processes", LayerLink::business_application,
         MetricOrigin::extension,
         "Counts applications that support leaf activities in two or more distinct top-level "
         "processes.",
         "Narrow the application's scope to one process, or split it along process boundaries."},
        {"M4", "Activities using no information", LayerLink::business_information,
         MetricOrigin::extension,
         "Counts leaf activities that use no information entity.",
         "Link the activity to the information entities it reads or produces."},
        {"M5", "Orphan information entities", LayerLink::business_information,
         MetricOrigin::extension,
         "Counts information entities used by no activity.",
         "Remove the orphan entity or connect it to the activities that need it."},
        {"M6", "Entities accessed by several applications", LayerLink::application_information,
         MetricOrigin::extension,
         "Counts information entities accessed by two or more applications.",
         "Give the entity a single owning application; fewer accessors reduce the need for "
         "distributed transactions across applications."},
        {"M7", "Redundant attributes", LayerLink::application_information,
         MetricOrigin::extension,
         "Counts attributes carrying the redundant qualifier.",
         "Deduplicate the attribute or designate a single source of truth for it."},
        {"M8", "Confidential attributes not secured", LayerLink::application_information,
         MetricOrigin::extension,
         "Counts attributes marked confidential but not secure.",
         "Add the secure qualifier or move the attribute into a protected store."},
        {"M9", "Applications with a broad platform footprint", LayerLink::application_technology,
         MetricOrigin::extension,
         "Counts applications running on three or more platforms (threshold configurable).",
         "Reduce the platform footprint; every extra platform adds operating and compatibility "
         "cost."},
        {"M10", "Unused platforms", LayerLink::application_technology, MetricOrigin::extension,
         "Counts operating systems and technologies that host no application.",
         "Retire the unused platform or migrate an application onto it."},
        {"M11", "Critical activities on low-quality applications", LayerLink::business_application,
         MetricOrigin::extension,
         "Counts leaf activities of high-criticality processes supported by an application whose "
         "mean declared quality score falls below the threshold (default 0.5). Activities whose "
         "supporters declare no quality factors are not assessable and stay out of the "
         "population.",
         "Raise the quality scores of the supporting applications or replace them for critical "
         "work."},
    };
    return registry;
}

const MetricDescriptor* find_metric(std::string_view id) {
    for (const MetricDescriptor& d : list_metrics()) {
        if (d.id == id) return &d;
    }
    return nullptr;
}

int metric_order(std::string_view id) {
    const auto& registry = list_metrics();
    for (std::size_t i = 0; i < registry.size(); ++i) {
        if (registry[i].id == id) return static_cast<int>(i);
    }
    return static_cast<int>(registry.size());
}

std::vector<const MetricDescriptor*> metrics_for_link(LayerLink link) {
    std::vector<const MetricDescriptor*> out;
    for (const MetricDescriptor& d : list_metrics()) {
        if (d.link == link) out.push_back(&d);
    }
    return out;
}

namespace {

ElementRef app_ref(const Application& app) {
    return ElementRef{ElementKind::application, {app.id}};
}

ElementRef entity_ref(const DataSource& ds, const InformationEntity& entity) {
    return ElementRef{ElementKind::information_entity, {ds.id, entity.id}};
}

double mean_quality(const Application& app) {
    double sum = 0.0;
    for (const auto& [factor, score] : app.quality) sum += score;
    return sum / static_cast<double>(app.quality.size());
}

void sort_offenders(std::vector<Offender>& offenders) {
    std::sort(offenders.begin(), offenders.end(),
              [](const Offender& a, const Offender& b) { return a.element < b.element; });
}

// Shared traversal products reused by the individual metrics.
struct EvalContext {
    const Model& model;
    std::vector<LeafActivity> leaves;

    explicit EvalContext(const Model& m) : model(m), leaves(leaf_activities(m)) {}

    const Application* application_for(const ElementRef& ref) const {
        for (const Application& app : model.applications) {
            if (ref.path.size() == 1 && ref.path[0] == app.id) return &app;
        }
        return nullptr;
    }
};

MetricResult eval_m1(const EvalContext& ctx) {
    MetricResult r{"M1", ctx.leaves.size(), {}, 0};
    for (const LeafActivity& leaf : ctx.leaves) {
        if (leaf.activity->supported_by.empty()) {
            r.offenders.push_back(Offender{leaf.ref, 0, {}});
        }
    }
    return r;
}

MetricResult eval_m2(const EvalContext& ctx) {
    MetricResult r{"M2", ctx.leaves.size(), {}, 0};
    for (const LeafActivity& leaf : ctx.leaves) {
        const auto& supporters = leaf.activity->supported_by;
        if (supporters.size() >= 2) {
            r.offenders.push_back(
                Offender{leaf.ref, static_cast<int>(supporters.size()), supporters});
        }
    }
    return r;
}

MetricResult eval_m3(const EvalContext& ctx) {
    MetricResult r{"M3", ctx.model.applications.size(), {}, 0};
    // Top-level processes per application, in first-encounter order (leaves
    // walk in declaration order, so this is process declaration order).
    std::map<std::string, std::vector<std::string>> processes_by_app;
    for (const LeafActivity& leaf : ctx.leaves) {
        const std::string& top = leaf.process.path.front();
        for (const ElementRef& app : leaf.activity->supported_by) {
            auto& tops = processes_by_app[app.path.front()];
            if (std::find(tops.begin(), tops.end(), top) == tops.end()) tops.push_back(top);
        }
    }
    for (const Application& app : ctx.model.applications) {
        auto it = processes_by_app.find(app.id);
        if (it == processes_by_app.end() || it->second.size() < 2) continue;
        std::vector<ElementRef> context;
        for (const std::string& top : it->second) {
            context.push_back(ElementRef{ElementKind::process, {top}});
        }
        r.offenders.push_back(
            Offender{app_ref(app), static_cast<int>(it->second.size()), std::move(context)});
    }
    return r;
}

MetricResult eval_m4(const EvalContext& ctx) {
    MetricResult r{"M4", ctx.leaves.size(), {}, 0};
    for (const LeafActivity& leaf : ctx.leaves) {
        if (leaf.activity->uses.empty()) r.offenders.push_back(Offender{leaf.ref, 0, {}});
    }
    return r;
}

MetricResult eval_m5(const EvalContext& ctx) {
    MetricResult r{"M5", 0, {}, 0};
    for (const DataSource& ds : ctx.model.data_sources) {
        for (const InformationEntity& entity : ds.entities) {
            ++r.population_size;
            const ElementRef ref = entity_ref(ds, entity);
            bool used = false;
            for (const LeafActivity& leaf : ctx.leaves) {
                const auto& uses = leaf.activity->uses;
                if (std::find(uses.begin(), uses.end(), ref) != uses.end()) {
                    used = true;
                    break;
                }
            }
            if (!used) r.offenders.push_back(Offender{ref, 0, {}});
        }
    }
    return r;
}

MetricResult eval_m6(const EvalContext& ctx) {
    MetricResult r{"M6", 0, {}, 0};
    for (const DataSource& ds : ctx.model.data_sources) {
        for (const InformationEntity& entity : ds.entities) {
            ++r.population_size;
            const ElementRef ref = entity_ref(ds, entity);
            std::vector<ElementRef> accessors;
            for (const Application& app : ctx.model.applications) {
                const auto& accesses = app.accesses;
                if (std::find(accesses.begin(), accesses.end(), ref) != accesses.end()) {
                    accessors.push_back(app_ref(app));
                }
            }
            if (accessors.size() >= 2) {
                r.offenders.push_back(
                    Offender{ref, static_cast<int>(accessors.size()), std::move(accessors)});
            }
        }
    }
    return r;
}

MetricResult eval_attribute_metric(const EvalContext& ctx, std::string id,
                                   bool (*predicate)(const Attribute&)) {
    MetricResult r{std::move(id), 0, {}, 0};
    for (const DataSource& ds : ctx.model.data_sources) {
        for (const InformationEntity& entity : ds.entities) {
            for (const Attribute& attr : entity.attributes) {
                ++r.population_size;
                if (predicate(attr)) {
                    r.offenders.push_back(Offender{
                        ElementRef{ElementKind::attribute, {ds.id, entity.id, attr.id}}, 0, {}});
                }
            }
        }
    }
    return r;
}

MetricResult eval_m9(const EvalContext& ctx, const MetricConfig& config) {
    MetricResult r{"M9", ctx.model.applications.size(), {}, 0};
    for (const Application& app : ctx.model.applications) {
        if (static_cast<int>(app.runs_on.size()) >= config.m9_runs_on_threshold) {
            r.offenders.push_back(
                Offender{app_ref(app), static_cast<int>(app.runs_on.size()), app.runs_on});
        }
    }
    return r;
}

MetricResult eval_m10(const EvalContext& ctx) {
    MetricResult r{"M10", 0, {}, 0};
    auto hosted = [&](const ElementRef& platform) {
        for (const Application& app : ctx.model.applications) {
            const auto& runs_on = app.runs_on;
            if (std::find(runs_on.begin(), runs_on.end(), platform) != runs_on.end()) return true;
        }
        return false;
    };
    for (const OperatingSystem& os : ctx.model.operating_systems) {
        ++r.population_size;
        ElementRef ref{ElementKind::operating_system, {os.id}};
        if (!hosted(ref)) r.offenders.push_back(Offender{std::move(ref), 0, {}});
    }
    for (const Technology& tech : ctx.model.technologies) {
        ++r.population_size;
        ElementRef ref{ElementKind::technology, {tech.id}};
        if (!hosted(ref)) r.offenders.push_back(Offender{std::move(ref), 0, {}});
    }
    return r;
}

MetricResult eval_m11(const EvalContext& ctx, const MetricConfig& config) {
    MetricResult r{"M11", 0, {}, 0};
    for (const LeafActivity& leaf : ctx.leaves) {
        if (leaf.owner_criticality != Criticality::high) continue;
        // Supporters without declared factors cannot be scored; an activity
        // with only such supporters is not assessable and leaves the
        // population entirely.
        bool assessable = false;
        std::vector<ElementRef> low_quality;
        for (const ElementRef& ref : leaf.activity->supported_by) {
            const Application* app = ctx.application_for(ref);
            if (app == nullptr || app->quality.empty()) continue;
            assessable = true;
            if (mean_quality(*app) < config.m11_quality_threshold) low_quality.push_back(ref);
        }
        if (!assessable) continue;
        ++r.population_size;
        if (!low_quality.empty()) {
            r.offenders.push_back(Offender{leaf.ref, static_cast<int>(low_quality.size()),
                                           std::move(low_quality)});
        }
    }
    return r;
}

}  // namespace

MetricResult evaluate_metric(const Model& model, std::string_view id, const MetricConfig& config) {
    const EvalContext ctx(model);
    MetricResult result;
    if (id == "M1") {
        result = eval_m1(ctx);
    } else if (id == "M2") {
        result = eval_m2(ctx);
    } else if (id == "M3") {
        result = eval_m3(ctx);
    } else if (id == "M4") {
        result = eval_m4(ctx);
    } else if (id == "M5") {
        result = eval_m5(ctx);
    } else if (id == "M6") {
        result = eval_m6(ctx);
    } else if (id == "M7") {
        result = eval_attribute_metric(ctx, "M7", [](const Attribute& a) {
            return a.has_qualifier(AttributeQualifier::redundant);
        });
    } else if (id == "M8") {
        result = eval_attribute_metric(ctx, "M8", [](const Attribute& a) {
            return a.has_qualifier(AttributeQualifier::confidential) &&
                   !a.has_qualifier(AttributeQualifier::secure);
        });
    } else if (id == "M9") {
        result = eval_m9(ctx, config);
    } else if (id == "M10") {
        result = eval_m10(ctx);
    } else if (id == "M11") {
        result = eval_m11(ctx, config);
    } else {
        throw std::invalid_argument(fmt::format("UNKNOWN_METRIC: '{}' is not registered", id));
    }
    sort_offenders(result.offenders);
    result.value = result.offenders.size();
    return result;
}

Assessment evaluate_all(const Model& model, const MetricConfig& config) {
    Assessment assessment;
    assessment.model_fingerprint = model.fingerprint;
    assessment.evaluated_at = std::chrono::system_clock::now();
    for (const MetricDescriptor& d : list_metrics()) {
        assessment.results.emplace(d.id, evaluate_metric(model, d.id, config));
    }
    return assessment;
}

}  // namespace alignlint
