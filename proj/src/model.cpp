#include "alignlint/model.hpp"

#include <algorithm>

namespace alignlint {

std::string_view criticality_name(Criticality c) {
    switch (c) {
        case Criticality::low: return "low";
        case Criticality::medium: return "medium";
        case Criticality::high: return "high";
    }
    return "medium";
}

std::optional<Criticality> criticality_from_name(std::string_view name) {
    if (name == "low") return Criticality::low;
    if (name == "medium") return Criticality::medium;
    if (name == "high") return Criticality::high;
    return std::nullopt;
}

Ratio criticality_weight(Criticality c) {
    switch (c) {
        case Criticality::low: return Ratio{1, 3};
        case Criticality::medium: return Ratio{2, 3};
        case Criticality::high: return Ratio{1, 1};
    }
    return Ratio{2, 3};
}

namespace {

constexpr std::string_view kFactorNames[kQualityFactorCount] = {
    "correctness",    "reliability", "efficiency",  "integrity",  "usability", "maintainability",
    "testability",    "flexibility", "portability", "reusability", "interoperability",
};

}  // namespace

std::string_view quality_factor_name(QualityFactor f) {
    return kFactorNames[static_cast<int>(f)];
}

std::optional<QualityFactor> quality_factor_from_name(std::string_view name) {
    for (int i = 0; i < kQualityFactorCount; ++i) {
        if (kFactorNames[i] == name) return static_cast<QualityFactor>(i);
    }
    return std::nullopt;
}

std::string_view qualifier_name(AttributeQualifier q) {
    switch (q) {
        case AttributeQualifier::secure: return "secure";
        case AttributeQualifier::confidential: return "confidential";
        case AttributeQualifier::redundant: return "redundant";
    }
    return "secure";
}

std::optional<AttributeQualifier> qualifier_from_name(std::string_view name) {
    if (name == "secure") return AttributeQualifier::secure;
    if (name == "confidential") return AttributeQualifier::confidential;
    if (name == "redundant") return AttributeQualifier::redundant;
    return std::nullopt;
}

bool Attribute::has_qualifier(AttributeQualifier q) const {
    return std::find(qualifiers.begin(), qualifiers.end(), q) != qualifiers.end();
}

namespace {

void collect_leaves(const Process& process, std::vector<std::string>& path,
                    std::vector<LeafActivity>& out) {
    path.push_back(process.id);
    for (const ProcessNode& child : process.children) {
        if (const auto* sub = std::get_if<Process>(&child.value)) {
            collect_leaves(*sub, path, out);
        } else {
            const auto& activity = std::get<Activity>(child.value);
            ElementRef process_ref{ElementKind::process, path};
            std::vector<std::string> activity_path = path;
            activity_path.push_back(activity.id);
            out.push_back(LeafActivity{std::move(process_ref),
                                       ElementRef{ElementKind::activity, std::move(activity_path)},
                                       &activity, process.criticality});
        }
    }
    path.pop_back();
}

}  // namespace

std::vector<LeafActivity> leaf_activities(const Model& model) {
    std::vector<LeafActivity> out;
    std::vector<std::string> path;
    for (const Process& process : model.processes) {
        collect_leaves(process, path, out);
    }
    return out;
}

namespace {

// Suffix match: stored refs carry full paths, hand-built refs may give any
// unambiguous tail (ids are globally unique, so one segment suffices).
bool path_matches(const std::vector<std::string>& full, const std::vector<std::string>& given) {
    if (given.empty() || given.size() > full.size()) return false;
    return std::equal(given.rbegin(), given.rend(), full.rbegin());
}

struct Found {
    ElementKind kind;
    ElementView view;
};

void walk_process(const Process& process, std::vector<std::string>& path,
                  const ElementRef& ref, std::optional<Found>& found) {
    path.push_back(process.id);
    if (path_matches(path, ref.path)) found = Found{ElementKind::process, &process};
    for (const ProcessNode& child : process.children) {
        if (found) break;
        if (const auto* sub = std::get_if<Process>(&child.value)) {
            walk_process(*sub, path, ref, found);
        } else {
            const auto& activity = std::get<Activity>(child.value);
            path.push_back(activity.id);
            if (path_matches(path, ref.path)) found = Found{ElementKind::activity, &activity};
            path.pop_back();
        }
    }
    path.pop_back();
}

}  // namespace

std::optional<ElementView> lookup(const Model& model, const ElementRef& ref) {
    if (ref.path.empty()) return std::nullopt;

    std::optional<Found> found;
    std::vector<std::string> path;
    for (const Process& process : model.processes) {
        if (found) break;
        walk_process(process, path, ref, found);
    }
    for (const Application& app : model.applications) {
        if (found) break;
        if (path_matches({app.id}, ref.path)) {
            found = Found{ElementKind::application, &app};
            break;
        }
        for (const std::string& fn : app.functionalities) {
            if (path_matches({app.id, fn}, ref.path)) {
                found = Found{ElementKind::functionality, &fn};
                break;
            }
        }
    }
    for (const DataSource& ds : model.data_sources) {
        if (found) break;
        if (path_matches({ds.id}, ref.path)) {
            found = Found{ElementKind::data_source, &ds};
            break;
        }
        for (const InformationEntity& entity : ds.entities) {
            if (found) break;
            if (path_matches({ds.id, entity.id}, ref.path)) {
                found = Found{ElementKind::information_entity, &entity};
                break;
            }
            for (const Attribute& attr : entity.attributes) {
                if (path_matches({ds.id, entity.id, attr.id}, ref.path)) {
                    found = Found{ElementKind::attribute, &attr};
                    break;
                }
            }
        }
    }
    for (const OperatingSystem& os : model.operating_systems) {
        if (found) break;
        if (path_matches({os.id}, ref.path)) found = Found{ElementKind::operating_system, &os};
    }
    for (const Technology& tech : model.technologies) {
        if (found) break;
        if (path_matches({tech.id}, ref.path)) found = Found{ElementKind::technology, &tech};
    }

    if (!found || found->kind != ref.kind) return std::nullopt;
    return found->view;
}

}  // namespace alignlint
