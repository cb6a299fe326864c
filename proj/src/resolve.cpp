#include "alignlint/resolve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

namespace alignlint {

std::vector<ValidationIssue> ResolveResult::errors() const {
    std::vector<ValidationIssue> out;
    std::copy_if(issues.begin(), issues.end(), std::back_inserter(out),
                 [](const ValidationIssue& i) { return i.severity == Severity::error; });
    return out;
}

std::vector<ValidationIssue> ResolveResult::warnings() const {
    std::vector<ValidationIssue> out;
    std::copy_if(issues.begin(), issues.end(), std::back_inserter(out),
                 [](const ValidationIssue& i) { return i.severity == Severity::warning; });
    return out;
}

namespace {

struct Symbol {
    ElementKind kind{};
    std::vector<std::string> path;
};

std::string join_path(const std::vector<std::string>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) out += '.';
        out += path[i];
    }
    return out;
}

class Resolver {
public:
    ResolveResult run(const RawModel& raw) {
        register_all(raw);
        Model model = build(raw);

        ResolveResult result;
        const bool has_error =
            std::any_of(issues_.begin(), issues_.end(),
                        [](const ValidationIssue& i) { return i.severity == Severity::error; });
        result.issues = std::move(issues_);
        if (!has_error) {
            model.fingerprint = compute_fingerprint(model);
            result.model = std::move(model);
        }
        return result;
    }

private:
    std::map<std::string, Symbol, std::less<>> symbols_;
    std::vector<ValidationIssue> issues_;

    void issue(Severity severity, std::string_view code, const std::optional<SourcePos>& pos,
               const std::vector<std::string>& location, std::string message) {
        issues_.push_back(ValidationIssue{severity, std::string(code), pos, join_path(location),
                                          std::move(message)});
    }

    // --- pass 1: id registration -----------------------------------------

    void declare(ElementKind kind, const std::string& id, const std::optional<SourcePos>& pos,
                 std::vector<std::string> path) {
        if (!is_valid_element_id(id)) {
            issue(Severity::error, issue::invalid_id, pos, path,
                  fmt::format("'{}' is not a valid identifier (letters, digits, underscore; "
                              "must start with a letter)",
                              id));
            return;
        }
        auto [it, inserted] = symbols_.emplace(id, Symbol{kind, path});
        if (!inserted) {
            issue(Severity::error, issue::duplicate_id, pos, path,
                  fmt::format("duplicate id '{}': already declared as {} '{}'", id,
                              kind_name(it->second.kind), join_path(it->second.path)));
        }
    }

    void register_process(const RawProcess& process, std::vector<std::string> path) {
        path.push_back(process.id);
        declare(ElementKind::process, process.id, process.pos, path);
        for (const RawProcessNode& child : process.children) {
            if (const auto* sub = std::get_if<RawProcess>(&child.value)) {
                register_process(*sub, path);
            } else {
                const auto& activity = std::get<RawActivity>(child.value);
                auto activity_path = path;
                activity_path.push_back(activity.id);
                declare(ElementKind::activity, activity.id, activity.pos, activity_path);
            }
        }
    }

    void register_all(const RawModel& raw) {
        for (const RawProcess& process : raw.processes) register_process(process, {});
        for (const RawApplication& app : raw.applications) {
            declare(ElementKind::application, app.id, app.pos, {app.id});
            for (const RawFunctionality& fn : app.functionalities) {
                declare(ElementKind::functionality, fn.id, fn.pos, {app.id, fn.id});
            }
        }
        for (const RawDataSource& ds : raw.data_sources) {
            declare(ElementKind::data_source, ds.id, ds.pos, {ds.id});
            for (const RawEntity& entity : ds.entities) {
                declare(ElementKind::information_entity, entity.id, entity.pos,
                        {ds.id, entity.id});
                for (const RawAttribute& attr : entity.attributes) {
                    declare(ElementKind::attribute, attr.id, attr.pos,
                            {ds.id, entity.id, attr.id});
                }
            }
        }
        for (const RawPlatform& os : raw.operating_systems) {
            declare(ElementKind::operating_system, os.id, os.pos, {os.id});
        }
        for (const RawPlatform& tech : raw.technologies) {
            declare(ElementKind::technology, tech.id, tech.pos, {tech.id});
        }
    }

    // --- pass 2: reference resolution -------------------------------------

    std::optional<ElementRef> resolve_ref(const RawRef& ref, std::string_view context_name,
                                          std::initializer_list<ElementKind> expected,
                                          const std::vector<std::string>& location) {
        const std::string written = join_path(ref.path);
        if (ref.path.empty()) return std::nullopt;  // unreachable from parser/interchange
        auto it = symbols_.find(ref.path.back());
        const bool suffix_ok =
            it != symbols_.end() && ref.path.size() <= it->second.path.size() &&
            std::equal(ref.path.rbegin(), ref.path.rend(), it->second.path.rbegin());
        if (!suffix_ok) {
            issue(Severity::error, issue::dangling_ref, ref.pos, location,
                  fmt::format("{} references unknown element '{}'", context_name, written));
            return std::nullopt;
        }
        const Symbol& sym = it->second;
        if (std::find(expected.begin(), expected.end(), sym.kind) == expected.end()) {
            std::string wanted;
            for (auto k : expected) {
                if (!wanted.empty()) wanted += " or ";
                wanted += kind_name(k);
            }
            issue(Severity::error, issue::kind_mismatch, ref.pos, location,
                  fmt::format("{} expects {}, but '{}' is {} '{}'", context_name, wanted, written,
                              kind_name(sym.kind), join_path(sym.path)));
            return std::nullopt;
        }
        return ElementRef{sym.kind, sym.path};
    }

    std::vector<ElementRef> resolve_ref_list(const std::vector<RawRef>& refs,
                                             std::string_view context_name,
                                             std::initializer_list<ElementKind> expected,
                                             const std::vector<std::string>& location) {
        std::vector<ElementRef> out;
        for (const RawRef& raw_ref : refs) {
            auto resolved = resolve_ref(raw_ref, context_name, expected, location);
            if (!resolved) continue;
            if (std::find(out.begin(), out.end(), *resolved) != out.end()) {
                issue(Severity::warning, issue::duplicate_entry, raw_ref.pos, location,
                      fmt::format("duplicate {} entry '{}' ignored", context_name,
                                  join_path(raw_ref.path)));
                continue;
            }
            out.push_back(std::move(*resolved));
        }
        return out;
    }

    Activity build_activity(const RawActivity& raw, const std::vector<std::string>& path) {
        Activity activity;
        activity.id = raw.id;
        activity.supported_by =
            resolve_ref_list(raw.supported_by, "supported_by", {ElementKind::application}, path);
        activity.uses =
            resolve_ref_list(raw.uses, "uses", {ElementKind::information_entity}, path);
        return activity;
    }

    Process build_process(const RawProcess& raw, std::vector<std::string> path) {
        path.push_back(raw.id);
        Process process;
        process.id = raw.id;
        process.criticality = raw.criticality;
        for (const RawProcessNode& child : raw.children) {
            if (const auto* sub = std::get_if<RawProcess>(&child.value)) {
                process.children.push_back(ProcessNode{build_process(*sub, path)});
            } else {
                const auto& raw_activity = std::get<RawActivity>(child.value);
                auto activity_path = path;
                activity_path.push_back(raw_activity.id);
                process.children.push_back(ProcessNode{build_activity(raw_activity, activity_path)});
            }
        }
        if (process.children.empty()) {
            issue(Severity::warning, issue::empty_process, raw.pos, path,
                  fmt::format("process '{}' contains no activities", raw.id));
        }
        return process;
    }

    Application build_application(const RawApplication& raw) {
        Application app;
        app.id = raw.id;
        const std::vector<std::string> path{raw.id};
        std::set<std::string> seen_functionalities;
        for (const RawFunctionality& fn : raw.functionalities) {
            if (!seen_functionalities.insert(fn.id).second) {
                issue(Severity::warning, issue::duplicate_entry, fn.pos, path,
                      fmt::format("duplicate functionality '{}' ignored", fn.id));
                continue;
            }
            app.functionalities.push_back(fn.id);
        }
        for (const RawQualityEntry& entry : raw.quality) {
            if (entry.score < 0.0 || entry.score > 1.0) {
                issue(Severity::error, issue::quality_range, entry.pos, path,
                      fmt::format("quality score {} for factor '{}' is outside [0,1]", entry.score,
                                  quality_factor_name(entry.factor)));
                continue;
            }
            auto [it, inserted] = app.quality.emplace(entry.factor, entry.score);
            if (!inserted) {
                issue(Severity::warning, issue::duplicate_entry, entry.pos, path,
                      fmt::format("factor '{}' assigned twice; keeping the later value",
                                  quality_factor_name(entry.factor)));
                it->second = entry.score;
            }
        }
        app.runs_on = resolve_ref_list(
            raw.runs_on, "runs_on",
            {ElementKind::operating_system, ElementKind::technology}, path);
        app.accesses =
            resolve_ref_list(raw.accesses, "accesses", {ElementKind::information_entity}, path);
        return app;
    }

    Attribute build_attribute(const RawAttribute& raw, const std::vector<std::string>& path) {
        Attribute attr;
        attr.id = raw.id;
        for (AttributeQualifier q : raw.qualifiers) {
            if (attr.has_qualifier(q)) {
                issue(Severity::warning, issue::duplicate_entry, raw.pos, path,
                      fmt::format("duplicate qualifier '{}' ignored", qualifier_name(q)));
                continue;
            }
            attr.qualifiers.push_back(q);
        }
        // Set semantics: canonical order is enum order.
        std::sort(attr.qualifiers.begin(), attr.qualifiers.end());
        return attr;
    }

    Model build(const RawModel& raw) {
        Model model;
        for (const RawProcess& process : raw.processes) {
            model.processes.push_back(build_process(process, {}));
        }
        for (const RawApplication& app : raw.applications) {
            model.applications.push_back(build_application(app));
        }
        for (const RawDataSource& raw_ds : raw.data_sources) {
            DataSource ds;
            ds.id = raw_ds.id;
            for (const RawEntity& raw_entity : raw_ds.entities) {
                InformationEntity entity;
                entity.id = raw_entity.id;
                for (const RawAttribute& raw_attr : raw_entity.attributes) {
                    entity.attributes.push_back(build_attribute(
                        raw_attr, {raw_ds.id, raw_entity.id, raw_attr.id}));
                }
                ds.entities.push_back(std::move(entity));
            }
            model.data_sources.push_back(std::move(ds));
        }
        for (const RawPlatform& os : raw.operating_systems) {
            model.operating_systems.push_back(OperatingSystem{os.id});
        }
        for (const RawPlatform& tech : raw.technologies) {
            model.technologies.push_back(Technology{tech.id});
        }
        return model;
    }
};

}  // namespace

ResolveResult resolve(const RawModel& raw) { return Resolver{}.run(raw); }

}  // namespace alignlint
