#pragma once

// Brute-force recount of every metric, kept independent of the engine: its
// own tree recursion, its own predicate scans, no reuse of leaf_activities
// or evaluate_metric. Property tests compare engine results against this.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "alignlint/metrics.hpp"
#include "alignlint/model.hpp"

namespace oracle {

using Path = std::vector<std::string>;

struct Leaf {
    Path process_path;
    Path activity_path;
    const alignlint::Activity* activity;
    alignlint::Criticality owner_criticality;
};

inline void collect_leaves(const alignlint::Process& process, Path path, std::vector<Leaf>& out) {
    path.push_back(process.id);
    for (const auto& child : process.children) {
        if (const auto* sub = std::get_if<alignlint::Process>(&child.value)) {
            collect_leaves(*sub, path, out);
        } else {
            const auto& activity = std::get<alignlint::Activity>(child.value);
            Path activity_path = path;
            activity_path.push_back(activity.id);
            out.push_back(Leaf{path, activity_path, &activity, process.criticality});
        }
    }
}

inline std::vector<Leaf> leaves(const alignlint::Model& model) {
    std::vector<Leaf> out;
    for (const auto& process : model.processes) collect_leaves(process, {}, out);
    return out;
}

struct Count {
    std::size_t population = 0;
    std::set<Path> offenders;
};

inline bool contains_ref(const std::vector<alignlint::ElementRef>& refs, const Path& path) {
    return std::any_of(refs.begin(), refs.end(),
                       [&](const alignlint::ElementRef& r) { return r.path == path; });
}

inline Count recount(const alignlint::Model& model, const std::string& id,
                     const alignlint::MetricConfig& config = {}) {
    Count count;
    const auto all_leaves = leaves(model);

    if (id == "M1") {
        count.population = all_leaves.size();
        for (const Leaf& leaf : all_leaves) {
            if (leaf.activity->supported_by.empty()) count.offenders.insert(leaf.activity_path);
        }
    } else if (id == "M2") {
        count.population = all_leaves.size();
        for (const Leaf& leaf : all_leaves) {
            if (leaf.activity->supported_by.size() >= 2) count.offenders.insert(leaf.activity_path);
        }
    } else if (id == "M3") {
        count.population = model.applications.size();
        for (const auto& app : model.applications) {
            std::set<std::string> tops;
            for (const Leaf& leaf : all_leaves) {
                if (contains_ref(leaf.activity->supported_by, {app.id})) {
                    tops.insert(leaf.process_path.front());
                }
            }
            if (tops.size() >= 2) count.offenders.insert({app.id});
        }
    } else if (id == "M4") {
        count.population = all_leaves.size();
        for (const Leaf& leaf : all_leaves) {
            if (leaf.activity->uses.empty()) count.offenders.insert(leaf.activity_path);
        }
    } else if (id == "M5") {
        for (const auto& ds : model.data_sources) {
            for (const auto& entity : ds.entities) {
                ++count.population;
                bool used = false;
                for (const Leaf& leaf : all_leaves) {
                    if (contains_ref(leaf.activity->uses, {ds.id, entity.id})) used = true;
                }
                if (!used) count.offenders.insert({ds.id, entity.id});
            }
        }
    } else if (id == "M6") {
        for (const auto& ds : model.data_sources) {
            for (const auto& entity : ds.entities) {
                ++count.population;
                std::size_t accessors = 0;
                for (const auto& app : model.applications) {
                    if (contains_ref(app.accesses, {ds.id, entity.id})) ++accessors;
                }
                if (accessors >= 2) count.offenders.insert({ds.id, entity.id});
            }
        }
    } else if (id == "M7" || id == "M8") {
        for (const auto& ds : model.data_sources) {
            for (const auto& entity : ds.entities) {
                for (const auto& attr : entity.attributes) {
                    ++count.population;
                    const bool redundant = attr.has_qualifier(alignlint::AttributeQualifier::redundant);
                    const bool confidential =
                        attr.has_qualifier(alignlint::AttributeQualifier::confidential);
                    const bool secure = attr.has_qualifier(alignlint::AttributeQualifier::secure);
                    const bool offends = id == "M7" ? redundant : (confidential && !secure);
                    if (offends) count.offenders.insert({ds.id, entity.id, attr.id});
                }
            }
        }
    } else if (id == "M9") {
        count.population = model.applications.size();
        for (const auto& app : model.applications) {
            if (app.runs_on.size() >= static_cast<std::size_t>(config.m9_runs_on_threshold)) {
                count.offenders.insert({app.id});
            }
        }
    } else if (id == "M10") {
        auto unhosted = [&](const std::string& platform) {
            for (const auto& app : model.applications) {
                if (contains_ref(app.runs_on, {platform})) return false;
            }
            return true;
        };
        for (const auto& os : model.operating_systems) {
            ++count.population;
            if (unhosted(os.id)) count.offenders.insert({os.id});
        }
        for (const auto& tech : model.technologies) {
            ++count.population;
            if (unhosted(tech.id)) count.offenders.insert({tech.id});
        }
    } else if (id == "M11") {
        for (const Leaf& leaf : all_leaves) {
            if (leaf.owner_criticality != alignlint::Criticality::high) continue;
            bool assessable = false;
            bool offends = false;
            for (const auto& ref : leaf.activity->supported_by) {
                for (const auto& app : model.applications) {
                    if (ref.path != Path{app.id} || app.quality.empty()) continue;
                    assessable = true;
                    double sum = 0.0;
                    for (const auto& [factor, score] : app.quality) sum += score;
                    if (sum / static_cast<double>(app.quality.size()) <
                        config.m11_quality_threshold) {
                        offends = true;
                    }
                }
            }
            if (!assessable) continue;
            ++count.population;
            if (offends) count.offenders.insert(leaf.activity_path);
        }
    }
    return count;
}

inline std::set<Path> offender_paths(const alignlint::MetricResult& result) {
    std::set<Path> out;
    for (const auto& offender : result.offenders) out.insert(offender.element.path);
    return out;
}

}  // namespace oracle
