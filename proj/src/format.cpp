#include "alignlint/format.hpp"

#include <charconv>

#include <fmt/format.h>

namespace alignlint {

namespace {

std::string score_text(double score) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, score);
    return std::string(buf, ptr);
}

std::string ref_list(const std::vector<ElementRef>& refs) {
    std::string out;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        if (i > 0) out += ", ";
        out += refs[i].path_string();
    }
    return out;
}

void write_indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

void write_activity(std::string& out, const Activity& activity, int depth) {
    write_indent(out, depth);
    out += fmt::format("activity {} {{", activity.id);
    if (!activity.supported_by.empty()) {
        out += fmt::format(" supported_by {}", ref_list(activity.supported_by));
    }
    if (!activity.uses.empty()) {
        out += fmt::format(" uses {}", ref_list(activity.uses));
    }
    out += " }\n";
}

void write_process(std::string& out, const Process& process, int depth) {
    write_indent(out, depth);
    out += fmt::format("process {}", process.id);
    if (process.criticality != Criticality::medium) {
        out += fmt::format(" criticality {}", criticality_name(process.criticality));
    }
    out += " {\n";
    for (const ProcessNode& child : process.children) {
        if (const auto* sub = std::get_if<Process>(&child.value)) {
            write_process(out, *sub, depth + 1);
        } else {
            write_activity(out, std::get<Activity>(child.value), depth + 1);
        }
    }
    write_indent(out, depth);
    out += "}\n";
}

void write_application(std::string& out, const Application& app) {
    out += fmt::format("application {} {{", app.id);
    for (const std::string& fn : app.functionalities) {
        out += fmt::format(" functionality {}", fn);
    }
    if (!app.quality.empty()) {
        out += " quality {";
        for (const auto& [factor, score] : app.quality) {
            out += fmt::format(" {}: {}", quality_factor_name(factor), score_text(score));
        }
        out += " }";
    }
    if (!app.runs_on.empty()) {
        out += fmt::format(" runs_on {}", ref_list(app.runs_on));
    }
    if (!app.accesses.empty()) {
        out += fmt::format(" accesses {}", ref_list(app.accesses));
    }
    out += " }\n";
}

void write_entity(std::string& out, const InformationEntity& entity) {
    out += fmt::format("  entity {} {{", entity.id);
    for (const Attribute& attr : entity.attributes) {
        out += fmt::format(" attribute {}", attr.id);
        for (AttributeQualifier q : attr.qualifiers) {
            out += fmt::format(" {}", qualifier_name(q));
        }
    }
    out += " }\n";
}

}  // namespace

std::string format(const Model& model) {
    std::string out;
    for (const Process& process : model.processes) write_process(out, process, 0);
    for (const Application& app : model.applications) write_application(out, app);
    for (const DataSource& ds : model.data_sources) {
        out += fmt::format("datasource {} {{\n", ds.id);
        for (const InformationEntity& entity : ds.entities) write_entity(out, entity);
        out += "}\n";
    }
    for (const OperatingSystem& os : model.operating_systems) {
        out += fmt::format("os {}\n", os.id);
    }
    for (const Technology& tech : model.technologies) {
        out += fmt::format("technology {}\n", tech.id);
    }
    return out;
}

}  // namespace alignlint
