#include <set>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "alignlint/report.hpp"

namespace alignlint {

namespace {

// Style table (documented in docs/formats.md): processes render as
// clusters, every other kind as a node with a fixed shape.
std::string_view shape_for(ElementKind kind) {
    switch (kind) {
        case ElementKind::activity: return "ellipse";
        case ElementKind::application: return "box";
        case ElementKind::functionality: return "note";
        case ElementKind::data_source: return "cylinder";
        case ElementKind::information_entity: return "folder";
        case ElementKind::attribute: return "diamond";
        case ElementKind::operating_system: return "box3d";
        case ElementKind::technology: return "hexagon";
        case ElementKind::process: return "box";  // processes become clusters instead
    }
    return "box";
}

class DotWriter {
public:
    DotWriter(const Model& model, const Report& report) : model_(model) {
        for (const Finding& f : report.findings) red_.insert(f.element.node_id());
    }

    std::string run() {
        out_ += "digraph architecture {\n";
        indent_ = 1;
        for (const Process& process : model_.processes) write_process_cluster(process, {});
        write_applications();
        write_data_sources();
        write_platforms();
        write_link_edges();
        out_ += "}\n";
        return out_;
    }

private:
    const Model& model_;
    std::set<std::string> red_;
    std::string out_;
    int indent_ = 0;

    void line(const std::string& text) {
        out_.append(static_cast<std::size_t>(indent_) * 2, ' ');
        out_ += text;
        out_ += '\n';
    }

    void write_node(const ElementRef& ref) {
        const std::string id = ref.node_id();
        std::string attrs =
            fmt::format("label=\"{}\", shape={}", ref.path.back(), shape_for(ref.kind));
        if (red_.count(id) > 0) attrs += ", fillcolor=\"red\", style=\"filled\"";
        line(fmt::format("\"{}\" [{}];", id, attrs));
    }

    void write_edge(const ElementRef& from, const ElementRef& to, std::string_view label,
                    bool dashed = false) {
        line(fmt::format("\"{}\" -> \"{}\" [label=\"{}\"{}];", from.node_id(), to.node_id(), label,
                         dashed ? ", style=dashed" : ""));
    }

    void write_process_cluster(const Process& process, std::vector<std::string> path) {
        path.push_back(process.id);
        const ElementRef self{ElementKind::process, path};
        line(fmt::format("subgraph \"cluster_{}\" {{", self.node_id()));
        ++indent_;
        line(fmt::format("label=\"{}\";", process.id));
        for (const ProcessNode& child : process.children) {
            if (const auto* sub = std::get_if<Process>(&child.value)) {
                write_process_cluster(*sub, path);
            } else {
                const auto& activity = std::get<Activity>(child.value);
                auto activity_path = path;
                activity_path.push_back(activity.id);
                write_node(ElementRef{ElementKind::activity, std::move(activity_path)});
            }
        }
        --indent_;
        line("}");
    }

    void write_applications() {
        for (const Application& app : model_.applications) {
            const ElementRef self{ElementKind::application, {app.id}};
            write_node(self);
            for (const std::string& fn : app.functionalities) {
                const ElementRef fn_ref{ElementKind::functionality, {app.id, fn}};
                write_node(fn_ref);
                write_edge(self, fn_ref, "contains", /*dashed=*/true);
            }
        }
    }

    void write_data_sources() {
        for (const DataSource& ds : model_.data_sources) {
            const ElementRef ds_ref{ElementKind::data_source, {ds.id}};
            write_node(ds_ref);
            for (const InformationEntity& entity : ds.entities) {
                const ElementRef entity_ref{ElementKind::information_entity, {ds.id, entity.id}};
                write_node(entity_ref);
                write_edge(ds_ref, entity_ref, "contains", /*dashed=*/true);
                for (const Attribute& attr : entity.attributes) {
                    const ElementRef attr_ref{ElementKind::attribute, {ds.id, entity.id, attr.id}};
                    write_node(attr_ref);
                    write_edge(entity_ref, attr_ref, "contains", /*dashed=*/true);
                }
            }
        }
    }

    void write_platforms() {
        for (const OperatingSystem& os : model_.operating_systems) {
            write_node(ElementRef{ElementKind::operating_system, {os.id}});
        }
        for (const Technology& tech : model_.technologies) {
            write_node(ElementRef{ElementKind::technology, {tech.id}});
        }
    }

    void write_link_edges() {
        for (const LeafActivity& leaf : leaf_activities(model_)) {
            for (const ElementRef& app : leaf.activity->supported_by) {
                write_edge(leaf.ref, app, "supported_by");
            }
            for (const ElementRef& entity : leaf.activity->uses) {
                write_edge(leaf.ref, entity, "uses");
            }
        }
        for (const Application& app : model_.applications) {
            const ElementRef self{ElementKind::application, {app.id}};
            for (const ElementRef& entity : app.accesses) write_edge(self, entity, "accesses");
            for (const ElementRef& platform : app.runs_on) write_edge(self, platform, "runs_on");
        }
    }
};

}  // namespace

std::string render_dot(const Model& model, const Report& report) {
    if (model.fingerprint != report.model_fingerprint) {
        throw std::invalid_argument(
            "FINGERPRINT_MISMATCH: report was not computed from this model");
    }
    return DotWriter(model, report).run();
}

}  // namespace alignlint
