#include "alignlint/interchange.hpp"

#include <json.hpp>

namespace alignlint {

namespace {

using nlohmann::json;

json ref_to_json(const ElementRef& ref) { return ref.path_string(); }

json refs_to_json(const std::vector<ElementRef>& refs) {
    json arr = json::array();
    for (const auto& r : refs) arr.push_back(ref_to_json(r));
    return arr;
}

json activity_to_json(const Activity& activity) {
    return json{{"id", activity.id},
                {"supported_by", refs_to_json(activity.supported_by)},
                {"uses", refs_to_json(activity.uses)}};
}

json process_to_json(const Process& process) {
    json children = json::array();
    for (const ProcessNode& child : process.children) {
        if (const auto* sub = std::get_if<Process>(&child.value)) {
            children.push_back(json{{"process", process_to_json(*sub)}});
        } else {
            children.push_back(json{{"activity", activity_to_json(std::get<Activity>(child.value))}});
        }
    }
    return json{{"id", process.id},
                {"criticality", std::string(criticality_name(process.criticality))},
                {"children", std::move(children)}};
}

}  // namespace

std::string to_interchange(const Model& model) {
    json doc;
    doc["schema_version"] = 1;
    doc["fingerprint"] = fingerprint_string(model.fingerprint);

    json processes = json::array();
    for (const Process& p : model.processes) processes.push_back(process_to_json(p));
    doc["processes"] = std::move(processes);

    json applications = json::array();
    for (const Application& app : model.applications) {
        json quality = json::object();
        for (const auto& [factor, score] : app.quality) {
            quality[std::string(quality_factor_name(factor))] = score;
        }
        json functionalities = json::array();
        for (const auto& fn : app.functionalities) functionalities.push_back(fn);
        applications.push_back(json{{"id", app.id},
                                    {"functionalities", std::move(functionalities)},
                                    {"quality", std::move(quality)},
                                    {"runs_on", refs_to_json(app.runs_on)},
                                    {"accesses", refs_to_json(app.accesses)}});
    }
    doc["applications"] = std::move(applications);

    json data_sources = json::array();
    for (const DataSource& ds : model.data_sources) {
        json entities = json::array();
        for (const InformationEntity& entity : ds.entities) {
            json attributes = json::array();
            for (const Attribute& attr : entity.attributes) {
                json qualifiers = json::array();
                for (AttributeQualifier q : attr.qualifiers) {
                    qualifiers.push_back(std::string(qualifier_name(q)));
                }
                attributes.push_back(json{{"id", attr.id}, {"qualifiers", std::move(qualifiers)}});
            }
            entities.push_back(json{{"id", entity.id}, {"attributes", std::move(attributes)}});
        }
        data_sources.push_back(json{{"id", ds.id}, {"entities", std::move(entities)}});
    }
    doc["data_sources"] = std::move(data_sources);

    json oses = json::array();
    for (const OperatingSystem& os : model.operating_systems) oses.push_back(os.id);
    doc["operating_systems"] = std::move(oses);

    json techs = json::array();
    for (const Technology& tech : model.technologies) techs.push_back(tech.id);
    doc["technologies"] = std::move(techs);

    return doc.dump(2) + "\n";
}

namespace {

// Structural decode failure; aborts the decode and surfaces as one
// E000_MALFORMED_DOCUMENT issue.
struct DecodeError {
    std::string message;
};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw DecodeError{where + ": " + what};
}

const json& member(const json& obj, const std::string& where, const char* key) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
    return *it;
}

std::string get_string(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

const json& get_array(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array");
    return v;
}

RawRef parse_ref(const json& v, const std::string& where) {
    const std::string text = get_string(v, where);
    if (text.empty()) fail(where, "empty reference");
    RawRef ref;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = text.find('.', start);
        const std::string segment =
            dot == std::string::npos ? text.substr(start) : text.substr(start, dot - start);
        if (segment.empty()) fail(where, "reference '" + text + "' has an empty segment");
        ref.path.push_back(segment);
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return ref;
}

std::vector<RawRef> parse_refs(const json& v, const std::string& where) {
    std::vector<RawRef> refs;
    for (const json& item : get_array(v, where)) refs.push_back(parse_ref(item, where));
    return refs;
}

RawActivity parse_activity(const json& v, const std::string& where) {
    RawActivity activity;
    activity.id = get_string(member(v, where, "id"), where + ".id");
    activity.supported_by = parse_refs(member(v, where, "supported_by"), where + ".supported_by");
    activity.uses = parse_refs(member(v, where, "uses"), where + ".uses");
    return activity;
}

RawProcess parse_process(const json& v, const std::string& where) {
    RawProcess process;
    process.id = get_string(member(v, where, "id"), where + ".id");
    const std::string crit =
        get_string(member(v, where, "criticality"), where + ".criticality");
    auto level = criticality_from_name(crit);
    if (!level) fail(where + ".criticality", "unknown criticality '" + crit + "'");
    process.criticality = *level;
    for (const json& child : get_array(member(v, where, "children"), where + ".children")) {
        if (!child.is_object() || child.size() != 1) {
            fail(where + ".children", "expected {\"process\": ...} or {\"activity\": ...}");
        }
        if (child.contains("process")) {
            process.children.push_back(
                RawProcessNode{parse_process(child["process"], where + ".children")});
        } else if (child.contains("activity")) {
            process.children.push_back(
                RawProcessNode{parse_activity(child["activity"], where + ".children")});
        } else {
            fail(where + ".children", "expected {\"process\": ...} or {\"activity\": ...}");
        }
    }
    return process;
}

RawModel decode(const json& doc) {
    RawModel raw;
    for (const json& p : get_array(member(doc, "document", "processes"), "processes")) {
        raw.processes.push_back(parse_process(p, "processes"));
    }
    for (const json& a : get_array(member(doc, "document", "applications"), "applications")) {
        RawApplication app;
        app.id = get_string(member(a, "applications", "id"), "applications.id");
        for (const json& fn :
             get_array(member(a, "applications", "functionalities"), "applications.functionalities")) {
            app.functionalities.push_back(
                RawFunctionality{get_string(fn, "applications.functionalities"), std::nullopt});
        }
        const json& quality = member(a, "applications", "quality");
        if (!quality.is_object()) fail("applications.quality", "expected an object");
        for (auto it = quality.begin(); it != quality.end(); ++it) {
            auto factor = quality_factor_from_name(it.key());
            if (!factor) fail("applications.quality", "unknown quality factor '" + it.key() + "'");
            if (!it.value().is_number()) fail("applications.quality", "expected a number");
            app.quality.push_back(RawQualityEntry{*factor, it.value().get<double>(), std::nullopt});
        }
        app.runs_on = parse_refs(member(a, "applications", "runs_on"), "applications.runs_on");
        app.accesses = parse_refs(member(a, "applications", "accesses"), "applications.accesses");
        raw.applications.push_back(std::move(app));
    }
    for (const json& d : get_array(member(doc, "document", "data_sources"), "data_sources")) {
        RawDataSource ds;
        ds.id = get_string(member(d, "data_sources", "id"), "data_sources.id");
        for (const json& e : get_array(member(d, "data_sources", "entities"), "entities")) {
            RawEntity entity;
            entity.id = get_string(member(e, "entities", "id"), "entities.id");
            for (const json& at : get_array(member(e, "entities", "attributes"), "attributes")) {
                RawAttribute attr;
                attr.id = get_string(member(at, "attributes", "id"), "attributes.id");
                for (const json& q :
                     get_array(member(at, "attributes", "qualifiers"), "attributes.qualifiers")) {
                    auto qualifier = qualifier_from_name(get_string(q, "attributes.qualifiers"));
                    if (!qualifier) fail("attributes.qualifiers", "unknown qualifier");
                    attr.qualifiers.push_back(*qualifier);
                }
                entity.attributes.push_back(std::move(attr));
            }
            ds.entities.push_back(std::move(entity));
        }
        raw.data_sources.push_back(std::move(ds));
    }
    for (const json& os :
         get_array(member(doc, "document", "operating_systems"), "operating_systems")) {
        raw.operating_systems.push_back(RawPlatform{get_string(os, "operating_systems"), std::nullopt});
    }
    for (const json& tech : get_array(member(doc, "document", "technologies"), "technologies")) {
        raw.technologies.push_back(RawPlatform{get_string(tech, "technologies"), std::nullopt});
    }
    return raw;
}

}  // namespace

ResolveResult from_interchange(const std::string& text) {
    ResolveResult result;
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        result.issues.push_back(ValidationIssue{Severity::error,
                                                std::string(issue::malformed_document),
                                                std::nullopt, "", "document is not valid JSON"});
        return result;
    }
    try {
        RawModel raw = decode(doc);
        return resolve(raw);
    } catch (const DecodeError& e) {
        result.issues.push_back(ValidationIssue{Severity::error,
                                                std::string(issue::malformed_document),
                                                std::nullopt, "", e.message});
        return result;
    }
}

}  // namespace alignlint
