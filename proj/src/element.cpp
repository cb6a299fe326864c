#include "alignlint/element.hpp"

namespace alignlint {

std::string_view kind_name(ElementKind kind) {
    switch (kind) {
        case ElementKind::process: return "process";
        case ElementKind::activity: return "activity";
        case ElementKind::application: return "application";
        case ElementKind::functionality: return "functionality";
        case ElementKind::data_source: return "data_source";
        case ElementKind::information_entity: return "information_entity";
        case ElementKind::attribute: return "attribute";
        case ElementKind::operating_system: return "operating_system";
        case ElementKind::technology: return "technology";
    }
    return "unknown";
}

namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_id_char(char c) { return is_letter(c) || (c >= '0' && c <= '9') || c == '_'; }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

bool is_valid_element_id(std::string_view id) {
    if (id.empty() || !is_letter(id.front())) return false;
    for (char c : id) {
        if (!is_id_char(c)) return false;
    }
    return true;
}

std::string ElementRef::path_string() const { return join(path, "."); }

std::string ElementRef::node_id() const { return join(path, "__"); }

}  // namespace alignlint
