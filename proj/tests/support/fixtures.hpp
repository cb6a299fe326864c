#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "alignlint/model.hpp"
#include "alignlint/parser.hpp"
#include "alignlint/resolve.hpp"

namespace fixtures {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string source_dir() { return ALIGNLINT_SOURCE_DIR; }

inline std::string data_capture_path() { return source_dir() + "/examples/data_capture.eam"; }

inline std::string data_capture_text() { return read_file(data_capture_path()); }

inline alignlint::Model model_from(const std::string& text) {
    auto parsed = alignlint::parse(text);
    if (!parsed.ok()) throw std::runtime_error("fixture text does not parse");
    auto resolved = alignlint::resolve(*parsed.model);
    if (!resolved.ok()) throw std::runtime_error("fixture text does not resolve");
    return std::move(*resolved.model);
}

inline alignlint::Model data_capture_model() { return model_from(data_capture_text()); }

}  // namespace fixtures
