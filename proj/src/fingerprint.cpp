#include <charconv>
#include <cstdint>
#include <string_view>

#include "alignlint/model.hpp"

namespace alignlint {

namespace {

// FNV-1a 64-bit over a tagged, length-prefixed field stream. Field tags and
// counts make the encoding prefix-free, so distinct structures cannot
// collide by concatenation.
struct Hasher {
    std::uint64_t state = 1469598103934665603ull;

    void bytes(std::string_view data) {
        for (unsigned char c : data) {
            state ^= c;
            state *= 1099511628211ull;
        }
    }

    void tag(char c) { bytes(std::string_view(&c, 1)); }

    void str(std::string_view s) {
        number(static_cast<std::uint64_t>(s.size()));
        bytes(s);
    }

    void number(std::uint64_t v) {
        char buf[24];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
        bytes(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
        tag(';');
    }

    void real(double v) {
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
        bytes(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
        tag(';');
    }

    void ref(const ElementRef& r) {
        tag('r');
        number(r.path.size());
        for (const auto& seg : r.path) str(seg);
    }

    void refs(const std::vector<ElementRef>& rs) {
        number(rs.size());
        for (const auto& r : rs) ref(r);
    }
};

void hash_process(Hasher& h, const Process& process) {
    h.tag('P');
    h.str(process.id);
    h.number(static_cast<std::uint64_t>(process.criticality));
    h.number(process.children.size());
    for (const ProcessNode& child : process.children) {
        if (const auto* sub = std::get_if<Process>(&child.value)) {
            hash_process(h, *sub);
        } else {
            const auto& activity = std::get<Activity>(child.value);
            h.tag('A');
            h.str(activity.id);
            h.refs(activity.supported_by);
            h.refs(activity.uses);
        }
    }
}

}  // namespace

std::uint64_t compute_fingerprint(const Model& model) {
    Hasher h;
    h.number(model.processes.size());
    for (const Process& process : model.processes) hash_process(h, process);

    h.number(model.applications.size());
    for (const Application& app : model.applications) {
        h.tag('p');
        h.str(app.id);
        h.number(app.functionalities.size());
        for (const auto& fn : app.functionalities) h.str(fn);
        h.number(app.quality.size());
        for (const auto& [factor, score] : app.quality) {
            h.str(quality_factor_name(factor));
            h.real(score);
        }
        h.refs(app.runs_on);
        h.refs(app.accesses);
    }

    h.number(model.data_sources.size());
    for (const DataSource& ds : model.data_sources) {
        h.tag('D');
        h.str(ds.id);
        h.number(ds.entities.size());
        for (const InformationEntity& entity : ds.entities) {
            h.tag('E');
            h.str(entity.id);
            h.number(entity.attributes.size());
            for (const Attribute& attr : entity.attributes) {
                h.tag('a');
                h.str(attr.id);
                h.number(attr.qualifiers.size());
                for (AttributeQualifier q : attr.qualifiers) {
                    h.number(static_cast<std::uint64_t>(q));
                }
            }
        }
    }

    h.number(model.operating_systems.size());
    for (const OperatingSystem& os : model.operating_systems) {
        h.tag('O');
        h.str(os.id);
    }
    h.number(model.technologies.size());
    for (const Technology& tech : model.technologies) {
        h.tag('T');
        h.str(tech.id);
    }
    return h.state;
}

std::string fingerprint_string(std::uint64_t fingerprint) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[fingerprint & 0xF];
        fingerprint >>= 4;
    }
    return out;
}

}  // namespace alignlint
