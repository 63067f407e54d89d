#include "mgs/io.hpp"

#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace mgs {

using nlohmann::json;

namespace {

json quiver_to_json_value(const IceQuiver& q) {
    json vertices = json::array();
    for (const Vertex& v : q.vertices()) {
        vertices.push_back({{"id", v.id}, {"label", v.label}, {"frozen", v.frozen}});
    }
    json arrows = json::array();
    for (const Arrow& a : q.arrows()) {
        arrows.push_back({{"src", a.src}, {"dst", a.dst}, {"mult", a.mult}});
    }
    return json{{"version", kQuiverDocumentVersion},
                {"vertices", std::move(vertices)},
                {"arrows", std::move(arrows)}};
}

long long require_int(const json& obj, const char* field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end() || !it->is_number_integer()) {
        throw DocumentError(where + ": missing or non-integer field '" + field + "'");
    }
    return it->get<long long>();
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

const char* dot_fill(VertexColor c) {
    switch (c) {
    case VertexColor::Green: return "palegreen";
    case VertexColor::Red: return "lightcoral";
    case VertexColor::Mixed: return "khaki";
    }
    return "white";
}

} // namespace

std::string quiver_to_json(const IceQuiver& q) {
    return quiver_to_json_value(q).dump(2) + "\n";
}

IceQuiver quiver_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("quiver document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw DocumentError("quiver document must be a JSON object");
    }
    const auto version = doc.find("version");
    if (version == doc.end() || !version->is_number_integer()) {
        throw DocumentError("quiver document: mandatory integer field 'version' is missing");
    }
    if (version->get<int>() != kQuiverDocumentVersion) {
        throw DocumentError("quiver document: unsupported version " + version->dump());
    }
    const auto vertices = doc.find("vertices");
    const auto arrows = doc.find("arrows");
    if (vertices == doc.end() || !vertices->is_array()) {
        throw DocumentError("quiver document: 'vertices' must be an array");
    }
    if (arrows == doc.end() || !arrows->is_array()) {
        throw DocumentError("quiver document: 'arrows' must be an array");
    }

    IceQuiver q;
    std::unordered_map<long long, VertexId> dense; // document id -> internal id
    for (std::size_t i = 0; i < vertices->size(); ++i) {
        const json& entry = (*vertices)[i];
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (!entry.is_object()) throw DocumentError(where + ": must be an object");
        const long long id = require_int(entry, "id", where);
        if (id < 0) throw DocumentError(where + ": id must be non-negative");
        auto label = entry.find("label");
        if (label == entry.end() || !label->is_string() || label->get<std::string>().empty()) {
            throw DocumentError(where + ": 'label' must be a nonempty string");
        }
        auto frozen = entry.find("frozen");
        if (frozen == entry.end() || !frozen->is_boolean()) {
            throw DocumentError(where + ": 'frozen' must be a boolean");
        }
        if (dense.count(id)) {
            throw DocumentError(where + ": duplicate vertex id " + std::to_string(id));
        }
        try {
            dense.emplace(id, q.add_vertex(label->get<std::string>(), frozen->get<bool>()));
        } catch (const QuiverError& e) {
            throw DocumentError(where + ": " + e.what());
        }
    }
    for (std::size_t i = 0; i < arrows->size(); ++i) {
        const json& entry = (*arrows)[i];
        const std::string where = "arrows[" + std::to_string(i) + "]";
        if (!entry.is_object()) throw DocumentError(where + ": must be an object");
        const long long src = require_int(entry, "src", where);
        const long long dst = require_int(entry, "dst", where);
        const long long mult = require_int(entry, "mult", where);
        const auto s = dense.find(src);
        const auto d = dense.find(dst);
        if (s == dense.end()) {
            throw DocumentError(where + ": unknown src vertex id " + std::to_string(src));
        }
        if (d == dense.end()) {
            throw DocumentError(where + ": unknown dst vertex id " + std::to_string(dst));
        }
        if (mult < 1 || mult > std::numeric_limits<int>::max()) {
            throw DocumentError(where + ": 'mult' must be a positive integer");
        }
        try {
            q.add_arrow(s->second, d->second, static_cast<int>(mult));
        } catch (const QuiverError& e) {
            throw DocumentError(where + ": " + e.what());
        }
    }
    for (const std::string& violation : q.validate()) {
        throw DocumentError("quiver document: " + violation);
    }
    return q;
}

MutationSequence sequence_from_text(const std::string& text) {
    MutationSequence seq;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::string token;
        while (words >> token) seq.steps.push_back(token);
    }
    return seq;
}

std::string sequence_to_text(const MutationSequence& seq) {
    std::string out;
    for (const std::string& s : seq.steps) {
        out += s;
        out += '\n';
    }
    return out;
}

std::string quiver_to_dot(const IceQuiver& q) {
    std::string out = "digraph quiver {\n";
    const auto colors = q.colors();
    for (const Vertex& v : q.vertices()) {
        out += "  " + dot_quote(v.label);
        if (v.frozen) {
            out += " [shape=box, style=filled, fillcolor=lightblue]";
        } else {
            out += " [shape=ellipse, style=filled, fillcolor=";
            out += dot_fill(colors.at(v.label));
            out += "]";
        }
        out += ";\n";
    }
    for (const Arrow& a : q.arrows()) {
        out += "  " + dot_quote(q.vertex(a.src).label) + " -> " +
               dot_quote(q.vertex(a.dst).label);
        if (a.mult != 1) {
            out += " [label=" + dot_quote(std::to_string(a.mult)) + "]";
        }
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string report_to_json(const VerificationReport& report) {
    json histogram = {{"green", 0}, {"red", 0}, {"mixed", 0}};
    for (const auto& [label, color] : report.final_colors) {
        histogram[to_string(color)] = histogram[to_string(color)].get<int>() + 1;
    }
    json doc = {{"accepted", report.accepted},
                {"sequence_length", report.sequence_length},
                {"final_colors", std::move(histogram)}};
    if (report.failure_step) doc["failure_step"] = *report.failure_step;
    if (report.failure_kind) doc["failure_kind"] = to_string(*report.failure_kind);
    return doc.dump(2) + "\n";
}

std::string trace_to_json(const Trace& trace) {
    json entries = json::array();
    for (const Trace::Entry& entry : trace.entries) {
        json colors = json::object();
        for (const auto& [label, color] : entry.colors) colors[label] = to_string(color);
        entries.push_back({{"mutated", entry.label},
                           {"colors", std::move(colors)},
                           {"quiver", quiver_to_json_value(entry.resulting)}});
    }
    json doc = {{"initial", quiver_to_json_value(trace.initial)},
                {"entries", std::move(entries)}};
    return doc.dump(2) + "\n";
}

} // namespace mgs
