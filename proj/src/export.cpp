/* Copyright 2026 The taut Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <sstream>

#include <json.hpp>

#include "taut/export.hpp"

namespace taut {
namespace {

using Json = nlohmann::ordered_json;

std::string algebra_name(const ExchangeGraph& g) {
    const std::string& l = g.algebra->presentation().label();
    return l.empty() ? "A" : l;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

Json report_json(const ReachabilityReport& r) {
    Json j;
    j["property"] = r.property;
    j["subject"] = r.subject;
    j["verdict"] = to_string(r.verdict);
    Json ev = Json::object();
    for (const auto& [k, v] : r.evidence) ev[k] = v;
    j["evidence"] = ev;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.sub_reports.empty()) {
        Json subs = Json::array();
        for (const auto& s : r.sub_reports) subs.push_back(report_json(s));
        j["sub_reports"] = subs;
    }
    return j;
}

} // namespace

std::string graph_to_dot(const ExchangeGraph& g) {
    const Presentation& p = g.algebra->presentation();
    std::ostringstream os;
    os << "// algebra: " << algebra_name(g) << "\n";
    os << "// status: " << g.status() << "\n";
    os << "// vertices: " << g.vertices.size() << ", edges: " << g.edges.size() << "\n";
    os << "graph exchange {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        os << "  v" << v << " [label=" << quoted(format_pair(p, g.vertices[v])) << "];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.from << " -- v" << e.to << " [label="
           << quoted(format_summand(p, e.removed) + " / " + format_summand(p, e.added)) << "];\n";
    os << "}\n";
    return os.str();
}

std::string graph_to_jsonl(const ExchangeGraph& g) {
    const Presentation& p = g.algebra->presentation();
    std::ostringstream os;
    Json head;
    head["type"] = "graph";
    head["algebra"] = algebra_name(g);
    head["status"] = g.status();
    head["vertices"] = g.vertices.size();
    head["edges"] = g.edges.size();
    head["components"] = g.components().size();
    os << head.dump() << "\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        Json j;
        j["type"] = "vertex";
        j["id"] = v;
        j["label"] = format_pair(p, g.vertices[v]);
        Json mods = Json::array(), supps = Json::array();
        for (const auto& w : g.vertices[v].modules()) mods.push_back(format_word(p, w));
        for (auto s : g.vertices[v].supports()) supps.push_back(p.quiver().vertex_name(s));
        j["modules"] = mods;
        j["supports"] = supps;
        os << j.dump() << "\n";
    }
    for (const auto& e : g.edges) {
        Json j;
        j["type"] = "edge";
        j["from"] = e.from;
        j["to"] = e.to;
        j["removed"] = format_summand(p, e.removed);
        j["added"] = format_summand(p, e.added);
        os << j.dump() << "\n";
    }
    return os.str();
}

std::string graph_to_text(const ExchangeGraph& g) {
    const Presentation& p = g.algebra->presentation();
    std::ostringstream os;
    os << "algebra: " << algebra_name(g) << "\n";
    os << "status: " << g.status() << "\n";
    os << "vertices: " << g.vertices.size() << "\n";
    os << "edges: " << g.edges.size() << "\n";
    os << "components: " << g.components().size() << "\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) os << "v" << v << ": " << format_pair(p, g.vertices[v]) << "\n";
    for (const auto& e : g.edges)
        os << "v" << e.from << " -- v" << e.to << ": " << format_summand(p, e.removed) << " / "
           << format_summand(p, e.added) << "\n";
    return os.str();
}

std::string report_to_json(const ReachabilityReport& r) { return report_json(r).dump(); }

} // namespace taut
