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
// Line-oriented presentation format:
//
//   name: A3                       (optional)
//   vertices: 1 2 3
//   arrows: a: 1 -> 2; b: 2 -> 3   (or one "id: src -> tgt" per line)
//   relations: a b                 (first then second is zero; "(none)" allowed)
//
// A keyword line opens a section; following lines without a keyword continue it.

#include <cctype>
#include <map>
#include <sstream>

#include "taut/algebra.hpp"
#include "taut/errors.hpp"

namespace taut {
namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        if (std::string_view(":;#~,()<>").find(c) != std::string_view::npos) return false;
    }
    return true;
}

// Splits `s` (which starts at 1-based column `col`) on `sep`, keeping columns.
std::vector<Token> split(std::string_view s, std::size_t col, char sep) {
    std::vector<Token> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back({std::string(s.substr(start, i - start)), col + start});
            start = i + 1;
        }
    }
    return out;
}

std::vector<Token> words(const Token& t) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto& s = t.text;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back({s.substr(i, j - i), t.column + i});
        i = j;
    }
    return out;
}

Token trim(const Token& t) {
    std::size_t b = 0, e = t.text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(t.text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(t.text[e - 1]))) --e;
    return {t.text.substr(b, e - b), t.column + b};
}

struct PendingArrow {
    Token name, source, target;
    std::size_t line;
};

struct PendingRelation {
    Token first, second;
    std::size_t line;
};

} // namespace

Presentation parse_algebra(std::string_view text) {
    enum class Section { none, vertices, arrows, relations };
    Section section = Section::none;
    std::string label = "A";
    std::vector<std::pair<Token, std::size_t>> vertex_tokens;
    std::vector<PendingArrow> arrows;
    std::vector<PendingRelation> relations;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Token line = trim({raw, 1});
        if (line.text.empty()) continue;

        static const std::pair<const char*, Section> keywords[] = {
            {"vertices", Section::vertices}, {"arrows", Section::arrows}, {"relations", Section::relations}};
        bool keyword = false;
        for (const auto& [kw, sec] : keywords) {
            const std::string k = std::string(kw) + ":";
            if (line.text.rfind(k, 0) == 0) {
                section = sec;
                line = trim({line.text.substr(k.size()), line.column + k.size()});
                keyword = true;
                break;
            }
        }
        if (!keyword && line.text.rfind("name:", 0) == 0) {
            label = trim({line.text.substr(5), line.column + 5}).text;
            if (label.empty()) throw ParseError(line_no, line.column + 5, "empty algebra name");
            section = Section::none;
            continue;
        }
        if (line.text.empty()) continue;

        switch (section) {
        case Section::none:
            throw ParseError(line_no, line.column, "expected 'vertices:', 'arrows:', 'relations:' or 'name:'");
        case Section::vertices:
            for (const auto& w : words(line)) {
                if (!is_identifier(w.text)) throw ParseError(line_no, w.column, "invalid identifier '" + w.text + "'");
                vertex_tokens.push_back({w, line_no});
            }
            break;
        case Section::arrows:
            for (const auto& item : split(line.text, line.column, ';')) {
                Token it = trim(item);
                if (it.text.empty()) continue;
                const auto colon = it.text.find(':');
                if (colon == std::string::npos) throw ParseError(line_no, it.column, "expected '<id>: <src> -> <tgt>'");
                Token name = trim({it.text.substr(0, colon), it.column});
                Token rest = {it.text.substr(colon + 1), it.column + colon + 1};
                const auto arrow = rest.text.find("->");
                if (arrow == std::string::npos) throw ParseError(line_no, rest.column, "expected '->'");
                Token src = trim({rest.text.substr(0, arrow), rest.column});
                Token tgt = trim({rest.text.substr(arrow + 2), rest.column + arrow + 2});
                for (const Token* t : {&name, &src, &tgt})
                    if (!is_identifier(t->text))
                        throw ParseError(line_no, t->column, "invalid identifier '" + t->text + "'");
                arrows.push_back({name, src, tgt, line_no});
            }
            break;
        case Section::relations:
            if (line.text == "(none)") break;
            for (const auto& item : split(line.text, line.column, ';')) {
                auto ws = words(item);
                if (ws.empty()) continue;
                if (ws.size() != 2)
                    throw ParseError(line_no, ws.front().column,
                                     "relations must be length-2 monomials '<arrow> <arrow>'");
                relations.push_back({ws[0], ws[1], line_no});
            }
            break;
        }
    }

    std::vector<std::string> vertex_names;
    std::map<std::string, VertexId> vertex_index;
    std::map<std::string, std::size_t> all_ids;
    for (const auto& [tok, ln] : vertex_tokens) {
        if (all_ids.count(tok.text)) throw ParseError(ln, tok.column, "duplicate identifier '" + tok.text + "'");
        all_ids[tok.text] = ln;
        vertex_index[tok.text] = vertex_names.size();
        vertex_names.push_back(tok.text);
    }
    std::vector<Arrow> arrow_list;
    std::map<std::string, ArrowId> arrow_index;
    for (const auto& a : arrows) {
        if (all_ids.count(a.name.text))
            throw ParseError(a.line, a.name.column, "duplicate identifier '" + a.name.text + "'");
        all_ids[a.name.text] = a.line;
        auto s = vertex_index.find(a.source.text);
        if (s == vertex_index.end()) throw ParseError(a.line, a.source.column, "unknown vertex '" + a.source.text + "'");
        auto t = vertex_index.find(a.target.text);
        if (t == vertex_index.end()) throw ParseError(a.line, a.target.column, "unknown vertex '" + a.target.text + "'");
        arrow_index[a.name.text] = arrow_list.size();
        arrow_list.push_back({a.name.text, s->second, t->second});
    }
    std::vector<Relation> rels;
    for (const auto& r : relations) {
        auto f = arrow_index.find(r.first.text);
        if (f == arrow_index.end()) throw ParseError(r.line, r.first.column, "unknown arrow '" + r.first.text + "'");
        auto g = arrow_index.find(r.second.text);
        if (g == arrow_index.end()) throw ParseError(r.line, r.second.column, "unknown arrow '" + r.second.text + "'");
        if (arrow_list[f->second].target != arrow_list[g->second].source)
            throw ParseError(r.line, r.first.column,
                             "relation '" + r.first.text + " " + r.second.text + "' is not a composable path");
        rels.push_back({f->second, g->second});
    }

    Presentation pres(label, Quiver(std::move(vertex_names), std::move(arrow_list)), std::move(rels));
    if (auto cycle = pres.composition_cycle(); !cycle.empty()) {
        const auto& first = arrows[cycle.front()];
        std::string names;
        for (auto a : cycle) names += (names.empty() ? "" : " ") + pres.quiver().arrow(a).name;
        throw ParseError(first.line, first.name.column,
                         "infinite-dimensional presentation: arrows [" + names + "] compose in a cycle");
    }
    return pres;
}

std::string format_algebra(const Presentation& alg) {
    std::ostringstream os;
    const Quiver& q = alg.quiver();
    os << "name: " << alg.label() << '\n';
    os << "vertices:";
    for (const auto& v : q.vertex_names()) os << ' ' << v;
    os << '\n';
    os << "arrows:";
    if (q.num_arrows() == 0) os << '\n';
    else {
        os << '\n';
        for (const auto& a : q.arrows())
            os << "  " << a.name << ": " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target) << '\n';
    }
    os << "relations:";
    if (alg.relations().empty()) os << " (none)\n";
    else {
        os << '\n';
        for (const auto& r : alg.relations()) os << "  " << q.arrow(r.first).name << ' ' << q.arrow(r.second).name << '\n';
    }
    return os.str();
}

} // namespace taut
