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
// String combinatorics: walks, canonical forms, enumeration and string modules.

#include <algorithm>
#include <sstream>

#include "taut/errors.hpp"
#include "taut/module.hpp"

namespace taut {
namespace {

VertexId letter_start(const Quiver& q, const Letter& l) {
    return l.inverse ? q.arrow(l.arrow).target : q.arrow(l.arrow).source;
}

VertexId letter_end(const Quiver& q, const Letter& l) {
    return l.inverse ? q.arrow(l.arrow).source : q.arrow(l.arrow).target;
}

// Whether `next` may follow `prev` in a string.
bool may_follow(const Presentation& alg, const Letter& prev, const Letter& next) {
    const Quiver& q = alg.quiver();
    if (letter_end(q, prev) != letter_start(q, next)) return false;
    if (prev.arrow == next.arrow && prev.inverse != next.inverse) return false;
    if (!prev.inverse && !next.inverse && alg.is_relation(prev.arrow, next.arrow)) return false;
    if (prev.inverse && next.inverse && alg.is_relation(next.arrow, prev.arrow)) return false;
    return true;
}

} // namespace

StringWord StringWord::from_letters(const Quiver& q, std::vector<Letter> letters) {
    if (letters.empty()) throw AlgebraError("use StringWord::trivial for the empty word");
    for (const auto& l : letters)
        if (l.arrow >= q.num_arrows()) throw AlgebraError("letter refers to an unknown arrow");
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letter_end(q, letters[i - 1]) != letter_start(q, letters[i]))
            throw AlgebraError("letters do not form a walk");
    const VertexId s = letter_start(q, letters.front());
    const VertexId e = letter_end(q, letters.back());
    return StringWord(s, e, std::move(letters));
}

StringWord StringWord::inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (auto& l : inv) l.inverse = !l.inverse;
    return StringWord(end_, start_, std::move(inv));
}

StringWord StringWord::canonical() const {
    if (letters_.empty()) return *this;
    StringWord inv = inverse();
    return inv.letters_ < letters_ ? inv : *this;
}

std::vector<VertexId> StringWord::walk(const Quiver& q) const {
    std::vector<VertexId> out{start_};
    for (const auto& l : letters_) out.push_back(letter_end(q, l));
    return out;
}

std::strong_ordering operator<=>(const StringWord& a, const StringWord& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
    return a.start_ <=> b.start_;
}

std::string word_defect(const Presentation& alg, const StringWord& w) {
    const Quiver& q = alg.quiver();
    if (w.is_trivial()) return w.start() < q.num_vertices() ? "" : "unknown vertex";
    for (std::size_t i = 1; i < w.letters().size(); ++i) {
        const auto& prev = w.letters()[i - 1];
        const auto& next = w.letters()[i];
        if (letter_end(q, prev) != letter_start(q, next)) return "letters do not form a walk";
        if (prev.arrow == next.arrow && prev.inverse != next.inverse)
            return "word is not reduced at letter " + std::to_string(i + 1);
        if (!prev.inverse && !next.inverse && alg.is_relation(prev.arrow, next.arrow))
            return "contains the relation " + q.arrow(prev.arrow).name + " " + q.arrow(next.arrow).name;
        if (prev.inverse && next.inverse && alg.is_relation(next.arrow, prev.arrow))
            return "contains the inverse of the relation " + q.arrow(next.arrow).name + " " + q.arrow(prev.arrow).name;
    }
    return "";
}

std::string format_word(const Presentation& alg, const StringWord& w) {
    const Quiver& q = alg.quiver();
    if (w.is_trivial()) return "S" + q.vertex_name(w.start());
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += q.arrow(l.arrow).name;
        if (l.inverse) out += '~';
    }
    return out;
}

StringWord parse_word(const Presentation& alg, std::string_view text) {
    const Quiver& q = alg.quiver();
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) throw AlgebraError("empty word");
    if (tokens.size() == 1) {
        const std::string& t = tokens.front();
        std::string bare = t;
        if (!bare.empty() && bare.back() == '~') bare.pop_back();
        if (!q.find_arrow(bare) && t.size() > 1 && (t[0] == 'S' || t[0] == 'e')) {
            if (auto v = q.find_vertex(std::string_view(t).substr(1))) return StringWord::trivial(*v);
        }
    }
    std::vector<Letter> letters;
    for (auto t : tokens) {
        bool inv = false;
        if (!t.empty() && t.back() == '~') {
            inv = true;
            t.pop_back();
        }
        auto a = q.find_arrow(t);
        if (!a) throw AlgebraError("unknown arrow '" + t + "' in word '" + std::string(text) + "'");
        letters.push_back({*a, inv});
    }
    StringWord w = StringWord::from_letters(q, std::move(letters));
    if (auto why = word_defect(alg, w); !why.empty())
        throw AlgebraError("invalid string '" + std::string(text) + "': " + why);
    return w;
}

Representation string_module(const AlgebraPtr& alg, const StringWord& w) {
    const Quiver& q = alg->quiver();
    if (auto why = word_defect(alg->presentation(), w); !why.empty())
        throw AlgebraError("invalid string '" + format_word(alg->presentation(), w) + "': " + why);
    const auto walk = w.walk(q);
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    std::vector<std::size_t> slot(walk.size());
    for (std::size_t i = 0; i < walk.size(); ++i) slot[i] = dims[walk[i]]++;
    std::vector<Matrix> maps;
    for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.target], dims[ar.source]);
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        const auto& l = w.letters()[i];
        if (!l.inverse) maps[l.arrow](slot[i + 1], slot[i]) = 1;
        else maps[l.arrow](slot[i], slot[i + 1]) = 1;
    }
    return Representation(alg, std::move(dims), std::move(maps));
}

std::vector<StringWord> enumerate_strings(const Presentation& alg, std::size_t max_letters) {
    const Quiver& q = alg.quiver();
    std::vector<StringWord> out;
    for (VertexId v = 0; v < q.num_vertices(); ++v) out.push_back(StringWord::trivial(v));
    std::vector<Letter> current;
    auto grow = [&](auto&& self) -> void {
        StringWord w = StringWord::from_letters(q, current);
        if (w.is_canonical()) out.push_back(std::move(w));
        if (current.size() == max_letters) return;
        for (ArrowId a = 0; a < q.num_arrows(); ++a)
            for (bool inv : {false, true}) {
                Letter next{a, inv};
                if (!may_follow(alg, current.back(), next)) continue;
                current.push_back(next);
                self(self);
                current.pop_back();
            }
    };
    if (max_letters > 0)
        for (ArrowId a = 0; a < q.num_arrows(); ++a)
            for (bool inv : {false, true}) {
                current = {{a, inv}};
                grow(grow);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<StringWord> projective_word(const Algebra& alg, VertexId v) {
    const Quiver& q = alg.quiver();
    // Maximal paths out of v.
    std::vector<std::size_t> maximal;
    for (VertexId w = 0; w < q.num_vertices(); ++w)
        for (std::size_t p : alg.paths_between(v, w)) {
            bool extendable = false;
            for (ArrowId a : q.arrows_from(w))
                if (alg.extend(p, a)) extendable = true;
            if (!extendable) maximal.push_back(p);
        }
    if (maximal.size() > 2) return std::nullopt;
    if (maximal.size() == 1 && alg.path(maximal[0]).arrows.empty()) return StringWord::trivial(v);
    std::vector<Letter> letters;
    if (maximal.size() == 2) {
        const auto& first = alg.path(maximal[0]).arrows;
        for (auto it = first.rbegin(); it != first.rend(); ++it) letters.push_back({*it, true});
    }
    for (ArrowId a : alg.path(maximal.back()).arrows) letters.push_back({a, false});
    StringWord w = StringWord::from_letters(q, std::move(letters));
    if (!word_defect(alg.presentation(), w).empty()) return std::nullopt;
    return w.canonical();
}

} // namespace taut
