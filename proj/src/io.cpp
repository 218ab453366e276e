/*
 * Copyright 2026 The pst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pst/io.hpp"

#include "pst/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace pst {

namespace {

class Lexer
{
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    /** Skips blanks, newlines and '#' comments. */
    void skip()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    /** Skips blanks on the current line only. */
    void skipBlanks()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) advance();
    }

    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return atEnd() ? '\0' : text_[pos_]; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    ParseError error(const std::string& message) const { return ParseError(line_, column_, message); }

    std::uint64_t number(const char* what)
    {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw error(std::string("expected ") + what);
        const std::size_t start = pos_;
        const std::size_t line = line_;
        const std::size_t column = column_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc() || value > std::numeric_limits<std::uint32_t>::max()) {
            throw ParseError(line, column, std::string(what) + " out of range");
        }
        return value;
    }

    std::vector<std::uint64_t> numberList(const char* what)
    {
        std::vector<std::uint64_t> out{number(what)};
        while (peek() == ',') {
            advance();
            skipBlanks();
            out.push_back(number(what));
        }
        return out;
    }

    std::string word()
    {
        std::string out;
        while (std::isalpha(static_cast<unsigned char>(peek()))) {
            out += peek();
            advance();
        }
        return out;
    }

    std::string quoted()
    {
        advance();
        std::string out;
        while (!atEnd() && peek() != '"') {
            if (peek() == '\n') throw error("unterminated vertex name");
            out += peek();
            advance();
        }
        if (atEnd()) throw error("unterminated vertex name");
        advance();
        return out;
    }

    void expect(char c, const char* what)
    {
        if (peek() != c) throw error(std::string("expected ") + what);
        advance();
    }

private:
    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

std::string
trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<Edge>
edgesIn(const GameGraph& g, std::string_view text)
{
    static const std::regex edgeRe(R"(\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\))");
    std::vector<Edge> edges;
    const std::string s(text);
    std::size_t consumed = 0;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), edgeRe); it != std::sregex_iterator(); ++it) {
        const std::string between = s.substr(consumed, it->position() - consumed);
        if (between.find_first_not_of(" \t,") != std::string::npos) {
            throw InvalidInputError("malformed edge list near '" + trim(between) + "'");
        }
        const VertexId u = resolveVertex(g, (*it)[1].str());
        const VertexId v = resolveVertex(g, (*it)[2].str());
        edges.push_back({u, v});
        consumed = it->position() + it->length();
    }
    if (s.substr(consumed).find_first_not_of(" \t\r,") != std::string::npos) {
        throw InvalidInputError("malformed edge list near '" + trim(s.substr(consumed)) + "'");
    }
    return edges;
}

std::vector<std::string>
splitLines(std::string_view text)
{
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

} // namespace

Game
parseGame(std::string_view text)
{
    Lexer lex(text);
    lex.skip();
    if (lex.atEnd()) throw lex.error("empty input");

    const std::string kind = lex.word();
    if (kind != "parity" && kind != "genparity") throw lex.error("expected 'parity' or 'genparity' header");
    lex.skipBlanks();
    const std::uint64_t maxId = lex.number("maximal vertex id");
    std::size_t k = 1;
    if (kind == "genparity") {
        lex.skipBlanks();
        k = lex.number("objective count");
        if (k == 0) throw lex.error("objective count must be positive");
    }
    lex.skipBlanks();
    lex.expect(';', "';' after header");

    const std::size_t n = maxId + 1;
    std::vector<char> declared(n, 0);
    std::vector<Player> owner(n, Player::Zero);
    std::vector<std::vector<Priority>> prio(k, std::vector<Priority>(n, 0));
    std::vector<std::vector<VertexId>> succ(n);
    std::vector<std::optional<std::string>> names(n);
    std::map<std::string, std::size_t> nameLines;

    while (true) {
        lex.skip();
        if (lex.atEnd()) break;
        if (std::isalpha(static_cast<unsigned char>(lex.peek()))) {
            if (lex.word() != "start") throw lex.error("unknown keyword");
            lex.skipBlanks();
            lex.number("start vertex");
            lex.skipBlanks();
            lex.expect(';', "';'");
            continue;
        }
        const std::size_t recordLine = lex.line();
        const std::size_t recordColumn = lex.column();
        const std::uint64_t id = lex.number("vertex id");
        if (id > maxId) throw ParseError(recordLine, recordColumn, "vertex id exceeds declared maximum");
        if (declared[id]) throw ParseError(recordLine, recordColumn, "vertex " + std::to_string(id) + " declared twice");
        declared[id] = 1;

        lex.skipBlanks();
        const std::size_t prioColumn = lex.column();
        auto ps = lex.numberList("priority");
        if (ps.size() != k) {
            throw ParseError(lex.line(), prioColumn,
                             "expected " + std::to_string(k) + " priorities, found " + std::to_string(ps.size()));
        }
        for (std::size_t i = 0; i < k; ++i) prio[i][id] = static_cast<Priority>(ps[i]);

        lex.skipBlanks();
        const std::size_t ownerColumn = lex.column();
        const std::uint64_t who = lex.number("owner");
        if (who > 1) throw ParseError(lex.line(), ownerColumn, "owner must be 0 or 1");
        owner[id] = who == 0 ? Player::Zero : Player::One;

        lex.skipBlanks();
        if (!std::isdigit(static_cast<unsigned char>(lex.peek()))) throw lex.error("missing successor list");
        const std::size_t succColumn = lex.column();
        for (auto t : lex.numberList("successor")) {
            if (t > maxId) throw ParseError(lex.line(), succColumn, "successor " + std::to_string(t) + " out of range");
            succ[id].push_back(static_cast<VertexId>(t));
        }

        lex.skipBlanks();
        if (lex.peek() == '"') {
            const std::size_t nameColumn = lex.column();
            std::string name = lex.quoted();
            if (name.empty()) throw ParseError(lex.line(), nameColumn, "empty vertex name");
            if (!nameLines.emplace(name, lex.line()).second) {
                throw ParseError(lex.line(), nameColumn, "duplicate vertex name \"" + name + "\"");
            }
            names[id] = std::move(name);
            lex.skipBlanks();
        }
        lex.expect(';', "';' at end of record");
    }

    for (std::size_t v = 0; v < n; ++v) {
        if (!declared[v]) throw lex.error("vertex " + std::to_string(v) + " is never declared");
    }

    const bool anyName = !nameLines.empty();
    GameGraphBuilder builder(n);
    for (VertexId v = 0; v < n; ++v) {
        builder.setOwner(v, owner[v]);
        for (auto w : succ[v]) builder.addEdge(v, w);
        if (anyName) {
            std::string name = names[v] ? *names[v] : std::to_string(v);
            if (!names[v] && nameLines.count(name)) {
                throw lex.error("unnamed vertex " + name + " collides with a vertex name");
            }
            builder.setName(v, std::move(name));
        }
    }

    Game game;
    game.graph = builder.build();
    for (auto& column : prio) game.objectives.emplace_back(std::move(column));
    return game;
}

Game
readGameFile(const std::string& path)
{
    return parseGame(readTextFile(path));
}

std::string
emitGame(const Game& game)
{
    const GameGraph& g = game.graph;
    const std::size_t k = game.objectives.size();
    if (k == 0) throw InvalidInputError("a game needs at least one objective");
    if (g.vertexCount() == 0) throw InvalidInputError("cannot write a game without vertices");
    std::ostringstream out;
    if (k == 1) {
        out << "parity " << g.vertexCount() - 1 << ";\n";
    } else {
        out << "genparity " << g.vertexCount() - 1 << ' ' << k << ";\n";
    }
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
        out << v << ' ';
        for (std::size_t i = 0; i < k; ++i) out << (i ? "," : "") << game.objectives[i][v];
        out << ' ' << (g.owner(v) == Player::Zero ? 0 : 1) << ' ';
        bool first = true;
        for (auto w : g.successors(v)) {
            out << (first ? "" : ",") << w;
            first = false;
        }
        if (g.hasNames()) out << " \"" << g.label(v) << '"';
        out << ";\n";
    }
    return out.str();
}

std::string
formatEdge(const GameGraph& g, const Edge& e)
{
    return "(" + g.label(e.source) + "," + g.label(e.target) + ")";
}

std::string
formatVertexSet(const GameGraph& g, const VertexSet& s)
{
    std::string out = "{";
    bool first = true;
    for (auto v : s) {
        out += (first ? "" : ",") + g.label(v);
        first = false;
    }
    return out + "}";
}

std::string
formatEdgeSet(const GameGraph& g, const EdgeSet& s)
{
    std::string out = "{";
    bool first = true;
    for (const auto& e : s) {
        out += (first ? "" : ",") + formatEdge(g, e);
        first = false;
    }
    return out + "}";
}

std::string
emitTemplate(const GameGraph& g, const StrategyTemplate& t)
{
    std::ostringstream out;
    out << "region:";
    for (auto v : t.winningRegion) out << ' ' << g.label(v);
    out << "\nunsafe:";
    for (const auto& e : t.unsafe) out << ' ' << formatEdge(g, e);
    out << "\ncolive:";
    for (const auto& e : t.colive) out << ' ' << formatEdge(g, e);
    out << '\n';
    for (const auto& h : t.liveGroups) {
        out << "live-group:";
        for (const auto& e : h) out << ' ' << formatEdge(g, e);
        out << '\n';
    }
    return out.str();
}

StrategyTemplate
parseTemplate(const GameGraph& g, std::string_view text)
{
    StrategyTemplate t = StrategyTemplate::trivial(VertexSet(g.vertexCount()));
    bool sawRegion = false;
    std::size_t lineNo = 0;
    for (const auto& raw : splitLines(text)) {
        ++lineNo;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineNo, 1, "expected '<section>:'");
        const std::string key = trim(line.substr(0, colon));
        const std::string body = line.substr(colon + 1);
        try {
            if (key == "region") {
                std::istringstream words(body);
                for (std::string w; words >> w;) t.winningRegion.insert(resolveVertex(g, w));
                sawRegion = true;
            } else if (key == "unsafe") {
                t.unsafe |= EdgeSet(edgesIn(g, body));
            } else if (key == "colive") {
                t.colive |= EdgeSet(edgesIn(g, body));
            } else if (key == "live-group") {
                EdgeSet h(edgesIn(g, body));
                if (!h.empty()) t.liveGroups.push_back(std::move(h));
            } else {
                throw ParseError(lineNo, 1, "unknown section '" + key + "'");
            }
        } catch (const InvalidInputError& e) {
            throw ParseError(lineNo, colon + 2, e.what());
        }
    }
    if (!sawRegion) throw ParseError(lineNo + 1, 1, "template has no region line");
    return t;
}

std::string
emitStrategy(const GameGraph& g, const Strategy& s)
{
    std::ostringstream out;
    for (VertexId v = 0; v < s.rotation.size(); ++v) {
        if (!s.defines(v)) continue;
        out << g.label(v) << ':';
        for (auto w : s.rotation[v]) out << ' ' << formatEdge(g, {v, w});
        out << '\n';
    }
    return out.str();
}

Strategy
parseStrategy(const GameGraph& g, std::string_view text)
{
    Strategy s;
    s.domain = VertexSet(g.vertexCount());
    s.rotation.resize(g.vertexCount());
    std::size_t lineNo = 0;
    for (const auto& raw : splitLines(text)) {
        ++lineNo;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineNo, 1, "expected '<vertex>:'");
        try {
            const VertexId v = resolveVertex(g, trim(line.substr(0, colon)));
            if (s.defines(v)) throw ParseError(lineNo, 1, "vertex listed twice");
            for (const auto& e : edgesIn(g, line.substr(colon + 1))) {
                if (e.source != v || !g.hasEdge(e.source, e.target)) {
                    throw InvalidInputError("edge " + formatEdge(g, e) + " is not an edge leaving " + g.label(v));
                }
                s.rotation[v].push_back(e.target);
            }
            if (s.rotation[v].empty()) throw InvalidInputError("empty rotation");
            s.domain.insert(v);
        } catch (const InvalidInputError& e) {
            throw ParseError(lineNo, 1, e.what());
        }
    }
    return s;
}

VertexId
resolveVertex(const GameGraph& g, std::string_view label)
{
    const std::string name(label);
    if (g.hasNames()) {
        if (auto v = g.findByName(name)) return *v;
    }
    VertexId id = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), id);
    if (ec == std::errc() && ptr == name.data() + name.size() && id < g.vertexCount()) return id;
    throw InvalidInputError("unknown vertex '" + name + "'");
}

EdgeSet
parseEdgeList(const GameGraph& g, std::string_view text)
{
    return EdgeSet(edgesIn(g, text));
}

VertexSet
parseVertexList(const GameGraph& g, std::string_view text)
{
    VertexSet s(g.vertexCount());
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const std::string label = trim(item);
        if (!label.empty()) s.insert(resolveVertex(g, label));
    }
    return s;
}

std::string
readTextFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void
writeTextFile(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write " + path);
    out << content;
    if (!out) throw InvalidInputError("error writing " + path);
}

} // namespace pst
