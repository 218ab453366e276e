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

#ifndef PST_IO_HPP
#define PST_IO_HPP

#include "pst/graph.hpp"
#include "pst/strategy.hpp"
#include "pst/template.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pst {

/** A game graph with one or more parity objectives (conjunction). */
struct Game
{
    GameGraph graph;
    std::vector<PriorityFunction> objectives;

    friend bool operator==(const Game&, const Game&) = default;
};

/**
 * Parses the pgsolver format and its generalized extension:
 *
 *     parity <maxId>;                 or   genparity <maxId> <k>;
 *     <id> <p1>,...,<pk> <owner> <t1>,<t2>,...[ "<name>"];
 *
 * Lines starting with '#' are comments and a "start <id>;" record is
 * ignored. Every id in [0, maxId] must be declared exactly once. Throws
 * ParseError with line and column.
 */
Game parseGame(std::string_view text);
Game readGameFile(const std::string& path);

/** Inverse of parseGame; writes the "parity" header when there is one objective. */
std::string emitGame(const Game& game);

/** "(u,v)" with vertex labels. */
std::string formatEdge(const GameGraph& g, const Edge& e);
/** "{a,b,c}" with vertex labels. */
std::string formatVertexSet(const GameGraph& g, const VertexSet& s);
/** "{(a,b),(c,d)}" with vertex labels. */
std::string formatEdgeSet(const GameGraph& g, const EdgeSet& s);

/**
 * Template text: lines "region:", "unsafe:", "colive:" followed by
 * space-separated vertices or edges, and one "live-group:" line per group.
 */
std::string emitTemplate(const GameGraph& g, const StrategyTemplate& t);
StrategyTemplate parseTemplate(const GameGraph& g, std::string_view text);

/** Strategy text: one line "v: (v,w1) (v,w2) ..." per vertex, in rotation order. */
std::string emitStrategy(const GameGraph& g, const Strategy& s);
Strategy parseStrategy(const GameGraph& g, std::string_view text);

/** Vertex by label: its name when the graph has names, otherwise (or failing that) its id. */
VertexId resolveVertex(const GameGraph& g, std::string_view label);
/** "(u,v),(u,w)" or "(u,v) (u,w)". */
EdgeSet parseEdgeList(const GameGraph& g, std::string_view text);
/** "a,b,c". */
VertexSet parseVertexList(const GameGraph& g, std::string_view text);

std::string readTextFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& content);

} // namespace pst

#endif
