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

#include "doctest.h"
#include "fixtures.hpp"

#include "pst/errors.hpp"
#include "pst/graph.hpp"

#include <random>

using namespace pst;
using namespace pst::testing;

namespace {

EdgeSet
mappedEdges(const Restriction& r)
{
    std::vector<Edge> out;
    for (const auto& e : r.graph.allEdges()) out.push_back({r.toOriginal[e.source], r.toOriginal[e.target]});
    return EdgeSet(std::move(out));
}

} // namespace

TEST_CASE("builder: merges duplicate edges and sorts successors")
{
    GameGraphBuilder b(3);
    b.addEdge(0, 2).addEdge(0, 1).addEdge(0, 2).addEdge(1, 0).addEdge(2, 2);
    const GameGraph g = b.build();
    CHECK(g.edgeCount() == 4);
    REQUIRE(g.successors(0).size() == 2);
    CHECK(g.successors(0)[0] == 1);
    CHECK(g.successors(0)[1] == 2);
    CHECK(g.predecessors(2).size() == 2);
    CHECK(g.hasEdge(2, 2));
    CHECK_FALSE(g.hasEdge(2, 0));
}

TEST_CASE("builder: rejects dead ends, bad names and out-of-range ids")
{
    GameGraphBuilder dead(2);
    dead.addEdge(0, 1);
    CHECK_THROWS_AS(dead.build(), DeadEndError);

    GameGraphBuilder dup(2);
    dup.addEdge(0, 1).addEdge(1, 0).setName(0, "x").setName(1, "x");
    CHECK_THROWS_AS(dup.build(), InvalidInputError);

    GameGraphBuilder partial(2);
    partial.addEdge(0, 1).addEdge(1, 0).setName(0, "x");
    CHECK_THROWS_AS(partial.build(), InvalidInputError);

    GameGraphBuilder range(2);
    CHECK_THROWS_AS(range.addEdge(0, 2), InvalidInputError);
}

TEST_CASE("graph: running example structure")
{
    const GameGraph g = runningExample();
    CHECK(g.vertexCount() == 6);
    CHECK(g.edgeCount() == 14);
    CHECK(g.verticesOf(Player::Zero) == set(g, "ad"));
    CHECK(g.label(3) == "d");
    CHECK(g.findByName("e") == VertexId{4});
    CHECK_FALSE(g.findByName("z").has_value());
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
        for (auto w : g.successors(v)) {
            auto idx = g.edgeIndex(v, w);
            REQUIRE(idx.has_value());
            CHECK(*idx >= g.firstEdgeIndex(v));
        }
    }
}

TEST_CASE("restrict: keeping {a,b,d} keeps exactly the induced edges")
{
    const GameGraph g = runningExample();
    const Restriction r = restrict(g, set(g, "abd"));
    CHECK(r.graph.vertexCount() == 3);
    CHECK(mappedEdges(r) == edges({"aa", "ab", "ad", "ba", "bd", "da", "db"}));
    CHECK(r.graph.label(2) == "d");
    CHECK(r.toRestricted[4] == Restriction::npos);
    CHECK(r.liftToOriginal(r.graph.vertices(), 6) == set(g, "abd"));
    CHECK(r.mapToRestricted(set(g, "de")) == VertexSet(3, {2}));
}

TEST_CASE("restrict: keeping everything is the identity")
{
    const GameGraph g = runningExample();
    const Restriction r = restrict(g, g.vertices());
    CHECK(r.graph == g);
    for (VertexId v = 0; v < 6; ++v) CHECK(r.toOriginal[v] == v);
}

TEST_CASE("restrict: a vertex losing all successors is rejected")
{
    const GameGraph g = runningExample();
    CHECK_THROWS_AS(restrict(g, set(g, "e")), DeadEndError);
}

TEST_CASE("edgesBetween: running example")
{
    const GameGraph g = runningExample();
    CHECK(edgesBetween(g, set(g, "a"), set(g, "cd")) == edges({"ac", "ad"}));
    CHECK(edgesBetween(g, VertexSet(6), g.vertices()).empty());
    CHECK(edgesBetween(g, set(g, "acd"), set(g, "bef")) == edges({"ab", "db", "de"}));
    CHECK(edgesBetween(g, g.vertices(), g.vertices()) == g.allEdges());
}

TEST_CASE("edgesBetween is monotone and restrict composes on random graphs")
{
    std::mt19937_64 rng(42);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Game game = randomGame(4 + seed % 20, 3.0, 1, 2, seed);
        const GameGraph& g = game.graph;
        const std::size_t n = g.vertexCount();
        VertexSet x = randomSubset(n, rng);
        VertexSet y = randomSubset(n, rng);
        VertexSet x2 = x | randomSubset(n, rng);
        VertexSet y2 = y | randomSubset(n, rng);
        const EdgeSet small = edgesBetween(g, x, y);
        const EdgeSet large = edgesBetween(g, x2, y2);
        for (const auto& e : small) CHECK(large.contains(e));

        // restrict(restrict(g, A), B within A) equals restrict(g, A and B) when both are total.
        const VertexSet a = randomSubset(n, rng, 0.8);
        const VertexSet b = randomSubset(n, rng, 0.8);
        try {
            const Restriction ra = restrict(g, a);
            const Restriction rab = restrict(ra.graph, ra.mapToRestricted(b));
            const Restriction direct = restrict(g, a & b);
            std::vector<Edge> composed;
            for (const auto& e : rab.graph.allEdges()) {
                composed.push_back({ra.toOriginal[rab.toOriginal[e.source]], ra.toOriginal[rab.toOriginal[e.target]]});
            }
            CHECK(EdgeSet(std::move(composed)) == mappedEdges(direct));
        } catch (const DeadEndError&) {
            // Either side may lose totality; both restrictions then agree on rejecting it.
            CHECK_THROWS_AS(
                [&] {
                    const Restriction ra = restrict(g, a);
                    restrict(ra.graph, ra.mapToRestricted(b));
                    restrict(g, a & b);
                }(),
                DeadEndError);
        }
    }
}

TEST_CASE("priority function: declared bound and preimages")
{
    const PriorityFunction pf({0, 2, 1, 1, 1, 1});
    CHECK(pf.maxPriority() == 2);
    CHECK(pf.withPriority(1) == VertexSet(6, {2, 3, 4, 5}));
    CHECK(PriorityFunction({0, 1}, 3).maxPriority() == 3);
    CHECK_THROWS_AS(PriorityFunction({0, 4}, 3), InvalidInputError);
}

TEST_CASE("edge set: union, membership and per-source ranges")
{
    EdgeSet s = edges({"ab", "ac", "db"});
    s |= edges({"ab", "de"});
    CHECK(s.size() == 4);
    CHECK(s.contains(edge("de")));
    CHECK(s.from(0).size() == 2);
    CHECK(s.from(1).empty());
    CHECK(s.sources() == std::vector<VertexId>{0, 3});
    s.insert(edge("aa"));
    CHECK(s.edges().front() == edge("aa"));
}
