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
#include "pst/oracle.hpp"
#include "pst/solvers.hpp"
#include "pst/strategy.hpp"

#include <random>

using namespace pst;
using namespace pst::testing;

namespace {

bool
containsGroup(const std::vector<EdgeSet>& groups, const EdgeSet& h)
{
    return std::find(groups.begin(), groups.end(), h) != groups.end();
}

} // namespace

TEST_CASE("safety: never visiting f")
{
    const GameGraph g = runningExample();
    const SolveResult r = safetyTemplate(g, set(g, "abcde"));
    CHECK(r.winningRegion0 == set(g, "abcd"));
    CHECK(r.winningRegion1 == set(g, "ef"));
    CHECK(r.strategyTemplate.unsafe == edges({"de"}));
    CHECK(r.strategyTemplate.colive.empty());
    CHECK(r.strategyTemplate.liveGroups.empty());
}

TEST_CASE("buchi: visiting c or d infinitely often")
{
    const GameGraph g = runningExample();
    const SolveResult r = buchiTemplate(g, set(g, "cd"));
    CHECK(r.winningRegion0 == g.vertices());
    CHECK(r.strategyTemplate.unsafe.empty());
    CHECK(r.strategyTemplate.colive.empty());
    REQUIRE(r.strategyTemplate.liveGroups.size() == 1);
    CHECK(r.strategyTemplate.liveGroups[0] == edges({"ac", "ad"}));
}

TEST_CASE("buchi: restricted to {a,b,d} with target d")
{
    const GameGraph g = runningExample();
    const Restriction sub = restrict(g, set(g, "abd"));
    const SolveResult r = buchiTemplate(sub.graph, VertexSet(3, {2}));
    CHECK(r.winningRegion0 == sub.graph.vertices());
    REQUIRE(r.strategyTemplate.liveGroups.size() == 1);
    CHECK(r.strategyTemplate.liveGroups[0] == EdgeSet{{0, 2}});
}

TEST_CASE("co-buchi: eventually staying in {a,c,d}")
{
    const GameGraph g = runningExample();
    const SolveResult r = cobuchiTemplate(g, set(g, "acd"));
    CHECK(r.winningRegion0 == g.vertices());
    CHECK(r.strategyTemplate.unsafe.empty());
    CHECK(r.strategyTemplate.colive == edges({"ab", "db", "de"}));
    CHECK(r.strategyTemplate.liveGroups.empty());
}

TEST_CASE("reachTemplate: layered live groups")
{
    const GameGraph g3 = parityExample();
    CHECK(reachTemplate(g3, set(g3, "dh"), set(g3, "d")) == std::vector<EdgeSet>{edges({"hd"})});
    CHECK(reachTemplate(g3, set(g3, "d"), set(g3, "d")).empty());
    CHECK_THROWS_AS(reachTemplate(g3, set(g3, "f")), PreconditionError);

    const GameGraph g1 = runningExample();
    CHECK(reachTemplate(g1, set(g1, "cd")) == std::vector<EdgeSet>{edges({"ac", "ad"})});
    // e is reached from d, then a through d.
    CHECK(reachTemplate(g1, set(g1, "e")) == std::vector<EdgeSet>{edges({"de"}), edges({"ad"})});
}

TEST_CASE("parity: eight-vertex example")
{
    const GameGraph g = parityExample();
    const SolveResult r = parityTemplate(g, parityExamplePriorities());
    CHECK(r.winningRegion0 == g.vertices());
    CHECK(r.winningRegion1.empty());
    CHECK(r.strategyTemplate.unsafe.empty());
    CHECK(r.strategyTemplate.colive == edges({"bc"}));
    const auto& h = r.strategyTemplate.liveGroups;
    CHECK(containsGroup(h, edges({"gf"})));
    CHECK(containsGroup(h, edges({"ab"})));
    CHECK(containsGroup(h, edges({"hd"})));
    CHECK(h.size() == 3);
}

TEST_CASE("parity: composition objective gives a single live group")
{
    const GameGraph g = runningExample();
    const SolveResult r = parityTemplate(g, compositionObjective());
    CHECK(r.winningRegion0 == g.vertices());
    REQUIRE(r.strategyTemplate.liveGroups.size() == 1);
    CHECK(r.strategyTemplate.liveGroups[0] == edges({"ab", "db", "de"}));
    CHECK(r.strategyTemplate.colive.empty());
}

TEST_CASE("parity: mismatched priority function is rejected")
{
    const GameGraph g = runningExample();
    CHECK_THROWS_AS(parityTemplate(g, PriorityFunction({0, 1})), InvalidInputError);
}

TEST_CASE("parity regions agree with the oracle and templates are sound")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const Game game = randomGame(2 + seed % 30, 1.5 + (seed % 3), 1, 1 + seed % 6, seed);
        const GameGraph& g = game.graph;
        const PriorityFunction& pf = game.objectives[0];
        CAPTURE(seed);
        const SolveResult r = parityTemplate(g, pf);
        const OracleRegions o = zielonkaRegions(g, pf);
        REQUIRE(r.winningRegion0 == o.winningRegion0);
        CHECK(r.winningRegion1 == o.winningRegion1);
        REQUIRE(isConflictFree(g, r.strategyTemplate));
        const Strategy s = extractStrategy(g, r.strategyTemplate);
        const ProductVerdict v = verifyStrategy(g, s, {pf}, r.winningRegion0);
        CHECK(v.winningFrom == r.winningRegion0);
        CHECK_FALSE(v.counterexample.has_value());
    }
}

TEST_CASE("buchi and co-buchi regions agree with their parity encodings")
{
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Game game = randomGame(2 + seed % 30, 2.0, 1, 1, 1000 + seed);
        const GameGraph& g = game.graph;
        const VertexSet target = randomSubset(g.vertexCount(), rng, 0.3);
        CAPTURE(seed);
        const SolveResult b = buchiTemplate(g, target);
        CHECK(b.winningRegion0 == zielonkaRegions(g, buchiAsParity(target)).winningRegion0);
        CHECK(isConflictFree(g, b.strategyTemplate));
        const SolveResult c = cobuchiTemplate(g, target);
        CHECK(c.winningRegion0 == zielonkaRegions(g, cobuchiAsParity(target)).winningRegion0);
        CHECK(isConflictFree(g, c.strategyTemplate));
        const Strategy sb = extractStrategy(g, b.strategyTemplate);
        CHECK(verifyStrategy(g, sb, {buchiAsParity(target)}, b.winningRegion0).winningFrom == b.winningRegion0);
        const Strategy sc = extractStrategy(g, c.strategyTemplate);
        CHECK(verifyStrategy(g, sc, {cobuchiAsParity(target)}, c.winningRegion0).winningFrom == c.winningRegion0);
    }
}

TEST_CASE("safety template is maximally permissive on small games")
{
    std::mt19937_64 rng(23);
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 300 && checked < 100; ++seed) {
        const Game game = randomGame(2 + seed % 6, 1.8, 1, 1, 2000 + seed);
        const GameGraph& g = game.graph;
        const VertexSet safe = randomSubset(g.vertexCount(), rng, 0.7);
        const SolveResult r = safetyTemplate(g, safe);
        const PositionalEnumeration e = enumerateWinningPositional(g, SafetyObjective{safe});
        CAPTURE(seed);
        CHECK(r.winningRegion0 == e.winningRegion);
        // Winning positional strategies are exactly those avoiding the unsafe edges.
        std::size_t avoiding = 1;
        for (VertexId v = 0; v < g.vertexCount(); ++v) {
            if (g.owner(v) != Player::Zero) continue;
            std::size_t options = 0;
            for (auto w : g.successors(v)) {
                if (!r.winningRegion0.contains(v) || !r.strategyTemplate.unsafe.contains({v, w})) ++options;
            }
            avoiding *= options;
        }
        CHECK(e.winning.size() == (r.winningRegion0.empty() ? e.total : avoiding));
        for (const auto& choice : e.winning) {
            for (auto v : r.winningRegion0) {
                if (g.owner(v) == Player::Zero) CHECK_FALSE(r.strategyTemplate.unsafe.contains({v, choice[v]}));
            }
        }
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("parity on a domain matches parity on the restricted graph")
{
    std::mt19937_64 rng(29);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Game game = randomGame(3 + seed % 25, 2.5, 1, 4, 3000 + seed);
        const GameGraph& g = game.graph;
        const VertexSet domain = cobuchiWin(g, randomSubset(g.vertexCount(), rng, 0.6));
        if (domain.empty()) continue;
        const Restriction sub = restrict(g, domain);
        std::vector<Priority> values;
        for (auto v : sub.toOriginal) values.push_back(game.objectives[0][v]);
        const SolveResult onSub = parityTemplate(sub.graph, PriorityFunction(values));
        const SolveResult onDomain = parityTemplate(g, domain, game.objectives[0]);
        CHECK(onDomain.winningRegion0 == sub.liftToOriginal(onSub.winningRegion0, g.vertexCount()));
        CHECK((onDomain.winningRegion0 | onDomain.winningRegion1) == domain);
    }
}
