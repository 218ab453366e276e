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

/**
 * Acceptance checks. Prints one PASS or FAIL line per criterion and exits
 * nonzero if any criterion fails.
 */
#include "fixtures.hpp"

#include "pst/compose.hpp"
#include "pst/fault.hpp"
#include "pst/oracle.hpp"
#include "pst/solvers.hpp"
#include "pst/strategy.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace pst;
using namespace pst::testing;

namespace {

constexpr double kGoldenMillis = 1.0;
constexpr int kGoldenRepetitions = 200;
constexpr double kRegionSuiteSeconds = 60.0;
constexpr double kLargeSolveSeconds = 10.0;
constexpr double kLargeExtractSeconds = 0.2;

using Clock = std::chrono::steady_clock;

double
seconds(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/** Mean wall time of f in milliseconds, after one warm-up call. */
double
meanMillis(const std::function<void()>& f)
{
    f();
    const auto start = Clock::now();
    for (int i = 0; i < kGoldenRepetitions; ++i) f();
    return seconds(start) * 1000.0 / kGoldenRepetitions;
}

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition && pass) detail << "first failure: " << what << "; ";
        pass = pass && condition;
    }
};

int failures = 0;

void
report(int id, const std::string& name, Outcome& o)
{
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
    const std::string d = o.detail.str();
    if (!d.empty()) std::cout << " (" << d.substr(0, d.size() - 2) << ")";
    std::cout << std::endl;
    if (!o.pass) ++failures;
}

/** Outputs of criteria 3 and 4, reused by 5 and 11. */
std::vector<std::pair<GameGraph, StrategyTemplate>> producedTemplates;

void
criterion1()
{
    Outcome o;
    const GameGraph g = runningExample();
    const SolveResult s = safetyTemplate(g, set(g, "abcde"));
    o.require(s.winningRegion0 == set(g, "abcd") && s.strategyTemplate.unsafe == edges({"de"}) &&
                  s.strategyTemplate.colive.empty() && s.strategyTemplate.liveGroups.empty(),
              "safety template");
    const SolveResult b = buchiTemplate(g, set(g, "cd"));
    o.require(b.winningRegion0 == g.vertices() && b.strategyTemplate.unsafe.empty() &&
                  b.strategyTemplate.colive.empty() &&
                  b.strategyTemplate.liveGroups == std::vector<EdgeSet>{edges({"ac", "ad"})},
              "buchi template");
    const SolveResult c = cobuchiTemplate(g, set(g, "acd"));
    o.require(c.winningRegion0 == g.vertices() && c.strategyTemplate.unsafe.empty() &&
                  c.strategyTemplate.colive == edges({"ab", "db", "de"}) && c.strategyTemplate.liveGroups.empty(),
              "co-buchi template");

    const double ts = meanMillis([&] { safetyTemplate(g, set(g, "abcde")); });
    const double tb = meanMillis([&] { buchiTemplate(g, set(g, "cd")); });
    const double tc = meanMillis([&] { cobuchiTemplate(g, set(g, "acd")); });
    o.detail << "mean ms safety " << ts << ", buchi " << tb << ", co-buchi " << tc << "; ";
    o.require(ts < kGoldenMillis && tb < kGoldenMillis && tc < kGoldenMillis, "time");
    report(1, "running example safety, buchi and co-buchi templates", o);
}

void
criterion2()
{
    Outcome o;
    const GameGraph g = parityExample();
    const PriorityFunction pf = parityExamplePriorities();
    const SolveResult r = parityTemplate(g, pf);
    o.require(r.winningRegion0 == g.vertices(), "region");
    o.require(r.strategyTemplate.unsafe.empty(), "no unsafe edges");
    o.require(r.strategyTemplate.colive == edges({"bc"}), "co-live edges");
    // Pinned output: one group per attractor layer, frontier edges into the layer only.
    o.require(r.strategyTemplate.liveGroups == std::vector<EdgeSet>{edges({"gf"}), edges({"ab"}), edges({"hd"})},
              "live groups");
    for (const auto& h : r.strategyTemplate.liveGroups) {
        for (const auto& e : h) o.require(g.owner(e.source) == Player::Zero, "live edge from a player-0 vertex");
    }
    const double t = meanMillis([&] { parityTemplate(g, pf); });
    o.detail << "mean ms " << t << "; ";
    o.require(t < kGoldenMillis, "time");
    report(2, "eight-vertex parity template", o);
}

void
criterion3()
{
    Outcome o;
    const auto start = Clock::now();
    std::size_t games = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 1 + seed % 50;
        const double ratio = 1.0 + static_cast<double>(seed % 31) / 10.0; // up to 4n edges
        const Game game = randomGame(n, ratio, 1, 1 + seed % 6, 10000 + seed);
        const SolveResult r = parityTemplate(game.graph, game.objectives[0]);
        const OracleRegions z = zielonkaRegions(game.graph, game.objectives[0]);
        o.require(r.winningRegion0 == z.winningRegion0 && r.winningRegion1 == z.winningRegion1,
                  "regions differ for seed " + std::to_string(seed));
        producedTemplates.emplace_back(game.graph, r.strategyTemplate);
        ++games;
    }
    const double t = seconds(start);
    o.detail << games << " games in " << t << " s; ";
    o.require(t < kRegionSuiteSeconds, "time");
    report(3, "parity regions equal the reference solver", o);
}

void
criterion4()
{
    Outcome o;
    std::mt19937_64 rng(4);
    std::size_t games = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Game game = randomGame(2 + seed % 9, 1.5 + static_cast<double>(seed % 4) / 2.0, 1, 1 + seed % 4,
                                     20000 + seed);
        const GameGraph& g = game.graph;
        SolveResult r;
        PriorityFunction objective;
        switch (seed % 3) {
        case 0: {
            const VertexSet target = randomSubset(g.vertexCount(), rng, 0.3);
            r = buchiTemplate(g, target);
            objective = buchiAsParity(target);
            break;
        }
        case 1: {
            const VertexSet target = randomSubset(g.vertexCount(), rng, 0.6);
            r = cobuchiTemplate(g, target);
            objective = cobuchiAsParity(target);
            break;
        }
        default:
            r = parityTemplate(g, game.objectives[0]);
            objective = game.objectives[0];
        }
        producedTemplates.emplace_back(g, r.strategyTemplate);
        ++games;
        if (!isConflictFree(g, r.strategyTemplate)) continue; // counted under criterion 5
        const Strategy s = extractStrategy(g, r.strategyTemplate);
        const ProductVerdict v = verifyStrategy(g, s, {objective}, r.winningRegion0);
        o.require(v.winningFrom == r.winningRegion0, "strategy loses for seed " + std::to_string(seed));
    }
    o.detail << games << " games; ";
    report(4, "extracted strategies win from the whole region", o);
}

void
criterion5()
{
    Outcome o;
    for (const auto& [g, t] : producedTemplates) o.require(isConflictFree(g, t), "conflict in a produced template");
    o.detail << producedTemplates.size() << " templates; ";
    report(5, "produced templates are conflict-free", o);
}

void
criterion6()
{
    Outcome o;
    std::mt19937_64 rng(6);
    std::size_t games = 0;
    for (std::uint64_t seed = 0; games < 100; ++seed) {
        const Game game = randomGame(2 + seed % 6, 1.5 + static_cast<double>(seed % 3) / 2.0, 1, 1, 30000 + seed);
        const GameGraph& g = game.graph;
        const VertexSet safe = randomSubset(g.vertexCount(), rng, 0.7);
        const SolveResult r = safetyTemplate(g, safe);
        const PositionalEnumeration e = enumerateWinningPositional(g, SafetyObjective{safe});
        o.require(e.winningRegion == r.winningRegion0, "region");
        // Winning set is inside the avoiding set and both have the same size.
        std::size_t avoiding = 1;
        for (VertexId v = 0; v < g.vertexCount(); ++v) {
            if (g.owner(v) != Player::Zero) continue;
            std::size_t options = 0;
            for (auto w : g.successors(v)) {
                if (!r.winningRegion0.contains(v) || !r.strategyTemplate.unsafe.contains({v, w})) ++options;
            }
            avoiding *= options;
        }
        bool inside = true;
        for (const auto& choice : e.winning) {
            for (auto v : r.winningRegion0) {
                if (g.owner(v) == Player::Zero && r.strategyTemplate.unsafe.contains({v, choice[v]})) inside = false;
            }
        }
        o.require(inside && e.winning.size() == avoiding, "strategy sets differ for seed " + std::to_string(seed));
        ++games;
    }
    o.detail << games << " games; ";
    report(6, "safety templates are maximally permissive", o);
}

struct ComposeInstance
{
    Game game;
    ComposeResult oneShot;
};

std::vector<ComposeInstance>
composeInstances()
{
    std::vector<ComposeInstance> out;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t k = 1 + seed % 3;
        Game game = randomGame(2 + seed % 7, 1.5 + static_cast<double>(seed % 3) / 2.0, k, 1 + seed % 2,
                               40000 + seed);
        ComposeResult r = composeTemplates(game.graph, ComposeState::initial(game.graph), game.objectives);
        out.push_back({std::move(game), std::move(r)});
    }
    return out;
}

void
criterion7(const std::vector<ComposeInstance>& instances)
{
    Outcome o;
    std::size_t incomplete = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& [game, r] = instances[i];
        const GameGraph& g = game.graph;
        const VertexSet w0 = r.state.winningRegion;
        const VertexSet oracle = bruteForceGenParityRegion(g, game.objectives);
        o.require(w0.isSubsetOf(oracle), "region exceeds the oracle on instance " + std::to_string(i));
        if (w0 != oracle) ++incomplete;
        if (!isConflictFree(g, r.strategyTemplate)) {
            o.require(false, "conflict on instance " + std::to_string(i));
            continue;
        }
        const Strategy s = extractStrategy(g, r.strategyTemplate);
        o.require(verifyStrategy(g, s, game.objectives, w0).winningFrom == w0,
                  "strategy loses on instance " + std::to_string(i));
        o.require(verifyStrategyExact(g, s, game.objectives, w0).winningFrom == w0,
                  "exact check loses on instance " + std::to_string(i));
    }
    o.detail << instances.size() << " games, " << incomplete << " incomplete; ";
    report(7, "composition is sound", o);
}

void
criterion8()
{
    Outcome o;
    const GameGraph g = runningExample();
    const std::vector<PriorityFunction> objectives{cobuchiAsParity(set(g, "acd")), compositionObjective()};
    const ComposeResult r = composeTemplates(g, ComposeState::initial(g), objectives);
    o.require(r.state.winningRegion.empty(), "composed region is not empty");
    o.require(bruteForceGenParityRegion(g, objectives) == g.vertices(), "oracle region is not everything");
    report(8, "documented incompleteness instance", o);
}

void
criterion9(const std::vector<ComposeInstance>& instances)
{
    Outcome o;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& [game, r] = instances[i];
        ComposeState state = ComposeState::initial(game.graph);
        for (const auto& pf : game.objectives) state = addObjective(game.graph, state, pf).state;
        if (state.winningRegion != r.state.winningRegion) {
            ++mismatches;
            o.require(false, "regions differ on instance " + std::to_string(i));
        }
    }
    o.detail << mismatches << " of " << instances.size() << " differ; ";
    report(9, "incremental and one-shot composition agree", o);
}

void
criterion10()
{
    Outcome o;
    std::mt19937_64 rng(10);
    std::size_t fast = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Game game = randomGame(2 + seed % 29, 2.0 + static_cast<double>(seed % 3), 1, 1 + seed % 5,
                                     50000 + seed);
        const GameGraph& g = game.graph;
        const PriorityFunction& pf = game.objectives[0];
        std::vector<Edge> candidates;
        for (const auto& e : g.allEdges()) {
            if (g.owner(e.source) == Player::Zero) candidates.push_back(e);
        }
        std::shuffle(candidates.begin(), candidates.end(), rng);
        candidates.resize(static_cast<std::size_t>(std::ceil(0.1 * static_cast<double>(candidates.size()))));
        const EdgeSet faulty(candidates);

        const StrategyTemplate t = parityTemplate(g, pf).strategyTemplate;
        const FaultCorrection f = faultCorrection(g, pf, t, faulty);
        const PrunedGame p = removeFaultyEdges(g, pf, faulty);
        o.require(f.strategyTemplate.winningRegion == zielonkaRegions(p.graph, p.priorities).winningRegion0,
                  "region differs for seed " + std::to_string(seed));
        if (f.recomputed) continue;
        ++fast;
        const Strategy s = extractStrategy(p.graph, f.strategyTemplate);
        o.require(verifyStrategy(p.graph, s, {p.priorities}, f.strategyTemplate.winningRegion).winningFrom ==
                      f.strategyTemplate.winningRegion,
                  "fast path strategy loses for seed " + std::to_string(seed));
    }
    o.detail << "200 games, " << fast << " without re-solving; ";
    report(10, "fault correction matches the reference solver", o);
}

void
criterion11()
{
    Outcome o;
    for (const auto& [g, t] : producedTemplates) {
        if (isConflictFree(g, t)) o.require(gafTolerant(g, t, EdgeSet()).tolerant, "empty fault set not tolerated");
    }
    const GameGraph g = runningExample();
    const StrategyTemplate psi2 = buchiTemplate(g, set(g, "cd")).strategyTemplate;
    const GafReport r = gafTolerant(g, psi2, edges({"ad"}));
    o.require(r.tolerant && r.vulnerable.empty(), "single fault on the running example");
    AvailabilityTrace trace;
    trace.unavailable = {EdgeSet(), edges({"ad"})};
    const ProductVerdict v =
        verifyOnlinePeriodic(g, OnlineStrategy(g, psi2), {buchiAsParity(set(g, "cd"))}, trace, g.vertices());
    o.require(v.winningFrom == g.vertices(), "online strategy loses under the periodic trace");
    o.detail << v.productStates << " product states; ";
    report(11, "guaranteed-availability tolerance", o);
}

void
criterion12()
{
    Outcome o;
    GeneratorConfig c;
    c.vertices = 100000;
    c.edges = 400000;
    c.maxPriority = 4;
    c.seed = 12;
    const Game game = generateGame(c);
    auto start = Clock::now();
    const SolveResult r = parityTemplate(game.graph, game.objectives[0]);
    const double solve = seconds(start);
    start = Clock::now();
    const Strategy s = extractStrategy(game.graph, r.strategyTemplate);
    const double extract = seconds(start);
    o.detail << "solve " << solve << " s, extract " << extract << " s, |W0| " << r.winningRegion0.count() << "; ";
    o.require(solve < kLargeSolveSeconds, "solve time");
    o.require(extract < kLargeExtractSeconds, "extract time");
    o.require(s.domain == r.winningRegion0, "strategy domain");
    report(12, "large game scalability", o);
}

void
criterion13()
{
    Outcome o;
    GeneratorConfig c;
    c.vertices = 100;
    c.edges = 300;
    c.maxPriority = 4;
    c.seed = 1;
    const std::vector<double> fractions{0.05, 0.1, 0.2, 0.3};
    const std::string csv = faultStatisticsCsv(benchFaultConflicts(c, 50, fractions, 100));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    o.require(line == "faultFraction,trials,conflictRate,meanConflictVertexFraction", "header");
    double previous = -1;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string f, trials, rate, fraction;
        std::getline(fields, f, ',');
        std::getline(fields, trials, ',');
        std::getline(fields, rate, ',');
        std::getline(fields, fraction, ',');
        const double value = std::stod(rate);
        o.require(value >= previous, "conflict rate decreases at fraction " + f);
        o.detail << f << ":" << value << " ";
        previous = value;
        ++rows;
    }
    o.detail << "; ";
    o.require(rows == fractions.size(), "row count");
    report(13, "fault conflict rate grows with the fault fraction", o);
}

} // namespace

int
main()
{
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    const auto instances = composeInstances();
    criterion7(instances);
    criterion8();
    criterion9(instances);
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    return failures == 0 ? 0 : 1;
}
