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

#include "pst/fault.hpp"

#include "pst/errors.hpp"
#include "pst/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace pst {

PrunedGame
removeFaultyEdges(const GameGraph& g, const PriorityFunction& pf, const EdgeSet& faulty)
{
    const std::size_t n = g.vertexCount();
    if (pf.size() != n) throw InvalidInputError("priority function does not match the graph");
    for (const auto& e : faulty) {
        if (e.source >= n || e.target >= n || !g.hasEdge(e.source, e.target)) {
            throw InvalidInputError("faulty edge is not an edge of the graph");
        }
        if (g.owner(e.source) != Player::Zero) throw InvalidInputError("faulty edges must leave Player-0 vertices");
    }

    const Priority sink = pf.maxPriority() % 2 == 1 ? pf.maxPriority() : pf.maxPriority() + 1;
    std::vector<Priority> values = pf.values();
    PrunedGame out{{}, {}, VertexSet(n)};
    GameGraphBuilder b(n);
    for (VertexId v = 0; v < n; ++v) {
        b.setOwner(v, g.owner(v));
        if (g.hasNames()) b.setName(v, g.label(v));
        bool any = false;
        for (auto w : g.successors(v)) {
            if (faulty.contains({v, w})) continue;
            b.addEdge(v, w);
            any = true;
        }
        if (!any) {
            b.addEdge(v, v);
            values[v] = sink;
            out.deadEnds.insert(v);
        }
    }
    out.graph = b.build();
    out.priorities = PriorityFunction(std::move(values), sink);
    return out;
}

FaultCorrection
faultCorrection(const GameGraph& g, const PriorityFunction& pf, const StrategyTemplate& t, const EdgeSet& faulty)
{
    FaultCorrection out;
    out.strategyTemplate = t;
    out.strategyTemplate.unsafe |= faulty;
    if (isConflictFree(g, out.strategyTemplate)) return out;

    PrunedGame pruned = removeFaultyEdges(g, pf, faulty);
    SolveResult r = parityTemplate(pruned.graph, pruned.priorities);
    out.strategyTemplate = std::move(r.strategyTemplate);
    out.strategyTemplate.unsafe |= faulty;
    out.recomputed = true;
    return out;
}

GafReport
gafTolerant(const GameGraph& g, const StrategyTemplate& t, const EdgeSet& faulty)
{
    GafReport report{true, VertexSet(g.vertexCount())};
    for (auto v : t.winningRegion) {
        if (g.owner(v) != Player::Zero) continue;
        bool ok = false;
        for (auto w : g.successors(v)) {
            const Edge e{v, w};
            if (!t.unsafe.contains(e) && !t.colive.contains(e) && !faulty.contains(e)) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            report.tolerant = false;
            report.vulnerable.insert(v);
        }
    }
    return report;
}

OnlineStrategy::OnlineStrategy(const GameGraph& g, const StrategyTemplate& t)
    : graph_(&g), order_(g.vertexCount()), liveTargets_(g.vertexCount())
{
    for (auto v : t.winningRegion) {
        if (g.owner(v) != Player::Zero) continue;
        std::vector<VertexId> rest;
        for (auto w : g.successors(v)) {
            const Edge e{v, w};
            if (t.unsafe.contains(e) || t.colive.contains(e)) continue;
            if (t.isLive(e)) {
                order_[v].push_back(w);
                liveTargets_[v].push_back(w);
            } else {
                rest.push_back(w);
            }
        }
        order_[v].insert(order_[v].end(), rest.begin(), rest.end());
    }
}

VertexId
OnlineStrategy::move(VertexId v, std::size_t step, const AvailabilityTrace& trace)
{
    auto& order = order_[v];
    const auto& live = liveTargets_[v];
    auto pick = order.end();
    for (auto it = order.begin(); it != order.end(); ++it) {
        if (!trace.available(step, {v, *it})) continue;
        if (std::binary_search(live.begin(), live.end(), *it)) {
            pick = it;
            break;
        }
        if (pick == order.end()) pick = it;
    }
    if (pick == order.end()) {
        throw DomainError("no allowed edge available at vertex " + graph_->label(v));
    }
    const VertexId w = *pick;
    order.erase(pick);
    order.push_back(w);
    return w;
}

Memory
OnlineStrategy::snapshot() const
{
    Memory m;
    for (const auto& order : order_) m.insert(m.end(), order.begin(), order.end());
    return m;
}

void
OnlineStrategy::restore(const Memory& m)
{
    std::size_t pos = 0;
    for (auto& order : order_) {
        for (auto& w : order) w = m.at(pos++);
    }
}

ProductVerdict
verifyOnlinePeriodic(const GameGraph& g, const OnlineStrategy& strategy, const std::vector<PriorityFunction>& objectives,
                     const AvailabilityTrace& trace, const VertexSet& from, std::size_t maxStates)
{
    const std::size_t period = trace.period();
    OnlineStrategy work = strategy;
    ProductStep step = [&](VertexId v, const Memory& m) {
        const std::uint32_t phase = m[0];
        Memory orders(m.begin() + 1, m.end());
        auto pack = [&](const Memory& body) {
            Memory next{static_cast<std::uint32_t>((phase + 1) % period)};
            next.insert(next.end(), body.begin(), body.end());
            return next;
        };
        std::vector<std::pair<VertexId, Memory>> out;
        if (g.owner(v) == Player::Zero) {
            work.restore(orders);
            const VertexId w = work.move(v, phase, trace);
            out.emplace_back(w, pack(work.snapshot()));
        } else {
            for (auto w : g.successors(v)) out.emplace_back(w, pack(orders));
        }
        return out;
    };
    Memory initial{0};
    Memory body = strategy.snapshot();
    initial.insert(initial.end(), body.begin(), body.end());
    return verifyExplicitProduct(g, objectives, from, initial, step, maxStates);
}

FaultStatistics
simulateFaultConflicts(const GameGraph& g, const StrategyTemplate& t, double faultFraction, std::size_t trials,
                       std::uint64_t seed)
{
    if (!(faultFraction >= 0.0 && faultFraction <= 1.0)) throw InvalidInputError("fault fraction must lie in [0,1]");
    std::vector<Edge> candidates;
    for (const auto& e : g.allEdges()) {
        if (g.owner(e.source) == Player::Zero) candidates.push_back(e);
    }
    const auto count = static_cast<std::size_t>(std::ceil(faultFraction * candidates.size() - 1e-9));

    FaultStatistics stats;
    stats.faultFraction = faultFraction;
    stats.trials = trials;
    std::size_t conflicting = 0;
    double vertexFractionSum = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 rng(seq);
        std::vector<Edge> shuffled = candidates;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.resize(count);

        StrategyTemplate faulty = t;
        faulty.unsafe |= EdgeSet(std::move(shuffled));
        ConflictReport report = findConflicts(g, faulty);
        if (!report.empty()) ++conflicting;
        if (g.vertexCount() > 0) {
            vertexFractionSum += static_cast<double>(report.all().count()) / static_cast<double>(g.vertexCount());
        }
    }
    if (trials > 0) {
        stats.conflictRate = static_cast<double>(conflicting) / static_cast<double>(trials);
        stats.meanConflictVertexFraction = vertexFractionSum / static_cast<double>(trials);
    }
    return stats;
}

std::vector<FaultStatistics>
benchFaultConflicts(const GeneratorConfig& config, std::size_t games, const std::vector<double>& fractions,
                    std::size_t trials)
{
    std::vector<FaultStatistics> rows(fractions.size());
    for (std::size_t j = 0; j < fractions.size(); ++j) {
        rows[j].faultFraction = fractions[j];
        rows[j].trials = trials * games;
    }
    if (games == 0) return rows;
    for (std::size_t i = 0; i < games; ++i) {
        GeneratorConfig c = config;
        c.seed = config.seed + i;
        const Game game = generateGame(c);
        const StrategyTemplate t = parityTemplate(game.graph, game.objectives[0]).strategyTemplate;
        for (std::size_t j = 0; j < fractions.size(); ++j) {
            const FaultStatistics s = simulateFaultConflicts(game.graph, t, fractions[j], trials, c.seed);
            rows[j].conflictRate += s.conflictRate;
            rows[j].meanConflictVertexFraction += s.meanConflictVertexFraction;
        }
    }
    for (auto& row : rows) {
        row.conflictRate /= static_cast<double>(games);
        row.meanConflictVertexFraction /= static_cast<double>(games);
    }
    return rows;
}

std::string
faultStatisticsCsv(const std::vector<FaultStatistics>& rows)
{
    std::ostringstream out;
    out << "faultFraction,trials,conflictRate,meanConflictVertexFraction\n";
    for (const auto& r : rows) {
        out << r.faultFraction << ',' << r.trials << ',' << r.conflictRate << ',' << r.meanConflictVertexFraction
            << '\n';
    }
    return out.str();
}

} // namespace pst
