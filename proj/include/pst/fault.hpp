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

#ifndef PST_FAULT_HPP
#define PST_FAULT_HPP

#include "pst/generator.hpp"
#include "pst/graph.hpp"
#include "pst/strategy.hpp"
#include "pst/template.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pst {

/**
 * Graph with the given Player-0 edges deleted. A vertex left without
 * successors gets a self-loop and, in the returned priority function, the
 * smallest odd priority not below every existing one, so it is losing for
 * Player 0.
 */
struct PrunedGame
{
    GameGraph graph;
    PriorityFunction priorities;
    VertexSet deadEnds;
};

PrunedGame removeFaultyEdges(const GameGraph& g, const PriorityFunction& pf, const EdgeSet& faulty);

struct FaultCorrection
{
    StrategyTemplate strategyTemplate;
    /** False when the old template with the faulty edges made unsafe was still conflict-free. */
    bool recomputed = false;
};

/**
 * Adapts a parity template to permanently faulty Player-0 edges. The
 * faulty edges are added to the unsafe set; if that keeps the template
 * conflict-free it is returned as is, otherwise the game without the
 * faulty edges is solved again (faulty edges stay unsafe in the result).
 */
FaultCorrection faultCorrection(const GameGraph& g, const PriorityFunction& pf, const StrategyTemplate& t,
                                const EdgeSet& faulty);

struct GafReport
{
    bool tolerant = true;
    /** Player-0 vertices of the region whose every edge is unsafe, co-live or faulty. */
    VertexSet vulnerable;
};

/** Sufficient condition for realizing t when faulty edges are only intermittently available. */
GafReport gafTolerant(const GameGraph& g, const StrategyTemplate& t, const EdgeSet& faulty);

/**
 * Periodic availability: at global step i the edges in unavailable[i mod p]
 * cannot be taken. An empty trace means everything is always available.
 */
struct AvailabilityTrace
{
    std::vector<EdgeSet> unavailable;

    std::size_t period() const { return unavailable.empty() ? 1 : unavailable.size(); }
    bool available(std::size_t step, const Edge& e) const
    {
        return unavailable.empty() || !unavailable[step % unavailable.size()].contains(e);
    }
};

/**
 * Online controller for a template under intermittent faults. Each
 * Player-0 vertex of the region keeps its allowed edges (outside S and D)
 * in least-recently-used order, starting from the extraction rotation; a
 * move takes the first available live-group edge, otherwise the first
 * available allowed edge, and sends it to the back of the order.
 */
class OnlineStrategy
{
public:
    OnlineStrategy(const GameGraph& g, const StrategyTemplate& t);

    /** Throws DomainError if no allowed edge is available at v. */
    VertexId move(VertexId v, std::size_t step, const AvailabilityTrace& trace);

    /** Encodes all LRU orders; restore() accepts the same encoding. */
    Memory snapshot() const;
    void restore(const Memory& m);

    const std::vector<std::vector<VertexId>>& orders() const { return order_; }

private:
    const GameGraph* graph_;
    std::vector<std::vector<VertexId>> order_;
    /** Sorted live-group targets per vertex. */
    std::vector<std::vector<VertexId>> liveTargets_;
};

/**
 * Exact check of an online strategy under a periodic trace: the product of
 * graph, step phase and all LRU orders is explored from (v, phase 0).
 */
ProductVerdict verifyOnlinePeriodic(const GameGraph& g, const OnlineStrategy& strategy,
                                    const std::vector<PriorityFunction>& objectives, const AvailabilityTrace& trace,
                                    const VertexSet& from, std::size_t maxStates = kDefaultMaxProductStates);

struct FaultStatistics
{
    double faultFraction = 0;
    std::size_t trials = 0;
    /** Fraction of trials whose template became conflicting. */
    double conflictRate = 0;
    /** Mean over trials of |conflicting vertices| / |V|. */
    double meanConflictVertexFraction = 0;
};

/**
 * Monte-Carlo estimate of how often random faults break a template. Trial
 * i shuffles the Player-0 edges with a generator seeded from (seed, i) and
 * declares the first ceil(fraction * |E0|) of them faulty, so for a fixed
 * seed the faulty sets grow with the fraction.
 */
FaultStatistics simulateFaultConflicts(const GameGraph& g, const StrategyTemplate& t, double faultFraction,
                                       std::size_t trials, std::uint64_t seed);

/**
 * Fault statistics averaged over random games: game i uses config.seed + i,
 * its first objective is solved with parityTemplate, and every fraction is
 * simulated with the game's seed. Trial counts in the result are totals.
 */
std::vector<FaultStatistics> benchFaultConflicts(const GeneratorConfig& config, std::size_t games,
                                                 const std::vector<double>& fractions, std::size_t trials);

/** CSV with header faultFraction,trials,conflictRate,meanConflictVertexFraction. */
std::string faultStatisticsCsv(const std::vector<FaultStatistics>& rows);

} // namespace pst

#endif
