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

#include "pst/compose.hpp"

#include "pst/errors.hpp"
#include "pst/solvers.hpp"
#include "pst/transformers.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>
#include <utility>

namespace pst {

namespace {

/** Removes vertices of region from which Player 1 can force a dead end of the subgame. */
VertexSet
trimDeadEnds(const GameGraph& g, const VertexSet& region)
{
    VertexSet dead(g.vertexCount());
    for (auto v : region) {
        bool any = false;
        for (auto w : g.successors(v)) {
            if (region.contains(w)) {
                any = true;
                break;
            }
        }
        if (!any) dead.insert(v);
    }
    if (dead.empty()) return region;
    return region - attr(g, region, dead, Player::One);
}

std::vector<SolveResult>
solveAll(const GameGraph& g, const VertexSet& domain, const std::vector<PriorityFunction>& objectives,
         const std::vector<std::size_t>& which, unsigned jobs)
{
    std::vector<SolveResult> results(which.size());
    if (jobs <= 1 || which.size() <= 1) {
        for (std::size_t i = 0; i < which.size(); ++i) results[i] = parityTemplate(g, domain, objectives[which[i]]);
        return results;
    }
    const unsigned workers = std::min<std::size_t>(jobs, which.size());
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < which.size(); i += workers) {
                    results[i] = parityTemplate(g, domain, objectives[which[i]]);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

std::pair<std::size_t, std::size_t>
measure(const VertexSet& region, const std::vector<PriorityFunction>& objectives)
{
    std::size_t belowTop = 0;
    for (const auto& pf : objectives) {
        for (auto v : region) {
            if (pf[v] != pf.maxPriority()) ++belowTop;
        }
    }
    return {region.count(), belowTop};
}

} // namespace

ComposeState
ComposeState::initial(const GameGraph& g)
{
    return {g.vertices(), {}, {}, {}};
}

PriorityFunction
padToOddMax(const PriorityFunction& pf)
{
    const Priority top = pf.maxPriority() % 2 == 1 ? pf.maxPriority() : pf.maxPriority() + 1;
    return PriorityFunction(pf.values(), top);
}

PriorityFunction
relabel(const PriorityFunction& pf, const VertexSet& u)
{
    if (pf.maxPriority() % 2 == 0) throw InvalidInputError("relabel needs an odd declared maximum priority");
    std::vector<Priority> values = pf.values();
    for (auto v : u) values[v] = pf.maxPriority();
    return PriorityFunction(std::move(values), pf.maxPriority());
}

ComposeResult
composeTemplates(const GameGraph& g, const ComposeState& state, const std::vector<PriorityFunction>& newObjectives,
                 const ComposeOptions& options)
{
    ComposeResult result;
    ComposeState& s = result.state;
    s = state;
    std::vector<std::size_t> pending;
    for (const auto& pf : newObjectives) {
        if (pf.size() != g.vertexCount()) throw InvalidInputError("priority function does not match the graph");
        pending.push_back(s.objectives.size());
        s.objectives.push_back(padToOddMax(pf));
    }

    std::optional<std::pair<std::size_t, std::size_t>> previous;
    while (true) {
        const VertexSet domain = trimDeadEnds(g, s.winningRegion);
        s.winningRegion = domain;
        for (auto& r : solveAll(g, domain, s.objectives, pending, options.jobs)) {
            for (auto& h : r.strategyTemplate.liveGroups) s.liveGroups.push_back(std::move(h));
            s.colive |= r.strategyTemplate.colive;
            s.winningRegion &= r.winningRegion0;
        }

        StrategyTemplate t;
        t.winningRegion = s.winningRegion;
        t.unsafe = leavingEdges(g, s.winningRegion);
        t.colive = s.colive;
        t.liveGroups = s.liveGroups;
        ConflictReport report = findConflicts(g, t);
        if (report.empty()) {
            result.strategyTemplate = std::move(t);
            return result;
        }

        const VertexSet conflicting = report.all();
        for (auto& pf : s.objectives) pf = relabel(pf, conflicting);
        auto current = measure(s.winningRegion, s.objectives);
        if (previous && !(current < *previous)) {
            throw Error("composeTemplates: termination measure did not decrease");
        }
        previous = current;
        ++result.relabelRounds;

        s.liveGroups.clear();
        s.colive = EdgeSet();
        pending.clear();
        for (std::size_t i = 0; i < s.objectives.size(); ++i) pending.push_back(i);
    }
}

ComposeResult
addObjective(const GameGraph& g, const ComposeState& state, const PriorityFunction& pf, const ComposeOptions& options)
{
    return composeTemplates(g, state, {pf}, options);
}

} // namespace pst
