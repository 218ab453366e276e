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

#include "pst/solvers.hpp"

#include "pst/errors.hpp"
#include "pst/transformers.hpp"

#include <algorithm>

namespace pst {

namespace {

std::int64_t
successorsIn(const GameGraph& g, const VertexSet& domain, VertexId v)
{
    std::int64_t count = 0;
    for (auto w : g.successors(v)) {
        if (domain.contains(w)) ++count;
    }
    return count;
}

EdgeSet
playerZeroEdges(const GameGraph& g, const VertexSet& from, const VertexSet& to)
{
    std::vector<Edge> edges;
    for (auto u : from) {
        if (g.owner(u) != Player::Zero) continue;
        for (auto v : g.successors(u)) {
            if (to.contains(v)) edges.push_back({u, v});
        }
    }
    return EdgeSet(std::move(edges));
}

struct Layers
{
    std::vector<EdgeSet> groups;
    VertexSet reached;
};

/*
 * Layered Player-0 attractor inside domain. Each round closes the current
 * set under the universal predecessor, then adds the frontier of Player-0
 * vertices with some successor in the set; the edges from the frontier
 * into the set form one live-group. Stops at attr0(target).
 */
Layers
reachLayers(const GameGraph& g, const VertexSet& domain, const VertexSet& target)
{
    Layers out{{}, target & domain};
    VertexSet& in = out.reached;
    std::vector<VertexId> queue = in.toVector();
    std::vector<std::int64_t> missing(g.vertexCount(), -1);
    std::vector<VertexId> touched;
    std::size_t head = 0;

    while (true) {
        for (; head < queue.size(); ++head) {
            for (auto p : g.predecessors(queue[head])) {
                if (!domain.contains(p) || in.contains(p)) continue;
                if (missing[p] < 0) missing[p] = successorsIn(g, domain, p);
                if (--missing[p] == 0) {
                    in.insert(p);
                    queue.push_back(p);
                } else if (g.owner(p) == Player::Zero) {
                    touched.push_back(p);
                }
            }
        }

        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        std::vector<Edge> group;
        std::vector<VertexId> frontier;
        for (auto b : touched) {
            if (in.contains(b)) continue;
            frontier.push_back(b);
            for (auto w : g.successors(b)) {
                if (in.contains(w)) group.push_back({b, w});
            }
        }
        touched.clear();
        if (frontier.empty()) break;

        out.groups.emplace_back(std::move(group));
        for (auto b : frontier) {
            in.insert(b);
            queue.push_back(b);
        }
    }
    return out;
}

struct ParityParts
{
    VertexSet w0;
    VertexSet w1;
    std::vector<EdgeSet> groups;
    EdgeSet colive;
};

void
append(std::vector<EdgeSet>& into, std::vector<EdgeSet>&& from)
{
    std::move(from.begin(), from.end(), std::back_inserter(into));
}

/*
 * The second recursive call of each branch is a tail call on a smaller
 * domain; it runs as the next loop iteration with the outer contributions
 * kept in acc.
 */
ParityParts
solveParity(const GameGraph& g, const PriorityFunction& pf, VertexSet domain)
{
    const std::size_t n = g.vertexCount();
    ParityParts acc{VertexSet(n), VertexSet(n), {}, {}};

    while (!domain.empty()) {
        Priority d = 0;
        for (auto v : domain) d = std::max(d, pf[v]);
        VertexSet top(n);
        for (auto v : domain) {
            if (pf[v] == d) top.insert(v);
        }

        if (d % 2 == 1) {
            VertexSet a = attr(g, domain, top, Player::One);
            if (a == domain) {
                acc.w1 |= domain;
                return acc;
            }
            ParityParts sub = solveParity(g, pf, domain - a);
            if (sub.w0.empty()) {
                acc.w1 |= domain;
                return acc;
            }
            Layers layers = reachLayers(g, domain, sub.w0);
            acc.colive |= playerZeroEdges(g, sub.w0, domain - sub.w0);
            acc.colive |= sub.colive;
            append(acc.groups, std::move(sub.groups));
            append(acc.groups, std::move(layers.groups));
            acc.w0 |= layers.reached;
            domain -= layers.reached;
        } else {
            VertexSet a = attr(g, domain, top, Player::Zero);
            if (a == domain) {
                acc.w0 |= domain;
                append(acc.groups, reachLayers(g, domain, top).groups);
                return acc;
            }
            ParityParts sub = solveParity(g, pf, domain - a);
            if (sub.w1.empty()) {
                acc.w0 |= domain;
                acc.colive |= sub.colive;
                append(acc.groups, std::move(sub.groups));
                append(acc.groups, reachLayers(g, domain, top).groups);
                return acc;
            }
            VertexSet b = attr(g, domain, sub.w1, Player::One);
            acc.w1 |= b;
            domain -= b;
        }
    }
    return acc;
}

} // namespace

EdgeSet
leavingEdges(const GameGraph& g, const VertexSet& region)
{
    return playerZeroEdges(g, region, region.complement());
}

VertexSet
safetyWin(const GameGraph& g, const VertexSet& safe)
{
    return safetyRegion(g, g.vertices(), safe);
}

VertexSet
buchiWin(const GameGraph& g, const VertexSet& target)
{
    return buchiRegion(g, g.vertices(), target, Player::Zero);
}

VertexSet
cobuchiWin(const GameGraph& g, const VertexSet& target)
{
    const VertexSet all = g.vertices();
    return all - buchiRegion(g, all, all - target, Player::One);
}

SolveResult
safetyTemplate(const GameGraph& g, const VertexSet& safe)
{
    SolveResult r;
    r.winningRegion0 = safetyWin(g, safe);
    r.winningRegion1 = r.winningRegion0.complement();
    r.strategyTemplate = StrategyTemplate::trivial(r.winningRegion0);
    r.strategyTemplate.unsafe = leavingEdges(g, r.winningRegion0);
    return r;
}

std::vector<EdgeSet>
reachTemplate(const GameGraph& g, const VertexSet& target)
{
    return reachTemplate(g, g.vertices(), target);
}

std::vector<EdgeSet>
reachTemplate(const GameGraph& g, const VertexSet& domain, const VertexSet& target)
{
    Layers layers = reachLayers(g, domain, target);
    if (layers.reached != domain) {
        throw PreconditionError("reachTemplate: target is not reachable from every vertex of the domain");
    }
    return std::move(layers.groups);
}

SolveResult
buchiTemplate(const GameGraph& g, const VertexSet& target)
{
    SolveResult r;
    r.winningRegion0 = buchiWin(g, target);
    r.winningRegion1 = r.winningRegion0.complement();
    r.strategyTemplate = StrategyTemplate::trivial(r.winningRegion0);
    r.strategyTemplate.unsafe = leavingEdges(g, r.winningRegion0);
    for (auto& h : reachTemplate(g, r.winningRegion0, target & r.winningRegion0)) {
        r.strategyTemplate.addLiveGroup(g, h);
    }
    return r;
}

SolveResult
cobuchiTemplate(const GameGraph& g, const VertexSet& target)
{
    const std::size_t n = g.vertexCount();
    SolveResult r;
    r.winningRegion0 = cobuchiWin(g, target);
    r.winningRegion1 = r.winningRegion0.complement();
    r.strategyTemplate = StrategyTemplate::trivial(r.winningRegion0);
    r.strategyTemplate.unsafe = leavingEdges(g, r.winningRegion0);

    VertexSet domain = r.winningRegion0;
    VertexSet goal = target & domain;
    EdgeSet& colive = r.strategyTemplate.colive;
    std::vector<std::int64_t> missing(n, -1);
    std::vector<std::uint32_t> layer(n, 0);

    while (!domain.empty()) {
        VertexSet safe = safetyRegion(g, domain, goal);
        if (safe.empty()) throw Error("cobuchiTemplate: no safe core inside the co-Buchi region");
        colive |= playerZeroEdges(g, safe, domain - safe);

        // Player-0 attractor of the safe core, one layer per cpre step.
        VertexSet attracted = safe;
        std::vector<VertexId> current = safe.toVector();
        std::vector<VertexId> members = current;
        for (auto v : current) layer[v] = 0;
        for (std::uint32_t k = 1; !current.empty(); ++k) {
            std::vector<VertexId> next;
            for (auto x : current) {
                for (auto p : g.predecessors(x)) {
                    if (!domain.contains(p) || attracted.contains(p)) continue;
                    if (g.owner(p) != Player::Zero) {
                        if (missing[p] < 0) missing[p] = successorsIn(g, domain, p);
                        if (--missing[p] != 0) continue;
                    }
                    attracted.insert(p);
                    layer[p] = k;
                    next.push_back(p);
                }
            }
            members.insert(members.end(), next.begin(), next.end());
            current = std::move(next);
        }

        std::vector<Edge> edges;
        for (auto b : members) {
            if (layer[b] == 0 || g.owner(b) != Player::Zero) continue;
            for (auto w : g.successors(b)) {
                if (!domain.contains(w)) continue;
                if (!attracted.contains(w) || layer[w] >= layer[b]) edges.push_back({b, w});
            }
        }
        colive |= EdgeSet(std::move(edges));

        for (auto p : domain) missing[p] = -1;
        domain -= attracted;
        goal &= domain;
    }
    return r;
}

SolveResult
parityTemplate(const GameGraph& g, const PriorityFunction& pf)
{
    return parityTemplate(g, g.vertices(), pf);
}

SolveResult
parityTemplate(const GameGraph& g, const VertexSet& domain, const PriorityFunction& pf)
{
    if (pf.size() != g.vertexCount()) throw InvalidInputError("priority function does not match the graph");
    ParityParts parts = solveParity(g, pf, domain);

    SolveResult r;
    r.winningRegion0 = parts.w0;
    r.winningRegion1 = domain - parts.w0;
    r.strategyTemplate = StrategyTemplate::trivial(parts.w0);
    r.strategyTemplate.unsafe = leavingEdges(g, parts.w0);
    r.strategyTemplate.colive = std::move(parts.colive);
    for (auto& h : parts.groups) r.strategyTemplate.addLiveGroup(g, h);
    return r;
}

} // namespace pst
