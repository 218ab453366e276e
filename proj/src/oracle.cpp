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

#include "pst/oracle.hpp"

#include "pst/errors.hpp"
#include "pst/transformers.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace pst {

namespace {

std::pair<VertexSet, VertexSet>
zielonka(const GameGraph& g, const PriorityFunction& pf, const VertexSet& domain)
{
    const std::size_t n = g.vertexCount();
    if (domain.empty()) return {VertexSet(n), VertexSet(n)};

    Priority d = 0;
    for (auto v : domain) d = std::max(d, pf[v]);
    VertexSet top(n);
    for (auto v : domain) {
        if (pf[v] == d) top.insert(v);
    }
    const Player p = d % 2 == 0 ? Player::Zero : Player::One;
    const Player q = opponent(p);

    VertexSet a = attr(g, domain, top, p);
    auto [w0, w1] = zielonka(g, pf, domain - a);
    VertexSet& opp = q == Player::Zero ? w0 : w1;
    if (opp.empty()) {
        if (p == Player::Zero) return {domain, VertexSet(n)};
        return {VertexSet(n), domain};
    }
    VertexSet b = attr(g, domain, opp, q);
    auto [x0, x1] = zielonka(g, pf, domain - b);
    if (q == Player::Zero) {
        x0 |= b;
    } else {
        x1 |= b;
    }
    return {x0, x1};
}

using Mask = std::uint32_t;

Mask
bit(VertexId v)
{
    return Mask{1} << v;
}

/** Vertices of T reachable from s using edges inside T. */
Mask
forwardWithin(const std::vector<Mask>& adj, Mask t, VertexId s)
{
    Mask seen = bit(s);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)] & t;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

/** T is strongly connected and carries at least one edge. */
bool
isStronglyConnected(const std::vector<Mask>& adj, const std::vector<Mask>& pred, Mask t)
{
    const VertexId s = static_cast<VertexId>(std::countr_zero(t));
    if (std::has_single_bit(t)) return (adj[s] & t) != 0;
    return forwardWithin(adj, t, s) == t && forwardWithin(pred, t, s) == t;
}

std::vector<Mask>
transpose(const std::vector<Mask>& adj)
{
    std::vector<Mask> pred(adj.size(), 0);
    for (VertexId v = 0; v < adj.size(); ++v) {
        for (Mask m = adj[v]; m; m &= m - 1) pred[std::countr_zero(m)] |= bit(v);
    }
    return pred;
}

/** Vertices with a path into target. */
Mask
canReach(const std::vector<Mask>& pred, Mask target)
{
    Mask seen = target;
    Mask frontier = target;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= pred[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

/** For every subset T: does every objective have an even maximum (want=0) / odd (want=1) over T. */
std::vector<bool>
subsetsWithParity(std::size_t n, const std::vector<PriorityFunction>& objectives, bool odd)
{
    const std::size_t count = std::size_t{1} << n;
    std::vector<bool> ok(count, false);
    std::vector<Priority> maxOver(count, 0);
    std::vector<bool> all(count, true);
    for (const auto& pf : objectives) {
        for (std::size_t t = 1; t < count; ++t) {
            const auto low = static_cast<VertexId>(std::countr_zero(t));
            const std::size_t rest = t & (t - 1);
            maxOver[t] = rest ? std::max(maxOver[rest], pf[low]) : pf[low];
            if ((maxOver[t] % 2 == 1) != odd) all[t] = false;
        }
    }
    for (std::size_t t = 1; t < count; ++t) ok[t] = all[t];
    return ok;
}

VertexSet
fromMask(std::size_t n, Mask m)
{
    VertexSet s(n);
    for (; m; m &= m - 1) s.insert(static_cast<VertexId>(std::countr_zero(m)));
    return s;
}

Mask
toMask(const VertexSet& s)
{
    Mask m = 0;
    for (auto v : s) m |= bit(v);
    return m;
}

std::vector<Mask>
successorMasks(const GameGraph& g)
{
    std::vector<Mask> adj(g.vertexCount(), 0);
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
        for (auto w : g.successors(v)) adj[v] |= bit(w);
    }
    return adj;
}

/** Advances a mixed-radix counter; false once it wraps around. */
bool
advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix)
{
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < radix[i]) return true;
        digits[i] = 0;
    }
    return false;
}

std::size_t
strategyCount(const GameGraph& g, Player p, std::size_t cap)
{
    std::size_t count = 1;
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
        if (g.owner(v) != p) continue;
        count *= g.outDegree(v);
        if (count > cap) throw SizeGuardError("too many positional strategies to enumerate");
    }
    return count;
}

} // namespace

OracleRegions
zielonkaRegions(const GameGraph& g, const PriorityFunction& pf)
{
    if (pf.size() != g.vertexCount()) throw InvalidInputError("priority function does not match the graph");
    auto [w0, w1] = zielonka(g, pf, g.vertices());
    return {w0, w1};
}

VertexSet
bruteForceGenParityRegion(const GameGraph& g, const std::vector<PriorityFunction>& objectives)
{
    const std::size_t n = g.vertexCount();
    if (n > kBruteForceMaxVertices) {
        throw SizeGuardError("brute-force oracle limited to " + std::to_string(kBruteForceMaxVertices) + " vertices");
    }
    for (const auto& pf : objectives) {
        if (pf.size() != n) throw InvalidInputError("priority function does not match the graph");
    }
    strategyCount(g, Player::One, kBruteForceMaxStrategies);

    const std::vector<Mask> succ = successorMasks(g);
    const std::vector<bool> even = subsetsWithParity(n, objectives, false);
    std::vector<Mask> candidates;
    for (Mask t = 1; t < (Mask{1} << n); ++t) {
        if (even[t]) candidates.push_back(t);
    }

    std::vector<VertexId> p1;
    std::vector<std::size_t> radix;
    for (VertexId v = 0; v < n; ++v) {
        if (g.owner(v) == Player::One) {
            p1.push_back(v);
            radix.push_back(g.outDegree(v));
        }
    }

    Mask region = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    std::vector<std::size_t> digits(p1.size(), 0);
    do {
        std::vector<Mask> adj = succ;
        for (std::size_t i = 0; i < p1.size(); ++i) adj[p1[i]] = bit(g.successors(p1[i])[digits[i]]);
        const std::vector<Mask> pred = transpose(adj);
        Mask good = 0;
        for (Mask t : candidates) {
            if ((t & ~good) && isStronglyConnected(adj, pred, t)) good |= t;
        }
        region &= canReach(pred, good);
    } while (region && advance(digits, radix));
    return fromMask(n, region);
}

VertexSet
positionalWinSet(const GameGraph& g, const SimpleObjective& objective, const PositionalStrategy& choice)
{
    const std::size_t n = g.vertexCount();
    std::vector<Mask> adj = successorMasks(g);
    for (VertexId v = 0; v < n; ++v) {
        if (g.owner(v) == Player::Zero) adj[v] = bit(choice[v]);
    }
    const std::vector<Mask> pred = transpose(adj);
    const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);

    Mask losing = 0;
    if (const auto* safety = std::get_if<SafetyObjective>(&objective)) {
        losing = canReach(pred, all & ~toMask(safety->safe));
    } else {
        const auto& pf = std::get<PriorityFunction>(objective);
        const std::vector<bool> odd = subsetsWithParity(n, {pf}, true);
        Mask bad = 0;
        for (Mask t = 1; t <= all; ++t) {
            if (odd[t] && (t & ~bad) && isStronglyConnected(adj, pred, t)) bad |= t;
        }
        losing = canReach(pred, bad);
    }
    return fromMask(n, all & ~losing);
}

PositionalEnumeration
enumerateWinningPositional(const GameGraph& g, const SimpleObjective& objective)
{
    const std::size_t n = g.vertexCount();
    if (n > kEnumerationMaxVertices) {
        throw SizeGuardError("strategy enumeration limited to " + std::to_string(kEnumerationMaxVertices) +
                             " vertices");
    }
    if (const auto* pf = std::get_if<PriorityFunction>(&objective); pf && pf->size() != n) {
        throw InvalidInputError("priority function does not match the graph");
    }
    strategyCount(g, Player::Zero, kBruteForceMaxStrategies);

    std::vector<VertexId> p0;
    std::vector<std::size_t> radix;
    for (VertexId v = 0; v < n; ++v) {
        if (g.owner(v) == Player::Zero) {
            p0.push_back(v);
            radix.push_back(g.outDegree(v));
        }
    }

    std::vector<std::pair<PositionalStrategy, VertexSet>> all;
    std::vector<std::size_t> digits(p0.size(), 0);
    do {
        PositionalStrategy choice(n, 0);
        for (std::size_t i = 0; i < p0.size(); ++i) choice[p0[i]] = g.successors(p0[i])[digits[i]];
        VertexSet win = positionalWinSet(g, objective, choice);
        all.emplace_back(std::move(choice), std::move(win));
    } while (advance(digits, radix));

    PositionalEnumeration out;
    out.total = all.size();
    out.winningRegion = VertexSet(n);
    for (const auto& [choice, win] : all) out.winningRegion |= win;
    for (auto& [choice, win] : all) {
        if (out.winningRegion.isSubsetOf(win)) out.winning.push_back(std::move(choice));
    }
    return out;
}

} // namespace pst
