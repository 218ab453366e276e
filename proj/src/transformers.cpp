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

#include "pst/transformers.hpp"

#include <vector>

namespace pst {

namespace {

std::uint32_t
successorsIn(const GameGraph& g, const VertexSet& domain, VertexId v)
{
    std::uint32_t count = 0;
    for (auto w : g.successors(v)) {
        if (domain.contains(w)) ++count;
    }
    return count;
}

/*
 * Shared worklist for attr/uattr. A vertex joins when it is owned by the
 * attracting player and has one successor in the set, or when all its
 * in-domain successors are in the set. universal=true disables the first rule.
 */
VertexSet
attract(const GameGraph& g, const VertexSet& domain, const VertexSet& target, Player player, bool universal)
{
    VertexSet result = target & domain;
    std::vector<VertexId> queue = result.toVector();
    std::vector<std::int64_t> remaining(g.vertexCount(), -1);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        for (auto p : g.predecessors(x)) {
            if (!domain.contains(p) || result.contains(p)) continue;
            if (!universal && g.owner(p) == player) {
                result.insert(p);
                queue.push_back(p);
                continue;
            }
            if (remaining[p] < 0) remaining[p] = successorsIn(g, domain, p);
            if (--remaining[p] == 0) {
                result.insert(p);
                queue.push_back(p);
            }
        }
    }
    return result;
}

} // namespace

VertexSet
upre(const GameGraph& g, const VertexSet& target)
{
    return upre(g, g.vertices(), target);
}

VertexSet
upre(const GameGraph& g, const VertexSet& domain, const VertexSet& target)
{
    std::vector<std::int64_t> missing(g.vertexCount(), -1);
    VertexSet result(g.vertexCount());
    for (auto x : target & domain) {
        for (auto p : g.predecessors(x)) {
            if (!domain.contains(p)) continue;
            if (missing[p] < 0) missing[p] = successorsIn(g, domain, p);
            if (--missing[p] == 0) result.insert(p);
        }
    }
    return result;
}

VertexSet
cpre(const GameGraph& g, const VertexSet& target, Player player)
{
    return cpre(g, g.vertices(), target, player);
}

VertexSet
cpre(const GameGraph& g, const VertexSet& domain, const VertexSet& target, Player player)
{
    std::vector<std::int64_t> missing(g.vertexCount(), -1);
    VertexSet result(g.vertexCount());
    for (auto x : target & domain) {
        for (auto p : g.predecessors(x)) {
            if (!domain.contains(p) || result.contains(p)) continue;
            if (g.owner(p) == player) {
                result.insert(p);
                continue;
            }
            if (missing[p] < 0) missing[p] = successorsIn(g, domain, p);
            if (--missing[p] == 0) result.insert(p);
        }
    }
    return result;
}

VertexSet
attr(const GameGraph& g, const VertexSet& target, Player player)
{
    return attract(g, g.vertices(), target, player, false);
}

VertexSet
attr(const GameGraph& g, const VertexSet& domain, const VertexSet& target, Player player)
{
    return attract(g, domain, target, player, false);
}

VertexSet
uattr(const GameGraph& g, const VertexSet& target)
{
    return attract(g, g.vertices(), target, Player::Zero, true);
}

VertexSet
uattr(const GameGraph& g, const VertexSet& domain, const VertexSet& target)
{
    return attract(g, domain, target, Player::Zero, true);
}

VertexSet
safetyRegion(const GameGraph& g, const VertexSet& domain, const VertexSet& safe)
{
    return domain - attract(g, domain, domain - safe, Player::One, false);
}

VertexSet
buchiRegion(const GameGraph& g, const VertexSet& domain, const VertexSet& target, Player player)
{
    // Repeatedly remove the opponent's attractor to the set from which the
    // target cannot be forced; what survives is the Büchi region.
    VertexSet current = domain;
    while (true) {
        VertexSet reach = attract(g, current, target, player, false);
        VertexSet escape = current - reach;
        if (escape.empty()) return current;
        current -= attract(g, current, escape, opponent(player), false);
    }
}

} // namespace pst
