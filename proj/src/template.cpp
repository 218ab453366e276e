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

#include "pst/template.hpp"

#include <algorithm>

namespace pst {

StrategyTemplate
StrategyTemplate::trivial(const VertexSet& region)
{
    StrategyTemplate t;
    t.winningRegion = region;
    return t;
}

void
StrategyTemplate::addLiveGroup(const GameGraph& g, const EdgeSet& group)
{
    std::vector<Edge> kept;
    for (const auto& e : group) {
        if (g.owner(e.source) == Player::Zero) kept.push_back(e);
    }
    if (!kept.empty()) liveGroups.emplace_back(std::move(kept));
}

bool
StrategyTemplate::isLive(const Edge& e) const
{
    return std::any_of(liveGroups.begin(), liveGroups.end(),
                       [&](const EdgeSet& h) { return h.contains(e); });
}

StrategyTemplate
conjoin(const StrategyTemplate& a, const StrategyTemplate& b)
{
    StrategyTemplate t;
    t.unsafe = a.unsafe | b.unsafe;
    t.colive = a.colive | b.colive;
    t.liveGroups = a.liveGroups;
    for (const auto& h : b.liveGroups) {
        if (std::find(t.liveGroups.begin(), t.liveGroups.end(), h) == t.liveGroups.end()) {
            t.liveGroups.push_back(h);
        }
    }
    t.winningRegion = a.winningRegion & b.winningRegion;
    return t;
}

ConflictReport
findConflicts(const GameGraph& g, const StrategyTemplate& t)
{
    const auto& w0 = t.winningRegion;
    auto forbidden = [&](const Edge& e) { return t.unsafe.contains(e) || t.colive.contains(e); };

    ConflictReport report{VertexSet(g.vertexCount()), VertexSet(g.vertexCount()), {}};
    for (auto v : w0) {
        if (g.owner(v) != Player::Zero) continue;
        bool dead = true;
        for (auto w : g.successors(v)) {
            if (w0.contains(w) && !forbidden({v, w})) {
                dead = false;
                break;
            }
        }
        if (dead) report.deadVertices.insert(v);
    }

    for (std::size_t i = 0; i < t.liveGroups.size(); ++i) {
        const auto& h = t.liveGroups[i];
        for (auto v : h.sources()) {
            if (!w0.contains(v) || g.owner(v) != Player::Zero) continue;
            auto out = h.from(v);
            bool starved = std::none_of(out.begin(), out.end(),
                                        [&](const Edge& e) { return w0.contains(e.target) && !forbidden(e); });
            if (starved) {
                report.starvedVertices.insert(v);
                report.starvedGroups.emplace_back(v, i);
            }
        }
    }
    std::sort(report.starvedGroups.begin(), report.starvedGroups.end());
    return report;
}

} // namespace pst
