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

#ifndef PST_TEMPLATE_HPP
#define PST_TEMPLATE_HPP

#include "pst/errors.hpp"
#include "pst/graph.hpp"

#include <utility>
#include <vector>

namespace pst {

/**
 * A strategy template: unsafe edges S (never take), co-live edges D (take
 * only finitely often) and live-groups H (if src(H) is visited infinitely
 * often, some edge of H is taken infinitely often), together with the
 * Player-0 region the template is winning from.
 */
struct StrategyTemplate
{
    EdgeSet unsafe;
    EdgeSet colive;
    std::vector<EdgeSet> liveGroups;
    VertexSet winningRegion;

    /** Template with no constraints that claims the given region. */
    static StrategyTemplate trivial(const VertexSet& region);

    /**
     * Appends a live-group. Edges whose source is a Player-1 vertex are
     * dropped; a group left empty is not added.
     */
    void addLiveGroup(const GameGraph& g, const EdgeSet& group);

    bool isLive(const Edge& e) const;

    friend bool operator==(const StrategyTemplate&, const StrategyTemplate&) = default;
};

/**
 * Conjunction: unions S and D, concatenates the live-group lists (dropping
 * groups already present) and intersects the regions.
 */
StrategyTemplate conjoin(const StrategyTemplate& a, const StrategyTemplate& b);

/** Result of a conflict check. */
struct ConflictReport
{
    /** Player-0 vertices whose every edge inside the region is unsafe or co-live. */
    VertexSet deadVertices;
    /** Player-0 vertices with a live-group whose edges from there are all forbidden. */
    VertexSet starvedVertices;
    /** (vertex, index into liveGroups) for every starved pair. */
    std::vector<std::pair<VertexId, std::size_t>> starvedGroups;

    bool empty() const { return deadVertices.empty() && starvedVertices.empty(); }
    VertexSet all() const { return deadVertices | starvedVertices; }
};

ConflictReport findConflicts(const GameGraph& g, const StrategyTemplate& t);

inline bool
isConflictFree(const GameGraph& g, const StrategyTemplate& t)
{
    return findConflicts(g, t).empty();
}

/** Raised when an operation needs a conflict-free template. */
class ConflictError : public Error
{
public:
    explicit ConflictError(ConflictReport report)
        : Error("strategy template has conflicts"), report_(std::move(report))
    {
    }

    const ConflictReport& report() const { return report_; }

private:
    ConflictReport report_;
};

} // namespace pst

#endif
