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

#ifndef PST_COMPOSE_HPP
#define PST_COMPOSE_HPP

#include "pst/graph.hpp"
#include "pst/template.hpp"

#include <cstddef>
#include <vector>

namespace pst {

/**
 * Accumulated result of composing parity objectives: a partial region,
 * the live-groups and co-live edges collected so far, and every objective
 * as currently relabelled (with an odd declared maximum).
 */
struct ComposeState
{
    VertexSet winningRegion;
    std::vector<EdgeSet> liveGroups;
    EdgeSet colive;
    std::vector<PriorityFunction> objectives;

    /** Starting state over g: whole vertex set, nothing collected. */
    static ComposeState initial(const GameGraph& g);
};

struct ComposeResult
{
    ComposeState state;
    /** Conflict-free template; unsafe = Player-0 edges leaving the region. */
    StrategyTemplate strategyTemplate;
    /** Number of conflict-resolution rounds that relabelled objectives. */
    std::size_t relabelRounds = 0;
};

struct ComposeOptions
{
    /** Worker threads for solving objectives of one round (1 = sequential). */
    unsigned jobs = 1;
};

/** Extends the declared maximum to the next odd value; priorities unchanged. */
PriorityFunction padToOddMax(const PriorityFunction& pf);

/** Sets every vertex of u to the declared maximum, which must be odd. */
PriorityFunction relabel(const PriorityFunction& pf, const VertexSet& u);

/**
 * Adds new parity objectives to a composition state and returns a
 * conflict-free template winning for all of them from the returned region.
 * Each round solves the pending objectives on the current region, merges
 * their templates and looks for conflicts; conflicting vertices are given
 * the top odd priority in every objective and all objectives are solved
 * again on the shrunken region. Sound but not complete.
 */
ComposeResult composeTemplates(const GameGraph& g, const ComposeState& state,
                               const std::vector<PriorityFunction>& newObjectives, const ComposeOptions& options = {});

/** composeTemplates with a single new objective. */
ComposeResult addObjective(const GameGraph& g, const ComposeState& state, const PriorityFunction& pf,
                           const ComposeOptions& options = {});

} // namespace pst

#endif
