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

#ifndef PST_SOLVERS_HPP
#define PST_SOLVERS_HPP

#include "pst/graph.hpp"
#include "pst/template.hpp"

#include <vector>

namespace pst {

/** Winning regions of both players plus a template winning from the first. */
struct SolveResult
{
    VertexSet winningRegion0;
    VertexSet winningRegion1;
    StrategyTemplate strategyTemplate;
};

/** Player-0 region for "always stay in safe". */
VertexSet safetyWin(const GameGraph& g, const VertexSet& safe);
/** Player-0 region for "visit target infinitely often". */
VertexSet buchiWin(const GameGraph& g, const VertexSet& target);
/** Player-0 region for "eventually stay in target forever". */
VertexSet cobuchiWin(const GameGraph& g, const VertexSet& target);

/**
 * Safety template: the region plus every Player-0 edge leaving it as
 * unsafe. Maximally permissive.
 */
SolveResult safetyTemplate(const GameGraph& g, const VertexSet& safe);

/**
 * Live-groups that force a visit to target, one group per attractor layer.
 * Every vertex of the domain must be in the Player-0 attractor of target
 * (PreconditionError otherwise).
 */
std::vector<EdgeSet> reachTemplate(const GameGraph& g, const VertexSet& target);
std::vector<EdgeSet> reachTemplate(const GameGraph& g, const VertexSet& domain, const VertexSet& target);

SolveResult buchiTemplate(const GameGraph& g, const VertexSet& target);
SolveResult cobuchiTemplate(const GameGraph& g, const VertexSet& target);

/**
 * Parity template by Zielonka-style recursion. Priorities are read from
 * pf; the declared maximum is irrelevant.
 */
SolveResult parityTemplate(const GameGraph& g, const PriorityFunction& pf);

/**
 * Same, on the subgame induced by domain (which must be total). The
 * unsafe set holds every Player-0 edge from the region to outside it,
 * including edges leaving the domain; winningRegion1 = domain minus region.
 */
SolveResult parityTemplate(const GameGraph& g, const VertexSet& domain, const PriorityFunction& pf);

/** Player-0 edges from the region to any vertex outside it. */
EdgeSet leavingEdges(const GameGraph& g, const VertexSet& region);

} // namespace pst

#endif
