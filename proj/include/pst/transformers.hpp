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

#ifndef PST_TRANSFORMERS_HPP
#define PST_TRANSFORMERS_HPP

#include "pst/graph.hpp"

namespace pst {

/*
 * Set transformers over a game graph. Every operator has a second form
 * taking a domain mask: it then works on the subgame induced by the domain
 * (edges leaving the domain are ignored) without materialising it. Domains
 * handed to these functions must be total, i.e. every member keeps at least
 * one successor inside the domain.
 */

/** Vertices all of whose successors lie in target. */
VertexSet upre(const GameGraph& g, const VertexSet& target);
VertexSet upre(const GameGraph& g, const VertexSet& domain, const VertexSet& target);

/** Vertices from which player can force the next vertex into target. */
VertexSet cpre(const GameGraph& g, const VertexSet& target, Player player);
VertexSet cpre(const GameGraph& g, const VertexSet& domain, const VertexSet& target, Player player);

/**
 * Attractor of player to target, including target. Linear-time worklist
 * with per-vertex remaining-successor counters.
 */
VertexSet attr(const GameGraph& g, const VertexSet& target, Player player);
VertexSet attr(const GameGraph& g, const VertexSet& domain, const VertexSet& target, Player player);

/** Universal attractor: vertices from which every play reaches target. */
VertexSet uattr(const GameGraph& g, const VertexSet& target);
VertexSet uattr(const GameGraph& g, const VertexSet& domain, const VertexSet& target);

/** Player-0 region of the safety game "always stay in safe". */
VertexSet safetyRegion(const GameGraph& g, const VertexSet& domain, const VertexSet& safe);

/** Region from which player can visit target infinitely often. */
VertexSet buchiRegion(const GameGraph& g, const VertexSet& domain, const VertexSet& target, Player player);

} // namespace pst

#endif
