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

#ifndef PST_ORACLE_HPP
#define PST_ORACLE_HPP

#include "pst/graph.hpp"

#include <variant>
#include <vector>

namespace pst {

/*
 * Reference solvers used to cross-check the template algorithms. They
 * depend on the graph model and the set transformers only.
 */

struct OracleRegions
{
    VertexSet winningRegion0;
    VertexSet winningRegion1;
};

/** Classical recursive Zielonka solver. */
OracleRegions zielonkaRegions(const GameGraph& g, const PriorityFunction& pf);

/** Largest graph accepted by bruteForceGenParityRegion. */
inline constexpr std::size_t kBruteForceMaxVertices = 12;
/** Cap on the number of Player-1 positional strategies enumerated. */
inline constexpr std::size_t kBruteForceMaxStrategies = 1u << 20;

/**
 * Player-0 region of a conjunction of parity objectives. Enumerates all
 * positional Player-1 strategies; against a fixed one, Player 0 wins from v
 * iff v reaches a strongly connected vertex set whose maximum priority is
 * even for every objective. Throws SizeGuardError above the bounds.
 */
VertexSet bruteForceGenParityRegion(const GameGraph& g, const std::vector<PriorityFunction>& objectives);

struct SafetyObjective
{
    VertexSet safe;
};

using SimpleObjective = std::variant<SafetyObjective, PriorityFunction>;

/** choice[v] is the successor picked at a Player-0 vertex v; unused for Player 1. */
using PositionalStrategy = std::vector<VertexId>;

struct PositionalEnumeration
{
    VertexSet winningRegion;
    /** Every positional Player-0 strategy winning from the whole region. */
    std::vector<PositionalStrategy> winning;
    std::size_t total = 0;
};

inline constexpr std::size_t kEnumerationMaxVertices = 7;

/** Exhaustive enumeration of positional Player-0 strategies (n <= 7). */
PositionalEnumeration enumerateWinningPositional(const GameGraph& g, const SimpleObjective& objective);

/** Region won by a fixed positional Player-0 strategy. */
VertexSet positionalWinSet(const GameGraph& g, const SimpleObjective& objective, const PositionalStrategy& choice);

} // namespace pst

#endif
