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

#ifndef PST_GENERATOR_HPP
#define PST_GENERATOR_HPP

#include "pst/io.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace pst {

struct GeneratorConfig
{
    std::size_t vertices = 0;
    /** Total edge count; at least vertices, at most vertices^2. */
    std::size_t edges = 0;
    std::size_t objectives = 1;
    Priority maxPriority = 1;
    std::uint64_t seed = 0;
    /** When set, only priorities are generated; vertices and edges are ignored. */
    std::optional<GameGraph> base;
};

/**
 * Random game: owners are fair coin flips, every vertex gets one random
 * successor and further distinct random edges are added up to the edge
 * count. Each objective selects half of the vertices (rounded down) and
 * splits them evenly over the priorities 0..m, the remainder going to m;
 * the other vertices get uniform priorities in [0, m]. Deterministic in
 * the seed.
 */
Game generateGame(const GeneratorConfig& config);

/** One objective as described for generateGame. */
PriorityFunction generatePriorities(std::size_t vertices, Priority maxPriority, std::mt19937_64& rng);

} // namespace pst

#endif
