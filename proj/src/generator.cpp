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

#include "pst/generator.hpp"

#include "pst/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace pst {

PriorityFunction
generatePriorities(std::size_t vertices, Priority maxPriority, std::mt19937_64& rng)
{
    std::vector<VertexId> order(vertices);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Priority> values(vertices, 0);
    const std::size_t selected = vertices / 2;
    const std::size_t strata = static_cast<std::size_t>(maxPriority) + 1;
    const std::size_t perStratum = selected / strata;
    for (std::size_t i = 0; i < selected; ++i) {
        const bool stratified = i < perStratum * strata;
        values[order[i]] = stratified ? static_cast<Priority>(i / perStratum) : maxPriority;
    }
    std::uniform_int_distribution<Priority> uniform(0, maxPriority);
    for (std::size_t i = selected; i < vertices; ++i) values[order[i]] = uniform(rng);
    return PriorityFunction(std::move(values), maxPriority);
}

Game
generateGame(const GeneratorConfig& config)
{
    if (config.objectives == 0) throw InvalidInputError("at least one objective is required");
    if (config.maxPriority < 1) throw InvalidInputError("maximal priority must be at least 1");
    std::mt19937_64 rng(config.seed);

    Game game;
    if (config.base) {
        game.graph = *config.base;
    } else {
        const std::size_t n = config.vertices;
        if (n == 0) throw InvalidInputError("at least one vertex is required");
        if (config.edges < n || config.edges > n * n) {
            throw InvalidInputError("edge count must lie between the vertex count and its square");
        }
        GameGraphBuilder builder(n);
        std::bernoulli_distribution coin(0.5);
        std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(config.edges * 2);
        auto key = [](VertexId u, VertexId v) { return (std::uint64_t{u} << 32) | v; };

        for (VertexId v = 0; v < n; ++v) builder.setOwner(v, coin(rng) ? Player::One : Player::Zero);
        for (VertexId v = 0; v < n; ++v) {
            const VertexId w = pick(rng);
            seen.insert(key(v, w));
            builder.addEdge(v, w);
        }
        if (config.edges * 2 > n * n) {
            // Dense request: sample from the complement explicitly.
            std::vector<std::uint64_t> rest;
            for (VertexId u = 0; u < n; ++u) {
                for (VertexId v = 0; v < n; ++v) {
                    if (!seen.count(key(u, v))) rest.push_back(key(u, v));
                }
            }
            std::shuffle(rest.begin(), rest.end(), rng);
            rest.resize(config.edges - n);
            for (auto k : rest) builder.addEdge(static_cast<VertexId>(k >> 32), static_cast<VertexId>(k));
        } else {
            while (seen.size() < config.edges) {
                const VertexId u = pick(rng);
                const VertexId v = pick(rng);
                if (seen.insert(key(u, v)).second) builder.addEdge(u, v);
            }
        }
        game.graph = builder.build();
    }

    for (std::size_t i = 0; i < config.objectives; ++i) {
        game.objectives.push_back(generatePriorities(game.graph.vertexCount(), config.maxPriority, rng));
    }
    return game;
}

} // namespace pst
