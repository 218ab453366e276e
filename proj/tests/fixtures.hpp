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

#ifndef PST_TESTS_FIXTURES_HPP
#define PST_TESTS_FIXTURES_HPP

#include "pst/generator.hpp"
#include "pst/graph.hpp"
#include "pst/io.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace pst::testing {

/*
 * Running example: six vertices a..f, Player-0 vertices a and d.
 *
 *   a -> a b c d     b -> a d     c -> a d
 *   d -> a b e       e -> b f     f -> b
 */
inline GameGraph
runningExample()
{
    GameGraphBuilder b(6);
    const char* names[] = {"a", "b", "c", "d", "e", "f"};
    const Player owners[] = {Player::Zero, Player::One, Player::One, Player::Zero, Player::One, Player::One};
    for (VertexId v = 0; v < 6; ++v) {
        b.setName(v, names[v]);
        b.setOwner(v, owners[v]);
    }
    const std::pair<char, char> edges[] = {{'a', 'a'}, {'a', 'b'}, {'a', 'c'}, {'a', 'd'}, {'b', 'a'}, {'b', 'd'},
                                           {'c', 'a'}, {'c', 'd'}, {'d', 'a'}, {'d', 'b'}, {'d', 'e'}, {'e', 'b'},
                                           {'e', 'f'}, {'f', 'b'}};
    for (auto [u, v] : edges) b.addEdge(u - 'a', v - 'a');
    return b.build();
}

/** Parity objective of the composition example: a..f -> 0,2,1,1,1,1. */
inline PriorityFunction
compositionObjective()
{
    return PriorityFunction({0, 2, 1, 1, 1, 1});
}

/*
 * Parity example with eight vertices a..h.
 *
 *   vertex  owner  priority  successors
 *   a       0      1         a b
 *   b       0      4         a c
 *   c       1      5         b
 *   d       0      6         c
 *   e       1      2         d f
 *   f       0      2         f
 *   g       0      1         g f
 *   h       0      3         h d e
 */
inline GameGraph
parityExample()
{
    GameGraphBuilder b(8);
    const Player owners[] = {Player::Zero, Player::Zero, Player::One, Player::Zero,
                             Player::One,  Player::Zero, Player::Zero, Player::Zero};
    for (VertexId v = 0; v < 8; ++v) {
        b.setName(v, std::string(1, static_cast<char>('a' + v)));
        b.setOwner(v, owners[v]);
    }
    const char* edges[] = {"aa", "ab", "ba", "bc", "cb", "dc", "ed", "ef", "ff", "gg", "gf", "hh", "hd", "he"};
    for (auto e : edges) b.addEdge(e[0] - 'a', e[1] - 'a');
    return b.build();
}

inline PriorityFunction
parityExamplePriorities()
{
    return PriorityFunction({1, 4, 5, 6, 2, 2, 1, 3});
}

/** Vertex set from single-letter names, e.g. set(g, "acd"). */
inline VertexSet
set(const GameGraph& g, const std::string& letters)
{
    VertexSet s(g.vertexCount());
    for (char c : letters) s.insert(static_cast<VertexId>(c - 'a'));
    return s;
}

/** Edge from two letters, e.g. edge("ab"). */
inline Edge
edge(const char* uv)
{
    return {static_cast<VertexId>(uv[0] - 'a'), static_cast<VertexId>(uv[1] - 'a')};
}

inline EdgeSet
edges(std::initializer_list<const char*> list)
{
    std::vector<Edge> out;
    for (auto e : list) out.push_back(edge(e));
    return EdgeSet(std::move(out));
}

/** Büchi(I) as a parity objective: 2 on I, 1 elsewhere. */
inline PriorityFunction
buchiAsParity(const VertexSet& target)
{
    std::vector<Priority> p(target.universe(), 1);
    for (auto v : target) p[v] = 2;
    return PriorityFunction(std::move(p));
}

/** co-Büchi(I) as a parity objective: 0 on I, 1 elsewhere. */
inline PriorityFunction
cobuchiAsParity(const VertexSet& target)
{
    std::vector<Priority> p(target.universe(), 1);
    for (auto v : target) p[v] = 0;
    return PriorityFunction(std::move(p), 1);
}

/** Random game via the generator with edge count ratio * n (clamped to [n, n^2]). */
inline Game
randomGame(std::size_t n, double ratio, std::size_t k, Priority maxPriority, std::uint64_t seed)
{
    GeneratorConfig c;
    c.vertices = n;
    c.edges = std::min(n * n, std::max<std::size_t>(n, static_cast<std::size_t>(ratio * n)));
    c.objectives = k;
    c.maxPriority = maxPriority;
    c.seed = seed;
    return generateGame(c);
}

/** Uniformly random vertex subset. */
inline VertexSet
randomSubset(std::size_t n, std::mt19937_64& rng, double density = 0.5)
{
    std::bernoulli_distribution coin(density);
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v) {
        if (coin(rng)) s.insert(v);
    }
    return s;
}

} // namespace pst::testing

#endif
