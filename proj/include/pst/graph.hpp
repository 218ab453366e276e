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

#ifndef PST_GRAPH_HPP
#define PST_GRAPH_HPP

#include "pst/vertex_set.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pst {

enum class Player : std::uint8_t { Zero = 0, One = 1 };

constexpr Player opponent(Player p) { return p == Player::Zero ? Player::One : Player::Zero; }

using Priority = std::uint32_t;

struct Edge
{
    VertexId source;
    VertexId target;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Sorted, duplicate-free set of edges. Iteration order is (source, target)
 * ascending, which keeps every printed or compared template deterministic.
 */
class EdgeSet
{
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> edges);
    explicit EdgeSet(std::vector<Edge> edges);

    bool contains(const Edge& e) const;
    bool empty() const { return edges_.empty(); }
    std::size_t size() const { return edges_.size(); }

    void insert(const Edge& e);
    EdgeSet& operator|=(const EdgeSet& other);
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

    /** Edges of this set leaving vertex v, as a contiguous sorted range. */
    std::span<const Edge> from(VertexId v) const;

    /** Distinct source vertices, ascending. */
    std::vector<VertexId> sources() const;

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::vector<Edge> edges_;
};

/**
 * Finite game graph with a two-player vertex partition. Successor and
 * predecessor lists are stored in CSR form with successors sorted ascending.
 * Immutable once built; construct through GameGraphBuilder.
 */
class GameGraph
{
public:
    GameGraph() = default;

    std::size_t vertexCount() const { return owner_.size(); }
    std::size_t edgeCount() const { return targets_.size(); }

    Player owner(VertexId v) const { return owner_[v]; }
    std::span<const VertexId> successors(VertexId v) const
    {
        return {targets_.data() + succOffset_[v], targets_.data() + succOffset_[v + 1]};
    }
    std::span<const VertexId> predecessors(VertexId v) const
    {
        return {sources_.data() + predOffset_[v], sources_.data() + predOffset_[v + 1]};
    }
    std::size_t outDegree(VertexId v) const { return succOffset_[v + 1] - succOffset_[v]; }

    bool hasEdge(VertexId u, VertexId v) const { return edgeIndex(u, v).has_value(); }

    /** Position of edge (u,v) in the CSR target array; usable as a dense edge id. */
    std::optional<std::size_t> edgeIndex(VertexId u, VertexId v) const;
    std::size_t firstEdgeIndex(VertexId v) const { return succOffset_[v]; }

    bool hasNames() const { return !names_.empty(); }
    /** Vertex name when the graph carries names, otherwise the decimal id. */
    std::string label(VertexId v) const;
    std::optional<VertexId> findByName(const std::string& name) const;

    VertexSet vertices() const { return VertexSet::full(vertexCount()); }
    VertexSet verticesOf(Player p) const;
    EdgeSet allEdges() const;

    friend bool operator==(const GameGraph&, const GameGraph&) = default;

private:
    friend class GameGraphBuilder;

    std::vector<Player> owner_;
    std::vector<std::size_t> succOffset_;
    std::vector<VertexId> targets_;
    std::vector<std::size_t> predOffset_;
    std::vector<VertexId> sources_;
    std::vector<std::string> names_;
};

class GameGraphBuilder
{
public:
    explicit GameGraphBuilder(std::size_t vertexCount);

    GameGraphBuilder& setOwner(VertexId v, Player p);
    GameGraphBuilder& setName(VertexId v, std::string name);
    GameGraphBuilder& addEdge(VertexId u, VertexId v);

    /**
     * Freezes the graph. Duplicate edges are merged. Throws DeadEndError if a
     * vertex has no successor and InvalidInputError for bad names.
     */
    GameGraph build() const;

private:
    std::vector<Player> owner_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    bool named_ = false;
};

/** Per-vertex priorities with a declared upper bound maxPriority >= every value. */
class PriorityFunction
{
public:
    PriorityFunction() = default;
    /** Declared bound defaults to the largest value present. */
    explicit PriorityFunction(std::vector<Priority> values);
    PriorityFunction(std::vector<Priority> values, Priority maxPriority);

    std::size_t size() const { return values_.size(); }
    Priority operator[](VertexId v) const { return values_[v]; }
    Priority maxPriority() const { return maxPriority_; }
    const std::vector<Priority>& values() const { return values_; }

    /** Vertices carrying priority p. */
    VertexSet withPriority(Priority p) const;

    friend bool operator==(const PriorityFunction&, const PriorityFunction&) = default;

private:
    std::vector<Priority> values_;
    Priority maxPriority_ = 0;
};

struct Restriction
{
    static constexpr VertexId npos = static_cast<VertexId>(-1);

    GameGraph graph;
    std::vector<VertexId> toOriginal; ///< new id -> old id
    std::vector<VertexId> toRestricted; ///< old id -> new id, npos when dropped

    VertexSet liftToOriginal(const VertexSet& restricted, std::size_t originalSize) const;
    VertexSet mapToRestricted(const VertexSet& original) const;
};

/**
 * Subgraph induced by keep, with vertex ids renumbered densely in ascending
 * order. Throws DeadEndError naming the offending vertices if a kept vertex
 * loses all its successors.
 */
Restriction restrict(const GameGraph& g, const VertexSet& keep);

/** All edges (u,v) of g with u in from and v in to. */
EdgeSet edgesBetween(const GameGraph& g, const VertexSet& from, const VertexSet& to);

} // namespace pst

#endif
