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

#ifndef PST_STRATEGY_HPP
#define PST_STRATEGY_HPP

#include "pst/graph.hpp"
#include "pst/template.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace pst {

/**
 * Finite-memory Player-0 strategy. At every Player-0 vertex of the domain
 * the strategy cycles through a fixed rotation of successors; the only
 * memory is one cursor per vertex, advanced on each visit.
 */
struct Strategy
{
    VertexSet domain;
    /** rotation[v] lists successors of v in play order; empty where undefined. */
    std::vector<std::vector<VertexId>> rotation;

    bool defines(VertexId v) const { return v < rotation.size() && !rotation[v].empty(); }

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

/** Executes a strategy; owns the cursors. */
class StrategyRunner
{
public:
    explicit StrategyRunner(const Strategy& s);

    /** Next vertex from Player-0 vertex v. Throws DomainError where undefined. */
    VertexId move(VertexId v);
    void reset();

private:
    const Strategy* strategy_;
    std::vector<std::uint32_t> cursor_;
};

/**
 * Strategy following a conflict-free template: at each Player-0 vertex of
 * the region, the rotation holds every edge outside S and D, live-group
 * edges first, each part in ascending target order. Linear in the size of
 * graph and template. Throws ConflictError if the template has conflicts.
 */
Strategy extractStrategy(const GameGraph& g, const StrategyTemplate& t);

/** A play ending in a loop: prefix, then cycle repeated forever. */
struct Lasso
{
    std::vector<VertexId> prefix;
    std::vector<VertexId> cycle;
};

struct ProductVerdict
{
    VertexSet winningFrom;
    /** Present iff some queried vertex is not winning. */
    std::optional<Lasso> counterexample;
    /** Number of explored product states (exact checks only). */
    std::size_t productStates = 0;
};

/**
 * Checks that every play consistent with s from the given vertices
 * satisfies every parity objective. Player-0 vertices are treated as fair
 * choosers over their rotation (every rotation edge is taken infinitely
 * often when the vertex recurs), which covers the round-robin schedule.
 * The counterexample is a fair lasso: its cycle takes every rotation edge
 * of each Player-0 vertex on it. Throws DomainError if a reachable
 * Player-0 vertex has no move.
 */
ProductVerdict verifyStrategy(const GameGraph& g, const Strategy& s, const std::vector<PriorityFunction>& objectives,
                              const VertexSet& from);

using Memory = std::vector<std::uint32_t>;
/** Successor configurations of (vertex, memory) under a deterministic controller. */
using ProductStep = std::function<std::vector<std::pair<VertexId, Memory>>(VertexId, const Memory&)>;

inline constexpr std::size_t kDefaultMaxProductStates = 200000;

/**
 * Explicit product of g with an arbitrary finite-memory controller, built
 * by breadth-first search from (v, initial) for v in from. Every product
 * state is a Player-1 state; each objective is decided by the Zielonka
 * oracle on the product. Throws SizeGuardError above maxStates.
 */
ProductVerdict verifyExplicitProduct(const GameGraph& g, const std::vector<PriorityFunction>& objectives,
                                     const VertexSet& from, const Memory& initial, const ProductStep& step,
                                     std::size_t maxStates = kDefaultMaxProductStates);

/** Exact round-robin semantics of s via verifyExplicitProduct (all cursors in the state). */
ProductVerdict verifyStrategyExact(const GameGraph& g, const Strategy& s, const std::vector<PriorityFunction>& objectives,
                                   const VertexSet& from, std::size_t maxStates = kDefaultMaxProductStates);

} // namespace pst

#endif
