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

#include "pst/graph.hpp"

#include "pst/errors.hpp"

#include <algorithm>

namespace pst {

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges))
{
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool
EdgeSet::contains(const Edge& e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

void
EdgeSet::insert(const Edge& e)
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

EdgeSet&
EdgeSet::operator|=(const EdgeSet& other)
{
    if (other.empty()) return *this;
    std::vector<Edge> merged;
    merged.reserve(edges_.size() + other.edges_.size());
    std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                   std::back_inserter(merged));
    edges_ = std::move(merged);
    return *this;
}

std::span<const Edge>
EdgeSet::from(VertexId v) const
{
    auto lo = std::lower_bound(edges_.begin(), edges_.end(), Edge{v, 0});
    auto hi = std::lower_bound(lo, edges_.end(), Edge{v + 1, 0});
    return {edges_.data() + (lo - edges_.begin()), static_cast<std::size_t>(hi - lo)};
}

std::vector<VertexId>
EdgeSet::sources() const
{
    std::vector<VertexId> out;
    for (const auto& e : edges_) {
        if (out.empty() || out.back() != e.source) out.push_back(e.source);
    }
    return out;
}

std::optional<std::size_t>
GameGraph::edgeIndex(VertexId u, VertexId v) const
{
    auto succ = successors(u);
    auto it = std::lower_bound(succ.begin(), succ.end(), v);
    if (it == succ.end() || *it != v) return std::nullopt;
    return succOffset_[u] + static_cast<std::size_t>(it - succ.begin());
}

std::string
GameGraph::label(VertexId v) const
{
    return hasNames() ? names_[v] : std::to_string(v);
}

std::optional<VertexId>
GameGraph::findByName(const std::string& name) const
{
    for (VertexId v = 0; v < names_.size(); ++v) {
        if (names_[v] == name) return v;
    }
    return std::nullopt;
}

VertexSet
GameGraph::verticesOf(Player p) const
{
    VertexSet s(vertexCount());
    for (VertexId v = 0; v < vertexCount(); ++v) {
        if (owner_[v] == p) s.insert(v);
    }
    return s;
}

EdgeSet
GameGraph::allEdges() const
{
    std::vector<Edge> edges;
    edges.reserve(edgeCount());
    for (VertexId v = 0; v < vertexCount(); ++v) {
        for (auto w : successors(v)) edges.push_back({v, w});
    }
    return EdgeSet(std::move(edges));
}

GameGraphBuilder::GameGraphBuilder(std::size_t vertexCount)
    : owner_(vertexCount, Player::Zero), names_(vertexCount)
{
}

GameGraphBuilder&
GameGraphBuilder::setOwner(VertexId v, Player p)
{
    if (v >= owner_.size()) throw InvalidInputError("vertex " + std::to_string(v) + " out of range");
    owner_[v] = p;
    return *this;
}

GameGraphBuilder&
GameGraphBuilder::setName(VertexId v, std::string name)
{
    if (v >= owner_.size()) throw InvalidInputError("vertex " + std::to_string(v) + " out of range");
    names_[v] = std::move(name);
    named_ = true;
    return *this;
}

GameGraphBuilder&
GameGraphBuilder::addEdge(VertexId u, VertexId v)
{
    if (u >= owner_.size() || v >= owner_.size()) {
        throw InvalidInputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    edges_.push_back({u, v});
    return *this;
}

GameGraph
GameGraphBuilder::build() const
{
    const std::size_t n = owner_.size();
    std::vector<Edge> edges = edges_;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    GameGraph g;
    g.owner_ = owner_;
    g.succOffset_.assign(n + 1, 0);
    g.predOffset_.assign(n + 1, 0);
    for (const auto& e : edges) {
        ++g.succOffset_[e.source + 1];
        ++g.predOffset_[e.target + 1];
    }
    std::string deadEnds;
    for (std::size_t v = 0; v < n; ++v) {
        if (g.succOffset_[v + 1] == 0) deadEnds += (deadEnds.empty() ? "" : " ") + std::to_string(v);
        g.succOffset_[v + 1] += g.succOffset_[v];
        g.predOffset_[v + 1] += g.predOffset_[v];
    }
    if (!deadEnds.empty()) throw DeadEndError("vertices without successors: " + deadEnds);

    g.targets_.resize(edges.size());
    g.sources_.resize(edges.size());
    std::vector<std::size_t> fill(g.predOffset_.begin(), g.predOffset_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        g.targets_[i] = edges[i].target;
        g.sources_[fill[edges[i].target]++] = edges[i].source;
    }

    if (named_) {
        for (std::size_t v = 0; v < n; ++v) {
            const auto& name = names_[v];
            if (name.empty()) throw InvalidInputError("vertex " + std::to_string(v) + " has no name");
            if (name.find_first_of("\"\n\r") != std::string::npos) {
                throw InvalidInputError("vertex name may not contain quotes or newlines: " + name);
            }
        }
        std::vector<std::string> sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) throw InvalidInputError("duplicate vertex name " + *dup);
        g.names_ = names_;
    }
    return g;
}

PriorityFunction::PriorityFunction(std::vector<Priority> values) : values_(std::move(values))
{
    maxPriority_ = values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

PriorityFunction::PriorityFunction(std::vector<Priority> values, Priority maxPriority)
    : values_(std::move(values)), maxPriority_(maxPriority)
{
    for (auto p : values_) {
        if (p > maxPriority_) {
            throw InvalidInputError("priority " + std::to_string(p) + " exceeds declared maximum " +
                                    std::to_string(maxPriority_));
        }
    }
}

VertexSet
PriorityFunction::withPriority(Priority p) const
{
    VertexSet s(values_.size());
    for (VertexId v = 0; v < values_.size(); ++v) {
        if (values_[v] == p) s.insert(v);
    }
    return s;
}

VertexSet
Restriction::liftToOriginal(const VertexSet& restricted, std::size_t originalSize) const
{
    VertexSet out(originalSize);
    for (auto v : restricted) out.insert(toOriginal[v]);
    return out;
}

VertexSet
Restriction::mapToRestricted(const VertexSet& original) const
{
    VertexSet out(toOriginal.size());
    for (auto v : original) {
        if (toRestricted[v] != npos) out.insert(toRestricted[v]);
    }
    return out;
}

Restriction
restrict(const GameGraph& g, const VertexSet& keep)
{
    Restriction r;
    r.toRestricted.assign(g.vertexCount(), Restriction::npos);
    for (auto v : keep) {
        r.toRestricted[v] = static_cast<VertexId>(r.toOriginal.size());
        r.toOriginal.push_back(v);
    }
    GameGraphBuilder b(r.toOriginal.size());
    std::string deadEnds;
    for (VertexId nv = 0; nv < r.toOriginal.size(); ++nv) {
        const VertexId v = r.toOriginal[nv];
        b.setOwner(nv, g.owner(v));
        if (g.hasNames()) b.setName(nv, g.label(v));
        bool any = false;
        for (auto w : g.successors(v)) {
            if (keep.contains(w)) {
                b.addEdge(nv, r.toRestricted[w]);
                any = true;
            }
        }
        if (!any) deadEnds += (deadEnds.empty() ? "" : " ") + g.label(v);
    }
    if (!deadEnds.empty()) throw DeadEndError("restriction leaves vertices without successors: " + deadEnds);
    r.graph = b.build();
    return r;
}

EdgeSet
edgesBetween(const GameGraph& g, const VertexSet& from, const VertexSet& to)
{
    std::vector<Edge> edges;
    for (auto u : from) {
        for (auto v : g.successors(u)) {
            if (to.contains(v)) edges.push_back({u, v});
        }
    }
    return EdgeSet(std::move(edges));
}

} // namespace pst
