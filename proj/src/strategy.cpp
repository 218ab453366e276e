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

#include "pst/strategy.hpp"

#include "pst/errors.hpp"
#include "pst/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pst {

namespace {

/*
 * Explicit graph over dense state ids where some states are fair: if a
 * fair state recurs, each of its out-edges is taken infinitely often.
 */
struct FairGraph
{
    std::vector<std::vector<std::uint32_t>> succ;
    std::vector<char> fair;
    std::vector<std::vector<Priority>> priority; ///< [objective][state]

    std::size_t size() const { return succ.size(); }
};

/** Tarjan's algorithm restricted to the states marked with stamp in mark. */
std::vector<std::vector<std::uint32_t>>
sccsWithin(const FairGraph& fg, const std::vector<std::uint32_t>& states, std::vector<std::uint32_t>& mark,
           std::uint32_t stamp)
{
    const std::uint32_t none = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> index(fg.size(), none);
    std::vector<std::uint32_t> low(fg.size(), 0);
    std::vector<char> onStack(fg.size(), 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::vector<std::uint32_t>> out;
    std::uint32_t counter = 0;

    struct Frame
    {
        std::uint32_t v;
        std::size_t next;
    };
    for (auto root : states) {
        if (index[root] != none) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onStack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ = fg.succ[f.v];
            if (f.next < succ.size()) {
                const std::uint32_t w = succ[f.next++];
                if (mark[w] != stamp) continue;
                if (index[w] == none) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    onStack[w] = 1;
                    call.push_back({w, 0});
                } else if (onStack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const std::uint32_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::uint32_t> comp;
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

/**
 * Closed fair components whose maximum priority (for the given objective)
 * is odd. Each returned set C is strongly connected, fair states of C have
 * all successors in C, and max priority over C is odd: a fair play can
 * visit exactly C infinitely often and lose.
 */
std::vector<std::vector<std::uint32_t>>
badComponents(const FairGraph& fg, std::size_t objective, const std::vector<std::uint32_t>& states)
{
    const auto& prio = fg.priority[objective];
    std::vector<std::uint32_t> mark(fg.size(), 0);
    std::uint32_t stamp = 0;
    std::vector<std::vector<std::uint32_t>> work{states};
    std::vector<std::vector<std::uint32_t>> bad;

    while (!work.empty()) {
        std::vector<std::uint32_t> current = std::move(work.back());
        work.pop_back();
        ++stamp;
        for (auto v : current) mark[v] = stamp;
        auto comps = sccsWithin(fg, current, mark, stamp);

        for (auto& comp : comps) {
            ++stamp;
            for (auto v : comp) mark[v] = stamp;
            if (comp.size() == 1) {
                const auto& s = fg.succ[comp[0]];
                if (std::find(s.begin(), s.end(), comp[0]) == s.end()) continue;
            }
            std::vector<std::uint32_t> kept;
            for (auto v : comp) {
                bool leaves = fg.fair[v] && std::any_of(fg.succ[v].begin(), fg.succ[v].end(),
                                                        [&](std::uint32_t w) { return mark[w] != stamp; });
                if (!leaves) kept.push_back(v);
            }
            if (kept.size() != comp.size()) {
                if (!kept.empty()) work.push_back(std::move(kept));
                continue;
            }
            Priority top = 0;
            for (auto v : comp) top = std::max(top, prio[v]);
            if (top % 2 == 1) {
                bad.push_back(std::move(comp));
                continue;
            }
            std::vector<std::uint32_t> lower;
            for (auto v : comp) {
                if (prio[v] != top) lower.push_back(v);
            }
            if (!lower.empty()) work.push_back(std::move(lower));
        }
    }
    return bad;
}

std::vector<std::vector<std::uint32_t>>
predecessorLists(const FairGraph& fg)
{
    std::vector<std::vector<std::uint32_t>> pred(fg.size());
    for (std::uint32_t v = 0; v < fg.size(); ++v) {
        for (auto w : fg.succ[v]) pred[w].push_back(v);
    }
    return pred;
}

/** Shortest path from s to some state with inTarget set, using only states allowed. */
std::vector<std::uint32_t>
shortestPath(const FairGraph& fg, std::uint32_t s, const std::vector<char>& inTarget, const std::vector<char>* allowed)
{
    const std::uint32_t none = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> parent(fg.size(), none);
    std::deque<std::uint32_t> queue{s};
    parent[s] = s;
    while (!queue.empty()) {
        const std::uint32_t v = queue.front();
        queue.pop_front();
        if (inTarget[v]) {
            std::vector<std::uint32_t> path{v};
            for (std::uint32_t x = v; x != s; x = parent[x]) path.push_back(parent[x]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (auto w : fg.succ[v]) {
            if (parent[w] != none || (allowed && !(*allowed)[w])) continue;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    return {};
}

/** Lasso from s into comp whose cycle covers every state and every fair edge of comp. */
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
fairLasso(const FairGraph& fg, std::uint32_t s, const std::vector<std::uint32_t>& comp)
{
    std::vector<char> inComp(fg.size(), 0);
    for (auto v : comp) inComp[v] = 1;
    std::vector<std::uint32_t> prefix = shortestPath(fg, s, inComp, nullptr);
    const std::uint32_t entry = prefix.back();
    prefix.pop_back();

    std::vector<std::uint32_t> walk{entry};
    auto goTo = [&](std::uint32_t target) {
        std::vector<char> t(fg.size(), 0);
        t[target] = 1;
        auto path = shortestPath(fg, walk.back(), t, &inComp);
        walk.insert(walk.end(), path.begin() + 1, path.end());
    };
    for (auto v : comp) {
        goTo(v);
        if (!fg.fair[v]) continue;
        for (auto w : fg.succ[v]) {
            goTo(v);
            walk.push_back(w);
        }
    }
    // Close the loop with at least one step.
    if (walk.size() == 1) {
        walk.push_back(entry);
    } else {
        goTo(entry);
    }
    walk.pop_back();
    return {prefix, walk};
}

struct FairVerdict
{
    std::vector<char> losing;
    std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> lasso;
};

/** Decides all objectives on a fair graph; lasso starts from the first losing initial state. */
FairVerdict
decideFair(const FairGraph& fg, const std::vector<std::uint32_t>& initial, bool wantLasso)
{
    std::vector<std::uint32_t> all(fg.size());
    for (std::uint32_t v = 0; v < fg.size(); ++v) all[v] = v;
    const auto pred = predecessorLists(fg);

    FairVerdict out{std::vector<char>(fg.size(), 0), std::nullopt};
    for (std::size_t i = 0; i < fg.priority.size(); ++i) {
        auto bad = badComponents(fg, i, all);
        std::vector<char> reach(fg.size(), 0);
        std::vector<std::uint32_t> queue;
        for (const auto& comp : bad) {
            for (auto v : comp) {
                if (!reach[v]) {
                    reach[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        for (std::size_t h = 0; h < queue.size(); ++h) {
            for (auto p : pred[queue[h]]) {
                if (!reach[p]) {
                    reach[p] = 1;
                    queue.push_back(p);
                }
            }
        }
        for (std::uint32_t v = 0; v < fg.size(); ++v) out.losing[v] |= reach[v];

        if (!wantLasso || out.lasso) continue;
        for (auto s : initial) {
            if (!reach[s]) continue;
            // Pick the bad component closest to s.
            std::vector<char> inBad(fg.size(), 0);
            std::vector<std::size_t> owner(fg.size(), 0);
            for (std::size_t c = 0; c < bad.size(); ++c) {
                for (auto v : bad[c]) {
                    inBad[v] = 1;
                    owner[v] = c;
                }
            }
            auto path = shortestPath(fg, s, inBad, nullptr);
            out.lasso = fairLasso(fg, s, bad[owner[path.back()]]);
            break;
        }
    }
    return out;
}

/** Reachable part of g under s from the given vertices, as a fair graph over vertex ids. */
FairGraph
strategyGraph(const GameGraph& g, const Strategy& s, const std::vector<PriorityFunction>& objectives,
              const VertexSet& from, std::vector<char>& reachable)
{
    const std::size_t n = g.vertexCount();
    FairGraph fg;
    fg.succ.resize(n);
    fg.fair.assign(n, 0);
    for (const auto& pf : objectives) {
        if (pf.size() != n) throw InvalidInputError("priority function does not match the graph");
        fg.priority.push_back(pf.values());
    }
    reachable.assign(n, 0);
    std::vector<VertexId> queue = from.toVector();
    for (auto v : queue) reachable[v] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const VertexId v = queue[h];
        if (g.owner(v) == Player::Zero) {
            if (!s.defines(v)) throw DomainError("strategy has no move at reachable vertex " + g.label(v));
            fg.fair[v] = 1;
            for (auto w : s.rotation[v]) fg.succ[v].push_back(w);
        } else {
            for (auto w : g.successors(v)) fg.succ[v].push_back(w);
        }
        for (auto w : fg.succ[v]) {
            if (!reachable[w]) {
                reachable[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return fg;
}

} // namespace

StrategyRunner::StrategyRunner(const Strategy& s) : strategy_(&s), cursor_(s.rotation.size(), 0) {}

VertexId
StrategyRunner::move(VertexId v)
{
    if (!strategy_->defines(v)) throw DomainError("strategy has no move at vertex " + std::to_string(v));
    const auto& rot = strategy_->rotation[v];
    const VertexId w = rot[cursor_[v]];
    cursor_[v] = static_cast<std::uint32_t>((cursor_[v] + 1) % rot.size());
    return w;
}

void
StrategyRunner::reset()
{
    std::fill(cursor_.begin(), cursor_.end(), 0);
}

Strategy
extractStrategy(const GameGraph& g, const StrategyTemplate& t)
{
    ConflictReport report = findConflicts(g, t);
    if (!report.empty()) throw ConflictError(std::move(report));

    std::vector<char> forbidden(g.edgeCount(), 0);
    std::vector<char> live(g.edgeCount(), 0);
    auto markAll = [&](const EdgeSet& edges, std::vector<char>& marks) {
        for (const auto& e : edges) {
            if (e.source >= g.vertexCount() || e.target >= g.vertexCount()) continue;
            if (auto idx = g.edgeIndex(e.source, e.target)) marks[*idx] = 1;
        }
    };
    markAll(t.unsafe, forbidden);
    markAll(t.colive, forbidden);
    for (const auto& h : t.liveGroups) markAll(h, live);

    Strategy s;
    s.domain = t.winningRegion;
    s.rotation.resize(g.vertexCount());
    for (auto v : t.winningRegion) {
        if (g.owner(v) != Player::Zero) continue;
        auto& rot = s.rotation[v];
        const std::size_t base = g.firstEdgeIndex(v);
        const auto succ = g.successors(v);
        for (std::size_t i = 0; i < succ.size(); ++i) {
            if (!forbidden[base + i] && live[base + i]) rot.push_back(succ[i]);
        }
        for (std::size_t i = 0; i < succ.size(); ++i) {
            if (!forbidden[base + i] && !live[base + i]) rot.push_back(succ[i]);
        }
    }
    return s;
}

ProductVerdict
verifyStrategy(const GameGraph& g, const Strategy& s, const std::vector<PriorityFunction>& objectives,
               const VertexSet& from)
{
    std::vector<char> reachable;
    FairGraph fg = strategyGraph(g, s, objectives, from, reachable);
    // Unreachable vertices have no successors in fg; they are never explored.
    std::vector<std::uint32_t> initial = from.toVector();
    FairVerdict fv = decideFair(fg, initial, true);

    ProductVerdict verdict;
    verdict.winningFrom = VertexSet(g.vertexCount());
    for (auto v : from) {
        if (!fv.losing[v]) verdict.winningFrom.insert(v);
    }
    if (fv.lasso) verdict.counterexample = Lasso{fv.lasso->first, fv.lasso->second};
    verdict.productStates = std::count(reachable.begin(), reachable.end(), 1);
    return verdict;
}

ProductVerdict
verifyExplicitProduct(const GameGraph& g, const std::vector<PriorityFunction>& objectives, const VertexSet& from,
                      const Memory& initial, const ProductStep& step, std::size_t maxStates)
{
    for (const auto& pf : objectives) {
        if (pf.size() != g.vertexCount()) throw InvalidInputError("priority function does not match the graph");
    }
    std::map<std::pair<VertexId, Memory>, std::uint32_t> ids;
    std::vector<std::pair<VertexId, Memory>> states;
    FairGraph fg;
    auto intern = [&](VertexId v, Memory m) {
        auto [it, fresh] = ids.try_emplace({v, m}, static_cast<std::uint32_t>(states.size()));
        if (fresh) {
            if (states.size() >= maxStates) throw SizeGuardError("product exceeds " + std::to_string(maxStates) + " states");
            states.emplace_back(v, std::move(m));
            fg.succ.emplace_back();
        }
        return it->second;
    };

    std::vector<std::uint32_t> roots;
    for (auto v : from) roots.push_back(intern(v, initial));
    for (std::size_t h = 0; h < states.size(); ++h) {
        auto next = step(states[h].first, states[h].second);
        if (next.empty()) throw DomainError("controller has no move at vertex " + g.label(states[h].first));
        std::vector<std::uint32_t> succ;
        for (auto& [w, m] : next) succ.push_back(intern(w, std::move(m)));
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        fg.succ[h] = std::move(succ);
    }

    const std::size_t count = states.size();
    fg.fair.assign(count, 0);
    GameGraphBuilder builder(count);
    for (std::uint32_t x = 0; x < count; ++x) {
        builder.setOwner(x, Player::One);
        for (auto y : fg.succ[x]) builder.addEdge(x, y);
    }
    const GameGraph product = builder.build();

    VertexSet winning = product.vertices();
    for (const auto& pf : objectives) {
        std::vector<Priority> lifted(count);
        for (std::uint32_t x = 0; x < count; ++x) lifted[x] = pf[states[x].first];
        fg.priority.push_back(lifted);
        winning &= zielonkaRegions(product, PriorityFunction(std::move(lifted))).winningRegion0;
    }

    ProductVerdict verdict;
    verdict.productStates = count;
    verdict.winningFrom = VertexSet(g.vertexCount());
    std::vector<std::uint32_t> losingRoots;
    std::size_t i = 0;
    for (auto v : from) {
        if (winning.contains(roots[i])) {
            verdict.winningFrom.insert(v);
        } else {
            losingRoots.push_back(roots[i]);
        }
        ++i;
    }
    if (!losingRoots.empty()) {
        FairVerdict fv = decideFair(fg, losingRoots, true);
        if (fv.lasso) {
            Lasso lasso;
            for (auto x : fv.lasso->first) lasso.prefix.push_back(states[x].first);
            for (auto x : fv.lasso->second) lasso.cycle.push_back(states[x].first);
            verdict.counterexample = std::move(lasso);
        }
    }
    return verdict;
}

ProductVerdict
verifyStrategyExact(const GameGraph& g, const Strategy& s, const std::vector<PriorityFunction>& objectives,
                    const VertexSet& from, std::size_t maxStates)
{
    // Memory holds one cursor per vertex that has a rotation.
    std::vector<std::uint32_t> slot(g.vertexCount(), 0);
    std::uint32_t slots = 0;
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
        if (s.defines(v)) slot[v] = slots++;
    }
    ProductStep step = [&](VertexId v, const Memory& m) {
        std::vector<std::pair<VertexId, Memory>> out;
        if (g.owner(v) == Player::Zero) {
            if (!s.defines(v)) throw DomainError("strategy has no move at reachable vertex " + g.label(v));
            const auto& rot = s.rotation[v];
            Memory next = m;
            next[slot[v]] = static_cast<std::uint32_t>((m[slot[v]] + 1) % rot.size());
            out.emplace_back(rot[m[slot[v]]], std::move(next));
        } else {
            for (auto w : g.successors(v)) out.emplace_back(w, m);
        }
        return out;
    };
    return verifyExplicitProduct(g, objectives, from, Memory(slots, 0), step, maxStates);
}

} // namespace pst
