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

#include "CLI11.hpp"

#include "pst/compose.hpp"
#include "pst/errors.hpp"
#include "pst/fault.hpp"
#include "pst/generator.hpp"
#include "pst/io.hpp"
#include "pst/oracle.hpp"
#include "pst/solvers.hpp"
#include "pst/strategy.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace pst;

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitConflict = 3;
constexpr int kExitNotWinning = 4;
constexpr int kExitSizeGuard = 5;

/** Thrown by subcommands to report a failed verification. */
struct NotWinning
{
};

const PriorityFunction&
objectiveAt(const Game& game, std::size_t index)
{
    if (index >= game.objectives.size()) {
        throw InvalidInputError("objective " + std::to_string(index) + " does not exist; the file has " +
                                std::to_string(game.objectives.size()));
    }
    return game.objectives[index];
}

void
printTemplate(std::ostream& out, const GameGraph& g, const StrategyTemplate& t)
{
    out << "W0: " << formatVertexSet(g, t.winningRegion) << '\n';
    out << "unsafe: " << formatEdgeSet(g, t.unsafe) << '\n';
    out << "colive: " << formatEdgeSet(g, t.colive) << '\n';
    for (const auto& h : t.liveGroups) out << "live-group " << formatEdgeSet(g, h) << '\n';
}

void
writeIfRequested(const std::string& path, const std::string& text)
{
    if (path.empty()) return;
    writeTextFile(path, text);
}

std::string
formatLasso(const GameGraph& g, const Lasso& l)
{
    std::ostringstream out;
    for (auto v : l.prefix) out << g.label(v) << ' ';
    out << '(';
    for (std::size_t i = 0; i < l.cycle.size(); ++i) out << (i ? " " : "") << g.label(l.cycle[i]);
    out << ")^w";
    return out.str();
}

/** Vertices from which no reachable Player-0 vertex lacks a move under s. */
VertexSet
definedFrom(const GameGraph& g, const Strategy& s)
{
    const std::size_t n = g.vertexCount();
    VertexSet bad(n);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        if (g.owner(v) == Player::Zero && !s.defines(v)) {
            bad.insert(v);
            queue.push_back(v);
        }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const VertexId w = queue[h];
        for (auto u : g.predecessors(w)) {
            if (bad.contains(u)) continue;
            const bool moves = g.owner(u) == Player::One ||
                               std::find(s.rotation[u].begin(), s.rotation[u].end(), w) != s.rotation[u].end();
            if (moves) {
                bad.insert(u);
                queue.push_back(u);
            }
        }
    }
    return bad.complement();
}

double
millisSince(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Permissive strategy templates for games on graphs"};
    app.require_subcommand(1);

    std::string file;
    std::string output;
    std::string templatePath;
    std::string strategyPath;
    std::size_t objective = 0;

    auto* solve = app.add_subcommand("solve", "Parity template for one objective");
    solve->add_option("file", file, "Game file")->required();
    solve->add_option("--objective", objective, "Objective index (0-based)");
    solve->add_option("-o,--output", output, "Write the template to this file");

    bool oneShot = false;
    bool incremental = false;
    unsigned jobs = 1;
    auto* compose = app.add_subcommand("compose", "Template for the conjunction of all objectives");
    compose->add_option("file", file, "Game file")->required();
    auto* oneShotFlag = compose->add_flag("--one-shot", oneShot, "Add all objectives at once (default)");
    compose->add_flag("--incremental", incremental, "Add objectives one by one")->excludes(oneShotFlag);
    compose->add_option("--jobs", jobs, "Threads for per-objective solving")->check(CLI::PositiveNumber);
    compose->add_option("-o,--output", output, "Write the template to this file");

    auto* extract = app.add_subcommand("extract", "Strategy from a template");
    extract->add_option("file", file, "Game file")->required();
    extract->add_option("--template", templatePath, "Template file")->required();
    extract->add_option("-o,--output", output, "Write the strategy to this file");

    std::string fromList;
    bool exact = false;
    auto* verify = app.add_subcommand("verify", "Check that a strategy wins all objectives");
    verify->add_option("file", file, "Game file")->required();
    auto* tplOpt = verify->add_option("--template", templatePath, "Template file");
    auto* stratOpt = verify->add_option("--strategy", strategyPath, "Strategy file");
    tplOpt->excludes(stratOpt);
    verify->add_option("--from", fromList, "Comma-separated start vertices");
    verify->add_flag("--exact", exact, "Use the explicit product with rotation cursors");

    std::string faultyList;
    bool gaf = false;
    auto* fault = app.add_subcommand("fault", "Adapt a template to faulty edges");
    fault->add_option("file", file, "Game file")->required();
    fault->add_option("--template", templatePath, "Template file")->required();
    fault->add_option("--faulty", faultyList, "Faulty edges, e.g. \"(a,c),(a,d)\"")->required();
    fault->add_option("--objective", objective, "Objective index (0-based)");
    fault->add_flag("--gaf", gaf, "Only check tolerance under guaranteed availability");
    fault->add_option("-o,--output", output, "Write the new template to this file");

    GeneratorConfig gen;
    std::string basePath;
    auto* generate = app.add_subcommand("gen", "Random generalized parity game");
    generate->add_option("--vertices", gen.vertices, "Vertex count");
    generate->add_option("--edges", gen.edges, "Edge count");
    generate->add_option("--objectives", gen.objectives, "Objective count")->default_val(1);
    generate->add_option("--max-priority", gen.maxPriority, "Maximal priority")->default_val(3);
    generate->add_option("--seed", gen.seed, "Random seed")->default_val(0);
    generate->add_option("--base", basePath, "Reuse the graph of this game file");
    generate->add_option("-o,--output", output, "Write the game to this file instead of stdout");

    auto* oracle = app.add_subcommand("oracle", "Winning regions from the reference solvers");
    oracle->add_option("file", file, "Game file")->required();

    std::vector<double> fractions{0.05, 0.1, 0.2, 0.3};
    std::size_t trials = 100;
    std::size_t games = 50;
    GeneratorConfig benchGen;
    benchGen.vertices = 100;
    benchGen.edges = 300;
    benchGen.maxPriority = 4;
    benchGen.seed = 1;
    auto* bench = app.add_subcommand("bench", "Benchmarks");
    bench->require_subcommand(1);
    auto* benchFault = bench->add_subcommand("fault", "Conflict statistics under random faults (CSV)");
    benchFault->add_option("--fraction", fractions, "Fault fractions")->delimiter(',')->capture_default_str();
    benchFault->add_option("--trials", trials, "Trials per game and fraction")->capture_default_str();
    benchFault->add_option("--games", games, "Random games")->capture_default_str();
    benchFault->add_option("--vertices", benchGen.vertices, "Vertices per game")->capture_default_str();
    benchFault->add_option("--edges", benchGen.edges, "Edges per game")->capture_default_str();
    benchFault->add_option("--max-priority", benchGen.maxPriority, "Maximal priority")->capture_default_str();
    benchFault->add_option("--seed", benchGen.seed, "Random seed")->capture_default_str();
    benchFault->add_option("-o,--output", output, "Write the CSV to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (*solve) {
            const Game game = readGameFile(file);
            const SolveResult r = parityTemplate(game.graph, objectiveAt(game, objective));
            printTemplate(std::cout, game.graph, r.strategyTemplate);
            writeIfRequested(output, emitTemplate(game.graph, r.strategyTemplate));
        } else if (*compose) {
            const Game game = readGameFile(file);
            const GameGraph& g = game.graph;
            const ComposeOptions options{jobs};
            const auto start = std::chrono::steady_clock::now();
            ComposeResult result;
            if (incremental) {
                ComposeState state = ComposeState::initial(g);
                for (std::size_t i = 0; i < game.objectives.size(); ++i) {
                    result = addObjective(g, state, game.objectives[i], options);
                    state = result.state;
                    std::cout << "step " << i + 1 << ": W0 = " << formatVertexSet(g, state.winningRegion) << " ("
                              << std::fixed << std::setprecision(3) << millisSince(start) << " ms)\n";
                }
            } else {
                result = composeTemplates(g, ComposeState::initial(g), game.objectives, options);
            }
            std::cout << "relabel rounds: " << result.relabelRounds << '\n';
            printTemplate(std::cout, g, result.strategyTemplate);
            if (result.state.winningRegion.empty()) {
                std::cout << "note: the composed winning region is empty; composition is incomplete, see README "
                             "section \"Incompleteness of composition\"\n";
            }
            writeIfRequested(output, emitTemplate(g, result.strategyTemplate));
        } else if (*extract) {
            const Game game = readGameFile(file);
            const StrategyTemplate t = parseTemplate(game.graph, readTextFile(templatePath));
            const std::string text = emitStrategy(game.graph, extractStrategy(game.graph, t));
            if (output.empty()) {
                std::cout << text;
            } else {
                writeTextFile(output, text);
            }
        } else if (*verify) {
            const Game game = readGameFile(file);
            const GameGraph& g = game.graph;
            Strategy s;
            VertexSet from;
            if (!templatePath.empty()) {
                const StrategyTemplate t = parseTemplate(g, readTextFile(templatePath));
                s = extractStrategy(g, t);
                from = t.winningRegion;
            } else if (!strategyPath.empty()) {
                s = parseStrategy(g, readTextFile(strategyPath));
                from = definedFrom(g, s);
            } else {
                throw InvalidInputError("verify needs --template or --strategy");
            }
            if (!fromList.empty()) from = parseVertexList(g, fromList);
            const ProductVerdict v = exact ? verifyStrategyExact(g, s, game.objectives, from)
                                           : verifyStrategy(g, s, game.objectives, from);
            std::cout << "winning from: " << formatVertexSet(g, v.winningFrom) << '\n';
            if (v.winningFrom != from) {
                std::cout << "losing from: " << formatVertexSet(g, from - v.winningFrom) << '\n';
                if (v.counterexample) std::cout << "counterexample: " << formatLasso(g, *v.counterexample) << '\n';
                throw NotWinning{};
            }
            std::cout << "verified\n";
        } else if (*fault) {
            const Game game = readGameFile(file);
            const GameGraph& g = game.graph;
            const StrategyTemplate t = parseTemplate(g, readTextFile(templatePath));
            const EdgeSet faulty = parseEdgeList(g, faultyList);
            if (gaf) {
                const GafReport r = gafTolerant(g, t, faulty);
                std::cout << "tolerant: " << (r.tolerant ? "yes" : "no") << '\n';
                std::cout << "vulnerable: " << formatVertexSet(g, r.vulnerable) << '\n';
                if (!r.tolerant) return kExitConflict;
            } else {
                const FaultCorrection f = faultCorrection(g, objectiveAt(game, objective), t, faulty);
                std::cout << (f.recomputed ? "recomputed" : "kept") << '\n';
                printTemplate(std::cout, g, f.strategyTemplate);
                writeIfRequested(output, emitTemplate(g, f.strategyTemplate));
            }
        } else if (*generate) {
            if (!basePath.empty()) gen.base = readGameFile(basePath).graph;
            const std::string text = emitGame(generateGame(gen));
            if (output.empty()) {
                std::cout << text;
            } else {
                writeTextFile(output, text);
            }
        } else if (*oracle) {
            const Game game = readGameFile(file);
            const GameGraph& g = game.graph;
            if (game.objectives.size() == 1) {
                const OracleRegions r = zielonkaRegions(g, game.objectives[0]);
                std::cout << "W0: " << formatVertexSet(g, r.winningRegion0) << '\n';
                std::cout << "W1: " << formatVertexSet(g, r.winningRegion1) << '\n';
            } else {
                const VertexSet w0 = bruteForceGenParityRegion(g, game.objectives);
                std::cout << "W0: " << formatVertexSet(g, w0) << '\n';
                std::cout << "W1: " << formatVertexSet(g, w0.complement()) << '\n';
            }
        } else if (*benchFault) {
            const std::string csv = faultStatisticsCsv(benchFaultConflicts(benchGen, games, fractions, trials));
            if (output.empty()) {
                std::cout << csv;
            } else {
                writeTextFile(output, csv);
            }
        }
    } catch (const NotWinning&) {
        return kExitNotWinning;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ConflictError& e) {
        std::cerr << "conflict: " << e.what() << '\n';
        return kExitConflict;
    } catch (const SizeGuardError& e) {
        std::cerr << "size guard: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}
