#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tutgen/mechanics.hpp"

namespace tutgen {

enum class NodeClass { VictoryCritical, LossCritical, Positive, Negative, Optional };

const char* node_class_name(NodeClass cls);

struct GraphEdge {
    std::string from; // lexicographically smaller node id
    std::string to;
    std::string label; // shared sprite reference(s), comma-joined when several
};

/// Mechanics as nodes, shared sprite references as undirected edges.
struct MechanicGraph {
    std::vector<Mechanic> nodes;  // discovery order; ids unique
    std::vector<GraphEdge> edges; // sorted by (from, to)
    std::map<std::string, NodeClass> classification; // filled by classify()
    std::map<std::string, std::string> labels;       // display text for exports

    const Mechanic* node(const std::string& id) const;
    std::vector<std::string> neighbors(const std::string& id) const;
};

struct CriticalPathSet {
    std::vector<std::string> win_path; // Control ... win Termination node ids
    std::vector<std::vector<std::string>> loss_paths;
    std::set<std::string> positive_nodes; // score_delta > 0
    std::set<std::string> negative_nodes; // score_delta < 0

    bool on_win_path(const std::string& id) const;
    bool on_loss_path(const std::string& id) const;

    /// Ordering rank used for tutorial layout: win-path position first, then
    /// earliest loss-path position, then unranked.
    int path_rank(const std::string& id) const;
};

MechanicGraph build_graph(std::vector<Mechanic> mechanics);

/// Shortest valid mechanic chain from a chain-starting Control node to a win
/// Termination, plus per-loss-source shortest chains and the score node sets.
/// Chains respect produce/consume order: sprites that only exist as mechanic
/// products (projectiles, transform targets) must be produced upstream, and a
/// termination can only close a chain that destroyed a counted sprite.
/// Among equal-length chains the lexicographically smallest id sequence wins.
/// Throws Error(NoWinPath) when no valid chain reaches a win termination.
CriticalPathSet find_critical_paths(const MechanicGraph& graph);

/// Assigns each node exactly one class, in priority order: win-path nodes,
/// loss-path nodes, then scored nodes by sign, then Optional.
MechanicGraph classify(MechanicGraph graph, const CriticalPathSet& paths);

/// GraphViz rendering of a classified graph. Byte-deterministic.
std::string export_dot(const MechanicGraph& graph);

struct TutorialDocument; // textgen.hpp

/// Versioned machine-readable export (schema 1): nodes, edges, critical
/// paths, score sets, and optionally the realized tutorial. Key order is
/// deterministic.
std::string export_json(const MechanicGraph& graph, const CriticalPathSet& paths);
std::string export_json(const MechanicGraph& graph, const CriticalPathSet& paths,
                        const TutorialDocument& doc);

} // namespace tutgen
