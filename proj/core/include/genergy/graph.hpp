#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace genergy {

/// Immutable simple undirected graph, vertices 0..n-1. Validation and the
/// derived flags (connected, odd-cycle-free) happen at construction;
/// instances are safe to share across threads.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool connected() const { return connected_; }
    bool bipartite() const { return bipartite_; }  // no odd cycle in any component
    bool unicyclic() const { return connected_ && size() == n_; }
    bool forest() const;

    /// 2-coloring (values 0/1) when bipartite; empty otherwise.
    const std::vector<int>& coloring() const { return coloring_; }
    /// Odd-cycle vertex sequence when not bipartite; empty otherwise.
    const std::vector<int>& odd_cycle() const { return odd_cycle_; }

    std::vector<int> degree_sequence() const;  // ascending

    /// Canonical edge-list serialization: "n <count>" header then one
    /// "u v" line per edge with u < v, sorted.
    std::string to_edge_file() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    bool connected_ = false;
    bool bipartite_ = false;
    std::vector<int> coloring_;
    std::vector<int> odd_cycle_;
};

Graph cycle(int n);  // n >= 3
Graph p6(int n);     // n >= 7: C6 on 0..5, edge {0,6}, path 6..n-1
Graph path(int n);   // n >= 1

struct BipartiteCheck {
    bool bipartite;
    std::vector<int> coloring;   // witness when bipartite
    std::vector<int> odd_cycle;  // witness when not
};

/// Requires a connected graph; throws std::invalid_argument otherwise.
BipartiteCheck is_bipartite(const Graph& g);

/// Grammar: cycle:<n> | p6:<n> | path:<n> | file:<path>. File graphs must
/// be connected; the file format is the canonical edge list above.
Graph parse_graph_spec(const std::string& spec);

Graph parse_edge_list(std::istream& in);

}
