#include "genergy/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace genergy {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("Graph: vertex count must be positive");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge rejected");

    adj_.resize(n_);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    // One BFS pass computes connectivity and the 2-coloring / odd-cycle
    // witness over all components.
    std::vector<int> color(n_, -1), parent(n_, -1);
    int reached_from_0 = 0;
    bipartite_ = true;
    for (int s = 0; s < n_ && bipartite_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty() && bipartite_) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj_[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // Conflict edge (u, v): walk both parent chains up to the
                    // first common ancestor to extract an odd cycle.
                    std::vector<int> pu{u}, pv{v};
                    for (int w = u; parent[w] != -1; w = parent[w]) pu.push_back(parent[w]);
                    for (int w = v; parent[w] != -1; w = parent[w]) pv.push_back(parent[w]);
                    while (pu.size() > 1 && pv.size() > 1 &&
                           pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    odd_cycle_.assign(pu.begin(), pu.end());
                    odd_cycle_.insert(odd_cycle_.end(), pv.rbegin() + 1, pv.rend());
                    bipartite_ = false;
                    break;
                }
            }
        }
    }
    if (bipartite_) {
        // Finish coloring components the loop may not have visited (it only
        // stops early when non-bipartite, handled above).
        coloring_ = color;
    }

    std::vector<char> seen(n_, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        ++reached_from_0;
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
    }
    connected_ = (reached_from_0 == n_);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool Graph::forest() const {
    // Acyclic iff every component has |E| = |V| - 1; equivalently no BFS
    // cross edge, which the bipartite pass already implies only for odd
    // cycles, so count directly.
    // components = n - rank; acyclic iff m = n - components.
    std::vector<int> comp(n_, -1);
    int ncomp = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        std::deque<int> queue{s};
        comp[s] = ncomp;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj_[u])
                if (comp[v] == -1) {
                    comp[v] = ncomp;
                    queue.push_back(v);
                }
        }
        ++ncomp;
    }
    return size() == n_ - ncomp;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

std::string Graph::to_edge_file() const {
    std::ostringstream os;
    os << "n " << n_ << "\n";
    for (const auto& [u, v] : edges_) os << u << " " << v << "\n";
    return os.str();
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    e.reserve(n);
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph p6(int n) {
    if (n < 7) throw std::invalid_argument("p6: n must be >= 7");
    std::vector<std::pair<int, int>> e;
    e.reserve(n);
    for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
    e.emplace_back(0, 6);
    for (int i = 6; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    e.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

BipartiteCheck is_bipartite(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("is_bipartite: disconnected input rejected");
    return {g.bipartite(), g.coloring(), g.odd_cycle()};
}

Graph parse_edge_list(std::istream& in) {
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "n")
        throw std::invalid_argument("edge list: expected header line 'n <count>'");
    if (n < 1) throw std::invalid_argument("edge list: vertex count must be positive");
    std::vector<std::pair<int, int>> edges;
    long long u, v;
    while (in >> u >> v) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list: edge index out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof() && in.fail()) {
        in.clear();
        std::string rest;
        in >> rest;
        if (!rest.empty()) throw std::invalid_argument("edge list: trailing garbage '" + rest + "'");
    }
    return Graph(n, std::move(edges));
}

namespace {

int parse_count(const std::string& text, const std::string& what) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("graph spec: bad " + what + " '" + text + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("graph spec: bad " + what + " '" + text + "'");
    return v;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph spec: expected '<kind>:<arg>', got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "cycle") return cycle(parse_count(arg, "cycle order"));
    if (kind == "p6") return p6(parse_count(arg, "p6 order"));
    if (kind == "path") return path(parse_count(arg, "path order"));
    if (kind == "file") {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("graph spec: cannot open file '" + arg + "'");
        Graph g = parse_edge_list(in);
        if (!g.connected())
            throw std::invalid_argument("graph spec: disconnected graph rejected ('" + arg + "')");
        return g;
    }
    throw std::invalid_argument("graph spec: unknown kind '" + kind + "'");
}

}
