#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fto {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u = 0;  // canonical: u < v
    VertexId v = 0;
    int64_t w = 0;
    bool operator==(const Edge&) const = default;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected simple graph with integer weights in [1..W].
// Edges are stored canonically (u < v, sorted), so EdgeIds are stable for a
// given edge multiset regardless of input order.
class Graph {
public:
    Graph() = default;
    Graph(int n, int64_t W, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    int64_t W() const { return W_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }

    // -1 if no such edge.
    EdgeId find_edge(VertexId a, VertexId b) const;

    // incident (edge id, neighbour) pairs
    const std::vector<std::pair<EdgeId, VertexId>>& adjacent(VertexId u) const {
        return adj_.at(u);
    }

    bool connected() const;
    uint64_t hash() const;

private:
    int n_ = 0;
    int64_t W_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj_;
};

// Duplicate-free set of edge ids, kept sorted.
class FaultSet {
public:
    FaultSet() = default;
    explicit FaultSet(std::vector<EdgeId> ids);

    bool contains(EdgeId e) const;
    void insert(EdgeId e);
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<EdgeId>& ids() const { return ids_; }

    // V(F): endpoint set, sorted, deduplicated
    std::vector<VertexId> vertices(const Graph& g) const;

    // packed sorted ids, usable as a cache key for f <= 4 on desk-scale graphs
    uint64_t code() const;

    bool operator==(const FaultSet&) const = default;
    auto operator<=>(const FaultSet&) const = default;

private:
    std::vector<EdgeId> ids_;
};

// File format: "p <n> <m> <W>" header, then m lines "e <u> <v> <w>".
// '#' starts a comment line. Throws ParseError naming the offending line.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);

// Connected random graph: random spanning tree plus extra edges, weights
// uniform in [1, W]. Deterministic for a fixed seed.
Graph generate_random_graph(int n, int m, int64_t W, uint64_t seed);

}  // namespace fto
