#include "fto/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace fto {

Graph::Graph(int n, int64_t W, std::vector<Edge> edges)
    : n_(n), W_(W), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) throw std::invalid_argument("vertex id out of range");
        if (e.w < 1 || e.w > W_) throw std::invalid_argument("weight outside [1,W]");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw std::invalid_argument("parallel edge");
    adj_.assign(n_, {});
    for (EdgeId id = 0; id < m(); ++id) {
        adj_[edges_[id].u].emplace_back(id, edges_[id].v);
        adj_[edges_[id].v].emplace_back(id, edges_[id].u);
    }
}

EdgeId Graph::find_edge(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    Edge probe{a, b, 0};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                               [](const Edge& x, const Edge& y) {
                                   return std::tie(x.u, x.v) < std::tie(y.u, y.v);
                               });
    if (it != edges_.end() && it->u == a && it->v == b)
        return static_cast<EdgeId>(it - edges_.begin());
    return -1;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (auto [eid, v] : adj_[u])
            if (!seen[v]) { seen[v] = 1; ++cnt; stack.push_back(v); }
    }
    return cnt == n_;
}

uint64_t Graph::hash() const {
    // FNV-1a over the canonical description
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<uint64_t>(n_));
    mix(static_cast<uint64_t>(W_));
    for (const auto& e : edges_) {
        mix(static_cast<uint64_t>(e.u));
        mix(static_cast<uint64_t>(e.v));
        mix(static_cast<uint64_t>(e.w));
    }
    return h;
}

FaultSet::FaultSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (!ids_.empty() && ids_.front() < 0)
        throw std::invalid_argument("negative edge id in fault set");
}

bool FaultSet::contains(EdgeId e) const {
    return std::binary_search(ids_.begin(), ids_.end(), e);
}

void FaultSet::insert(EdgeId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it == ids_.end() || *it != e) ids_.insert(it, e);
}

std::vector<VertexId> FaultSet::vertices(const Graph& g) const {
    std::vector<VertexId> vs;
    vs.reserve(2 * ids_.size());
    for (EdgeId id : ids_) {
        vs.push_back(g.edge(id).u);
        vs.push_back(g.edge(id).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

uint64_t FaultSet::code() const {
    // 15 bits per id + size tag; desk-scale graphs stay well below 2^15 edges
    uint64_t c = ids_.size();
    for (EdgeId id : ids_) c = (c << 15) | static_cast<uint64_t>(id + 1);
    return c;
}

Graph load_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    int64_t W = -1;
    std::vector<Edge> edges;
    auto fail = [&lineno](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            if (n >= 0) fail("duplicate header");
            if (!(ls >> n >> m >> W) || n < 0 || m < 0 || W < 1)
                fail("malformed header");
        } else if (tag == 'e') {
            if (n < 0) fail("edge before header");
            int u, v;
            int64_t w;
            if (!(ls >> u >> v >> w)) fail("malformed edge line");
            if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex id out of range");
            if (u == v) fail("self-loop");
            if (w < 1 || w > W) fail("weight outside [1,W]");
            edges.push_back({u, v, w});
        } else {
            fail("unknown record type");
        }
    }
    if (n < 0) throw ParseError("missing header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("edge count does not match header");
    try {
        return Graph(n, W, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());  // duplicate edge etc.
    }
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "p " << g.n() << ' ' << g.m() << ' ' << g.W() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

namespace {
// mt19937_64 with modulo keeps results identical across standard libraries
uint64_t rng_below(std::mt19937_64& rng, uint64_t bound) {
    return rng() % bound;
}
}  // namespace

Graph generate_random_graph(int n, int m, int64_t W, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    int64_t max_m = static_cast<int64_t>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m) throw std::invalid_argument("infeasible (n, m)");
    std::mt19937_64 rng(seed);

    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng_below(rng, i + 1)]);

    std::unordered_set<uint64_t> used;
    std::vector<Edge> edges;
    auto key = [](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
    };
    auto draw_w = [&rng, W] { return static_cast<int64_t>(rng_below(rng, W)) + 1; };

    for (int i = 1; i < n; ++i) {
        VertexId a = order[i];
        VertexId b = order[rng_below(rng, i)];
        used.insert(key(a, b));
        edges.push_back({a, b, draw_w()});
    }
    while (static_cast<int>(edges.size()) < m) {
        VertexId a = static_cast<VertexId>(rng_below(rng, n));
        VertexId b = static_cast<VertexId>(rng_below(rng, n));
        if (a == b || used.count(key(a, b))) continue;
        used.insert(key(a, b));
        edges.push_back({a, b, draw_w()});
    }
    return Graph(n, W, std::move(edges));
}

}  // namespace fto
