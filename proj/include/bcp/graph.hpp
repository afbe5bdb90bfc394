#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcp {

// Violated documented preconditions (bad ids, out-of-range indices, broken
// input structure). Distinct from an "invalid" verification verdict, which is
// a normal result, not an error.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an enumeration or search would exceed its configured resource cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;  // 1-indexed, first < second

inline int ceil_log2(int n) {
    if (n < 1) throw precondition_error("ceil_log2: argument must be >= 1");
    return static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1)));
}

// Simple undirected graph on vertices 1..n. Value type; operations return new
// graphs rather than mutating.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;  // sorted ascending, no duplicates, no loops

    static Graph make(int n, std::vector<Edge> es) {
        if (n < 0) throw precondition_error("graph: negative vertex count");
        for (auto& [u, v] : es) {
            if (u > v) std::swap(u, v);
            if (u < 1 || v > n) throw precondition_error("graph: vertex id out of range");
            if (u == v) throw precondition_error("graph: loop edge");
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        return Graph{n, std::move(es)};
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
    }

    std::size_t edge_count() const { return edges.size(); }

    bool operator==(const Graph&) const = default;
};

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n + 1);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

// Bitmask adjacency, vertex v at bit v-1. Requires n <= 64.
inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.n > 64) throw precondition_error("adjacency_masks: more than 64 vertices");
    std::vector<std::uint64_t> adj(g.n + 1, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= std::uint64_t{1} << (v - 1);
        adj[v] |= std::uint64_t{1} << (u - 1);
    }
    return adj;
}

// A biclique: two disjoint nonempty vertex classes; its edge set is the full
// cross product class0 x class1.
struct Biclique {
    std::vector<int> class0, class1;  // each sorted ascending

    static Biclique make(std::vector<int> a, std::vector<int> b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a.empty() || b.empty()) throw precondition_error("biclique: empty class");
        if (std::adjacent_find(a.begin(), a.end()) != a.end() ||
            std::adjacent_find(b.begin(), b.end()) != b.end())
            throw precondition_error("biclique: repeated vertex in a class");
        std::vector<int> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        if (!both.empty()) throw precondition_error("biclique: classes intersect");
        if (a.front() < 1 || b.front() < 1) throw precondition_error("biclique: vertex id < 1");
        return Biclique{std::move(a), std::move(b)};
    }

    // Orientation with the lexicographically smaller class first.
    Biclique normalized() const {
        if (class1 < class0) return Biclique{class1, class0};
        return *this;
    }

    bool contains(int v) const {
        return std::binary_search(class0.begin(), class0.end(), v) ||
               std::binary_search(class1.begin(), class1.end(), v);
    }

    std::size_t cross_edge_count() const { return class0.size() * class1.size(); }

    bool operator==(const Biclique&) const = default;
};

enum class CertMode { cover, partition };

inline const char* to_string(CertMode m) { return m == CertMode::cover ? "cover" : "partition"; }

struct BicliqueCertificate {
    CertMode mode = CertMode::cover;
    std::vector<Biclique> bicliques;

    std::size_t size() const { return bicliques.size(); }

    bool operator==(const BicliqueCertificate&) const = default;
};

struct LocalityProfile {
    std::vector<int> counts;  // indexed by vertex id, [0] unused
    int max = 0;

    int count(int v) const { return counts.at(v); }
};

// Per-vertex membership counts over a certificate. A vertex is "in" a biclique
// if it lies in either class.
inline LocalityProfile locality(const BicliqueCertificate& cert, int n) {
    LocalityProfile p;
    p.counts.assign(n + 1, 0);
    for (const auto& b : cert.bicliques) {
        for (int v : b.class0) {
            if (v < 1 || v > n) throw precondition_error("locality: vertex id out of range");
            ++p.counts[v];
        }
        for (int v : b.class1) {
            if (v < 1 || v > n) throw precondition_error("locality: vertex id out of range");
            ++p.counts[v];
        }
    }
    p.max = p.counts.empty() ? 0 : *std::max_element(p.counts.begin(), p.counts.end());
    return p;
}

struct VerifyResult {
    bool valid = false;
    std::string reason;  // empty when valid
};

// Checks a certificate against a graph. Structural problems (ids outside the
// graph) throw precondition_error; semantic failures return an invalid verdict
// with a reason. A cover must touch every edge at least once, a partition
// exactly once, and every cross pair of every biclique must be a real edge.
inline VerifyResult verify(const Graph& g, const BicliqueCertificate& cert) {
    for (std::size_t k = 0; k < cert.bicliques.size(); ++k) {
        const auto& b = cert.bicliques[k];
        for (int v : b.class0)
            if (v < 1 || v > g.n) throw precondition_error("certificate: vertex id out of range");
        for (int v : b.class1)
            if (v < 1 || v > g.n) throw precondition_error("certificate: vertex id out of range");
    }
    std::vector<int> covered(g.edges.size(), 0);
    auto edge_index = [&](int u, int v) -> long {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(g.edges.begin(), g.edges.end(), Edge{u, v});
        if (it == g.edges.end() || *it != Edge{u, v}) return -1;
        return it - g.edges.begin();
    };
    for (std::size_t k = 0; k < cert.bicliques.size(); ++k) {
        const auto& b = cert.bicliques[k];
        for (int u : b.class0)
            for (int v : b.class1) {
                long idx = edge_index(u, v);
                if (idx < 0)
                    return {false, "biclique " + std::to_string(k + 1) + ": pair (" +
                                       std::to_string(u) + "," + std::to_string(v) +
                                       ") is not an edge"};
                ++covered[idx];
            }
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        if (covered[i] == 0)
            return {false,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is uncovered"};
        if (cert.mode == CertMode::partition && covered[i] > 1)
            return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") is covered " + std::to_string(covered[i]) + " times"};
    }
    return {true, ""};
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2 - g.edges.size());
    auto it = g.edges.begin();
    for (int u = 1; u <= g.n; ++u)
        for (int v = u + 1; v <= g.n; ++v) {
            if (it != g.edges.end() && *it == Edge{u, v})
                ++it;
            else
                es.emplace_back(u, v);
        }
    return Graph{g.n, std::move(es)};
}

// Subgraph induced on `vertices` (must be distinct and in range), reindexed to
// 1..k preserving the given ascending order.
inline Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw precondition_error("induced_subgraph: repeated vertex");
    std::vector<int> new_id(g.n + 1, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 1 || v > g.n) throw precondition_error("induced_subgraph: vertex out of range");
        new_id[v] = static_cast<int>(i) + 1;
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges)
        if (new_id[u] && new_id[v]) es.emplace_back(new_id[u], new_id[v]);
    return Graph::make(static_cast<int>(vertices.size()), std::move(es));
}

struct IdentifyResult {
    Graph graph;
    std::vector<int> new_id;  // old vertex id -> new vertex id, [0] unused
};

// Merges each pair (a,b) into one vertex (the pairs must be pairwise disjoint).
// Loops created by the merge are deleted and parallel edges collapse. Surviving
// representatives keep their relative order and are compacted to 1..n-t.
inline IdentifyResult identify_vertices(const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> rep(g.n + 1);
    for (int v = 0; v <= g.n; ++v) rep[v] = v;
    std::vector<char> seen(g.n + 1, 0);
    for (auto [a, b] : pairs) {
        if (a < 1 || a > g.n || b < 1 || b > g.n)
            throw precondition_error("identify_vertices: vertex out of range");
        if (a == b || seen[a] || seen[b])
            throw precondition_error("identify_vertices: pairs must be disjoint");
        seen[a] = seen[b] = 1;
        if (a > b) std::swap(a, b);
        rep[b] = a;  // keep the smaller id as representative
    }
    std::vector<int> new_id(g.n + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.n; ++v)
        if (rep[v] == v) new_id[v] = ++next;
    for (int v = 1; v <= g.n; ++v)
        if (rep[v] != v) new_id[v] = new_id[rep[v]];
    std::vector<Edge> es;
    for (auto [u, v] : g.edges) {
        int a = new_id[u], b = new_id[v];
        if (a == b) continue;  // merged endpoints: loop, dropped
        es.emplace_back(a, b);
    }
    return {Graph::make(next, std::move(es)), std::move(new_id)};
}

}  // namespace bcp
