#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "graph.hpp"
#include "subcube.hpp"

namespace bcp {

// ---- words over {0,1,*}, ordered 0 < 1 < * -------------------------------

inline int ternary_digit(char c) {
    switch (c) {
        case '0': return 0;
        case '1': return 1;
        case '*': return 2;
    }
    throw precondition_error("ternary word: invalid character");
}

inline bool ternary_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int da = ternary_digit(a[i]), db = ternary_digit(b[i]);
        if (da != db) return da < db;
    }
    return false;
}

// All 3^m words of length m in the order above.
inline std::vector<std::string> ternary_words(int m) {
    if (m < 0) throw precondition_error("ternary_words: negative length");
    if (m > 10) throw precondition_error("ternary_words: length too large to enumerate");
    std::vector<std::string> ws = {""};
    static const char digits[3] = {'0', '1', '*'};
    for (int i = 0; i < m; ++i) {
        std::vector<std::string> next;
        next.reserve(ws.size() * 3);
        for (char c : digits)
            for (const auto& w : ws) next.push_back(c + w);
        // prepending keeps the order only if we rebuild: words sorted by first
        // digit, then recursively — which is exactly what the loop above does.
        ws = std::move(next);
    }
    return ws;
}

// 1-based rank of a word in the order above (its base-3 value, plus one).
inline int ternary_index(const std::string& w) {
    long long x = 0;
    for (char c : w) x = x * 3 + ternary_digit(c);
    return static_cast<int>(x) + 1;
}

// ---- complete graphs ------------------------------------------------------

inline Graph complete_graph(int n) {
    if (n < 0) throw precondition_error("complete_graph: negative order");
    std::vector<Edge> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) es.emplace_back(u, v);
    return Graph{n, std::move(es)};
}

// n-1 stars: vertex i against everything above it.
inline BicliqueCertificate star_partition(int n) {
    BicliqueCertificate cert;
    cert.mode = CertMode::partition;
    for (int i = 1; i < n; ++i) {
        std::vector<int> rest;
        for (int v = i + 1; v <= n; ++v) rest.push_back(v);
        cert.bicliques.push_back(Biclique::make({i}, std::move(rest)));
    }
    return cert;
}

// ceil(log2 n) bicliques: give vertex v the label v-1 and split by each bit,
// most significant first. Every pair of vertices differs in some bit.
inline BicliqueCertificate binary_cover(int n) {
    if (n < 0) throw precondition_error("binary_cover: negative order");
    BicliqueCertificate cert;
    cert.mode = CertMode::cover;
    int w = n >= 1 ? ceil_log2(n) : 0;
    for (int level = 1; level <= w; ++level) {
        int shift = w - level;
        std::vector<int> zeros, ones;
        for (int v = 1; v <= n; ++v) (((v - 1) >> shift) & 1 ? ones : zeros).push_back(v);
        cert.bicliques.push_back(Biclique::make(std::move(zeros), std::move(ones)));
    }
    return cert;
}

// Partition refinement of the binary split: one biclique per bit position and
// realized prefix, so each pair is covered exactly at its first differing bit.
inline BicliqueCertificate prefix_partition(int n) {
    if (n < 0) throw precondition_error("prefix_partition: negative order");
    BicliqueCertificate cert;
    cert.mode = CertMode::partition;
    int w = n >= 1 ? ceil_log2(n) : 0;
    for (int level = 1; level <= w; ++level) {
        int shift = w - level;
        for (int prefix = 0; prefix < (1 << (level - 1)); ++prefix) {
            std::vector<int> zeros, ones;
            for (int v = 1; v <= n; ++v) {
                int x = v - 1;
                if (x >> (shift + 1) != prefix) continue;
                ((x >> shift) & 1 ? ones : zeros).push_back(v);
            }
            if (zeros.empty() || ones.empty()) continue;
            cert.bicliques.push_back(Biclique::make(std::move(zeros), std::move(ones)));
        }
    }
    return cert;
}

// ---- crowns ---------------------------------------------------------------

// Crown graph: K_{t,t} minus a perfect matching. Vertices u^i = i, v^i = t+i;
// u^i and v^j are adjacent iff i != j.
inline Graph crown_graph(int t) {
    if (t < 1) throw precondition_error("crown_graph: t >= 1 required");
    std::vector<Edge> es;
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
            if (i != j) es.emplace_back(i, t + j);
    return Graph::make(2 * t, std::move(es));
}

// Blocks of the first-differing-bit refinement over labels 0..t-1: for each
// bit position (most significant first) and each realized higher prefix, the
// labels splitting 0/1 there, in both orientations. Any ordered pair of
// distinct labels lands in exactly one block.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> crown_label_blocks(int t) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
    if (t <= 1) return blocks;
    int w = ceil_log2(t);
    for (int level = 1; level <= w; ++level) {
        int shift = w - level;
        for (int prefix = 0; prefix < (1 << (level - 1)); ++prefix) {
            std::vector<int> zeros, ones;
            for (int x = 0; x < t; ++x) {
                if (x >> (shift + 1) != prefix) continue;
                ((x >> shift) & 1 ? ones : zeros).push_back(x);
            }
            if (zeros.empty() || ones.empty()) continue;
            blocks.emplace_back(zeros, ones);
            blocks.emplace_back(ones, zeros);
        }
    }
    return blocks;
}

// Partition of the crown with every vertex in at most ceil(log2 t) bicliques.
inline BicliqueCertificate crown_log_partition(int t) {
    if (t < 1) throw precondition_error("crown_log_partition: t >= 1 required");
    BicliqueCertificate cert;
    cert.mode = CertMode::partition;
    for (const auto& [us, vs] : crown_label_blocks(t)) {
        std::vector<int> a, b;
        for (int x : us) a.push_back(x + 1);
        for (int x : vs) b.push_back(t + x + 1);
        cert.bicliques.push_back(Biclique::make(std::move(a), std::move(b)));
    }
    return cert;
}

// ---- hypercubes -----------------------------------------------------------

// Vertex v <-> bit string v-1 of length d; edges join strings at Hamming
// distance one.
inline Graph hypercube(int d) {
    if (d < 0 || d > 20) throw precondition_error("hypercube: dimension out of range");
    int n = 1 << d;
    std::vector<Edge> es;
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < d; ++b) {
            int y = x ^ (1 << b);
            if (y > x) es.emplace_back(x + 1, y + 1);
        }
    return Graph::make(n, std::move(es));
}

// Stars centred at the even-weight vertices; each edge has exactly one
// even-weight endpoint. 2^(d-1) bicliques for d >= 1.
inline BicliqueCertificate cube_star_partition(int d) {
    if (d < 0 || d > 20) throw precondition_error("cube_star_partition: dimension out of range");
    BicliqueCertificate cert;
    cert.mode = CertMode::partition;
    if (d == 0) return cert;
    for (int x = 0; x < (1 << d); ++x) {
        if (std::popcount(static_cast<unsigned>(x)) % 2) continue;
        std::vector<int> leaves;
        for (int b = 0; b < d; ++b) leaves.push_back((x ^ (1 << b)) + 1);
        cert.bicliques.push_back(Biclique::make({x + 1}, std::move(leaves)));
    }
    return cert;
}

// Partition of an even-dimensional cube into 4-cycles: coordinates are taken
// in consecutive pairs, and for each assignment of the remaining coordinates
// the four vertices of the pair form a K_{2,2} ({00,11} against {01,10}).
// Every vertex lies in exactly d/2 bicliques.
inline BicliqueCertificate cube_c4_partition(int d) {
    if (d < 2 || d % 2) throw precondition_error("cube_c4_partition: d must be even and >= 2");
    if (d > 20) throw precondition_error("cube_c4_partition: dimension out of range");
    BicliqueCertificate cert;
    cert.mode = CertMode::partition;
    for (int i = 0; i < d / 2; ++i) {
        int lo = 1 << (2 * i), hi = 1 << (2 * i + 1);
        for (int x = 0; x < (1 << d); ++x) {
            if (x & (lo | hi)) continue;  // canonical representative: both pair bits clear
            cert.bicliques.push_back(
                Biclique::make({x + 1, (x | lo | hi) + 1}, {(x | lo) + 1, (x | hi) + 1}));
        }
    }
    return cert;
}

// ---- the ternary graph ----------------------------------------------------

// Vertices are all 3^m subcubes of the m-cube (words over {0,1,*} in the
// order 0 < 1 < *); adjacency = disjointness, i.e. some coordinate fixes the
// two words to opposite values.
inline Graph ternary_graph(int m) {
    if (m < 0 || m > 7) throw precondition_error("ternary_graph: m out of range");
    auto ws = ternary_words(m);
    int n = static_cast<int>(ws.size());
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!intersects(ws[i], ws[j])) es.emplace_back(i + 1, j + 1);
    return Graph{n, std::move(es)};
}

namespace detail {

struct WordBiclique {
    std::vector<std::string> a, b;
};

inline std::vector<std::string> prefix_all(char c, const std::vector<std::string>& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (const auto& w : s) out.push_back(c + w);
    return out;
}

inline std::vector<std::string> concat(std::vector<std::string> x, std::vector<std::string> y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
}

}  // namespace detail

// The recursive partition of the ternary graph, of size (3^m - 1)/2. Base:
// {({0},{1})}. Step: a first-coordinate biclique (0-words against 1-words)
// plus, for every part (a,b) of the previous level, the three parts
// ({*,0}a, {*,0}b), ({*,1}a, 1b) and (1a, *b).
inline BicliqueCertificate recursive_partition(int m) {
    if (m < 1 || m > 7) throw precondition_error("recursive_partition: m out of range");
    using detail::WordBiclique;
    std::vector<WordBiclique> pi = {{{"0"}, {"1"}}};
    for (int step = 2; step <= m; ++step) {
        std::vector<WordBiclique> next;
        next.reserve(3 * pi.size() + 1);
        auto all = ternary_words(step - 1);
        next.push_back({detail::prefix_all('0', all), detail::prefix_all('1', all)});
        for (const auto& wb : pi) {
            next.push_back({detail::concat(detail::prefix_all('*', wb.a), detail::prefix_all('0', wb.a)),
                            detail::concat(detail::prefix_all('*', wb.b), detail::prefix_all('0', wb.b))});
            next.push_back({detail::concat(detail::prefix_all('*', wb.a), detail::prefix_all('1', wb.a)),
                            detail::prefix_all('1', wb.b)});
            next.push_back({detail::prefix_all('1', wb.a), detail::prefix_all('*', wb.b)});
        }
        pi = std::move(next);
    }
    BicliqueCertificate cert;
    cert.mode = CertMode::partition;
    for (const auto& wb : pi) {
        std::vector<int> a, b;
        for (const auto& w : wb.a) a.push_back(ternary_index(w));
        for (const auto& w : wb.b) b.push_back(ternary_index(w));
        cert.bicliques.push_back(Biclique::make(std::move(a), std::move(b)));
    }
    return cert;
}

// ---- subcubes of codimension two ------------------------------------------

// All words with exactly two fixed coordinates, in the word order above.
inline std::vector<std::string> codim2_words(int m) {
    if (m < 2 || m > 24) throw precondition_error("codim2: m out of range");
    std::vector<std::string> ws;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    std::string w(m, '*');
                    w[i] = static_cast<char>('0' + a);
                    w[j] = static_cast<char>('0' + b);
                    ws.push_back(std::move(w));
                }
    std::sort(ws.begin(), ws.end(), ternary_less);
    return ws;
}

// Disjointness graph of the codimension-two subcubes: 4*C(m,2) vertices.
inline Graph codim2_graph(int m) {
    auto ws = codim2_words(m);
    int n = static_cast<int>(ws.size());
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!intersects(ws[i], ws[j])) es.emplace_back(i + 1, j + 1);
    return Graph{n, std::move(es)};
}

// The m coordinate bicliques: words fixing coordinate i to 0 against words
// fixing it to 1. A 2-local cover (each word has two fixed coordinates).
inline BicliqueCertificate covering_bicliques(int m) {
    auto ws = codim2_words(m);
    BicliqueCertificate cert;
    cert.mode = CertMode::cover;
    for (int i = 0; i < m; ++i) {
        std::vector<int> zeros, ones;
        for (std::size_t v = 0; v < ws.size(); ++v) {
            if (ws[v][i] == '0') zeros.push_back(static_cast<int>(v) + 1);
            if (ws[v][i] == '1') ones.push_back(static_cast<int>(v) + 1);
        }
        cert.bicliques.push_back(Biclique::make(std::move(zeros), std::move(ones)));
    }
    return cert;
}

// ---- a family separating local from global measures ------------------------

// Vertices: x_1..x_m (ids 1..m), then y_S for every 2-subset S of [m] in
// lexicographic order, then one final vertex y adjacent to every x_i. Edges:
// x_k ~ y_S iff k is in S, and x_k ~ y for all k.
inline Graph counterexample_graph(int m) {
    if (m < 2 || m > 40) throw precondition_error("counterexample_graph: m out of range");
    int pairs = m * (m - 1) / 2;
    int n = m + pairs + 1;
    std::vector<Edge> es;
    int id = m;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            ++id;
            es.emplace_back(i, id);
            es.emplace_back(j, id);
        }
    for (int k = 1; k <= m; ++k) es.emplace_back(k, n);
    return Graph::make(n, std::move(es));
}

// Locality-2 partition: a star at each x_k claiming its pair neighbours, plus
// one biclique sending all of X to the final vertex. m+1 bicliques.
inline BicliqueCertificate two_local_partition(int m) {
    if (m < 2 || m > 40) throw precondition_error("two_local_partition: m out of range");
    BicliqueCertificate cert;
    cert.mode = CertMode::partition;
    int n = m + m * (m - 1) / 2 + 1;
    for (int k = 1; k <= m; ++k) {
        std::vector<int> leaves;
        int id = m;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                ++id;
                if (i == k || j == k) leaves.push_back(id);
            }
        cert.bicliques.push_back(Biclique::make({k}, std::move(leaves)));
    }
    std::vector<int> xs;
    for (int k = 1; k <= m; ++k) xs.push_back(k);
    cert.bicliques.push_back(Biclique::make(std::move(xs), {n}));
    return cert;
}

// m stars, one per x_k, each taking the whole neighbourhood of its centre.
// Every edge has exactly one X endpoint, so this is a partition of size m.
inline BicliqueCertificate star_cover(int m) {
    if (m < 2 || m > 40) throw precondition_error("star_cover: m out of range");
    BicliqueCertificate cert;
    cert.mode = CertMode::partition;
    int n = m + m * (m - 1) / 2 + 1;
    for (int k = 1; k <= m; ++k) {
        std::vector<int> leaves;
        int id = m;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                ++id;
                if (i == k || j == k) leaves.push_back(id);
            }
        leaves.push_back(n);
        cert.bicliques.push_back(Biclique::make({k}, std::move(leaves)));
    }
    return cert;
}

}  // namespace bcp
