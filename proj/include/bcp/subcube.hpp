#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "graph.hpp"

namespace bcp {

// A family of subcubes of the d-cube, one word per subcube over {0,1,*}.
// Word i describes which coordinates are fixed (0/1) and which are free (*).
struct SubcubeFamily {
    int d = 0;
    std::vector<std::string> words;

    std::size_t size() const { return words.size(); }

    bool operator==(const SubcubeFamily&) const = default;
};

inline void validate_family(const SubcubeFamily& f) {
    if (f.d < 0) throw precondition_error("subcube family: negative dimension");
    for (const auto& w : f.words) {
        if (static_cast<int>(w.size()) != f.d)
            throw precondition_error("subcube family: word length differs from dimension");
        for (char c : w)
            if (c != '0' && c != '1' && c != '*')
                throw precondition_error("subcube family: invalid character in word");
    }
}

// Two subcubes intersect iff no coordinate fixes them to opposite values.
inline bool intersects(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) throw precondition_error("intersects: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] == '0' && b[i] == '1') || (a[i] == '1' && b[i] == '0')) return false;
    return true;
}

inline int star_count(const std::string& w) {
    return static_cast<int>(std::count(w.begin(), w.end(), '*'));
}

// Vertex i <-> word i; edge iff the two subcubes intersect.
inline Graph intersection_graph(const SubcubeFamily& f) {
    validate_family(f);
    int n = static_cast<int>(f.words.size());
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (intersects(f.words[i], f.words[j])) es.emplace_back(i + 1, j + 1);
    return Graph{n, std::move(es)};
}

// Turns a biclique cover of the complement of g into a subcube family whose
// intersection graph is exactly g: one coordinate per biclique, with class0
// fixed to 0, class1 fixed to 1 and everything else free.
inline SubcubeFamily cover_to_family(const Graph& g, const BicliqueCertificate& cover) {
    BicliqueCertificate as_cover = cover;
    as_cover.mode = CertMode::cover;  // a partition certificate is a cover too
    auto vr = verify(complement(g), as_cover);
    if (!vr.valid)
        throw precondition_error("cover_to_family: certificate does not cover the complement: " + vr.reason);
    SubcubeFamily f;
    f.d = static_cast<int>(cover.bicliques.size());
    f.words.assign(g.n, std::string(f.d, '*'));
    for (int i = 0; i < f.d; ++i) {
        for (int v : cover.bicliques[i].class0) f.words[v - 1][i] = '0';
        for (int v : cover.bicliques[i].class1) f.words[v - 1][i] = '1';
    }
    return f;
}

struct FamilyCoverResult {
    Graph graph;                 // intersection graph of the family
    BicliqueCertificate cover;   // biclique cover of its complement
    int dropped = 0;             // coordinates skipped for lacking a 0- or 1-side
};

// Inverse direction: each coordinate of the family yields the biclique
// (words fixed to 0 there; words fixed to 1 there). Coordinates where either
// side is empty separate nothing and are dropped.
inline FamilyCoverResult family_to_cover(const SubcubeFamily& f) {
    FamilyCoverResult res;
    res.graph = intersection_graph(f);
    res.cover.mode = CertMode::cover;
    for (int i = 0; i < f.d; ++i) {
        std::vector<int> zeros, ones;
        for (std::size_t v = 0; v < f.words.size(); ++v) {
            if (f.words[v][i] == '0') zeros.push_back(static_cast<int>(v) + 1);
            if (f.words[v][i] == '1') ones.push_back(static_cast<int>(v) + 1);
        }
        if (zeros.empty() || ones.empty()) {
            ++res.dropped;
            continue;
        }
        res.cover.bicliques.push_back(Biclique::make(std::move(zeros), std::move(ones)));
    }
    return res;
}

// Rewrites every word to have the same number of free coordinates (the family
// maximum) without changing any pairwise intersection: append enough *'s, then
// pad with 0's to the common length d + max_stars - min_stars.
inline SubcubeFamily pad_to_uniform(const SubcubeFamily& f) {
    validate_family(f);
    if (f.words.empty()) return f;
    int mx = 0, mn = f.d;
    for (const auto& w : f.words) {
        int s = star_count(w);
        mx = std::max(mx, s);
        mn = std::min(mn, s);
    }
    SubcubeFamily out;
    out.d = f.d + mx - mn;
    for (const auto& w : f.words) {
        std::string x = w;
        x.append(mx - star_count(w), '*');
        x.append(out.d - x.size(), '0');
        out.words.push_back(std::move(x));
    }
    return out;
}

// Restriction of a uniform family onto the free coordinates of word idx
// (1-based), which must intersect every other word. The result is the family
// of the other words' traces inside that subcube; its intersection graph is
// the original one with vertex idx deleted.
inline SubcubeFamily restrict_dominating(const SubcubeFamily& f, int idx) {
    validate_family(f);
    int n = static_cast<int>(f.words.size());
    if (n < 1) throw precondition_error("restrict_dominating: empty family");
    if (idx < 1 || idx > n) throw precondition_error("restrict_dominating: index out of range");
    int stars = star_count(f.words[0]);
    for (const auto& w : f.words)
        if (star_count(w) != stars)
            throw precondition_error("restrict_dominating: family is not uniform");
    const std::string& base = f.words[idx - 1];
    std::vector<int> free_coords;
    for (int i = 0; i < f.d; ++i)
        if (base[i] == '*') free_coords.push_back(i);
    SubcubeFamily out;
    out.d = static_cast<int>(free_coords.size());
    for (int v = 1; v <= n; ++v) {
        if (v == idx) continue;
        if (!intersects(base, f.words[v - 1]))
            throw precondition_error("restrict_dominating: word " + std::to_string(idx) +
                                     " does not intersect word " + std::to_string(v));
        std::string w;
        for (int i : free_coords) w.push_back(f.words[v - 1][i]);
        out.words.push_back(std::move(w));
    }
    return out;
}

}  // namespace bcp
