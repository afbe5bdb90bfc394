#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"

namespace bcp {

// ---- restrictions of a biclique by a host biclique -------------------------

enum class RestrictionClass { star, k22, other };

inline const char* to_string(RestrictionClass c) {
    switch (c) {
        case RestrictionClass::star: return "star";
        case RestrictionClass::k22: return "k22";
        default: return "other";
    }
}

// A star has a singleton class (a single edge counts); k22 is the 2-by-2 case.
inline RestrictionClass classify(const Biclique& b) {
    if (b.class0.size() == 1 || b.class1.size() == 1) return RestrictionClass::star;
    if (b.class0.size() == 2 && b.class1.size() == 2) return RestrictionClass::k22;
    return RestrictionClass::other;
}

namespace detail {
inline bool contains_sorted(const std::vector<int>& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}
inline std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
}  // namespace detail

// The component of a's cross pairs that also cross the host and contain e.
// Cross pairs of a crossing the host split into two disjoint bicliques by
// which host side the a-class-0 endpoint lies on; e picks one of them. The
// result keeps a's orientation (class0 a subset of a.class0) and is a biclique
// of both inputs' edge sets.
inline Biclique restrict_biclique(const Biclique& a, const Biclique& host, Edge e) {
    using detail::contains_sorted;
    auto [u, v] = e;
    int au, av;  // au in a.class0, av in a.class1
    if (contains_sorted(a.class0, u) && contains_sorted(a.class1, v)) {
        au = u;
        av = v;
    } else if (contains_sorted(a.class0, v) && contains_sorted(a.class1, u)) {
        au = v;
        av = u;
    } else {
        throw precondition_error("restrict_biclique: edge is not a cross pair of the biclique");
    }
    if (contains_sorted(host.class0, au) && contains_sorted(host.class1, av))
        return Biclique::make(detail::intersect_sorted(a.class0, host.class0),
                              detail::intersect_sorted(a.class1, host.class1));
    if (contains_sorted(host.class1, au) && contains_sorted(host.class0, av))
        return Biclique::make(detail::intersect_sorted(a.class0, host.class1),
                              detail::intersect_sorted(a.class1, host.class0));
    throw precondition_error("restrict_biclique: edge is not a cross pair of the host");
}

// ---- shared edges of the codimension-two cover -----------------------------

struct SharedEdge {
    int i, j;  // 1-based coordinates, i < j
    Edge e;
};

// For every coordinate pair {i,j} there are exactly two edges lying in both
// coordinate bicliques: the (00,11) and (01,10) words of that pair. They are
// vertex-disjoint, 2 per pair, m(m-1) in total.
inline std::vector<SharedEdge> codim2_shared_edges(int m) {
    auto ws = codim2_words(m);
    auto find_id = [&](const std::string& w) {
        auto it = std::lower_bound(ws.begin(), ws.end(), w, ternary_less);
        return static_cast<int>(it - ws.begin()) + 1;
    };
    std::vector<SharedEdge> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto word = [&](char a, char b) {
                std::string w(m, '*');
                w[i] = a;
                w[j] = b;
                return w;
            };
            int v00 = find_id(word('0', '0')), v11 = find_id(word('1', '1'));
            int v01 = find_id(word('0', '1')), v10 = find_id(word('1', '0'));
            Edge e1{std::min(v00, v11), std::max(v00, v11)};
            Edge e2{std::min(v01, v10), std::max(v01, v10)};
            if (e2 < e1) std::swap(e1, e2);
            out.push_back({i + 1, j + 1, e1});
            out.push_back({i + 1, j + 1, e2});
        }
    return out;
}

// ---- classification of a partition against the coordinate cover ------------

struct SharedEdgeRow {
    int i, j;             // host coordinates, 1-based, i < j
    Edge e;               // the shared edge
    int partition_index;  // 0-based index of the partition biclique covering e
    RestrictionClass on_i, on_j;
    bool red_in_i, red_in_j;  // red = restriction is a star or a k22
};

struct RestrictionTable {
    std::vector<SharedEdgeRow> rows;
    std::vector<std::vector<int>> red_rows;  // per coordinate (0-based), row indices
};

// For a partition pi of the codimension-two graph, restricts the partition
// biclique of every shared edge onto both of its coordinate bicliques and
// classifies the components. For every shared edge at least one restriction
// is a star, or both are k22's — a structural fact about valid partitions
// here, enforced as an internal invariant.
inline RestrictionTable classify_restrictions(int m, const BicliqueCertificate& pi) {
    Graph g = codim2_graph(m);
    if (pi.mode != CertMode::partition)
        throw precondition_error("classify_restrictions: certificate must be a partition");
    auto vr = verify(g, pi);
    if (!vr.valid)
        throw precondition_error("classify_restrictions: invalid partition: " + vr.reason);
    auto cover = covering_bicliques(m);
    RestrictionTable table;
    table.red_rows.assign(m, {});
    for (const auto& se : codim2_shared_edges(m)) {
        SharedEdgeRow row;
        row.i = se.i;
        row.j = se.j;
        row.e = se.e;
        row.partition_index = -1;
        for (std::size_t a = 0; a < pi.bicliques.size(); ++a) {
            const auto& b = pi.bicliques[a];
            auto [u, v] = se.e;
            bool cross = (detail::contains_sorted(b.class0, u) && detail::contains_sorted(b.class1, v)) ||
                         (detail::contains_sorted(b.class0, v) && detail::contains_sorted(b.class1, u));
            if (cross) {
                row.partition_index = static_cast<int>(a);
                break;
            }
        }
        if (row.partition_index < 0)
            throw std::logic_error("classify_restrictions: shared edge not covered by any biclique");
        const auto& a = pi.bicliques[row.partition_index];
        row.on_i = classify(restrict_biclique(a, cover.bicliques[se.i - 1], se.e));
        row.on_j = classify(restrict_biclique(a, cover.bicliques[se.j - 1], se.e));
        row.red_in_i = row.on_i != RestrictionClass::other;
        row.red_in_j = row.on_j != RestrictionClass::other;
        if (!(row.on_i == RestrictionClass::star || row.on_j == RestrictionClass::star ||
              (row.on_i == RestrictionClass::k22 && row.on_j == RestrictionClass::k22)))
            throw std::logic_error("classify_restrictions: impossible restriction pair");
        int idx = static_cast<int>(table.rows.size());
        if (row.red_in_i) table.red_rows[se.i - 1].push_back(idx);
        if (row.red_in_j) table.red_rows[se.j - 1].push_back(idx);
        table.rows.push_back(row);
    }
    return table;
}

// ---- extracting a crown from a partition ------------------------------------

struct CrownExtraction {
    int host = 0;  // the chosen coordinate, 1-based
    int t = 0;
    std::vector<int> rows;                     // kept shared-edge rows, label order
    std::vector<int> u_vertices, v_vertices;   // original endpoint ids per label
    Graph crown;                               // crown_graph(t)
    BicliqueCertificate partition;             // induced partition of the crown
};

// Selects the coordinate with the most red shared edges, then greedily keeps a
// set of them whose endpoints span an induced crown: a kept k22 restriction
// forbids the edges owning its two extra vertices. The partition of the big
// graph then induces a partition of the crown without increasing locality.
inline CrownExtraction extract_crown_partition(int m, const BicliqueCertificate& pi) {
    Graph g = codim2_graph(m);
    auto table = classify_restrictions(m, pi);
    auto cover = covering_bicliques(m);

    CrownExtraction ex;
    std::size_t best = 0;
    for (int i = 0; i < m; ++i)
        if (table.red_rows[i].size() > best) {
            best = table.red_rows[i].size();
            ex.host = i + 1;
        }
    if (ex.host == 0) throw std::logic_error("extract_crown_partition: no red shared edge");
    const auto& reds = table.red_rows[ex.host - 1];
    const auto& hostb = cover.bicliques[ex.host - 1];

    // Greedy selection. Processing reds in label order; keeping a k22 discards
    // the labels owning its extra vertices, and an edge whose extras touch an
    // already-kept endpoint steps aside itself, so no choice is ever undone.
    std::vector<char> discarded(reds.size(), 0);
    std::set<int> kept_endpoints;
    std::vector<int> kept;
    auto owner_positions = [&](int vertex) {
        std::vector<int> out;
        for (std::size_t p = 0; p < reds.size(); ++p) {
            const auto& row = table.rows[reds[p]];
            if (row.e.first == vertex || row.e.second == vertex) out.push_back(static_cast<int>(p));
        }
        return out;
    };
    for (std::size_t p = 0; p < reds.size(); ++p) {
        if (discarded[p]) continue;
        const auto& row = table.rows[reds[p]];
        const auto& a = pi.bicliques[row.partition_index];
        Biclique k = restrict_biclique(a, hostb, row.e);
        std::vector<int> extras;
        if (classify(k) == RestrictionClass::k22) {
            for (int x : k.class0)
                if (x != row.e.first && x != row.e.second) extras.push_back(x);
            for (int x : k.class1)
                if (x != row.e.first && x != row.e.second) extras.push_back(x);
            bool clash = false;
            for (int x : extras)
                if (kept_endpoints.count(x)) clash = true;
            if (clash) continue;  // self-discard, keeps earlier choices intact
        }
        kept.push_back(reds[p]);
        kept_endpoints.insert(row.e.first);
        kept_endpoints.insert(row.e.second);
        for (int x : extras)
            for (int p2 : owner_positions(x)) {
                if (p2 == static_cast<int>(p)) continue;
                if (!discarded[p2] &&
                    std::find(kept.begin(), kept.end(), reds[p2]) != kept.end())
                    throw std::logic_error("extract_crown_partition: greedy tried to evict a kept edge");
                discarded[p2] = 1;
            }
    }
    ex.rows = kept;
    ex.t = static_cast<int>(kept.size());
    if (ex.t < (m - 1 + 2) / 3)
        throw std::logic_error("extract_crown_partition: kept set smaller than (m-1)/3");

    // Label endpoints: u = the endpoint fixing the host coordinate to 0.
    for (int ridx : kept) {
        const auto& row = table.rows[ridx];
        int u = row.e.first, v = row.e.second;
        if (!detail::contains_sorted(hostb.class0, u)) std::swap(u, v);
        ex.u_vertices.push_back(u);
        ex.v_vertices.push_back(v);
    }
    ex.crown = crown_graph(std::max(ex.t, 1));

    // Induce the partition on the kept endpoints. Each partition biclique
    // meets them in u's on one side and v's on the other; the one kept edge it
    // may contain (its own) is trimmed away, which the star/k22 shape of its
    // restriction always permits.
    auto label_of_u = [&](int x) {
        for (int k2 = 0; k2 < ex.t; ++k2)
            if (ex.u_vertices[k2] == x) return k2;
        return -1;
    };
    auto label_of_v = [&](int x) {
        for (int k2 = 0; k2 < ex.t; ++k2)
            if (ex.v_vertices[k2] == x) return k2;
        return -1;
    };
    ex.partition.mode = CertMode::partition;
    // Only pairs crossing the host coordinate are crown edges, so each
    // partition biclique contributes up to two blocks: its u-side-by-v-side
    // intersections in either orientation. A vertex lies on one host side
    // only, hence in at most one block per biclique — locality is preserved.
    auto add_block = [&](const std::vector<int>& uside, const std::vector<int>& vside) {
        if (uside.empty() || vside.empty()) return;
        std::vector<int> us, vs;
        for (int x : uside) us.push_back(label_of_u(x));
        for (int x : vside) vs.push_back(label_of_v(x));
        int inner = -1;
        for (int l : us)
            if (std::find(vs.begin(), vs.end(), l) != vs.end()) {
                if (inner >= 0)
                    throw std::logic_error("extract_crown_partition: two kept edges in one block");
                inner = l;
            }
        if (inner >= 0) {
            if (us.size() == 1) {
                vs.erase(std::find(vs.begin(), vs.end(), inner));
            } else if (vs.size() == 1) {
                us.erase(std::find(us.begin(), us.end(), inner));
            } else {
                throw std::logic_error("extract_crown_partition: kept edge in a non-star block");
            }
            if (us.empty() || vs.empty()) return;
        }
        std::vector<int> c0, c1;
        for (int l : us) c0.push_back(l + 1);
        for (int l : vs) c1.push_back(ex.t + l + 1);
        ex.partition.bicliques.push_back(Biclique::make(std::move(c0), std::move(c1)));
    };
    for (const auto& a : pi.bicliques) {
        std::vector<int> a0u, a0v, a1u, a1v;
        for (int x : a.class0) {
            if (label_of_u(x) >= 0) a0u.push_back(x);
            else if (label_of_v(x) >= 0) a0v.push_back(x);
        }
        for (int x : a.class1) {
            if (label_of_u(x) >= 0) a1u.push_back(x);
            else if (label_of_v(x) >= 0) a1v.push_back(x);
        }
        add_block(a0u, a1v);
        add_block(a1u, a0v);
    }
    auto vr = verify(ex.crown, ex.partition);
    if (!vr.valid)
        throw std::logic_error("extract_crown_partition: induced certificate invalid: " + vr.reason);
    if (ex.t >= 1 &&
        locality(ex.partition, 2 * ex.t).max > locality(pi, g.n).max)
        throw std::logic_error("extract_crown_partition: locality increased");
    return ex;
}

// ---- folding a crown certificate onto the complete graph -------------------

// Identify u^i with v^i. No valid crown biclique contains both endpoints of a
// non-edge u^i,v^i, so classes stay disjoint and the folded membership count
// of w^i is exactly the sum of the two preimage counts. The result covers K_t.
inline BicliqueCertificate fold_crown_cover(int t, const BicliqueCertificate& cert) {
    Graph h = crown_graph(t);
    BicliqueCertificate as_cover = cert;
    as_cover.mode = CertMode::cover;
    auto vr = verify(h, as_cover);
    if (!vr.valid)
        throw precondition_error("fold_crown_cover: certificate invalid on the crown: " + vr.reason);
    BicliqueCertificate out;
    out.mode = CertMode::cover;
    for (const auto& b : cert.bicliques) {
        auto fold_side = [&](const std::vector<int>& side) {
            std::vector<int> s;
            for (int x : side) s.push_back(x > t ? x - t : x);
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::logic_error("fold_crown_cover: a class contains both partners");
            return s;
        };
        out.bicliques.push_back(Biclique::make(fold_side(b.class0), fold_side(b.class1)));
    }
    auto vk = verify(complete_graph(t), out);
    if (!vk.valid) throw std::logic_error("fold_crown_cover: folded certificate invalid: " + vk.reason);
    return out;
}

// ---- strongly independent edge sets -----------------------------------------

// Two edges are strongly independent if they share no endpoint and no biclique
// of the graph contains both, i.e. the four endpoints do not span a crossing
// 4-cycle through the two edges.
inline bool strongly_independent(const Graph& g, Edge e, Edge f) {
    auto [a, b] = e;
    auto [c, d] = f;
    if (a == c || a == d || b == c || b == d) return false;
    if (g.has_edge(a, c) && g.has_edge(b, d)) return false;
    if (g.has_edge(a, d) && g.has_edge(b, c)) return false;
    return true;
}

// Exact maximum set of pairwise strongly independent edges (each forces its
// own biclique in any cover). Exhaustive branch and bound over the edge
// compatibility graph; limited to 64 edges.
inline std::vector<Edge> max_strongly_independent_set(const Graph& g) {
    int e = static_cast<int>(g.edges.size());
    if (e > 64) throw resource_error("max_strongly_independent_set: more than 64 edges");
    std::vector<std::uint64_t> compat(e, 0);
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            if (strongly_independent(g, g.edges[i], g.edges[j])) {
                compat[i] |= std::uint64_t{1} << j;
                compat[j] |= std::uint64_t{1} << i;
            }
    std::vector<int> best, cur;
    auto dfs = [&](auto&& self, std::uint64_t cand) -> void {
        if (cur.size() > best.size()) best = cur;
        while (cand) {
            if (cur.size() + std::popcount(cand) <= best.size()) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            cur.push_back(v);
            self(self, cand & compat[v]);
            cur.pop_back();
        }
    };
    std::uint64_t full = e == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1;
    dfs(dfs, full);
    std::vector<Edge> out;
    for (int i : best) out.push_back(g.edges[i]);
    return out;
}

// ---- localizing an arbitrary 2-local cover ----------------------------------

namespace detail {

struct TernaryLess {
    bool operator()(const std::string& a, const std::string& b) const { return ternary_less(a, b); }
};

}  // namespace detail

// Rebuilds a 2-local cover by m bicliques into a partition whose locality is
// at most 2*ceil(log2(m-1)) + 2 (m >= 3; for m = 2 the bound is 2 without
// shared edges and 4 with one). Vertices are represented by their membership
// words, twins are merged, and each coordinate's complete-bipartite class is
// split around the shared edges assigned away from it.
inline BicliqueCertificate thm5_localize(const Graph& g, const BicliqueCertificate& cover) {
    int m = static_cast<int>(cover.bicliques.size());
    if (m < 2) throw precondition_error("thm5_localize: need at least two bicliques");
    BicliqueCertificate as_cover = cover;
    as_cover.mode = CertMode::cover;
    auto vr = verify(g, as_cover);
    if (!vr.valid) throw precondition_error("thm5_localize: not a valid cover: " + vr.reason);
    if (locality(as_cover, g.n).max > 2)
        throw precondition_error("thm5_localize: cover is not 2-local");

    // membership words over the cover's coordinates
    std::vector<std::string> word(g.n + 1, std::string(m, '*'));
    for (int i = 0; i < m; ++i) {
        for (int v : cover.bicliques[i].class0) word[v][i] = '0';
        for (int v : cover.bicliques[i].class1) word[v][i] = '1';
    }
    std::map<std::string, std::vector<int>, detail::TernaryLess> twin_classes;
    for (int v = 1; v <= g.n; ++v) twin_classes[word[v]].push_back(v);
    std::vector<std::string> rep;
    std::vector<std::vector<int>> members;
    for (auto& [w, vs] : twin_classes) {
        rep.push_back(w);
        members.push_back(vs);
    }
    int R = static_cast<int>(rep.size());

    std::vector<std::vector<int>> zeros(m), ones(m);
    for (int r = 0; r < R; ++r)
        for (int i = 0; i < m; ++i) {
            if (rep[r][i] == '0') zeros[i].push_back(r);
            if (rep[r][i] == '1') ones[i].push_back(r);
        }

    // shared edges: representative pairs conflicting in two coordinates; the
    // lexicographically smaller edge of a pair {i,j} is covered at the smaller
    // coordinate (and removed from the larger), the other one vice versa.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> shared;
    for (int p = 0; p < R; ++p)
        for (int q = p + 1; q < R; ++q) {
            int ci = -1, cj = -1;
            for (int i = 0; i < m; ++i) {
                char a = rep[p][i], b = rep[q][i];
                if ((a == '0' && b == '1') || (a == '1' && b == '0')) {
                    if (ci < 0)
                        ci = i;
                    else
                        cj = i;
                }
            }
            if (cj >= 0) shared[{ci, cj}].push_back({p, q});
        }
    std::vector<std::vector<std::pair<int, int>>> removed(m);  // per coord: (rep at 0, rep at 1)
    auto orient = [&](std::pair<int, int> pq, int coord) {
        return rep[pq.first][coord] == '0' ? pq : std::pair<int, int>{pq.second, pq.first};
    };
    for (auto& [ij, list] : shared) {
        auto [i, j] = ij;
        // list is in ascending (p,q) order, i.e. word order
        removed[j].push_back(orient(list[0], j));
        if (list.size() > 1) removed[i].push_back(orient(list[1], i));
        if (list.size() > 2) throw std::logic_error("thm5_localize: more than two shared edges for a pair");
    }
    bool any_shared = !shared.empty();

    BicliqueCertificate out;
    out.mode = CertMode::partition;
    auto emit = [&](const std::vector<int>& ls, const std::vector<int>& rs) {
        if (ls.empty() || rs.empty()) return;
        std::vector<int> c0, c1;
        for (int r : ls) c0.insert(c0.end(), members[r].begin(), members[r].end());
        for (int r : rs) c1.insert(c1.end(), members[r].begin(), members[r].end());
        std::sort(c0.begin(), c0.end());
        std::sort(c1.begin(), c1.end());
        out.bicliques.push_back(Biclique{std::move(c0), std::move(c1)});
    };
    auto minus = [](const std::vector<int>& all, const std::vector<int>& drop) {
        std::vector<int> out2;
        for (int x : all)
            if (std::find(drop.begin(), drop.end(), x) == drop.end()) out2.push_back(x);
        return out2;
    };
    for (int i = 0; i < m; ++i) {
        const auto& l = zeros[i];
        const auto& r = ones[i];
        if (l.empty() || r.empty()) continue;  // possible only via twins of the other side
        auto& rm = removed[i];
        if (rm.empty()) {
            emit(l, r);
            continue;
        }
        if (rm.size() == 1) {
            auto [u, v] = rm[0];
            emit({u}, minus(r, {v}));
            emit(minus(l, {u}), {v});
            emit(minus(l, {u}), minus(r, {v}));
            continue;
        }
        std::sort(rm.begin(), rm.end());  // by left representative, i.e. word order
        std::vector<int> us, vs;
        for (auto [u, v] : rm) {
            us.push_back(u);
            vs.push_back(v);
        }
        emit(minus(l, us), r);
        emit(us, minus(r, vs));
        for (const auto& [za, on] : crown_label_blocks(static_cast<int>(rm.size()))) {
            std::vector<int> ls2, rs2;
            for (int a : za) ls2.push_back(us[a]);
            for (int b : on) rs2.push_back(vs[b]);
            emit(ls2, rs2);
        }
    }

    auto vo = verify(g, out);
    if (!vo.valid) throw std::logic_error("thm5_localize: produced certificate invalid: " + vo.reason);
    int bound = m >= 3 ? 2 * ceil_log2(m - 1) + 2 : (any_shared ? 4 : 2);
    if (locality(out, g.n).max > bound)
        throw std::logic_error("thm5_localize: locality bound exceeded");
    return out;
}

}  // namespace bcp
