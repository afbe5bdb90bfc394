#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "linalg.hpp"
#include "reductions.hpp"
#include "subcube.hpp"

namespace bcp {

// ---- biclique enumeration ---------------------------------------------------

// All bicliques of g, or only the maximal ones (maximal = neither class can be
// extended). Orientation: the class holding the smallest vertex comes first;
// output sorted by class lists. Throws resource_error beyond `cap` bicliques
// or 20 vertices.
inline std::vector<Biclique> enumerate_bicliques(const Graph& g, bool maximal_only,
                                                 std::size_t cap = 2'000'000) {
    if (g.n > 20) throw resource_error("enumerate_bicliques: more than 20 vertices");
    std::vector<Biclique> out;
    if (g.edges.empty()) return out;
    int n = g.n;
    auto adj = adjacency_masks(g);
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> cn(std::size_t{1} << n);  // common neighbourhood per vertex set
    cn[0] = full;
    for (std::uint64_t s = 1; s <= full; ++s)
        cn[s] = cn[s & (s - 1)] & adj[std::countr_zero(s) + 1];
    auto to_list = [](std::uint64_t s) {
        std::vector<int> out2;
        while (s) {
            out2.push_back(std::countr_zero(s) + 1);
            s &= s - 1;
        }
        return out2;
    };
    if (maximal_only) {
        std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
        for (std::uint64_t a = 1; a <= full; ++a) {
            std::uint64_t b = cn[a];
            if (!b) continue;
            std::uint64_t a2 = cn[b];  // closure: (a2, b) is maximal
            std::uint64_t p = a2, q = b;
            if (std::countr_zero(q) < std::countr_zero(p)) std::swap(p, q);
            seen.insert({p, q});
            if (seen.size() > cap) throw resource_error("enumerate_bicliques: cap exceeded");
        }
        for (const auto& [p, q] : seen) out.push_back(Biclique{to_list(p), to_list(q)});
    } else {
        for (std::uint64_t a = 1; a <= full; ++a) {
            int mn = std::countr_zero(a);
            // the side holding the overall smallest vertex is `a`; partners
            // come from the common neighbourhood above that vertex
            std::uint64_t allowed = cn[a] & ~((std::uint64_t{2} << mn) - 1);
            if (!allowed) continue;
            for (std::uint64_t b = allowed; b; b = (b - 1) & allowed) {
                out.push_back(Biclique{to_list(a), to_list(b)});
                if (out.size() > cap) throw resource_error("enumerate_bicliques: cap exceeded");
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Biclique& x, const Biclique& y) {
        return x.class0 != y.class0 ? x.class0 < y.class0 : x.class1 < y.class1;
    });
    return out;
}

// ---- measures and reports ----------------------------------------------------

enum class Measure { bc, bp, lbc, lbp, tau };

inline const char* to_string(Measure m) {
    switch (m) {
        case Measure::bc: return "bc";
        case Measure::bp: return "bp";
        case Measure::lbc: return "lbc";
        case Measure::lbp: return "lbp";
        default: return "tau";
    }
}

enum class LowerReason { trivial, log_clique, strongly_independent, rank };

inline const char* to_string(LowerReason r) {
    switch (r) {
        case LowerReason::rank: return "rank";
        case LowerReason::strongly_independent: return "strongly-independent";
        case LowerReason::log_clique: return "log-clique";
        default: return "trivial";
    }
}

struct BoundReport {
    Measure measure = Measure::bc;
    int lower = 0;
    LowerReason reason = LowerReason::trivial;
    int upper = 0;
    std::optional<BicliqueCertificate> upper_witness;  // for tau: a cover of the complement
};

struct SearchBudget {
    std::optional<int> k;  // number of bicliques
    std::optional<int> r;  // per-vertex membership bound
};

struct SolverOptions {
    std::optional<double> time_limit;  // seconds
    int workers = 1;
};

enum class Feasibility { yes, no, timeout };

struct FeasibleResult {
    Feasibility status = Feasibility::no;
    std::optional<BicliqueCertificate> witness;
};

// ---- exact maximum clique (used by lower bounds and prunes) -------------------

inline int max_clique(const Graph& g) {
    if (g.n == 0) return 0;
    if (g.n > 64) throw resource_error("max_clique: more than 64 vertices");
    auto adj = adjacency_masks(g);
    int best = 0;
    auto dfs = [&](auto&& self, std::uint64_t cand, int size) -> void {
        if (size > best) best = size;
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, cand & adj[v + 1], size + 1);
        }
    };
    std::uint64_t full = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
    dfs(dfs, full, 0);
    return best;
}

// ---- search engine -------------------------------------------------------------

namespace detail {

struct timeout_signal {};

struct Deadline {
    bool enabled = false;
    std::chrono::steady_clock::time_point end{};
    static Deadline from_limit(std::optional<double> seconds) {
        Deadline d;
        if (seconds) {
            d.enabled = true;
            d.end = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(*seconds));
        }
        return d;
    }
    bool expired() const { return enabled && std::chrono::steady_clock::now() >= end; }
};

struct Cand {
    std::uint64_t verts = 0;
    std::vector<std::uint64_t> edges;  // edge-index bitset
    int edge_count = 0;
    Biclique bic;
};

struct SearchCtx {
    const Graph* g = nullptr;
    CertMode mode = CertMode::cover;
    std::optional<int> k, r;
    bool tau_mode = false;  // deficit-bounded cover search
    int tau_r = 0;
    std::vector<Cand> cands;
    std::vector<std::vector<int>> edge_cands;  // per edge: candidate ids, pool order
    int max_cand_edges = 0;
    bool rank_prune = false;
    Deadline deadline;
    std::atomic<bool>* stop = nullptr;
};

struct Searcher {
    const SearchCtx& C;
    int E, W;
    std::vector<std::uint64_t> covered;
    std::vector<std::uint64_t> unc_adj;  // uncovered-edge adjacency masks (n <= 64)
    std::vector<int> counts;
    std::vector<int> chosen;
    int uncovered_cnt;
    long long nodes = 0;

    explicit Searcher(const SearchCtx& c)
        : C(c),
          E(static_cast<int>(c.g->edges.size())),
          W((static_cast<int>(c.g->edges.size()) + 63) / 64),
          covered(W, 0),
          counts(c.g->n + 1, 0),
          uncovered_cnt(static_cast<int>(c.g->edges.size())) {
        unc_adj.assign(C.g->n + 1, 0);
        if (C.g->n <= 64)
            for (auto [u, v] : C.g->edges) {
                unc_adj[u] |= std::uint64_t{1} << (v - 1);
                unc_adj[v] |= std::uint64_t{1} << (u - 1);
            }
    }

    bool edge_covered(int e) const { return covered[e >> 6] >> (e & 63) & 1; }

    bool admissible(const Cand& c) const {
        if (C.mode == CertMode::partition) {
            for (int w = 0; w < W; ++w)
                if (covered[w] & c.edges[w]) return false;
        }
        if (C.r) {
            for (std::uint64_t s = c.verts; s;) {
                int v = std::countr_zero(s) + 1;
                s &= s - 1;
                if (counts[v] >= *C.r) return false;
            }
        }
        if (C.tau_mode) {
            int next = static_cast<int>(chosen.size()) + 1;
            for (int v = 1; v <= C.g->n; ++v) {
                int cnt = counts[v] + ((c.verts >> (v - 1)) & 1 ? 1 : 0);
                if (next - cnt > C.tau_r) return false;
            }
        }
        return true;
    }

    void apply(int ci) {
        const Cand& c = C.cands[ci];
        chosen.push_back(ci);
        for (std::size_t i = 0; i < C.g->edges.size(); ++i)
            if ((c.edges[i >> 6] >> (i & 63) & 1) && !edge_covered(static_cast<int>(i))) {
                covered[i >> 6] |= std::uint64_t{1} << (i & 63);
                --uncovered_cnt;
                auto [u, v] = C.g->edges[i];
                unc_adj[u] &= ~(std::uint64_t{1} << (v - 1));
                unc_adj[v] &= ~(std::uint64_t{1} << (u - 1));
            }
        for (std::uint64_t s = c.verts; s;) {
            ++counts[std::countr_zero(s) + 1];
            s &= s - 1;
        }
    }

    // Greedy clique inside the uncovered subgraph; any clique bounds the work
    // remaining, so a heuristic choice is sound.
    int greedy_uncovered_clique() const {
        std::uint64_t cand = 0;
        for (int v = 1; v <= C.g->n; ++v)
            if (unc_adj[v]) cand |= std::uint64_t{1} << (v - 1);
        int size = 0;
        while (cand) {
            int bestv = 0, bestdeg = -1;
            for (std::uint64_t s = cand; s;) {
                int v = std::countr_zero(s) + 1;
                s &= s - 1;
                int deg = std::popcount(unc_adj[v] & cand);
                if (deg > bestdeg) {
                    bestdeg = deg;
                    bestv = v;
                }
            }
            ++size;
            cand &= unc_adj[bestv];
        }
        return size;
    }

    // Membership-capacity refutation: on a clique of the uncovered subgraph
    // the future memberships act like pairwise disjoint subcubes, so the
    // capacities c_v = r - counts[v] must satisfy sum 2^(-c_v) <= 1.
    bool capacity_violated() const {
        int r = *C.r;
        for (auto [u, v] : C.g->edges) {
            if (!(unc_adj[u] >> (v - 1) & 1)) continue;
            long double total = 0;
            std::uint64_t common = unc_adj[u] & unc_adj[v];
            auto weight = [&](int x) {
                int cap = r - counts[x];
                return cap >= 63 ? 0.0L : 1.0L / static_cast<long double>(std::uint64_t{1} << cap);
            };
            total = weight(u) + weight(v);
            while (common) {
                int bestx = 0;
                long double bestw = -1;
                for (std::uint64_t s = common; s;) {
                    int x = std::countr_zero(s) + 1;
                    s &= s - 1;
                    long double w = weight(x);
                    if (w > bestw) {
                        bestw = w;
                        bestx = x;
                    }
                }
                total += bestw;
                common &= unc_adj[bestx];
            }
            if (total > 1.0L + 1e-12L) return true;
        }
        return false;
    }

    int residual_rank_bound() const {
        std::int64_t m[16][16] = {};
        for (std::size_t i = 0; i < C.g->edges.size(); ++i)
            if (!edge_covered(static_cast<int>(i))) {
                auto [u, v] = C.g->edges[i];
                m[u - 1][v - 1] = 1;
                m[v - 1][u - 1] = 1;
            }
        int rank = bcp::detail::rank_bareiss_small(m, C.g->n, C.g->n);
        return (rank + 1) / 2;
    }

    bool dfs() {
        if ((++nodes & 1023) == 1) {
            if (C.deadline.expired()) throw timeout_signal{};
            if (C.stop && C.stop->load(std::memory_order_relaxed)) return false;
        }
        if (uncovered_cnt == 0) return true;
        int remaining = INT_MAX;
        if (C.k) {
            remaining = *C.k - static_cast<int>(chosen.size());
            if (remaining <= 0) return false;
            if (static_cast<long long>(uncovered_cnt) >
                static_cast<long long>(remaining) * C.max_cand_edges)
                return false;
            if (C.rank_prune && residual_rank_bound() > remaining) return false;
            if (C.g->n <= 64 && ceil_log2(std::max(greedy_uncovered_clique(), 1)) > remaining)
                return false;
        }
        if (C.r && C.g->n <= 64 && capacity_violated()) return false;
        int best_e = -1, best_cnt = INT_MAX;
        for (int e = 0; e < E && best_cnt > 0; ++e) {
            if (edge_covered(e)) continue;
            int cnt = 0;
            for (int ci : C.edge_cands[e]) {
                if (admissible(C.cands[ci]) && ++cnt >= best_cnt) break;
            }
            if (cnt < best_cnt) {
                best_cnt = cnt;
                best_e = e;
            }
        }
        if (best_cnt == 0 || best_e < 0) return false;
        auto saved_cov = covered;
        auto saved_unc = unc_adj;
        int saved_uncnt = uncovered_cnt;
        for (int ci : C.edge_cands[best_e]) {
            if (!admissible(C.cands[ci])) continue;
            apply(ci);
            if (dfs()) return true;
            chosen.pop_back();
            covered = saved_cov;
            unc_adj = saved_unc;
            uncovered_cnt = saved_uncnt;
            const Cand& c = C.cands[ci];
            for (std::uint64_t s = c.verts; s;) {
                --counts[std::countr_zero(s) + 1];
                s &= s - 1;
            }
        }
        return false;
    }
};

inline SearchCtx build_ctx(const Graph& g, CertMode mode, const SearchBudget& budget,
                           bool tau_mode, int tau_r, const Deadline& dl) {
    SearchCtx ctx;
    ctx.g = &g;
    ctx.mode = mode;
    ctx.k = budget.k;
    ctx.r = budget.r;
    ctx.tau_mode = tau_mode;
    ctx.tau_r = tau_r;
    ctx.deadline = dl;
    // Maximal bicliques stay sound only for plain covers: partitions need
    // exact edge sets, and a locality cap can make a sub-maximal choice
    // necessary. The deficit search tolerates maximality (bigger classes only
    // lower deficits).
    bool maximal = (mode == CertMode::cover && !budget.r) || tau_mode;
    auto pool = enumerate_bicliques(g, maximal);
    auto edge_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(g.edges.begin(), g.edges.end(), Edge{u, v});
        return static_cast<int>(it - g.edges.begin());
    };
    int E = static_cast<int>(g.edges.size());
    int W = (E + 63) / 64;
    for (auto& b : pool) {
        Cand c;
        c.edges.assign(W, 0);
        for (int u : b.class0) c.verts |= std::uint64_t{1} << (u - 1);
        for (int v : b.class1) c.verts |= std::uint64_t{1} << (v - 1);
        for (int u : b.class0)
            for (int v : b.class1) {
                int e = edge_index(u, v);
                c.edges[e >> 6] |= std::uint64_t{1} << (e & 63);
            }
        c.edge_count = static_cast<int>(b.cross_edge_count());
        c.bic = std::move(b);
        ctx.cands.push_back(std::move(c));
    }
    std::stable_sort(ctx.cands.begin(), ctx.cands.end(),
                     [](const Cand& a, const Cand& b) { return a.edge_count > b.edge_count; });
    ctx.edge_cands.assign(E, {});
    for (std::size_t ci = 0; ci < ctx.cands.size(); ++ci) {
        const Cand& c = ctx.cands[ci];
        for (int e = 0; e < E; ++e)
            if (c.edges[e >> 6] >> (e & 63) & 1) ctx.edge_cands[e].push_back(static_cast<int>(ci));
        ctx.max_cand_edges = std::max(ctx.max_cand_edges, c.edge_count);
    }
    ctx.rank_prune = mode == CertMode::partition && budget.k && g.n <= 16;
    return ctx;
}

inline BicliqueCertificate chosen_to_certificate(const SearchCtx& ctx, const std::vector<int>& chosen,
                                                 CertMode mode) {
    BicliqueCertificate cert;
    cert.mode = mode;
    for (int ci : chosen) cert.bicliques.push_back(ctx.cands[ci].bic);
    return cert;
}

inline FeasibleResult run_search(const Graph& g, SearchCtx& ctx, CertMode mode, int workers) {
    if (g.edges.empty()) {
        FeasibleResult res;
        res.status = Feasibility::yes;
        res.witness = BicliqueCertificate{mode, {}};
        return res;
    }
    Searcher root(ctx);
    if (workers <= 1) {
        try {
            if (root.dfs()) {
                auto cert = chosen_to_certificate(ctx, root.chosen, mode);
                auto vr = verify(g, cert);
                if (!vr.valid) throw std::logic_error("solver: witness failed verification: " + vr.reason);
                return {Feasibility::yes, std::move(cert)};
            }
            return {Feasibility::no, std::nullopt};
        } catch (timeout_signal) {
            return {Feasibility::timeout, std::nullopt};
        }
    }
    // Parallel mode: split the root frontier. The feasibility value does not
    // depend on the schedule; the witness may.
    int best_e = -1, best_cnt = INT_MAX;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        int cnt = 0;
        for (int ci : ctx.edge_cands[e])
            if (root.admissible(ctx.cands[ci])) ++cnt;
        if (cnt < best_cnt) {
            best_cnt = cnt;
            best_e = e;
        }
    }
    if (best_cnt == 0) return {Feasibility::no, std::nullopt};
    std::vector<int> frontier;
    for (int ci : ctx.edge_cands[best_e])
        if (root.admissible(ctx.cands[ci])) frontier.push_back(ci);
    std::atomic<bool> stop{false};
    std::atomic<bool> timed{false};
    std::atomic<std::size_t> next{0};
    std::mutex mtx;
    std::optional<BicliqueCertificate> witness;
    auto worker = [&]() {
        SearchCtx local = ctx;  // read-only copy except stop pointer
        local.stop = &stop;
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= frontier.size() || stop.load()) return;
            Searcher s(local);
            s.apply(frontier[i]);
            try {
                if (s.dfs()) {
                    std::lock_guard<std::mutex> lk(mtx);
                    if (!witness) {
                        auto cert = chosen_to_certificate(local, s.chosen, mode);
                        auto vr = verify(g, cert);
                        if (!vr.valid) throw std::logic_error("solver: witness failed verification");
                        witness = std::move(cert);
                    }
                    stop.store(true);
                    return;
                }
            } catch (timeout_signal) {
                timed.store(true);
                stop.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    int nthreads = std::min<std::size_t>(workers, frontier.size());
    for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (witness) return {Feasibility::yes, std::move(witness)};
    if (timed.load()) return {Feasibility::timeout, std::nullopt};
    return {Feasibility::no, std::nullopt};
}

}  // namespace detail

// Is there a cover/partition within the given budget (at least one of k and r
// must be set)? Exhaustive branch-and-bound; `yes` comes with a verified
// witness, `no` only after the full space is refuted.
inline FeasibleResult feasible(const Graph& g, CertMode mode, SearchBudget budget,
                               SolverOptions opts = {}) {
    if (!budget.k && !budget.r) throw precondition_error("feasible: budget needs k or r");
    if ((budget.k && *budget.k < 0) || (budget.r && *budget.r < 0))
        throw precondition_error("feasible: negative budget");
    auto dl = detail::Deadline::from_limit(opts.time_limit);
    auto ctx = detail::build_ctx(g, mode, budget, false, 0, dl);
    return detail::run_search(g, ctx, mode, opts.workers);
}

// ---- bounds -------------------------------------------------------------------

namespace detail {

inline BicliqueCertificate greedy_cover(const Graph& g) {
    BicliqueCertificate cert;
    cert.mode = CertMode::cover;
    if (g.edges.empty()) return cert;
    auto pool = enumerate_bicliques(g, true);
    int E = static_cast<int>(g.edges.size());
    auto edge_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(g.edges.begin(), g.edges.end(), Edge{u, v});
        return static_cast<int>(it - g.edges.begin());
    };
    std::vector<std::vector<int>> eidx(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (int u : pool[i].class0)
            for (int v : pool[i].class1) eidx[i].push_back(edge_index(u, v));
    std::vector<char> covered(E, 0);
    int left = E;
    while (left > 0) {
        int besti = -1, bestnew = 0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            int cnt = 0;
            for (int e : eidx[i]) cnt += !covered[e];
            if (cnt > bestnew) {
                bestnew = cnt;
                besti = static_cast<int>(i);
            }
        }
        if (besti < 0) throw std::logic_error("greedy_cover: stuck");
        for (int e : eidx[besti])
            if (!covered[e]) {
                covered[e] = 1;
                --left;
            }
        cert.bicliques.push_back(pool[besti]);
    }
    return cert;
}

// Star partition of an arbitrary graph: each vertex claims its forward
// neighbours, so every edge is covered at its smaller endpoint.
inline BicliqueCertificate generic_star_partition(const Graph& g) {
    BicliqueCertificate cert;
    cert.mode = CertMode::partition;
    auto adj = adjacency_lists(g);
    for (int v = 1; v <= g.n; ++v) {
        std::vector<int> fwd;
        for (int u : adj[v])
            if (u > v) fwd.push_back(u);
        std::sort(fwd.begin(), fwd.end());
        if (!fwd.empty()) cert.bicliques.push_back(Biclique::make({v}, std::move(fwd)));
    }
    return cert;
}

inline int tau_deficit(const Graph& complement_graph, const BicliqueCertificate& cover) {
    auto prof = locality(cover, complement_graph.n);
    int k = static_cast<int>(cover.bicliques.size());
    int worst = 0;
    for (int v = 1; v <= complement_graph.n; ++v) worst = std::max(worst, k - prof.counts[v]);
    return worst;
}

}  // namespace detail

// Certified lower bounds plus a constructive upper bound with witness.
//   rank: ceil(rank(A)/2), partitions only (n <= 128)
//   strongly-independent: pairwise strongly independent edges, covers/partitions
//   log-clique: ceil(log2 omega), valid for all four measures (n <= 64)
inline BoundReport lower_bounds(const Graph& g, Measure msr) {
    BoundReport rep;
    rep.measure = msr;
    bool edges = !g.edges.empty();
    std::vector<std::pair<LowerReason, int>> cands;  // priority order
    if (msr == Measure::bp && g.n <= 128) cands.emplace_back(LowerReason::rank, bp_rank_lower_bound(g));
    if ((msr == Measure::bc || msr == Measure::bp) && g.edges.size() <= 64)
        cands.emplace_back(LowerReason::strongly_independent,
                           static_cast<int>(max_strongly_independent_set(g).size()));
    if (msr != Measure::tau && g.n <= 64 && edges)
        cands.emplace_back(LowerReason::log_clique, ceil_log2(max_clique(g)));
    cands.emplace_back(LowerReason::trivial, msr == Measure::tau ? 0 : (edges ? 1 : 0));
    for (auto& [reason, value] : cands)
        if (value > rep.lower) {
            rep.lower = value;
            rep.reason = reason;
        }

    // upper bound + witness
    switch (msr) {
        case Measure::bc:
        case Measure::lbc: {
            BicliqueCertificate w =
                g.n <= 20 ? detail::greedy_cover(g) : [&] {
                    auto c = detail::generic_star_partition(g);
                    c.mode = CertMode::cover;
                    return c;
                }();
            rep.upper = msr == Measure::bc ? static_cast<int>(w.size()) : locality(w, g.n).max;
            rep.upper_witness = std::move(w);
            break;
        }
        case Measure::bp:
        case Measure::lbp: {
            auto w = detail::generic_star_partition(g);
            rep.upper = msr == Measure::bp ? static_cast<int>(w.size()) : locality(w, g.n).max;
            rep.upper_witness = std::move(w);
            break;
        }
        case Measure::tau: {
            Graph co = complement(g);
            if (co.n > 20) throw resource_error("lower_bounds: tau needs at most 20 vertices");
            auto w = detail::greedy_cover(co);
            rep.upper = detail::tau_deficit(co, w);
            rep.upper_witness = std::move(w);
            break;
        }
    }
    return rep;
}

// ---- solve ---------------------------------------------------------------------

struct SolveResult {
    Measure measure = Measure::bc;
    std::optional<int> value;  // set iff solved exactly
    int lower = 0, upper = 0;  // final bracket (value => both equal it)
    bool timed_out = false;
    std::optional<BicliqueCertificate> witness;  // for tau: a cover of the complement
    std::optional<SubcubeFamily> family;         // tau only: padded subcube witness
    BoundReport bounds;                          // the pre-search report
};

namespace detail {

inline FeasibleResult feasible_tau(const Graph& complement_graph, int r, const Deadline& dl,
                                   int workers) {
    SearchBudget budget;  // neither k nor r: the deficit cap drives the search
    auto ctx = build_ctx(complement_graph, CertMode::cover, budget, true, r, dl);
    return run_search(complement_graph, ctx, CertMode::cover, workers);
}

}  // namespace detail

// Exact value by iterating the budget upward from the certified lower bound
// until feasible; on timeout, the bracket of values still possible. Witnesses
// always verify.
inline SolveResult solve(const Graph& g, Measure msr, SolverOptions opts = {}) {
    SolveResult res;
    res.measure = msr;
    res.bounds = lower_bounds(g, msr);
    res.lower = res.bounds.lower;
    res.upper = res.bounds.upper;
    res.witness = res.bounds.upper_witness;
    auto dl = detail::Deadline::from_limit(opts.time_limit);

    if (msr == Measure::tau) {
        Graph co = complement(g);
        for (int r = res.lower; r < res.upper; ++r) {
            auto fr = detail::feasible_tau(co, r, dl, opts.workers);
            if (fr.status == Feasibility::yes) {
                res.upper = r;
                res.witness = std::move(fr.witness);
                break;
            }
            if (fr.status == Feasibility::timeout) {
                res.timed_out = true;
                res.lower = r;
                return res;
            }
            res.lower = r + 1;
        }
        res.value = res.upper;
        res.lower = res.upper;
        res.family = pad_to_uniform(cover_to_family(g, *res.witness));
        for (const auto& w : res.family->words)
            if (star_count(w) != *res.value)
                throw std::logic_error("solve: tau witness family has wrong dimension");
        return res;
    }

    CertMode mode = (msr == Measure::bp || msr == Measure::lbp) ? CertMode::partition : CertMode::cover;
    bool budget_is_k = msr == Measure::bc || msr == Measure::bp;
    for (int x = res.lower; x < res.upper; ++x) {
        SearchBudget budget;
        if (budget_is_k)
            budget.k = x;
        else
            budget.r = x;
        auto dlctx = detail::build_ctx(g, mode, budget, false, 0, dl);
        auto fr = detail::run_search(g, dlctx, mode, opts.workers);
        if (fr.status == Feasibility::yes) {
            res.upper = x;
            res.witness = std::move(fr.witness);
            break;
        }
        if (fr.status == Feasibility::timeout) {
            res.timed_out = true;
            res.lower = x;
            return res;
        }
        res.lower = x + 1;
    }
    res.value = res.upper;
    res.lower = res.upper;
    if (res.witness) {
        auto vr = verify(g, *res.witness);
        if (!vr.valid) throw std::logic_error("solve: witness failed verification: " + vr.reason);
    }
    return res;
}

// Smallest number of subcubes whose pairwise-intersection graph is g: the
// cover number of the complement, with the corresponding family.
inline std::pair<int, SubcubeFamily> rho_with_family(const Graph& g, SolverOptions opts = {}) {
    auto r = solve(complement(g), Measure::bc, opts);
    if (!r.value) throw resource_error("rho: timed out");
    return {*r.value, cover_to_family(g, *r.witness)};
}

inline int rho(const Graph& g, SolverOptions opts = {}) { return rho_with_family(g, opts).first; }

// Smallest uniform number of free coordinates in a subcube representation of
// g; the family realizes it.
inline std::pair<int, SubcubeFamily> tau_with_family(const Graph& g, SolverOptions opts = {}) {
    auto r = solve(g, Measure::tau, opts);
    if (!r.value) throw resource_error("tau: timed out");
    return {*r.value, *r.family};
}

inline int tau(const Graph& g, SolverOptions opts = {}) { return tau_with_family(g, opts).first; }

}  // namespace bcp
