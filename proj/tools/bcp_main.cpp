// bcp — generate, verify, solve, bound, and transform biclique cover and
// partition instances, plus the subcube representations they correspond to.
//
// Exit codes: 0 success/valid, 1 invalid certificate, 2 malformed input or
// usage, 3 precondition violation, 4 timeout.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <bcp/bcp.hpp>

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTimeout = 4;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw bcp::parse_error(0, "cannot open file: " + path);
    out << text;
}

std::string graph_text(const bcp::Graph& g) {
    std::ostringstream s;
    bcp::write_graph(s, g);
    return s.str();
}

std::string cert_text(const bcp::BicliqueCertificate& c) {
    std::ostringstream s;
    bcp::write_certificate(s, c);
    return s.str();
}

std::string family_text(const bcp::SubcubeFamily& f) {
    std::ostringstream s;
    bcp::write_family(s, f);
    return s.str();
}

struct GenArgs {
    std::string family;
    int param = 0;
    std::string cert;
    std::string out;
    std::string cert_out;
};

int run_gen(const GenArgs& a) {
    bcp::Graph g(0, {});
    std::optional<bcp::BicliqueCertificate> cert;
    auto want = [&](std::initializer_list<const char*> names,
                    auto&&... makers) -> std::optional<bcp::BicliqueCertificate> {
        if (a.cert.empty()) return std::nullopt;
        std::optional<bcp::BicliqueCertificate> out2;
        const char* const* it = names.begin();
        (
            [&] {
                if (a.cert == *it++) out2 = makers();
            }(),
            ...);
        if (!out2)
            throw bcp::precondition_error("gen: family " + a.family + " has no certificate named " +
                                          a.cert);
        return out2;
    };
    if (a.family == "complete") {
        g = bcp::complete_graph(a.param);
        cert = want({"star_partition", "binary_cover", "prefix_partition"},
                    [&] { return bcp::star_partition(a.param); },
                    [&] { return bcp::binary_cover(a.param); },
                    [&] { return bcp::prefix_partition(a.param); });
    } else if (a.family == "crown") {
        g = bcp::crown_graph(a.param);
        cert = want({"log_partition"}, [&] { return bcp::crown_log_partition(a.param); });
    } else if (a.family == "hypercube") {
        g = bcp::hypercube(a.param);
        cert = want({"star_partition", "c4_partition"},
                    [&] { return bcp::cube_star_partition(a.param); },
                    [&] { return bcp::cube_c4_partition(a.param); });
    } else if (a.family == "ternary") {
        g = bcp::ternary_graph(a.param);
        cert = want({"recursive_partition"}, [&] { return bcp::recursive_partition(a.param); });
    } else if (a.family == "codim2") {
        g = bcp::codim2_graph(a.param);
        cert = want({"covering_bicliques"}, [&] { return bcp::covering_bicliques(a.param); });
    } else {  // counterexample (membership enforced by the flag check)
        g = bcp::counterexample_graph(a.param);
        cert = want({"two_local_partition", "star_cover"},
                    [&] { return bcp::two_local_partition(a.param); },
                    [&] { return bcp::star_cover(a.param); });
    }
    write_text(a.out, graph_text(g));
    if (cert) {
        std::string path = a.cert_out.empty() ? a.out + ".cert" : a.cert_out;
        write_text(path, cert_text(*cert));
    }
    return kExitValid;
}

int run_verify(const std::string& graph_path, const std::string& cert_path,
               std::optional<int> max_local) {
    bcp::Graph g = bcp::read_graph_file(graph_path);
    bcp::BicliqueCertificate cert = bcp::read_certificate_file(cert_path);
    auto vr = bcp::verify(g, cert);
    if (!vr.valid) {
        std::cout << "invalid: " << vr.reason << "\n";
        return kExitInvalid;
    }
    if (max_local) {
        int got = bcp::locality(cert, g.n).max;
        if (got > *max_local) {
            std::cout << "invalid: locality " << got << " exceeds " << *max_local << "\n";
            return kExitInvalid;
        }
    }
    std::cout << "valid\n";
    return kExitValid;
}

int run_solve(const std::string& graph_path, const std::string& measure, double time_limit,
              bool has_limit, int workers, const std::string& witness_path) {
    bcp::Graph g = bcp::read_graph_file(graph_path);
    bcp::SolverOptions opts;
    if (has_limit) opts.time_limit = time_limit;
    opts.workers = workers;

    if (measure == "rho") {
        auto res = bcp::solve(bcp::complement(g), bcp::Measure::bc, opts);
        if (!res.value) {
            std::cout << "bracket [" << res.lower << ", " << res.upper << "]\n";
            return kExitTimeout;
        }
        std::cout << "rho = " << *res.value << "\n";
        if (!witness_path.empty())
            write_text(witness_path, family_text(bcp::cover_to_family(g, *res.witness)));
        return kExitValid;
    }

    bcp::Measure msr = measure == "bc"    ? bcp::Measure::bc
                       : measure == "bp"  ? bcp::Measure::bp
                       : measure == "lbc" ? bcp::Measure::lbc
                       : measure == "lbp" ? bcp::Measure::lbp
                                          : bcp::Measure::tau;
    auto res = bcp::solve(g, msr, opts);
    if (!res.value) {
        std::cout << "bracket [" << res.lower << ", " << res.upper << "]\n";
        return kExitTimeout;
    }
    std::cout << measure << " = " << *res.value << "\n";
    if (!witness_path.empty()) {
        if (msr == bcp::Measure::tau)
            write_text(witness_path, family_text(*res.family));
        else
            write_text(witness_path, cert_text(*res.witness));
    }
    return kExitValid;
}

int run_bound(const std::string& graph_path, const std::string& measure) {
    bcp::Graph g = bcp::read_graph_file(graph_path);
    bcp::Measure msr = measure == "bc"    ? bcp::Measure::bc
                       : measure == "bp"  ? bcp::Measure::bp
                       : measure == "lbc" ? bcp::Measure::lbc
                       : measure == "lbp" ? bcp::Measure::lbp
                                          : bcp::Measure::tau;
    auto rep = bcp::lower_bounds(g, msr);
    std::cout << "measure = " << bcp::to_string(rep.measure) << "\n"
              << "lower = " << rep.lower << " (" << bcp::to_string(rep.reason) << ")\n"
              << "upper = " << rep.upper << "\n";
    return kExitValid;
}

int run_rank(const std::string& graph_path) {
    bcp::Graph g = bcp::read_graph_file(graph_path);
    int r = bcp::rank_adjacency(g);
    std::cout << "rank = " << r << "\n"
              << "ceil(rank/2) = " << (r + 1) / 2 << "\n";
    return kExitValid;
}

int run_convert(const std::vector<std::string>& to_graph, const std::vector<std::string>& to_subcubes,
                const std::string& out, const std::string& cover_out) {
    if (to_graph.empty() == to_subcubes.empty())
        throw CLI::ValidationError("convert", "give exactly one of --subcubes-to-graph and --cover-to-subcubes");
    if (!to_graph.empty()) {
        bcp::SubcubeFamily f = bcp::read_family_file(to_graph[0]);
        auto res = bcp::family_to_cover(f);
        write_text(out, graph_text(res.graph));
        if (!cover_out.empty()) write_text(cover_out, cert_text(res.cover));
        std::cerr << "dropped = " << res.dropped << "\n";
        return kExitValid;
    }
    bcp::Graph g = bcp::read_graph_file(to_subcubes[0]);
    bcp::BicliqueCertificate cert = bcp::read_certificate_file(to_subcubes[1]);
    write_text(out, family_text(bcp::cover_to_family(g, cert)));
    return kExitValid;
}

struct TransformArgs {
    std::vector<std::string> thm5;           // graph cert
    std::vector<std::string> extract;        // m partition
    std::vector<std::string> fold;           // t cert
    std::string pad;                         // family
    std::vector<std::string> restrict_args;  // family idx
    std::string out;
};

int parse_int_arg(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("transform", what + " must be an integer, got '" + s + "'");
    }
}

int run_transform(const TransformArgs& a) {
    int given = static_cast<int>(!a.thm5.empty()) + static_cast<int>(!a.extract.empty()) +
                static_cast<int>(!a.fold.empty()) + static_cast<int>(!a.pad.empty()) +
                static_cast<int>(!a.restrict_args.empty());
    if (given != 1) throw CLI::ValidationError("transform", "give exactly one transform");
    if (!a.thm5.empty()) {
        bcp::Graph g = bcp::read_graph_file(a.thm5[0]);
        auto cover = bcp::read_certificate_file(a.thm5[1]);
        write_text(a.out, cert_text(bcp::thm5_localize(g, cover)));
        return kExitValid;
    }
    if (!a.extract.empty()) {
        int m = parse_int_arg(a.extract[0], "m");
        auto pi = bcp::read_certificate_file(a.extract[1]);
        auto ex = bcp::extract_crown_partition(m, pi);
        std::cout << "t = " << ex.t << "\n";
        write_text(a.out, cert_text(ex.partition));
        return kExitValid;
    }
    if (!a.fold.empty()) {
        int t = parse_int_arg(a.fold[0], "t");
        auto cert = bcp::read_certificate_file(a.fold[1]);
        write_text(a.out, cert_text(bcp::fold_crown_cover(t, cert)));
        return kExitValid;
    }
    if (!a.pad.empty()) {
        write_text(a.out, family_text(bcp::pad_to_uniform(bcp::read_family_file(a.pad))));
        return kExitValid;
    }
    auto f = bcp::read_family_file(a.restrict_args[0]);
    int idx = parse_int_arg(a.restrict_args[1], "idx");
    write_text(a.out, family_text(bcp::restrict_dominating(f, idx)));
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biclique cover/partition measures and subcube representations"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "write a named graph family and optional certificate");
    gen->add_option("--family", gen_args.family, "graph family")
        ->required()
        ->check(CLI::IsMember(
            {"complete", "crown", "hypercube", "ternary", "codim2", "counterexample"}));
    gen->add_option("--param", gen_args.param, "size parameter (n, t, d, or m)")->required();
    gen->add_option("--cert", gen_args.cert, "certificate construction to emit alongside");
    gen->add_option("--out", gen_args.out, "output graph file")->required();
    gen->add_option("--cert-out", gen_args.cert_out, "certificate file (default: <out>.cert)");

    std::string v_graph, v_cert;
    std::optional<int> v_max_local;
    auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
    ver->add_option("--graph", v_graph)->required();
    ver->add_option("--cert", v_cert)->required();
    ver->add_option("--max-local", v_max_local, "also require locality at most this");

    std::string s_graph, s_measure, s_witness;
    double s_limit = 0;
    int s_workers = 1;
    auto* sol = app.add_subcommand("solve", "compute a measure exactly");
    sol->add_option("--graph", s_graph)->required();
    sol->add_option("--measure", s_measure)
        ->required()
        ->check(CLI::IsMember({"bc", "bp", "lbc", "lbp", "tau", "rho"}));
    auto* limit_opt = sol->add_option("--time-limit", s_limit, "seconds before giving up");
    sol->add_option("--workers", s_workers, "parallel workers (value-deterministic)")
        ->check(CLI::PositiveNumber);
    sol->add_option("--witness", s_witness, "write the witness certificate or family here");

    std::string b_graph, b_measure;
    auto* bnd = app.add_subcommand("bound", "print certified bounds without solving");
    bnd->add_option("--graph", b_graph)->required();
    bnd->add_option("--measure", b_measure)
        ->required()
        ->check(CLI::IsMember({"bc", "bp", "lbc", "lbp", "tau"}));

    std::string r_graph;
    auto* rnk = app.add_subcommand("rank", "adjacency rank and the partition bound");
    rnk->add_option("--graph", r_graph)->required();

    std::vector<std::string> c_to_graph, c_to_subcubes;
    std::string c_out, c_cover_out;
    auto* cnv = app.add_subcommand("convert", "translate between subcube and cover formats");
    cnv->add_option("--subcubes-to-graph", c_to_graph, "family file")->expected(1);
    cnv->add_option("--cover-to-subcubes", c_to_subcubes,
                    "graph file and a cover of its complement")
        ->expected(2);
    cnv->add_option("--out", c_out, "output file (default stdout)");
    cnv->add_option("--cover-out", c_cover_out, "also write the coordinate cover here");

    TransformArgs t_args;
    auto* tra = app.add_subcommand("transform", "apply a certificate or family transformation");
    tra->add_option("--thm5", t_args.thm5, "graph file and 2-local cover: localize to a partition")
        ->expected(2);
    tra->add_option("--extract-crown", t_args.extract, "m and a partition of the codim2 graph")
        ->expected(2);
    tra->add_option("--fold-crown", t_args.fold, "t and a crown certificate")->expected(2);
    tra->add_option("--pad", t_args.pad, "family file: equalize star counts");
    tra->add_option("--restrict-dominating", t_args.restrict_args, "family file and index")
        ->expected(2);
    tra->add_option("--out", t_args.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return run_gen(gen_args);
        if (ver->parsed()) return run_verify(v_graph, v_cert, v_max_local);
        if (sol->parsed())
            return run_solve(s_graph, s_measure, s_limit, limit_opt->count() > 0, s_workers,
                             s_witness);
        if (bnd->parsed()) return run_bound(b_graph, b_measure);
        if (rnk->parsed()) return run_rank(r_graph);
        if (cnv->parsed()) return run_convert(c_to_graph, c_to_subcubes, c_out, c_cover_out);
        if (tra->parsed()) return run_transform(t_args);
        return kExitMalformed;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const bcp::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const bcp::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const bcp::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}
