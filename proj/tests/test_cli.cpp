// End-to-end checks of the bcp command-line tool.  Each case shells out to
// the built binary (path injected via BCP_CLI_PATH) and inspects exit codes,
// stdout, and the files it writes.

#include <catch2/catch_amalgamated.hpp>

#include <bcp/bcp.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("bcp_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path path_of(const std::string& name) { return scratch_dir() / name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

RunResult run_cli(const std::string& args) {
    const fs::path out = path_of("last_stdout.txt");
    const fs::path err = path_of("last_stderr.txt");
    const std::string cmd = std::string(BCP_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string graph_text(const bcp::Graph& g) {
    std::ostringstream ss;
    bcp::write_graph(ss, g);
    return ss.str();
}

}  // namespace

TEST_CASE("gen writes a graph with its certificate and verify accepts them") {
    const fs::path g = path_of("k5.graph");
    auto gen = run_cli("gen --family complete --param 5 --cert star_partition --out " + g.string());
    REQUIRE(gen.exit_code == 0);

    CHECK(slurp(g) == graph_text(bcp::complete_graph(5)));

    // default certificate path sits next to the graph
    const fs::path cert = path_of("k5.graph.cert");
    REQUIRE(fs::exists(cert));
    auto parsed = bcp::read_certificate_file(cert.string());
    CHECK(parsed.mode == bcp::CertMode::partition);
    CHECK(parsed.bicliques.size() == 4);

    auto ver = run_cli("verify --graph " + g.string() + " --cert " + cert.string());
    CHECK(ver.exit_code == 0);
    CHECK(ver.out == "valid\n");
}

TEST_CASE("gen emits byte-identical files to the library writers") {
    struct Row {
        std::string family;
        int param;
        std::string cert;
    };
    const Row rows[] = {
        {"crown", 3, "log_partition"},
        {"hypercube", 4, "c4_partition"},
        {"ternary", 2, "recursive_partition"},
        {"codim2", 3, "covering_bicliques"},
        {"counterexample", 4, "two_local_partition"},
    };
    for (const auto& row : rows) {
        CAPTURE(row.family, row.cert);
        const fs::path g = path_of(row.family + ".graph");
        const fs::path c = path_of(row.family + ".cert");
        auto gen = run_cli("gen --family " + row.family + " --param " +
                           std::to_string(row.param) + " --cert " + row.cert +
                           " --out " + g.string() + " --cert-out " + c.string());
        REQUIRE(gen.exit_code == 0);

        // round-trip: parse what gen wrote, re-serialize, compare bytes
        auto parsed_g = bcp::read_graph_file(g.string());
        CHECK(slurp(g) == graph_text(parsed_g));
        auto parsed_c = bcp::read_certificate_file(c.string());
        std::ostringstream ss;
        bcp::write_certificate(ss, parsed_c);
        CHECK(slurp(c) == ss.str());

        CHECK(bcp::verify(parsed_g, parsed_c).valid);
    }
}

TEST_CASE("gen rejects a certificate name the family does not have") {
    auto r = run_cli("gen --family crown --param 4 --cert star_partition --out " +
                     path_of("nope.graph").string());
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("no certificate named") != std::string::npos);
}

TEST_CASE("verify enforces --max-local") {
    const fs::path g = path_of("k4.graph");
    auto gen = run_cli("gen --family complete --param 4 --cert binary_cover --out " + g.string());
    REQUIRE(gen.exit_code == 0);
    const std::string cert = path_of("k4.graph.cert").string();

    auto ok = run_cli("verify --graph " + g.string() + " --cert " + cert + " --max-local 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "valid\n");

    auto bad = run_cli("verify --graph " + g.string() + " --cert " + cert + " --max-local 1");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "invalid: locality 2 exceeds 1\n");
}

TEST_CASE("verify reports a broken certificate as invalid") {
    const fs::path g = path_of("tri.graph");
    const fs::path c = path_of("tri.cert");
    spit(g, "p graph 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    spit(c, "c partition 1\nB 1 : 2,3\n");
    auto r = run_cli("verify --graph " + g.string() + " --cert " + c.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("invalid: edge (2,3) is uncovered") == 0);
}

TEST_CASE("malformed input exits 2 and names the offending line") {
    const fs::path g = path_of("bad.graph");
    spit(g, "p graph 3 1\ne 3 1\n");
    auto r = run_cli("solve --graph " + g.string() + " --measure bc");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    auto missing = run_cli("solve --graph " + path_of("does_not_exist.graph").string() +
                           " --measure bc");
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("solve --graph x --measure bogus").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("gen --family complete --param 5 --no-such-flag").exit_code == 2);
}

TEST_CASE("solve prints the measure and honors --witness") {
    const fs::path g = path_of("c5.graph");
    spit(g, "p graph 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");

    const fs::path w = path_of("c5.wit");
    auto r = run_cli("solve --graph " + g.string() + " --measure bp --witness " + w.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "bp = 3\n");

    // the witness file must itself verify
    auto ver = run_cli("verify --graph " + g.string() + " --cert " + w.string());
    CHECK(ver.exit_code == 0);
    auto cert = bcp::read_certificate_file(w.string());
    CHECK(cert.mode == bcp::CertMode::partition);
    CHECK(cert.bicliques.size() == 3);
}

TEST_CASE("solve rho and tau emit subcube witnesses") {
    const fs::path g = path_of("empty4.graph");
    spit(g, "p graph 4 0\n");

    const fs::path w = path_of("empty4.fam");
    auto r = run_cli("solve --graph " + g.string() + " --measure rho --witness " + w.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "rho = 2\n");
    auto fam = bcp::read_family_file(w.string());
    REQUIRE(fam.words.size() == 4);
    CHECK(fam.d == 2);
    // pairwise intersection graph of the witness must be the input graph
    auto parsed = bcp::read_graph_file(g.string());
    CHECK(bcp::intersection_graph(fam) == parsed);

    const fs::path p3 = path_of("p3.graph");
    spit(p3, "p graph 3 2\ne 1 2\ne 2 3\n");
    const fs::path wt = path_of("p3.fam");
    auto t = run_cli("solve --graph " + p3.string() + " --measure tau --witness " + wt.string());
    REQUIRE(t.exit_code == 0);
    CHECK(t.out == "tau = 1\n");
    auto tfam = bcp::read_family_file(wt.string());
    CHECK(bcp::intersection_graph(tfam) == bcp::read_graph_file(p3.string()));
    for (const auto& wword : tfam.words)
        CHECK(bcp::star_count(wword) == 1);
}

TEST_CASE("solve with --time-limit 0 reports a bracket and exits 4") {
    const fs::path g = path_of("k7.graph");
    auto gen = run_cli("gen --family complete --param 7 --out " + g.string());
    REQUIRE(gen.exit_code == 0);
    auto r = run_cli("solve --graph " + g.string() + " --measure bp --time-limit 0");
    CHECK(r.exit_code == 4);
    CHECK(r.out.find("bracket [") == 0);
}

TEST_CASE("solve gives the same value regardless of worker count") {
    const fs::path g = path_of("ce3.graph");
    {
        auto ce = bcp::counterexample_graph(3);
        std::ostringstream ss;
        bcp::write_graph(ss, ce);
        spit(g, ss.str());
    }
    auto one = run_cli("solve --graph " + g.string() + " --measure bc --workers 1");
    auto two = run_cli("solve --graph " + g.string() + " --measure bc --workers 2");
    REQUIRE(one.exit_code == 0);
    REQUIRE(two.exit_code == 0);
    CHECK(one.out == two.out);
    CHECK(one.out == "bc = 3\n");
}

TEST_CASE("bound prints the lower-bound reason and an upper bound") {
    const fs::path g = path_of("k4b.graph");
    auto gen = run_cli("gen --family complete --param 4 --out " + g.string());
    REQUIRE(gen.exit_code == 0);
    auto r = run_cli("bound --graph " + g.string() + " --measure bp");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "measure = bp\nlower = 2 (rank)\nupper = 3\n");
}

TEST_CASE("rank prints the adjacency rank and its half") {
    const fs::path g = path_of("k4r.graph");
    auto gen = run_cli("gen --family complete --param 4 --out " + g.string());
    REQUIRE(gen.exit_code == 0);
    auto r = run_cli("rank --graph " + g.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "rank = 4\nceil(rank/2) = 2\n");
}

TEST_CASE("convert maps subcube families to graphs and covers back to families") {
    const fs::path fam = path_of("fam.sub");
    spit(fam, "s 3 3\n01*\n0**\n11*\n");
    const fs::path g = path_of("fam.graph");
    const fs::path c = path_of("fam.cover");
    auto r = run_cli("convert --subcubes-to-graph " + fam.string() + " --out " + g.string() +
                     " --cover-out " + c.string());
    REQUIRE(r.exit_code == 0);
    CHECK(slurp(g) == "p graph 3 1\ne 1 2\n");
    // the cover covers the complement of the intersection graph
    CHECK(slurp(c) == "c cover 1\nB 1,2 : 3\n");
    CHECK(r.err == "dropped = 2\n");

    // inverse direction: cover of the complement -> family realizing the graph
    const fs::path back = path_of("fam_back.sub");
    auto cg = run_cli("convert --cover-to-subcubes " + g.string() + " " + c.string() +
                      " --out " + back.string());
    REQUIRE(cg.exit_code == 0);
    auto fam2 = bcp::read_family_file(back.string());
    CHECK(bcp::intersection_graph(fam2) == bcp::read_graph_file(g.string()));
}

TEST_CASE("convert rejects a cover that does not match the graph") {
    const fs::path g = path_of("cc.graph");
    spit(g, "p graph 3 1\ne 1 2\n");
    const fs::path c = path_of("cc.cover");
    spit(c, "c cover 1\nB 1 : 2\n");  // covers an edge of g, not of its complement
    auto r = run_cli("convert --cover-to-subcubes " + g.string() + " " + c.string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("transform --pad and --restrict-dominating print families") {
    const fs::path fam = path_of("pad.sub");
    spit(fam, "s 2 2\n0*\n01\n");
    auto r = run_cli("transform --pad " + fam.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "s 2 3\n0*0\n01*\n");

    const fs::path uni = path_of("uni.sub");
    spit(uni, "s 3 3\n*00\n00*\n10*\n");
    auto d = run_cli("transform --restrict-dominating " + uni.string() + " 1");
    REQUIRE(d.exit_code == 0);
    CHECK(d.out == "s 2 1\n0\n1\n");

    // index 2's word does not intersect word 3, so it cannot dominate
    auto bad = run_cli("transform --restrict-dominating " + uni.string() + " 2");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("transform localization pipeline runs end to end") {
    const fs::path g = path_of("cd4.graph");
    auto gen = run_cli("gen --family codim2 --param 4 --cert covering_bicliques --out " + g.string());
    REQUIRE(gen.exit_code == 0);
    const std::string cert = path_of("cd4.graph.cert").string();

    const fs::path local = path_of("cd4.local");
    auto th = run_cli("transform --thm5 " + g.string() + " " + cert + " --out " + local.string());
    REQUIRE(th.exit_code == 0);
    auto ver = run_cli("verify --graph " + g.string() + " --cert " + local.string() +
                       " --max-local 6");  // 2*ceil(log2(3)) + 2
    CHECK(ver.exit_code == 0);

    const fs::path crown = path_of("cd4.crown");
    auto ex = run_cli("transform --extract-crown 4 " + local.string() + " --out " + crown.string());
    REQUIRE(ex.exit_code == 0);
    REQUIRE(ex.out.rfind("t = ", 0) == 0);
    int t = std::stoi(ex.out.substr(4));
    CHECK(t >= 1);
    auto crown_cert = bcp::read_certificate_file(crown.string());
    CHECK(bcp::verify(bcp::crown_graph(t), crown_cert).valid);
}

TEST_CASE("transform --fold-crown turns crown partitions into clique covers") {
    const fs::path g = path_of("h4.graph");
    auto gen = run_cli("gen --family crown --param 4 --cert log_partition --out " + g.string());
    REQUIRE(gen.exit_code == 0);
    const std::string cert = path_of("h4.graph.cert").string();

    const fs::path folded = path_of("h4.folded");
    auto f = run_cli("transform --fold-crown 4 " + cert + " --out " + folded.string());
    REQUIRE(f.exit_code == 0);

    const fs::path k4 = path_of("k4f.graph");
    auto gk = run_cli("gen --family complete --param 4 --out " + k4.string());
    REQUIRE(gk.exit_code == 0);
    auto ver = run_cli("verify --graph " + k4.string() + " --cert " + folded.string() +
                       " --max-local 4");  // 2*ceil(log2(4))
    CHECK(ver.exit_code == 0);
    CHECK(ver.out == "valid\n");
}

TEST_CASE("transform wants exactly one operation") {
    const fs::path fam = path_of("two.sub");
    spit(fam, "s 2 2\n0*\n01\n");
    auto r = run_cli("transform --pad " + fam.string() + " --restrict-dominating " +
                     fam.string() + " 1");
    CHECK(r.exit_code == 2);
    CHECK(run_cli("transform").exit_code == 2);
}

TEST_CASE("solve refuses graphs beyond the search size limit") {
    const fs::path g = path_of("big.graph");
    auto gen = run_cli("gen --family codim2 --param 4 --out " + g.string());  // 24 vertices
    REQUIRE(gen.exit_code == 0);
    auto r = run_cli("solve --graph " + g.string() + " --measure bc");
    CHECK(r.exit_code == 3);
}
