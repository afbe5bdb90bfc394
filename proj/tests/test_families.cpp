#include <catch2/catch_amalgamated.hpp>

#include <bcp/families.hpp>
#include <bcp/graph.hpp>
#include <bcp/subcube.hpp>

using namespace bcp;

TEST_CASE("ternary word order and indexing") {
    CHECK(ternary_words(1) == std::vector<std::string>{"0", "1", "*"});
    CHECK(ternary_words(2) ==
          std::vector<std::string>{"00", "01", "0*", "10", "11", "1*", "*0", "*1", "**"});
    CHECK(ternary_less("01", "0*"));
    CHECK(ternary_less("0*", "10"));
    CHECK_FALSE(ternary_less("10", "0*"));
    auto words = ternary_words(3);
    for (std::size_t i = 0; i < words.size(); ++i)
        CHECK(ternary_index(words[i]) == static_cast<int>(i) + 1);
    CHECK_THROWS_AS(ternary_words(11), precondition_error);
}

TEST_CASE("complete graphs") {
    CHECK(complete_graph(1).edges.empty());
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(4).has_edge(2, 4));
}

TEST_CASE("star partition of the complete graph") {
    auto cert = star_partition(4);
    REQUIRE(cert.size() == 3);
    CHECK(cert.mode == CertMode::partition);
    CHECK(verify(complete_graph(4), cert).valid);
    auto prof = locality(cert, 4);
    CHECK(prof.count(4) == 3);  // the last vertex is a leaf of every star
    CHECK(prof.max == 3);
    CHECK(star_partition(1).size() == 0);
}

TEST_CASE("binary splitting covers the complete graph in log size") {
    for (int n : {2, 3, 4, 5, 8, 9, 16}) {
        auto cert = binary_cover(n);
        CHECK(cert.mode == CertMode::cover);
        CHECK(static_cast<int>(cert.size()) == ceil_log2(n));
        CHECK(verify(complete_graph(n), cert).valid);
        CHECK(locality(cert, n).max <= ceil_log2(n));
    }
    CHECK(binary_cover(1).size() == 0);
    auto c4 = binary_cover(4);
    CHECK(c4.bicliques[0].class0 == std::vector<int>{1, 2});
    CHECK(c4.bicliques[0].class1 == std::vector<int>{3, 4});
    CHECK(c4.bicliques[1].class0 == std::vector<int>{1, 3});
    CHECK(c4.bicliques[1].class1 == std::vector<int>{2, 4});
}

TEST_CASE("prefix partition of the complete graph is optimal") {
    auto cert = prefix_partition(4);
    REQUIRE(cert.size() == 3);
    CHECK(cert.bicliques[0].class0 == std::vector<int>{1, 2});
    CHECK(cert.bicliques[0].class1 == std::vector<int>{3, 4});
    CHECK(cert.bicliques[1].class0 == std::vector<int>{1});
    CHECK(cert.bicliques[1].class1 == std::vector<int>{2});
    CHECK(cert.bicliques[2].class0 == std::vector<int>{3});
    CHECK(cert.bicliques[2].class1 == std::vector<int>{4});
    for (int n = 2; n <= 9; ++n) {
        auto c = prefix_partition(n);
        CHECK(static_cast<int>(c.size()) == n - 1);
        CHECK(verify(complete_graph(n), c).valid);
    }
    CHECK(prefix_partition(1).size() == 0);
}

TEST_CASE("crown graphs") {
    Graph h3 = crown_graph(3);
    CHECK(h3.n == 6);
    CHECK(h3.edges == std::vector<Edge>{{1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 4}, {3, 5}});
    CHECK(crown_graph(1) == Graph::make(2, {}));
    CHECK(crown_graph(2) == Graph::make(4, {{1, 4}, {2, 3}}));
}

TEST_CASE("crown partition has logarithmic locality") {
    auto c2 = crown_log_partition(2);
    REQUIRE(c2.size() == 2);
    CHECK(c2.bicliques[0].class0 == std::vector<int>{1});
    CHECK(c2.bicliques[0].class1 == std::vector<int>{4});
    CHECK(c2.bicliques[1].class0 == std::vector<int>{2});
    CHECK(c2.bicliques[1].class1 == std::vector<int>{3});
    CHECK(crown_log_partition(4).size() == 6);
    CHECK(crown_log_partition(1).size() == 0);
    for (int t = 1; t <= 33; ++t) {
        auto cert = crown_log_partition(t);
        CHECK(cert.mode == CertMode::partition);
        CHECK(verify(crown_graph(t), cert).valid);
        CHECK(locality(cert, 2 * t).max <= (t >= 2 ? ceil_log2(t) : 0));
    }
}

TEST_CASE("hypercubes") {
    CHECK(hypercube(0) == Graph::make(1, {}));
    CHECK(hypercube(1) == Graph::make(2, {{1, 2}}));
    CHECK(hypercube(2) == Graph::make(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    Graph q4 = hypercube(4);
    CHECK(q4.n == 16);
    CHECK(q4.edge_count() == 32);
    CHECK_THROWS_AS(hypercube(21), precondition_error);
}

TEST_CASE("hypercube star partition") {
    for (int d = 1; d <= 6; ++d) {
        auto cert = cube_star_partition(d);
        CHECK(static_cast<int>(cert.size()) == (1 << (d - 1)));
        CHECK(verify(hypercube(d), cert).valid);
    }
    auto c2 = cube_star_partition(2);
    CHECK(c2.bicliques[0].class0 == std::vector<int>{1});
    CHECK(c2.bicliques[0].class1 == std::vector<int>{2, 3});
    CHECK(c2.bicliques[1].class0 == std::vector<int>{4});
    CHECK(c2.bicliques[1].class1 == std::vector<int>{2, 3});
}

TEST_CASE("hypercube square partition halves the locality") {
    auto c2 = cube_c4_partition(2);
    REQUIRE(c2.size() == 1);
    CHECK(c2.bicliques[0].class0 == std::vector<int>{1, 4});
    CHECK(c2.bicliques[0].class1 == std::vector<int>{2, 3});
    for (int d : {2, 4, 6}) {
        auto cert = cube_c4_partition(d);
        CHECK(static_cast<int>(cert.size()) == d / 2 << (d - 2));
        CHECK(verify(hypercube(d), cert).valid);
        CHECK(locality(cert, 1 << d).max == d / 2);
        for (const auto& b : cert.bicliques) {
            CHECK(b.class0.size() == 2);
            CHECK(b.class1.size() == 2);
        }
    }
    CHECK_THROWS_AS(cube_c4_partition(3), precondition_error);
}

TEST_CASE("ternary graph adjacency") {
    Graph g1 = ternary_graph(1);
    CHECK(g1.n == 3);
    CHECK(g1.edges == std::vector<Edge>{{1, 2}});  // only the two opposite points
    for (int m = 1; m <= 3; ++m) {
        SubcubeFamily all{m, ternary_words(m)};
        CHECK(ternary_graph(m) == complement(intersection_graph(all)));
    }
}

TEST_CASE("recursive partition of the ternary graph") {
    for (int m = 1; m <= 5; ++m) {
        auto cert = recursive_partition(m);
        int expect = 1;
        for (int i = 0; i < m; ++i) expect *= 3;
        expect = (expect - 1) / 2;
        CHECK(static_cast<int>(cert.size()) == expect);
        CHECK(cert.mode == CertMode::partition);
        CHECK(verify(ternary_graph(m), cert).valid);
    }
    CHECK(recursive_partition(6).size() == 364);
    CHECK(recursive_partition(1).bicliques[0].class0 == std::vector<int>{1});
    CHECK(recursive_partition(1).bicliques[0].class1 == std::vector<int>{2});
    CHECK_THROWS_AS(recursive_partition(8), precondition_error);
}

TEST_CASE("two-fixed-coordinate graph") {
    CHECK(codim2_graph(2) == complete_graph(4));
    auto w3 = codim2_words(3);
    CHECK(w3 == std::vector<std::string>{"00*", "01*", "0*0", "0*1", "10*", "11*", "1*0", "1*1",
                                         "*00", "*01", "*10", "*11"});
    CHECK(codim2_graph(3).n == 12);
    CHECK_THROWS_AS(codim2_words(1), precondition_error);
}

TEST_CASE("coordinate bicliques cover the two-fixed-coordinate graph") {
    for (int m = 2; m <= 10; ++m) {
        auto cert = covering_bicliques(m);
        CHECK(cert.mode == CertMode::cover);
        CHECK(static_cast<int>(cert.size()) == m);
        Graph g = codim2_graph(m);
        CHECK(verify(g, cert).valid);
        CHECK(locality(cert, g.n).max == 2);
    }
}

TEST_CASE("low-locality graph with expensive partitions") {
    Graph g = counterexample_graph(4);
    CHECK(g.n == 11);
    CHECK(g.edge_count() == 16);
    CHECK(g.has_edge(1, 5));   // x_1 meets the {1,2} pair vertex
    CHECK(g.has_edge(4, 10));  // x_4 meets the {3,4} pair vertex
    CHECK(g.has_edge(1, 11));  // every x meets the apex
    CHECK_FALSE(g.has_edge(1, 10));
    CHECK_FALSE(g.has_edge(5, 6));
    CHECK_THROWS_AS(counterexample_graph(1), precondition_error);
}

TEST_CASE("two-local partition of the counterexample graph") {
    for (int m : {2, 3, 4, 5, 7}) {
        Graph g = counterexample_graph(m);
        auto cert = two_local_partition(m);
        CHECK(static_cast<int>(cert.size()) == m + 1);
        CHECK(verify(g, cert).valid);
        CHECK(locality(cert, g.n).max == 2);
    }
    auto cert = two_local_partition(4);
    CHECK(cert.bicliques[4].class0 == std::vector<int>{1, 2, 3, 4});
    CHECK(cert.bicliques[4].class1 == std::vector<int>{11});
}

TEST_CASE("star partition of the counterexample graph") {
    for (int m : {2, 3, 4, 6}) {
        Graph g = counterexample_graph(m);
        auto cert = star_cover(m);
        CHECK(static_cast<int>(cert.size()) == m);
        CHECK(cert.mode == CertMode::partition);
        CHECK(verify(g, cert).valid);
    }
    auto cert = star_cover(4);
    CHECK(cert.bicliques[0].class0 == std::vector<int>{1});
    CHECK(cert.bicliques[0].class1 == std::vector<int>{5, 6, 7, 11});
}
