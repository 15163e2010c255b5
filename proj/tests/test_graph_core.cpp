#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "imsep/generators.hpp"
#include "imsep/graph.hpp"
#include "imsep/json_io.hpp"

using namespace imsep;

TEST_SUITE("graph_core") {

TEST_CASE("add_edge validates and deduplicates") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(-1, 1), std::invalid_argument);
}

TEST_CASE("neighbors are sorted and edges are lexicographic") {
    Graph g = Graph::from_edges(5, {{3, 1}, {0, 3}, {3, 2}, {4, 0}});
    CHECK(g.neighbors(3) == std::vector<int>{0, 1, 2});
    std::vector<std::pair<int, int>> want{{0, 3}, {0, 4}, {1, 3}, {2, 3}};
    CHECK(g.edges() == want);
    CHECK(g.degree(3) == 3);
    CHECK(g.max_degree() == 3);
}

TEST_CASE("components are sorted and keyed by smallest vertex") {
    Graph g = Graph::from_edges(6, {{4, 2}, {0, 1}});
    auto comps = g.components();
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 4});
    CHECK(comps[2] == std::vector<int>{3});
    CHECK(comps[3] == std::vector<int>{5});
    CHECK_FALSE(g.is_connected());
    CHECK(gen_path(4).is_connected());
    CHECK(Graph(0).is_connected());
    CHECK(Graph(1).is_connected());
}

TEST_CASE("induced subgraph reindexes in ascending order") {
    Graph g = gen_cycle(5);
    // Vertices 1,2,4 of C5: edge {1,2} survives, {4,0} and {3,4} do not.
    Graph h = g.induced({4, 2, 1});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(0, 1));  // locals 0,1 are originals 1,2
    CHECK_FALSE(h.has_edge(0, 2));
    CHECK(g.induced({}).vertex_count() == 0);
    CHECK_THROWS_AS(g.induced({5}), std::invalid_argument);
}

TEST_CASE("bfs distances and deterministic paths") {
    Graph g = gen_grid(3, 3);
    auto d = bfs_distances(g, 0);
    CHECK(d[0] == 0);
    CHECK(d[4] == 2);
    CHECK(d[8] == 4);
    // Two shortest 0->4 routes exist; parent scan is ascending, so 0,1,4 wins.
    CHECK(bfs_path(g, 0, 4) == std::vector<int>{0, 1, 4});
    CHECK(bfs_path(g, 0, 0) == std::vector<int>{0});

    Graph two = Graph(2);
    CHECK(bfs_path(two, 0, 1).empty());
    CHECK(bfs_distances(two, 0)[1] == -1);
}

TEST_CASE("generator shapes") {
    Graph grid = gen_grid(3, 4);
    CHECK(grid.vertex_count() == 12);
    CHECK(grid.edge_count() == 17);  // 3*3 horizontal + 2*4 vertical
    CHECK(grid.has_edge(0, 1));
    CHECK(grid.has_edge(0, 4));
    CHECK_FALSE(grid.has_edge(3, 4));  // row boundary

    CHECK(gen_path(1).edge_count() == 0);
    CHECK(gen_path(6).edge_count() == 5);
    CHECK(gen_cycle(3).edge_count() == 3);
    CHECK(gen_complete(5).edge_count() == 10);
    CHECK(gen_complete(1).edge_count() == 0);

    Graph star = gen_star(9);
    CHECK(star.degree(0) == 8);
    CHECK(star.max_degree() == 8);
    CHECK(star.edge_count() == 8);

    Graph t = gen_complete_binary_tree(3);
    CHECK(t.vertex_count() == 7);
    CHECK(t.edge_count() == 6);
    CHECK(t.neighbors(0) == std::vector<int>{1, 2});
    CHECK(t.neighbors(1) == std::vector<int>{0, 3, 4});

    CHECK_THROWS_AS(gen_grid(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(gen_gnp(4, 1.5, 0), std::invalid_argument);
}

TEST_CASE("gnp is a pure function of n, p, seed") {
    Graph a = gen_gnp(30, 0.3, 7);
    Graph b = gen_gnp(30, 0.3, 7);
    CHECK(a == b);
    Graph c = gen_gnp(30, 0.3, 8);
    CHECK_FALSE(a == c);
    CHECK(gen_gnp(20, 0.0, 1).edge_count() == 0);
    CHECK(gen_gnp(20, 1.0, 1).edge_count() == 190);
}

TEST_CASE("graph json round trip") {
    Graph g = gen_gnp(12, 0.4, 3);
    auto j = graph_to_json(g);
    CHECK(j["version"] == 1);
    CHECK(j["n"] == 12);
    Graph back = graph_from_json(j);
    CHECK(back == g);
    // Serialization is canonical: same graph, same bytes.
    CHECK(graph_to_json(back).dump() == j.dump());

    nlohmann::json bad = {{"version", 2}, {"n", 1}, {"edges", nlohmann::json::array()}};
    CHECK_THROWS_AS(graph_from_json(bad), std::invalid_argument);
    nlohmann::json loop = {{"version", 1}, {"n", 2}, {"edges", {{1, 1}}}};
    CHECK_THROWS_AS(graph_from_json(loop), std::invalid_argument);
}

TEST_CASE("dot rendering lists isolated vertices and edges") {
    Graph g = Graph::from_edges(3, {{0, 1}});
    std::string dot = graph_to_dot(g, "t");
    CHECK(dot.find("graph t {") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("  2;") != std::string::npos);
}

}  // TEST_SUITE
