#include "doctest.h"

#include "imsep/generators.hpp"
#include "imsep/graph_ops.hpp"
#include "imsep/model.hpp"
#include "imsep/tree_decomposition.hpp"

using namespace imsep;

TEST_SUITE("model_td") {

TEST_CASE("model checker accepts a hand-built C4 in the 3x3 grid") {
    Graph grid = gen_grid(3, 3);
    Graph c4 = gen_cycle(4);
    InducedMinorModel m{{{0, 1}, {2, 5}, {7, 8}, {3, 6}}};
    CHECK(check_induced_minor_model(grid, c4, m) == std::nullopt);
    CHECK(is_valid_induced_minor_model(grid, c4, m));
}

TEST_CASE("model checker pinpoints each violation kind") {
    Graph grid = gen_grid(3, 3);
    Graph c4 = gen_cycle(4);

    auto msg = [&](InducedMinorModel m) {
        auto r = check_induced_minor_model(grid, c4, m);
        REQUIRE(r.has_value());
        return *r;
    };

    CHECK(msg({{{0, 1}, {2, 5}, {7, 8}}}).find("3 branch sets") != std::string::npos);
    CHECK(msg({{{0, 1}, {}, {7, 8}, {3, 6}}}).find("empty") != std::string::npos);
    CHECK(msg({{{0, 1}, {1, 2, 5}, {7, 8}, {3, 6}}}).find("lies in branch sets") !=
          std::string::npos);
    // 2 and 7 are far apart in the grid.
    CHECK(msg({{{0, 1}, {2, 7}, {5, 8}, {3, 6}}}).find("not connected") != std::string::npos);
    // Dropping 5 disconnects branch sets 1 and 2 (pattern edge 1-2 missing).
    CHECK(msg({{{0, 1}, {2}, {7, 8}, {3, 6}}}).find("do not touch") != std::string::npos);
    // Adding 4 makes branch set 1 touch branch set 3 (pattern non-edge 1-3).
    CHECK(msg({{{0, 1}, {2, 4, 5}, {7, 8}, {3, 6}}}).find("touch") != std::string::npos);
    CHECK(msg({{{0, 1}, {2, 5}, {7, 8}, {3, 9}}}).find("out-of-range") != std::string::npos);
}

TEST_CASE("models compose") {
    Graph grid = gen_grid(3, 3);
    Graph c4 = gen_cycle(4);
    Graph k2 = gen_complete(2);
    InducedMinorModel c4_in_grid{{{0, 1}, {2, 5}, {7, 8}, {3, 6}}};
    InducedMinorModel k2_in_c4{{{0, 1}, {2, 3}}};
    REQUIRE(is_valid_induced_minor_model(c4, k2, k2_in_c4));

    InducedMinorModel k2_in_grid = compose_models(k2_in_c4, c4_in_grid);
    CHECK(k2_in_grid.branch_sets[0] == std::vector<int>{0, 1, 2, 5});
    CHECK(k2_in_grid.branch_sets[1] == std::vector<int>{3, 6, 7, 8});
    CHECK(is_valid_induced_minor_model(grid, k2, k2_in_grid));
}

TEST_CASE("subdivision ids follow the edge order") {
    Graph tri = gen_cycle(3);
    Graph once = subdivide(tri, 1);
    CHECK(once.vertex_count() == 6);
    // edges() of the triangle: (0,1) (0,2) (1,2) -> internals 3, 4, 5.
    std::vector<std::pair<int, int>> want{{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}};
    CHECK(once.edges() == want);
    CHECK(subdivide(tri, 0) == tri);

    Graph twice = subdivide(tri, 2);
    CHECK(twice.vertex_count() == 9);
    CHECK(twice.edge_count() == 9);
    CHECK(twice.has_edge(0, 3));
    CHECK(twice.has_edge(3, 4));
    CHECK(twice.has_edge(4, 1));
    CHECK(twice.max_degree() == 2);  // a 9-cycle
}

TEST_CASE("contracting internals back recovers the original pattern") {
    for (int times : {0, 1, 2, 3}) {
        Graph h = gen_gnp(8, 0.4, 11);
        Graph host = subdivide(h, times);
        InducedMinorModel m = subdivision_contraction_model(h, times);
        CHECK(check_induced_minor_model(host, h, m) == std::nullopt);
    }
}

TEST_CASE("make_subcubic leaves low-degree graphs alone") {
    for (const Graph& g : {gen_cycle(5), gen_path(4), gen_grid(2, 3), gen_complete(4)}) {
        auto [h, model] = make_subcubic(g);
        CHECK(h == g);
        CHECK(check_induced_minor_model(h, g, model) == std::nullopt);
    }
}

TEST_CASE("make_subcubic expands high-degree vertices") {
    Graph k5 = gen_complete(5);
    auto [h5, m5] = make_subcubic(k5);
    CHECK(h5.vertex_count() == 10);  // every vertex has degree 4 -> 2 nodes
    CHECK(h5.max_degree() <= 3);
    CHECK(check_induced_minor_model(h5, k5, m5) == std::nullopt);

    Graph star = gen_star(7);  // center degree 6 -> path of 4 nodes
    auto [hs, ms] = make_subcubic(star);
    CHECK(hs.vertex_count() == 10);
    CHECK(hs.max_degree() <= 3);
    CHECK(ms.branch_sets[0].size() == 4);
    CHECK(check_induced_minor_model(hs, star, ms) == std::nullopt);

    for (std::uint64_t seed : {1, 2, 3}) {
        Graph g = gen_gnp(12, 0.5, seed);
        auto [h, m] = make_subcubic(g);
        CHECK(h.max_degree() <= 3);
        CHECK(check_induced_minor_model(h, g, m) == std::nullopt);
    }
}

TEST_CASE("degeneracy of known families") {
    CHECK(degeneracy_order(gen_complete_binary_tree(4)).degeneracy == 1);
    CHECK(degeneracy_order(gen_path(7)).degeneracy == 1);
    CHECK(degeneracy_order(gen_cycle(9)).degeneracy == 2);
    CHECK(degeneracy_order(gen_grid(4, 4)).degeneracy == 2);
    CHECK(degeneracy_order(gen_complete(6)).degeneracy == 5);
    CHECK(degeneracy_order(Graph(3)).degeneracy == 0);

    auto res = degeneracy_order(gen_star(5));
    CHECK(res.degeneracy == 1);
    // Leaves peel until the center's degree ties at 1; then id 0 wins the tie.
    CHECK(res.order == std::vector<int>{1, 2, 3, 0, 4});
}

TEST_CASE("tree decomposition checker on a path") {
    Graph p4 = gen_path(4);
    TreeDecomposition td{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
    CHECK(check_tree_decomposition(p4, td) == std::nullopt);
    CHECK(td.width() == 1);

    TreeDecomposition one_bag{{{0, 1, 2, 3}}, {}};
    CHECK(check_tree_decomposition(p4, one_bag) == std::nullopt);
    CHECK(one_bag.width() == 3);
}

TEST_CASE("tree decomposition checker rejects each defect") {
    Graph p4 = gen_path(4);
    auto msg = [&](TreeDecomposition td) {
        auto r = check_tree_decomposition(p4, td);
        REQUIRE(r.has_value());
        return *r;
    };
    CHECK(msg({{}, {}}).find("no bags") != std::string::npos);
    CHECK(msg({{{0, 1}, {2}, {2, 3}}, {{0, 1}, {1, 2}}}).find("lies in no bag") !=
          std::string::npos);
    CHECK(msg({{{0, 1}, {1, 2}}, {{0, 1}, {1, 2}}}).find("needs 1 edges") != std::string::npos);
    CHECK(msg({{{0, 1, 2, 3}, {1}, {1}}, {{1, 2}, {1, 2}}}) == "bag tree is disconnected");
    // Vertex 1's bags sit at both ends of the path of bags.
    CHECK(msg({{{0, 1}, {2, 3}, {1, 2}}, {{0, 1}, {1, 2}}})
              .find("not connected in the tree") != std::string::npos);
    CHECK(msg({{{1, 0}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}}).find("not sorted") !=
          std::string::npos);
}

TEST_CASE("plain minor checker tolerates extra adjacency, induced checker does not") {
    Graph k4 = gen_complete(4);
    Graph c4 = gen_cycle(4);
    InducedMinorModel singles{{{0}, {1}, {2}, {3}}};
    CHECK(check_minor_model(k4, c4, singles) == std::nullopt);
    CHECK(check_induced_minor_model(k4, c4, singles).has_value());

    // Branch sets need not cover the host.
    Graph p5 = gen_path(5);
    CHECK(check_minor_model(p5, gen_path(3), {{{1}, {2}, {3}}}) == std::nullopt);

    auto gap = check_minor_model(p5, gen_path(2), {{{0}, {4}}});
    REQUIRE(gap.has_value());
    CHECK(gap->find("do not touch") != std::string::npos);

    // Structural violations are still rejected.
    CHECK(check_minor_model(p5, gen_path(2), {{{0, 2}, {4}}}).has_value());
    CHECK(check_minor_model(p5, gen_path(2), {{{0, 1}, {1, 4}}}).has_value());
}

TEST_CASE("path decomposition checker") {
    Graph p4 = gen_path(4);
    std::vector<std::vector<int>> bags{{0, 1}, {1, 2}, {2, 3}};
    CHECK(check_path_decomposition(p4, bags) == std::nullopt);
    CHECK(path_width(bags) == 1);

    std::vector<std::vector<int>> scrambled{{0, 1}, {2, 3}, {1, 2}};
    CHECK(check_path_decomposition(p4, scrambled).has_value());

    Graph c4 = gen_cycle(4);
    std::vector<std::vector<int>> c4bags{{0, 1, 3}, {1, 2, 3}};
    CHECK(check_path_decomposition(c4, c4bags) == std::nullopt);
    CHECK(path_width(c4bags) == 2);
}

}  // TEST_SUITE
