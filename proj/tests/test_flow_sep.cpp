#include "doctest.h"

#include <stdexcept>
#include <variant>

#include "imsep/flow_sep.hpp"
#include "imsep/generators.hpp"

using namespace imsep;

namespace {

VertexFlow expect_flow(FlowOrCut r) {
    REQUIRE(std::holds_alternative<VertexFlow>(r));
    return std::get<VertexFlow>(std::move(r));
}

Separation expect_cut(FlowOrCut r) {
    REQUIRE(std::holds_alternative<Separation>(r));
    return std::get<Separation>(std::move(r));
}

}  // namespace

TEST_SUITE("flow_sep") {

TEST_CASE("flow checker on a hand-built two-vertex flow") {
    Graph p2 = gen_path(2);
    VertexFlow f{{{0, 0, 1.0, {0}}, {1, 1, 1.0, {1}}, {0, 1, 1.0, {0, 1}}, {1, 0, 1.0, {1, 0}}}};
    CHECK(check_concurrent_flow(p2, f) == std::nullopt);
    // Every vertex carries its own pair plus both directions of the other.
    CHECK(flow_congestion(p2, f) == doctest::Approx(3.0));

    VertexFlow missing{{{0, 0, 1.0, {0}}, {1, 1, 1.0, {1}}, {0, 1, 1.0, {0, 1}}}};
    auto r = check_concurrent_flow(p2, missing);
    REQUIRE(r.has_value());
    CHECK(r->find("(1,0)") != std::string::npos);

    VertexFlow half = f;
    half.paths[2].weight = 0.5;
    CHECK(check_concurrent_flow(p2, half).has_value());

    VertexFlow skip{{{0, 0, 1.0, {0}}, {1, 1, 1.0, {1}}, {0, 1, 1.0, {1}}, {1, 0, 1.0, {1, 0}}}};
    CHECK(check_concurrent_flow(p2, skip).has_value());
}

TEST_CASE("complete graphs route directly at congestion 2n-1") {
    for (int n : {4, 5, 8}) {
        auto f = expect_flow(flow_or_sparse_cut(gen_complete(n), 1000.0));
        CHECK(check_concurrent_flow(gen_complete(n), f) == std::nullopt);
        CHECK(flow_congestion(gen_complete(n), f) ==
              doctest::Approx(2.0 * n - 1.0).epsilon(1e-9));
    }
}

TEST_CASE("any all-pairs flow costs at least 2n-1") {
    // Each vertex is start of n-1 paths, end of n-1 and carries its own pair.
    Graph grid = gen_grid(5, 5);
    auto f = expect_flow(flow_or_sparse_cut(grid, 600.0));
    CHECK(check_concurrent_flow(grid, f) == std::nullopt);
    CHECK(flow_congestion(grid, f) >= 2.0 * 25 - 1.0 - 1e-9);
    CHECK(flow_congestion(grid, f) <= 600.0 * 1.25 + 1e-9);
}

TEST_CASE("overloaded complete graph yields the prefix cut") {
    Graph k5 = gen_complete(5);
    Separation cut = expect_cut(flow_or_sparse_cut(k5, 1.0));
    CHECK(check_separation(k5, cut) == std::nullopt);
    CHECK(is_balanced(k5, cut));
    // Loads tie everywhere, so the prefix is id order; k=2 splits off K3.
    CHECK(cut.s == std::vector<int>{0, 1});
    CHECK(cut.a.empty());
    CHECK(cut.b == std::vector<int>{2, 3, 4});
}

TEST_CASE("star: hub routes everything, sweep removes exactly the hub") {
    Graph star = gen_star(9);
    auto f = expect_flow(flow_or_sparse_cut(star, 100.0));
    CHECK(check_concurrent_flow(star, f) == std::nullopt);
    // 1 own + 8 starts + 8 ends + 8*7 leaf-to-leaf rides.
    CHECK(flow_congestion(star, f) == doctest::Approx(73.0).epsilon(1e-9));

    Separation cut = expect_cut(flow_or_sparse_cut(star, 1.0));
    CHECK(cut.s == std::vector<int>{0});
    CHECK(cut.a == std::vector<int>{1, 2});
    CHECK(cut.b == std::vector<int>{3, 4, 5, 6, 7, 8});
    CHECK(is_balanced(star, cut));
}

TEST_CASE("path graph splits at the middle") {
    Graph p12 = gen_path(12);
    auto r = balanced_separator_or_flow(p12, 1.0);
    REQUIRE(std::holds_alternative<Separation>(r));
    Separation sep = std::get<Separation>(r);
    CHECK(check_separation(p12, sep) == std::nullopt);
    CHECK(is_balanced(p12, sep));
    CHECK(sep.s == std::vector<int>{5});
    CHECK(sep.a == std::vector<int>{6, 7, 8, 9, 10, 11});
    CHECK(sep.b == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("disconnected graphs split along components without a separator") {
    Graph g(9);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    for (int u = 4; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) g.add_edge(u, v);

    auto r = balanced_separator_or_flow(g, 1.0);
    REQUIRE(std::holds_alternative<Separation>(r));
    Separation sep = std::get<Separation>(r);
    CHECK(sep.s.empty());
    CHECK(sep.a == std::vector<int>{4, 5, 6, 7, 8});
    CHECK(sep.b == std::vector<int>{0, 1, 2, 3});
    CHECK(is_balanced(g, sep));
}

TEST_CASE("small parts can come back as a subgraph flow") {
    // A single vertex is already balanced-impossible (3*1 > 2*1), and K1
    // routes itself at congestion 1.
    auto r = balanced_separator_or_flow(Graph(1), 5.0);
    REQUIRE(std::holds_alternative<SubgraphFlow>(r));
    auto& sf = std::get<SubgraphFlow>(r);
    CHECK(sf.vertices == std::vector<int>{0});
    CHECK(check_concurrent_flow(Graph(1), sf.flow) == std::nullopt);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(flow_or_sparse_cut(gen_path(4), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(flow_or_sparse_cut(Graph(3), 2.0), std::invalid_argument);  // disconnected
    CHECK_THROWS_AS(flow_or_sparse_cut(Graph(0), 2.0), std::invalid_argument);
    CHECK_THROWS_AS(balanced_separator_or_flow(gen_path(4), 0.0), std::invalid_argument);

    auto r = balanced_separator_or_flow(Graph(0), 1.0);
    REQUIRE(std::holds_alternative<Separation>(r));
    CHECK(std::get<Separation>(r) == Separation{});
}

TEST_CASE("routing is deterministic") {
    Graph grid = gen_grid(5, 5);
    auto f1 = expect_flow(flow_or_sparse_cut(grid, 600.0));
    auto f2 = expect_flow(flow_or_sparse_cut(grid, 600.0));
    CHECK(f1 == f2);

    Graph k5 = gen_complete(5);
    CHECK(expect_cut(flow_or_sparse_cut(k5, 1.0)) == expect_cut(flow_or_sparse_cut(k5, 1.0)));
}

}  // TEST_SUITE
