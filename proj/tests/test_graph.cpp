#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmh/graph.hpp"

using namespace qmh;

namespace {

Graph path(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(labels[i], labels[i + 1]);
    return Graph(labels, edges);
}

Graph cycle(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
    return Graph(labels, edges);
}

Graph complete(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("k" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(labels[i], labels[j]);
    return Graph(labels, edges);
}

}  // namespace

TEST_CASE("construction validates input") {
    CHECK_THROWS(Graph({"a", "a"}, {}));
    CHECK_THROWS(Graph({"a"}, {{"a", "b"}}));
    CHECK_THROWS(Graph({"a"}, {{"a", "a"}}));
    Graph g({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(g.edge_count() == 1);  // duplicates collapse
}

TEST_CASE("basic accessors") {
    Graph g = path(4);
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.is_connected());
    auto d = g.bfs_distances(0);
    CHECK(d == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("maximal cliques") {
    // Two triangles sharing an edge: cliques {0,1,2} and {1,2,3}.
    Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
    auto cl = maximal_cliques(g);
    REQUIRE(cl.size() == 2);
    CHECK(cl[0] == VertexSet{0, 1, 2});
    CHECK(cl[1] == VertexSet{1, 2, 3});

    CHECK(maximal_cliques(complete(5)).size() == 1);
    CHECK(maximal_cliques(cycle(5)).size() == 5);
    CHECK(maximal_cliques(Graph({"x"}, {})).size() == 1);
}

TEST_CASE("join decomposition") {
    // C4 is the join of two 2-vertex edgeless graphs.
    Graph c4 = cycle(4);
    auto jd = join_decomposition(c4, c4.all_vertices());
    REQUIRE(jd.has_value());
    CHECK(jd->parts.size() == 2);
    CHECK(!jd->trivial);

    Graph c5 = cycle(5);
    CHECK(!join_decomposition(c5, c5.all_vertices()).has_value());
    Graph p4 = path(4);
    CHECK(!join_decomposition(p4, p4.all_vertices()).has_value());

    // K2 is a genuine two-part join; only a singleton is the trivial join.
    Graph k2 = complete(2);
    auto k2d = join_decomposition(k2, k2.all_vertices());
    REQUIRE(k2d.has_value());
    CHECK(k2d->parts.size() == 2);
    CHECK(!k2d->trivial);
    auto single = join_decomposition(k2, VertexSet{0});
    REQUIRE(single.has_value());
    CHECK(single->trivial);
    CHECK(single->parts.size() == 1);
}

TEST_CASE("maximal joins of a cycle") {
    // In C5 the maximal joins are the 5 paths of length 2 (star of each vertex).
    auto js = maximal_joins(cycle(5));
    CHECK(js.size() == 5);
    for (const auto& J : js) CHECK(J.size() == 3);
    // C4 is itself a join.
    auto j4 = maximal_joins(cycle(4));
    REQUIRE(j4.size() == 1);
    CHECK(j4[0].size() == 4);
    CHECK_THROWS(maximal_joins(Graph({"a", "b"}, {})));
}

TEST_CASE("block decomposition") {
    // Two triangles sharing a single vertex: one cut vertex, two blocks.
    Graph g({"a", "b", "c", "d", "e"},
            {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}, {"d", "e"}});
    auto bd = blocks(g);
    CHECK(bd.cut_vertices == VertexSet{2});
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == VertexSet{0, 1, 2});
    CHECK(bd.blocks[1] == VertexSet{2, 3, 4});

    auto bd2 = blocks(complete(4));
    CHECK(bd2.cut_vertices.empty());
    CHECK(bd2.blocks.size() == 1);

    auto bd3 = blocks(path(5));
    CHECK(bd3.blocks.size() == 4);
    CHECK(bd3.cut_vertices == VertexSet{1, 2, 3});
}

TEST_CASE("cartesian product") {
    Graph g = cartesian_product({path(2), path(3)});
    CHECK(g.n() == 6);
    CHECK(g.edge_count() == 2 * 2 + 3 * 1);  // |E1||V2| + |V1||E2|
    CHECK(g.is_connected());
}

TEST_CASE("isomorphism") {
    CHECK(are_isomorphic(cycle(4), cartesian_product({path(2), path(2)})).has_value());
    CHECK(!are_isomorphic(cycle(6), cartesian_product({path(2), path(3)})).has_value());
    CHECK(!are_isomorphic(path(3), complete(3)).has_value());
    Graph relabeled({"x", "y", "z"}, {{"z", "y"}, {"x", "z"}});
    auto m = are_isomorphic(relabeled, path(3));
    REQUIRE(m.has_value());
    CHECK(m->size() == 3);
}

TEST_CASE("set helpers") {
    VertexSet a{1, 3, 5}, b{3, 4, 5};
    CHECK(set_union(a, b) == VertexSet{1, 3, 4, 5});
    CHECK(set_intersection(a, b) == VertexSet{3, 5});
    CHECK(set_difference(a, b) == VertexSet{1});
    CHECK(is_subset(VertexSet{3, 5}, a));
    CHECK(!is_subset(a, b));
    CHECK(set_contains(a, 3));
    CHECK(!set_contains(a, 2));
}
