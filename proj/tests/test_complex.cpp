#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmh/complex.hpp"

using namespace qmh;

namespace {

Graph cycle_graph(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
    return Graph(labels, edges);
}

Graph path_graph(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(labels[i], labels[i + 1]);
    return Graph(labels, edges);
}

size_t face_count(const SimplicialComplex& K, size_t size) {
    size_t n = 0;
    for (const Face& f : K.maximal_faces)
        if (f.size() == size) ++n;
    return n;
}

}  // namespace

TEST_CASE("make_complex canonicalizes") {
    auto K = make_complex({{"b", "a"}, {"a"}, {"a", "b"}, {"c"}});
    REQUIRE(K.maximal_faces.size() == 2);
    CHECK(K.maximal_faces[0] == Face{"a", "b"});
    CHECK(K.maximal_faces[1] == Face{"c"});
    CHECK(K.has_face({"a"}));
    CHECK(!K.has_face({"a", "c"}));
    CHECK_THROWS(make_complex({{"a"}}, "z"));
}

TEST_CASE("flag completion") {
    auto k3 = flag_completion(Graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}));
    REQUIRE(k3.maximal_faces.size() == 1);
    CHECK(k3.maximal_faces[0].size() == 3);

    auto c4 = flag_completion(cycle_graph(4));
    CHECK(c4.maximal_faces.size() == 4);  // triangle-free: edges only
    auto c5 = flag_completion(cycle_graph(5));
    CHECK(c5.maximal_faces.size() == 5);
}

TEST_CASE("join complex of small cycles and paths") {
    auto c4 = join_complex(cycle_graph(4));
    REQUIRE(c4.maximal_faces.size() == 1);
    CHECK(c4.maximal_faces[0].size() == 4);  // full 3-simplex, contractible

    auto c5 = join_complex(cycle_graph(5));
    CHECK(c5.maximal_faces.size() == 5);
    for (const Face& f : c5.maximal_faces) CHECK(f.size() == 3);

    auto p4 = join_complex(path_graph(4));
    CHECK(p4.maximal_faces.size() == 2);
    for (const Face& f : p4.maximal_faces) CHECK(f.size() == 3);
}

TEST_CASE("family complex") {
    Graph g({"a", "b"}, {{"a", "b"}});
    auto iso = family_complex(g, {{0}, {1}});
    CHECK(iso.maximal_faces.size() == 2);
    CHECK_THROWS(family_complex(g, {{}}));
    auto cl = family_complex(g, maximal_cliques(g));
    CHECK(cl.maximal_faces == flag_completion(g).maximal_faces);
}

TEST_CASE("hyperplane complexes: contact, crossing") {
    QMGraph P4 = analyze(path_graph(4));
    auto contact = hyperplane_complex(P4, HyperplaneComplexKind::Contact);
    // Path on three hyperplane vertices: two edges.
    CHECK(contact.maximal_faces.size() == 2);
    for (const Face& f : contact.maximal_faces) CHECK(f.size() == 2);

    QMGraph C4 = analyze(cycle_graph(4));
    auto crossing = hyperplane_complex(C4, HyperplaneComplexKind::Crossing);
    REQUIRE(crossing.maximal_faces.size() == 1);
    CHECK(crossing.maximal_faces[0].size() == 2);
}

TEST_CASE("contiguity complex of the 2x2 grid is the tetrahedron 2-skeleton") {
    QMGraph G = analyze(cartesian_product({path_graph(3), path_graph(3)}));
    REQUIRE(G.hyperplanes.size() == 4);
    auto contg = hyperplane_complex(G, HyperplaneComplexKind::Contiguity);
    CHECK(contg.maximal_faces.size() == 4);
    for (const Face& f : contg.maximal_faces) CHECK(f.size() == 3);
    CHECK(contg.vertex_labels().size() == 4);
    CHECK(!contg.has_face({"h0", "h1", "h2", "h3"}));

    // Contiguity faces sit inside contact faces; crossing inside contact.
    auto contact = hyperplane_complex(G, HyperplaneComplexKind::Contact);
    auto crossing = hyperplane_complex(G, HyperplaneComplexKind::Crossing);
    for (const Face& f : contg.maximal_faces) CHECK(contact.has_face(f));
    for (const Face& f : crossing.maximal_faces) CHECK(contact.has_face(f));
}

TEST_CASE("small crossing complex") {
    // A single hyperplane is vacuously maximal.
    QMGraph K3 = generate_hamming({3});
    auto sc = hyperplane_complex(K3, HyperplaneComplexKind::SmallCrossing);
    REQUIRE(sc.maximal_faces.size() == 1);
    CHECK(sc.maximal_faces[0].size() == 1);
    // In a product both carriers are the whole graph, so every fibre lies in
    // the other carrier: no hyperplane is maximal.
    QMGraph H = generate_hamming({2, 3});
    CHECK(hyperplane_complex(H, HyperplaneComplexKind::SmallCrossing).empty());
    // In a path every fibre is a single vertex, contained in the neighbouring
    // carrier.
    QMGraph P4 = analyze(path_graph(4));
    CHECK(hyperplane_complex(P4, HyperplaneComplexKind::SmallCrossing).empty());
}

TEST_CASE("relative contact complex endpoints") {
    QMGraph P4 = analyze(path_graph(4));
    auto whole = make_gated_family(P4, {P4.g.all_vertices()});
    auto rel = relative_contact_complex(P4, whole);
    CHECK(rel.maximal_faces ==
          hyperplane_complex(P4, HyperplaneComplexKind::Contact).maximal_faces);

    std::vector<VertexSet> prisms;
    for (const Prism& p : maximal_prisms(P4)) prisms.push_back(p.vertices);
    auto rel2 = relative_contact_complex(P4, make_gated_family(P4, prisms));
    CHECK(rel2.maximal_faces ==
          hyperplane_complex(P4, HyperplaneComplexKind::Crossing).maximal_faces);

    // Edge family: path on three hyperplanes.
    auto edges = make_gated_family(P4, {{0, 1}, {1, 2}, {2, 3}});
    auto rel3 = relative_contact_complex(P4, edges);
    CHECK(rel3.maximal_faces.size() == 3);  // three isolated hyperplane vertices
}

TEST_CASE("skewering complex") {
    QMGraph P4 = analyze(path_graph(4));
    auto far = make_gated_family(P4, {{0, 1}, {2, 3}});
    auto s1 = skewering_complex(P4, far);
    CHECK(s1.maximal_faces.size() == 2);  // two isolated vertices
    for (const Face& f : s1.maximal_faces) CHECK(f.size() == 1);

    auto overlapping = make_gated_family(P4, {{0, 1, 2}, {1, 2, 3}});
    auto s2 = skewering_complex(P4, overlapping);
    REQUIRE(s2.maximal_faces.size() == 1);
    CHECK(s2.maximal_faces[0].size() == 2);  // middle hyperplane crosses both

    auto whole = make_gated_family(P4, {P4.g.all_vertices()});
    auto s3 = skewering_complex(P4, whole);
    CHECK(s3.maximal_faces.size() == 1);
    CHECK(s3.maximal_faces[0].size() == 1);
}

TEST_CASE("local complexes") {
    QMGraph H = generate_hamming({2, 3});
    // slink of any vertex: two cliques sharing the whole-graph prism.
    auto sl = local_complex(H, 0, LocalComplexKind::Slink);
    REQUIRE(sl.maximal_faces.size() == 1);
    CHECK(sl.maximal_faces[0].size() == 2);

    QMGraph P3 = analyze(path_graph(3));
    auto link = local_complex(P3, 0, LocalComplexKind::Link);
    REQUIRE(link.maximal_faces.size() == 1);
    CHECK(link.maximal_faces[0].size() == 1);  // degree-1 vertex: a point

    auto whole = make_gated_family(P3, {P3.g.all_vertices()});
    auto sL = local_complex(P3, 1, LocalComplexKind::SL, &whole);
    REQUIRE(sL.maximal_faces.size() == 1);
    CHECK(sL.maximal_faces[0].size() == 2);  // simplex on both cliques at the middle

    CHECK_THROWS(local_complex(P3, 7, LocalComplexKind::Link));
    CHECK_THROWS(local_complex(P3, 0, LocalComplexKind::L));  // family missing
}

TEST_CASE("combine: wedge and disjoint union") {
    SimplicialComplex circle =
        make_complex({{"a", "b"}, {"b", "c"}, {"a", "c"}}, std::string("a"));
    auto wedge = combine(CombineKind::Wedge, {circle, circle});
    CHECK(wedge.vertex_labels().size() == 5);  // 3 + 3 - shared basepoint
    CHECK(wedge.basepoint == "*");
    CHECK(face_count(wedge, 2) == 6);

    SimplicialComplex pt = make_complex({{"x"}});
    auto du = combine(CombineKind::DisjointUnion, {pt, pt});
    CHECK(du.maximal_faces.size() == 2);

    SimplicialComplex nobase = make_complex({{"a", "b"}});
    CHECK_THROWS(combine(CombineKind::Wedge, {nobase}));
    auto single = combine(CombineKind::Wedge, {circle});
    CHECK(single.maximal_faces.size() == 3);
}

TEST_CASE("nerve") {
    // Three edges of a triangle boundary: pairwise meet, empty triple.
    auto n1 = nerve({{"x", "y"}, {"y", "z"}, {"x", "z"}});
    CHECK(n1.maximal_faces.size() == 3);
    for (const Face& f : n1.maximal_faces) CHECK(f.size() == 2);
    CHECK(!n1.has_face({"n0", "n1", "n2"}));

    auto n2 = nerve({{"a", "b", "c"}, {"a", "b"}, {"a"}});
    REQUIRE(n2.maximal_faces.size() == 1);
    CHECK(n2.maximal_faces[0].size() == 3);  // nested chain: full simplex

    auto n3 = nerve({{"a"}, {"b"}});
    CHECK(n3.maximal_faces.size() == 2);
}

TEST_CASE("model complexes") {
    QMGraph P5 = analyze(path_graph(5));
    auto m = model_complex(P5, ModelTheorem::Crossing);
    CHECK(m.maximal_faces.size() == 4);  // one point per edge-block
    for (const Face& f : m.maximal_faces) CHECK(f.size() == 1);

    QMGraph H = generate_hamming({2, 3});
    auto mh = model_complex(H, ModelTheorem::Crossing);
    // Wedge of 6 edges (one slink edge per vertex): 7 vertices, 6 edges.
    CHECK(face_count(mh, 2) == 6);

    auto whole = make_gated_family(H, {H.g.all_vertices()});
    auto mr = model_complex(H, ModelTheorem::RelativeContact, &whole);
    CHECK(!mr.empty());

    CHECK_THROWS(model_complex(P5, ModelTheorem::RelativeContact,
                               nullptr));  // family required
    auto p5whole = make_gated_family(P5, {P5.g.all_vertices()});
    CHECK_THROWS(model_complex(P5, ModelTheorem::RelativeContact, &p5whole));  // cut vertices
}

TEST_CASE("family predicates") {
    QMGraph P3 = analyze(path_graph(3));
    auto whole = make_gated_family(P3, {P3.g.all_vertices()});
    auto p1 = family_predicates(P3, whole);
    CHECK(p1.prism_covering);
    CHECK(p1.star_covering);
    CHECK(p1.parallelism_free);

    std::vector<VertexSet> prisms;
    for (const Prism& p : maximal_prisms(P3)) prisms.push_back(p.vertices);
    auto p2 = family_predicates(P3, make_gated_family(P3, prisms));
    CHECK(p2.prism_covering);
    CHECK(!p2.star_covering);  // the middle vertex's two cliques span no single member
    CHECK(!p2.star_witness.empty());

    auto p3 = family_predicates(P3, make_gated_family(P3, {{0}, {2}}));
    CHECK(!p3.prism_covering);
    CHECK(!p3.parallelism_free);  // both crossed by no hyperplane
}

TEST_CASE("canonical star covering is star-covering on samples") {
    for (QMGraph X : {generate_hamming({2, 2}), generate_hamming({3, 2}),
                      analyze(path_graph(4))}) {
        auto fam = make_gated_family(X, canonical_star_covering(X));
        auto p = family_predicates(X, fam);
        CHECK(p.star_covering);
        CHECK(p.prism_covering);
    }
}
