#include "qmh/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace qmh {

std::vector<std::string> SimplicialComplex::vertex_labels() const {
    std::set<std::string> out;
    for (const Face& f : maximal_faces) out.insert(f.begin(), f.end());
    return {out.begin(), out.end()};
}

bool SimplicialComplex::has_face(const Face& f) const {
    for (const Face& m : maximal_faces)
        if (std::includes(m.begin(), m.end(), f.begin(), f.end())) return true;
    return false;
}

SimplicialComplex make_complex(std::vector<Face> faces, std::optional<std::string> basepoint) {
    for (Face& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> keep;
    for (size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].empty()) continue;
        bool contained = false;
        for (size_t j = 0; j < faces.size() && !contained; ++j)
            if (i != j && faces[j].size() >= faces[i].size() &&
                std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                              faces[i].end()) &&
                faces[i] != faces[j])
                contained = true;
        if (!contained) keep.push_back(faces[i]);
    }
    SimplicialComplex K;
    K.maximal_faces = std::move(keep);
    if (basepoint) {
        bool present = false;
        for (const Face& f : K.maximal_faces)
            if (std::binary_search(f.begin(), f.end(), *basepoint)) present = true;
        if (!present) throw std::invalid_argument("basepoint not a vertex: " + *basepoint);
        K.basepoint = std::move(basepoint);
    }
    return K;
}

GatedFamily make_gated_family(const QMGraph& X, std::vector<VertexSet> members) {
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        GatedVerdict v = is_gated(X, m);
        if (!v.gated) throw std::invalid_argument("family member not gated: " + v.witness);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return GatedFamily{std::move(members)};
}

namespace {

Face labels_of(const Graph& g, const VertexSet& S) {
    Face f;
    for (VertexId v : S) f.push_back(g.label(v));
    std::sort(f.begin(), f.end());
    return f;
}

std::string hp_label(int id) { return "h" + std::to_string(id); }

// Maximal cliques of a symmetric relation on hyperplane ids, as label faces.
std::vector<Face> relation_flag_faces(int n, const std::function<bool(int, int)>& rel,
                                      const std::vector<int>& support) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < support.size(); ++i)
        for (size_t j = i + 1; j < support.size(); ++j)
            if (rel(support[i], support[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Graph rg = Graph::from_index_edges(static_cast<int>(support.size()), edges);
    std::vector<Face> faces;
    if (support.empty()) return faces;
    for (const VertexSet& C : maximal_cliques(rg)) {
        Face f;
        for (VertexId v : C) f.push_back(hp_label(support[v]));
        faces.push_back(std::move(f));
    }
    (void)n;
    return faces;
}

}  // namespace

SimplicialComplex flag_completion(const Graph& g) {
    std::vector<Face> faces;
    for (const VertexSet& C : maximal_cliques(g)) faces.push_back(labels_of(g, C));
    return make_complex(std::move(faces));
}

SimplicialComplex join_complex(const Graph& g) {
    std::vector<Face> faces;
    for (const VertexSet& J : maximal_joins(g)) faces.push_back(labels_of(g, J));
    return make_complex(std::move(faces));
}

SimplicialComplex family_complex(const Graph& g, const std::vector<VertexSet>& members) {
    std::vector<Face> faces;
    for (const VertexSet& S : members) {
        if (S.empty()) throw std::invalid_argument("empty family member");
        faces.push_back(labels_of(g, S));
    }
    return make_complex(std::move(faces));
}

SimplicialComplex hyperplane_complex(const QMGraph& X, HyperplaneComplexKind kind) {
    const int h = static_cast<int>(X.hyperplanes.size());
    std::vector<int> all(h);
    for (int i = 0; i < h; ++i) all[i] = i;
    switch (kind) {
        case HyperplaneComplexKind::Contact: {
            auto rel = [&](int i, int j) {
                return !set_intersection(X.hyperplanes[i].carrier, X.hyperplanes[j].carrier)
                            .empty();
            };
            return make_complex(relation_flag_faces(h, rel, all));
        }
        case HyperplaneComplexKind::Crossing: {
            auto rel = [&](int i, int j) { return X.transverse[i][j] != 0; };
            return make_complex(relation_flag_faces(h, rel, all));
        }
        case HyperplaneComplexKind::Contiguity: {
            // Not flag: one face per witness clique.
            std::vector<Face> faces;
            for (const VertexSet& C : X.cliques) {
                Face f;
                for (const auto& J : X.hyperplanes)
                    if (is_subset(C, J.carrier)) f.push_back(hp_label(J.id));
                if (!f.empty()) faces.push_back(std::move(f));
            }
            return make_complex(std::move(faces));
        }
        case HyperplaneComplexKind::SmallCrossing: {
            // Maximal hyperplane: no fibre contained in another carrier.
            std::vector<int> maximal;
            for (const auto& J : X.hyperplanes) {
                bool ok = true;
                for (const auto& F : J.fibres) {
                    for (const auto& K : X.hyperplanes) {
                        if (K.id == J.id) continue;
                        if (is_subset(F, K.carrier)) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                }
                if (ok) maximal.push_back(J.id);
            }
            auto rel = [&](int i, int j) { return X.transverse[i][j] != 0; };
            std::vector<Face> faces = relation_flag_faces(h, rel, maximal);
            return make_complex(std::move(faces));
        }
    }
    throw std::logic_error("unreachable");
}

SimplicialComplex relative_contact_complex(const QMGraph& X, const GatedFamily& G,
                                           std::string* warning) {
    if (warning) {
        FamilyPredicates p = family_predicates(X, G);
        if (!p.prism_covering) *warning = "family not prism-covering: " + p.prism_witness;
    }
    const int h = static_cast<int>(X.hyperplanes.size());
    auto rel = [&](int i, int j) {
        return !set_intersection(X.hyperplanes[i].carrier, X.hyperplanes[j].carrier).empty();
    };
    std::vector<Face> faces;
    for (const VertexSet& Y : G.members) {
        std::vector<int> crossing = X.hyperplanes_crossing(Y);
        auto part = relation_flag_faces(h, rel, crossing);
        faces.insert(faces.end(), part.begin(), part.end());
    }
    return make_complex(std::move(faces));
}

SimplicialComplex skewering_complex(const QMGraph& X, const GatedFamily& G,
                                    bool double_skewering) {
    auto member_label = [](size_t i) { return "g" + std::to_string(i); };
    std::vector<Face> faces;
    for (size_t i = 0; i < G.members.size(); ++i) faces.push_back({member_label(i)});
    std::vector<std::vector<char>> crossed(X.hyperplanes.size(),
                                           std::vector<char>(G.members.size(), 0));
    for (size_t j = 0; j < X.hyperplanes.size(); ++j)
        for (size_t i = 0; i < G.members.size(); ++i)
            crossed[j][i] = X.crosses(static_cast<int>(j), G.members[i]) ? 1 : 0;
    if (!double_skewering) {
        for (size_t j = 0; j < X.hyperplanes.size(); ++j) {
            Face f;
            for (size_t i = 0; i < G.members.size(); ++i)
                if (crossed[j][i]) f.push_back(member_label(i));
            if (!f.empty()) faces.push_back(std::move(f));
        }
    } else {
        for (size_t j = 0; j < X.hyperplanes.size(); ++j)
            for (size_t k = j + 1; k < X.hyperplanes.size(); ++k) {
                if (X.transverse[j][k]) continue;
                Face f;
                for (size_t i = 0; i < G.members.size(); ++i)
                    if (crossed[j][i] && crossed[k][i]) f.push_back(member_label(i));
                if (!f.empty()) faces.push_back(std::move(f));
            }
    }
    return make_complex(std::move(faces));
}

SimplicialComplex local_complex(const QMGraph& X, VertexId x, LocalComplexKind kind,
                                const GatedFamily* G, const std::vector<Prism>* prism_cache) {
    if (x < 0 || x >= X.g.n()) throw std::invalid_argument("unknown vertex");
    const bool edge_vertices = (kind == LocalComplexKind::Link || kind == LocalComplexKind::L);
    const bool family_based = (kind == LocalComplexKind::L || kind == LocalComplexKind::SL);
    if (family_based && !G) throw std::invalid_argument("family required for L/sL");

    auto edge_label = [&](VertexId y) {
        Edge e = make_edge(x, y);
        return "e" + X.g.label(e.a) + "|" + X.g.label(e.b);
    };
    auto clique_label = [&](size_t i) { return "c" + std::to_string(i); };

    // Local vertices inside a host subgraph.
    auto face_in = [&](const VertexSet& host) {
        Face f;
        if (!set_contains(host, x)) return f;
        if (edge_vertices) {
            for (VertexId y : X.g.neighbors(x))
                if (set_contains(host, y)) f.push_back(edge_label(y));
        } else {
            for (size_t i = 0; i < X.cliques.size(); ++i)
                if (set_contains(X.cliques[i], x) && is_subset(X.cliques[i], host))
                    f.push_back(clique_label(i));
        }
        return f;
    };

    std::vector<Face> faces;
    // Every edge / clique at x is a vertex of the complex.
    if (edge_vertices) {
        for (VertexId y : X.g.neighbors(x)) faces.push_back({edge_label(y)});
    } else {
        for (size_t i = 0; i < X.cliques.size(); ++i)
            if (set_contains(X.cliques[i], x)) faces.push_back({clique_label(i)});
    }
    if (family_based) {
        for (const VertexSet& Y : G->members) {
            Face f = face_in(Y);
            if (!f.empty()) faces.push_back(std::move(f));
        }
    } else {
        std::vector<Prism> local;
        const std::vector<Prism>* prisms = prism_cache;
        if (!prisms) {
            local = maximal_prisms(X);
            prisms = &local;
        }
        for (const Prism& P : *prisms) {
            Face f = face_in(P.vertices);
            if (!f.empty()) faces.push_back(std::move(f));
        }
    }
    return make_complex(std::move(faces));
}

SimplicialComplex combine(CombineKind kind, const std::vector<SimplicialComplex>& parts) {
    std::vector<Face> faces;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::string prefix =
            (kind == CombineKind::Wedge ? "w" : "d") + std::to_string(i) + ".";
        const std::optional<std::string>& bp = parts[i].basepoint;
        if (kind == CombineKind::Wedge && !bp)
            throw std::invalid_argument("wedge part missing basepoint");
        for (const Face& f : parts[i].maximal_faces) {
            Face g;
            for (const std::string& v : f)
                g.push_back(kind == CombineKind::Wedge && v == *bp ? "*" : prefix + v);
            faces.push_back(std::move(g));
        }
    }
    if (kind == CombineKind::Wedge && !parts.empty())
        return make_complex(std::move(faces), "*");
    return make_complex(std::move(faces));
}

SimplicialComplex nerve(const std::vector<std::vector<std::string>>& sets) {
    std::vector<std::vector<std::string>> sorted = sets;
    for (auto& s : sorted) std::sort(s.begin(), s.end());
    const int n = static_cast<int>(sorted.size());
    std::vector<Face> faces;
    auto inter = [&](std::vector<std::string> acc, int i) {
        std::vector<std::string> out;
        std::set_intersection(acc.begin(), acc.end(), sorted[i].begin(), sorted[i].end(),
                              std::back_inserter(out));
        return out;
    };
    // Bron-Kerbosch style enumeration over the hereditary "nonempty
    // intersection" property.
    std::function<void(std::vector<int>&, std::vector<std::string>&, std::vector<int>,
                       std::vector<int>)>
        expand = [&](std::vector<int>& R, std::vector<std::string>& cur, std::vector<int> P,
                     std::vector<int> Xv) {
            if (P.empty() && Xv.empty()) {
                Face f;
                for (int i : R) f.push_back("n" + std::to_string(i));
                faces.push_back(std::move(f));
                return;
            }
            while (!P.empty()) {
                int v = P.back();
                P.pop_back();
                auto next = inter(cur, v);
                std::vector<int> P2, X2;
                for (int u : P)
                    if (!inter(next, u).empty()) P2.push_back(u);
                for (int u : Xv)
                    if (!inter(next, u).empty()) X2.push_back(u);
                R.push_back(v);
                expand(R, next, std::move(P2), std::move(X2));
                R.pop_back();
                Xv.push_back(v);
            }
        };
    std::vector<int> P;
    for (int i = 0; i < n; ++i)
        if (!sorted[i].empty()) P.push_back(i);
    std::vector<int> R;
    std::vector<std::string> universe;
    for (const auto& s : sorted) universe.insert(universe.end(), s.begin(), s.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    // Seed: current intersection is the whole universe (neutral element).
    std::function<void()> run = [&]() { expand(R, universe, std::move(P), {}); };
    run();
    return make_complex(std::move(faces));
}

namespace {

SimplicialComplex wedge_of_locals(const QMGraph& X, const VertexSet& verts,
                                  LocalComplexKind kind, const GatedFamily* G,
                                  const std::vector<Prism>* prisms) {
    std::vector<SimplicialComplex> parts;
    for (VertexId x : verts) {
        SimplicialComplex s = local_complex(X, x, kind, G, prisms);
        if (s.empty()) continue;  // isolated vertex of X: nothing local
        auto labels = s.vertex_labels();
        s.basepoint = labels.front();  // lexicographically least
        parts.push_back(std::move(s));
    }
    return combine(CombineKind::Wedge, parts);
}

}  // namespace

SimplicialComplex model_complex(const QMGraph& X, ModelTheorem theorem, const GatedFamily* G) {
    if (theorem == ModelTheorem::Crossing) {
        BlockDecomposition bd = blocks(X.g);
        std::vector<SimplicialComplex> per_block;
        for (const VertexSet& B : bd.blocks) {
            // Induced block subgraph, re-analyzed as its own quasi-median graph.
            std::vector<std::string> labels;
            for (VertexId v : B) labels.push_back(X.g.label(v));
            std::vector<std::pair<std::string, std::string>> edges;
            for (const Edge& e : X.g.edges())
                if (set_contains(B, e.a) && set_contains(B, e.b))
                    edges.emplace_back(X.g.label(e.a), X.g.label(e.b));
            QMGraph XB = compute_hyperplanes(Graph(labels, edges));
            std::vector<Prism> prisms = maximal_prisms(XB);
            per_block.push_back(
                wedge_of_locals(XB, XB.g.all_vertices(), LocalComplexKind::Slink, nullptr,
                                &prisms));
        }
        return combine(CombineKind::DisjointUnion, per_block);
    }
    if (!G) throw std::invalid_argument("family required for the relative contact model");
    BlockDecomposition bd = blocks(X.g);
    if (bd.blocks.size() != 1)
        throw std::invalid_argument("not 2-connected: cut vertex " +
                                    X.g.label(bd.cut_vertices.front()));
    FamilyPredicates p = family_predicates(X, *G);
    if (!p.star_covering)
        throw std::invalid_argument("family not star-covering: " + p.star_witness);
    return wedge_of_locals(X, X.g.all_vertices(), LocalComplexKind::SL, G, nullptr);
}

FamilyPredicates family_predicates(const QMGraph& X, const GatedFamily& G) {
    FamilyPredicates out;
    std::vector<Prism> prisms = maximal_prisms(X);
    for (const Prism& P : prisms) {
        bool covered = false;
        for (const VertexSet& Y : G.members)
            if (is_subset(P.vertices, Y)) {
                covered = true;
                break;
            }
        if (!covered) {
            out.prism_covering = false;
            out.prism_witness = "uncovered prism at " + X.g.label(P.vertices.front());
            break;
        }
    }
    for (const VertexSet& C : X.cliques) {
        VertexSet star = C;
        for (const Prism& P : prisms)
            if (!set_intersection(P.vertices, C).empty()) star = set_union(star, P.vertices);
        bool covered = false;
        for (const VertexSet& Y : G.members)
            if (is_subset(star, Y)) {
                covered = true;
                break;
            }
        if (!covered) {
            out.star_covering = false;
            out.star_witness = "prisms through the clique at " + X.g.label(C.front()) +
                               " lie in no single member";
            break;
        }
    }
    for (size_t i = 0; i < G.members.size() && out.parallelism_free; ++i)
        for (size_t j = i + 1; j < G.members.size(); ++j)
            if (X.hyperplanes_crossing(G.members[i]) == X.hyperplanes_crossing(G.members[j])) {
                out.parallelism_free = false;
                out.parallel_witness = "members " + std::to_string(i) + " and " +
                                       std::to_string(j) + " crossed by the same hyperplanes";
                break;
            }
    return out;
}

}  // namespace qmh
