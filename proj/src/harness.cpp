#include "qmh/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qmh {
namespace {

using Clock = std::chrono::steady_clock;

struct CheckRunner {
    std::vector<CheckResult>* out;

    void run(const std::string& id, const std::function<void(CheckResult&)>& body) {
        CheckResult r;
        r.id = id;
        auto t0 = Clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.witness = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        out->push_back(std::move(r));
    }
};

void fail(CheckResult& r, std::string witness) {
    r.status = CheckStatus::Fail;
    r.witness = std::move(witness);
}

void skip(CheckResult& r, std::string reason) {
    r.status = CheckStatus::Skipped;
    r.witness = std::move(reason);
}

bool trivial_group(const HomologyGroup& g) { return g.betti == 0 && g.torsion.empty(); }

bool same_homology(const HomologySignature& a, const HomologySignature& b) {
    size_t n = std::max(a.groups.size(), b.groups.size());
    for (size_t k = 0; k < n; ++k) {
        HomologyGroup ga = k < a.groups.size() ? a.groups[k] : HomologyGroup{};
        HomologyGroup gb = k < b.groups.size() ? b.groups[k] : HomologyGroup{};
        if (ga.betti != gb.betti || ga.torsion != gb.torsion) return false;
    }
    return true;
}

std::string describe(const HomologySignature& sig) {
    std::string out;
    for (const auto& line : render_signature(sig)) {
        if (!out.empty()) out += "; ";
        out += line;
    }
    return out;
}

// Number of connected components of the 1-skeleton (vertices sharing a
// maximal face are merged).
int complex_components(const SimplicialComplex& K) {
    auto labels = K.vertex_labels();
    std::vector<int> parent(labels.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](const std::string& l) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) -
                                labels.begin());
    };
    for (const Face& f : K.maximal_faces)
        for (size_t i = 1; i < f.size(); ++i) parent[find(index_of(f[i]))] = find(index_of(f[0]));
    int c = 0;
    for (size_t i = 0; i < labels.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
}

bool is_acyclic_reduced(const HomologySignature& sig) {
    for (const auto& g : sig.groups)
        if (!trivial_group(g)) return false;
    return true;
}

std::vector<int> prism_slice_bfs(const QMGraph& X, const std::vector<int>& family, VertexId o) {
    // Component of o in the subgraph of edges lying in the family's classes.
    std::vector<char> in_family(X.hyperplanes.size(), 0);
    for (int j : family) in_family[j] = 1;
    std::vector<std::vector<VertexId>> adj(X.g.n());
    for (size_t e = 0; e < X.edge_list.size(); ++e)
        if (in_family[X.edge_hyperplane[e]]) {
            adj[X.edge_list[e].a].push_back(X.edge_list[e].b);
            adj[X.edge_list[e].b].push_back(X.edge_list[e].a);
        }
    std::vector<char> seen(X.g.n(), 0);
    std::vector<int> comp{static_cast<int>(o)};
    seen[o] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
        for (VertexId w : adj[comp[i]])
            if (!seen[w]) {
                seen[w] = 1;
                comp.push_back(w);
            }
    std::sort(comp.begin(), comp.end());
    return comp;
}

// Independent maximal-prism enumeration: transversality reassembled from the
// square list, maximal families by plain subset growth, slices by BFS.
std::vector<VertexSet> brute_force_prisms(const QMGraph& X) {
    const int h = static_cast<int>(X.hyperplanes.size());
    if (h == 0) return {{0}};
    std::vector<std::vector<char>> tv(h, std::vector<char>(h, 0));
    for (const auto& sq : X.squares) {
        int a = X.hyperplane_of(make_edge(sq[0], sq[1]));
        int b = X.hyperplane_of(make_edge(sq[1], sq[2]));
        tv[a][b] = tv[b][a] = 1;
    }
    std::vector<std::vector<int>> cliques;
    std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& cur, int start) {
        cliques.push_back(cur);
        for (int j = start; j < h; ++j) {
            bool ok = true;
            for (int i : cur)
                if (!tv[i][j]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(j);
            grow(cur, j + 1);
            cur.pop_back();
        }
    };
    std::vector<int> empty;
    grow(empty, 0);
    std::vector<VertexSet> out;
    for (const auto& c : cliques) {
        if (c.empty()) continue;
        bool maximal = true;
        for (int j = 0; j < h && maximal; ++j) {
            if (std::find(c.begin(), c.end(), j) != c.end()) continue;
            bool ok = true;
            for (int i : c)
                if (!tv[i][j]) {
                    ok = false;
                    break;
                }
            if (ok) maximal = false;
        }
        if (!maximal) continue;
        VertexSet inter = X.hyperplanes[c[0]].carrier;
        for (size_t i = 1; i < c.size(); ++i)
            inter = set_intersection(inter, X.hyperplanes[c[i]].carrier);
        if (inter.empty()) throw std::runtime_error("empty carrier meet in brute force");
        out.push_back(prism_slice_bfs(X, c, inter[0]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool two_connected(const Graph& g) { return blocks(g).cut_vertices.empty(); }

}  // namespace

bool TheoremReport::passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

GatedFamily build_family(const QMGraph& X, FamilyChoice choice) {
    switch (choice) {
        case FamilyChoice::WholeGraph:
            return make_gated_family(X, {X.g.all_vertices()});
        case FamilyChoice::MaximalPrisms: {
            std::vector<VertexSet> members;
            for (const Prism& p : maximal_prisms(X)) members.push_back(p.vertices);
            return make_gated_family(X, std::move(members));
        }
        case FamilyChoice::CanonicalStarCovering:
            return make_gated_family(X, canonical_star_covering(X));
    }
    throw std::logic_error("unknown family choice");
}

TheoremReport verify_graph(const QMGraph& X, const std::vector<GatedFamily>& families,
                           int max_degree, std::uint64_t sample_seed) {
    TheoremReport report;
    CheckRunner run{&report.checks};
    const bool no_hyperplanes = X.hyperplanes.empty();
    auto prisms = maximal_prisms(X);

    // (a) Contact complex: connected with vanishing reduced homology.
    run.run("contact_acyclic", [&](CheckResult& r) {
        if (no_hyperplanes) return skip(r, "no hyperplanes");
        auto K = hyperplane_complex(X, HyperplaneComplexKind::Contact);
        auto sig = homology(K, true, max_degree);
        if (!is_acyclic_reduced(sig)) fail(r, "reduced homology nonzero: " + describe(sig));
    });

    // (b) Crossing complex homology equals the block-wedge model.
    run.run("crossing_model", [&](CheckResult& r) {
        if (no_hyperplanes) return skip(r, "no hyperplanes");
        auto sig = homology(hyperplane_complex(X, HyperplaneComplexKind::Crossing), false,
                            max_degree);
        auto model = homology(model_complex(X, ModelTheorem::Crossing), false, max_degree);
        if (!same_homology(sig, model))
            fail(r, "crossing: " + describe(sig) + " | model: " + describe(model));
    });

    // (c)/(d) Per-family theorems.
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const GatedFamily& G = families[fi];
        const std::string tag = "[" + std::to_string(fi) + "]";
        FamilyPredicates pred = family_predicates(X, G);
        const bool star = pred.star_covering;
        const bool twoconn = two_connected(X.g);

        run.run("relcont_model" + tag, [&](CheckResult& r) {
            if (!twoconn) return skip(r, "cut vertex present");
            if (!star) return skip(r, "family not star-covering: " + pred.star_witness);
            auto sig = homology(relative_contact_complex(X, G), false, max_degree);
            auto model =
                homology(model_complex(X, ModelTheorem::RelativeContact, &G), false, max_degree);
            if (!same_homology(sig, model))
                fail(r, "relcont: " + describe(sig) + " | model: " + describe(model));
        });

        run.run("link_vs_slink" + tag, [&](CheckResult& r) {
            if (!twoconn) return skip(r, "cut vertex present");
            if (!star) return skip(r, "family not star-covering: " + pred.star_witness);
            for (VertexId x = 0; x < X.g.n(); ++x) {
                auto L = local_complex(X, x, LocalComplexKind::L, &G, &prisms);
                auto sL = local_complex(X, x, LocalComplexKind::SL, &G, &prisms);
                if (!same_homology(homology(L, false, max_degree),
                                   homology(sL, false, max_degree)))
                    return fail(r, "L vs sL homology differ at vertex " + X.g.label(x));
                if (complex_components(L) != 1)
                    return fail(r, "L disconnected at vertex " + X.g.label(x));
            }
        });

        run.run("skewering_vs_relcont" + tag, [&](CheckResult& r) {
            if (!pred.parallelism_free)
                return skip(r, "family not parallelism-free: " + pred.parallel_witness);
            auto sig = homology(skewering_complex(X, G), false, max_degree);
            auto rel = homology(relative_contact_complex(X, G), false, max_degree);
            if (!same_homology(sig, rel))
                fail(r, "skewering: " + describe(sig) + " | relcont: " + describe(rel));
        });
    }

    // (e) Axiom battery.
    run.run("separation_distance", [&](CheckResult& r) {
        ValidationReport v = X.validation ? *X.validation : validate_quasi_median(X.g);
        if (!v.passed)
            fail(r, v.violations.empty() ? std::string("validation failed") : v.violations[0]);
    });

    run.run("gated_pieces", [&](CheckResult& r) {
        for (const Hyperplane& J : X.hyperplanes) {
            std::vector<std::pair<std::string, const std::vector<VertexSet>*>> groups = {
                {"sector", &J.sectors}, {"fibre", &J.fibres}};
            auto carrier = is_gated(X, J.carrier);
            if (!carrier.gated)
                return fail(r, "carrier of h" + std::to_string(J.id) + ": " + carrier.witness);
            for (auto& [kind, sets] : groups)
                for (const VertexSet& S : *sets) {
                    auto v = is_gated(X, S);
                    if (!v.gated)
                        return fail(r, kind + " of h" + std::to_string(J.id) + ": " + v.witness);
                }
        }
    });

    run.run("helly_triples", [&](CheckResult& r) {
        std::vector<const VertexSet*> pool;
        for (const Hyperplane& J : X.hyperplanes) {
            pool.push_back(&J.carrier);
            for (const VertexSet& s : J.sectors) pool.push_back(&s);
            for (const VertexSet& s : J.fibres) pool.push_back(&s);
        }
        if (pool.size() < 3) return skip(r, "fewer than three gated pieces");
        std::mt19937_64 rng(sample_seed);
        for (int t = 0; t < 200; ++t) {
            const VertexSet& A = *pool[rng() % pool.size()];
            const VertexSet& B = *pool[rng() % pool.size()];
            const VertexSet& C = *pool[rng() % pool.size()];
            if (set_intersection(A, B).empty() || set_intersection(B, C).empty() ||
                set_intersection(A, C).empty())
                continue;
            if (set_intersection(set_intersection(A, B), C).empty())
                return fail(r, "pairwise-intersecting triple with empty meet, sample " +
                                   std::to_string(t));
        }
    });

    run.run("prism_brute_force", [&](CheckResult& r) {
        if (X.g.n() > 30) return skip(r, "graph larger than 30 vertices");
        std::vector<VertexSet> got;
        for (const Prism& p : prisms) got.push_back(p.vertices);
        std::sort(got.begin(), got.end());
        auto expected = brute_force_prisms(X);
        if (got != expected)
            fail(r, "maximal prisms differ from brute force (" + std::to_string(got.size()) +
                        " vs " + std::to_string(expected.size()) + ")");
    });

    run.run("carrier_decomposition", [&](CheckResult&) {
        // The constructor verifies the isomorphism and throws on any defect.
        size_t limit = std::min<size_t>(prisms.size(), 25);
        for (size_t i = 0; i < limit; ++i) {
            if (prisms[i].crossing_hyperplanes.empty()) continue;
            carrier_intersection_decomposition(X, prisms[i].crossing_hyperplanes,
                                               prisms[i].vertices[0]);
        }
    });

    run.run("prism_absorption", [&](CheckResult& r) {
        for (const Prism& p : prisms)
            for (const Hyperplane& J : X.hyperplanes)
                if (X.crosses(J.id, p.vertices) && !is_subset(p.vertices, J.carrier))
                    return fail(r, "prism crossed by h" + std::to_string(J.id) +
                                       " not inside its carrier");
    });

    run.run("good_prism", [&](CheckResult& r) {
        // Every prism inside a carrier extends, within the carrier, to a
        // prism crossed by the hyperplane.
        std::vector<Prism> sample = prisms;
        size_t clique_limit = std::min<size_t>(X.cliques.size(), 10);
        for (size_t i = 0; i < clique_limit; ++i)
            for (Prism& p : prisms_through(X, X.cliques[i])) sample.push_back(std::move(p));
        for (const Prism& p : sample) {
            if (p.crossing_hyperplanes.empty()) continue;
            for (const Hyperplane& J : X.hyperplanes) {
                if (!is_subset(p.vertices, J.carrier)) continue;
                auto family = p.crossing_hyperplanes;
                if (std::find(family.begin(), family.end(), J.id) != family.end()) continue;
                family.push_back(J.id);
                std::sort(family.begin(), family.end());
                for (size_t a = 0; a < family.size(); ++a)
                    for (size_t b = a + 1; b < family.size(); ++b)
                        if (!X.transverse[family[a]][family[b]])
                            return fail(r, "family of prism in carrier of h" +
                                               std::to_string(J.id) + " not transverse to it");
                VertexId o = p.vertices[0];
                auto Q = prism_slice_bfs(X, family, o);
                if (!is_subset(p.vertices, Q) || !is_subset(Q, J.carrier) ||
                    !X.crosses(J.id, Q))
                    return fail(r, "no extension inside carrier of h" + std::to_string(J.id));
            }
        }
    });

    // (f) Contact graph connected; crossing graph connected iff 2-connected.
    run.run("contact_connected", [&](CheckResult& r) {
        if (no_hyperplanes) return skip(r, "no hyperplanes");
        int c = complex_components(hyperplane_complex(X, HyperplaneComplexKind::Contact));
        if (c != 1) fail(r, std::to_string(c) + " components");
    });

    run.run("crossing_connected_iff", [&](CheckResult& r) {
        if (no_hyperplanes) return skip(r, "no hyperplanes");
        int c = complex_components(hyperplane_complex(X, HyperplaneComplexKind::Crossing));
        bool expect = two_connected(X.g);
        if ((c == 1) != expect)
            fail(r, std::to_string(c) + " components, cut vertices " +
                        (expect ? "absent" : "present"));
    });

    return report;
}

namespace {

struct CorpusEntry {
    std::string name;
    std::function<QMGraph()> build;
};

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_index_edges(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_index_edges(leaves + 1, edges);
}

Graph triangle_chain(int k) {
    // k triangles in a row, consecutive ones sharing a vertex.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        int base = 2 * i;
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base, base + 2);
        edges.emplace_back(base + 1, base + 2);
    }
    return Graph::from_index_edges(2 * k + 1, edges);
}

std::vector<CorpusEntry> corpus_entries(const CorpusSpec& spec) {
    std::vector<CorpusEntry> entries;
    auto add = [&](std::string name, std::function<QMGraph()> build) {
        entries.push_back({std::move(name), std::move(build)});
    };
    for (int n = 2; n <= 8; ++n)
        add("path" + std::to_string(n), [n] { return analyze(path_graph(n)); });
    for (int l = 3; l <= 6; ++l)
        add("star" + std::to_string(l), [l] { return analyze(star_graph(l)); });
    for (int k = 1; k <= 4; ++k)
        add("trichain" + std::to_string(k), [k] { return analyze(triangle_chain(k)); });
    std::vector<std::vector<int>> hammings = {{2, 2}, {3, 2}, {2, 2, 2}, {3, 3},
                                              {4, 3}, {2, 2, 3}, {3, 3, 2}, {4},
                                              {5}, {2, 2, 2, 2}, {6, 2}, {3, 2, 2}};
    // Large instances close to the vertex bound.
    for (const auto& s : std::vector<std::vector<int>>{
             {10, 10}, {5, 5, 4}, {6, 6, 5}, {4, 4, 4, 3}, {7, 4, 2}, {12, 4, 4}})
        if (std::accumulate(s.begin(), s.end(), 1, std::multiplies<>()) <= spec.max_vertices)
            hammings.push_back(s);
    for (const auto& s : hammings) {
        std::string name = "hamming";
        for (int f : s) name += "_" + std::to_string(f);
        add(name, [s] { return generate_hamming(s); });
    }
    add("amalgam_sq_sq_vertex", [] {
        auto a = generate_hamming({2, 2});
        return generate_amalgam(a, a, {0}, {0});
    });
    add("amalgam_h32_sq_vertex", [] {
        return generate_amalgam(generate_hamming({3, 2}), generate_hamming({2, 2}), {0}, {0});
    });
    add("amalgam_sq_sq_edge", [] {
        auto a = generate_hamming({2, 2});
        VertexSet side = gated_hull(a, {0, a.g.neighbors(0)[0]});
        return generate_amalgam(a, a, side, side);
    });
    int i = 0;
    while (static_cast<int>(entries.size()) < spec.count) {
        std::uint64_t s = spec.seed + static_cast<std::uint64_t>(i++);
        RandomGenParams params;
        params.max_vertices = spec.max_vertices;
        if (i % 2 == 0) {
            params.steps = 5;
            params.max_factor = 4;
        }
        add("random_seed" + std::to_string(s), [s, params] { return generate_random(s, params); });
    }
    return entries;
}

}  // namespace

CorpusReport run_corpus(const CorpusSpec& spec) {
    CorpusReport out;
    auto entries = corpus_entries(spec);
    std::vector<std::future<TheoremReport>> futures;
    for (const auto& e : entries)
        futures.push_back(std::async(std::launch::async, [&spec, &e] {
            TheoremReport rep;
            rep.graph_name = e.name;
            QMGraph X;
            try {
                X = e.build();
            } catch (const std::exception& ex) {
                CheckResult r;
                r.id = "generate";
                r.status = CheckStatus::Skipped;
                r.witness = ex.what();
                rep.checks.push_back(std::move(r));
                return rep;
            }
            std::vector<GatedFamily> families;
            for (FamilyChoice c : spec.families) families.push_back(build_family(X, c));
            rep = verify_graph(X, families, spec.max_degree);
            rep.graph_name = e.name;
            return rep;
        }));
    std::ostringstream text;
    text << "corpus seed=" << spec.seed << " count=" << entries.size() << "\n";
    for (auto& f : futures) {
        TheoremReport rep = f.get();
        text << "graph " << rep.graph_name << "\n";
        for (const auto& line : render_report(rep)) text << "  " << line << "\n";
        for (const auto& c : rep.checks) {
            if (c.status == CheckStatus::Fail) ++out.failures;
            if (c.status == CheckStatus::Skipped) ++out.skipped;
        }
        out.entries.push_back(std::move(rep));
    }
    text << "failures=" << out.failures << " skipped_checks=" << out.skipped << "\n";
    text << "result: " << (out.failures == 0 ? "PASS" : "FAIL") << "\n";
    out.text = text.str();
    return out;
}

RaagVerdict raag_verdict(const Graph& g1, const Graph& g2, RaagInvariant invariant) {
    for (const Graph* g : {&g1, &g2}) {
        auto dist = g->bfs_distances(0);
        for (int d : dist)
            if (d < 0) throw std::invalid_argument("input graph is disconnected");
    }
    if (invariant == RaagInvariant::Flag) {
        for (const Graph* g : {&g1, &g2})
            for (VertexId u = 0; u < g->n(); ++u)
                for (VertexId v = 0; v < g->n(); ++v) {
                    if (u == v || g->adjacent(u, v)) continue;
                    auto link = neighborhood(*g, u, NeighborhoodKind::Link);
                    auto star = neighborhood(*g, v, NeighborhoodKind::Star);
                    if (is_subset(link, star))
                        throw std::invalid_argument(
                            "flag mode refused: link(" + g->label(u) + ") inside star(" +
                            g->label(v) + ")");
                }
    }
    auto build = [&](const Graph& g) {
        return invariant == RaagInvariant::Flag ? flag_completion(g) : join_complex(g);
    };
    RaagVerdict v;
    v.sig1 = homology(build(g1), true);
    v.sig2 = homology(build(g2), true);
    auto cmp = compare_wedge_supports(wedge_support(v.sig1), wedge_support(v.sig2));
    v.distinguished = cmp.distinguished;
    v.degree = cmp.degree;
    if (!v.distinguished)
        v.verdict = "not distinguished by this invariant";
    else if (invariant == RaagInvariant::Commensurability)
        v.verdict = "distinguished: not commensurable";
    else
        v.verdict = "distinguished: not quasi-isometric";
    return v;
}

std::vector<std::string> render_report(const TheoremReport& report, bool with_times) {
    std::vector<std::string> lines;
    for (const auto& c : report.checks) {
        std::string line = "check " + c.id + ": ";
        switch (c.status) {
            case CheckStatus::Pass: line += "pass"; break;
            case CheckStatus::Fail: line += "FAIL -- " + c.witness; break;
            case CheckStatus::Skipped: line += "skipped -- " + c.witness; break;
        }
        if (with_times) {
            std::ostringstream t;
            t << " (" << c.seconds << "s)";
            line += t.str();
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace qmh
