#include "qmh/qm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace qmh {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& hosts,
                                          const std::set<Edge>& removed) {
    std::vector<VertexSet> comps;
    std::vector<char> in_host(g.n(), 0), seen(g.n(), 0);
    for (VertexId v : hosts) in_host[v] = 1;
    for (VertexId s : hosts) {
        if (seen[s]) continue;
        VertexSet comp;
        std::queue<VertexId> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            comp.push_back(u);
            for (VertexId v : g.neighbors(u)) {
                if (!in_host[v] || seen[v]) continue;
                if (removed.count(make_edge(u, v))) continue;
                seen[v] = 1;
                q.push(v);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

}  // namespace

int QMGraph::edge_index(Edge e) const {
    auto it = std::lower_bound(edge_list.begin(), edge_list.end(), e);
    if (it == edge_list.end() || *it != e) throw std::invalid_argument("edge not in graph");
    return static_cast<int>(it - edge_list.begin());
}

bool QMGraph::crosses(int hp, const VertexSet& Y) const {
    for (const Edge& e : hyperplanes[hp].edges)
        if (set_contains(Y, e.a) && set_contains(Y, e.b)) return true;
    return false;
}

std::vector<int> QMGraph::hyperplanes_crossing(const VertexSet& Y) const {
    std::vector<int> out;
    for (const auto& hp : hyperplanes)
        if (crosses(hp.id, Y)) out.push_back(hp.id);
    return out;
}

QMGraph compute_hyperplanes(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("disconnected input");
    QMGraph X;
    X.g = g;
    X.edge_list = g.edges();
    std::sort(X.edge_list.begin(), X.edge_list.end());
    const int m = static_cast<int>(X.edge_list.size());
    auto eidx = [&](VertexId u, VertexId v) {
        Edge e = make_edge(u, v);
        return static_cast<int>(std::lower_bound(X.edge_list.begin(), X.edge_list.end(), e) -
                                X.edge_list.begin());
    };

    UnionFind uf(m);
    // Triangles: all three edges fall in one class.
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.neighbors(u)) {
            if (v <= u) continue;
            for (VertexId w : g.neighbors(u)) {
                if (w <= v || !g.adjacent(v, w)) continue;
                uf.unite(eidx(u, v), eidx(u, w));
                uf.unite(eidx(u, v), eidx(v, w));
            }
        }
    // 4-cycles u-a-w-b (induced or not): opposite edges unified.
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId w = u + 1; w < g.n(); ++w) {
            VertexSet common;
            for (VertexId x : g.neighbors(u))
                if (x != w && g.adjacent(x, w)) common.push_back(x);
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j) {
                    VertexId a = common[i], b = common[j];
                    X.squares.push_back({u, a, w, b});
                    uf.unite(eidx(u, a), eidx(w, b));
                    uf.unite(eidx(a, w), eidx(b, u));
                }
        }

    // Number classes in order of least edge.
    X.edge_hyperplane.assign(m, -1);
    std::map<int, int> class_id;
    for (int e = 0; e < m; ++e) {
        int root = uf.find(e);
        auto [it, fresh] = class_id.emplace(root, static_cast<int>(class_id.size()));
        X.edge_hyperplane[e] = it->second;
    }
    const int h = static_cast<int>(class_id.size());
    X.hyperplanes.resize(h);
    for (int j = 0; j < h; ++j) X.hyperplanes[j].id = j;
    for (int e = 0; e < m; ++e)
        X.hyperplanes[X.edge_hyperplane[e]].edges.push_back(X.edge_list[e]);

    // Geometry per hyperplane.
    for (auto& J : X.hyperplanes) {
        std::set<Edge> removed(J.edges.begin(), J.edges.end());
        std::set<VertexId> carrier;
        for (const Edge& e : J.edges) {
            carrier.insert(e.a);
            carrier.insert(e.b);
        }
        J.carrier.assign(carrier.begin(), carrier.end());
        J.sectors = components_without(g, g.all_vertices(), removed);
        J.fibres = components_without(g, J.carrier, removed);
        J.sector_of.assign(g.n(), -1);
        for (size_t s = 0; s < J.sectors.size(); ++s)
            for (VertexId v : J.sectors[s]) J.sector_of[v] = static_cast<int>(s);
    }

    // Transversality from the square list.
    X.transverse.assign(h, std::vector<char>(h, 0));
    for (const auto& sq : X.squares) {
        int j1 = X.edge_hyperplane[eidx(sq[0], sq[1])];
        int j2 = X.edge_hyperplane[eidx(sq[1], sq[2])];
        if (j1 != j2) X.transverse[j1][j2] = X.transverse[j2][j1] = 1;
    }

    X.dist.resize(g.n());
    for (VertexId v = 0; v < g.n(); ++v) X.dist[v] = g.bfs_distances(v);
    X.cliques = maximal_cliques(g);
    return X;
}

PairClass classify_pair(const QMGraph& X, int j, int k) {
    if (j == k) throw std::invalid_argument("identical hyperplanes");
    PairClass pc;
    const auto& J = X.hyperplanes.at(j);
    const auto& K = X.hyperplanes.at(k);
    bool contact = !set_intersection(J.carrier, K.carrier).empty();
    pc.in_contact = contact;
    if (X.transverse[j][k])
        pc.relation = PairRelation::Transverse;
    else if (contact)
        pc.relation = PairRelation::Tangent;
    else
        pc.relation = PairRelation::Remote;
    for (const auto& C : X.cliques)
        if (is_subset(C, J.carrier) && is_subset(C, K.carrier)) {
            pc.contiguous = true;
            break;
        }
    return pc;
}

GateResult gate(const QMGraph& X, VertexId x, const VertexSet& Y) {
    if (Y.empty()) throw std::invalid_argument("empty target");
    GateResult r;
    VertexId best = -1;
    int bestd = -1;
    bool unique = true;
    for (VertexId y : Y) {
        int d = X.dist[x][y];
        if (best < 0 || d < bestd) {
            best = y;
            bestd = d;
            unique = true;
        } else if (d == bestd) {
            unique = false;
        }
    }
    r.gate = best;
    if (!unique) {
        r.gated = false;
        r.witness = "no unique nearest vertex of target from " + X.g.label(x);
        return r;
    }
    for (VertexId z : Y)
        if (X.dist[x][z] != bestd + X.dist[best][z]) {
            r.gated = false;
            r.witness = "geodesic from " + X.g.label(x) + " to " + X.g.label(z) +
                        " does not factor through " + X.g.label(best);
            return r;
        }
    return r;
}

VertexSet gate_image(const QMGraph& X, const VertexSet& Y, const VertexSet& Z) {
    std::set<VertexId> image;
    for (VertexId y : Y) {
        GateResult r = gate(X, y, Z);
        if (!r.gated) throw std::invalid_argument("non-gated input: " + r.witness);
        image.insert(r.gate);
    }
    return VertexSet(image.begin(), image.end());
}

GatedVerdict is_gated(const QMGraph& X, const VertexSet& Y, bool cross_check) {
    GatedVerdict v;
    if (Y.empty()) {
        v.witness = "empty set";
        return v;
    }
    // Connectivity of the induced subgraph.
    std::vector<char> in_y(X.g.n(), 0);
    for (VertexId u : Y) in_y[u] = 1;
    {
        std::queue<VertexId> q;
        std::vector<char> seen(X.g.n(), 0);
        q.push(Y[0]);
        seen[Y[0]] = 1;
        size_t reached = 1;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId w : X.g.neighbors(u))
                if (in_y[w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != Y.size()) {
            v.witness = "induced subgraph disconnected";
            return v;
        }
    }
    // Clique absorption: a maximal clique with an edge inside Y lies in Y.
    for (const auto& C : X.cliques) {
        bool has_edge = false;
        for (size_t i = 0; i < C.size() && !has_edge; ++i)
            for (size_t j = i + 1; j < C.size(); ++j)
                if (in_y[C[i]] && in_y[C[j]]) {
                    has_edge = true;
                    break;
                }
        if (has_edge && !is_subset(C, Y)) {
            v.witness = "clique absorption fails at clique containing " + X.g.label(C[0]);
            return v;
        }
    }
    // Local convexity: a 4-cycle with two adjacent edges in Y lies in Y.
    for (const auto& sq : X.squares) {
        const int c[4] = {sq[0], sq[1], sq[2], sq[3]};
        for (int i = 0; i < 4; ++i) {
            VertexId prev = c[(i + 3) % 4], at = c[i], next = c[(i + 1) % 4];
            if (in_y[prev] && in_y[at] && in_y[next] && !in_y[c[(i + 2) % 4]]) {
                v.witness = "4-cycle through " + X.g.label(at) + " not contained";
                return v;
            }
        }
    }
    if (cross_check) {
        for (VertexId x = 0; x < X.g.n(); ++x) {
            GateResult r = gate(X, x, Y);
            if (!r.gated) {
                v.witness = "definition cross-check: " + r.witness;
                return v;
            }
        }
    }
    v.gated = true;
    return v;
}

VertexSet gated_hull(const QMGraph& X, const VertexSet& S) {
    if (S.empty()) throw std::invalid_argument("empty seed");
    std::vector<char> in(X.g.n(), 0);
    for (VertexId v : S) in[v] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        VertexSet cur;
        for (VertexId v = 0; v < X.g.n(); ++v)
            if (in[v]) cur.push_back(v);
        // Interval completion.
        for (VertexId u : cur)
            for (VertexId v : cur) {
                if (u >= v) continue;
                for (VertexId w = 0; w < X.g.n(); ++w)
                    if (!in[w] && X.dist[u][w] + X.dist[w][v] == X.dist[u][v]) {
                        in[w] = 1;
                        changed = true;
                    }
            }
        // Clique absorption.
        for (const auto& C : X.cliques) {
            bool has_edge = false;
            for (size_t i = 0; i < C.size() && !has_edge; ++i)
                for (size_t j = i + 1; j < C.size(); ++j)
                    if (in[C[i]] && in[C[j]]) {
                        has_edge = true;
                        break;
                    }
            if (has_edge)
                for (VertexId w : C)
                    if (!in[w]) {
                        in[w] = 1;
                        changed = true;
                    }
        }
        // 4-cycle completion.
        for (const auto& sq : X.squares) {
            const int c[4] = {sq[0], sq[1], sq[2], sq[3]};
            for (int i = 0; i < 4; ++i)
                if (in[c[(i + 3) % 4]] && in[c[i]] && in[c[(i + 1) % 4]] && !in[c[(i + 2) % 4]]) {
                    in[c[(i + 2) % 4]] = 1;
                    changed = true;
                }
        }
    }
    VertexSet out;
    for (VertexId v = 0; v < X.g.n(); ++v)
        if (in[v]) out.push_back(v);
    GatedVerdict gv = is_gated(X, out);
    if (!gv.gated) throw std::runtime_error("gated_hull closure not gated: " + gv.witness);
    return out;
}

namespace {

VertexSet clique_of_hyperplane_at(const QMGraph& X, int hp, VertexId o) {
    VertexSet C{o};
    for (VertexId z : X.g.neighbors(o))
        if (X.hyperplane_of(make_edge(o, z)) == hp) C.push_back(z);
    std::sort(C.begin(), C.end());
    return C;
}

VertexSet fibre_through(const QMGraph& X, int hp, VertexId o) {
    for (const auto& F : X.hyperplanes[hp].fibres)
        if (set_contains(F, o)) return F;
    throw std::invalid_argument("vertex not in carrier of hyperplane");
}

}  // namespace

CarrierDecomposition carrier_intersection_decomposition(const QMGraph& X,
                                                        const std::vector<int>& hyperplanes,
                                                        VertexId o) {
    if (hyperplanes.empty()) throw std::invalid_argument("empty hyperplane family");
    for (size_t i = 0; i < hyperplanes.size(); ++i)
        for (size_t j = i + 1; j < hyperplanes.size(); ++j)
            if (!X.transverse[hyperplanes[i]][hyperplanes[j]])
                throw std::invalid_argument("hyperplanes not pairwise transverse: " +
                                            std::to_string(hyperplanes[i]) + "," +
                                            std::to_string(hyperplanes[j]));
    CarrierDecomposition d;
    VertexSet domain = X.hyperplanes[hyperplanes[0]].carrier;
    for (size_t i = 1; i < hyperplanes.size(); ++i)
        domain = set_intersection(domain, X.hyperplanes[hyperplanes[i]].carrier);
    if (!set_contains(domain, o))
        throw std::invalid_argument("base vertex outside a carrier");
    d.domain = domain;
    d.base_fibre = fibre_through(X, hyperplanes[0], o);
    for (size_t i = 1; i < hyperplanes.size(); ++i)
        d.base_fibre = set_intersection(d.base_fibre, fibre_through(X, hyperplanes[i], o));
    for (int hp : hyperplanes) d.cliques.push_back(clique_of_hyperplane_at(X, hp, o));

    // Coordinates via gates; verified to be a graph isomorphism onto the product.
    std::map<std::vector<VertexId>, VertexId> seen;
    for (VertexId x : domain) {
        std::vector<VertexId> coord;
        GateResult rf = gate(X, x, d.base_fibre);
        if (!rf.gated) throw std::runtime_error("fibre not gated: " + rf.witness);
        coord.push_back(rf.gate);
        for (const auto& C : d.cliques) {
            GateResult rc = gate(X, x, C);
            if (!rc.gated) throw std::runtime_error("clique not gated: " + rc.witness);
            coord.push_back(rc.gate);
        }
        if (!seen.emplace(coord, x).second)
            throw std::runtime_error("carrier decomposition not injective");
        d.coordinates.push_back(std::move(coord));
    }
    // Surjectivity by cardinality.
    size_t expected = d.base_fibre.size();
    for (const auto& C : d.cliques) expected *= C.size();
    if (expected != domain.size())
        throw std::runtime_error("carrier decomposition not surjective");
    // Edge-by-edge: x ~ y iff coordinates differ in exactly one factor by an edge.
    for (size_t i = 0; i < domain.size(); ++i)
        for (size_t j = i + 1; j < domain.size(); ++j) {
            const auto &ci = d.coordinates[i], &cj = d.coordinates[j];
            int diffs = 0;
            bool edge_in_factor = false;
            for (size_t k = 0; k < ci.size(); ++k)
                if (ci[k] != cj[k]) {
                    ++diffs;
                    edge_in_factor = X.g.adjacent(ci[k], cj[k]);
                }
            bool product_edge = (diffs == 1) && edge_in_factor;
            bool graph_edge = X.g.adjacent(domain[i], domain[j]);
            if (product_edge != graph_edge)
                throw std::runtime_error("carrier decomposition not edge-preserving");
        }
    return d;
}

namespace {

// All maximal cliques of the transversality relation among hyperplane ids.
std::vector<std::vector<int>> maximal_transverse_families(const QMGraph& X) {
    const int h = static_cast<int>(X.hyperplanes.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            if (X.transverse[i][j]) edges.emplace_back(i, j);
    Graph tg = Graph::from_index_edges(h, edges);
    auto fams = maximal_cliques(tg);
    std::vector<std::vector<int>> out;
    for (auto& f : fams) out.emplace_back(f.begin(), f.end());
    return out;
}

Prism prism_from_family(const QMGraph& X, const std::vector<int>& family) {
    VertexSet inter = X.hyperplanes[family[0]].carrier;
    for (size_t i = 1; i < family.size(); ++i)
        inter = set_intersection(inter, X.hyperplanes[family[i]].carrier);
    if (inter.empty()) throw std::runtime_error("transverse family with empty carrier meet");
    VertexId o = inter[0];
    CarrierDecomposition d = carrier_intersection_decomposition(X, family, o);
    Prism p;
    p.crossing_hyperplanes = family;
    p.factor_cliques = d.cliques;
    // The prism is the slice with base-fibre coordinate o.
    for (size_t i = 0; i < d.domain.size(); ++i)
        if (d.coordinates[i][0] == o) p.vertices.push_back(d.domain[i]);
    std::sort(p.vertices.begin(), p.vertices.end());
    return p;
}

}  // namespace

std::vector<Prism> maximal_prisms(const QMGraph& X) {
    std::vector<Prism> out;
    if (X.g.n() == 1) {
        Prism p;
        p.vertices = {0};
        out.push_back(p);
        return out;
    }
    for (const auto& family : maximal_transverse_families(X)) {
        if (family.empty()) continue;
        out.push_back(prism_from_family(X, family));
    }
    std::sort(out.begin(), out.end(),
              [](const Prism& a, const Prism& b) { return a.vertices < b.vertices; });
    return out;
}

std::vector<Prism> prisms_through(const QMGraph& X, const VertexSet& C) {
    // C must be a maximal clique.
    if (std::find(X.cliques.begin(), X.cliques.end(), C) == X.cliques.end())
        throw std::invalid_argument("not a maximal clique");
    if (C.size() < 2) {
        Prism p;
        p.vertices = C;
        p.factor_cliques = {C};
        return {p};
    }
    const int jc = X.hyperplane_of(make_edge(C[0], C[1]));
    const VertexId o = C[0];
    std::vector<int> candidates;
    for (const auto& K : X.hyperplanes)
        if (K.id != jc && X.transverse[jc][K.id] && is_subset(C, K.carrier))
            candidates.push_back(K.id);
    std::vector<Prism> out;
    std::vector<int> chosen;
    std::function<void(size_t)> rec = [&](size_t start) {
        std::vector<int> family{jc};
        family.insert(family.end(), chosen.begin(), chosen.end());
        // The slice through o of the carrier intersection is the prism through C.
        CarrierDecomposition d = carrier_intersection_decomposition(X, family, o);
        Prism p;
        p.crossing_hyperplanes = family;
        p.factor_cliques = d.cliques;
        for (size_t i = 0; i < d.domain.size(); ++i)
            if (d.coordinates[i][0] == o) p.vertices.push_back(d.domain[i]);
        std::sort(p.vertices.begin(), p.vertices.end());
        out.push_back(std::move(p));
        for (size_t i = start; i < candidates.size(); ++i) {
            bool ok = true;
            for (int c : chosen)
                if (!X.transverse[c][candidates[i]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(candidates[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const Prism& a, const Prism& b) { return a.vertices < b.vertices; });
    return out;
}

ValidationReport validate_quasi_median(const Graph& g) {
    ValidationReport rep;
    if (!g.is_connected()) {
        rep.violations.push_back("graph disconnected");
        return rep;
    }
    const int n = g.n();
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = g.bfs_distances(v);

    // Induced K_{2,3}: nonadjacent u,v with three pairwise nonadjacent common neighbors.
    bool found_k23 = false;
    for (int u = 0; u < n && !found_k23; ++u)
        for (int v = u + 1; v < n && !found_k23; ++v) {
            if (g.adjacent(u, v)) continue;
            VertexSet common;
            for (VertexId x : g.neighbors(u))
                if (g.adjacent(x, v)) common.push_back(x);
            for (size_t i = 0; i < common.size() && !found_k23; ++i)
                for (size_t j = i + 1; j < common.size() && !found_k23; ++j)
                    for (size_t k = j + 1; k < common.size(); ++k)
                        if (!g.adjacent(common[i], common[j]) &&
                            !g.adjacent(common[i], common[k]) &&
                            !g.adjacent(common[j], common[k])) {
                            rep.violations.push_back("induced K_{2,3} at " + g.label(u) + "," +
                                                     g.label(v));
                            found_k23 = true;
                            break;
                        }
        }
    // Induced K4 minus an edge: adjacent a,b with nonadjacent common neighbors c,d.
    bool found_k4e = false;
    for (int a = 0; a < n && !found_k4e; ++a)
        for (VertexId b : g.neighbors(a)) {
            if (b <= a) continue;
            VertexSet common;
            for (VertexId x : g.neighbors(a))
                if (x != b && g.adjacent(x, b)) common.push_back(x);
            for (size_t i = 0; i < common.size() && !found_k4e; ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j])) {
                        rep.violations.push_back("induced K4-minus-edge at " + g.label(a) + "," +
                                                 g.label(b));
                        found_k4e = true;
                        break;
                    }
            if (found_k4e) break;
        }
    // Triangle condition.
    bool tc_fail = false;
    for (int u = 0; u < n && !tc_fail; ++u)
        for (int v = 0; v < n && !tc_fail; ++v)
            for (VertexId w : g.neighbors(v)) {
                if (w <= v) continue;
                int k = dist[u][v];
                if (k == 0 || dist[u][w] != k) continue;
                bool ok = false;
                for (VertexId x : g.neighbors(v))
                    if (g.adjacent(x, w) && dist[u][x] == k - 1) {
                        ok = true;
                        break;
                    }
                if (!ok) {
                    rep.violations.push_back("triangle condition fails for (" + g.label(u) + ";" +
                                             g.label(v) + "," + g.label(w) + ")");
                    tc_fail = true;
                    break;
                }
            }
    // Quadrangle condition.
    bool qc_fail = false;
    for (int u = 0; u < n && !qc_fail; ++u)
        for (int z = 0; z < n && !qc_fail; ++z) {
            int k = dist[u][z] - 1;
            if (k < 1) continue;
            const auto& nb = g.neighbors(z);
            for (size_t i = 0; i < nb.size() && !qc_fail; ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    VertexId v = nb[i], w = nb[j];
                    if (dist[u][v] != k || dist[u][w] != k || g.adjacent(v, w)) continue;
                    bool ok = false;
                    for (VertexId x : g.neighbors(v))
                        if (x != z && g.adjacent(x, w) && dist[u][x] == k - 1) {
                            ok = true;
                            break;
                        }
                    if (!ok) {
                        rep.violations.push_back("quadrangle condition fails for (" + g.label(u) +
                                                 ";" + g.label(v) + "," + g.label(w) + ";" +
                                                 g.label(z) + ")");
                        qc_fail = true;
                        break;
                    }
                }
        }

    // Hyperplane axioms require the local checks to pass first; run them anyway
    // so the report carries both kinds of violation.
    QMGraph X = compute_hyperplanes(g);
    bool sep_fail = false;
    for (const auto& J : X.hyperplanes)
        if (J.sectors.size() < 2) {
            rep.violations.push_back("hyperplane " + std::to_string(J.id) + " does not separate");
            sep_fail = true;
            break;
        }
    if (!sep_fail) {
        bool dist_fail = false;
        for (int u = 0; u < n && !dist_fail; ++u)
            for (int v = u + 1; v < n; ++v) {
                int sep = 0;
                for (const auto& J : X.hyperplanes)
                    if (J.sector_of[u] != J.sector_of[v]) ++sep;
                if (sep != dist[u][v]) {
                    rep.violations.push_back("distance(" + g.label(u) + "," + g.label(v) +
                                             ") != separating hyperplane count");
                    dist_fail = true;
                    break;
                }
            }
    }
    rep.passed = rep.violations.empty();
    return rep;
}

QMGraph analyze(const Graph& g) {
    QMGraph X = compute_hyperplanes(g);
    X.validation = validate_quasi_median(g);
    return X;
}

std::vector<VertexSet> canonical_star_covering(const QMGraph& X) {
    std::set<VertexSet> family;
    std::vector<Prism> prisms = maximal_prisms(X);
    for (const auto& C : X.cliques) {
        // Everything a prism touching C can reach; subprisms are inside
        // maximal ones, so maximal prisms suffice.
        VertexSet un = C;
        for (const auto& p : prisms)
            if (!set_intersection(p.vertices, C).empty()) un = set_union(un, p.vertices);
        family.insert(gated_hull(X, un));
    }
    return {family.begin(), family.end()};
}

}  // namespace qmh
