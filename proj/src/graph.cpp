#include "qmh/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace qmh {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
    std::map<std::string, VertexId> index;
    for (int i = 0; i < n(); ++i) {
        if (!index.emplace(labels_[i], i).second)
            throw std::invalid_argument("duplicate label: " + labels_[i]);
    }
    adj_.assign(n(), std::vector<char>(n(), 0));
    nbrs_.assign(n(), {});
    for (const auto& [la, lb] : edges) {
        auto ia = index.find(la);
        auto ib = index.find(lb);
        if (ia == index.end()) throw std::invalid_argument("unknown endpoint: " + la);
        if (ib == index.end()) throw std::invalid_argument("unknown endpoint: " + lb);
        VertexId u = ia->second, v = ib->second;
        if (u == v) throw std::invalid_argument("loop edge at " + la);
        if (!adj_[u][v]) {
            adj_[u][v] = adj_[v][u] = 1;
            nbrs_[u].push_back(v);
            nbrs_[v].push_back(u);
            ++edge_count_;
        }
    }
    for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

VertexId Graph::index_of(const std::string& label) const {
    for (int i = 0; i < n(); ++i)
        if (labels_[i] == label) return i;
    throw std::invalid_argument("unknown vertex: " + label);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < n(); ++u)
        for (VertexId v : nbrs_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

bool Graph::is_connected() const {
    if (n() == 0) return false;
    auto d = bfs_distances(0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

VertexSet Graph::all_vertices() const {
    VertexSet out(n());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

std::vector<int> Graph::bfs_distances(VertexId src) const {
    std::vector<int> dist(n(), -1);
    std::queue<VertexId> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (VertexId v : nbrs_[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

Graph Graph::from_index_edges(int n, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<std::string>* labels) {
    std::vector<std::string> ls;
    if (labels) {
        ls = *labels;
    } else {
        ls.reserve(n);
        for (int i = 0; i < n; ++i) ls.push_back("v" + std::to_string(i));
    }
    std::vector<std::pair<std::string, std::string>> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.emplace_back(ls.at(u), ls.at(v));
    return Graph(std::move(ls), es);
}

VertexSet neighborhood(const Graph& g, VertexId v, NeighborhoodKind kind) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("unknown vertex index");
    VertexSet out = g.neighbors(v);
    if (kind == NeighborhoodKind::Star) {
        out.push_back(v);
        std::sort(out.begin(), out.end());
    }
    return out;
}

namespace {

// Bron-Kerbosch with pivoting from the candidate/excluded union.
void bron_kerbosch(const Graph& g, VertexSet& R, VertexSet P, VertexSet X,
                   std::vector<VertexSet>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    VertexId pivot = -1;
    size_t best = 0;
    for (VertexId u : P) {
        size_t cnt = std::count_if(P.begin(), P.end(), [&](VertexId w) { return g.adjacent(u, w); });
        if (pivot < 0 || cnt >= best) {
            pivot = u;
            best = cnt;
        }
    }
    for (VertexId u : X) {
        size_t cnt = std::count_if(P.begin(), P.end(), [&](VertexId w) { return g.adjacent(u, w); });
        if (pivot < 0 || cnt > best) {
            pivot = u;
            best = cnt;
        }
    }
    VertexSet candidates;
    for (VertexId v : P)
        if (pivot < 0 || !g.adjacent(pivot, v)) candidates.push_back(v);
    for (VertexId v : candidates) {
        VertexSet P2, X2;
        for (VertexId w : P)
            if (g.adjacent(v, w)) P2.push_back(w);
        for (VertexId w : X)
            if (g.adjacent(v, w)) X2.push_back(w);
        R.push_back(v);
        std::sort(R.begin(), R.end());
        bron_kerbosch(g, R, std::move(P2), std::move(X2), out);
        R.erase(std::find(R.begin(), R.end(), v));
        P.erase(std::find(P.begin(), P.end(), v));
        X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet R;
    bron_kerbosch(g, R, g.all_vertices(), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<JoinDecomposition> join_decomposition(const Graph& g, const VertexSet& S) {
    if (S.empty()) throw std::invalid_argument("empty vertex set");
    if (S.size() == 1) return JoinDecomposition{{S}, true};
    // Components of the complement of the induced subgraph.
    const int m = static_cast<int>(S.size());
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int i = 0; i < m; ++i) {
        if (comp[i] >= 0) continue;
        std::queue<int> q;
        comp[i] = ncomp;
        q.push(i);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < m; ++v)
                if (comp[v] < 0 && u != v && !g.adjacent(S[u], S[v])) {
                    comp[v] = ncomp;
                    q.push(v);
                }
        }
        ++ncomp;
    }
    if (ncomp == 1) return std::nullopt;
    JoinDecomposition jd;
    jd.parts.assign(ncomp, {});
    for (int i = 0; i < m; ++i) jd.parts[comp[i]].push_back(S[i]);
    for (auto& p : jd.parts) std::sort(p.begin(), p.end());
    std::sort(jd.parts.begin(), jd.parts.end());
    return jd;
}

namespace {

bool is_join(const Graph& g, const VertexSet& S) {
    if (S.size() < 2) return false;
    auto jd = join_decomposition(g, S);
    return jd.has_value() && !jd->trivial;
}

}  // namespace

std::vector<VertexSet> maximal_joins(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("disconnected input");
    const int n = g.n();
    if (n > 26) throw std::invalid_argument("maximal_joins size guard exceeded");
    // Every join extends to a maximal one; seed from pairs and grow greedily,
    // then filter to inclusion-maximal by a final sweep over all candidates.
    std::set<VertexSet> joins;
    std::set<VertexSet> visited;
    std::function<void(VertexSet)> grow = [&](VertexSet S) {
        if (!visited.insert(S).second) return;
        bool extended = false;
        for (int v = 0; v < n; ++v) {
            if (set_contains(S, v)) continue;
            VertexSet T = S;
            T.insert(std::lower_bound(T.begin(), T.end(), v), v);
            if (is_join(g, T)) {
                extended = true;
                grow(std::move(T));
            }
        }
        if (!extended) joins.insert(std::move(S));
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (is_join(g, {u, v})) grow({u, v});
    std::vector<VertexSet> out;
    for (const auto& S : joins) {
        bool maximal = true;
        for (const auto& T : joins)
            if (S != T && is_subset(S, T)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(S);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BlockDecomposition blocks(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("disconnected input");
    const int n = g.n();
    BlockDecomposition out;
    if (n == 1) {
        out.blocks.push_back({0});
        return out;
    }
    // Hopcroft-Tarjan: iterative DFS collecting edge stacks per block.
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<Edge> estack;
    std::set<VertexId> cuts;
    int counter = 0;
    std::function<void(int)> dfs = [&](int u) {
        num[u] = low[u] = counter++;
        int children = 0;
        for (VertexId v : g.neighbors(u)) {
            if (num[v] < 0) {
                ++children;
                parent[v] = u;
                estack.push_back(make_edge(u, v));
                dfs(v);
                low[u] = std::min(low[u], low[v]);
                if ((parent[u] < 0 && children > 1) || (parent[u] >= 0 && low[v] >= num[u])) {
                    if (parent[u] >= 0) cuts.insert(u);
                    else cuts.insert(u);  // root with >1 children, handled below
                }
                if (low[v] >= num[u]) {
                    std::set<VertexId> verts;
                    Edge top = make_edge(u, v);
                    while (true) {
                        Edge e = estack.back();
                        estack.pop_back();
                        verts.insert(e.a);
                        verts.insert(e.b);
                        if (e == top) break;
                    }
                    out.blocks.emplace_back(verts.begin(), verts.end());
                }
            } else if (v != parent[u] && num[v] < num[u]) {
                estack.push_back(make_edge(u, v));
                low[u] = std::min(low[u], num[v]);
            }
        }
    };
    dfs(0);
    // Root cut-vertex rule: only a cut vertex when it has >1 DFS children.
    int root_children = 0;
    for (int v = 0; v < n; ++v)
        if (parent[v] == 0) ++root_children;
    if (root_children <= 1) cuts.erase(0);
    out.cut_vertices.assign(cuts.begin(), cuts.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

Graph cartesian_product(const std::vector<Graph>& factors) {
    if (factors.empty()) throw std::invalid_argument("empty factor list");
    for (const auto& f : factors)
        if (f.n() == 0) throw std::invalid_argument("empty factor");
    std::vector<std::vector<int>> tuples{{}};
    for (const auto& f : factors) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tuples)
            for (int v = 0; v < f.n(); ++v) {
                auto t2 = t;
                t2.push_back(v);
                next.push_back(std::move(t2));
            }
        tuples = std::move(next);
    }
    std::vector<std::string> labels;
    labels.reserve(tuples.size());
    for (const auto& t : tuples) {
        std::string s = "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += factors[i].label(t[i]);
        }
        s += ")";
        labels.push_back(std::move(s));
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < tuples.size(); ++i)
        for (size_t j = i + 1; j < tuples.size(); ++j) {
            int diff = -1;
            bool ok = true;
            for (size_t k = 0; k < factors.size(); ++k)
                if (tuples[i][k] != tuples[j][k]) {
                    if (diff >= 0) {
                        ok = false;
                        break;
                    }
                    diff = static_cast<int>(k);
                }
            if (ok && diff >= 0 && factors[diff].adjacent(tuples[i][diff], tuples[j][diff]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph::from_index_edges(static_cast<int>(tuples.size()), edges, &labels);
}

namespace {

bool extend_isomorphism(const Graph& g1, const Graph& g2, std::vector<VertexId>& map,
                        std::vector<char>& used, int depth) {
    const int n = g1.n();
    if (depth == n) return true;
    for (VertexId cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        if (g1.degree(depth) != g2.degree(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < depth; ++prev)
            if (g1.adjacent(depth, prev) != g2.adjacent(cand, map[prev])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[depth] = cand;
        used[cand] = 1;
        if (extend_isomorphism(g1, g2, map, used, depth + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<VertexId>> are_isomorphic(const Graph& g1, const Graph& g2,
                                                    int size_guard) {
    if (g1.n() > size_guard || g2.n() > size_guard)
        throw std::invalid_argument("isomorphism size guard exceeded");
    if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    auto degs = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g1) != degs(g2)) return std::nullopt;
    std::vector<VertexId> map(g1.n(), -1);
    std::vector<char> used(g1.n(), 0);
    if (extend_isomorphism(g1, g2, map, used, 0)) return map;
    return std::nullopt;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& a, VertexId v) {
    return std::binary_search(a.begin(), a.end(), v);
}

bool is_subset(const VertexSet& small, const VertexSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace qmh
