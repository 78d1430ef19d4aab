#include "qmh/gp.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace qmh {

GPPresentation make_presentation(Graph g, std::vector<long> orders) {
    if (static_cast<int>(orders.size()) != g.n())
        throw std::invalid_argument("order list size mismatch");
    for (long o : orders)
        if (o == 1 || o < 0) throw std::invalid_argument("vertex group order must be 0 or >= 2");
    return GPPresentation{std::move(g), std::move(orders)};
}

VertexSet support(const NormalForm& g) {
    VertexSet s;
    for (const Syllable& syl : g.syllables) s.push_back(syl.v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::string render(const GPPresentation& pres, const NormalForm& g) {
    if (g.is_identity()) return "1";
    std::string out;
    for (const Syllable& s : g.syllables) {
        if (!out.empty()) out += ".";
        out += pres.graph.label(s.v);
        if (s.e != 1) out += "^" + std::to_string(s.e);
    }
    return out;
}

namespace {

long normalize_exp(const GPPresentation& pres, VertexId v, long e) {
    long n = pres.order[v];
    if (n == 0) return e;
    e %= n;
    if (e < 0) e += n;
    return e;
}

bool commute(const GPPresentation& pres, VertexId a, VertexId b) {
    return a == b || pres.graph.adjacent(a, b);
}

}  // namespace

NormalForm reduce(const GPPresentation& pres, std::vector<Syllable> word) {
    for (Syllable& s : word) {
        if (s.v < 0 || s.v >= pres.graph.n()) throw std::invalid_argument("unknown vertex");
        s.e = normalize_exp(pres, s.v, s.e);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        // Drop trivial syllables.
        for (size_t i = 0; i < word.size();) {
            if (word[i].e == 0) {
                word.erase(word.begin() + i);
                changed = true;
            } else {
                ++i;
            }
        }
        // Merge same-vertex syllables across commuting intervals.
        for (size_t i = 0; i < word.size() && !changed; ++i)
            for (size_t j = i + 1; j < word.size(); ++j) {
                if (word[j].v != word[i].v) {
                    if (!commute(pres, word[i].v, word[j].v)) break;
                    continue;
                }
                word[i].e = normalize_exp(pres, word[i].v, word[i].e + word[j].e);
                word.erase(word.begin() + j);
                changed = true;
                break;
            }
    }
    // Lexicographically least shuffle: repeatedly pull the least movable
    // syllable to the front.
    std::vector<Syllable> out;
    while (!word.empty()) {
        size_t best = word.size();
        for (size_t i = 0; i < word.size(); ++i) {
            bool movable = true;
            for (size_t k = 0; k < i; ++k)
                if (!commute(pres, word[k].v, word[i].v)) {
                    movable = false;
                    break;
                }
            if (movable && (best == word.size() || word[i].v < word[best].v)) best = i;
        }
        out.push_back(word[best]);
        word.erase(word.begin() + best);
    }
    return NormalForm{std::move(out)};
}

NormalForm gp_multiply(const GPPresentation& pres, const NormalForm& x, const NormalForm& y) {
    std::vector<Syllable> word = x.syllables;
    word.insert(word.end(), y.syllables.begin(), y.syllables.end());
    return reduce(pres, std::move(word));
}

NormalForm gp_invert(const GPPresentation& pres, const NormalForm& x) {
    std::vector<Syllable> word;
    for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it)
        word.push_back({it->v, -it->e});
    return reduce(pres, std::move(word));
}

bool parabolic_membership(const GPPresentation&, const NormalForm& g, const VertexSet& Lambda) {
    return is_subset(support(g), Lambda);
}

ParabolicCoset coset_canonical(const GPPresentation& pres, const NormalForm& g,
                               const VertexSet& Lambda) {
    std::vector<Syllable> word = reduce(pres, g.syllables).syllables;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = word.size(); i-- > 0;) {
            if (!set_contains(Lambda, word[i].v)) continue;
            bool extremal = true;
            for (size_t k = i + 1; k < word.size(); ++k)
                if (!commute(pres, word[i].v, word[k].v)) {
                    extremal = false;
                    break;
                }
            if (extremal) {
                word.erase(word.begin() + i);
                changed = true;
                break;
            }
        }
    }
    ParabolicCoset c;
    c.support = Lambda;
    c.rep = reduce(pres, std::move(word));
    return c;
}

bool same_coset(const GPPresentation& pres, const NormalForm& g, const NormalForm& h,
                const VertexSet& Lambda) {
    bool by_rep = coset_canonical(pres, g, Lambda).rep == coset_canonical(pres, h, Lambda).rep;
    bool by_supp =
        parabolic_membership(pres, gp_multiply(pres, gp_invert(pres, g), h), Lambda);
    if (by_rep != by_supp) throw std::logic_error("coset equality tests disagree");
    return by_rep;
}

DoubleCosetSplit double_coset_reduce(const GPPresentation& pres, const VertexSet& Lambda1,
                                     const NormalForm& k, const VertexSet& Lambda2) {
    std::vector<Syllable> word = reduce(pres, k.syllables).syllables;
    std::vector<Syllable> left, right;  // a accumulates in order; b in reverse
    bool changed = true;
    while (changed) {
        changed = false;
        // Right-extremal syllables with vertex in Lambda2 move into b.
        for (size_t i = word.size(); i-- > 0;) {
            if (!set_contains(Lambda2, word[i].v)) continue;
            bool extremal = true;
            for (size_t j = i + 1; j < word.size(); ++j)
                if (!commute(pres, word[i].v, word[j].v)) {
                    extremal = false;
                    break;
                }
            if (extremal) {
                right.insert(right.begin(), word[i]);
                word.erase(word.begin() + i);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // Left-extremal syllables with vertex in Lambda1 move into a.
        for (size_t i = 0; i < word.size(); ++i) {
            if (!set_contains(Lambda1, word[i].v)) continue;
            bool extremal = true;
            for (size_t j = 0; j < i; ++j)
                if (!commute(pres, word[i].v, word[j].v)) {
                    extremal = false;
                    break;
                }
            if (extremal) {
                left.push_back(word[i]);
                word.erase(word.begin() + i);
                changed = true;
                break;
            }
        }
    }
    DoubleCosetSplit out;
    out.a = reduce(pres, std::move(left));
    out.m = reduce(pres, std::move(word));
    out.b = reduce(pres, std::move(right));
    return out;
}

ConjugateIntersection conjugate_parabolic_intersection(const GPPresentation& pres,
                                                       const NormalForm& g,
                                                       const VertexSet& Lambda1,
                                                       const NormalForm& h,
                                                       const VertexSet& Lambda2) {
    NormalForm k = gp_multiply(pres, gp_invert(pres, g), h);
    DoubleCosetSplit s = double_coset_reduce(pres, Lambda1, k, Lambda2);
    ConjugateIntersection out;
    VertexSet xi = set_intersection(Lambda1, Lambda2);
    if (!s.m.is_identity()) {
        // Only directions commuting with the separating core survive.
        for (const Syllable& syl : s.m.syllables) {
            VertexSet link = neighborhood(pres.graph, syl.v, NeighborhoodKind::Link);
            xi = set_intersection(xi, link);
        }
    }
    out.xi = std::move(xi);
    out.p = gp_multiply(pres, g, s.a);
    return out;
}

bool parabolic_is_infinite(const GPPresentation& pres, const VertexSet& Xi) {
    if (Xi.empty()) return false;
    for (VertexId v : Xi)
        if (pres.order[v] == 0) return true;
    for (size_t i = 0; i < Xi.size(); ++i)
        for (size_t j = i + 1; j < Xi.size(); ++j)
            if (!pres.graph.adjacent(Xi[i], Xi[j])) return true;  // free product inside
    return false;  // finite direct product
}

GPHyperplane gp_hyperplane(const GPPresentation& pres, const NormalForm& g, VertexId u) {
    if (u < 0 || u >= pres.graph.n()) throw std::invalid_argument("unknown vertex");
    GPHyperplane H;
    H.label = u;
    H.carrier = coset_canonical(pres, g, neighborhood(pres.graph, u, NeighborhoodKind::Star));
    return H;
}

bool hyperplane_crosses_coset(const GPPresentation& pres, const GPHyperplane& H,
                              const ParabolicCoset& c) {
    if (!set_contains(c.support, H.label)) return false;
    NormalForm k = gp_multiply(pres, gp_invert(pres, H.carrier.rep), c.rep);
    DoubleCosetSplit s = double_coset_reduce(pres, H.carrier.support, k, c.support);
    return s.m.is_identity();
}

bool cic_simplex_test(const GPPresentation& pres, const std::vector<ParabolicCoset>& cosets) {
    if (cosets.empty()) throw std::invalid_argument("empty coset list");
    NormalForm p = cosets[0].rep;
    VertexSet xi = cosets[0].support;
    for (size_t i = 1; i < cosets.size(); ++i) {
        ConjugateIntersection ci =
            conjugate_parabolic_intersection(pres, p, xi, cosets[i].rep, cosets[i].support);
        p = std::move(ci.p);
        xi = std::move(ci.xi);
    }
    return parabolic_is_infinite(pres, xi);
}

std::vector<NormalForm> gp_enumerate(const GPPresentation& pres, int max_len, long exp_bound,
                                     std::size_t guard) {
    std::set<NormalForm> seen;
    std::queue<NormalForm> q;
    NormalForm id;
    seen.insert(id);
    q.push(id);
    std::vector<std::pair<VertexId, long>> gens;
    for (VertexId v = 0; v < pres.graph.n(); ++v) {
        long n = pres.order[v];
        if (n == 0) {
            for (long e = 1; e <= exp_bound; ++e) {
                gens.emplace_back(v, e);
                gens.emplace_back(v, -e);
            }
        } else {
            for (long e = 1; e < n; ++e) gens.emplace_back(v, e);
        }
    }
    while (!q.empty()) {
        NormalForm g = q.front();
        q.pop();
        if (static_cast<int>(g.length()) >= max_len) continue;
        for (auto [v, e] : gens) {
            std::vector<Syllable> w = g.syllables;
            w.push_back({v, e});
            NormalForm h = reduce(pres, std::move(w));
            if (static_cast<int>(h.length()) > max_len) continue;
            bool in_bounds = true;
            for (const Syllable& s : h.syllables)
                if (pres.order[s.v] == 0 && (s.e > exp_bound || s.e < -exp_bound))
                    in_bounds = false;
            if (!in_bounds) continue;
            if (seen.insert(h).second) {
                if (seen.size() > guard) throw std::length_error("enumeration guard exceeded");
                q.push(h);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

CICFragment cic_fragment(const GPPresentation& pres, const std::vector<VertexSet>& supports,
                         int radius, int max_dim, long exp_bound, std::size_t guard) {
    if (!pres.graph.is_connected()) throw std::invalid_argument("defining graph disconnected");
    if (radius < 0) throw std::invalid_argument("negative radius");
    CICFragment frag;
    frag.radius = radius;
    std::set<ParabolicCoset> verts;
    // A coset rep of syllable length <= radius is reachable from an element of
    // length <= radius; conversely stripping only shortens, so enumerating
    // elements of length <= radius finds every such coset.
    for (const NormalForm& g : gp_enumerate(pres, radius, exp_bound, guard * 40)) {
        for (const VertexSet& L : supports) {
            ParabolicCoset c = coset_canonical(pres, g, L);
            if (c.rep.length() <= static_cast<size_t>(radius)) verts.insert(std::move(c));
        }
        if (verts.size() > guard) throw std::length_error("fragment guard exceeded");
    }
    frag.vertices.assign(verts.begin(), verts.end());
    const int n = static_cast<int>(frag.vertices.size());

    // Simplices are downward closed, so grow them level by level.
    std::vector<std::vector<int>> current;  // (k+1)-subsets that pass the test
    for (int i = 0; i < n; ++i) current.push_back({i});
    std::vector<std::vector<std::vector<int>>> levels{current};
    for (int dim = 1; dim <= max_dim && !current.empty(); ++dim) {
        std::vector<std::vector<int>> next;
        std::set<std::vector<int>> dedup;
        for (const auto& face : current)
            for (int cand = face.back() + 1; cand < n; ++cand) {
                std::vector<int> bigger = face;
                bigger.push_back(cand);
                if (!dedup.insert(bigger).second) continue;
                std::vector<ParabolicCoset> sel;
                for (int i : bigger) sel.push_back(frag.vertices[i]);
                if (cic_simplex_test(pres, sel)) next.push_back(std::move(bigger));
            }
        current = next;
        levels.push_back(std::move(next));
    }
    // Maximal faces across levels.
    std::vector<std::vector<int>> all;
    for (const auto& lvl : levels) all.insert(all.end(), lvl.begin(), lvl.end());
    for (const auto& f : all) {
        bool contained = false;
        for (const auto& g : all)
            if (&f != &g && f.size() < g.size() &&
                std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        if (!contained) frag.maximal_simplices.push_back(f);
    }
    std::sort(frag.maximal_simplices.begin(), frag.maximal_simplices.end());
    return frag;
}

QMBall qm_ball(const GPPresentation& pres, int r, std::size_t guard) {
    if (r < 1) throw std::invalid_argument("radius must be >= 1");
    for (long o : pres.order)
        if (o == 0) throw std::invalid_argument("qm_ball needs finite vertex groups");
    std::vector<NormalForm> elems = gp_enumerate(pres, r, 0, guard);
    std::sort(elems.begin(), elems.end());
    std::vector<std::string> labels;
    for (const NormalForm& g : elems) labels.push_back(render(pres, g));
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j) {
            NormalForm d = gp_multiply(pres, gp_invert(pres, elems[i]), elems[j]);
            if (d.length() == 1) edges.emplace_back(labels[i], labels[j]);
        }
    QMBall ball;
    ball.graph = Graph(labels, edges);
    ball.trust_radius = r - 2;
    ball.elements = std::move(elems);
    return ball;
}

}  // namespace qmh
