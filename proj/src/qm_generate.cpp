#include "qmh/qm.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qmh {

QMGraph generate_hamming(const std::vector<int>& clique_sizes) {
    if (clique_sizes.empty()) throw std::invalid_argument("no factors");
    for (int s : clique_sizes)
        if (s < 1) throw std::invalid_argument("factor size must be positive");
    auto clique = [](int k, char tag) {
        std::vector<std::string> labels;
        for (int i = 0; i < k; ++i) labels.push_back(std::string(1, tag) + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) edges.emplace_back(labels[i], labels[j]);
        return Graph(labels, edges);
    };
    std::vector<Graph> factors;
    for (size_t f = 0; f < clique_sizes.size(); ++f)
        factors.push_back(clique(clique_sizes[f], static_cast<char>('a' + f % 26)));
    return analyze(cartesian_product(factors));
}

QMGraph generate_amalgam(const QMGraph& left, const QMGraph& right,
                         const VertexSet& left_part, const VertexSet& right_part) {
    if (left_part.size() != right_part.size())
        throw std::invalid_argument("parts have different sizes");
    if (left_part.empty()) throw std::invalid_argument("empty gluing part");
    GatedVerdict lv = is_gated(left, left_part);
    if (!lv.gated) throw std::invalid_argument("left part not gated: " + lv.witness);
    GatedVerdict rv = is_gated(right, right_part);
    if (!rv.gated) throw std::invalid_argument("right part not gated: " + rv.witness);
    // The correspondence must preserve edges both ways.
    for (size_t i = 0; i < left_part.size(); ++i)
        for (size_t j = i + 1; j < left_part.size(); ++j)
            if (left.g.adjacent(left_part[i], left_part[j]) !=
                right.g.adjacent(right_part[i], right_part[j]))
                throw std::invalid_argument("gluing correspondence is not an isomorphism");

    std::vector<int> right_to_merged(right.g.n(), -1);
    for (size_t i = 0; i < right_part.size(); ++i)
        right_to_merged[right_part[i]] = left_part[i];

    std::vector<std::string> labels;
    for (VertexId v = 0; v < left.g.n(); ++v) labels.push_back("l." + left.g.label(v));
    for (VertexId v = 0; v < right.g.n(); ++v)
        if (right_to_merged[v] < 0) {
            right_to_merged[v] = static_cast<int>(labels.size());
            labels.push_back("r." + right.g.label(v));
        }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : left.g.edges()) edges.emplace_back(e.a, e.b);
    for (const Edge& e : right.g.edges()) {
        int a = right_to_merged[e.a], b = right_to_merged[e.b];
        Edge m = make_edge(a, b);
        if (a < left.g.n() && b < left.g.n()) continue;  // already present via the left copy
        edges.emplace_back(m.a, m.b);
    }
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [a, b] : edges) named.emplace_back(labels[a], labels[b]);
    std::sort(named.begin(), named.end());
    named.erase(std::unique(named.begin(), named.end()), named.end());
    Graph merged(labels, named);
    QMGraph X = analyze(merged);
    if (!X.validation->passed)
        throw std::runtime_error("amalgam failed validation: " + X.validation->violations[0]);
    return X;
}

QMGraph generate_random(std::uint64_t seed, const RandomGenParams& params) {
    std::mt19937_64 rng(seed);
    auto rand_int = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto random_hamming = [&]() {
        int nf = rand_int(1, params.max_factors);
        std::vector<int> sizes;
        for (int i = 0; i < nf; ++i) sizes.push_back(rand_int(2, params.max_factor));
        return generate_hamming(sizes);
    };
    QMGraph X = random_hamming();
    for (int step = 0; step < params.steps; ++step) {
        QMGraph piece = random_hamming();
        if (X.g.n() + piece.g.n() > params.max_vertices) break;
        // Glue along a random gated hull of a clique or a single vertex, when a
        // matching gated copy exists in the piece; otherwise glue at a vertex.
        bool done = false;
        for (int attempt = 0; attempt < 8 && !done; ++attempt) {
            VertexId lx = rand_int(0, X.g.n() - 1);
            VertexId rx = rand_int(0, piece.g.n() - 1);
            bool try_clique = rand_int(0, 1) == 1;
            VertexSet lpart{lx}, rpart{rx};
            if (try_clique) {
                // A shared edge if both sides have a 2-clique hyperplane there.
                auto lnb = X.g.neighbors(lx);
                auto rnb = piece.g.neighbors(rx);
                if (!lnb.empty() && !rnb.empty()) {
                    VertexId ly = lnb[rand_int(0, static_cast<int>(lnb.size()) - 1)];
                    VertexId ry = rnb[rand_int(0, static_cast<int>(rnb.size()) - 1)];
                    VertexSet lc = gated_hull(X, {std::min(lx, ly), std::max(lx, ly)});
                    VertexSet rc = gated_hull(piece, {std::min(rx, ry), std::max(rx, ry)});
                    if (lc.size() == rc.size() && lc.size() <= 4) {
                        lpart = lc;
                        rpart = rc;
                    }
                }
            }
            try {
                X = generate_amalgam(X, piece, lpart, rpart);
                done = true;
            } catch (const std::exception&) {
                // retry with a different site
            }
        }
    }
    if (!X.validation || !X.validation->passed)
        throw std::runtime_error("random generation produced an invalid graph");
    return X;
}

}  // namespace qmh
