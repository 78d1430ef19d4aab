// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 3-7 share one corpus run.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "qmh/cli.hpp"
#include "qmh/gp.hpp"
#include "qmh/harness.hpp"
#include "qmh/homology.hpp"

using namespace qmh;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double t = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget_seconds > 0 && t > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::ostringstream line;
    line << "CRITERION " << number << " [" << title << "]: " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) line << " -- " << detail;
    line << " (" << t << "s)";
    std::cout << line.str() << std::endl;
    if (!ok) ++g_failures;
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_index_edges(n, e);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_index_edges(n, e);
}

bool reduced_acyclic(const HomologySignature& s) {
    for (const auto& g : s.groups)
        if (g.betti != 0 || !g.torsion.empty()) return false;
    return true;
}

// Check-id predicate over a whole corpus report: no failures; count passes.
bool corpus_checks(const CorpusReport& rep, const std::string& prefix, int min_passes,
                   std::string& detail) {
    int passes = 0;
    for (const auto& entry : rep.entries)
        for (const auto& c : entry.checks) {
            if (c.id.rfind(prefix, 0) != 0) continue;
            if (c.status == CheckStatus::Fail) {
                detail = entry.graph_name + "/" + c.id + ": " + c.witness;
                return false;
            }
            if (c.status == CheckStatus::Pass) ++passes;
        }
    if (passes < min_passes) {
        detail = prefix + ": only " + std::to_string(passes) + " passing instances";
        return false;
    }
    return true;
}

GPPresentation raag(const Graph& g) {
    return make_presentation(g, std::vector<long>(g.n(), 0));
}

}  // namespace

int main() {
    // 1. C4 vs C5 join-complex verdict.
    criterion(1, "raag-compare C4 C5 join", 1.0, [&](std::string& detail) {
        RaagVerdict v = raag_verdict(cycle(4), cycle(5), RaagInvariant::Join);
        if (!reduced_acyclic(v.sig1)) {
            detail = "C4 join complex not reduced-acyclic";
            return false;
        }
        bool c5_circle = v.sig2.groups.size() >= 2 && v.sig2.groups[1].betti == 1 &&
                         v.sig2.groups[1].torsion.empty();
        for (size_t k = 0; k < v.sig2.groups.size() && c5_circle; ++k)
            if (k != 1 && (v.sig2.groups[k].betti != 0 || !v.sig2.groups[k].torsion.empty()))
                c5_circle = false;
        if (!c5_circle) {
            detail = "C5 join complex is not a homology circle";
            return false;
        }
        if (!v.distinguished || v.verdict != "distinguished: not quasi-isometric") {
            detail = "verdict: " + v.verdict;
            return false;
        }
        return true;
    });

    // 2. Contiguity complex of P3 x P3.
    criterion(2, "contiguity of P3xP3 = tetrahedron 2-skeleton", 1.0, [&](std::string& detail) {
        QMGraph X = analyze(cartesian_product({path(3), path(3)}));
        auto K = hyperplane_complex(X, HyperplaneComplexKind::Contiguity);
        std::vector<Face> expected = {{"h0", "h1", "h2"}, {"h0", "h1", "h3"},
                                      {"h0", "h2", "h3"}, {"h1", "h2", "h3"}};
        if (K.maximal_faces != make_complex(expected).maximal_faces) {
            detail = "face set differs from the tetrahedron 2-skeleton";
            return false;
        }
        auto sig = homology(K, false);
        bool betti = sig.groups.size() >= 3 && sig.groups[0].betti == 1 &&
                     sig.groups[1].betti == 0 && sig.groups[2].betti == 1;
        for (const auto& g : sig.groups) betti = betti && g.torsion.empty();
        if (!betti) {
            detail = "Betti numbers differ from (1,0,1)";
            return false;
        }
        return true;
    });

    // Shared corpus for criteria 3-7.
    CorpusSpec spec;
    auto corpus_t0 = Clock::now();
    CorpusReport corpus = run_corpus(spec);
    double corpus_seconds = std::chrono::duration<double>(Clock::now() - corpus_t0).count();
    int cut_vertex_graphs = 0;
    for (const auto& e : corpus.entries)
        for (const auto& c : e.checks)
            if (c.id == "relcont_model[0]" && c.status == CheckStatus::Skipped &&
                c.witness.find("cut vertex") != std::string::npos) {
                ++cut_vertex_graphs;
                break;
            }

    criterion(3, "contact complexes acyclic over corpus", 600.0, [&](std::string& detail) {
        if (corpus.entries.size() < 50) {
            detail = "corpus smaller than 50 graphs";
            return false;
        }
        if (corpus_seconds > 600.0) {
            detail = "corpus run over 10 minutes";
            return false;
        }
        detail = "corpus of " + std::to_string(corpus.entries.size()) + " graphs verified in " +
                 std::to_string(corpus_seconds) + "s";
        return corpus_checks(corpus, "contact_acyclic", 40, detail) &&
               corpus_checks(corpus, "contact_connected", 40, detail);
    });

    criterion(4, "crossing theorem incl. cut-vertex graphs", 0, [&](std::string& detail) {
        if (cut_vertex_graphs < 10) {
            detail = "only " + std::to_string(cut_vertex_graphs) + " cut-vertex graphs";
            return false;
        }
        return corpus_checks(corpus, "crossing_model", 40, detail) &&
               corpus_checks(corpus, "crossing_connected_iff", 40, detail);
    });

    criterion(5, "relative contact theorem on 2-connected graphs", 0, [&](std::string& detail) {
        return corpus_checks(corpus, "relcont_model", 10, detail) &&
               corpus_checks(corpus, "link_vs_slink", 10, detail);
    });

    criterion(6, "skewering equivalence for parallelism-free families", 0,
              [&](std::string& detail) {
                  return corpus_checks(corpus, "skewering_vs_relcont", 10, detail);
              });

    criterion(7, "hyperplane axiom battery", 0, [&](std::string& detail) {
        for (const char* id : {"separation_distance", "gated_pieces", "helly_triples",
                               "prism_brute_force", "carrier_decomposition", "prism_absorption",
                               "good_prism"})
            if (!corpus_checks(corpus, id, 1, detail)) return false;
        return corpus_checks(corpus, "prism_brute_force", 20, detail);
    });

    // 8. Homology engine fixtures.
    criterion(8, "homology engine (spheres, projective plane, Euler)", 8.0,
              [&](std::string& detail) {
                  for (int k = 1; k <= 5; ++k) {
                      auto t0 = Clock::now();
                      // boundary of the (k+1)-simplex: a k-sphere
                      Face all;
                      for (int i = 0; i <= k + 1; ++i) all.push_back("v" + std::to_string(i));
                      std::vector<Face> faces;
                      for (size_t drop = 0; drop < all.size(); ++drop) {
                          Face f;
                          for (size_t i = 0; i < all.size(); ++i)
                              if (i != drop) f.push_back(all[i]);
                          faces.push_back(f);
                      }
                      auto sig = homology(make_complex(faces), true);
                      for (int d = 0; d < k; ++d)
                          if (!(d < (int)sig.groups.size()) || sig.groups[d].betti != 0 ||
                              !sig.groups[d].torsion.empty()) {
                              detail = "sphere S^" + std::to_string(k) + " wrong in degree " +
                                       std::to_string(d);
                              return false;
                          }
                      if ((int)sig.groups.size() <= k || sig.groups[k].betti != 1) {
                          detail = "sphere S^" + std::to_string(k) + " top degree wrong";
                          return false;
                      }
                      if (std::chrono::duration<double>(Clock::now() - t0).count() > 1.0) {
                          detail = "sphere S^" + std::to_string(k) + " over 1s";
                          return false;
                      }
                  }
                  // 6-vertex triangulation of the projective plane.
                  std::vector<Face> rp2;
                  for (const char* f : {"123", "124", "346", "345", "256", "135", "245", "236",
                                        "146", "156"}) {
                      Face face;
                      for (int i = 0; i < 3; ++i) face.push_back(std::string(1, f[i]));
                      rp2.push_back(face);
                  }
                  auto K = make_complex(rp2);
                  auto sig = homology(K, true);
                  if (sig.groups.size() < 2 || sig.groups[1].betti != 0 ||
                      sig.groups[1].torsion != std::vector<mpz_class>{2}) {
                      detail = "projective plane H1 != Z/2";
                      return false;
                  }
                  // Euler characteristic = alternating Betti sum on sample complexes.
                  std::vector<SimplicialComplex> samples = {
                      K, join_complex(cycle(5)), join_complex(cycle(4)),
                      hyperplane_complex(generate_hamming({3, 2, 2}),
                                         HyperplaneComplexKind::Contact)};
                  for (const auto& S : samples) {
                      auto full = homology(S, false);
                      long chi = 0;
                      int sign = 1;
                      for (const auto& gr : full.groups) {
                          chi += sign * gr.betti;
                          sign = -sign;
                      }
                      if (chi != euler_characteristic(S)) {
                          detail = "Euler characteristic mismatch";
                          return false;
                      }
                  }
                  return true;
              });

    // 9. Graph-product calculus.
    criterion(9, "graph product calculus", 300.0, [&](std::string& detail) {
        std::vector<GPPresentation> cases{raag(path(4)), raag(cycle(5))};
        cases.push_back(make_presentation(path(3), {2, 3, 2}));
        int instances = 0;
        for (const auto& pres : cases) {
            const int n = pres.graph.n();
            std::mt19937 rng(500 + n);
            auto elems = gp_enumerate(pres, 3, 1);
            auto in_conj = [&](const NormalForm& x, const NormalForm& g, const VertexSet& L) {
                return parabolic_membership(
                    pres, gp_multiply(pres, gp_invert(pres, g), gp_multiply(pres, x, g)), L);
            };
            for (int t = 0; t < 350; ++t) {
                std::vector<Syllable> wg, wh;
                for (int i = 0; i < 3; ++i) {
                    wg.push_back(
                        {static_cast<VertexId>(rng() % n), static_cast<long>(rng() % 3) - 1});
                    wh.push_back(
                        {static_cast<VertexId>(rng() % n), static_cast<long>(rng() % 3) - 1});
                }
                NormalForm g = reduce(pres, wg), h = reduce(pres, wh);
                VertexSet L1, L2;
                for (VertexId v = 0; v < n; ++v) {
                    if (rng() % 2) L1.push_back(v);
                    if (rng() % 2) L2.push_back(v);
                }
                auto ci = conjugate_parabolic_intersection(pres, g, L1, h, L2);
                ++instances;
                for (const NormalForm& x : elems)
                    if ((in_conj(x, g, L1) && in_conj(x, h, L2)) != in_conj(x, ci.p, ci.xi)) {
                        detail = "oracle disagreement on " + render(pres, x);
                        return false;
                    }
            }
        }
        if (instances < 1000) {
            detail = "fewer than 1000 randomized instances";
            return false;
        }
        // cic_fragment of A(C4): single vertex at every radius.
        auto c4 = raag(cycle(4));
        for (int r = 0; r <= 2; ++r) {
            auto frag = cic_fragment(c4, maximal_joins(c4.graph), r, 2);
            if (frag.vertices.size() != 1) {
                detail = "A(C4) fragment has " + std::to_string(frag.vertices.size()) +
                         " vertices at radius " + std::to_string(r);
                return false;
            }
        }
        // qm_ball cross-validation: complete presentation graphs give direct
        // products, so the exhausted ball is the Hamming graph of the orders.
        std::vector<std::pair<Graph, std::vector<long>>> balls = {
            {Graph({"a"}, {}), {5}},
            {Graph({"a", "b"}, {{"a", "b"}}), {2, 2}},
            {Graph({"a", "b"}, {{"a", "b"}}), {2, 3}},
            {Graph({"a", "b"}, {{"a", "b"}}), {3, 3}},
            {Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}), {2, 2, 2}},
            {Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}), {2, 2, 3}},
        };
        for (auto& [g, orders] : balls) {
            auto pres = make_presentation(g, orders);
            auto ball = qm_ball(pres, g.n() + 1);
            std::vector<int> sizes(orders.begin(), orders.end());
            auto model = generate_hamming(sizes);
            if (!are_isomorphic(ball.graph, model.g).has_value()) {
                detail = "ball does not match Hamming model";
                return false;
            }
            if (!validate_quasi_median(ball.graph).passed) {
                detail = "exhausted ball fails validation";
                return false;
            }
        }
        return true;
    });

    // 10. Out of scope by design; listed for the record.
    std::cout << "CRITERION 10 [exclusions]: NOT-REPRODUCED -- hyperbolicity/quasi-tree "
                 "constants, full homotopy equivalence (homology and component counts only), "
                 "infinite complexes beyond wedge-stable signatures and labelled fragments"
              << std::endl;

    std::cout << (g_failures == 0 ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << std::endl;
    return g_failures == 0 ? 0 : 1;
}
