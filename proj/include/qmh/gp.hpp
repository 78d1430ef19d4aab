#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmh/graph.hpp"

namespace qmh {

/// Graph product with cyclic vertex groups; order 0 means infinite cyclic,
/// otherwise the order is >= 2 (order 1 is rejected).
struct GPPresentation {
    Graph graph;
    std::vector<long> order;  // per vertex index
};

GPPresentation make_presentation(Graph g, std::vector<long> orders);

struct Syllable {
    VertexId v;
    long e;  // nonzero; reduced mod order for finite-order vertices
    bool operator==(const Syllable&) const = default;
    auto operator<=>(const Syllable&) const = default;
};

struct NormalForm {
    std::vector<Syllable> syllables;
    bool operator==(const NormalForm&) const = default;
    auto operator<=>(const NormalForm&) const = default;
    bool is_identity() const { return syllables.empty(); }
    size_t length() const { return syllables.size(); }
};

VertexSet support(const NormalForm& g);
std::string render(const GPPresentation& pres, const NormalForm& g);

/// Green normal form: delete trivial syllables, merge same-vertex syllables
/// separated by commuting intervals, then the lexicographically least shuffle.
NormalForm reduce(const GPPresentation& pres, std::vector<Syllable> word);

NormalForm gp_multiply(const GPPresentation& pres, const NormalForm& x, const NormalForm& y);
NormalForm gp_invert(const GPPresentation& pres, const NormalForm& x);

/// g lies in the parabolic subgroup generated by Lambda.
bool parabolic_membership(const GPPresentation& pres, const NormalForm& g,
                          const VertexSet& Lambda);

struct ParabolicCoset {
    VertexSet support;
    NormalForm rep;  // canonical: no right-extremal syllable with vertex in support
    bool operator==(const ParabolicCoset&) const = default;
    auto operator<=>(const ParabolicCoset&) const = default;
};

ParabolicCoset coset_canonical(const GPPresentation& pres, const NormalForm& g,
                               const VertexSet& Lambda);

/// Both characterizations of coset equality (canonical reps / support of
/// g^-1 h) are computed and must agree.
bool same_coset(const GPPresentation& pres, const NormalForm& g, const NormalForm& h,
                const VertexSet& Lambda);

struct DoubleCosetSplit {
    NormalForm a;  // in <Lambda1>
    NormalForm m;  // no left-extremal syllable in Lambda1, none right-extremal in Lambda2
    NormalForm b;  // in <Lambda2>
};

DoubleCosetSplit double_coset_reduce(const GPPresentation& pres, const VertexSet& Lambda1,
                                     const NormalForm& k, const VertexSet& Lambda2);

struct ConjugateIntersection {
    NormalForm p;
    VertexSet xi;  // g<L1>g^-1 intersect h<L2>h^-1 = p<xi>p^-1
};

ConjugateIntersection conjugate_parabolic_intersection(const GPPresentation& pres,
                                                       const NormalForm& g,
                                                       const VertexSet& Lambda1,
                                                       const NormalForm& h,
                                                       const VertexSet& Lambda2);

bool parabolic_is_infinite(const GPPresentation& pres, const VertexSet& Xi);

struct GPHyperplane {
    VertexId label;
    ParabolicCoset carrier;  // support = star(label)
};

GPHyperplane gp_hyperplane(const GPPresentation& pres, const NormalForm& g, VertexId u);

bool hyperplane_crosses_coset(const GPPresentation& pres, const GPHyperplane& H,
                              const ParabolicCoset& c);

/// The coset intersection complex simplex condition: the conjugates'
/// intersection is an infinite (conjugated) parabolic.
bool cic_simplex_test(const GPPresentation& pres, const std::vector<ParabolicCoset>& cosets);

struct CICFragment {
    std::vector<ParabolicCoset> vertices;
    std::vector<std::vector<int>> maximal_simplices;  // indices into vertices
    int radius = 0;
    bool fragment = true;  // never the full (usually infinite) complex
};

/// Bounded enumeration of group elements: canonical forms with at most
/// max_len syllables and, for infinite-order vertices, exponents bounded by
/// exp_bound in absolute value.
std::vector<NormalForm> gp_enumerate(const GPPresentation& pres, int max_len, long exp_bound,
                                     std::size_t guard = 200000);

/// Vertices: cosets g<Lambda> over the given supports whose canonical rep has
/// at most `radius` syllables (exponents of infinite-order generators bounded
/// by exp_bound — fragments only). Simplices up to max_dim via
/// cic_simplex_test.
CICFragment cic_fragment(const GPPresentation& pres, const std::vector<VertexSet>& supports,
                         int radius, int max_dim, long exp_bound = 2,
                         std::size_t guard = 5000);

struct QMBall {
    Graph graph;          // induced on elements of syllable length <= r
    int trust_radius;     // r - 2: structural assertions only inside this
    std::vector<NormalForm> elements;  // parallel to graph vertices
};

/// Ball of the quasi-median Cayley graph; all vertex groups must be finite.
QMBall qm_ball(const GPPresentation& pres, int r, std::size_t guard = 20000);

}  // namespace qmh
