#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmh/graph.hpp"

namespace qmh {

/// Theta-class of edges: carrier, sectors, and fibres are filled eagerly.
struct Hyperplane {
    int id = -1;
    std::vector<Edge> edges;
    VertexSet carrier;                   // endpoints of the class's edges
    std::vector<VertexSet> sectors;      // components of X \\ J
    std::vector<VertexSet> fibres;       // components of N(J) \\ J
    std::vector<int> sector_of;          // per graph vertex, index into sectors
};

enum class PairRelation { Transverse, Tangent, Remote };

struct PairClass {
    PairRelation relation = PairRelation::Remote;
    bool in_contact = false;
    bool contiguous = false;
};

/// Product-of-cliques subgraph, stored by vertex set and factor cliques.
struct Prism {
    VertexSet vertices;
    std::vector<VertexSet> factor_cliques;
    std::vector<int> crossing_hyperplanes;  // one per factor
};

struct ValidationReport {
    bool passed = false;
    std::vector<std::string> violations;  // first violation of each kind
};

/// A graph together with its hyperplane partition and derived geometry.
/// Immutable after compute_hyperplanes.
struct QMGraph {
    Graph g;
    std::vector<Edge> edge_list;          // sorted
    std::vector<int> edge_hyperplane;     // edge index -> hyperplane id
    std::vector<Hyperplane> hyperplanes;
    std::vector<std::vector<char>> transverse;  // hyperplane pair matrix
    std::vector<std::vector<int>> dist;         // all-pairs BFS distances
    std::vector<std::array<int, 4>> squares;    // 4-cycles u-a-w-b
    std::vector<VertexSet> cliques;             // maximal cliques of g
    std::optional<ValidationReport> validation;

    int edge_index(Edge e) const;
    int hyperplane_of(Edge e) const { return edge_hyperplane[edge_index(e)]; }
    bool crosses(int hp, const VertexSet& Y) const;  // some edge of hp inside Y
    /// Hyperplane ids whose class contains an edge with both endpoints in Y.
    std::vector<int> hyperplanes_crossing(const VertexSet& Y) const;
};

/// Partition the edges of a connected graph into hyperplanes (triangle and
/// opposite-in-a-4-cycle closure) and fill all per-hyperplane geometry.
QMGraph compute_hyperplanes(const Graph& g);

PairClass classify_pair(const QMGraph& X, int j, int k);

struct GateResult {
    VertexId gate = -1;
    bool gated = true;
    std::string witness;  // populated when no unique factoring gate exists
};

/// Nearest-point projection of x to Y; reports failure when the nearest
/// vertex is not unique or geodesics fail to factor through it.
GateResult gate(const QMGraph& X, VertexId x, const VertexSet& Y);

/// {gate(y, Z) : y in Y}. Requires both arguments gated.
VertexSet gate_image(const QMGraph& X, const VertexSet& Y, const VertexSet& Z);

struct GatedVerdict {
    bool gated = false;
    std::string witness;
};

/// Local characterization: connected + clique absorption + 4-cycle convexity.
/// When cross_check is set, also verified against the direct gate definition.
GatedVerdict is_gated(const QMGraph& X, const VertexSet& Y, bool cross_check = false);

/// Smallest gated vertex set containing S (fixed-point closure, certified).
VertexSet gated_hull(const QMGraph& X, const VertexSet& S);

/// Prisms corresponding to maximal pairwise-transverse hyperplane families.
std::vector<Prism> maximal_prisms(const QMGraph& X);

/// All prisms (not only maximal) containing the maximal clique C.
std::vector<Prism> prisms_through(const QMGraph& X, const VertexSet& C);

/// Quasi-median validation: forbidden induced subgraphs, weak modularity,
/// hyperplane separation, and distance = separating hyperplane count.
ValidationReport validate_quasi_median(const Graph& g);

/// compute_hyperplanes + validate, with the report attached.
QMGraph analyze(const Graph& g);

struct CarrierDecomposition {
    VertexSet base_fibre;                    // F = intersection of fibres at o
    std::vector<VertexSet> cliques;          // clique of each J at o
    std::vector<VertexId> domain;            // vertices of the carrier intersection
    std::vector<std::vector<VertexId>> coordinates;  // per domain vertex: (F, C_J...) gates
};

/// Explicit verified isomorphism from the intersection of the carriers of a
/// pairwise-transverse family onto F x prod C_J, based at o.
CarrierDecomposition carrier_intersection_decomposition(const QMGraph& X,
                                                        const std::vector<int>& hyperplanes,
                                                        VertexId o);

/// For each maximal clique C, the gated hull of the union of all prisms
/// through C; deduplicated. Certified star-covering by the caller's tests.
std::vector<VertexSet> canonical_star_covering(const QMGraph& X);

// Generators.
QMGraph generate_hamming(const std::vector<int>& clique_sizes);

/// Glue two validated quasi-median graphs along gated subgraphs identified
/// by the given vertex correspondence (left[i] <-> right[i]); re-validates.
QMGraph generate_amalgam(const QMGraph& left, const QMGraph& right,
                         const VertexSet& left_part, const VertexSet& right_part);

struct RandomGenParams {
    int steps = 3;
    int max_factor = 3;
    int max_factors = 2;
    int max_vertices = 200;
};

/// Seeded sequence of gated amalgamations of Hamming pieces; each step is
/// re-validated and retried on failure. Deterministic for a fixed seed.
QMGraph generate_random(std::uint64_t seed, const RandomGenParams& params);

}  // namespace qmh
