#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmh/qm.hpp"

namespace qmh {

/// A face is a sorted set of vertex labels.
using Face = std::vector<std::string>;

struct SimplicialComplex {
    std::vector<Face> maximal_faces;  // canonical: each sorted, none contains another
    std::optional<std::string> basepoint;

    std::vector<std::string> vertex_labels() const;
    bool has_face(const Face& f) const;  // f (sorted) contained in some maximal face
    bool empty() const { return maximal_faces.empty(); }
};

/// Canonicalize: sort/dedup each face, drop faces contained in another,
/// sort the face list. Duplicate faces collapse.
SimplicialComplex make_complex(std::vector<Face> faces,
                               std::optional<std::string> basepoint = std::nullopt);

struct GatedFamily {
    std::vector<VertexSet> members;  // deduplicated, sorted; each certified gated
};

/// Certifies every member gated in X (throws with witness otherwise).
GatedFamily make_gated_family(const QMGraph& X, std::vector<VertexSet> members);

// Graph complexes. Vertex labels are the graph's own labels.
SimplicialComplex flag_completion(const Graph& g);
SimplicialComplex join_complex(const Graph& g);  // maximal faces = maximal joins
SimplicialComplex family_complex(const Graph& g, const std::vector<VertexSet>& members);

// Hyperplane complexes. Vertex labels "h<id>".
enum class HyperplaneComplexKind { Contact, Crossing, Contiguity, SmallCrossing };
SimplicialComplex hyperplane_complex(const QMGraph& X, HyperplaneComplexKind kind);

/// Union over Y in G of the flag complexes on the contact relation restricted
/// to hyperplanes crossing Y. Sets *warning when G is not prism-covering.
SimplicialComplex relative_contact_complex(const QMGraph& X, const GatedFamily& G,
                                           std::string* warning = nullptr);

/// Vertices "g<i>" = family members; simplices = subfamilies crossed by a
/// common hyperplane (double variant: by two non-transverse hyperplanes).
SimplicialComplex skewering_complex(const QMGraph& X, const GatedFamily& G,
                                    bool double_skewering = false);

// Local complexes at a vertex. Link/L vertices are the edges at x, labelled
// "e<a>|<b>"; Slink/SL vertices are the maximal cliques at x, labelled "c<i>"
// with i the index into X.cliques.
enum class LocalComplexKind { Link, Slink, L, SL };
SimplicialComplex local_complex(const QMGraph& X, VertexId x, LocalComplexKind kind,
                                const GatedFamily* G = nullptr,
                                const std::vector<Prism>* prism_cache = nullptr);

enum class CombineKind { Wedge, DisjointUnion };
/// Wedge identifies all basepoints to "*" (parts must carry basepoints);
/// disjoint union prefixes labels "d<i>." to avoid collisions.
SimplicialComplex combine(CombineKind kind, const std::vector<SimplicialComplex>& parts);

/// Nerve of a finite family of label sets; vertex "n<i>" per nonempty set,
/// simplices = subfamilies with nonempty intersection.
SimplicialComplex nerve(const std::vector<std::vector<std::string>>& sets);

// Model complexes from the homotopy-equivalence theorems.
enum class ModelTheorem { Crossing, RelativeContact };
/// Crossing: disjoint union over blocks Y of the wedge over x in Y of the
/// slink computed inside Y. RelativeContact: wedge over all x of sL_G(x);
/// requires X 2-connected and G star-covering (throws with witness).
SimplicialComplex model_complex(const QMGraph& X, ModelTheorem theorem,
                                const GatedFamily* G = nullptr);

struct FamilyPredicates {
    bool prism_covering = true;
    bool star_covering = true;
    bool parallelism_free = true;
    std::string prism_witness, star_witness, parallel_witness;
};
FamilyPredicates family_predicates(const QMGraph& X, const GatedFamily& G);

}  // namespace qmh
