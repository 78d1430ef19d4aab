#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "qmh/complex.hpp"

namespace qmh {

struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, mpz_class>> columns;  // per column: row -> nonzero value

    void set(int r, int c, mpz_class v);
    mpz_class get(int r, int c) const;
};

inline constexpr std::size_t kDefaultFaceGuard = 200000;

/// All faces of K of dimension <= max_dim (max_dim = -1: every dimension),
/// grouped and sorted by dimension. Throws when the guard is exceeded.
std::vector<std::vector<Face>> enumerate_faces(const SimplicialComplex& K, int max_dim = -1,
                                               std::size_t guard = kDefaultFaceGuard);

/// Boundary operators d_1 .. d_{max_degree+1} (index k-1 holds d_k) with the
/// orientation induced by sorted vertex order; d_k after d_{k+1} is checked
/// to vanish.
std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& K, int max_degree,
                                             std::size_t guard = kDefaultFaceGuard);

struct SmithResult {
    int rank = 0;
    std::vector<mpz_class> invariant_factors;  // d_1 | d_2 | ... | d_rank, all > 0
};

/// Sparse elimination with unit pivots first, dense minimal-pivot reduction on
/// the remainder. For inputs up to 50x50 the diagonalization is re-verified
/// through explicit transformation matrices.
SmithResult smith_normal_form(const IntegerMatrix& M);

struct HomologyGroup {
    long betti = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1, each dividing the next
};

struct HomologySignature {
    std::vector<HomologyGroup> groups;  // degree 0 .. computed max
    bool reduced = false;
};

/// Exact integer homology. max_degree = -1 computes every degree; otherwise
/// degrees 0..max_degree (faces enumerated one dimension higher so the last
/// reported group is exact).
HomologySignature homology(const SimplicialComplex& K, bool reduced, int max_degree = -1,
                           std::size_t guard = kDefaultFaceGuard);

struct WedgeSupport {
    struct Degree {
        bool has_free = false;
        std::vector<mpz_class> prime_power_support;  // sorted, deduplicated
        bool operator==(const Degree&) const = default;
    };
    std::vector<Degree> degrees;
};

WedgeSupport wedge_support(const HomologySignature& sig);  // requires reduced

struct CompareVerdict {
    bool distinguished = false;
    int degree = -1;  // least degree where the supports differ
};

CompareVerdict compare_wedge_supports(const WedgeSupport& a, const WedgeSupport& b);

long euler_characteristic(const SimplicialComplex& K, std::size_t guard = kDefaultFaceGuard);

/// "H_k = Z^b + Z/d + ..." report lines, one per degree.
std::vector<std::string> render_signature(const HomologySignature& sig);

}  // namespace qmh
