#include "qmh/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qmh {

void IntegerMatrix::set(int r, int c, mpz_class v) {
    if (v == 0)
        columns[c].erase(r);
    else
        columns[c][r] = std::move(v);
}

mpz_class IntegerMatrix::get(int r, int c) const {
    auto it = columns[c].find(r);
    return it == columns[c].end() ? mpz_class(0) : it->second;
}

std::vector<std::vector<Face>> enumerate_faces(const SimplicialComplex& K, int max_dim,
                                               std::size_t guard) {
    int dim = -1;
    for (const Face& f : K.maximal_faces)
        dim = std::max(dim, static_cast<int>(f.size()) - 1);
    if (max_dim < 0 || max_dim > dim) max_dim = dim;
    std::vector<std::set<Face>> by_dim(max_dim + 1);
    std::size_t total = 0;
    std::vector<int> idx;
    for (const Face& m : K.maximal_faces) {
        const int n = static_cast<int>(m.size());
        const int cap = std::min(n, max_dim + 1);
        for (int k = 1; k <= cap; ++k) {
            idx.assign(k, 0);
            for (int i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                Face f;
                f.reserve(k);
                for (int i : idx) f.push_back(m[i]);
                if (by_dim[k - 1].insert(std::move(f)).second && ++total > guard)
                    throw std::length_error("face guard exceeded");
                int i = k - 1;
                while (i >= 0 && idx[i] == n - k + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    std::vector<std::vector<Face>> out;
    for (auto& s : by_dim) out.emplace_back(s.begin(), s.end());
    return out;
}

std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& K, int max_degree,
                                             std::size_t guard) {
    auto faces = enumerate_faces(K, max_degree + 1, guard);
    const int D = static_cast<int>(faces.size()) - 1;
    std::vector<std::map<Face, int>> index(faces.size());
    for (int d = 0; d <= D; ++d)
        for (size_t i = 0; i < faces[d].size(); ++i) index[d][faces[d][i]] = static_cast<int>(i);

    std::vector<IntegerMatrix> out;
    for (int k = 1; k <= D; ++k) {
        IntegerMatrix M;
        M.rows = static_cast<int>(faces[k - 1].size());
        M.cols = static_cast<int>(faces[k].size());
        M.columns.resize(M.cols);
        for (size_t c = 0; c < faces[k].size(); ++c) {
            const Face& f = faces[k][c];
            int sign = 1;
            for (size_t drop = 0; drop < f.size(); ++drop) {
                Face sub;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                M.set(index[k - 1].at(sub), static_cast<int>(c), sign);
                sign = -sign;
            }
        }
        out.push_back(std::move(M));
    }
    // d_k . d_{k+1} = 0 sanity check.
    for (size_t k = 1; k < out.size(); ++k) {
        const IntegerMatrix& A = out[k - 1];
        const IntegerMatrix& B = out[k];
        for (int c = 0; c < B.cols; ++c) {
            std::map<int, mpz_class> acc;
            for (const auto& [mid, bv] : B.columns[c])
                for (const auto& [r, av] : A.columns[mid]) acc[r] += av * bv;
            for (const auto& [r, v] : acc)
                if (v != 0) throw std::logic_error("boundary composition nonzero");
        }
    }
    return out;
}

namespace {

// Dense SNF with minimal-absolute-value pivoting. When track is true, row and
// column transforms are accumulated and the diagonalization re-verified.
SmithResult dense_smith(std::vector<std::vector<mpz_class>> A, bool track) {
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<std::vector<mpz_class>> orig;
    std::vector<std::vector<mpz_class>> U, V;  // U * orig * V = A throughout
    if (track) {
        orig = A;
        U.assign(rows, std::vector<mpz_class>(rows, 0));
        V.assign(cols, std::vector<mpz_class>(cols, 0));
        for (int i = 0; i < rows; ++i) U[i][i] = 1;
        for (int i = 0; i < cols; ++i) V[i][i] = 1;
    }
    auto row_op = [&](int dst, int src, const mpz_class& m) {  // row dst -= m * row src
        for (int c = 0; c < cols; ++c) A[dst][c] -= m * A[src][c];
        if (track)
            for (int c = 0; c < rows; ++c) U[dst][c] -= m * U[src][c];
    };
    auto col_op = [&](int dst, int src, const mpz_class& m) {
        for (int r = 0; r < rows; ++r) A[r][dst] -= m * A[r][src];
        if (track)
            for (int r = 0; r < cols; ++r) V[r][dst] -= m * V[r][src];
    };
    auto row_swap = [&](int a, int b) {
        std::swap(A[a], A[b]);
        if (track) std::swap(U[a], U[b]);
    };
    auto col_swap = [&](int a, int b) {
        for (int r = 0; r < rows; ++r) std::swap(A[r][a], A[r][b]);
        if (track)
            for (int r = 0; r < cols; ++r) std::swap(V[r][a], V[r][b]);
    };

    std::vector<mpz_class> diag;
    int t = 0;
    while (t < rows && t < cols) {
        // Minimal absolute value pivot in the active submatrix.
        int pr = -1, pc = -1;
        mpz_class best;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (A[r][c] != 0) {
                    mpz_class a = abs(A[r][c]);
                    if (pr < 0 || a < best) {
                        best = a;
                        pr = r;
                        pc = c;
                    }
                }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);
        bool clean = true;
        for (int r = t + 1; r < rows; ++r)
            if (A[r][t] != 0) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A[r][t].get_mpz_t(), A[t][t].get_mpz_t());
                row_op(r, t, q);
                if (A[r][t] != 0) clean = false;
            }
        for (int c = t + 1; c < cols; ++c)
            if (A[t][c] != 0) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A[t][c].get_mpz_t(), A[t][t].get_mpz_t());
                col_op(c, t, q);
                if (A[t][c] != 0) clean = false;
            }
        if (!clean) continue;  // smaller remainders exist; repick pivot
        // Divisibility into the rest of the submatrix.
        bool divides = true;
        for (int r = t + 1; r < rows && divides; ++r)
            for (int c = t + 1; c < cols; ++c)
                if (A[r][c] % A[t][t] != 0) {
                    row_op(t, r, -1);  // pulls the bad row up; redo the step
                    divides = false;
                    break;
                }
        if (!divides) continue;
        diag.push_back(abs(A[t][t]));
        ++t;
    }
    if (track) {
        // Verify U * orig * V equals diag(diag).
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                mpz_class s = 0;
                for (int i = 0; i < rows; ++i) {
                    if (U[r][i] == 0) continue;
                    for (int j = 0; j < cols; ++j)
                        if (orig[i][j] != 0 && V[j][c] != 0) s += U[r][i] * orig[i][j] * V[j][c];
                }
                mpz_class want = (r == c && r < static_cast<int>(diag.size())) ? diag[r] : 0;
                // Signs may differ on the diagonal (factors reported positive).
                if (r == c && r < static_cast<int>(diag.size())) {
                    if (abs(s) != want) throw std::logic_error("smith verification failed");
                } else if (s != want) {
                    throw std::logic_error("smith verification failed");
                }
            }
    }
    SmithResult res;
    res.rank = static_cast<int>(diag.size());
    res.invariant_factors = std::move(diag);
    return res;
}

void divisibility_fixup(std::vector<mpz_class>& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j)
                if (d[j] % d[i] != 0) {
                    mpz_class g = gcd(d[i], d[j]);
                    mpz_class l = d[i] / g * d[j];
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
    }
    std::sort(d.begin(), d.end());
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& M) {
    if (M.rows <= 50 && M.cols <= 50) {
        std::vector<std::vector<mpz_class>> A(M.rows, std::vector<mpz_class>(M.cols, 0));
        for (int c = 0; c < M.cols; ++c)
            for (const auto& [r, v] : M.columns[c]) A[r][c] = v;
        SmithResult res = dense_smith(std::move(A), true);
        divisibility_fixup(res.invariant_factors);
        return res;
    }
    // Sparse phase: repeatedly pivot on +-1 entries (no coefficient growth),
    // choosing low fill-in.
    std::vector<std::map<int, mpz_class>> row_data(M.rows);
    std::vector<std::set<int>> col_rows(M.cols);
    for (int c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.columns[c]) {
            row_data[r][c] = v;
            col_rows[c].insert(r);
        }
    std::vector<char> row_done(M.rows, 0), col_done(M.cols, 0);
    int unit_rank = 0;
    while (true) {
        int pr = -1, pc = -1;
        long best_score = -1;
        for (int r = 0; r < M.rows; ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : row_data[r]) {
                if (v != 1 && v != -1) continue;
                long score = static_cast<long>(row_data[r].size() - 1) *
                             static_cast<long>(col_rows[c].size() - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    pr = r;
                    pc = c;
                    if (score == 0) break;
                }
            }
            if (best_score == 0) break;
        }
        if (pr < 0) break;
        const mpz_class pivot = row_data[pr][pc];
        // Clear the pivot column with row operations.
        std::vector<int> others(col_rows[pc].begin(), col_rows[pc].end());
        for (int r : others) {
            if (r == pr) continue;
            mpz_class factor = row_data[r][pc] * pivot;  // pivot is +-1
            for (const auto& [c, v] : row_data[pr]) {
                auto it = row_data[r].find(c);
                mpz_class nv = (it == row_data[r].end() ? mpz_class(0) : it->second) - factor * v;
                if (nv == 0) {
                    if (it != row_data[r].end()) row_data[r].erase(it);
                    col_rows[c].erase(r);
                } else {
                    row_data[r][c] = nv;
                    col_rows[c].insert(r);
                }
            }
        }
        // Remove the pivot row and column from the active matrix.
        for (const auto& [c, v] : row_data[pr]) col_rows[c].erase(pr);
        row_data[pr].clear();
        row_done[pr] = 1;
        col_done[pc] = 1;
        ++unit_rank;
    }
    // Dense remainder.
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < M.rows; ++r)
        if (!row_done[r] && !row_data[r].empty()) live_rows.push_back(r);
    std::vector<char> col_live(M.cols, 0);
    for (int r : live_rows)
        for (const auto& [c, v] : row_data[r]) col_live[c] = 1;
    for (int c = 0; c < M.cols; ++c)
        if (col_live[c]) live_cols.push_back(c);
    std::vector<std::vector<mpz_class>> A(live_rows.size(),
                                          std::vector<mpz_class>(live_cols.size(), 0));
    std::map<int, int> col_pos;
    for (size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = static_cast<int>(i);
    for (size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : row_data[live_rows[i]]) A[i][col_pos[c]] = v;
    SmithResult rest = dense_smith(std::move(A), false);
    SmithResult res;
    res.rank = unit_rank + rest.rank;
    res.invariant_factors.assign(unit_rank, mpz_class(1));
    res.invariant_factors.insert(res.invariant_factors.end(), rest.invariant_factors.begin(),
                                 rest.invariant_factors.end());
    divisibility_fixup(res.invariant_factors);
    return res;
}

HomologySignature homology(const SimplicialComplex& K, bool reduced, int max_degree,
                           std::size_t guard) {
    HomologySignature sig;
    sig.reduced = reduced;
    if (K.maximal_faces.empty()) return sig;
    if (K.maximal_faces.size() == 1) {
        // A single maximal face is a full simplex, hence contractible.
        HomologyGroup h0;
        h0.betti = reduced ? 0 : 1;
        sig.groups.push_back(h0);
        return sig;
    }
    int dim = -1;
    for (const Face& f : K.maximal_faces)
        dim = std::max(dim, static_cast<int>(f.size()) - 1);
    const int D = (max_degree < 0 || max_degree > dim) ? dim : max_degree;
    auto faces = enumerate_faces(K, D + 1, guard);
    auto bnd = boundary_matrices(K, D, guard);

    std::vector<int> rank(faces.size() + 1, 0);
    std::vector<std::vector<mpz_class>> factors(faces.size() + 1);
    for (size_t k = 1; k < faces.size(); ++k) {
        SmithResult s = smith_normal_form(bnd[k - 1]);
        rank[k] = s.rank;
        factors[k] = std::move(s.invariant_factors);
    }
    for (int k = 0; k <= D; ++k) {
        HomologyGroup g;
        long nk = static_cast<long>(faces[k].size());
        long rk = rank[k];
        long rk1 = (k + 1 < static_cast<int>(faces.size())) ? rank[k + 1] : 0;
        g.betti = nk - rk - rk1;
        if (k + 1 < static_cast<int>(faces.size()))
            for (const mpz_class& d : factors[k + 1])
                if (d > 1) g.torsion.push_back(d);
        if (k == 0 && reduced) g.betti -= 1;
        sig.groups.push_back(std::move(g));
    }
    return sig;
}

WedgeSupport wedge_support(const HomologySignature& sig) {
    if (!sig.reduced) throw std::invalid_argument("wedge support needs a reduced signature");
    WedgeSupport out;
    for (const HomologyGroup& g : sig.groups) {
        WedgeSupport::Degree d;
        d.has_free = g.betti > 0;
        std::set<mpz_class> support;
        for (mpz_class f : g.torsion) {
            // Prime-power decomposition by trial division; torsion stays tiny.
            for (mpz_class p = 2; p * p <= f; ++p) {
                if (f % p != 0) continue;
                mpz_class q = 1;
                while (f % p == 0) {
                    q *= p;
                    f /= p;
                }
                support.insert(q);
            }
            if (f > 1) support.insert(f);
        }
        d.prime_power_support.assign(support.begin(), support.end());
        out.degrees.push_back(std::move(d));
    }
    // Trailing trivial degrees are irrelevant for comparison.
    while (!out.degrees.empty() && !out.degrees.back().has_free &&
           out.degrees.back().prime_power_support.empty())
        out.degrees.pop_back();
    return out;
}

CompareVerdict compare_wedge_supports(const WedgeSupport& a, const WedgeSupport& b) {
    CompareVerdict v;
    size_t n = std::max(a.degrees.size(), b.degrees.size());
    for (size_t k = 0; k < n; ++k) {
        WedgeSupport::Degree da = k < a.degrees.size() ? a.degrees[k] : WedgeSupport::Degree{};
        WedgeSupport::Degree db = k < b.degrees.size() ? b.degrees[k] : WedgeSupport::Degree{};
        if (!(da == db)) {
            v.distinguished = true;
            v.degree = static_cast<int>(k);
            return v;
        }
    }
    return v;
}

long euler_characteristic(const SimplicialComplex& K, std::size_t guard) {
    auto faces = enumerate_faces(K, -1, guard);
    long chi = 0;
    int sign = 1;
    for (const auto& level : faces) {
        chi += sign * static_cast<long>(level.size());
        sign = -sign;
    }
    return chi;
}

std::vector<std::string> render_signature(const HomologySignature& sig) {
    std::vector<std::string> lines;
    for (size_t k = 0; k < sig.groups.size(); ++k) {
        const HomologyGroup& g = sig.groups[k];
        std::string rhs;
        if (g.betti == 1)
            rhs = "Z";
        else if (g.betti > 1)
            rhs = "Z^" + std::to_string(g.betti);
        for (const mpz_class& d : g.torsion) {
            if (!rhs.empty()) rhs += " + ";
            rhs += "Z/" + d.get_str();
        }
        if (rhs.empty()) rhs = "0";
        lines.push_back((sig.reduced ? "H~_" : "H_") + std::to_string(k) + " = " + rhs);
    }
    return lines;
}

}  // namespace qmh
