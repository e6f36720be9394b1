#include "hopf/linalg.hpp"

#include <algorithm>
#include <functional>

#include "hopf/error.hpp"

namespace hopf {

namespace {

long count_weight(const CycloNum& c) {
    long w = 0;
    for (const auto& q : c.coeffs())
        if (q != 0) ++w;
    return w;
}

}  // namespace

CycloSolveResult solve_linear_cyclo(long N, const std::vector<std::vector<CycloNum>>& M,
                                    const std::vector<CycloNum>& b) {
    size_t rows = M.size();
    if (rows != b.size()) throw Error("solve_linear_cyclo: row/rhs dimension mismatch");
    size_t cols = rows ? M[0].size() : 0;
    for (const auto& r : M)
        if (r.size() != cols) throw Error("solve_linear_cyclo: ragged matrix");

    std::vector<std::vector<CycloNum>> a = M;
    std::vector<CycloNum> rhs = b;
    std::vector<long> pivot_col_of_row;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        // pivot: nonzero entry with fewest nonzero coefficients (cheapest division)
        size_t best = rows;
        long best_w = -1;
        for (size_t r = prow; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            long w = count_weight(a[r][col]);
            if (best == rows || w < best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best == rows) continue;
        std::swap(a[prow], a[best]);
        std::swap(rhs[prow], rhs[best]);
        CycloNum inv = cyclo_inv(a[prow][col]);
        for (size_t j = col; j < cols; ++j) a[prow][j] = a[prow][j] * inv;
        rhs[prow] = rhs[prow] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || a[r][col].is_zero()) continue;
            CycloNum f = a[r][col];
            for (size_t j = col; j < cols; ++j) {
                if (!a[prow][j].is_zero()) a[r][j] -= f * a[prow][j];
            }
            if (!rhs[prow].is_zero()) rhs[r] -= f * rhs[prow];
        }
        pivot_col_of_row.push_back((long)col);
        ++prow;
    }
    for (size_t r = prow; r < rows; ++r)
        if (!rhs[r].is_zero()) return {false, {}};

    CycloSolveResult res;
    res.consistent = true;
    res.x.assign(cols, CycloNum(N));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) res.x[pivot_col_of_row[r]] = rhs[r];
    return res;
}

long cyclo_rank(long N, std::vector<std::vector<CycloNum>> M) {
    (void)N;
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t best = rows;
        long best_w = -1;
        for (size_t r = prow; r < rows; ++r) {
            if (M[r][col].is_zero()) continue;
            long w = count_weight(M[r][col]);
            if (best == rows || w < best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best == rows) continue;
        std::swap(M[prow], M[best]);
        CycloNum inv = cyclo_inv(M[prow][col]);
        for (size_t j = col; j < cols; ++j) M[prow][j] = M[prow][j] * inv;
        for (size_t r = prow + 1; r < rows; ++r) {
            if (M[r][col].is_zero()) continue;
            CycloNum f = M[r][col];
            for (size_t j = col; j < cols; ++j)
                if (!M[prow][j].is_zero()) M[r][j] -= f * M[prow][j];
        }
        ++prow;
    }
    return (long)prow;
}

std::vector<std::vector<CycloNum>> cyclo_nullspace(long N,
                                                   const std::vector<std::vector<CycloNum>>& M) {
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    std::vector<std::vector<CycloNum>> a = M;
    std::vector<long> pivot_col_of_row;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t best = rows;
        long best_w = -1;
        for (size_t r = prow; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            long w = count_weight(a[r][col]);
            if (best == rows || w < best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best == rows) continue;
        std::swap(a[prow], a[best]);
        CycloNum inv = cyclo_inv(a[prow][col]);
        for (size_t j = col; j < cols; ++j) a[prow][j] = a[prow][j] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || a[r][col].is_zero()) continue;
            CycloNum f = a[r][col];
            for (size_t j = col; j < cols; ++j)
                if (!a[prow][j].is_zero()) a[r][j] -= f * a[prow][j];
        }
        pivot_col_of_row.push_back((long)col);
        ++prow;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long pc : pivot_col_of_row) is_pivot[pc] = true;
    std::vector<std::vector<CycloNum>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<CycloNum> v(cols, CycloNum(N));
        v[fc] = CycloNum::one(N);
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = -a[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------- Smith normal form over Z ----------

namespace {

struct SmithResult {
    std::vector<Int> diag;                 // min(rows, cols) entries (zeros allowed)
    std::vector<std::vector<Int>> V;       // cols x cols column transform
    std::vector<Int> Ub;                   // row transform applied to the carried rhs
    std::vector<std::vector<Int>> Uinv;    // rows x rows, inverse of the row transform
    bool track_uinv = false;
};

// Diagonalize A by unimodular row/column operations. Row ops are mirrored on
// the carried rhs; column ops accumulate in V; inverse row ops accumulate in
// Uinv when requested. Divisibility chaining is not needed by the callers.
SmithResult smith_diagonalize(std::vector<std::vector<Int>> A, std::vector<Int> b,
                              bool track_uinv) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    SmithResult res;
    res.track_uinv = track_uinv;
    res.V.assign(cols, std::vector<Int>(cols, 0));
    for (size_t i = 0; i < cols; ++i) res.V[i][i] = 1;
    if (track_uinv) {
        res.Uinv.assign(rows, std::vector<Int>(rows, 0));
        for (size_t i = 0; i < rows; ++i) res.Uinv[i][i] = 1;
    }
    res.Ub = std::move(b);

    auto row_sub = [&](size_t i, size_t j, const Int& q) {
        // row_i -= q * row_j  =>  Uinv col_j += q * col_i
        for (size_t k = 0; k < cols; ++k) A[i][k] -= q * A[j][k];
        if (!res.Ub.empty()) res.Ub[i] -= q * res.Ub[j];
        if (track_uinv)
            for (size_t k = 0; k < rows; ++k) res.Uinv[k][j] += q * res.Uinv[k][i];
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(A[i], A[j]);
        if (!res.Ub.empty()) std::swap(res.Ub[i], res.Ub[j]);
        if (track_uinv)
            for (size_t k = 0; k < rows; ++k) std::swap(res.Uinv[k][i], res.Uinv[k][j]);
    };
    auto row_neg = [&](size_t i) {
        for (size_t k = 0; k < cols; ++k) A[i][k] = -A[i][k];
        if (!res.Ub.empty()) res.Ub[i] = -res.Ub[i];
        if (track_uinv)
            for (size_t k = 0; k < rows; ++k) res.Uinv[k][i] = -res.Uinv[k][i];
    };
    auto col_sub = [&](size_t i, size_t j, const Int& q) {
        // col_i -= q * col_j
        for (size_t k = 0; k < rows; ++k) A[k][i] -= q * A[k][j];
        for (size_t k = 0; k < cols; ++k) res.V[k][i] -= q * res.V[k][j];
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t k = 0; k < rows; ++k) std::swap(A[k][i], A[k][j]);
        for (size_t k = 0; k < cols; ++k) std::swap(res.V[k][i], res.V[k][j]);
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // locate smallest nonzero entry in the trailing submatrix
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (A[i][j] == 0) continue;
                if (pi == rows || mpz_cmpabs(A[i][j].get_mpz_t(), A[pi][pj].get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // all zero
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);
        if (A[t][t] < 0) row_neg(t);

        bool again = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (A[i][t] == 0) continue;
            Int q = A[i][t] / A[t][t];
            if (q != 0) row_sub(i, t, q);
            if (A[i][t] != 0) again = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (A[t][j] == 0) continue;
            Int q = A[t][j] / A[t][t];
            if (q != 0) col_sub(j, t, q);
            if (A[t][j] != 0) again = true;
        }
        if (again) continue;  // smaller pivot now exists; redo this step
        ++t;
    }
    res.diag.resize(std::min(rows, cols));
    for (size_t i = 0; i < res.diag.size(); ++i) res.diag[i] = A[i][i];
    return res;
}

long to_long_mod(const Int& v, long N) {
    Int r = v % N;
    if (r < 0) r += N;
    return r.get_si();
}

}  // namespace

ZnSolution solve_affine_zn(const std::vector<std::vector<long>>& M, const std::vector<long>& b,
                           long N) {
    if (N < 1) throw Error("solve_affine_zn: modulus must be positive");
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    if (b.size() != rows) throw Error("solve_affine_zn: row/rhs dimension mismatch");
    for (const auto& r : M)
        if (r.size() != cols) throw Error("solve_affine_zn: ragged matrix");

    std::vector<std::vector<Int>> A(rows, std::vector<Int>(cols));
    std::vector<Int> rb(rows);
    for (size_t i = 0; i < rows; ++i) {
        rb[i] = b[i];
        for (size_t j = 0; j < cols; ++j) A[i][j] = M[i][j];
    }
    SmithResult s = smith_diagonalize(std::move(A), std::move(rb), false);

    // D y == Ub (mod N), x = V y
    std::vector<Int> y(cols, 0);
    std::vector<std::vector<long>> kernel;
    bool ok = true;
    size_t dcount = s.diag.size();
    for (size_t i = 0; i < rows && ok; ++i) {
        Int d = (i < dcount) ? s.diag[i] : Int(0);
        Int rhs = s.Ub[i];
        if (d == 0) {
            if (rhs % N != 0) ok = false;
            continue;
        }
        Int g = gcd(d, Int(N));
        if (rhs % g != 0) {
            ok = false;
            continue;
        }
        // y_i = (rhs/g) * inverse(d/g) mod N/g
        Int Ng = N / g;
        Int dg = (d / g) % Ng;
        if (dg < 0) dg += Ng;
        Int inv;
        if (Ng == 1)
            inv = 0;
        else if (mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), Ng.get_mpz_t()) == 0)
            throw InternalError("solve_affine_zn: inverse must exist");
        y[i] = ((rhs / g) % Ng) * inv % Ng;
    }
    ZnSolution out;
    if (ok) {
        std::vector<long> x(cols, 0);
        for (size_t j = 0; j < cols; ++j) {
            Int acc = 0;
            for (size_t k = 0; k < cols; ++k) acc += s.V[j][k] * y[k];
            x[j] = to_long_mod(acc, N);
        }
        out.particular = x;
        // exactness check on the reported solution
        for (size_t i = 0; i < rows; ++i) {
            long acc = 0;
            for (size_t j = 0; j < cols; ++j) acc = mod_reduce(acc + M[i][j] % N * x[j], N);
            if (acc != mod_reduce(b[i], N))
                throw InternalError("solve_affine_zn: particular solution check failed");
        }
    }
    // homogeneous generators: for diagonal d_i, y_i in (N/gcd(d_i,N)) Z; free
    // coordinates give full Z_N lines
    for (size_t i = 0; i < cols; ++i) {
        Int step;
        if (i < dcount && s.diag[i] != 0)
            step = N / gcd(s.diag[i], Int(N));
        else
            step = 1;
        if (step % N == 0) continue;  // only the zero vector
        std::vector<long> v(cols, 0);
        bool nonzero = false;
        for (size_t j = 0; j < cols; ++j) {
            Int acc = s.V[j][i] * step;
            v[j] = to_long_mod(acc, N);
            if (v[j] != 0) nonzero = true;
        }
        if (nonzero) kernel.push_back(std::move(v));
    }
    out.kernel_basis = std::move(kernel);
    return out;
}

// ---------- lattice quotient enumeration ----------

namespace {

// Triangular basis (rows r >= column index) of span(gens) + N Z^n.
std::vector<std::vector<Int>> lattice_basis(const std::vector<std::vector<long>>& gens, long n,
                                            long N) {
    std::vector<std::vector<Int>> cols;
    for (const auto& g : gens) {
        if ((long)g.size() != n) throw Error("lattice_basis: generator of wrong length");
        std::vector<Int> c(n);
        for (long i = 0; i < n; ++i) c[i] = g[i];
        cols.push_back(std::move(c));
    }
    for (long i = 0; i < n; ++i) {
        std::vector<Int> c(n, 0);
        c[i] = N;
        cols.push_back(std::move(c));
    }
    std::vector<std::vector<Int>> basis;  // one column per row, triangular
    for (long r = 0; r < n; ++r) {
        // gcd-combine all columns with a nonzero entry in row r
        while (true) {
            long ci = -1, cj = -1;
            for (size_t k = 0; k < cols.size(); ++k) {
                if (cols[k][r] == 0) continue;
                if (ci == -1)
                    ci = (long)k;
                else {
                    cj = (long)k;
                    break;
                }
            }
            if (cj == -1) break;
            // reduce the larger entry by the smaller
            if (mpz_cmpabs(cols[ci][r].get_mpz_t(), cols[cj][r].get_mpz_t()) < 0) std::swap(ci, cj);
            Int q = cols[ci][r] / cols[cj][r];
            for (long i = 0; i < n; ++i) cols[ci][i] -= q * cols[cj][i];
        }
        long pc = -1;
        for (size_t k = 0; k < cols.size(); ++k)
            if (cols[k][r] != 0) {
                pc = (long)k;
                break;
            }
        if (pc == -1) throw InternalError("lattice_basis: missing pivot");
        if (cols[pc][r] < 0)
            for (long i = 0; i < n; ++i) cols[pc][i] = -cols[pc][i];
        basis.push_back(cols[pc]);
        cols.erase(cols.begin() + pc);
    }
    return basis;  // basis[j] is the column with pivot at row j
}

}  // namespace

std::vector<long> ZnQuotient::element(const std::vector<long>& digits) const {
    std::vector<long> v(n, 0);
    for (size_t i = 0; i < gens.size(); ++i) {
        long d = digits[i];
        if (d == 0) continue;
        for (long j = 0; j < n; ++j) v[j] = mod_reduce(v[j] + d * gens[i][j], N);
    }
    return v;
}

bool ZnQuotient::for_each(const std::function<bool(const std::vector<long>&)>& fn) const {
    std::vector<long> digits(gens.size(), 0);
    while (true) {
        if (!fn(element(digits))) return false;
        size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++digits[i] < orders[i]) break;
            digits[i] = 0;
        }
        if (i == digits.size()) return true;
    }
}

ZnQuotient zn_quotient(const std::vector<std::vector<long>>& gens_K,
                       const std::vector<std::vector<long>>& gens_G, long n, long N) {
    auto BK = lattice_basis(gens_K, n, N);
    auto BG = lattice_basis(gens_G, n, N);

    // Solve BK * X = BG column by column (forward substitution; BK triangular).
    std::vector<std::vector<Int>> X(n, std::vector<Int>(n, 0));
    for (long col = 0; col < n; ++col) {
        std::vector<Int> rhs(n);
        for (long i = 0; i < n; ++i) rhs[i] = BG[col][i];
        for (long r = 0; r < n; ++r) {
            Int acc = rhs[r];
            for (long k = 0; k < r; ++k) acc -= BK[k][r] * X[k][col];
            if (acc % BK[r][r] != 0)
                throw Error("zn_quotient: G-lattice is not contained in the K-lattice");
            X[r][col] = acc / BK[r][r];
        }
    }
    SmithResult s = smith_diagonalize(X, {}, true);

    ZnQuotient q;
    q.n = n;
    q.N = N;
    for (long i = 0; i < n; ++i) {
        Int d = s.diag[i] < 0 ? Int(-s.diag[i]) : s.diag[i];
        if (d == 1) continue;
        if (d == 0) throw InternalError("zn_quotient: zero invariant in finite quotient");
        // adapted generator: column i of BK * Uinv
        std::vector<long> g(n, 0);
        bool nonzero = false;
        for (long rrow = 0; rrow < n; ++rrow) {
            Int acc = 0;
            for (long k = 0; k < n; ++k) acc += BK[k][rrow] * s.Uinv[k][i];
            g[rrow] = to_long_mod(acc, N);
            if (g[rrow] != 0) nonzero = true;
        }
        long dl = d.get_si();
        if (!nonzero) throw InternalError("zn_quotient: zero generator with nontrivial order");
        q.gens.push_back(std::move(g));
        q.orders.push_back(dl);
        q.size *= dl;
    }
    return q;
}

}  // namespace hopf
