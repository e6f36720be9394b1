#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hopf/cyclo.hpp"
#include "hopf/numtypes.hpp"

namespace hopf {

// ---------- exact linear algebra over Q(zeta_N) ----------

struct CycloSolveResult {
    bool consistent = false;
    std::vector<CycloNum> x;  // one solution (free variables set to 0)
};

// Solve M x = b by fraction-exact Gaussian elimination.
CycloSolveResult solve_linear_cyclo(long N, const std::vector<std::vector<CycloNum>>& M,
                                    const std::vector<CycloNum>& b);

long cyclo_rank(long N, std::vector<std::vector<CycloNum>> M);

std::vector<std::vector<CycloNum>> cyclo_nullspace(long N,
                                                   const std::vector<std::vector<CycloNum>>& M);

// ---------- affine systems over Z_N ----------

// Solution set of M v == b (mod N), described by one particular solution and
// a generating set of the homogeneous solutions.
struct ZnSolution {
    std::optional<std::vector<long>> particular;
    std::vector<std::vector<long>> kernel_basis;
};

ZnSolution solve_affine_zn(const std::vector<std::vector<long>>& M, const std::vector<long>& b,
                           long N);

// ---------- quotients of Z_N^n lattices ----------

// The finite group (span(gens_K) + N Z^n) / (span(gens_G) + N Z^n), with an
// adapted generating set: every element is reached exactly once by
// sum_i c_i * gens[i] (mod N), 0 <= c_i < orders[i]. gens_G must be contained
// in the K-lattice.
struct ZnQuotient {
    long n = 0;
    long N = 1;
    std::vector<std::vector<long>> gens;
    std::vector<long> orders;  // parallel to gens, each > 1
    Int size = 1;

    std::vector<long> element(const std::vector<long>& digits) const;
    // Enumerate all elements in mixed-radix order; stops early (returns false)
    // if the callback returns false.
    bool for_each(const std::function<bool(const std::vector<long>&)>& fn) const;
};

ZnQuotient zn_quotient(const std::vector<std::vector<long>>& gens_K,
                       const std::vector<std::vector<long>>& gens_G, long n, long N);

}  // namespace hopf
