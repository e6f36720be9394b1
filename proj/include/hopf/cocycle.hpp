#pragma once

#include <optional>

#include "hopf/groups.hpp"
#include "hopf/linalg.hpp"
#include "hopf/report.hpp"

namespace hopf {

// ---------- cocycle tables; all values are roots of unity in mu_N, stored
// ---------- as exponents

// sigma : F x F -> (k^Gamma)^x, entry [s][x][y] = exponent of sigma_s(x, y).
struct SigmaTable {
    long modulus = 1;
    std::vector<std::vector<std::vector<long>>> entries;

    static SigmaTable trivial(long gamma_order, long f_order, long N);
    RootExp value(int s, int x, int y) const {
        return RootExp(modulus, entries[s][x][y]);
    }
    bool shape_ok(long gamma_order, long f_order) const;
};

// tau : Gamma x Gamma -> (k^F)^x, entry [x][s][t] = exponent of tau_x(s, t).
struct TauTable {
    long modulus = 1;
    std::vector<std::vector<std::vector<long>>> entries;

    static TauTable trivial(long gamma_order, long f_order, long N);
    RootExp value(int x, int s, int t) const {
        return RootExp(modulus, entries[x][s][t]);
    }
    bool shape_ok(long gamma_order, long f_order) const;
    // the slice tau_x as a plain table on the Gamma-slot group
    std::vector<std::vector<long>> slice(int x) const { return entries[x]; }
};

// A plain normalized 2-cocycle table alpha(s, t) on one group.
struct Cocycle2 {
    long modulus = 1;
    std::vector<std::vector<long>> e;

    static Cocycle2 trivial(long group_order, long N);
    RootExp value(int s, int t) const { return RootExp(modulus, e[s][t]); }
    long size() const { return (long)e.size(); }
};

// Checks the 2-cocycle identity and normalization on the given group.
Report check_cocycle2(const FinGroup& g, const Cocycle2& alpha);

// Bimultiplicative alternating form on an abelian group.
struct Bichar {
    AbGroup group;
    long modulus = 1;
    std::vector<std::vector<long>> e;

    RootExp value(long s, long t) const { return RootExp(modulus, e[s][t]); }
};

// ---------- operations ----------

// Necessary conditions on tau alone: the comultiplication it defines is
// coassociative and counital, and the identity fiber is trivial.
Report check_tau_cocycle(const TauTable& tau, const MatchedPair& mp);

// Necessary conditions on sigma alone: the multiplication it defines is
// associative and unital, and the identity-index slice is trivial.
Report check_sigma_cocycle(const SigmaTable& sigma, const MatchedPair& mp);

// Restriction of tau_x to a subgroup of the Gamma slot (reindexed by the
// subgroup's member order).
Cocycle2 restrict_tau(const TauTable& tau, int x, const Subgroup& stab);

// gamma with d(gamma) = alpha, i.e. gamma(s)gamma(t)gamma(st)^{-1} = alpha(s,t).
// Any solution over k^x automatically takes values in mu_M with
// M = N * exponent(G) (gamma(s)^{ord s} is a product of alpha-values), so
// solving the affine exponent system mod M decides the cohomology class
// exactly.
struct CoboundaryResult {
    bool trivial_class = false;
    long value_modulus = 1;    // M
    std::vector<long> gamma;   // exponents mod M, empty when class nontrivial
};

CoboundaryResult coboundary_solve(const FinGroup& g, const Cocycle2& alpha);

// All solutions: gamma_0 times the group Hom(G, mu_M) enumerated exactly once.
struct CoboundaryFamily {
    bool trivial_class = false;
    long value_modulus = 1;
    std::vector<long> gamma0;
    ZnQuotient homs;  // quotient description of Hom(G, mu_M) as exponent vectors
};

CoboundaryFamily coboundary_solve_all(const FinGroup& g, const Cocycle2& alpha);

// b(s,t) = alpha(s,t) / alpha(t,s); rejects (with witness) if the result is
// not bimultiplicative, which happens exactly when alpha was not a cocycle.
Bichar alternating_form(const AbGroup& a, const Cocycle2& alpha);

// Rad(b) = { s : b(s,t) = 1 for all t } as a subgroup of a.to_fingroup().
Subgroup radical(const Bichar& b);

bool is_nondegenerate(const AbGroup& a, const Cocycle2& alpha);

// Independent oracle: builds the twisted group algebra k_alpha A over the
// cyclotomic field and decides simplicity by the dimension of its center,
// computed as the nullspace of the commutation system. |A| <= 16.
bool twisted_algebra_simple_oracle(const AbGroup& a, const Cocycle2& alpha);

// F_0 = { x in F^Gamma : [tau_x] = 1 }; verified to be a subgroup of F.
Subgroup compute_F0(const TauTable& tau, const MatchedPair& mp);

// Whether the group carries any non-degenerate alternating bicharacter
// (invariant factors pair up: m_1 = m_2, m_3 = m_4, ...).
bool admits_nondegenerate_form(const AbGroup& a);

}  // namespace hopf
