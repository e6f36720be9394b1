#pragma once

#include "hopf/bicrossed.hpp"
#include "hopf/comodrep.hpp"

namespace hopf {

// Classification triple: a finite abelian group, a group acting on it by
// automorphisms, and a cocycle pair. The tables are indexed by the tuples of
// gamma (identified with its dual through the canonical pairing).
struct ClassTriple {
    AbGroup gamma;
    FinGroup f;
    AutAction action;  // left action of f on gamma
    SigmaTable sigma;
    TauTable tau;
    long modulus = 1;
};

// The bicrossed datum of the triple: index group A = dual of gamma carrying
// the transposed action as the left table, trivial right action.
ExtensionData extension_from_triple(const ClassTriple& t);

struct TripleValidation {
    Report report;
    std::vector<int> f0;  // members of F_0 when computed
};

// Runs, in order: cocycle prefilters, full bialgebra verification, antipode,
// [F : F_0] = 2, and non-degeneracy of tau_x for x outside F_0.
TripleValidation validate_triple(const ClassTriple& t);

struct ConstructResult {
    BicrossedHopf hopf;
    Report report;  // postcondition checks; any failure raises
    GrouplikeSet grouplikes;
    CoalgebraType type;
    FinGroup expected_group;  // gamma x| F_0 assembled from the data
};

// Builds the verified Hopf algebra of a valid triple and checks
// |G(H)| = dim/2, G(H) isomorphic to gamma x| F_0, and the coalgebra type
// (1, d^2 n; d, n).
ConstructResult construct_from_triple(const ClassTriple& t);

struct EnumerateBudget {
    long max_candidates = 200000;
};

struct EnumerateResult {
    std::vector<ClassTriple> triples;  // duplicate-free modulo pair coboundaries
    bool truncated = false;
    Int candidates = 0;  // coset representatives examined
    Int space = 0;       // total number of equivalence classes in the prefilter space
};

// Enumerates valid triples for fixed (gamma, f, action) with cocycle values
// in mu_N: the cocycle and compatibility identities form an affine system
// over Z_N whose solution lattice is walked modulo the coboundary gauge
// lattice, so distinct outputs are inequivalent; survivors of the cheap
// F_0/non-degeneracy filters run through validate_triple.
EnumerateResult enumerate_triples(const AbGroup& gamma, const FinGroup& f,
                                  const AutAction& action, long modulus,
                                  const EnumerateBudget& budget = {});

struct TYInvariant {
    std::vector<std::vector<long>> T;  // order <= 2 automorphism of gamma
    Cocycle2 xi;
    Bichar chi_form;
    Report checks;
};

// Specialization for |F| = 2 and trivial F_0: extracts T and xi = tau at the
// nontrivial F-element, checks T^*(xi) cohomologous to xi^{-1}, and builds
// the symmetric non-degenerate form chi(a, b) = alt(xi)(a, T b). Requires
// sigma to be trivial.
TYInvariant ty_specialize(const ClassTriple& t);

}  // namespace hopf
