#pragma once

#include <map>
#include <optional>

#include "hopf/cocycle.hpp"
#include "hopf/groups.hpp"
#include "hopf/report.hpp"

namespace hopf {

// Full input datum of a bicrossed product k^Gamma #_sigma^tau kF.
struct ExtensionData {
    MatchedPair mp;
    SigmaTable sigma;
    TauTable tau;
    long modulus = 1;  // N: cocycle values live in mu_N

    // shape/normalization/matched-pair checks (not the Hopf axioms)
    Report validate() const;
};

// Associative monomial algebra: every product of basis elements is a root of
// unity times a basis element (or zero). Also used for the dual algebra.
struct MonoAlg {
    long n = 0;
    long modulus = 1;  // field modulus of the coefficients
    std::vector<int> target;       // n*n; -1 encodes zero
    std::vector<long> coeff_exp;   // n*n; exponent of the coefficient root
    std::vector<int> unit_support;

    int tgt(int i, int j) const { return target[(size_t)i * n + j]; }
    RootExp cf(int i, int j) const { return RootExp(modulus, coeff_exp[(size_t)i * n + j]); }
    Report verify() const;  // associativity and two-sided unit
};

struct ComultTerm {
    int i = 0, j = 0;  // e_i tensor e_j
    RootExp c;
};

struct AntipodeOutcome {
    bool exists = false;
    std::string detail;  // reason when the antipode does not exist
};

// Structure-constant Hopf algebra on basis e_s # x, index = s*|F| + x.
// Scalars live in Q(zeta_M) with M = N * exponent(Gamma): group-like and
// irreducible-comodule coordinates genuinely need the extra torsion.
class BicrossedHopf {
  public:
    using Vec = std::vector<CycloNum>;

    static BicrossedHopf build(const ExtensionData& data);

    long dim() const { return n_; }
    long field_modulus() const { return nh_; }
    const ExtensionData& data() const { return data_; }

    int idx(int s, int x) const { return s * nf_ + x; }
    int s_of(int k) const { return k / nf_; }
    int x_of(int k) const { return k % nf_; }
    int gamma_order() const { return ng_; }
    int f_order() const { return nf_; }

    const MonoAlg& algebra() const { return alg_; }
    const std::vector<ComultTerm>& comult(int k) const { return comult_[k]; }
    bool counit_one(int k) const { return s_of(k) == data_.mp.gamma.identity(); }

    Vec zero_vec() const { return Vec(n_, CycloNum(nh_)); }
    Vec unit_vec() const;
    Vec basis_vec(int k) const;
    Vec mul(const Vec& u, const Vec& v) const;
    CycloNum counit_of(const Vec& u) const;
    std::map<std::pair<int, int>, CycloNum> comult_of(const Vec& u) const;
    bool is_grouplike(const Vec& u) const;  // Delta(u) = u (x) u and eps(u) = 1, exactly

    bool bialgebra_verified() const { return verified_; }
    bool has_antipode() const { return (bool)antipode_; }
    const std::vector<Vec>& antipode_cols() const;
    Vec apply_antipode(const Vec& u) const;

  private:
    friend Report verify_bialgebra(BicrossedHopf& h);
    friend AntipodeOutcome compute_antipode(BicrossedHopf& h);

    ExtensionData data_;
    long n_ = 0, ng_ = 0, nf_ = 0, nh_ = 1;
    MonoAlg alg_;
    std::vector<std::vector<ComultTerm>> comult_;
    bool verified_ = false;
    std::optional<std::vector<Vec>> antipode_;  // S(e_i) as column vectors
};

// Exhaustive structure-constant checks of every bialgebra axiom.
// On success the value is marked verified.
Report verify_bialgebra(BicrossedHopf& h);

// Solves the convolution-inverse system S(h_1) h_2 = eps(h) 1 per coalgebra
// component, then independently checks h_1 S(h_2) = eps(h) 1. Requires a
// verified bialgebra; stores the antipode on success.
AntipodeOutcome compute_antipode(BicrossedHopf& h);

struct GrouplikeSet {
    std::vector<BicrossedHopf::Vec> elements;  // canonically sorted
    FinGroup table;

    int find(const BicrossedHopf::Vec& v) const;  // -1 if absent
};

// Group-likes via the fiberwise coboundary description: for x fixed by the
// right action, solve d(gamma) = tau_x; the solutions form gamma_0 * dual(Gamma).
GrouplikeSet grouplikes_structural(const BicrossedHopf& h);

// Independent oracle: per fiber, exhausts coefficient functions with values
// in mu_M (M = exponent(Gamma) * lcm of tau-value orders) determined by their
// values on a generating set, and keeps the exact solutions of
// Delta(g) = g (x) g, eps(g) = 1. Every group-like lives in a single fiber
// and its coefficients are automatically mu_M-valued, so the search space is
// exhaustive. Dimension limit 32.
GrouplikeSet grouplikes_oracle(const BicrossedHopf& h, long max_dim = 32);

struct CocentralResult {
    bool cocentral = false;
    std::string witness;  // failing basis element when not cocentral
};
CocentralResult is_cocentral(const BicrossedHopf& h);

// Transposed comultiplication table: the algebra H^*.
MonoAlg dual_algebra(const BicrossedHopf& h);

}  // namespace hopf
