#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/cyclo.hpp"

namespace hopf {

// ---------- finite groups by Cayley table ----------

// Cayley-table group on indices 0..order-1. The table is validated at
// construction: associativity, two-sided identity, inverses.
class FinGroup {
  public:
    FinGroup() : FinGroup(std::vector<std::vector<int>>{{0}}) {}  // trivial group
    explicit FinGroup(std::vector<std::vector<int>> table);

    static FinGroup cyclic(int n);
    static FinGroup direct_product(const FinGroup& a, const FinGroup& b);
    static FinGroup symmetric3();
    static FinGroup alternating4();
    static FinGroup trivial();

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int element_order(int a) const { return ord_[a]; }
    long exponent() const;
    bool is_abelian() const;
    const std::vector<std::vector<int>>& table() const { return table_; }

    // sorted multiset of element orders; isomorphism invariant
    std::vector<int> order_profile() const;

  private:
    int n_ = 0;
    int e_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<int> ord_;
};

// Subset of a FinGroup closed under the group operations.
struct Subgroup {
    FinGroup parent;
    std::vector<int> members;  // sorted, includes identity

    int order() const { return (int)members.size(); }
    bool contains(int g) const;
    bool is_closed() const;
    // Cayley table on the members (in member order).
    FinGroup as_group() const;
    int member_index(int g) const;  // position in members, -1 if absent
};

Subgroup generated_subgroup(const FinGroup& g, const std::vector<int>& gens);

// Invariant factor decomposition m_1 | m_2 | ... of an abelian Cayley-table
// group (empty for the trivial group).
std::vector<long> abelian_invariants(const FinGroup& g);

// true iff an isomorphism exists; on success also returns one bijection
// (witness[i] in g2 is the image of i in g1). Orders above 64 are rejected.
struct IsoResult {
    bool isomorphic = false;
    std::vector<int> witness;
};
IsoResult group_iso_test(const FinGroup& g1, const FinGroup& g2);

// ---------- finite abelian groups by invariant factors ----------

// Z_{m_1} x ... x Z_{m_r} with m_1 | m_2 | ... | m_r, elements as exponent
// tuples. Element indices enumerate tuples with the first coordinate most
// significant.
class AbGroup {
  public:
    AbGroup() = default;  // trivial group
    explicit AbGroup(std::vector<long> invariants);

    const std::vector<long>& invariants() const { return m_; }
    long rank() const { return (long)m_.size(); }
    long order() const { return order_; }
    long exponent() const { return m_.empty() ? 1 : m_.back(); }

    std::vector<long> tuple(long index) const;
    long index(const std::vector<long>& tuple) const;
    long add(long a, long b) const;
    long neg(long a) const;
    long zero() const { return 0; }
    long element_order(long a) const;

    FinGroup to_fingroup() const;

    bool operator==(const AbGroup& o) const { return m_ == o.m_; }

  private:
    std::vector<long> m_;
    long order_ = 1;
};

// One-dimensional character of an AbGroup, stored by exponent tuple.
struct Character {
    AbGroup group;
    std::vector<long> exponents;  // c_i in Z_{m_i}
};

// chi(a) = zeta_N^{sum c_i a_i N/m_i}; N must be a multiple of the exponent.
RootExp char_eval(const Character& chi, long a, long N);

// ---------- automorphism actions ----------

// Left action of F on the abelian group A by automorphisms, one integer
// matrix per F-element acting on exponent tuples.
class AutAction {
  public:
    AutAction() : AutAction(FinGroup(), AbGroup(), {{}}) {}
    AutAction(FinGroup f, AbGroup target, std::vector<std::vector<std::vector<long>>> mats);

    static AutAction trivial(const FinGroup& f, const AbGroup& target);
    // every action of f on a by automorphisms, in a deterministic order
    static std::vector<AutAction> all_actions(const FinGroup& f, const AbGroup& a);

    const FinGroup& group() const { return f_; }
    const AbGroup& target() const { return a_; }
    const std::vector<std::vector<long>>& matrix(int x) const { return mats_[x]; }
    long apply(int x, long a) const { return perms_[x][a]; }  // the action of x on a
    const std::vector<std::vector<long>>& perms() const { return perms_; }

    bool is_trivial() const;

  private:
    FinGroup f_;
    AbGroup a_;
    std::vector<std::vector<std::vector<long>>> mats_;
    std::vector<std::vector<long>> perms_;  // per F-element, permutation of A-indices
};

// Dual action: <x.chi, a> = <chi, x^{-1}.a> for the canonical pairing of A
// with its dual (same invariant factors).
AutAction action_transpose(const AutAction& act);

// ---------- matched pairs ----------

// Matched pair of finite groups recorded by the two action tables
// left[s][x] = s <| x in Gamma and right[s][x] = s |> x in F, coming from an
// exact factorization L = F.Gamma via s x = (s |> x)(s <| x).
struct MatchedPair {
    FinGroup gamma;
    FinGroup f;
    std::vector<std::vector<int>> left;   // |Gamma| x |F| -> Gamma index
    std::vector<std::vector<int>> right;  // |Gamma| x |F| -> F index

    static MatchedPair trivial(FinGroup gamma, FinGroup f);
    bool right_trivial() const;
};

struct MatchedPairReport {
    bool ok = false;
    std::string failure;  // empty when ok
};

// Exhaustive group-axiom check of the reconstructed product on Gamma x F.
MatchedPairReport matched_pair_verify(const MatchedPair& mp);

MatchedPair matched_pair_from_factorization(const FinGroup& l, const std::vector<int>& gamma_elems,
                                            const std::vector<int>& f_elems);

}  // namespace hopf
