#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "hopf/error.hpp"

using namespace hopf;
using corpus::verified;

namespace {

bool mult_commutative(const BicrossedHopf& h) {
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j)
            if (!(h.mul(h.basis_vec(i), h.basis_vec(j)) == h.mul(h.basis_vec(j), h.basis_vec(i))))
                return false;
    return true;
}

bool comult_cocommutative(const BicrossedHopf& h) {
    for (int k = 0; k < h.dim(); ++k) {
        auto d = h.comult_of(h.basis_vec(k));
        for (const auto& [key, c] : d) {
            auto it = d.find({key.second, key.first});
            if (it == d.end() || !(it->second == c)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("build and verify the corpus") {
    struct Case {
        ExtensionData data;
        long dim;
        const char* name;
    };
    std::vector<Case> cases = {
        {corpus::ex_trivial4(), 4, "trivial4"},   {corpus::ex_dim8(), 8, "dim8"},
        {corpus::ex_dim16(), 16, "dim16"},        {corpus::ex_dim4_tau(), 4, "dim4_tau"},
        {corpus::ex_sigma8(), 8, "sigma8"},       {corpus::ex_sigma8_tau(), 8, "sigma8_tau"},
        {corpus::ex_deg16(), 16, "deg16"},        {corpus::ex_dual_s3(), 6, "dual_s3"},
        {corpus::ex_s3_noncc(), 6, "s3_noncc"},
    };
    for (auto& c : cases) {
        CAPTURE(c.name);
        CHECK(c.data.validate().all_pass());
        BicrossedHopf h = BicrossedHopf::build(c.data);
        CHECK(h.dim() == c.dim);
        Report rep = verify_bialgebra(h);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("trivial example is commutative and cocommutative") {
    auto h = verified(corpus::ex_trivial4());
    CHECK(mult_commutative(h));
    CHECK(comult_cocommutative(h));
}

TEST_CASE("dimension-8 example is neither commutative nor cocommutative as a coalgebra") {
    auto h = verified(corpus::ex_dim8());
    CHECK(mult_commutative(h));       // algebra is k^A (x) kF with trivial action
    CHECK(!comult_cocommutative(h));  // beta is not symmetric
}

TEST_CASE("single tau entry mutations fail verification with a witness") {
    for (int s = 1; s < 4; ++s)
        for (int t = 1; t < 4; ++t) {
            auto d = corpus::ex_dim8();
            d.tau.entries[1][s][t] = mod_reduce(d.tau.entries[1][s][t] + d.modulus / 2, d.modulus);
            BicrossedHopf h = BicrossedHopf::build(d);
            Report rep = verify_bialgebra(h);
            CHECK(!rep.all_pass());
            CHECK(!rep.first_failure()->witness.empty());
        }
}

TEST_CASE("normalization-entry mutation fails the counit axiom") {
    auto d = corpus::ex_dim8();
    d.tau.entries[1][2][0] = 4;  // tau_u(s, e) != 1
    BicrossedHopf h = BicrossedHopf::build(d);
    Report rep = verify_bialgebra(h);
    CHECK(!rep.all_pass());
    bool counit_failed = false;
    for (const auto& it : rep.items)
        if (it.name == "counit" && !it.pass) counit_failed = true;
    CHECK(counit_failed);
}

TEST_CASE("antipode") {
    SUBCASE("group-algebra-like pattern on the trivial example") {
        auto h = verified(corpus::ex_trivial4());
        const auto& mp = h.data().mp;
        for (int s = 0; s < 2; ++s)
            for (int x = 0; x < 2; ++x) {
                auto sv = h.apply_antipode(h.basis_vec(h.idx(s, x)));
                auto expect = h.basis_vec(h.idx(mp.gamma.inv(s), mp.f.inv(x)));
                CHECK(sv == expect);
            }
    }
    SUBCASE("S^2 = id on the corpus") {
        for (auto d : {corpus::ex_trivial4(), corpus::ex_dim8(), corpus::ex_dim16(),
                       corpus::ex_sigma8(), corpus::ex_deg16(), corpus::ex_dual_s3(),
                       corpus::ex_s3_noncc()}) {
            auto h = verified(d);
            for (int k = 0; k < h.dim(); ++k) {
                auto once = h.apply_antipode(h.basis_vec(k));
                CHECK(h.apply_antipode(once) == h.basis_vec(k));
            }
        }
    }
    SUBCASE("requires a verified bialgebra") {
        BicrossedHopf h = BicrossedHopf::build(corpus::ex_dim8());
        CHECK_THROWS_AS(compute_antipode(h), Error);
    }
}

TEST_CASE("group-likes, structural vs oracle") {
    struct Case {
        ExtensionData data;
        int count;
        std::vector<long> iso_invariants;  // invariant factors of the expected group
        const char* name;
    };
    std::vector<Case> cases = {
        {corpus::ex_trivial4(), 4, {2, 2}, "trivial4"},
        {corpus::ex_dim8(), 4, {2, 2}, "dim8"},
        {corpus::ex_dim16(), 8, {2, 2, 2}, "dim16"},
        {corpus::ex_dim4_tau(), 4, {4}, "dim4_tau"},
        {corpus::ex_sigma8(), 8, {2, 4}, "sigma8"},
        {corpus::ex_sigma8_tau(), 4, {2, 2}, "sigma8_tau"},
        {corpus::ex_deg16(), 8, {2, 2, 2}, "deg16"},
    };
    for (auto& c : cases) {
        CAPTURE(c.name);
        auto h = verified(c.data);
        auto gs = grouplikes_structural(h);
        CHECK((int)gs.elements.size() == c.count);
        auto expect = AbGroup(c.iso_invariants).to_fingroup();
        CHECK(group_iso_test(gs.table, expect).isomorphic);
        auto go = grouplikes_oracle(h);
        CHECK(go.elements == gs.elements);
        CHECK(go.table.table() == gs.table.table());
    }
    SUBCASE("kS_3 has the full symmetric group of group-likes") {
        auto h = verified(corpus::ex_dual_s3());
        auto gs = grouplikes_structural(h);
        CHECK(gs.elements.size() == 6);
        CHECK(group_iso_test(gs.table, FinGroup::symmetric3()).isomorphic);
        auto go = grouplikes_oracle(h);
        CHECK(go.elements == gs.elements);
    }
    SUBCASE("k^{S_3} has only the sign characters") {
        auto h = verified(corpus::ex_s3_noncc());
        auto gs = grouplikes_structural(h);
        CHECK(gs.elements.size() == 2);
        auto go = grouplikes_oracle(h);
        CHECK(go.elements == gs.elements);
    }
}

TEST_CASE("|G(H)| = |dual of Gamma| * |F_0|") {
    for (auto d : {corpus::ex_trivial4(), corpus::ex_dim8(), corpus::ex_dim16(),
                   corpus::ex_dim4_tau(), corpus::ex_sigma8(), corpus::ex_sigma8_tau(),
                   corpus::ex_deg16(), corpus::ex_dual_s3(), corpus::ex_s3_noncc()}) {
        auto h = verified(d);
        auto gs = grouplikes_structural(h);
        auto f0 = compute_F0(d.tau, d.mp);
        // |dual| = order of the abelianization; all Gamma slots here are abelian
        long dual_order = d.mp.gamma.order();
        CHECK((long)gs.elements.size() == dual_order * f0.order());
    }
}

TEST_CASE("is_cocentral") {
    for (auto d : {corpus::ex_trivial4(), corpus::ex_dim8(), corpus::ex_dim16(),
                   corpus::ex_dual_s3()}) {
        auto h = verified(d);
        CHECK(is_cocentral(h).cocentral);
        CHECK(h.data().mp.right_trivial());
    }
    auto h = verified(corpus::ex_s3_noncc());
    auto r = is_cocentral(h);
    CHECK(!r.cocentral);
    CHECK(!r.witness.empty());
    CHECK(!h.data().mp.right_trivial());
}

TEST_CASE("dual algebra") {
    auto h = verified(corpus::ex_dim8());
    MonoAlg d = dual_algebra(h);
    CHECK(d.verify().all_pass());
    SUBCASE("transpose round trip: dual multiplication is the comultiplication") {
        for (int k = 0; k < h.dim(); ++k)
            for (const auto& t : h.comult(k)) {
                CHECK(d.tgt(t.i, t.j) == k);
                CHECK(d.cf(t.i, t.j) == t.c);
            }
    }
    SUBCASE("trivial example has commutative dual") {
        auto ht = verified(corpus::ex_trivial4());
        MonoAlg dt = dual_algebra(ht);
        for (int i = 0; i < dt.n; ++i)
            for (int j = 0; j < dt.n; ++j) {
                CHECK(dt.tgt(i, j) == dt.tgt(j, i));
                if (dt.tgt(i, j) >= 0) CHECK(dt.cf(i, j) == dt.cf(j, i));
            }
    }
}

TEST_CASE("fiber subspaces are coideals with multiplicative grading") {
    for (auto dat : {corpus::ex_dim8(), corpus::ex_dim16(), corpus::ex_s3_noncc()}) {
        auto h = verified(dat);
        const auto& f = h.data().mp.f;
        // Delta(I_x) contained in H (x) I_x
        for (int k = 0; k < h.dim(); ++k)
            for (const auto& t : h.comult(k)) CHECK(h.x_of(t.j) == h.x_of(k));
        // I_x I_y contained in I_{xy}
        for (int i = 0; i < h.dim(); ++i)
            for (int j = 0; j < h.dim(); ++j) {
                int tg = h.algebra().tgt(i, j);
                if (tg < 0) continue;
                CHECK(h.x_of(tg) == f.mul(h.x_of(i), h.x_of(j)));
            }
    }
}

TEST_CASE("build rejects malformed tables") {
    auto d = corpus::ex_dim8();
    d.sigma.entries[0][0][0] = 99;  // exponent out of range
    CHECK_THROWS_AS(BicrossedHopf::build(d), Error);
    auto d2 = corpus::ex_dim8();
    d2.mp.left[1][1] = 7;  // action index out of range
    CHECK_THROWS_AS(BicrossedHopf::build(d2), Error);
    auto d3 = corpus::ex_dim8();
    d3.tau.entries.pop_back();
    CHECK_THROWS_AS(BicrossedHopf::build(d3), Error);
}
