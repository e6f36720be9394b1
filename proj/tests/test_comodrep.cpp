#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "hopf/comodrep.hpp"
#include "hopf/error.hpp"

using namespace hopf;
using corpus::verified;

namespace {

std::vector<long> dims_of(const std::vector<SimpleComodule>& s) {
    std::vector<long> d;
    for (const auto& v : s) d.push_back(v.dim);
    std::sort(d.begin(), d.end());
    return d;
}

// character of the regular comodule: traces of left multiplication on H^*
BicrossedHopf::Vec regular_character(const BicrossedHopf& h) {
    MonoAlg d = dual_algebra(h);
    auto reg = h.zero_vec();
    for (int k = 0; k < h.dim(); ++k) {
        CycloNum tr(h.field_modulus());
        for (int j = 0; j < h.dim(); ++j)
            if (d.tgt(k, j) == j) tr += CycloNum::from_root(d.cf(k, j));
        reg[k] = tr;
    }
    return reg;
}

}  // namespace

TEST_CASE("clifford_simples dimensions and coalgebra types") {
    struct Case {
        ExtensionData data;
        std::vector<long> dims;
        const char* type;
        const char* name;
    };
    std::vector<Case> cases = {
        {corpus::ex_trivial4(), {1, 1, 1, 1}, "(1, 4)", "trivial4"},
        {corpus::ex_dim8(), {1, 1, 1, 1, 2}, "(1, 4; 2, 1)", "dim8"},
        {corpus::ex_dim16(), {1, 1, 1, 1, 1, 1, 1, 1, 2, 2}, "(1, 8; 2, 2)", "dim16"},
        {corpus::ex_dim4_tau(), {1, 1, 1, 1}, "(1, 4)", "dim4_tau"},
        {corpus::ex_sigma8(), {1, 1, 1, 1, 1, 1, 1, 1}, "(1, 8)", "sigma8"},
        {corpus::ex_sigma8_tau(), {1, 1, 1, 1, 2}, "(1, 4; 2, 1)", "sigma8_tau"},
        {corpus::ex_deg16(), {1, 1, 1, 1, 1, 1, 1, 1, 2, 2}, "(1, 8; 2, 2)", "deg16"},
        {corpus::ex_dual_s3(), {1, 1, 1, 1, 1, 1}, "(1, 6)", "dual_s3"},
        {corpus::ex_s3_noncc(), {1, 1, 2}, "(1, 2; 2, 1)", "s3_noncc"},
    };
    for (auto& c : cases) {
        CAPTURE(c.name);
        auto h = verified(c.data);
        auto simples = clifford_simples(h);
        CHECK(dims_of(simples) == c.dims);
        CHECK(coalgebra_type(h).to_string() == c.type);
        long sum = 0;
        for (const auto& v : simples) sum += v.dim * v.dim;
        CHECK(sum == h.dim());
    }
}

TEST_CASE("characters") {
    auto h = verified(corpus::ex_dim8());
    auto simples = clifford_simples(h);
    auto chars = characters(simples, h);

    SUBCASE("degree-1 characters are exactly the group-likes") {
        auto gl = grouplikes_structural(h);
        std::vector<BicrossedHopf::Vec> deg1;
        for (const auto& c : chars)
            if (c.degree == 1) deg1.push_back(c.vector);
        std::sort(deg1.begin(), deg1.end(),
                  [](const auto& a, const auto& b) {
                      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                  });
        CHECK(deg1 == gl.elements);
    }
    SUBCASE("the degree-2 character is 2 e_0 # u") {
        const CharacterElement* two = nullptr;
        for (const auto& c : chars)
            if (c.degree == 2) two = &c;
        REQUIRE(two);
        auto expect = h.zero_vec();
        expect[h.idx(0, 1)] = CycloNum(h.field_modulus(), 2);
        CHECK(two->vector == expect);
    }
    SUBCASE("characters are linearly independent") {
        std::vector<BicrossedHopf::Vec> vecs;
        for (const auto& c : chars) vecs.push_back(c.vector);
        CHECK(span_rank(vecs, h.field_modulus()) == (long)chars.size());
    }
    SUBCASE("sum of deg * chi is the regular character") {
        auto total = h.zero_vec();
        for (const auto& c : chars)
            for (int k = 0; k < h.dim(); ++k)
                total[k] += c.vector[k].mul_rat(Rat(c.degree));
        CHECK(total == regular_character(h));
    }
}

TEST_CASE("regular decomposition across the corpus") {
    for (auto d : {corpus::ex_dim16(), corpus::ex_deg16(), corpus::ex_s3_noncc(),
                   corpus::ex_dual_s3()}) {
        auto h = verified(d);
        auto chars = characters(clifford_simples(h), h);
        auto total = h.zero_vec();
        for (const auto& c : chars)
            for (int k = 0; k < h.dim(); ++k) total[k] += c.vector[k].mul_rat(Rat(c.degree));
        CHECK(total == regular_character(h));
    }
}

TEST_CASE("fusion products") {
    auto h = verified(corpus::ex_dim8());
    auto chars = characters(clifford_simples(h), h);
    size_t two = 0;
    std::vector<size_t> ones;
    for (size_t i = 0; i < chars.size(); ++i) {
        if (chars[i].degree == 2)
            two = i;
        else
            ones.push_back(i);
    }

    SUBCASE("group-like times group-like is a single group-like") {
        for (size_t i : ones)
            for (size_t j : ones) {
                auto row = fusion_product(chars[i], chars[j], chars, h);
                long total = 0;
                int nonzero = 0;
                for (size_t k = 0; k < row.size(); ++k) {
                    total += row[k];
                    if (row[k]) {
                        ++nonzero;
                        CHECK(chars[k].degree == 1);
                    }
                }
                CHECK(total == 1);
                CHECK(nonzero == 1);
            }
    }
    SUBCASE("chi chi^* sums all four group-likes with multiplicity one") {
        CharacterElement dual = character_dual(chars[two], h);
        auto row = fusion_product(chars[two], dual, chars, h);
        for (size_t k = 0; k < row.size(); ++k)
            CHECK(row[k] == (chars[k].degree == 1 ? 1 : 0));
    }
    SUBCASE("full fusion table satisfies the degree sum rule") {
        auto table = fusion_table(chars, h);
        for (size_t i = 0; i < chars.size(); ++i)
            for (size_t j = 0; j < chars.size(); ++j) {
                long total = 0;
                for (size_t k = 0; k < chars.size(); ++k)
                    total += table.table[i][j][k] * chars[k].degree;
                CHECK(total == chars[i].degree * chars[j].degree);
            }
    }
}

TEST_CASE("fusion of the two noninvertibles in the dimension-16 example") {
    auto h = verified(corpus::ex_dim16());
    auto chars = characters(clifford_simples(h), h);
    std::vector<size_t> twos;
    for (size_t i = 0; i < chars.size(); ++i)
        if (chars[i].degree == 2) twos.push_back(i);
    REQUIRE(twos.size() == 2);
    // x_b x_ab lands in kG: four group-likes, each with multiplicity 1
    auto row = fusion_product(chars[twos[0]], chars[twos[1]], chars, h);
    long count = 0;
    for (size_t k = 0; k < row.size(); ++k) {
        if (row[k] == 0) continue;
        CHECK(chars[k].degree == 1);
        CHECK(row[k] == 1);
        ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("stabilizers of characters") {
    auto h = verified(corpus::ex_dim8());
    auto gl = grouplikes_structural(h);
    auto chars = characters(clifford_simples(h), h);
    SUBCASE("left stabilizer of a group-like character is trivial") {
        for (const auto& c : chars) {
            if (c.degree != 1) continue;
            auto st = stabilizer_of_character(c, gl, true, h);
            CHECK(st.members == std::vector<int>{gl.table.identity()});
        }
    }
    SUBCASE("the degree-2 character is stabilized by all four group-likes") {
        for (const auto& c : chars) {
            if (c.degree != 2) continue;
            CHECK(stabilizer_of_character(c, gl, true, h).order() == 4);
            CHECK(stabilizer_of_character(c, gl, false, h).order() == 4);
        }
    }
    SUBCASE("dimension-16: stabilizer of x_b has order 4 = d^2") {
        auto h16 = verified(corpus::ex_dim16());
        auto gl16 = grouplikes_structural(h16);
        auto chars16 = characters(clifford_simples(h16), h16);
        for (const auto& c : chars16) {
            if (c.degree != 2) continue;
            CHECK(stabilizer_of_character(c, gl16, true, h16).order() == 4);
        }
    }
}

TEST_CASE("verify_ty_rules") {
    SUBCASE("dimension 8: d = 2, n = 1, stabilizer is everything") {
        auto rep = verify_ty_rules(verified(corpus::ex_dim8()));
        CHECK(rep.checks.all_pass());
        CHECK(!rep.vacuous);
        CHECK(rep.d == 2);
        CHECK(rep.n == 1);
        CHECK(rep.common_stabilizer.size() == 4);
    }
    SUBCASE("dimension 16: d = 2, n = 2, stabilizer of order 4 inside order 8") {
        auto rep = verify_ty_rules(verified(corpus::ex_dim16()));
        CHECK(rep.checks.all_pass());
        CHECK(rep.d == 2);
        CHECK(rep.n == 2);
        CHECK(rep.common_stabilizer.size() == 4);
        CHECK(rep.grouplikes.elements.size() == 8);
    }
    SUBCASE("trivial example is vacuous") {
        auto rep = verify_ty_rules(verified(corpus::ex_trivial4()));
        CHECK(rep.vacuous);
        CHECK(rep.checks.all_pass());
    }
    SUBCASE("degenerate dimension-16 example still has index-2 fusion rules") {
        auto rep = verify_ty_rules(verified(corpus::ex_deg16()));
        CHECK(rep.checks.all_pass());
        CHECK(rep.d == 2);
        CHECK(rep.n == 2);
        CHECK(rep.common_stabilizer.size() == 4);
    }
    SUBCASE("sigma-twisted valid datum passes") {
        auto rep = verify_ty_rules(verified(corpus::ex_sigma8_tau()));
        CHECK(rep.checks.all_pass());
        CHECK(rep.d == 2);
        CHECK(rep.n == 1);
    }
}

TEST_CASE("normality via character conjugation") {
    auto h = verified(corpus::ex_dim8());
    auto gl = grouplikes_structural(h);
    auto chars = characters(clifford_simples(h), h);
    std::vector<CharacterElement> twos;
    for (const auto& c : chars)
        if (c.degree == 2) twos.push_back(c);

    SUBCASE("kG(H) is certified normal with the degree-2 generator") {
        std::vector<BicrossedHopf::Vec> span(gl.elements.begin(), gl.elements.end());
        auto res = normality_chardual(span, twos, h);
        CHECK(res.normal);
    }
    SUBCASE("the whole algebra is trivially normal") {
        std::vector<BicrossedHopf::Vec> span;
        for (int k = 0; k < h.dim(); ++k) span.push_back(h.basis_vec(k));
        CHECK(normality_chardual(span, twos, h).normal);
    }
    SUBCASE("non-subcoalgebra span is rejected") {
        std::vector<BicrossedHopf::Vec> span = {h.basis_vec(h.idx(1, 0))};
        CHECK_THROWS_AS(normality_chardual(span, twos, h), Error);
    }
    SUBCASE("non-generating generator set is rejected") {
        // a single group-like generates only a 4-dimensional subalgebra
        std::vector<BicrossedHopf::Vec> span(gl.elements.begin(), gl.elements.end());
        CharacterElement g{gl.elements[1], 1};
        CHECK_THROWS_AS(normality_chardual(span, {g}, h), Error);
    }
    SUBCASE("span of a non-normal subgroup fails with a witness") {
        // in kS_3 the span of a transposition's subgroup is not normal
        auto hs = verified(corpus::ex_dual_s3());
        auto gls = grouplikes_structural(hs);
        std::vector<CharacterElement> gens;
        for (const auto& e : gls.elements) gens.push_back({e, 1});
        int t = -1;
        for (int g = 0; g < gls.table.order(); ++g)
            if (gls.table.element_order(g) == 2) {
                t = g;
                break;
            }
        REQUIRE(t >= 0);
        std::vector<BicrossedHopf::Vec> span = {gls.elements[gls.table.identity()],
                                                gls.elements[t]};
        auto res = normality_chardual(span, gens, hs);
        CHECK(!res.normal);
        CHECK(!res.witness.empty());
    }
}

TEST_CASE("normality_alternativo") {
    SUBCASE("degree-2 character of the dimension-8 example") {
        auto h = verified(corpus::ex_dim8());
        auto chars = characters(clifford_simples(h), h);
        for (const auto& c : chars)
            if (c.degree == 2) CHECK(normality_alternativo(c, h));
    }
    SUBCASE("group-like characters hold trivially") {
        auto h = verified(corpus::ex_dim8());
        auto gl = grouplikes_structural(h);
        CharacterElement g{gl.elements[0], 1};
        CHECK(normality_alternativo(g, h));
    }
    SUBCASE("fails when the stabilizer is smaller than the squared degree") {
        auto h = verified(corpus::ex_s3_noncc());
        auto chars = characters(clifford_simples(h), h);
        for (const auto& c : chars)
            if (c.degree == 2) CHECK(!normality_alternativo(c, h));
    }
}

TEST_CASE("simple subcoalgebras") {
    auto h = verified(corpus::ex_dim8());
    auto chars = characters(clifford_simples(h), h);
    for (const auto& c : chars) {
        auto basis = subcoalgebra_of(c.vector, h);
        CHECK((long)basis.size() == c.degree * c.degree);
    }
}
