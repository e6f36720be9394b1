#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "hopf/cocycle.hpp"
#include "hopf/error.hpp"

using namespace hopf;

namespace {

Cocycle2 beta12(const AbGroup& a, long N) {
    Cocycle2 c = Cocycle2::trivial(a.order(), N);
    for (long s = 0; s < a.order(); ++s)
        for (long t = 0; t < a.order(); ++t) c.e[s][t] = corpus::beta12_exp(a, s, t, N);
    return c;
}

Cocycle2 coboundary_of(const FinGroup& g, const std::vector<long>& gamma, long N) {
    Cocycle2 c = Cocycle2::trivial(g.order(), N);
    for (int s = 0; s < g.order(); ++s)
        for (int t = 0; t < g.order(); ++t)
            c.e[s][t] = mod_reduce(gamma[s] + gamma[t] - gamma[g.mul(s, t)], N);
    return c;
}

// random bimultiplicative cocycle plus a random coboundary, values in mu_N
Cocycle2 random_cocycle(const AbGroup& a, long N, std::mt19937& rng) {
    const auto& m = a.invariants();
    long r = a.rank();
    std::vector<std::vector<long>> K(r, std::vector<long>(r));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            long step = N / std::gcd(m[i], m[j]);
            K[i][j] = step * std::uniform_int_distribution<long>(0, N / step - 1)(rng);
        }
    std::vector<long> gamma(a.order());
    for (auto& v : gamma) v = std::uniform_int_distribution<long>(0, N - 1)(rng);
    gamma[0] = 0;
    Cocycle2 c = Cocycle2::trivial(a.order(), N);
    for (long s = 0; s < a.order(); ++s)
        for (long t = 0; t < a.order(); ++t) {
            auto st = a.tuple(s), tt = a.tuple(t);
            long e = 0;
            for (long i = 0; i < r; ++i)
                for (long j = 0; j < r; ++j) e += K[i][j] * st[i] * tt[j];
            c.e[s][t] =
                mod_reduce(e + gamma[s] + gamma[t] - gamma[(int)a.add(s, t)], N);
        }
    return c;
}

// every normalized 2-cocycle on g valued in mu_N, via the solution lattice
std::vector<Cocycle2> all_cocycles(const FinGroup& g, long N) {
    int n = g.order(), e = g.identity();
    auto cell = [&](int s, int t) { return s * n + t; };
    std::vector<std::vector<long>> rows;
    for (int s = 0; s < n; ++s) {
        std::vector<long> r1(n * n, 0), r2(n * n, 0);
        r1[cell(s, e)] = 1;
        rows.push_back(r1);
        r2[cell(e, s)] = 1;
        rows.push_back(r2);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::vector<long> r(n * n, 0);
                r[cell(a, b)] += 1;
                r[cell(g.mul(a, b), c)] += 1;
                r[cell(b, c)] -= 1;
                r[cell(a, g.mul(b, c))] -= 1;
                rows.push_back(r);
            }
    auto sol = solve_affine_zn(rows, std::vector<long>(rows.size(), 0), N);
    REQUIRE(sol.particular);
    auto q = zn_quotient(sol.kernel_basis, {}, n * n, N);
    std::vector<Cocycle2> out;
    q.for_each([&](const std::vector<long>& v) {
        Cocycle2 c = Cocycle2::trivial(n, N);
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) c.e[s][t] = v[cell(s, t)];
        out.push_back(std::move(c));
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("check_tau_cocycle") {
    auto d8 = corpus::ex_dim8();
    CHECK(check_tau_cocycle(TauTable::trivial(4, 2, 8), d8.mp).all_pass());
    CHECK(check_tau_cocycle(d8.tau, d8.mp).all_pass());
    SUBCASE("mutation fails with witness") {
        auto bad = d8.tau;
        bad.entries[1][1][2] = mod_reduce(bad.entries[1][1][2] + 4, 8);
        auto rep = check_tau_cocycle(bad, d8.mp);
        CHECK(!rep.all_pass());
        CHECK(!rep.first_failure()->witness.empty());
    }
}

TEST_CASE("check_sigma_cocycle") {
    auto d16 = corpus::ex_dim16();
    CHECK(check_sigma_cocycle(SigmaTable::trivial(4, 4, 16), d16.mp).all_pass());
    SUBCASE("bimultiplicative table constant in s passes") {
        SigmaTable sig = SigmaTable::trivial(4, 4, 16);
        AbGroup f({2, 2});
        for (long s = 0; s < 4; ++s)
            for (long x = 0; x < 4; ++x)
                for (long y = 0; y < 4; ++y)
                    sig.entries[s][x][y] = corpus::beta12_exp(f, x, y, 16);
        CHECK(check_sigma_cocycle(sig, d16.mp).all_pass());
    }
    SUBCASE("mutation fails") {
        SigmaTable sig = SigmaTable::trivial(4, 4, 16);
        sig.entries[2][1][2] = 8;
        auto rep = check_sigma_cocycle(sig, d16.mp);
        CHECK(!rep.all_pass());
        CHECK(!rep.first_failure()->witness.empty());
    }
    SUBCASE("sigma twist of the dimension-8 example passes") {
        auto s8 = corpus::ex_sigma8();
        CHECK(check_sigma_cocycle(s8.sigma, s8.mp).all_pass());
    }
}

TEST_CASE("restrict_tau") {
    auto d8 = corpus::ex_dim8();
    AbGroup a({2, 2});
    FinGroup ag = a.to_fingroup();
    Subgroup whole{ag, {0, 1, 2, 3}};
    SUBCASE("trivial tau restricts trivially") {
        auto r = restrict_tau(TauTable::trivial(4, 2, 8), 1, whole);
        CHECK(r.e == Cocycle2::trivial(4, 8).e);
    }
    SUBCASE("full-group restriction of beta is beta") {
        auto r = restrict_tau(d8.tau, 1, whole);
        CHECK(r.e == beta12(a, 8).e);
    }
    SUBCASE("identity fiber is trivial by normalization") {
        auto r = restrict_tau(d8.tau, 0, whole);
        CHECK(r.e == Cocycle2::trivial(4, 8).e);
    }
    SUBCASE("non-closed subset rejected") {
        Subgroup bad{ag, {0, 1, 2}};
        CHECK_THROWS_AS(restrict_tau(d8.tau, 1, bad), Error);
    }
}

TEST_CASE("coboundary_solve") {
    AbGroup a({2, 2});
    FinGroup g = a.to_fingroup();
    SUBCASE("trivial cocycle gives the constant function") {
        auto r = coboundary_solve(g, Cocycle2::trivial(4, 4));
        REQUIRE(r.trivial_class);
        CHECK(r.gamma == std::vector<long>(4, 0));
    }
    SUBCASE("beta has nontrivial class") {
        auto r = coboundary_solve(g, beta12(a, 4));
        CHECK(!r.trivial_class);
        // independent oracle: exhaust all gamma with values in mu_{N*exp} = mu_8
        // (the completeness modulus); none satisfies d(gamma) = beta
        long M = 8;
        bool found = false;
        for (long c1 = 0; c1 < M && !found; ++c1)
            for (long c2 = 0; c2 < M && !found; ++c2)
                for (long c3 = 0; c3 < M && !found; ++c3) {
                    std::vector<long> gam = {0, c1, c2, c3};
                    bool ok = true;
                    for (int s = 0; s < 4 && ok; ++s)
                        for (int t = 0; t < 4 && ok; ++t)
                            if (mod_reduce(gam[s] + gam[t] - gam[g.mul(s, t)], M) !=
                                corpus::beta12_exp(a, s, t, M))
                                ok = false;
                    found = ok;
                }
        CHECK(!found);
    }
    SUBCASE("round trip through random coboundaries") {
        std::mt19937 rng(31);
        for (int it = 0; it < 40; ++it) {
            std::vector<long> invchoices[3] = {{2, 2}, {4}, {2, 4}};
            AbGroup b(invchoices[it % 3]);
            FinGroup bg = b.to_fingroup();
            long N = 4;
            std::vector<long> gamma(b.order());
            for (auto& v : gamma) v = std::uniform_int_distribution<long>(0, N - 1)(rng);
            gamma[0] = 0;
            Cocycle2 alpha = coboundary_of(bg, gamma, N);
            auto r = coboundary_solve(bg, alpha);
            REQUIRE(r.trivial_class);
            // returned gamma' satisfies d(gamma') = alpha at the lifted modulus
            long lift = r.value_modulus / N;
            for (int s = 0; s < bg.order(); ++s)
                for (int t = 0; t < bg.order(); ++t)
                    CHECK(mod_reduce(r.gamma[s] + r.gamma[t] - r.gamma[bg.mul(s, t)],
                                     r.value_modulus) == alpha.e[s][t] * lift);
        }
    }
    SUBCASE("class trivial over the closure but not over mu_N is still found") {
        // on Z_2, alpha(s,s) = -1 has gamma(s) = +-i: solvable only at mu_4
        AbGroup z2({2});
        Cocycle2 alpha = Cocycle2::trivial(2, 2);
        alpha.e[1][1] = 1;
        auto r = coboundary_solve(z2.to_fingroup(), alpha);
        REQUIRE(r.trivial_class);
        CHECK(r.value_modulus == 4);
        CHECK(mod_reduce(2 * r.gamma[1], 4) == 2);
    }
}

TEST_CASE("alternating_form") {
    AbGroup a({2, 2});
    SUBCASE("trivial") {
        auto b = alternating_form(a, Cocycle2::trivial(4, 4));
        for (long s = 0; s < 4; ++s)
            for (long t = 0; t < 4; ++t) CHECK(b.e[s][t] == 0);
    }
    SUBCASE("beta gives the standard symplectic form") {
        auto b = alternating_form(a, beta12(a, 4));
        for (long s = 0; s < 4; ++s)
            for (long t = 0; t < 4; ++t) {
                auto st = a.tuple(s), tt = a.tuple(t);
                long expect = mod_reduce((st[0] * tt[1] - st[1] * tt[0]) * 2, 4);
                CHECK(b.e[s][t] == expect);
            }
    }
    SUBCASE("coboundaries map to the trivial form") {
        std::mt19937 rng(37);
        FinGroup g = a.to_fingroup();
        for (int it = 0; it < 20; ++it) {
            std::vector<long> gamma(4);
            for (auto& v : gamma) v = std::uniform_int_distribution<long>(0, 3)(rng);
            gamma[0] = 0;
            auto b = alternating_form(a, coboundary_of(g, gamma, 4));
            for (long s = 0; s < 4; ++s)
                for (long t = 0; t < 4; ++t) CHECK(b.e[s][t] == 0);
        }
    }
    SUBCASE("non-cocycle rejected") {
        Cocycle2 junk = Cocycle2::trivial(4, 4);
        junk.e[1][2] = 1;  // a lone zeta_4 breaks bimultiplicativity of b
        CHECK_THROWS_AS(alternating_form(a, junk), Error);
    }
}

TEST_CASE("radical") {
    SUBCASE("trivial form has full radical") {
        AbGroup a({2, 2});
        auto b = alternating_form(a, Cocycle2::trivial(4, 4));
        CHECK(radical(b).order() == 4);
    }
    SUBCASE("symplectic form has trivial radical") {
        AbGroup a({2, 2});
        auto b = alternating_form(a, beta12(a, 4));
        CHECK(radical(b).order() == 1);
    }
    SUBCASE("symplectic plus trivial factor") {
        AbGroup a({2, 2, 2});
        auto b = alternating_form(a, beta12(a, 4));
        auto r = radical(b);
        REQUIRE(r.order() == 2);
        CHECK(r.members == std::vector<int>{0, (int)a.index({0, 0, 1})});
    }
}

TEST_CASE("non-degeneracy and the simplicity oracle") {
    AbGroup z2({2}), z22({2, 2}), z222({2, 2, 2});
    CHECK(!is_nondegenerate(z22, Cocycle2::trivial(4, 4)));
    CHECK(is_nondegenerate(z22, beta12(z22, 4)));
    CHECK(!is_nondegenerate(z222, beta12(z222, 4)));

    CHECK(!twisted_algebra_simple_oracle(z2, Cocycle2::trivial(2, 4)));
    CHECK(twisted_algebra_simple_oracle(z22, beta12(z22, 4)));
    CHECK(!twisted_algebra_simple_oracle(z222, beta12(z222, 4)));

    SUBCASE("groups of non-square order never carry non-degenerate cocycles") {
        AbGroup z6({6});
        std::mt19937 rng(41);
        for (int it = 0; it < 10; ++it)
            CHECK(!is_nondegenerate(z6, random_cocycle(z6, 6, rng)));
    }
    SUBCASE("oracle size limit") {
        AbGroup big({2, 4, 4});
        CHECK_THROWS_AS(twisted_algebra_simple_oracle(big, Cocycle2::trivial(32, 4)),
                        LimitError);
    }
}

TEST_CASE("oracle agreement, exhaustive over mu_4") {
    SUBCASE("Z_2") {
        AbGroup a({2});
        auto all = all_cocycles(a.to_fingroup(), 4);
        CHECK(all.size() == 4);
        for (const auto& c : all)
            CHECK(is_nondegenerate(a, c) == twisted_algebra_simple_oracle(a, c));
    }
    SUBCASE("Z_2 x Z_2") {
        AbGroup a({2, 2});
        auto all = all_cocycles(a.to_fingroup(), 4);
        CHECK(all.size() == 128);
        for (const auto& c : all)
            CHECK(is_nondegenerate(a, c) == twisted_algebra_simple_oracle(a, c));
    }
}

TEST_CASE("oracle agreement on random cocycles up to order 16") {
    std::mt19937 rng(43);
    std::vector<std::vector<long>> groups = {{2},    {4},    {2, 2},    {8},   {2, 4},
                                             {2, 2, 2}, {3, 3}, {16},   {2, 8}, {4, 4},
                                             {2, 2, 4}, {2, 2, 2, 2}, {12},  {2, 6}};
    int done = 0;
    while (done < 110) {
        AbGroup a(groups[done % groups.size()]);
        long N = 2 * a.exponent();
        auto c = random_cocycle(a, N, rng);
        CHECK(is_nondegenerate(a, c) == twisted_algebra_simple_oracle(a, c));
        ++done;
    }
}

TEST_CASE("perfect square index of the radical") {
    std::mt19937 rng(47);
    std::vector<std::vector<long>> groups = {{2, 2}, {2, 4}, {4, 4}, {2, 2, 2}, {3, 3}, {9}};
    for (int it = 0; it < 60; ++it) {
        AbGroup a(groups[it % groups.size()]);
        long N = a.exponent() * 2;
        auto b = alternating_form(a, random_cocycle(a, N, rng));
        long q = a.order() / radical(b).order();
        long r = (long)std::llround(std::sqrt((double)q));
        CHECK(r * r == q);
    }
}

TEST_CASE("compute_F0") {
    SUBCASE("trivial tau, trivial action: F_0 = F") {
        auto d = corpus::ex_trivial4();
        auto f0 = compute_F0(d.tau, d.mp);
        CHECK(f0.order() == 2);
    }
    SUBCASE("dimension-8 example: F_0 trivial") {
        auto d = corpus::ex_dim8();
        auto f0 = compute_F0(d.tau, d.mp);
        CHECK(f0.members == std::vector<int>{0});
    }
    SUBCASE("dimension-16 example: F_0 = {1, a}") {
        auto d = corpus::ex_dim16();
        auto f0 = compute_F0(d.tau, d.mp);
        CHECK(f0.members == std::vector<int>{0, 1});
        CHECK(f0.is_closed());
    }
    SUBCASE("nontrivial right action shrinks F^Gamma") {
        auto d = corpus::ex_s3_noncc();
        auto f0 = compute_F0(d.tau, d.mp);
        CHECK(f0.order() == 1);
    }
}

TEST_CASE("admits_nondegenerate_form") {
    CHECK(admits_nondegenerate_form(AbGroup({2, 2})));
    CHECK(admits_nondegenerate_form(AbGroup({3, 3})));
    CHECK(admits_nondegenerate_form(AbGroup({2, 2, 4, 4})));
    CHECK(!admits_nondegenerate_form(AbGroup({2})));
    CHECK(!admits_nondegenerate_form(AbGroup({2, 4})));
    CHECK(!admits_nondegenerate_form(AbGroup({2, 2, 2})));
    CHECK(admits_nondegenerate_form(AbGroup(std::vector<long>{})));  // vacuous form
    // cross-check against brute-force search for a non-degenerate
    // bimultiplicative alternating form given by an exponent matrix
    for (auto inv : std::vector<std::vector<long>>{{2, 2}, {2, 4}, {3, 3}, {2}, {4}}) {
        AbGroup a(inv);
        long N = a.exponent();
        long r = a.rank();
        // alternating forms correspond to strictly upper triangular exponent
        // matrices K (mod gcd constraints); search them all
        bool found = false;
        std::vector<long> cells;
        for (long i = 0; i < r; ++i)
            for (long j = i + 1; j < r; ++j) cells.push_back(i * r + j);
        long total = 1;
        for (size_t c = 0; c < cells.size(); ++c) total *= N;
        for (long code = 0; code < total && !found; ++code) {
            std::vector<std::vector<long>> K(r, std::vector<long>(r, 0));
            long rest = code;
            for (long cell : cells) {
                K[cell / r][cell % r] = rest % N;
                rest /= N;
            }
            Bichar b{a, N, {}};
            b.e.assign(a.order(), std::vector<long>(a.order(), 0));
            bool welldef = true;
            for (long s = 0; s < a.order() && welldef; ++s)
                for (long t = 0; t < a.order() && welldef; ++t) {
                    auto st = a.tuple(s), tt = a.tuple(t);
                    long e = 0;
                    for (long i = 0; i < r; ++i)
                        for (long j = 0; j < r; ++j) {
                            long kij = mod_reduce(K[i][j] - K[j][i], N);
                            // well-defined iff kij is a multiple of N/gcd(m_i, m_j)
                            long step = N / std::gcd(a.invariants()[i], a.invariants()[j]);
                            if (kij % step != 0) welldef = false;
                            e += kij * st[i] * tt[j];
                        }
                    b.e[s][t] = mod_reduce(e, N);
                }
            if (!welldef) continue;
            found = radical(b).order() == 1;
        }
        CHECK(found == admits_nondegenerate_form(a));
    }
}
