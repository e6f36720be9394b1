#include "hopf/classify.hpp"

#include <algorithm>
#include <numeric>

#include "hopf/error.hpp"
#include "hopf/linalg.hpp"

namespace hopf {

ExtensionData extension_from_triple(const ClassTriple& t) {
    AbGroup a(t.gamma.invariants());
    AutAction psi = action_transpose(t.action);
    long na = a.order();
    int nf = t.f.order();
    MatchedPair mp{a.to_fingroup(), t.f, {}, {}};
    mp.left.assign(na, std::vector<int>(nf));
    mp.right.assign(na, std::vector<int>(nf));
    for (long s = 0; s < na; ++s)
        for (int x = 0; x < nf; ++x) {
            mp.left[s][x] = (int)psi.apply(t.f.inv(x), s);  // right action s <| x
            mp.right[s][x] = x;
        }
    return {mp, t.sigma, t.tau, t.modulus};
}

TripleValidation validate_triple(const ClassTriple& t) {
    TripleValidation out;
    Report& rep = out.report;
    ExtensionData ext = extension_from_triple(t);
    long na = ext.mp.gamma.order();
    int nf = t.f.order();
    if (!t.sigma.shape_ok(na, nf) || !t.tau.shape_ok(na, nf) || t.sigma.modulus != t.modulus ||
        t.tau.modulus != t.modulus) {
        rep.add("cocycle table shapes", false, "wrong dimensions or modulus");
        return out;
    }
    rep.add("cocycle table shapes", true);

    Report sig = check_sigma_cocycle(t.sigma, ext.mp);
    rep.add("sigma cocycle prefilter", sig.all_pass(),
            sig.all_pass() ? "" : sig.first_failure()->name + " at " + sig.first_failure()->witness);
    Report taur = check_tau_cocycle(t.tau, ext.mp);
    rep.add("tau cocycle prefilter", taur.all_pass(),
            taur.all_pass() ? "" : taur.first_failure()->name + " at " +
                                       taur.first_failure()->witness);
    if (!rep.all_pass()) return out;

    BicrossedHopf h = BicrossedHopf::build(ext);
    Report ax = verify_bialgebra(h);
    rep.add("bialgebra axioms", ax.all_pass(),
            ax.all_pass() ? "" : ax.first_failure()->name + " at " + ax.first_failure()->witness);
    if (!ax.all_pass()) return out;
    auto anti = compute_antipode(h);
    rep.add("antipode", anti.exists, anti.detail);
    if (!anti.exists) return out;

    Subgroup f0 = compute_F0(t.tau, ext.mp);
    out.f0 = f0.members;
    bool index2 = 2 * f0.order() == nf;
    rep.add("[F : F_0] = 2", index2,
            "|F_0| = " + std::to_string(f0.order()) + ", |F| = " + std::to_string(nf));
    if (!index2) return out;

    AbGroup a(t.gamma.invariants());
    bool nondeg = true;
    std::string w;
    for (int x = 0; x < nf && nondeg; ++x) {
        if (f0.contains(x)) continue;
        Cocycle2 tx{t.modulus, t.tau.entries[x]};
        if (!is_nondegenerate(a, tx)) {
            nondeg = false;
            w = "tau_x degenerate at x = " + std::to_string(x);
        }
    }
    rep.add("tau_x non-degenerate off F_0", nondeg, w);
    return out;
}

namespace {

// the element of gamma whose character on the dual matches the exponent
// function values[a] (mod M)
long gamma_element_of_character(const AbGroup& gamma, const std::vector<long>& values, long M) {
    AbGroup a(gamma.invariants());
    for (long g = 0; g < gamma.order(); ++g) {
        Character chi{a, gamma.tuple(g)};
        bool same = true;
        for (long v = 0; v < a.order() && same; ++v)
            if (char_eval(chi, v, M) != RootExp(M, values[v])) same = false;
        if (same) return g;
    }
    return -1;
}

}  // namespace

ConstructResult construct_from_triple(const ClassTriple& t) {
    TripleValidation val = validate_triple(t);
    if (!val.report.all_pass())
        throw Error("construct_from_triple: invalid triple: " +
                    val.report.first_failure()->name + " (" +
                    val.report.first_failure()->witness + ")");
    ExtensionData ext = extension_from_triple(t);
    BicrossedHopf h = BicrossedHopf::build(ext);
    (void)verify_bialgebra(h);
    (void)compute_antipode(h);

    ConstructResult out{std::move(h), {}, {}, {}, FinGroup()};
    const BicrossedHopf& H = out.hopf;
    out.grouplikes = grouplikes_structural(H);
    out.report.add("|G(H)| = dim H / 2",
                   2 * (long)out.grouplikes.elements.size() == H.dim(),
                   "|G(H)| = " + std::to_string(out.grouplikes.elements.size()));

    // crossed product gamma x| F_0: section x -> gamma_0(x) # x of the
    // group-like extension; its deviation from multiplicativity is a
    // gamma-valued 2-cocycle beta
    const MatchedPair& mp = ext.mp;
    AbGroup a(t.gamma.invariants());
    long M = ext.modulus * mp.gamma.exponent();
    std::vector<int> f0 = val.f0;
    FinGroup f0g = Subgroup{t.f, f0}.as_group();
    std::vector<std::vector<long>> gamma0(f0.size());
    for (size_t i = 0; i < f0.size(); ++i) {
        Cocycle2 tx{t.modulus, t.tau.entries[f0[i]]};
        CoboundaryResult cb = coboundary_solve(mp.gamma, tx);
        if (!cb.trivial_class || cb.value_modulus != M)
            throw InternalError("construct_from_triple: F_0 fiber without coboundary");
        gamma0[i] = cb.gamma;
    }
    long lift = M / ext.modulus;
    int k0 = (int)f0.size();
    std::vector<std::vector<long>> beta(k0, std::vector<long>(k0, -1));
    for (int i = 0; i < k0; ++i)
        for (int j = 0; j < k0; ++j) {
            int x = f0[i], y = f0[j];
            int xy = t.f.mul(x, y);
            int ij = f0g.mul(i, j);
            std::vector<long> values(a.order());
            for (long s = 0; s < a.order(); ++s) {
                long sx = mp.left[s][x];
                values[s] = mod_reduce(gamma0[i][s] + gamma0[j][sx] +
                                           ext.sigma.entries[s][x][y] * lift - gamma0[ij][s],
                                       M);
            }
            (void)xy;
            long g = gamma_element_of_character(t.gamma, values, M);
            if (g < 0)
                throw InternalError("construct_from_triple: section deviation is not a character");
            beta[i][j] = g;
        }
    // expected group on pairs (g, x in F_0)
    long ng = t.gamma.order();
    long order = ng * k0;
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (long p = 0; p < order; ++p)
        for (long q = 0; q < order; ++q) {
            long gp = p / k0, xp = p % k0;
            long gq = q / k0, xq = q % k0;
            long g = t.gamma.add(t.gamma.add(gp, t.action.apply(f0[xp], gq)), beta[xp][xq]);
            table[p][q] = (int)(g * k0 + f0g.mul((int)xp, (int)xq));
        }
    out.expected_group = FinGroup(std::move(table));
    auto iso = group_iso_test(out.grouplikes.table, out.expected_group);
    out.report.add("G(H) isomorphic to gamma x| F_0", iso.isomorphic);

    out.type = coalgebra_type(H);
    long d2 = t.gamma.order();
    long d = (long)std::llround(std::sqrt((double)d2));
    long n = k0;
    CoalgebraType expect;
    expect.blocks = {{1, d2 * n}, {d, n}};
    out.report.add("coalgebra type (1, d^2 n; d, n)", out.type == expect,
                   "found " + out.type.to_string() + ", expected " + expect.to_string());
    if (!out.report.all_pass())
        throw InternalError("construct_from_triple: postcondition failed: " +
                            out.report.first_failure()->name);
    return out;
}

EnumerateResult enumerate_triples(const AbGroup& gamma, const FinGroup& f,
                                  const AutAction& action, long modulus,
                                  const EnumerateBudget& budget) {
    EnumerateResult out;
    long N = modulus;
    if (N < 1) throw Error("enumerate_triples: modulus must be positive");
    // a valid triple needs some tau_x non-degenerate, and an index-2 subgroup
    if (!admits_nondegenerate_form(gamma)) return out;
    if (f.order() % 2 != 0) return out;

    ClassTriple proto{gamma, f, action, {}, {}, N};
    ExtensionData ext0 = extension_from_triple(proto);
    const auto& left = ext0.mp.left;
    FinGroup ag = ext0.mp.gamma;
    long na = ag.order();
    long nf = f.order();
    int ae = ag.identity(), fe = f.identity();

    // variable layout: tau exponents first, then sigma exponents
    auto tvar = [&](long x, long s, long t) { return (x * na + s) * na + t; };
    long toff = nf * na * na;
    auto svar = [&](long s, long x, long y) { return toff + (s * nf + x) * nf + y; };
    long nvars = toff + na * nf * nf;

    std::vector<std::vector<long>> rows;
    auto push = [&](std::vector<long>&& r) { rows.push_back(std::move(r)); };
    // normalization
    for (long x = 0; x < nf; ++x)
        for (long s = 0; s < na; ++s) {
            std::vector<long> r1(nvars, 0), r2(nvars, 0);
            r1[tvar(x, s, ae)] = 1;
            push(std::move(r1));
            r2[tvar(x, ae, s)] = 1;
            push(std::move(r2));
        }
    for (long s = 0; s < na; ++s)
        for (long t = 0; t < na; ++t) {
            std::vector<long> r(nvars, 0);
            r[tvar(fe, s, t)] = 1;
            push(std::move(r));
        }
    for (long s = 0; s < na; ++s)
        for (long x = 0; x < nf; ++x) {
            std::vector<long> r1(nvars, 0), r2(nvars, 0);
            r1[svar(s, x, fe)] = 1;
            push(std::move(r1));
            r2[svar(s, fe, x)] = 1;
            push(std::move(r2));
        }
    for (long x = 0; x < nf; ++x)
        for (long y = 0; y < nf; ++y) {
            std::vector<long> r(nvars, 0);
            r[svar(ae, x, y)] = 1;
            push(std::move(r));
        }
    // tau_x is a plain cocycle (trivial right action)
    for (long x = 0; x < nf; ++x)
        for (long g = 0; g < na; ++g)
            for (long hh = 0; hh < na; ++hh)
                for (long l = 0; l < na; ++l) {
                    std::vector<long> r(nvars, 0);
                    r[tvar(x, g, hh)] += 1;
                    r[tvar(x, ag.mul((int)g, (int)hh), l)] += 1;
                    r[tvar(x, hh, l)] -= 1;
                    r[tvar(x, g, ag.mul((int)hh, (int)l))] -= 1;
                    push(std::move(r));
                }
    // sigma cocycle with respect to the left action
    for (long s = 0; s < na; ++s)
        for (long x = 0; x < nf; ++x)
            for (long y = 0; y < nf; ++y)
                for (long z = 0; z < nf; ++z) {
                    std::vector<long> r(nvars, 0);
                    r[svar(s, x, y)] += 1;
                    r[svar(s, f.mul((int)x, (int)y), z)] += 1;
                    r[svar(left[s][x], y, z)] -= 1;
                    r[svar(s, x, f.mul((int)y, (int)z))] -= 1;
                    push(std::move(r));
                }
    // compatibility of the comultiplication with the multiplication
    for (long g = 0; g < na; ++g)
        for (long hh = 0; hh < na; ++hh)
            for (long x = 0; x < nf; ++x)
                for (long y = 0; y < nf; ++y) {
                    std::vector<long> r(nvars, 0);
                    r[tvar(f.mul((int)x, (int)y), g, hh)] += 1;
                    r[tvar(x, g, hh)] -= 1;
                    r[tvar(y, left[g][x], left[hh][x])] -= 1;
                    r[svar(g, x, y)] -= 1;
                    r[svar(hh, x, y)] -= 1;
                    r[svar(ag.mul((int)g, (int)hh), x, y)] += 1;
                    push(std::move(r));
                }

    ZnSolution sol = solve_affine_zn(rows, std::vector<long>(rows.size(), 0), N);
    if (!sol.particular) throw InternalError("enumerate_triples: homogeneous system unsolvable");

    // coboundary gauge lattice: v : (A \ e) x (F \ e) -> mu_N
    std::vector<std::vector<long>> gauge;
    for (long va = 0; va < na; ++va) {
        if (va == ae) continue;
        for (long vx = 0; vx < nf; ++vx) {
            if (vx == fe) continue;
            std::vector<long> delta(nvars, 0);
            for (long z = 0; z < nf; ++z)
                for (long g = 0; g < na; ++g)
                    for (long hh = 0; hh < na; ++hh) {
                        long d = 0;
                        if (ag.mul((int)g, (int)hh) == va && z == vx) d += 1;
                        if (g == va && z == vx) d -= 1;
                        if (hh == va && z == vx) d -= 1;
                        if (d) delta[tvar(z, g, hh)] = mod_reduce(d, N);
                    }
            for (long c = 0; c < na; ++c)
                for (long x = 0; x < nf; ++x)
                    for (long y = 0; y < nf; ++y) {
                        long d = 0;
                        if (c == va && x == vx) d += 1;
                        if (left[c][x] == va && y == vx) d += 1;
                        if (c == va && f.mul((int)x, (int)y) == vx) d -= 1;
                        if (d) delta[svar(c, x, y)] = mod_reduce(d, N);
                    }
            gauge.push_back(std::move(delta));
        }
    }
    // every gauge generator must solve the homogeneous system
    for (const auto& gv : gauge)
        for (const auto& r : rows) {
            long acc = 0;
            for (long i = 0; i < nvars; ++i)
                if (r[i] && gv[i]) acc += r[i] * gv[i];
            if (mod_reduce(acc, N) != 0)
                throw InternalError("enumerate_triples: gauge does not preserve the system");
        }

    ZnQuotient q = zn_quotient(sol.kernel_basis, gauge, nvars, N);
    out.space = q.size;

    AbGroup a(gamma.invariants());
    long processed = 0;
    q.for_each([&](const std::vector<long>& w) {
        if (processed >= budget.max_candidates) {
            out.truncated = true;
            return false;
        }
        ++processed;
        ClassTriple cand{gamma, f, action, SigmaTable::trivial(na, nf, N),
                         TauTable::trivial(na, nf, N), N};
        for (long x = 0; x < nf; ++x)
            for (long s = 0; s < na; ++s)
                for (long t = 0; t < na; ++t) cand.tau.entries[x][s][t] = w[tvar(x, s, t)];
        for (long s = 0; s < na; ++s)
            for (long x = 0; x < nf; ++x)
                for (long y = 0; y < nf; ++y) cand.sigma.entries[s][x][y] = w[svar(s, x, y)];
        // cheap filters: [F : F_0] = 2, then non-degeneracy off F_0
        std::vector<int> f0;
        for (long x = 0; x < nf; ++x) {
            Cocycle2 tx{N, cand.tau.entries[x]};
            if (coboundary_solve(ag, tx).trivial_class) f0.push_back((int)x);
        }
        if (2 * (long)f0.size() != nf) return true;
        for (long x = 0; x < nf; ++x) {
            if (std::binary_search(f0.begin(), f0.end(), (int)x)) continue;
            Cocycle2 tx{N, cand.tau.entries[x]};
            if (radical(alternating_form(a, tx)).order() != 1) return true;
        }
        TripleValidation val = validate_triple(cand);
        if (val.report.all_pass()) out.triples.push_back(std::move(cand));
        return true;
    });
    out.candidates = processed;
    return out;
}

TYInvariant ty_specialize(const ClassTriple& t) {
    if (t.f.order() != 2) throw Error("ty_specialize: |F| must be 2");
    ExtensionData ext = extension_from_triple(t);
    for (long s = 0; s < ext.mp.gamma.order(); ++s)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                if (t.sigma.entries[s][x][y] != 0)
                    throw Error("ty_specialize: normalize sigma first");
    Subgroup f0 = compute_F0(t.tau, ext.mp);
    if (f0.order() != 1) throw Error("ty_specialize: F_0 must be trivial");

    TYInvariant out;
    int x1 = 1 - t.f.identity();
    AutAction psi = action_transpose(t.action);
    out.T = psi.matrix(x1);
    {
        bool order2 = true;
        for (long s = 0; s < ext.mp.gamma.order(); ++s)
            if (psi.apply(x1, psi.apply(x1, s)) != s) order2 = false;
        out.checks.add("T has order dividing 2", order2);
    }
    AbGroup a(t.gamma.invariants());
    out.xi = Cocycle2{t.modulus, t.tau.entries[x1]};
    out.checks.add("xi is non-degenerate", is_nondegenerate(a, out.xi));

    // T^*(xi) cohomologous to xi^{-1}: their product must be a coboundary
    {
        Cocycle2 prod{t.modulus, {}};
        prod.e.assign(a.order(), std::vector<long>(a.order()));
        for (long s = 0; s < a.order(); ++s)
            for (long u = 0; u < a.order(); ++u)
                prod.e[s][u] = mod_reduce(
                    out.xi.e[psi.apply(x1, s)][psi.apply(x1, u)] + out.xi.e[s][u], t.modulus);
        auto cb = coboundary_solve(ext.mp.gamma, prod);
        out.checks.add("T^*(xi) cohomologous to xi^{-1}", cb.trivial_class);
    }
    {
        Bichar alpha = alternating_form(a, out.xi);
        out.chi_form = Bichar{a, alpha.modulus, {}};
        out.chi_form.e.assign(a.order(), std::vector<long>(a.order()));
        for (long s = 0; s < a.order(); ++s)
            for (long u = 0; u < a.order(); ++u)
                out.chi_form.e[s][u] = alpha.e[s][psi.apply(x1, u)];
        bool sym = true;
        for (long s = 0; s < a.order() && sym; ++s)
            for (long u = 0; u < a.order() && sym; ++u)
                if (out.chi_form.e[s][u] != out.chi_form.e[u][s]) sym = false;
        out.checks.add("chi is symmetric", sym);
        bool nondeg = true;
        for (long s = 0; s < a.order() && nondeg; ++s) {
            if (s == a.zero()) continue;
            bool all_one = true;
            for (long u = 0; u < a.order() && all_one; ++u)
                if (out.chi_form.e[s][u] != 0) all_one = false;
            if (all_one) nondeg = false;
        }
        out.checks.add("chi is non-degenerate", nondeg);
    }
    return out;
}

}  // namespace hopf
