#include "hopf/bicrossed.hpp"

#include <algorithm>
#include <numeric>

#include "hopf/error.hpp"
#include "hopf/linalg.hpp"

namespace hopf {

Report ExtensionData::validate() const {
    Report rep;
    auto mpr = matched_pair_verify(mp);
    rep.add("matched pair", mpr.ok, mpr.failure);
    rep.add("sigma table shape", sigma.modulus == modulus && sigma.shape_ok(mp.gamma.order(), mp.f.order()));
    rep.add("tau table shape", tau.modulus == modulus && tau.shape_ok(mp.gamma.order(), mp.f.order()));
    if (!rep.all_pass()) return rep;
    int ge = mp.gamma.identity(), fe = mp.f.identity();
    bool ok = true;
    for (int s = 0; s < mp.gamma.order() && ok; ++s)
        for (int x = 0; x < mp.f.order() && ok; ++x)
            if (sigma.entries[s][x][fe] != 0 || sigma.entries[s][fe][x] != 0) ok = false;
    rep.add("sigma normalized", ok);
    ok = true;
    for (int x = 0; x < mp.f.order() && ok; ++x)
        for (int s = 0; s < mp.gamma.order() && ok; ++s)
            if (tau.entries[x][s][ge] != 0 || tau.entries[x][ge][s] != 0) ok = false;
    rep.add("tau normalized", ok);
    return rep;
}

Report MonoAlg::verify() const {
    Report rep;
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n && ok; ++k) {
                int ij = tgt(i, j);
                int lhs_t = ij < 0 ? -1 : tgt(ij, k);
                int jk = tgt(j, k);
                int rhs_t = jk < 0 ? -1 : tgt(i, jk);
                long lhs_c = lhs_t < 0 ? -1
                                       : mod_reduce(coeff_exp[(size_t)i * n + j] +
                                                        coeff_exp[(size_t)ij * n + k],
                                                    modulus);
                long rhs_c = rhs_t < 0 ? -1
                                       : mod_reduce(coeff_exp[(size_t)j * n + k] +
                                                        coeff_exp[(size_t)i * n + jk],
                                                    modulus);
                if (lhs_t != rhs_t || lhs_c != rhs_c) {
                    ok = false;
                    w = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + ")";
                }
            }
    rep.add("associativity", ok, w);
    ok = true;
    w.clear();
    for (int i = 0; i < n && ok; ++i) {
        // unit * e_i and e_i * unit must both equal e_i, with exact
        // accumulation in the field
        for (int side = 0; side < 2 && ok; ++side) {
            std::vector<CycloNum> acc(n, CycloNum(modulus));
            for (int u : unit_support) {
                int t = side == 0 ? tgt(u, i) : tgt(i, u);
                if (t < 0) continue;
                acc[t] += CycloNum::from_root(side == 0 ? cf(u, i) : cf(i, u));
            }
            for (int t = 0; t < n && ok; ++t) {
                CycloNum expect = t == i ? CycloNum::one(modulus) : CycloNum(modulus);
                if (acc[t] != expect) {
                    ok = false;
                    w = "unit against basis " + std::to_string(i);
                }
            }
        }
    }
    rep.add("unit", ok, w);
    return rep;
}

BicrossedHopf BicrossedHopf::build(const ExtensionData& data) {
    BicrossedHopf h;
    h.data_ = data;
    h.ng_ = data.mp.gamma.order();
    h.nf_ = data.mp.f.order();
    h.n_ = (long)h.ng_ * h.nf_;
    h.nh_ = data.modulus * data.mp.gamma.exponent();
    if (!data.sigma.shape_ok(h.ng_, h.nf_) || data.sigma.modulus != data.modulus)
        throw Error("build_bicrossed: sigma table has wrong shape or modulus");
    if (!data.tau.shape_ok(h.ng_, h.nf_) || data.tau.modulus != data.modulus)
        throw Error("build_bicrossed: tau table has wrong shape or modulus");
    if ((int)data.mp.left.size() != h.ng_ || (int)data.mp.right.size() != h.ng_)
        throw Error("build_bicrossed: action tables have wrong shape");
    for (int s = 0; s < h.ng_; ++s) {
        if ((int)data.mp.left[s].size() != h.nf_ || (int)data.mp.right[s].size() != h.nf_)
            throw Error("build_bicrossed: action tables have wrong shape");
        for (int x = 0; x < h.nf_; ++x)
            if (data.mp.left[s][x] < 0 || data.mp.left[s][x] >= h.ng_ ||
                data.mp.right[s][x] < 0 || data.mp.right[s][x] >= h.nf_)
                throw Error("build_bicrossed: action table index out of range");
    }

    long lift = h.nh_ / data.modulus;
    // multiplication: (e_s # x)(e_t # y) = [s<|x = t] sigma_s(x,y) e_s # xy
    h.alg_.n = h.n_;
    h.alg_.modulus = h.nh_;
    h.alg_.target.assign(h.n_ * h.n_, -1);
    h.alg_.coeff_exp.assign(h.n_ * h.n_, 0);
    for (int s = 0; s < h.ng_; ++s)
        for (int x = 0; x < h.nf_; ++x)
            for (int t = 0; t < h.ng_; ++t)
                for (int y = 0; y < h.nf_; ++y) {
                    if (data.mp.left[s][x] != t) continue;
                    int i = h.idx(s, x), j = h.idx(t, y);
                    h.alg_.target[(size_t)i * h.n_ + j] = h.idx(s, data.mp.f.mul(x, y));
                    h.alg_.coeff_exp[(size_t)i * h.n_ + j] =
                        mod_reduce(data.sigma.entries[s][x][y] * lift, h.nh_);
                }
    for (int s = 0; s < h.ng_; ++s)
        h.alg_.unit_support.push_back(h.idx(s, data.mp.f.identity()));

    // comultiplication: Delta(e_s # x) = sum_{gh=s} tau_x(g,h) e_g#(h|>x) (x) e_h#x
    h.comult_.assign(h.n_, {});
    for (int s = 0; s < h.ng_; ++s)
        for (int x = 0; x < h.nf_; ++x) {
            auto& terms = h.comult_[h.idx(s, x)];
            for (int g = 0; g < h.ng_; ++g) {
                int hh = data.mp.gamma.mul(data.mp.gamma.inv(g), s);
                ComultTerm term;
                term.i = h.idx(g, data.mp.right[hh][x]);
                term.j = h.idx(hh, x);
                term.c = RootExp(h.nh_, data.tau.entries[x][g][hh] * lift);
                terms.push_back(term);
            }
        }
    return h;
}

BicrossedHopf::Vec BicrossedHopf::unit_vec() const {
    Vec u = zero_vec();
    for (int k : alg_.unit_support) u[k] = CycloNum::one(nh_);
    return u;
}

BicrossedHopf::Vec BicrossedHopf::basis_vec(int k) const {
    Vec u = zero_vec();
    u[k] = CycloNum::one(nh_);
    return u;
}

BicrossedHopf::Vec BicrossedHopf::mul(const Vec& u, const Vec& v) const {
    if ((long)u.size() != n_ || (long)v.size() != n_) throw Error("mul: vector of wrong length");
    Vec out = zero_vec();
    for (int i = 0; i < n_; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (v[j].is_zero()) continue;
            int t = alg_.tgt(i, j);
            if (t < 0) continue;
            out[t] += u[i] * v[j] * CycloNum::from_root(alg_.cf(i, j));
        }
    }
    return out;
}

CycloNum BicrossedHopf::counit_of(const Vec& u) const {
    CycloNum e(nh_);
    for (int k = 0; k < n_; ++k)
        if (counit_one(k)) e += u[k];
    return e;
}

std::map<std::pair<int, int>, CycloNum> BicrossedHopf::comult_of(const Vec& u) const {
    std::map<std::pair<int, int>, CycloNum> out;
    for (int k = 0; k < n_; ++k) {
        if (u[k].is_zero()) continue;
        for (const auto& t : comult_[k]) {
            auto key = std::make_pair(t.i, t.j);
            auto it = out.find(key);
            CycloNum add = u[k] * CycloNum::from_root(t.c);
            if (it == out.end())
                out.emplace(key, add);
            else
                it->second += add;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

bool BicrossedHopf::is_grouplike(const Vec& u) const {
    if (counit_of(u) != CycloNum::one(nh_)) return false;
    auto d = comult_of(u);
    std::map<std::pair<int, int>, CycloNum> expect;
    for (int i = 0; i < n_; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (u[j].is_zero()) continue;
            expect.emplace(std::make_pair(i, j), u[i] * u[j]);
        }
    }
    return d == expect;
}

const std::vector<BicrossedHopf::Vec>& BicrossedHopf::antipode_cols() const {
    if (!antipode_) throw Error("antipode requested before compute_antipode succeeded");
    return *antipode_;
}

BicrossedHopf::Vec BicrossedHopf::apply_antipode(const Vec& u) const {
    const auto& cols = antipode_cols();
    Vec out = zero_vec();
    for (int i = 0; i < n_; ++i) {
        if (u[i].is_zero()) continue;
        for (int m = 0; m < n_; ++m)
            if (!cols[i][m].is_zero()) out[m] += u[i] * cols[i][m];
    }
    return out;
}

// ---------- axiom verification ----------

Report verify_bialgebra(BicrossedHopf& h) {
    Report rep;
    long n = h.dim(), N = h.field_modulus();
    rep.merge(h.algebra().verify());  // associativity, unit

    // coassociativity, termwise on canonical triple keys
    {
        bool ok = true;
        std::string w;
        for (int k = 0; k < n && ok; ++k) {
            std::map<std::tuple<int, int, int>, long> lhs, rhs;
            for (const auto& t1 : h.comult(k))
                for (const auto& t2 : h.comult(t1.i)) {
                    auto key = std::make_tuple(t2.i, t2.j, t1.j);
                    long e = mod_reduce(t1.c.exponent + t2.c.exponent, N);
                    if (lhs.count(key)) {
                        ok = false;
                        w = "duplicate triple key";
                        break;
                    }
                    lhs[key] = e;
                }
            for (const auto& t1 : h.comult(k))
                for (const auto& t2 : h.comult(t1.j)) {
                    auto key = std::make_tuple(t1.i, t2.i, t2.j);
                    long e = mod_reduce(t1.c.exponent + t2.c.exponent, N);
                    if (rhs.count(key)) {
                        ok = false;
                        w = "duplicate triple key";
                        break;
                    }
                    rhs[key] = e;
                }
            if (ok && lhs != rhs) {
                ok = false;
                w = "basis element " + std::to_string(k);
            }
        }
        rep.add("coassociativity", ok, w);
    }
    // counit axiom
    {
        bool ok = true;
        std::string w;
        for (int k = 0; k < n && ok; ++k) {
            // (eps (x) id) Delta = id = (id (x) eps) Delta, termwise
            std::map<int, long> left, right;
            for (const auto& t : h.comult(k)) {
                if (h.counit_one(t.i)) {
                    if (left.count(t.j)) {
                        ok = false;
                        w = "duplicate counit key";
                        break;
                    }
                    left[t.j] = t.c.exponent;
                }
                if (h.counit_one(t.j)) {
                    if (right.count(t.i)) {
                        ok = false;
                        w = "duplicate counit key";
                        break;
                    }
                    right[t.i] = t.c.exponent;
                }
            }
            std::map<int, long> expect{{k, 0}};
            if (ok && (left != expect || right != expect)) {
                ok = false;
                w = "basis element " + std::to_string(k);
            }
        }
        rep.add("counit", ok, w);
    }
    // Delta is an algebra map (on basis pairs, plus the unit). Terms are
    // accumulated in the field: distinct term pairs can in principle share a
    // tensor key, so exponent-level comparison would not be exact.
    {
        bool ok = true;
        std::string w;
        const auto& alg = h.algebra();
        std::vector<CycloNum> root_table(N);
        for (long e = 0; e < N; ++e) root_table[e] = CycloNum::from_root(RootExp(N, e));
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                std::map<std::pair<int, int>, CycloNum> lhs, rhs;
                int tij = alg.tgt(i, j);
                if (tij >= 0) {
                    long cij = alg.coeff_exp[(size_t)i * n + j];
                    for (const auto& t : h.comult(tij))
                        lhs.emplace(std::make_pair(t.i, t.j),
                                    root_table[mod_reduce(t.c.exponent + cij, N)]);
                }
                for (const auto& t1 : h.comult(i))
                    for (const auto& t2 : h.comult(j)) {
                        int a = alg.tgt(t1.i, t2.i);
                        int b = alg.tgt(t1.j, t2.j);
                        if (a < 0 || b < 0) continue;
                        long e = mod_reduce(t1.c.exponent + t2.c.exponent +
                                                alg.coeff_exp[(size_t)t1.i * n + t2.i] +
                                                alg.coeff_exp[(size_t)t1.j * n + t2.j],
                                            N);
                        auto key = std::make_pair(a, b);
                        auto it = rhs.find(key);
                        if (it == rhs.end())
                            rhs.emplace(key, root_table[e]);
                        else
                            it->second += root_table[e];
                    }
                for (auto it = rhs.begin(); it != rhs.end();)
                    it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
                if (lhs != rhs) {
                    ok = false;
                    w = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        rep.add("comultiplication multiplicative", ok, w);
    }
    // Delta(1) = 1 (x) 1
    {
        auto d = h.comult_of(h.unit_vec());
        std::map<std::pair<int, int>, CycloNum> expect;
        for (int a : h.algebra().unit_support)
            for (int b : h.algebra().unit_support)
                expect.emplace(std::make_pair(a, b), CycloNum::one(N));
        rep.add("comultiplication preserves unit", d == expect);
    }
    // eps is an algebra map
    {
        bool ok = true;
        std::string w;
        const auto& alg = h.algebra();
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                int t = alg.tgt(i, j);
                bool lhs_one = t >= 0 && h.counit_one(t) && alg.coeff_exp[(size_t)i * n + j] == 0;
                bool lhs_zero = t < 0 || !h.counit_one(t);
                bool rhs_one = h.counit_one(i) && h.counit_one(j);
                if (rhs_one ? !lhs_one : !lhs_zero) {
                    ok = false;
                    w = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        rep.add("counit multiplicative", ok, w);
        rep.add("counit preserves unit", h.counit_of(h.unit_vec()) == CycloNum::one(N));
    }
    if (rep.all_pass()) h.verified_ = true;
    return rep;
}

// ---------- antipode ----------

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

AntipodeOutcome compute_antipode(BicrossedHopf& h) {
    if (!h.bialgebra_verified())
        throw Error("compute_antipode: verify_bialgebra must pass first");
    long n = h.dim(), N = h.field_modulus();
    const auto& alg = h.algebra();

    // coalgebra components couple equation k with unknown columns i appearing
    // in the first tensor leg of Delta(e_k)
    UnionFind uf(2 * n);
    for (int k = 0; k < n; ++k)
        for (const auto& t : h.comult(k)) uf.unite(k, n + t.i);
    std::map<int, std::vector<int>> comp_eqs, comp_cols;
    for (int k = 0; k < n; ++k) comp_eqs[uf.find(k)].push_back(k);
    for (int i = 0; i < n; ++i) comp_cols[uf.find(n + i)].push_back(i);

    std::vector<BicrossedHopf::Vec> cols(n, h.zero_vec());
    std::vector<bool> col_set(n, false);
    for (auto& [root, eqs] : comp_eqs) {
        auto& cset = comp_cols[root];
        if (cset.empty()) continue;
        std::map<int, int> col_pos;
        for (size_t c = 0; c < cset.size(); ++c) col_pos[cset[c]] = (int)c;
        long unknowns = (long)cset.size() * n;
        std::vector<std::vector<CycloNum>> M(eqs.size() * n,
                                             std::vector<CycloNum>(unknowns, CycloNum(N)));
        std::vector<CycloNum> rhs(eqs.size() * n, CycloNum(N));
        for (size_t ke = 0; ke < eqs.size(); ++ke) {
            int k = eqs[ke];
            for (const auto& t : h.comult(k)) {
                // term c * S(e_i) e_j: S(e_i) = sum_m S[m][i] e_m
                for (int m = 0; m < n; ++m) {
                    int tg = alg.tgt(m, t.j);
                    if (tg < 0) continue;
                    long e = mod_reduce(t.c.exponent + alg.coeff_exp[(size_t)m * n + t.j], N);
                    M[ke * n + tg][(size_t)col_pos[t.i] * n + m] +=
                        CycloNum::from_root(RootExp(N, e));
                }
            }
            if (h.counit_one(k))
                for (int u : alg.unit_support) rhs[ke * n + u] = CycloNum::one(N);
        }
        auto sol = solve_linear_cyclo(N, M, rhs);
        if (!sol.consistent)
            return {false, "convolution system inconsistent on component of basis " +
                               std::to_string(eqs[0])};
        for (int i : cset) {
            for (int m = 0; m < n; ++m) cols[i][m] = sol.x[(size_t)col_pos[i] * n + m];
            col_set[i] = true;
        }
    }
    for (int i = 0; i < n; ++i)
        if (!col_set[i])
            return {false, "column " + std::to_string(i) + " not covered by any component"};

    // double-check both convolution identities exactly
    for (int k = 0; k < n; ++k) {
        BicrossedHopf::Vec left = h.zero_vec(), right = h.zero_vec();
        for (const auto& t : h.comult(k)) {
            CycloNum c = CycloNum::from_root(t.c);
            auto l = h.mul(cols[t.i], h.basis_vec(t.j));
            auto r = h.mul(h.basis_vec(t.i), cols[t.j]);
            for (int m = 0; m < n; ++m) {
                left[m] += c * l[m];
                right[m] += c * r[m];
            }
        }
        BicrossedHopf::Vec expect = h.zero_vec();
        if (h.counit_one(k)) expect = h.unit_vec();
        if (left != expect)
            return {false, "S(h_1) h_2 = eps(h) 1 fails at basis " + std::to_string(k)};
        if (right != expect)
            return {false, "h_1 S(h_2) = eps(h) 1 fails at basis " + std::to_string(k)};
    }
    h.antipode_ = std::move(cols);
    return {true, ""};
}

// ---------- group-likes ----------

namespace {

std::vector<int> right_fixed_points(const MatchedPair& mp) {
    std::vector<int> out;
    for (int x = 0; x < mp.f.order(); ++x) {
        bool fixed = true;
        for (int s = 0; s < mp.gamma.order() && fixed; ++s)
            if (mp.right[s][x] != x) fixed = false;
        if (fixed) out.push_back(x);
    }
    return out;
}

GrouplikeSet assemble_grouplikes(const BicrossedHopf& h,
                                 std::vector<BicrossedHopf::Vec> elems) {
    for (const auto& v : elems)
        if (!h.is_grouplike(v)) throw InternalError("grouplikes: non-grouplike candidate kept");
    std::sort(elems.begin(), elems.end(),
              [](const BicrossedHopf::Vec& a, const BicrossedHopf::Vec& b) {
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
              });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    GrouplikeSet gs;
    gs.elements = std::move(elems);
    int m = (int)gs.elements.size();
    auto find = [&](const BicrossedHopf::Vec& v) {
        auto it = std::lower_bound(gs.elements.begin(), gs.elements.end(), v,
                                   [](const BicrossedHopf::Vec& a, const BicrossedHopf::Vec& b) {
                                       return std::lexicographical_compare(a.begin(), a.end(),
                                                                           b.begin(), b.end());
                                   });
        if (it == gs.elements.end() || !(*it == v)) return -1;
        return (int)(it - gs.elements.begin());
    };
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int t = find(h.mul(gs.elements[a], gs.elements[b]));
            if (t < 0) throw InternalError("grouplikes: set is not closed under multiplication");
            table[a][b] = t;
        }
    gs.table = FinGroup(std::move(table));
    return gs;
}

}  // namespace

int GrouplikeSet::find(const BicrossedHopf::Vec& v) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == v) return (int)i;
    return -1;
}

GrouplikeSet grouplikes_structural(const BicrossedHopf& h) {
    if (!h.bialgebra_verified()) throw Error("grouplikes_structural: unverified Hopf datum");
    const auto& mp = h.data().mp;
    long NH = h.field_modulus();
    std::vector<BicrossedHopf::Vec> elems;
    for (int x : right_fixed_points(mp)) {
        Cocycle2 tx{h.data().tau.modulus, h.data().tau.entries[x]};
        CoboundaryFamily fam = coboundary_solve_all(mp.gamma, tx);
        if (!fam.trivial_class) continue;
        long M = fam.value_modulus;  // = N * exponent(Gamma) = NH
        int e = mp.gamma.identity();
        auto var = [&](int s) { return s < e ? s : s - 1; };
        fam.homs.for_each([&](const std::vector<long>& hom) {
            BicrossedHopf::Vec v = h.zero_vec();
            for (int s = 0; s < mp.gamma.order(); ++s) {
                long ex = fam.gamma0[s];
                if (s != e) ex = mod_reduce(ex + hom[var(s)], M);
                v[h.idx(s, x)] = CycloNum::from_root(RootExp(M, ex), NH);
            }
            elems.push_back(std::move(v));
            return true;
        });
    }
    return assemble_grouplikes(h, std::move(elems));
}

GrouplikeSet grouplikes_oracle(const BicrossedHopf& h, long max_dim) {
    if (!h.bialgebra_verified()) throw Error("grouplikes_oracle: unverified Hopf datum");
    if (h.dim() > max_dim) throw LimitError("grouplikes_oracle: dimension above limit");
    const auto& mp = h.data().mp;
    const FinGroup& g = mp.gamma;
    long NH = h.field_modulus();

    // tightest modulus that can carry solutions of d(gamma) = tau_x
    long n_eff = 1;
    for (const auto& slice : h.data().tau.entries)
        for (const auto& row : slice)
            for (long v : row) {
                if (v == 0) continue;
                long ord = h.data().tau.modulus / std::gcd(h.data().tau.modulus, v);
                n_eff = std::lcm(n_eff, ord);
            }
    long M = n_eff * g.exponent();
    // an exponent e mod N carries over to mu_M as e * M / N (exact division
    // because every tau value has order dividing n_eff)
    long tau_lift_num = M, tau_lift_den = h.data().tau.modulus;

    // generating sequence and a fixed evaluation order: every element is some
    // product (previous element) * generator
    std::vector<int> gens;
    {
        Subgroup span = generated_subgroup(g, {});
        while (span.order() < g.order()) {
            for (int a = 0; a < g.order(); ++a)
                if (!span.contains(a)) {
                    gens.push_back(a);
                    break;
                }
            span = generated_subgroup(g, gens);
        }
    }
    struct Step {
        int element, prev, gen;
    };
    std::vector<Step> order;
    {
        std::vector<bool> have(g.order(), false);
        have[g.identity()] = true;
        std::vector<int> frontier = {g.identity()};
        while ((int)order.size() + 1 < g.order()) {
            std::vector<int> next;
            for (int p : frontier)
                for (int ge : gens) {
                    int q = g.mul(p, ge);
                    if (!have[q]) {
                        have[q] = true;
                        order.push_back({q, p, ge});
                        next.push_back(q);
                    }
                }
            frontier = std::move(next);
            if (frontier.empty() && (int)order.size() + 1 < g.order())
                throw InternalError("grouplikes_oracle: generators do not generate");
        }
    }

    std::vector<BicrossedHopf::Vec> found;
    std::vector<long> assign(gens.size(), 0);
    for (int x = 0; x < mp.f.order(); ++x) {
        auto tau_e = [&](int s, int t) {
            // exponent of tau_x(s,t) in mu_M
            long e = h.data().tau.entries[x][s][t];
            return mod_reduce(e * tau_lift_num / tau_lift_den, M);
        };
        std::fill(assign.begin(), assign.end(), 0);
        while (true) {
            // propagate gamma from generator values: gamma(p g) = gamma(p) +
            // gamma(g) - tau_x(p, g)
            std::vector<long> gamma(g.order(), 0);
            for (size_t gi = 0; gi < gens.size(); ++gi) gamma[gens[gi]] = assign[gi];
            // identity gets value 0; generator table values may be
            // overwritten consistently by the walk below when a generator is
            // reached as a product, so assign first, then walk
            for (const auto& st : order)
                gamma[st.element] =
                    mod_reduce(gamma[st.prev] + gamma[st.gen] - tau_e(st.prev, st.gen), M);
            BicrossedHopf::Vec v = h.zero_vec();
            for (int s = 0; s < g.order(); ++s)
                v[h.idx(s, x)] = CycloNum::from_root(RootExp(M, gamma[s]), NH);
            if (h.is_grouplike(v)) found.push_back(std::move(v));
            size_t i = 0;
            for (; i < assign.size(); ++i) {
                if (++assign[i] < M) break;
                assign[i] = 0;
            }
            if (i == assign.size()) break;
        }
    }
    return assemble_grouplikes(h, std::move(found));
}

CocentralResult is_cocentral(const BicrossedHopf& h) {
    if (!h.bialgebra_verified()) throw Error("is_cocentral: unverified Hopf datum");
    for (int k = 0; k < h.dim(); ++k) {
        // pi(h_1) (x) h_2 vs pi(h_2) (x) h_1 with pi(e_s # x) = [s = e] x
        std::vector<std::tuple<int, int, long>> lhs, rhs;
        int ge = h.data().mp.gamma.identity();
        for (const auto& t : h.comult(k)) {
            if (h.s_of(t.i) == ge) lhs.emplace_back(h.x_of(t.i), t.j, t.c.exponent);
            if (h.s_of(t.j) == ge) rhs.emplace_back(h.x_of(t.j), t.i, t.c.exponent);
        }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs)
            return {false, "basis element (s,x)=(" + std::to_string(h.s_of(k)) + "," +
                               std::to_string(h.x_of(k)) + ")"};
    }
    return {true, ""};
}

MonoAlg dual_algebra(const BicrossedHopf& h) {
    if (!h.bialgebra_verified()) throw Error("dual_algebra: unverified Hopf datum");
    long n = h.dim();
    MonoAlg d;
    d.n = n;
    d.modulus = h.field_modulus();
    d.target.assign(n * n, -1);
    d.coeff_exp.assign(n * n, 0);
    for (int k = 0; k < n; ++k)
        for (const auto& t : h.comult(k)) {
            size_t pos = (size_t)t.i * n + t.j;
            if (d.target[pos] != -1)
                throw InternalError("dual_algebra: comultiplication is not monomial");
            d.target[pos] = k;
            d.coeff_exp[pos] = t.c.exponent;
        }
    for (int x = 0; x < h.f_order(); ++x)
        d.unit_support.push_back(h.idx(h.data().mp.gamma.identity(), x));
    auto rep = d.verify();
    if (!rep.all_pass())
        throw InternalError("dual_algebra: " + rep.first_failure()->name + " fails at " +
                            rep.first_failure()->witness);
    return d;
}

}  // namespace hopf
