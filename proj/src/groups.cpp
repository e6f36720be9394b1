#include "hopf/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hopf/error.hpp"

namespace hopf {

FinGroup::FinGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    n_ = (int)table_.size();
    if (n_ == 0) throw Error("FinGroup: empty table");
    for (const auto& row : table_) {
        if ((int)row.size() != n_) throw Error("FinGroup: table is not square");
        for (int v : row)
            if (v < 0 || v >= n_) throw Error("FinGroup: table entry out of range");
    }
    e_ = -1;
    for (int c = 0; c < n_; ++c) {
        bool ok = true;
        for (int a = 0; a < n_ && ok; ++a) ok = table_[c][a] == a && table_[a][c] == a;
        if (ok) {
            e_ = c;
            break;
        }
    }
    if (e_ == -1) throw Error("FinGroup: no identity element");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (table_[a][b] == e_ && table_[b][a] == e_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] == -1) throw Error("FinGroup: element without inverse");
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw Error("FinGroup: table is not associative at (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")");
    ord_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        int k = 1, p = a;
        while (p != e_) {
            p = table_[p][a];
            ++k;
        }
        ord_[a] = k;
    }
}

FinGroup FinGroup::cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FinGroup(std::move(t));
}

FinGroup FinGroup::trivial() { return cyclic(1); }

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
    int n = a.order() * b.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ai = i / b.order(), bi = i % b.order();
            int aj = j / b.order(), bj = j % b.order();
            t[i][j] = a.mul(ai, aj) * b.order() + b.mul(bi, bj);
        }
    return FinGroup(std::move(t));
}

namespace {

// permutations of {0..k-1} in lexicographic order
std::vector<std::vector<int>> all_perms(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

FinGroup perm_group(const std::vector<std::vector<int>>& perms) {
    int n = (int)perms.size();
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < n; ++i) idx[perms[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> c(perms[i].size());
            for (size_t k = 0; k < c.size(); ++k) c[k] = perms[i][perms[j][k]];
            auto it = idx.find(c);
            if (it == idx.end()) throw Error("perm_group: set not closed under composition");
            t[i][j] = it->second;
        }
    return FinGroup(std::move(t));
}

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

}  // namespace

FinGroup FinGroup::symmetric3() { return perm_group(all_perms(3)); }

FinGroup FinGroup::alternating4() {
    std::vector<std::vector<int>> evens;
    for (const auto& p : all_perms(4))
        if (perm_sign(p) == 1) evens.push_back(p);
    return perm_group(evens);
}

long FinGroup::exponent() const {
    long e = 1;
    for (int a = 0; a < n_; ++a) e = std::lcm(e, (long)ord_[a]);
    return e;
}

bool FinGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::vector<int> FinGroup::order_profile() const {
    std::vector<int> p = ord_;
    std::sort(p.begin(), p.end());
    return p;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

bool Subgroup::is_closed() const {
    if (!contains(parent.identity())) return false;
    for (int a : members) {
        if (!contains(parent.inv(a))) return false;
        for (int b : members)
            if (!contains(parent.mul(a, b))) return false;
    }
    return true;
}

int Subgroup::member_index(int g) const {
    auto it = std::lower_bound(members.begin(), members.end(), g);
    if (it == members.end() || *it != g) return -1;
    return (int)(it - members.begin());
}

FinGroup Subgroup::as_group() const {
    int k = order();
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int m = member_index(parent.mul(members[i], members[j]));
            if (m < 0) throw Error("Subgroup::as_group: member set is not closed");
            t[i][j] = m;
        }
    return FinGroup(std::move(t));
}

Subgroup generated_subgroup(const FinGroup& g, const std::vector<int>& gens) {
    std::set<int> acc = {g.identity()};
    std::vector<int> frontier(acc.begin(), acc.end());
    for (int x : gens) acc.insert(x);
    frontier.assign(acc.begin(), acc.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int b : std::vector<int>(acc.begin(), acc.end())) {
                for (int p : {g.mul(a, b), g.mul(b, a)})
                    if (acc.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    Subgroup s{g, {}};
    s.members.assign(acc.begin(), acc.end());
    return s;
}

std::vector<long> abelian_invariants(const FinGroup& g) {
    if (!g.is_abelian()) throw Error("abelian_invariants: group is not abelian");
    // peel off a cyclic factor of maximal order, then recurse on the quotient
    std::vector<long> factors;  // collected largest-first
    FinGroup cur = g;
    while (cur.order() > 1) {
        int best = 0;
        for (int a = 0; a < cur.order(); ++a)
            if (cur.element_order(a) > cur.element_order(best)) best = a;
        long m = cur.element_order(best);
        factors.push_back(m);
        Subgroup cyc = generated_subgroup(cur, {best});
        // quotient table on cosets
        std::vector<int> coset_of(cur.order(), -1);
        std::vector<int> reps;
        for (int a = 0; a < cur.order(); ++a) {
            if (coset_of[a] != -1) continue;
            int id = (int)reps.size();
            reps.push_back(a);
            for (int c : cyc.members) coset_of[cur.mul(a, c)] = id;
        }
        std::vector<std::vector<int>> qt(reps.size(), std::vector<int>(reps.size()));
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = 0; j < reps.size(); ++j)
                qt[i][j] = coset_of[cur.mul(reps[i], reps[j])];
        cur = FinGroup(std::move(qt));
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

// ---------- isomorphism search ----------

namespace {

struct IsoSearch {
    const FinGroup& g1;
    const FinGroup& g2;
    std::vector<int> gens;      // generating sequence of g1
    std::vector<int> map;       // partial map g1 -> g2 (-1 = unset)
    std::vector<bool> used;     // images already taken in g2

    bool extend(size_t gi) {
        if (gi == gens.size()) return true;
        int g = gens[gi];
        if (map[g] != -1) return extend(gi + 1);
        for (int img = 0; img < g2.order(); ++img) {
            if (used[img] || g2.element_order(img) != g1.element_order(g)) continue;
            auto saved_map = map;
            auto saved_used = used;
            if (assign(g, img) && extend(gi + 1)) return true;
            map = std::move(saved_map);
            used = std::move(saved_used);
        }
        return false;
    }

    // set map[g] = img and close under multiplication; false on contradiction
    bool assign(int g, int img) {
        map[g] = img;
        used[img] = true;
        while (true) {
            bool changed = false;
            for (int a = 0; a < g1.order(); ++a) {
                if (map[a] == -1) continue;
                for (int b = 0; b < g1.order(); ++b) {
                    if (map[b] == -1) continue;
                    int p = g1.mul(a, b), q = g2.mul(map[a], map[b]);
                    if (map[p] == -1) {
                        if (used[q] || g1.element_order(p) != g2.element_order(q)) return false;
                        map[p] = q;
                        used[q] = true;
                        changed = true;
                    } else if (map[p] != q) {
                        return false;
                    }
                }
            }
            if (!changed) break;
        }
        return true;
    }
};

}  // namespace

IsoResult group_iso_test(const FinGroup& g1, const FinGroup& g2) {
    if (g1.order() > 64 || g2.order() > 64)
        throw LimitError("group_iso_test: order above the 64 limit");
    IsoResult res;
    if (g1.order() != g2.order()) return res;
    if (g1.order_profile() != g2.order_profile()) return res;

    // greedy generating sequence: always add an element outside the closure
    IsoSearch search{g1, g2, {}, std::vector<int>(g1.order(), -1),
                     std::vector<bool>(g2.order(), false)};
    Subgroup span = generated_subgroup(g1, {});
    while (span.order() < g1.order()) {
        int pick = -1;
        for (int a = 0; a < g1.order(); ++a)
            if (!span.contains(a)) {
                pick = a;
                break;
            }
        search.gens.push_back(pick);
        std::vector<int> gens = search.gens;
        span = generated_subgroup(g1, gens);
    }
    search.map[g1.identity()] = g2.identity();
    search.used[g2.identity()] = true;
    if (search.extend(0)) {
        res.isomorphic = true;
        res.witness = search.map;
        for (int v : res.witness)
            if (v == -1) throw InternalError("group_iso_test: incomplete witness");
    }
    return res;
}

// ---------- abelian groups ----------

AbGroup::AbGroup(std::vector<long> invariants) : m_(std::move(invariants)) {
    for (size_t i = 0; i < m_.size(); ++i) {
        if (m_[i] < 2) throw Error("AbGroup: invariant factors must be >= 2");
        if (i + 1 < m_.size() && m_[i + 1] % m_[i] != 0)
            throw Error("AbGroup: invariant factors must form a divisibility chain");
        order_ *= m_[i];
    }
}

std::vector<long> AbGroup::tuple(long index) const {
    std::vector<long> t(m_.size());
    for (long i = (long)m_.size() - 1; i >= 0; --i) {
        t[i] = index % m_[i];
        index /= m_[i];
    }
    return t;
}

long AbGroup::index(const std::vector<long>& tuple) const {
    if ((long)tuple.size() != rank()) throw Error("AbGroup: tuple of wrong length");
    long idx = 0;
    for (size_t i = 0; i < m_.size(); ++i) idx = idx * m_[i] + mod_reduce(tuple[i], m_[i]);
    return idx;
}

long AbGroup::add(long a, long b) const {
    auto ta = tuple(a), tb = tuple(b);
    for (size_t i = 0; i < m_.size(); ++i) ta[i] = (ta[i] + tb[i]) % m_[i];
    return index(ta);
}

long AbGroup::neg(long a) const {
    auto t = tuple(a);
    for (size_t i = 0; i < m_.size(); ++i) t[i] = (m_[i] - t[i]) % m_[i];
    return index(t);
}

long AbGroup::element_order(long a) const {
    auto t = tuple(a);
    long o = 1;
    for (size_t i = 0; i < m_.size(); ++i)
        if (t[i] != 0) o = std::lcm(o, m_[i] / std::gcd(m_[i], t[i]));
    return o;
}

FinGroup AbGroup::to_fingroup() const {
    long n = order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) t[a][b] = (int)add(a, b);
    return FinGroup(std::move(t));
}

RootExp char_eval(const Character& chi, long a, long N) {
    const auto& m = chi.group.invariants();
    if ((long)chi.exponents.size() != chi.group.rank())
        throw Error("char_eval: exponent tuple of wrong length");
    for (long mi : m)
        if (N % mi != 0) throw Error("char_eval: N is not a multiple of every invariant");
    auto t = chi.group.tuple(a);
    long e = 0;
    for (size_t i = 0; i < m.size(); ++i)
        e = mod_reduce(e + chi.exponents[i] % m[i] * t[i] % N * (N / m[i]), N);
    return RootExp(N, e);
}

// ---------- automorphism actions ----------

AutAction::AutAction(FinGroup f, AbGroup target, std::vector<std::vector<std::vector<long>>> mats)
    : f_(std::move(f)), a_(std::move(target)), mats_(std::move(mats)) {
    int nf = f_.order();
    long r = a_.rank();
    if ((int)mats_.size() != nf) throw Error("AutAction: one matrix per F-element required");
    perms_.assign(nf, std::vector<long>(a_.order()));
    for (int x = 0; x < nf; ++x) {
        const auto& mx = mats_[x];
        if ((long)mx.size() != r) throw Error("AutAction: matrix of wrong shape");
        for (const auto& row : mx)
            if ((long)row.size() != r) throw Error("AutAction: matrix of wrong shape");
        std::vector<bool> hit(a_.order(), false);
        for (long a = 0; a < a_.order(); ++a) {
            auto t = a_.tuple(a);
            std::vector<long> u(r, 0);
            for (long i = 0; i < r; ++i) {
                long acc = 0;
                for (long j = 0; j < r; ++j)
                    acc = mod_reduce(acc + mx[i][j] % a_.invariants()[i] * t[j],
                                     a_.invariants()[i]);
                u[i] = acc;
            }
            perms_[x][a] = a_.index(u);
            hit[perms_[x][a]] = true;
        }
        for (bool h : hit)
            if (!h) throw Error("AutAction: matrix is not invertible on elements");
        // additivity can fail for matrices whose entries ignore the
        // divisibility constraints between invariant factors
        for (long a = 0; a < a_.order(); ++a)
            for (long b = a; b < a_.order(); ++b)
                if (perms_[x][a_.add(a, b)] != a_.add(perms_[x][a], perms_[x][b]))
                    throw Error("AutAction: matrix does not act additively");
    }
    // left action: map(xy) = map(x) o map(y), identity acts trivially
    for (long a = 0; a < a_.order(); ++a)
        if (perms_[f_.identity()][a] != a)
            throw Error("AutAction: identity must act trivially");
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y) {
            int xy = f_.mul(x, y);
            for (long a = 0; a < a_.order(); ++a)
                if (perms_[xy][a] != perms_[x][perms_[y][a]])
                    throw Error("AutAction: maps do not respect the group law at (" +
                                std::to_string(x) + "," + std::to_string(y) + ")");
        }
}

AutAction AutAction::trivial(const FinGroup& f, const AbGroup& target) {
    long r = target.rank();
    std::vector<std::vector<long>> id(r, std::vector<long>(r, 0));
    for (long i = 0; i < r; ++i) id[i][i] = 1;
    return AutAction(f, target, std::vector<std::vector<std::vector<long>>>(f.order(), id));
}

std::vector<AutAction> AutAction::all_actions(const FinGroup& f, const AbGroup& a) {
    long r = a.rank();
    long n = a.order();
    // all automorphisms of a, as matrices (entry (i,j) ranges over Z_{m_i})
    std::vector<std::vector<std::vector<long>>> autos;
    {
        std::vector<long> radix;
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) radix.push_back(a.invariants()[i]);
        std::vector<long> digits(radix.size(), 0);
        while (true) {
            std::vector<std::vector<long>> m(r, std::vector<long>(r));
            for (long i = 0; i < r; ++i)
                for (long j = 0; j < r; ++j) m[i][j] = digits[i * r + j];
            // bijectivity and additivity on elements
            std::vector<long> img(n);
            std::vector<bool> hit(n, false);
            bool ok = true;
            for (long x = 0; x < n && ok; ++x) {
                auto t = a.tuple(x);
                std::vector<long> u(r, 0);
                for (long i = 0; i < r; ++i) {
                    long acc = 0;
                    for (long j = 0; j < r; ++j)
                        acc = mod_reduce(acc + m[i][j] % a.invariants()[i] * t[j],
                                         a.invariants()[i]);
                    u[i] = acc;
                }
                img[x] = a.index(u);
                if (hit[img[x]]) ok = false;
                hit[img[x]] = true;
            }
            for (long x = 0; x < n && ok; ++x)
                for (long y = x; y < n && ok; ++y)
                    if (img[a.add(x, y)] != a.add(img[x], img[y])) ok = false;
            if (ok) autos.push_back(std::move(m));
            size_t p = 0;
            for (; p < digits.size(); ++p) {
                if (++digits[p] < radix[p]) break;
                digits[p] = 0;
            }
            if (p == digits.size()) break;
            if (digits.empty()) break;
        }
        if (autos.empty()) autos.push_back({});  // trivial group: one empty matrix
    }
    // assignments of automorphisms to every F-element, kept when they form a
    // homomorphism
    std::vector<AutAction> out;
    std::vector<size_t> pick(f.order(), 0);
    auto compose = [&](size_t i, size_t j) -> long {
        // find autos index of autos[i] o autos[j] by permutation comparison
        std::vector<long> pi(n), pj(n);
        for (long x = 0; x < n; ++x) {
            auto apply = [&](const std::vector<std::vector<long>>& m, long v) {
                auto t = a.tuple(v);
                std::vector<long> u(r, 0);
                for (long ii = 0; ii < r; ++ii) {
                    long acc = 0;
                    for (long jj = 0; jj < r; ++jj)
                        acc = mod_reduce(acc + m[ii][jj] % a.invariants()[ii] * t[jj],
                                         a.invariants()[ii]);
                    u[ii] = acc;
                }
                return a.index(u);
            };
            pj[x] = apply(autos[j], x);
            pi[x] = apply(autos[i], pj[x]);
        }
        for (size_t k = 0; k < autos.size(); ++k) {
            bool same = true;
            for (long x = 0; x < n && same; ++x) {
                auto t = a.tuple(x);
                std::vector<long> u(r, 0);
                for (long ii = 0; ii < r; ++ii) {
                    long acc = 0;
                    for (long jj = 0; jj < r; ++jj)
                        acc = mod_reduce(acc + autos[k][ii][jj] % a.invariants()[ii] * t[jj],
                                         a.invariants()[ii]);
                    u[ii] = acc;
                }
                if (a.index(u) != pi[x]) same = false;
            }
            if (same) return (long)k;
        }
        return -1;
    };
    // composition table of the automorphism group
    std::vector<std::vector<long>> comp(autos.size(), std::vector<long>(autos.size()));
    for (size_t i = 0; i < autos.size(); ++i)
        for (size_t j = 0; j < autos.size(); ++j) {
            long k = compose(i, j);
            if (k < 0) throw InternalError("all_actions: composition closed set");
            comp[i][j] = k;
        }
    size_t id_idx = 0;
    for (size_t k = 0; k < autos.size(); ++k) {
        bool is_id = true;
        for (size_t j = 0; j < autos.size() && is_id; ++j)
            if (comp[k][j] != (long)j) is_id = false;
        if (is_id) {
            id_idx = k;
            break;
        }
    }
    double space = 1;
    for (int x = 0; x < f.order(); ++x) space *= (double)autos.size();
    if (space > 2e7) throw LimitError("all_actions: search space too large");
    while (true) {
        bool hom = pick[f.identity()] == id_idx;
        for (int x = 0; x < f.order() && hom; ++x)
            for (int y = 0; y < f.order() && hom; ++y)
                if (comp[pick[x]][pick[y]] != (long)pick[f.mul(x, y)]) hom = false;
        if (hom) {
            std::vector<std::vector<std::vector<long>>> mats;
            for (int x = 0; x < f.order(); ++x) mats.push_back(autos[pick[x]]);
            out.emplace_back(f, a, std::move(mats));
        }
        size_t p = 0;
        for (; p < pick.size(); ++p) {
            if (++pick[p] < autos.size()) break;
            pick[p] = 0;
        }
        if (p == pick.size()) break;
    }
    return out;
}

bool AutAction::is_trivial() const {
    for (const auto& p : perms_)
        for (long a = 0; a < (long)p.size(); ++a)
            if (p[a] != a) return false;
    return true;
}

AutAction action_transpose(const AutAction& act) {
    const AbGroup& a = act.target();
    const auto& m = a.invariants();
    long r = a.rank();
    std::vector<std::vector<std::vector<long>>> mats(act.group().order());
    for (int x = 0; x < act.group().order(); ++x) {
        const auto& src = act.matrix(act.group().inv(x));
        std::vector<std::vector<long>> t(r, std::vector<long>(r, 0));
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) {
                // transpose with respect to the pairing sum a_i b_i N/m_i:
                // entry (i,j) picks up the weight ratio m_i/m_j
                long num = src[j][i] * m[i];
                if (num % m[j] != 0)
                    throw InternalError("action_transpose: non-integral transpose entry");
                t[i][j] = mod_reduce(num / m[j], m[i]);
            }
        mats[x] = std::move(t);
    }
    return AutAction(act.group(), a, std::move(mats));
}

// ---------- matched pairs ----------

MatchedPair MatchedPair::trivial(FinGroup gamma, FinGroup f) {
    MatchedPair mp{std::move(gamma), std::move(f), {}, {}};
    mp.left.assign(mp.gamma.order(), std::vector<int>(mp.f.order()));
    mp.right.assign(mp.gamma.order(), std::vector<int>(mp.f.order()));
    for (int s = 0; s < mp.gamma.order(); ++s)
        for (int x = 0; x < mp.f.order(); ++x) {
            mp.left[s][x] = s;
            mp.right[s][x] = x;
        }
    return mp;
}

bool MatchedPair::right_trivial() const {
    for (int s = 0; s < gamma.order(); ++s)
        for (int x = 0; x < f.order(); ++x)
            if (right[s][x] != x) return false;
    return true;
}

MatchedPairReport matched_pair_verify(const MatchedPair& mp) {
    MatchedPairReport rep;
    int ng = mp.gamma.order(), nf = mp.f.order();
    if ((int)mp.left.size() != ng || (int)mp.right.size() != ng) {
        rep.failure = "action tables have wrong shape";
        return rep;
    }
    for (int s = 0; s < ng; ++s) {
        if ((int)mp.left[s].size() != nf || (int)mp.right[s].size() != nf) {
            rep.failure = "action tables have wrong shape";
            return rep;
        }
        for (int x = 0; x < nf; ++x) {
            if (mp.left[s][x] < 0 || mp.left[s][x] >= ng || mp.right[s][x] < 0 ||
                mp.right[s][x] >= nf) {
                rep.failure = "action table entry out of range";
                return rep;
            }
        }
    }
    // product on pairs (s, x) <-> x s in L = F Gamma:
    // (s,x)(t,y) = ((s <| y) t, x (s |> y))
    long n = (long)ng * nf;
    auto mul = [&](long p, long q) {
        int s = (int)(p / nf), x = (int)(p % nf);
        int t = (int)(q / nf), y = (int)(q % nf);
        int sl = mp.left[s][y], sr = mp.right[s][y];
        return (long)mp.gamma.mul(sl, t) * nf + mp.f.mul(x, sr);
    };
    long e = (long)mp.gamma.identity() * nf + mp.f.identity();
    for (long p = 0; p < n; ++p) {
        if (mul(e, p) != p || mul(p, e) != p) {
            rep.failure = "identity fails at pair " + std::to_string(p);
            return rep;
        }
    }
    std::vector<bool> has_inv(n, false);
    for (long p = 0; p < n; ++p)
        for (long q = 0; q < n; ++q)
            if (mul(p, q) == e && mul(q, p) == e) has_inv[p] = true;
    for (long p = 0; p < n; ++p)
        if (!has_inv[p]) {
            rep.failure = "pair " + std::to_string(p) + " has no inverse";
            return rep;
        }
    for (long p = 0; p < n; ++p)
        for (long q = 0; q < n; ++q)
            for (long r = 0; r < n; ++r)
                if (mul(mul(p, q), r) != mul(p, mul(q, r))) {
                    rep.failure = "associativity fails at pairs (" + std::to_string(p) + "," +
                                  std::to_string(q) + "," + std::to_string(r) + ")";
                    return rep;
                }
    rep.ok = true;
    return rep;
}

MatchedPair matched_pair_from_factorization(const FinGroup& l, const std::vector<int>& gamma_elems,
                                            const std::vector<int>& f_elems) {
    Subgroup gs{l, gamma_elems}, fs{l, f_elems};
    std::sort(gs.members.begin(), gs.members.end());
    std::sort(fs.members.begin(), fs.members.end());
    if (!gs.is_closed()) throw Error("matched_pair_from_factorization: gamma is not a subgroup");
    if (!fs.is_closed()) throw Error("matched_pair_from_factorization: f is not a subgroup");
    for (int g : gs.members)
        if (g != l.identity() && fs.contains(g))
            throw Error("matched_pair_from_factorization: subgroups intersect nontrivially");
    if ((long)gs.order() * fs.order() != l.order())
        throw Error("matched_pair_from_factorization: orders do not multiply to |L|");

    // decompose every element of L uniquely as f * gamma
    std::vector<std::pair<int, int>> decomp(l.order(), {-1, -1});
    for (int fi = 0; fi < fs.order(); ++fi)
        for (int gi = 0; gi < gs.order(); ++gi) {
            int prod = l.mul(fs.members[fi], gs.members[gi]);
            if (decomp[prod].first != -1)
                throw Error("matched_pair_from_factorization: factorization is not exact");
            decomp[prod] = {fi, gi};
        }
    for (const auto& d : decomp)
        if (d.first == -1)
            throw Error("matched_pair_from_factorization: factorization is not exact");

    MatchedPair mp{gs.as_group(), fs.as_group(), {}, {}};
    mp.left.assign(gs.order(), std::vector<int>(fs.order()));
    mp.right.assign(gs.order(), std::vector<int>(fs.order()));
    for (int si = 0; si < gs.order(); ++si)
        for (int xi = 0; xi < fs.order(); ++xi) {
            int prod = l.mul(gs.members[si], fs.members[xi]);  // s x = (s |> x)(s <| x)
            mp.right[si][xi] = decomp[prod].first;
            mp.left[si][xi] = decomp[prod].second;
        }
    auto rep = matched_pair_verify(mp);
    if (!rep.ok)
        throw InternalError("matched_pair_from_factorization: verification failed: " +
                            rep.failure);
    return mp;
}

}  // namespace hopf
