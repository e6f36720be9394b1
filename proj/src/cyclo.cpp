#include "hopf/cyclo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "hopf/error.hpp"

namespace hopf {

RootExp root_mul(const RootExp& a, const RootExp& b) {
    if (a.modulus != b.modulus)
        throw Error("root_mul: modulus mismatch (" + std::to_string(a.modulus) + " vs " +
                    std::to_string(b.modulus) + ")");
    return RootExp(a.modulus, a.exponent + b.exponent);
}

RootExp root_inv(const RootExp& a) { return RootExp(a.modulus, -a.exponent); }

RootExp root_pow(const RootExp& a, long k) {
    return RootExp(a.modulus, mod_reduce(mod_reduce(k, a.modulus) * a.exponent, a.modulus));
}

RootExp root_embed(const RootExp& a, long M) {
    if (M <= 0 || M % a.modulus != 0)
        throw Error("root_embed: " + std::to_string(a.modulus) + " does not divide " +
                    std::to_string(M));
    return RootExp(M, a.exponent * (M / a.modulus));
}

namespace {

// Exact division of integer polynomials, num / den with den monic.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    long dn = (long)num.size() - 1, dd = (long)den.size() - 1;
    std::vector<Int> q(dn - dd + 1, 0);
    for (long i = dn; i >= dd; --i) {
        Int f = num[i];
        if (f == 0) continue;
        q[i - dd] = f;
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw InternalError("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(long N) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    if (N < 1) throw Error("cyclotomic_poly: N must be positive");

    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
    std::function<std::vector<Int>(long)> compute = [&](long n) -> std::vector<Int> {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        std::vector<Int> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (long d : divisors(n)) {
            if (d == n) continue;
            num = poly_div_exact(num, compute(d));
        }
        cache[n] = num;
        return num;
    };
    compute(N);
    return cache[N];
}

CycloNum::CycloNum(long N) : n_(N), c_(euler_phi(N), Rat(0)) {
    if (N < 1) throw Error("CycloNum: modulus must be positive");
}

CycloNum::CycloNum(long N, const Rat& value) : CycloNum(N) { c_[0] = value; }

CycloNum CycloNum::reduce(long N, const std::vector<Rat>& raw) {
    const auto& phi = cyclotomic_poly(N);
    long deg = (long)phi.size() - 1;
    std::vector<Rat> r = raw;
    if ((long)r.size() < deg) r.resize(deg, Rat(0));
    // Long division by the monic Phi_N, highest power first.
    for (long i = (long)r.size() - 1; i >= deg; --i) {
        Rat f = r[i];
        if (f == 0) continue;
        for (long j = 0; j < deg; ++j) r[i - deg + j] -= f * Rat(phi[j]);
        r[i] = 0;
    }
    r.resize(deg);
    for (auto& x : r) x.canonicalize();
    CycloNum out(N);
    out.c_ = std::move(r);
    return out;
}

CycloNum CycloNum::from_root(const RootExp& r, long N) {
    RootExp e = root_embed(r, N);
    std::vector<Rat> raw(e.exponent + 1, Rat(0));
    raw[e.exponent] = 1;
    return reduce(N, raw);
}

bool CycloNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycloNum::rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

bool CycloNum::is_integer() const {
    return is_rational() && (c_.empty() || c_[0].get_den() == 1);
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    CycloNum r = *this;
    r += o;
    return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
    CycloNum r = *this;
    r -= o;
    return r;
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (n_ != o.n_) throw Error("CycloNum: modulus mismatch in +");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    if (n_ != o.n_) throw Error("CycloNum: modulus mismatch in -");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
    if (n_ != o.n_) throw Error("CycloNum: modulus mismatch in *");
    if (is_zero() || o.is_zero()) return CycloNum(n_);
    size_t d = c_.size();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return reduce(n_, prod);
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    *this = *this * o;
    return *this;
}

CycloNum CycloNum::mul_rat(const Rat& r) const {
    CycloNum out = *this;
    for (auto& x : out.c_) {
        x *= r;
        x.canonicalize();
    }
    return out;
}

bool CycloNum::operator<(const CycloNum& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t i = 0; i < c_.size(); ++i) {
        int cmp = mpq_cmp(c_[i].get_mpq_t(), o.c_[i].get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i >= 1) os << "*z" << n_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

using Poly = std::vector<Rat>;  // dense, low degree first

long poly_deg(const Poly& p) {
    for (long i = (long)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Poly poly_sub_scaled(Poly a, const Poly& b, const Rat& f, long shift) {
    if ((long)a.size() < (long)b.size() + shift) a.resize(b.size() + shift, Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    return a;
}

// a mod b and the quotient, b nonzero
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    long db = poly_deg(b);
    Poly q(std::max<long>(1, (long)a.size()), Rat(0));
    while (poly_deg(a) >= db && db >= 0) {
        long da = poly_deg(a);
        Rat f = a[da] / b[db];
        q[da - db] += f;
        a = poly_sub_scaled(a, b, f, da - db);
    }
    return {q, a};
}

}  // namespace

CycloNum cyclo_inv(const CycloNum& a) {
    if (a.is_zero()) throw Error("cyclo_inv: division by zero");
    long N = a.modulus();
    const auto& phiz = cyclotomic_poly(N);
    Poly phi(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) phi[i] = Rat(phiz[i]);

    // Extended Euclid in Q[x]: u*a + v*Phi_N = gcd; Phi_N is irreducible over Q,
    // so the gcd of a nonzero residue with it is a unit.
    Poly r0 = phi, r1(a.coeffs().begin(), a.coeffs().end());
    Poly u0 = {Rat(0)}, u1 = {Rat(1)};  // coefficients of `a`
    while (true) {
        long d1 = poly_deg(r1);
        if (d1 < 0) throw InternalError("cyclo_inv: unexpected zero remainder");
        if (d1 == 0) {
            Rat inv = Rat(1) / r1[0];
            std::vector<Rat> out(u1.size());
            for (size_t i = 0; i < u1.size(); ++i) out[i] = u1[i] * inv;
            return CycloNum::reduce(N, out);
        }
        auto [q, rem] = poly_divmod(r0, r1);
        Poly u2 = u0;
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            u2 = poly_sub_scaled(u2, u1, q[i], (long)i);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
}

}  // namespace hopf
