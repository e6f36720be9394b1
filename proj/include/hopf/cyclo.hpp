#pragma once

#include <string>
#include <vector>

#include "hopf/numtypes.hpp"

namespace hopf {

// An N-th root of unity zeta_N^e, stored as the exponent e mod N.
struct RootExp {
    long modulus = 1;
    long exponent = 0;

    RootExp() = default;
    RootExp(long n, long e) : modulus(n), exponent(mod_reduce(e, n)) {}

    static RootExp one(long n) { return RootExp(n, 0); }

    bool is_one() const { return exponent == 0; }
    long order() const { return modulus / std::gcd(modulus, exponent == 0 ? modulus : exponent); }

    bool operator==(const RootExp&) const = default;
};

RootExp root_mul(const RootExp& a, const RootExp& b);
RootExp root_inv(const RootExp& a);
RootExp root_pow(const RootExp& a, long k);
// Re-express a in mu_M; requires a.modulus | M.
RootExp root_embed(const RootExp& a, long M);

// Cyclotomic polynomial Phi_N as integer coefficients, degree euler_phi(N).
const std::vector<Int>& cyclotomic_poly(long N);

// Element of Q(zeta_N), stored as the canonical residue mod Phi_N:
// exactly euler_phi(N) rational coefficients, so equality is coefficient
// equality.
class CycloNum {
  public:
    CycloNum() = default;  // invalid until given a modulus
    explicit CycloNum(long N);
    CycloNum(long N, const Rat& value);

    static CycloNum zero(long N) { return CycloNum(N); }
    static CycloNum one(long N) { return CycloNum(N, 1); }
    static CycloNum from_root(const RootExp& r, long N);  // embeds r into mu_N first
    static CycloNum from_root(const RootExp& r) { return from_root(r, r.modulus); }

    long modulus() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;           // supported on the constant coefficient only
    Rat rational_part() const;          // constant coefficient
    bool is_integer() const;

    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator-() const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum mul_rat(const Rat& r) const;

    bool operator==(const CycloNum& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const CycloNum& o) const { return !(*this == o); }
    // Arbitrary but fixed total order; used for canonical sorting of vectors.
    bool operator<(const CycloNum& o) const;

    std::string to_string() const;

    // Canonical residue of an arbitrary coefficient list (powers of zeta_N).
    static CycloNum reduce(long N, const std::vector<Rat>& raw);

  private:
    long n_ = 0;
    std::vector<Rat> c_;
};

CycloNum cyclo_inv(const CycloNum& a);

}  // namespace hopf
