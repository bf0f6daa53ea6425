#ifndef FPKZ_FP_HPP
#define FPKZ_FP_HPP

#include <cstdint>
#include <vector>

#include "fpkz/errors.hpp"

namespace fpkz {

using i64 = std::int64_t;

// Low-level modular helpers on canonical residues in [0, p).
// Used by the polynomial kernels where carrying a full Fp per coefficient
// would be wasteful.
namespace modarith {

inline i64 norm(i64 x, i64 p) {
    i64 r = x % p;
    return r < 0 ? r + p : r;
}

inline i64 add(i64 a, i64 b, i64 p) {
    i64 s = a + b;
    return s >= p ? s - p : s;
}

inline i64 sub(i64 a, i64 b, i64 p) {
    i64 s = a - b;
    return s < 0 ? s + p : s;
}

inline i64 mul(i64 a, i64 b, i64 p) { return (a * b) % p; }

i64 pow(i64 a, i64 e, i64 p);

// Extended Euclid; throws ZeroInverse on a == 0 (mod p).
i64 inv(i64 a, i64 p);

} // namespace modarith

bool is_prime(i64 x);

// Residue mod an odd prime p.  Arithmetic between scalars of different
// moduli throws ModulusMismatch.
class Fp {
public:
    Fp(i64 value, i64 modulus) : v_(modarith::norm(value, modulus)), p_(modulus) {}

    i64 value() const { return v_; }
    i64 modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return Fp(p_ - v_, p_); }
    Fp inv() const { return Fp(modarith::inv(v_, p_), p_); }

    friend Fp operator+(Fp a, Fp b) { return Fp(modarith::add(a.v_, b.match(a), a.p_), a.p_); }
    friend Fp operator-(Fp a, Fp b) { return Fp(modarith::sub(a.v_, b.match(a), a.p_), a.p_); }
    friend Fp operator*(Fp a, Fp b) { return Fp(modarith::mul(a.v_, b.match(a), a.p_), a.p_); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    friend bool operator==(Fp a, Fp b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    Fp pow(i64 e) const { return Fp(modarith::pow(v_, e, p_), p_); }

private:
    i64 match(const Fp& other) const {
        if (p_ != other.p_) throw ModulusMismatch("Fp modulus mismatch");
        return v_;
    }

    i64 v_;
    i64 p_;
};

inline Fp inv(Fp a) { return a.inv(); }

// x! mod p for 0 <= x < p.
Fp factorial_fp(i64 x, i64 p);

// The mod-p reduction of the Morita p-adic gamma function, extended to all
// of Z by p-periodicity.  Gamma(0) = 1, Gamma(1) = -1, and for 1 <= x <= p
// Gamma(x) = (-1)^x (x-1)!.
Fp gamma_fp(i64 x, i64 p);

// Binomial coefficient C(a, b) mod p by Lucas' theorem.  b > a gives 0.
Fp binom_mod_p(i64 a, i64 b, i64 p);

// The coefficient of x^{p-1} in x^a (1-x)^b, equal to -a! b! / (a+b-p+1)!.
// Requires 0 < a < p, 0 < b < p, p-1 <= a+b.
Fp beta_fp(i64 a, i64 b, i64 p);

// Sweeps all pairs A, B in [1, p) with A + B >= p and finds the exponent
// offset e such that
//   B * C(B-1, p-A-1) == (-1)^(A+e) * Gamma(A+1) Gamma(B+1) / Gamma(A+B-p+1)
// holds at every pair.  Returns e (0 or 1); throws Error if no single offset
// works everywhere.
int gamma_sign_audit(i64 p);

} // namespace fpkz

#endif
