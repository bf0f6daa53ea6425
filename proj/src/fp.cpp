#include "fpkz/fp.hpp"

namespace fpkz {

namespace modarith {

i64 pow(i64 a, i64 e, i64 p) {
    i64 r = 1 % p;
    i64 x = norm(a, p);
    while (e > 0) {
        if (e & 1) r = mul(r, x, p);
        x = mul(x, x, p);
        e >>= 1;
    }
    return r;
}

i64 inv(i64 a, i64 p) {
    a = norm(a, p);
    if (a == 0) throw ZeroInverse();
    i64 old_r = a, r = p;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 qt = old_r / r;
        i64 t = old_r - qt * r;
        old_r = r;
        r = t;
        t = old_s - qt * s;
        old_s = s;
        s = t;
    }
    return norm(old_s, p);
}

} // namespace modarith

bool is_prime(i64 x) {
    if (x < 2) return false;
    if (x < 4) return true;
    if (x % 2 == 0) return false;
    for (i64 d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

Fp factorial_fp(i64 x, i64 p) {
    if (x < 0 || x >= p) throw DomainError("factorial_fp argument outside [0, p)");
    i64 r = 1 % p;
    for (i64 j = 2; j <= x; ++j) r = modarith::mul(r, j, p);
    return Fp(r, p);
}

Fp gamma_fp(i64 x, i64 p) {
    i64 x0 = modarith::norm(x, p); // representative in [0, p); Gamma(0) = Gamma(p) = 1
    if (x0 == 0) return Fp(1, p);
    i64 f = factorial_fp(x0 - 1, p).value();
    return (x0 & 1) ? Fp(p - f, p) : Fp(f, p);
}

namespace {

// C(a, b) for 0 <= a, b < p, no reduction surprises: all factors below p.
i64 small_binom(i64 a, i64 b, i64 p) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    i64 num = 1, den = 1;
    for (i64 t = 1; t <= b; ++t) {
        num = modarith::mul(num, (a - b + t) % p, p);
        den = modarith::mul(den, t, p);
    }
    return modarith::mul(num, modarith::inv(den, p), p);
}

} // namespace

Fp binom_mod_p(i64 a, i64 b, i64 p) {
    if (a < 0 || b < 0) throw DomainError("binom_mod_p expects nonnegative arguments");
    i64 r = 1 % p;
    while (a > 0 || b > 0) {
        i64 ad = a % p, bd = b % p;
        if (bd > ad) return Fp(0, p);
        r = modarith::mul(r, small_binom(ad, bd, p), p);
        a /= p;
        b /= p;
    }
    return Fp(r, p);
}

Fp beta_fp(i64 a, i64 b, i64 p) {
    if (!(0 < a && a < p && 0 < b && b < p && p - 1 <= a + b))
        throw DomainError("beta_fp requires 0 < a,b < p and p-1 <= a+b");
    Fp num = factorial_fp(a, p) * factorial_fp(b, p);
    Fp den = factorial_fp(a + b - p + 1, p);
    return -(num / den);
}

int gamma_sign_audit(i64 p) {
    int offset = -1;
    for (i64 A = 1; A < p; ++A) {
        for (i64 B = 1; B < p; ++B) {
            if (A + B < p) continue;
            Fp lhs = Fp(B, p) * binom_mod_p(B - 1, p - A - 1, p);
            Fp ratio = gamma_fp(A + 1, p) * gamma_fp(B + 1, p) / gamma_fp(A + B - p + 1, p);
            Fp printed = (A & 1) ? -ratio : ratio; // (-1)^A * ratio as displayed
            int e;
            if (lhs == printed)
                e = 0;
            else if (lhs == -printed)
                e = 1;
            else
                throw Error("gamma_sign_audit: forms differ by more than a sign");
            if (offset == -1)
                offset = e;
            else if (offset != e)
                throw Error("gamma_sign_audit: inconsistent sign offset");
        }
    }
    return offset;
}

} // namespace fpkz
