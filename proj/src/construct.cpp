#include "fpkz/construct.hpp"

#include <algorithm>

namespace fpkz {

Poly master_polynomial(const KzInstance& inst) {
    int arity = inst.n + 1;
    Poly phi = Poly::one(inst.p, arity);
    for (int i = 0; i < inst.n; ++i)
        phi = phi * Poly::linear_diff_power(inst.p, arity, inst.n, i, int(inst.M[i]));
    return phi;
}

VecPoly integrand_vector(const KzInstance& inst) {
    int arity = inst.n + 1;
    std::vector<Poly> coords;
    coords.reserve(inst.n);
    for (int j = 0; j < inst.n; ++j) {
        Poly f = Poly::one(inst.p, arity);
        for (int i = 0; i < inst.n; ++i) {
            int e = int(inst.M[i]) - (i == j ? 1 : 0);
            f = f * Poly::linear_diff_power(inst.p, arity, inst.n, i, e);
        }
        coords.push_back(std::move(f));
    }
    return VecPoly(std::move(coords));
}

Poly x_coeff_of_product(i64 p, int n, const std::vector<i64>& E, i64 K) {
    if (K < 0) throw DomainError("x_coeff_of_product needs K >= 0");
    // acc[d] = coefficient of x^d so far, a polynomial in z_1..z_n
    std::vector<Poly> acc{Poly::one(p, n)};
    i64 remaining = 0;
    for (i64 e : E) remaining += e;
    for (int i = 0; i < int(E.size()); ++i) {
        i64 Ei = E[i];
        remaining -= Ei;
        i64 hi = std::min<i64>(i64(acc.size()) - 1 + Ei, K);
        std::vector<Poly> next(std::size_t(hi) + 1, Poly::zero(p, n));
        for (i64 t = 0; t <= Ei; ++t) {
            // (x - z_i)^{E_i} contributes C(E_i, t) (-z_i)^{E_i - t} x^t
            i64 c = binom_mod_p(Ei, t, p).value();
            if ((Ei - t) & 1) c = modarith::norm(-c, p);
            if (c == 0) continue;
            Key shift = key_of_var(i, int(Ei - t));
            for (i64 d = 0; d < i64(acc.size()); ++d) {
                i64 nd = d + t;
                if (nd > hi) break;
                if (nd + remaining < K) continue; // cannot reach x^K any more
                if (acc[d].is_zero()) continue;
                next[nd] += acc[d].shifted_mul_monomial(shift, c);
            }
        }
        acc = std::move(next);
    }
    if (K >= i64(acc.size())) return Poly::zero(p, n);
    return acc[K];
}

HypergeomSolution hypergeometric_solution(const KzInstance& inst, int l) {
    if (l < 1 || l > inst.r) throw CycleOutOfRange("cycle index l outside 1..r");
    i64 K = i64(l) * inst.p - 1;
    std::vector<Poly> coords;
    coords.reserve(inst.n);
    for (int j = 0; j < inst.n; ++j) {
        std::vector<i64> E = inst.M;
        E[j] -= 1;
        coords.push_back(x_coeff_of_product(inst.p, inst.n, E, K));
    }
    return HypergeomSolution(l, inst.delta(l), VecPoly(std::move(coords)));
}

std::vector<i64> coefficient_closed_form(const KzInstance& inst, int l, const Exponents& d) {
    if (l < 1 || l > inst.r) throw CycleOutOfRange("cycle index l outside 1..r");
    if (int(d.size()) != inst.n) throw ArityMismatch("exponent vector size != n");
    std::vector<i64> out(inst.n, 0);
    i64 total = 0;
    for (int i = 0; i < inst.n; ++i) {
        if (d[i] < 0) throw DomainError("exponents must be nonnegative");
        if (d[i] > inst.M[i]) return out;
        total += d[i];
    }
    if (total != inst.delta(l)) return out;

    i64 scalar = 1 % inst.p;
    for (int i = 0; i < inst.n; ++i)
        scalar = modarith::mul(scalar, binom_mod_p(inst.M[i], d[i], inst.p).value(), inst.p);
    if (inst.delta(l) & 1) scalar = modarith::norm(-scalar, inst.p);
    for (int i = 0; i < inst.n; ++i) {
        i64 ratio = modarith::mul(d[i] % inst.p, modarith::inv(inst.M[i], inst.p), inst.p);
        out[i] = modarith::mul(scalar, modarith::sub(1 % inst.p, ratio, inst.p), inst.p);
    }
    return out;
}

BetaSolutionN2 beta_solution_n2(const KzInstance& inst) {
    if (inst.n != 2) throw PreconditionError("beta_solution_n2 requires n = 2");
    if (!inst.ample) throw PreconditionError("beta_solution_n2 requires ample reduction");
    i64 p = inst.p;
    i64 M1 = inst.M[0], M2 = inst.M[1];
    i64 c1 = binom_mod_p(M2, p - M1, p).value();
    i64 c2 = binom_mod_p(M2 - 1, p - M1 - 1, p).value();
    Poly base = Poly::linear_diff_power(p, 2, 0, 1, int(M1 + M2 - p));
    std::vector<Poly> coords{base.scaled(c1), base.scaled(c2)};
    HypergeomSolution sol(1, inst.delta(1), VecPoly(std::move(coords)));

    // Displayed gamma-ratio shape of the same solution:
    // (-1)^{M_1} (z_1 - z_2)^{M_1+M_2-p} G(M_1+1) G(M_2+1) / G(M_1+M_2-p+1)
    //   * (f^(2)/M_2 - f^(1)/M_1)
    Fp ratio = gamma_fp(M1 + 1, p) * gamma_fp(M2 + 1, p) / gamma_fp(M1 + M2 - p + 1, p);
    i64 scalar = ratio.value();
    if (M1 & 1) scalar = modarith::norm(-scalar, p);
    i64 g1 = modarith::mul(scalar, modarith::norm(-modarith::inv(M1, p), p), p);
    i64 g2 = modarith::mul(scalar, modarith::inv(M2, p), p);
    VecPoly gamma_form(std::vector<Poly>{base.scaled(g1), base.scaled(g2)});

    BetaSolutionN2 out{std::move(sol), 0};
    if (gamma_form == out.solution.poly)
        out.gamma_form_sign_offset = 0;
    else if (gamma_form == -out.solution.poly)
        out.gamma_form_sign_offset = 1;
    else
        throw Error("gamma form and binomial form differ by more than a sign");
    return out;
}

} // namespace fpkz
