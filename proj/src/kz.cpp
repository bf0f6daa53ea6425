#include "fpkz/kz.hpp"

#include <sstream>

namespace fpkz {

std::string VerificationReport::summary() const {
    if (pass) return "pass";
    std::ostringstream os;
    if (first_failure == 0)
        os << "algebraic constraint sum m_i I_i = 0 violated";
    else
        os << "cleared differential identity for z_" << first_failure << " violated";
    return os.str();
}

Poly clearing_product(const KzInstance& inst, int j, int skip) {
    Poly prod = Poly::one(inst.p, inst.n);
    for (int k = 0; k < inst.n; ++k) {
        if (k == j || k == skip) continue;
        prod = prod * Poly::linear_diff_power(inst.p, inst.n, j, k, 1);
    }
    return prod;
}

VerificationReport verify_kz_solution(const KzInstance& inst, const VecPoly& I) {
    if (I.size() != inst.n) throw ArityMismatch("solution vector size != n");
    if (I.arity() != inst.n) throw ArityMismatch("solution arity != n");
    if (I.p() != inst.p) throw ModulusMismatch("solution modulus != p");

    VerificationReport rep;
    rep.algebraic_residual = Poly::zero(inst.p, inst.n);
    for (int i = 0; i < inst.n; ++i)
        rep.algebraic_residual += I[i].scaled(inst.m[i]);
    rep.algebraic_ok = rep.algebraic_residual.is_zero();

    rep.pass = rep.algebraic_ok;
    if (!rep.algebraic_ok) rep.first_failure = 0;

    rep.residuals.reserve(inst.n);
    for (int j = 0; j < inst.n; ++j) {
        VecPoly lhs = I.derivative(j).mul_poly(clearing_product(inst, j).scaled(inst.q));
        for (int l = 0; l < inst.n; ++l) {
            if (l == j) continue;
            Poly b = clearing_product(inst, j, l);
            // Omega_jl I has nonzero coordinates only at j and l.
            Poly diff = I[l] - I[j];
            lhs[j] -= (diff * b).scaled(inst.m[l]);
            lhs[l] -= ((-diff) * b).scaled(inst.m[j]);
        }
        if (!lhs.is_zero() && rep.first_failure == -1) {
            rep.first_failure = j + 1;
            rep.pass = false;
        }
        rep.residuals.push_back(std::move(lhs));
    }
    return rep;
}

bool is_L_admissible(const KzInstance& inst, const VecPoly& I, const std::vector<i64>& L) {
    if (int(L.size()) != inst.n) throw ArityMismatch("admissibility order vector size != n");
    for (i64 Lj : L)
        if (Lj < 0) throw DomainError("admissibility orders must be nonnegative");
    for (int j = 0; j < inst.n; ++j)
        if (!I.derivative(j, int(L[j])).is_zero()) return false;
    return true;
}

bool ample_inequalities_check(const KzInstance& inst) {
    if (!inst.ample) throw PreconditionError("ample_inequalities_check requires an ample instance");
    for (unsigned mask = 1; mask < (1u << inst.n) - 1; ++mask) {
        int l = __builtin_popcount(mask);
        i64 s = 0;
        for (int i = 0; i < inst.n; ++i)
            if (mask & (1u << i)) s += inst.M[i];
        if (!(i64(l - 1) * inst.p < s && s < i64(l) * inst.p)) return false;
    }
    return true;
}

} // namespace fpkz
