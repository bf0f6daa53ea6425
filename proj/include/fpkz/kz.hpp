#ifndef FPKZ_KZ_HPP
#define FPKZ_KZ_HPP

#include <string>
#include <vector>

#include "fpkz/instance.hpp"
#include "fpkz/poly.hpp"

namespace fpkz {

// Outcome of checking a candidate solution against the KZ system in
// denominator-cleared form.  Failure is an outcome, not an error.
struct VerificationReport {
    bool pass = false;
    bool algebraic_ok = false;
    Poly algebraic_residual;            // sum m_i I_i
    std::vector<VecPoly> residuals;     // one cleared identity per variable
    int first_failure = -1;             // 0 = algebraic constraint, 1..n = equation j
    std::string summary() const;

    VerificationReport() : algebraic_residual(2, 0) {}
};

// Checks (a) m_1 I_1 + ... + m_n I_n = 0 identically and (b) for each j the
// cleared identity  q (prod_{k != j} (z_j - z_k)) dI/dz_j
//                   - sum_{l != j} (prod_{k not in {j,l}} (z_j - z_k)) Omega_jl I = 0.
VerificationReport verify_kz_solution(const KzInstance& inst, const VecPoly& I);

// True iff the order-L_j partial derivative of I in z_j vanishes identically
// for every j.  An order of 0 therefore demands I = 0 in that slot's sense;
// the hypergeometric module is carved out by L = (M_1+1, ..., M_n+1).
bool is_L_admissible(const KzInstance& inst, const VecPoly& I, const std::vector<i64>& L);

// For ample instances: checks (l-1) p < sum_{i in S} M_i < l p for every
// subset S of size l, l = 1..n-1.  A false return signals an implementation
// bug, since this is a theorem for ample instances.
bool ample_inequalities_check(const KzInstance& inst);

// prod_{k != j} (z_j - z_k) over slots 0..n-1 (0-based j), optionally
// skipping one further index.  Shared by the verifier and the oracle.
Poly clearing_product(const KzInstance& inst, int j, int skip = -1);

} // namespace fpkz

#endif
