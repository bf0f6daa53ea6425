#ifndef FPKZ_CONSTRUCT_HPP
#define FPKZ_CONSTRUCT_HPP

#include "fpkz/instance.hpp"
#include "fpkz/poly.hpp"

namespace fpkz {

// A hypergeometric solution I^[l]: homogeneous of degree delta_l with the
// z_j-degree of every coordinate bounded by M_j.
struct HypergeomSolution {
    int l = 0;
    i64 degree = 0;
    VecPoly poly;

    HypergeomSolution() : poly(2, 1, 1) {}
    HypergeomSolution(int l_, i64 deg, VecPoly pol) : l(l_), degree(deg), poly(std::move(pol)) {}
};

// The master polynomial Phi_p = prod_i (x - z_i)^{M_i}, arity n+1 with the
// auxiliary variable in the last slot.
Poly master_polynomial(const KzInstance& inst);

// The integrand n-vector P(x, z): coordinate j equals Phi_p / (x - z_j) =
// prod_{i != j} (x - z_i)^{M_i} * (x - z_j)^{M_j - 1}.
VecPoly integrand_vector(const KzInstance& inst);

// Coefficient of x^K in prod_i (x - z_i)^{E_i}, computed by convolving the
// binomial expansions factor by factor without materializing the product.
Poly x_coeff_of_product(i64 p, int n, const std::vector<i64>& E, i64 K);

// I^[l] = coefficient of x^{lp-1} in the integrand vector, 1 <= l <= r.
HypergeomSolution hypergeometric_solution(const KzInstance& inst, int l);

// Closed form for the coefficient of z^d in I^[l]: zero unless
// sum d_i = delta_l and d_i <= M_i, otherwise
// (-1)^{delta_l} prod_j C(M_j, d_j) * (1 - d_1/M_1, ..., 1 - d_n/M_n).
std::vector<i64> coefficient_closed_form(const KzInstance& inst, int l, const Exponents& d);

// The n = 2 closed form under ample reduction:
//   (z_1 - z_2)^{M_1 + M_2 - p} (C(M_2, p - M_1), C(M_2 - 1, p - M_1 - 1)),
// the binomial shape from the transformation x -> x + z_1; must equal
// hypergeometric_solution(inst, 1).  The displayed gamma-ratio form is
// evaluated alongside; gamma_form_sign_offset is the exponent s in {0,1}
// with  gamma form = (-1)^s * binomial form.
struct BetaSolutionN2 {
    HypergeomSolution solution;
    int gamma_form_sign_offset = 0;
};

BetaSolutionN2 beta_solution_n2(const KzInstance& inst);

} // namespace fpkz

#endif
