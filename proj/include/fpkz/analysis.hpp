#ifndef FPKZ_ANALYSIS_HPP
#define FPKZ_ANALYSIS_HPP

#include <vector>

#include "fpkz/construct.hpp"
#include "fpkz/instance.hpp"
#include "fpkz/poly.hpp"
#include "fpkz/sl2.hpp"

namespace fpkz {

// Predicted sigma-leading term of I^[l].  The index i_of_l is the position
// (1-based, in sigma-order) of the boundary variable: the unique i with
// 0 <= sum_{j >= i} M_{sigma_j} - l p < M_{sigma_i}.  The scalar carries the
// sign prefix and the factorial-form constant B C(B-1, p-A-1) with
// A = M_{sigma_i}, B = sum_{j > i} M_{sigma_j} - (l-1) p; the coefficient
// vector is proportional to (sum_{j>i} f^(sigma_j) v)/B - f^(sigma_i) v / A.
struct LeadingPrediction {
    int l = 0;
    Perm sigma;
    int i_of_l = 0;
    i64 scalar = 0;
    SingVector coeff_vector;
    Exponents exponents;
};

LeadingPrediction leading_prediction(const KzInstance& inst, int l, const Perm& sigma);

// Position of the boundary variable for the id ordering (1-based).
int index_i_of_l(const KzInstance& inst, int l);

// True iff (C, d) solves the id-leading-term system:
//   sum M_j C_j = 0,  Omega^M_j C = d_j C for j = 1..n-1,  d_n = 0 (mod p).
// Exponents d are read mod p.  C = 0 fails the precondition and returns false.
bool leading_system_check(const KzInstance& inst, const std::vector<i64>& C,
                          const std::vector<i64>& d);

// The r x (n-1) matrix c with I^[l] = sum_j c^l_j(z) w_j; square under ample
// reduction.  Requires r >= 1.
struct CoordinateMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> entries; // row-major

    const Poly& at(int l, int j) const { return entries[std::size_t(l - 1) * cols + (j - 1)]; }
    Poly& at(int l, int j) { return entries[std::size_t(l - 1) * cols + (j - 1)]; }
};

CoordinateMatrix coordinate_matrix(const KzInstance& inst);

// Determinant of a square matrix of polynomials by cofactor expansion.
Poly poly_matrix_det(const std::vector<Poly>& entries, int size);

// Exact check of the determinant identity under ample reduction:
//   det c(z) = K prod_{i<j} (-1)^{M_j} (z_j - z_i)^{M_i + M_j - p},
//   K = (-1)^{n-1} M_1! ... M_n! / (sum M - (n-1) p)!.
// gamma_form_sign_offset is the s in {0,1} with
//   prod G(M_i + 1) / G(sum M - (n-1) p + 1) = (-1)^s K.
struct DetReport {
    Poly det;
    Poly closed_form;
    bool equal = false;
    int gamma_form_sign_offset = 0;

    DetReport() : det(2, 0), closed_form(2, 0) {}
};

DetReport verify_determinant(const KzInstance& inst);

// The right-hand side of the determinant identity (K times the binomial
// product), exposed for tests.
Poly det_closed_form(const KzInstance& inst);

// True iff d satisfies, for every i, the cleared scalar equation
//   (dd/dz_i) prod_{j != i} (z_i - z_j)
//     = d * sum_{j != i} (M_i + M_j) prod_{k != i,j} (z_i - z_k).
bool det_ode_check(const KzInstance& inst, const Poly& d);

// For a nonzero homogeneous solution: deg I = sum M_j (mod p).
bool degree_congruence_check(const KzInstance& inst, const VecPoly& I);

} // namespace fpkz

#endif
