#ifndef FPKZ_SL2_HPP
#define FPKZ_SL2_HPP

#include <vector>

#include "fpkz/instance.hpp"

namespace fpkz {

// An element of Sing V[-2]: coordinates in the f^(i)v basis, and on demand
// in the w_j basis (w_j = f^(j)v / M_j - f^(j+1)v / M_{j+1}).
struct SingVector {
    std::vector<i64> a_coords;
    std::vector<i64> w_coords;
};

bool is_singular_vector(const KzInstance& inst, const std::vector<i64>& a);

// w-coordinates of a singular vector: c_j = sum_{i <= j} M_i a_i (telescoping
// partial sums).  Throws NotSingular when sum m_i a_i != 0.
std::vector<i64> to_w_coords(const KzInstance& inst, const std::vector<i64>& a);

// Inverse expansion: a = sum_j c_j w_j back in the f^(i)v basis.
std::vector<i64> from_w_coords(const KzInstance& inst, const std::vector<i64>& c);

// a-coordinates of the basis vector w_j, 1-based j in 1..n-1.
std::vector<i64> w_basis_vector(const KzInstance& inst, int j);

// Matrix (in the f^(k)v basis of V[-2]) of the Casimir operator
//   (1/2) h^(i) h^(j) + e^(i) f^(j) + f^(i) e^(j) - (m_i m_j / 2) Id
// restricted to V[-2], computed by applying the sl2 generator actions on the
// tensor basis.  1-based i != j.
FpMat casimir_matrix(const KzInstance& inst, int i, int j);

// Trace of Omega^M_ij on Sing V[-2], computed through the w-basis.
i64 trace_omega_M_on_sing(const KzInstance& inst, int i, int j);

// Matrix of Omega^M_ij in the w-basis of Sing V[-2], (n-1) x (n-1).
FpMat omega_M_on_sing(const KzInstance& inst, int i, int j);

} // namespace fpkz

#endif
