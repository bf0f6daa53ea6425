#ifndef FPKZ_INSTANCE_HPP
#define FPKZ_INSTANCE_HPP

#include <string>
#include <vector>

#include "fpkz/fp.hpp"

namespace fpkz {

// The arithmetic data of one KZ system over F_p: primes p > q, weights
// 0 < m_i < q, the derived exponents M_i (least positive solution of
// q M_i = -m_i mod p), the rank r = floor(sum M_i / p) and the ample flag
// (r == n-1).
struct KzInstance {
    i64 p = 0;
    i64 q = 0;
    int n = 0;
    std::vector<i64> m;
    std::vector<i64> M;
    int r = 0;
    bool ample = false;

    i64 sum_M() const;
    // Homogeneity degree of I^[l]: sum M_j - l p (an integer, may be asked
    // for any l).
    i64 delta(int l) const;
};

// Validates all field invariants; throws InvalidInstance with a reason.
KzInstance make_instance(i64 p, i64 q, const std::vector<i64>& m);

// Dense matrix over F_p, row-major, entries as canonical residues.
struct FpMat {
    i64 p = 0;
    int rows = 0;
    int cols = 0;
    std::vector<i64> a;

    FpMat() = default;
    FpMat(i64 p_, int r, int c) : p(p_), rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    i64& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    i64 at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    static FpMat identity(i64 p, int n);
    std::vector<i64> apply(const std::vector<i64>& v) const;
    FpMat operator*(const FpMat& other) const;
    FpMat operator+(const FpMat& other) const;
    FpMat scaled(i64 c) const;
    i64 trace() const;
    bool operator==(const FpMat& other) const;
    bool operator!=(const FpMat& other) const { return !(*this == other); }
};

// The n x n matrix Omega_ij of the KZ system (1-based i != j):
// -m_j at (i,i), m_j at (i,j), m_i at (j,i), -m_i at (j,j), zero elsewhere.
FpMat omega_standard(const KzInstance& inst, int i, int j);

// The M-weighted variant Omega^M_jl (1-based j != l):
// M_l at (j,j), -M_l at (j,l), -M_j at (l,j), M_j at (l,l).
FpMat omega_M(const KzInstance& inst, int j, int l);

// Row sum Omega^M_j = sum_{l=j+1}^n Omega^M_jl for 1 <= j <= n-1.
FpMat omega_M_rowsum(const KzInstance& inst, int j);

} // namespace fpkz

#endif
