#ifndef FPKZ_ORACLE_HPP
#define FPKZ_ORACLE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "fpkz/instance.hpp"
#include "fpkz/poly.hpp"

namespace fpkz {

// Incremental row-echelon reduction over F_p.  Rows arrive sparse, pivot
// rows are stored dense and normalized (leading 1); the inner loop is a
// mod-free axpy with lazy reduction, which is exact because p and the
// column count keep the accumulators far below the int64 range.
class RowReducer {
public:
    RowReducer(i64 p, int ncols);

    // Reduces the row against the current echelon; returns true if it
    // contributed a new pivot.
    bool add_row(const std::vector<std::pair<int, i64>>& row);

    int rank() const { return rank_; }
    int ncols() const { return ncols_; }
    bool full_rank() const { return rank_ == ncols_; }
    const std::vector<int>& pivot_columns() const { return pivot_cols_; }

    // Nullspace basis in the reduced row-echelon convention: one vector per
    // free column, free columns ascending, unit at the free column.
    std::vector<std::vector<i64>> nullspace() const;

private:
    i64 p_;
    int ncols_;
    int rank_ = 0;
    std::vector<int> pivot_of_col_;
    std::vector<int> pivot_cols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<i64> tmp_;
};

// All monomials of total degree d in n variables, id-lex descending.
std::vector<Key> monomials_of_degree(int n, int d);

// Basis of the space of homogeneous degree-d solutions of the KZ system,
// by exact nullspace computation of the per-monomial coefficient equations.
// Unknowns are parameterized in the w-basis of Sing V[-2] per monomial, so
// the algebraic constraint is built in; the cleared differential identities
// supply the rows.  Deterministic; throws ResourceLimit past unknown_cap.
std::vector<VecPoly> solve_homogeneous(const KzInstance& inst, int d,
                                       std::size_t unknown_cap = 20000);

struct ReduceTerm {
    int l = 0;
    Poly c; // coefficient in F_p[z^p]

    ReduceTerm(int l_, Poly c_) : l(l_), c(std::move(c_)) {}
};

// Either a certificate I = sum_l c_l(z) I^[l](z) with every c_l in F_p[z^p],
// or the blocking leading term that no hypergeometric leading term matches.
struct ReduceResult {
    bool reducible = false;
    std::vector<ReduceTerm> certificate;
    VectorLeadingTerm blocking;
};

ReduceResult reduce_to_hypergeometric(const KzInstance& inst, const VecPoly& I);

// True iff I^[l] is the only homogeneous degree-delta_l solution with its
// id-leading term: no nonzero solution of that degree has a lex-smaller
// leading monomial, and I^[l] lies in the oracle's solution space.
bool uniqueness_check(const KzInstance& inst, int l, std::size_t unknown_cap = 20000);

// For an ample instance, a point x with distinct coordinates and a singular
// vector w (a-coordinates): the unique (c_1, ..., c_{n-1}) with
// w = sum_l c_l I^[l](x).
std::vector<i64> initial_value(const KzInstance& inst, const std::vector<i64>& x,
                               const std::vector<i64>& w);

} // namespace fpkz

#endif
