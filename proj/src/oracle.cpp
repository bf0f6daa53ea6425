#include "fpkz/oracle.hpp"

#include <algorithm>

#include "fpkz/construct.hpp"
#include "fpkz/kz.hpp"
#include "fpkz/sl2.hpp"

namespace fpkz {

RowReducer::RowReducer(i64 p, int ncols) : p_(p), ncols_(ncols) {
    if (p < 2 || p > (i64(1) << 22))
        throw Error("RowReducer modulus outside supported range");
    pivot_of_col_.assign(ncols, -1);
    tmp_.assign(ncols, 0);
}

bool RowReducer::add_row(const std::vector<std::pair<int, i64>>& row) {
    std::fill(tmp_.begin(), tmp_.end(), 0);
    int lo = ncols_;
    for (const auto& [c, v] : row) {
        if (c < 0 || c >= ncols_) throw IndexError("row entry column out of range");
        tmp_[c] += modarith::norm(v, p_);
        lo = std::min(lo, c);
    }
    for (int c = lo; c < ncols_; ++c) {
        i64 v = tmp_[c] % p_;
        if (v == 0) continue;
        int pr = pivot_of_col_[c];
        if (pr >= 0) {
            const std::uint32_t* rw = rows_[pr].data();
            i64 mult = p_ - v;
            for (int k = c; k < ncols_; ++k) tmp_[k] += mult * rw[k];
            continue;
        }
        // new pivot at column c
        std::vector<std::uint32_t> stored(ncols_, 0);
        i64 inv = modarith::inv(v, p_);
        for (int k = c; k < ncols_; ++k)
            stored[k] = std::uint32_t(modarith::mul(tmp_[k] % p_, inv, p_));
        pivot_of_col_[c] = int(rows_.size());
        rows_.push_back(std::move(stored));
        pivot_cols_.push_back(c);
        ++rank_;
        return true;
    }
    return false;
}

std::vector<std::vector<i64>> RowReducer::nullspace() const {
    std::vector<int> pivots = pivot_cols_;
    std::sort(pivots.begin(), pivots.end());
    std::vector<std::vector<i64>> basis;
    for (int f = 0; f < ncols_; ++f) {
        if (pivot_of_col_[f] >= 0) continue;
        std::vector<i64> x(ncols_, 0);
        x[f] = 1 % p_;
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            int c = *it;
            if (c > f) continue; // row is supported past every nonzero of x
            const std::vector<std::uint32_t>& rw = rows_[pivot_of_col_[c]];
            i64 acc = 0;
            for (int k = c + 1; k < ncols_; ++k)
                if (x[k] != 0) acc = (acc + i64(rw[k]) * x[k]) % p_;
            x[c] = modarith::norm(-acc, p_);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Key> monomials_of_degree(int n, int d) {
    if (d > kMaxExponent) throw ResourceLimit("degree exceeds the packed exponent range");
    std::vector<Key> out;
    std::vector<int> e(n, 0);
    // id-lex descending: leftmost exponent varies slowest, from d downward
    auto rec = [&](auto&& self, int slot, int rest) -> void {
        if (slot == n - 1) {
            e[slot] = rest;
            out.push_back(pack_exponents(Exponents(e.begin(), e.end())));
            return;
        }
        for (int v = rest; v >= 0; --v) {
            e[slot] = v;
            self(self, slot + 1, rest - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

namespace {

int key_index(const std::vector<Key>& keys_desc, Key k) {
    auto it = std::lower_bound(keys_desc.begin(), keys_desc.end(), k, std::greater<Key>());
    if (it == keys_desc.end() || *it != k) return -1;
    return int(it - keys_desc.begin());
}

struct Triplet {
    Key out;
    int col;
    i64 val;
};

} // namespace

std::vector<VecPoly> solve_homogeneous(const KzInstance& inst, int d, std::size_t unknown_cap) {
    if (d < 0) throw DomainError("degree must be nonnegative");
    const i64 p = inst.p;
    const int n = inst.n;
    const int wdim = n - 1;

    std::vector<Key> keys = monomials_of_degree(n, d);
    const int N = int(keys.size());
    const std::size_t ncols = std::size_t(N) * wdim;
    if (ncols > unknown_cap) throw ResourceLimit("homogeneous system exceeds the unknown cap");

    std::vector<std::vector<i64>> wb(wdim);
    for (int b = 0; b < wdim; ++b) wb[b] = w_basis_vector(inst, b + 1);

    RowReducer red(p, int(ncols));

    // Euler combination of the equations: on the singular slice it forces
    // (q d + sum m_i) u = 0 monomial by monomial, so degrees incongruent to
    // sum M_i mod p die immediately.
    i64 euler = modarith::norm(inst.q * d, p);
    for (i64 mi : inst.m) euler = modarith::add(euler, mi % p, p);
    if (euler != 0) {
        for (int c = 0; c < int(ncols); ++c) red.add_row({{c, euler}});
    }

    std::vector<Poly> A(n, Poly(p, n));
    std::vector<std::vector<Poly>> B(n, std::vector<Poly>(n, Poly(p, n)));
    for (int j = 0; j < n; ++j) {
        A[j] = clearing_product(inst, j).scaled(inst.q);
        for (int l = 0; l < n; ++l)
            if (l != j) B[j][l] = clearing_product(inst, j, l);
    }

    std::vector<Triplet> trips;
    for (int j = 0; j < n && !red.full_rank(); ++j) {
        for (int t = 0; t < n && !red.full_rank(); ++t) {
            trips.clear();
            for (int ei = 0; ei < N; ++ei) {
                Key e = keys[ei];
                int ej = key_get(e, j);
                for (int b = 0; b < wdim; ++b) {
                    int col = ei * wdim + b;
                    // q * prod_{k != j}(z_j - z_k) * d(z^e)/dz_j, coordinate t
                    if (ej > 0 && wb[b][t] != 0) {
                        i64 c0 = modarith::mul(i64(ej) % p, wb[b][t], p);
                        Key de = e - key_of_var(j);
                        for (const Term& ta : A[j].terms()) {
                            i64 v = modarith::mul(c0, ta.coeff, p);
                            if (v != 0) trips.push_back({ta.key + de, col, v});
                        }
                    }
                    // - sum_{l != j} prod_{k not in {j,l}} (Omega_jl w_b)_t z^e
                    if (t == j) {
                        for (int l = 0; l < n; ++l) {
                            if (l == j) continue;
                            i64 w = modarith::mul(inst.m[l] % p,
                                                  modarith::sub(modarith::norm(wb[b][l], p),
                                                                modarith::norm(wb[b][j], p), p),
                                                  p);
                            if (w == 0) continue;
                            for (const Term& tb : B[j][l].terms()) {
                                i64 v = modarith::norm(-modarith::mul(w, tb.coeff, p), p);
                                if (v != 0) trips.push_back({tb.key + e, col, v});
                            }
                        }
                    } else {
                        int l = t;
                        i64 w = modarith::mul(inst.m[j] % p,
                                              modarith::sub(modarith::norm(wb[b][j], p),
                                                            modarith::norm(wb[b][l], p), p),
                                              p);
                        if (w != 0) {
                            for (const Term& tb : B[j][l].terms()) {
                                i64 v = modarith::norm(-modarith::mul(w, tb.coeff, p), p);
                                if (v != 0) trips.push_back({tb.key + e, col, v});
                            }
                        }
                    }
                }
            }
            std::sort(trips.begin(), trips.end(), [](const Triplet& a, const Triplet& b) {
                return a.out != b.out ? a.out > b.out : a.col < b.col;
            });
            std::vector<std::pair<int, i64>> row;
            for (std::size_t i = 0; i < trips.size() && !red.full_rank();) {
                Key out = trips[i].out;
                row.clear();
                for (; i < trips.size() && trips[i].out == out; ++i) {
                    if (!row.empty() && row.back().first == trips[i].col)
                        row.back().second = modarith::add(row.back().second,
                                                          modarith::norm(trips[i].val, p), p);
                    else
                        row.emplace_back(trips[i].col, modarith::norm(trips[i].val, p));
                }
                red.add_row(row);
            }
        }
    }

    std::vector<VecPoly> basis;
    if (red.full_rank()) return basis;
    for (const std::vector<i64>& u : red.nullspace()) {
        std::vector<std::vector<std::pair<Key, i64>>> coords(n);
        for (int ei = 0; ei < N; ++ei) {
            for (int i = 0; i < n; ++i) {
                i64 acc = 0;
                for (int b = 0; b < wdim; ++b)
                    acc = modarith::add(acc,
                                        modarith::mul(modarith::norm(u[std::size_t(ei) * wdim + b], p),
                                                      modarith::norm(wb[b][i], p), p),
                                        p);
                if (acc != 0) coords[i].emplace_back(keys[ei], acc);
            }
        }
        std::vector<Poly> polys;
        polys.reserve(n);
        for (int i = 0; i < n; ++i) polys.push_back(Poly::from_pairs(p, n, std::move(coords[i])));
        basis.emplace_back(std::move(polys));
    }
    return basis;
}

ReduceResult reduce_to_hypergeometric(const KzInstance& inst, const VecPoly& I) {
    if (!verify_kz_solution(inst, I).pass)
        throw NotASolution("reduce_to_hypergeometric input fails verification");

    ReduceResult res;
    std::vector<VecPoly> sols;
    std::vector<Key> lead_keys;
    std::vector<std::vector<i64>> lead_coeffs;
    Perm id = identity_perm(inst.n);
    for (int l = 1; l <= inst.r; ++l) {
        sols.push_back(hypergeometric_solution(inst, l).poly);
        lead_keys.push_back(sols.back().leading_key(id));
        lead_coeffs.push_back(sols.back().coeff_vector_at_key(lead_keys.back()));
    }

    std::vector<std::vector<std::pair<Key, i64>>> cert(inst.r);
    VecPoly R = I;
    while (!R.is_zero()) {
        Key kd = R.leading_key(id);
        std::vector<i64> C = R.coeff_vector_at_key(kd);
        int match = -1;
        i64 factor = 0;
        for (int li = 0; li < inst.r; ++li) {
            bool shape_ok = true;
            for (int s = 0; s < inst.n; ++s) {
                int diff = key_get(kd, s) - key_get(lead_keys[li], s);
                if (diff < 0 || diff % inst.p != 0) {
                    shape_ok = false;
                    break;
                }
            }
            if (!shape_ok) continue;
            int t = 0;
            while (t < inst.n && lead_coeffs[li][t] == 0) ++t;
            i64 c = modarith::mul(C[t], modarith::inv(lead_coeffs[li][t], inst.p), inst.p);
            bool prop = true;
            for (int s = 0; s < inst.n; ++s)
                if (C[s] != modarith::mul(c, lead_coeffs[li][s], inst.p)) {
                    prop = false;
                    break;
                }
            if (prop) {
                match = li;
                factor = c;
                break;
            }
        }
        if (match < 0) {
            res.reducible = false;
            res.blocking = {C, unpack_key(kd, inst.n)};
            return res;
        }
        Key shift = kd - lead_keys[match];
        std::vector<Poly> scaled;
        scaled.reserve(inst.n);
        for (int i = 0; i < inst.n; ++i)
            scaled.push_back(sols[match][i].shifted_mul_monomial(shift, factor));
        R = R - VecPoly(std::move(scaled));
        cert[match].emplace_back(shift, factor);
    }
    res.reducible = true;
    for (int li = 0; li < inst.r; ++li)
        if (!cert[li].empty())
            res.certificate.emplace_back(li + 1,
                                         Poly::from_pairs(inst.p, inst.n, std::move(cert[li])));
    return res;
}

namespace {

// Flatten a homogeneous VecPoly over (monomial desc, coordinate) positions.
std::vector<std::pair<int, i64>> flatten(const VecPoly& v, const std::vector<Key>& keys_desc) {
    std::vector<std::pair<int, i64>> row;
    for (int i = 0; i < v.size(); ++i)
        for (const Term& t : v[i].terms()) {
            int ki = key_index(keys_desc, t.key);
            if (ki < 0) throw Error("flatten: monomial outside the degree block");
            row.emplace_back(ki * v.size() + i, t.coeff);
        }
    return row;
}

} // namespace

bool uniqueness_check(const KzInstance& inst, int l, std::size_t unknown_cap) {
    if (l < 1 || l > inst.r) throw CycleOutOfRange("cycle index l outside 1..r");
    VecPoly sol = hypergeometric_solution(inst, l).poly;
    Key lead = sol.leading_key(identity_perm(inst.n));

    int d = int(inst.delta(l));
    std::vector<VecPoly> basis = solve_homogeneous(inst, d, unknown_cap);
    std::vector<Key> keys = monomials_of_degree(inst.n, d);
    int lead_block = key_index(keys, lead);

    RowReducer red(inst.p, int(keys.size()) * inst.n);
    for (const VecPoly& b : basis) red.add_row(flatten(b, keys));
    // every solution whose leading monomial is lex-smaller than the target
    // shows up as a pivot in a later monomial block
    for (int c : red.pivot_columns())
        if (c / inst.n > lead_block) return false;
    bool is_new = red.add_row(flatten(sol, keys));
    return !is_new; // the solution itself must lie in the oracle space
}

std::vector<i64> initial_value(const KzInstance& inst, const std::vector<i64>& x,
                               const std::vector<i64>& w) {
    if (!inst.ample) throw PreconditionError("initial_value requires ample reduction");
    if (int(x.size()) != inst.n) throw ArityMismatch("evaluation point size != n");
    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j)
            if (modarith::norm(x[i] - x[j], inst.p) == 0)
                throw PreconditionError("evaluation point has repeated coordinates");
    if (!is_singular_vector(inst, w))
        throw PreconditionError("initial vector is not in Sing V[-2]");

    const i64 p = inst.p;
    const int k = inst.n - 1;
    std::vector<i64> rhs = to_w_coords(inst, w);

    // rows of E are the w-coordinates of I^[l](x); solve E^T c = rhs
    std::vector<std::vector<i64>> Et(k, std::vector<i64>(k, 0));
    for (int l = 1; l <= k; ++l) {
        std::vector<i64> val = hypergeometric_solution(inst, l).poly.eval(x);
        std::vector<i64> wc = to_w_coords(inst, val);
        for (int j = 0; j < k; ++j) Et[j][l - 1] = wc[j];
    }

    // Gaussian elimination with the augmented column
    std::vector<i64> c(k, 0);
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    for (int col = 0; col < k; ++col) {
        int pr = -1;
        for (int rr = col; rr < k; ++rr)
            if (Et[rr][col] != 0) {
                pr = rr;
                break;
            }
        if (pr < 0) throw Error("initial_value: evaluation matrix is singular");
        std::swap(Et[col], Et[pr]);
        std::swap(rhs[col], rhs[pr]);
        i64 inv = modarith::inv(Et[col][col], p);
        for (int cc = col; cc < k; ++cc) Et[col][cc] = modarith::mul(Et[col][cc], inv, p);
        rhs[col] = modarith::mul(rhs[col], inv, p);
        for (int rr = 0; rr < k; ++rr) {
            if (rr == col || Et[rr][col] == 0) continue;
            i64 f = Et[rr][col];
            for (int cc = col; cc < k; ++cc)
                Et[rr][cc] = modarith::sub(Et[rr][cc], modarith::mul(f, Et[col][cc], p), p);
            rhs[rr] = modarith::sub(rhs[rr], modarith::mul(f, rhs[col], p), p);
        }
    }
    for (int i = 0; i < k; ++i) c[i] = rhs[i];
    return c;
}

} // namespace fpkz
