#include "fpkz/analysis.hpp"

#include <algorithm>

#include "fpkz/kz.hpp"

namespace fpkz {

namespace {

// 0-based position of the boundary variable in the relabeled weights.
int boundary_position(const KzInstance& inst, int l, const std::vector<i64>& Mp) {
    int n = inst.n;
    int found = -1;
    i64 suffix = 0;
    for (int i = 0; i < n; ++i) suffix += Mp[i];
    for (int i = 0; i < n; ++i) {
        i64 s = suffix - i64(l) * inst.p;
        if (0 <= s && s < Mp[i]) {
            if (found != -1) throw Error("boundary index is not unique");
            found = i;
        }
        suffix -= Mp[i];
    }
    if (found == -1) throw Error("no boundary index exists");
    return found;
}

} // namespace

int index_i_of_l(const KzInstance& inst, int l) {
    if (l < 1 || l > inst.r) throw CycleOutOfRange("cycle index l outside 1..r");
    return boundary_position(inst, l, inst.M) + 1;
}

LeadingPrediction leading_prediction(const KzInstance& inst, int l, const Perm& sigma) {
    if (l < 1 || l > inst.r) throw CycleOutOfRange("cycle index l outside 1..r");
    if (!is_valid_perm(sigma, inst.n)) throw IndexError("sigma is not a permutation of 1..n");
    int n = inst.n;
    i64 p = inst.p;

    std::vector<i64> Mp(n);
    for (int j = 0; j < n; ++j) Mp[j] = inst.M[sigma[j] - 1];

    int i0 = boundary_position(inst, l, Mp);
    i64 tail = 0;
    for (int j = i0 + 1; j < n; ++j) tail += Mp[j];
    i64 head = 0;
    for (int j = 0; j < i0; ++j) head += Mp[j];

    i64 A = Mp[i0];
    i64 B = tail - i64(l - 1) * p; // an integer in [1, p-1]
    i64 s = tail + A - i64(l) * p; // the boundary exponent, in [0, A)

    i64 scalar = modarith::mul(B % p, binom_mod_p(B - 1, p - A - 1, p).value(), p);
    if (head & 1) scalar = modarith::norm(-scalar, p);

    LeadingPrediction pred;
    pred.l = l;
    pred.sigma = sigma;
    pred.i_of_l = i0 + 1;
    pred.scalar = scalar;
    pred.exponents.assign(n, 0);
    for (int j = 0; j < i0; ++j) pred.exponents[sigma[j] - 1] = int(Mp[j]);
    pred.exponents[sigma[i0] - 1] = int(s);

    std::vector<i64> coeff(n, 0);
    i64 tail_part = modarith::mul(scalar, modarith::inv(B % p, p), p);
    for (int j = i0 + 1; j < n; ++j) coeff[sigma[j] - 1] = tail_part;
    coeff[sigma[i0] - 1] = modarith::norm(-modarith::mul(scalar, modarith::inv(A, p), p), p);
    pred.coeff_vector.a_coords = coeff;
    pred.coeff_vector.w_coords = to_w_coords(inst, coeff);
    return pred;
}

bool leading_system_check(const KzInstance& inst, const std::vector<i64>& C,
                          const std::vector<i64>& d) {
    if (int(C.size()) != inst.n || int(d.size()) != inst.n)
        throw ArityMismatch("leading_system_check expects n-vectors");
    i64 p = inst.p;
    bool nonzero = false;
    std::vector<i64> Cn(inst.n);
    for (int i = 0; i < inst.n; ++i) {
        Cn[i] = modarith::norm(C[i], p);
        nonzero = nonzero || Cn[i] != 0;
    }
    if (!nonzero) return false;

    i64 s = 0;
    for (int i = 0; i < inst.n; ++i)
        s = modarith::add(s, modarith::mul(inst.M[i], Cn[i], p), p);
    if (s != 0) return false;

    if (modarith::norm(d[inst.n - 1], p) != 0) return false;
    for (int j = 1; j <= inst.n - 1; ++j) {
        std::vector<i64> lhs = omega_M_rowsum(inst, j).apply(Cn);
        i64 dj = modarith::norm(d[j - 1], p);
        for (int i = 0; i < inst.n; ++i)
            if (lhs[i] != modarith::mul(dj, Cn[i], p)) return false;
    }
    return true;
}

CoordinateMatrix coordinate_matrix(const KzInstance& inst) {
    if (inst.r < 1) throw CycleOutOfRange("instance has no hypergeometric solutions");
    CoordinateMatrix cm;
    cm.rows = inst.r;
    cm.cols = inst.n - 1;
    cm.entries.assign(std::size_t(cm.rows) * cm.cols, Poly(inst.p, inst.n));
    for (int l = 1; l <= inst.r; ++l) {
        VecPoly sol = hypergeometric_solution(inst, l).poly;
        std::vector<Key> keys;
        for (int i = 0; i < inst.n; ++i)
            for (const Term& t : sol[i].terms()) keys.push_back(t.key);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

        std::vector<std::vector<std::pair<Key, i64>>> cols(inst.n - 1);
        for (Key k : keys) {
            std::vector<i64> c = to_w_coords(inst, sol.coeff_vector_at_key(k));
            for (int j = 0; j < inst.n - 1; ++j)
                if (c[j] != 0) cols[j].emplace_back(k, c[j]);
        }
        for (int j = 1; j <= inst.n - 1; ++j)
            cm.at(l, j) = Poly::from_pairs(inst.p, inst.n, std::move(cols[j - 1]));
    }
    return cm;
}

Poly poly_matrix_det(const std::vector<Poly>& entries, int size) {
    if (size <= 0 || int(entries.size()) != size * size)
        throw ArityMismatch("poly_matrix_det expects a square matrix");
    if (size == 1) return entries[0];
    if (size == 2) return entries[0] * entries[3] - entries[1] * entries[2];
    Poly acc(entries[0].p(), entries[0].arity());
    for (int c = 0; c < size; ++c) {
        if (entries[c].is_zero()) continue;
        std::vector<Poly> minor;
        minor.reserve(std::size_t(size - 1) * (size - 1));
        for (int rr = 1; rr < size; ++rr)
            for (int cc = 0; cc < size; ++cc)
                if (cc != c) minor.push_back(entries[std::size_t(rr) * size + cc]);
        Poly term = entries[c] * poly_matrix_det(minor, size - 1);
        if (c & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

Poly det_closed_form(const KzInstance& inst) {
    i64 p = inst.p;
    int n = inst.n;
    i64 K = 1 % p;
    for (int i = 0; i < n; ++i) K = modarith::mul(K, factorial_fp(inst.M[i], p).value(), p);
    i64 tail = inst.sum_M() - i64(n - 1) * p;
    K = modarith::mul(K, modarith::inv(factorial_fp(tail, p).value(), p), p);
    if ((n - 1) & 1) K = modarith::norm(-K, p);

    Poly prod = Poly::constant(p, n, K);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            i64 e = inst.M[i] + inst.M[j] - p;
            Poly factor = Poly::linear_diff_power(p, n, j, i, int(e));
            if (inst.M[j] & 1) factor = -factor;
            prod = prod * factor;
        }
    return prod;
}

DetReport verify_determinant(const KzInstance& inst) {
    if (!inst.ample) throw PreconditionError("verify_determinant requires ample reduction");
    CoordinateMatrix cm = coordinate_matrix(inst);
    DetReport rep;
    rep.det = poly_matrix_det(cm.entries, cm.rows);
    rep.closed_form = det_closed_form(inst);
    rep.equal = (rep.det == rep.closed_form);

    i64 p = inst.p;
    Fp printed(1, p);
    for (int i = 0; i < inst.n; ++i) printed = printed * gamma_fp(inst.M[i] + 1, p);
    printed = printed / gamma_fp(inst.sum_M() - i64(inst.n - 1) * p + 1, p);
    i64 K_fact = 1 % p;
    for (int i = 0; i < inst.n; ++i)
        K_fact = modarith::mul(K_fact, factorial_fp(inst.M[i], p).value(), p);
    K_fact = modarith::mul(
        K_fact, modarith::inv(factorial_fp(inst.sum_M() - i64(inst.n - 1) * p, p).value(), p), p);
    if ((inst.n - 1) & 1) K_fact = modarith::norm(-K_fact, p);
    if (printed.value() == K_fact)
        rep.gamma_form_sign_offset = 0;
    else if (printed.value() == modarith::norm(-K_fact, p))
        rep.gamma_form_sign_offset = 1;
    else
        throw Error("determinant constant: gamma and factorial forms differ by more than a sign");
    return rep;
}

bool det_ode_check(const KzInstance& inst, const Poly& d) {
    if (d.is_zero()) throw ZeroPolynomial("det_ode_check requires a nonzero polynomial");
    if (d.arity() != inst.n) throw ArityMismatch("polynomial arity != n");
    for (int i = 0; i < inst.n; ++i) {
        Poly lhs = d.derivative(i) * clearing_product(inst, i);
        Poly rhs(inst.p, inst.n);
        for (int j = 0; j < inst.n; ++j) {
            if (j == i) continue;
            rhs += clearing_product(inst, i, j).scaled(inst.M[i] + inst.M[j]);
        }
        if (lhs != d * rhs) return false;
    }
    return true;
}

bool degree_congruence_check(const KzInstance& inst, const VecPoly& I) {
    if (I.is_zero()) throw PreconditionError("degree congruence needs a nonzero solution");
    if (!I.is_homogeneous()) throw PreconditionError("degree congruence needs a homogeneous solution");
    if (!verify_kz_solution(inst, I).pass)
        throw PreconditionError("degree congruence needs a KZ solution");
    return modarith::norm(I.total_degree() - inst.sum_M(), inst.p) == 0;
}

} // namespace fpkz
