#include "fpkz/sl2.hpp"

#include <map>

namespace fpkz {

namespace {

// A vector in the tensor product of the V_{m_i}, supported on the small
// weight slice reachable from V[-2] by one generator application.  Keys are
// the f-exponent per tensor slot.
using TensorState = std::map<std::vector<int>, i64>;

void accumulate(TensorState& dst, const std::vector<int>& key, i64 c, i64 p) {
    if (c % p == 0) return;
    i64& slot = dst[key];
    slot = modarith::add(slot, modarith::norm(c, p), p);
    if (slot == 0) dst.erase(key);
}

// Standard actions on V_m with basis f^k v_m:
//   f . f^k v = f^{k+1} v (zero once k = m),
//   e . f^k v = k (m - k + 1) f^{k-1} v,
//   h . f^k v = (m - 2k) f^k v.
TensorState apply_f(const KzInstance& inst, int slot, const TensorState& s) {
    TensorState out;
    for (const auto& [key, c] : s) {
        if (key[slot] == inst.m[slot]) continue;
        std::vector<int> k2 = key;
        ++k2[slot];
        accumulate(out, k2, c, inst.p);
    }
    return out;
}

TensorState apply_e(const KzInstance& inst, int slot, const TensorState& s) {
    TensorState out;
    for (const auto& [key, c] : s) {
        int k = key[slot];
        if (k == 0) continue;
        std::vector<int> k2 = key;
        --k2[slot];
        accumulate(out, k2, c * ((inst.m[slot] - k + 1) % inst.p) % inst.p * k, inst.p);
    }
    return out;
}

TensorState apply_h(const KzInstance& inst, int slot, const TensorState& s) {
    TensorState out;
    for (const auto& [key, c] : s)
        accumulate(out, key, c * modarith::norm(inst.m[slot] - 2 * key[slot], inst.p), inst.p);
    return out;
}

} // namespace

bool is_singular_vector(const KzInstance& inst, const std::vector<i64>& a) {
    if (int(a.size()) != inst.n) throw ArityMismatch("singular vector size != n");
    i64 s = 0;
    for (int i = 0; i < inst.n; ++i) s = modarith::add(s, modarith::mul(modarith::norm(a[i], inst.p), inst.m[i] % inst.p, inst.p), inst.p);
    return s == 0;
}

std::vector<i64> to_w_coords(const KzInstance& inst, const std::vector<i64>& a) {
    if (!is_singular_vector(inst, a)) throw NotSingular("vector violates sum m_i a_i = 0");
    std::vector<i64> c(inst.n - 1, 0);
    i64 acc = 0;
    for (int j = 0; j < inst.n - 1; ++j) {
        acc = modarith::add(acc, modarith::mul(inst.M[j], modarith::norm(a[j], inst.p), inst.p), inst.p);
        c[j] = acc;
    }
    return c;
}

std::vector<i64> from_w_coords(const KzInstance& inst, const std::vector<i64>& c) {
    if (int(c.size()) != inst.n - 1) throw ArityMismatch("w-coordinate size != n-1");
    std::vector<i64> a(inst.n, 0);
    for (int j = 0; j < inst.n - 1; ++j) {
        if (c[j] % inst.p == 0) continue;
        i64 cj = modarith::norm(c[j], inst.p);
        a[j] = modarith::add(a[j], modarith::mul(cj, modarith::inv(inst.M[j], inst.p), inst.p), inst.p);
        a[j + 1] = modarith::sub(a[j + 1], modarith::mul(cj, modarith::inv(inst.M[j + 1], inst.p), inst.p), inst.p);
    }
    return a;
}

std::vector<i64> w_basis_vector(const KzInstance& inst, int j) {
    if (j < 1 || j > inst.n - 1) throw IndexError("w basis index out of range");
    std::vector<i64> a(inst.n, 0);
    a[j - 1] = modarith::inv(inst.M[j - 1], inst.p);
    a[j] = modarith::norm(-modarith::inv(inst.M[j], inst.p), inst.p);
    return a;
}

FpMat casimir_matrix(const KzInstance& inst, int i, int j) {
    if (i < 1 || i > inst.n || j < 1 || j > inst.n) throw IndexError("casimir index out of range");
    if (i == j) throw IndexError("casimir requires i != j");
    int si = i - 1, sj = j - 1;
    i64 p = inst.p;
    i64 half = modarith::inv(2 % p, p);
    i64 mimj_half = modarith::mul(modarith::mul(inst.m[si] % p, inst.m[sj] % p, p), half, p);

    FpMat out(p, inst.n, inst.n);
    for (int k = 0; k < inst.n; ++k) {
        std::vector<int> key(inst.n, 0);
        key[k] = 1; // f^(k) v
        TensorState basis{{key, 1 % p}};

        TensorState img;
        for (const auto& [kk, c] : apply_h(inst, si, apply_h(inst, sj, basis)))
            accumulate(img, kk, modarith::mul(c, half, p), p);
        for (const auto& [kk, c] : apply_e(inst, si, apply_f(inst, sj, basis)))
            accumulate(img, kk, c, p);
        for (const auto& [kk, c] : apply_f(inst, si, apply_e(inst, sj, basis)))
            accumulate(img, kk, c, p);
        for (const auto& [kk, c] : basis)
            accumulate(img, kk, -modarith::mul(c, mimj_half, p), p);

        for (const auto& [kk, c] : img) {
            int slot = -1;
            int weight = 0;
            for (int t = 0; t < inst.n; ++t) {
                weight += kk[t];
                if (kk[t] == 1) slot = t;
            }
            if (weight != 1 || slot < 0)
                throw Error("casimir image escaped the V[-2] slice");
            out.at(slot, k) = c;
        }
    }
    return out;
}

FpMat omega_M_on_sing(const KzInstance& inst, int i, int j) {
    FpMat om = omega_M(inst, i, j);
    FpMat out(inst.p, inst.n - 1, inst.n - 1);
    for (int k = 1; k <= inst.n - 1; ++k) {
        std::vector<i64> img = om.apply(w_basis_vector(inst, k));
        std::vector<i64> c = to_w_coords(inst, img); // Omega^M preserves Sing V[-2]
        for (int rr = 0; rr < inst.n - 1; ++rr) out.at(rr, k - 1) = c[rr];
    }
    return out;
}

i64 trace_omega_M_on_sing(const KzInstance& inst, int i, int j) {
    return omega_M_on_sing(inst, i, j).trace();
}

} // namespace fpkz
