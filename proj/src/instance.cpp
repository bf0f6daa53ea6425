#include "fpkz/instance.hpp"

#include <numeric>

namespace fpkz {

i64 KzInstance::sum_M() const { return std::accumulate(M.begin(), M.end(), i64(0)); }

i64 KzInstance::delta(int l) const { return sum_M() - i64(l) * p; }

KzInstance make_instance(i64 p, i64 q, const std::vector<i64>& m) {
    if (!is_prime(p)) throw InvalidInstance("p is not prime");
    if (!is_prime(q)) throw InvalidInstance("q is not prime");
    int n = int(m.size());
    if (n < 2) throw InvalidInstance("need n >= 2 weights");
    if (p <= n) throw InvalidInstance("need p > n");
    if (p <= q) throw InvalidInstance("need p > q");
    for (i64 mi : m)
        if (mi <= 0 || mi >= q) throw InvalidInstance("weights must satisfy 0 < m_i < q");

    KzInstance inst;
    inst.p = p;
    inst.q = q;
    inst.n = n;
    inst.m = m;
    inst.M.resize(n);
    i64 qinv = modarith::inv(q % p, p);
    for (int i = 0; i < n; ++i) {
        inst.M[i] = modarith::mul(modarith::norm(-m[i], p), qinv, p);
        // m_i is nonzero mod p, so the least positive solution is the residue
        if (inst.M[i] <= 0 || inst.M[i] >= p) throw InvalidInstance("derived M_i out of range");
    }
    inst.r = int(inst.sum_M() / p);
    inst.ample = (inst.r == n - 1);
    return inst;
}

FpMat FpMat::identity(i64 p, int n) {
    FpMat m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

std::vector<i64> FpMat::apply(const std::vector<i64>& v) const {
    if (int(v.size()) != cols) throw ArityMismatch("FpMat apply size mismatch");
    std::vector<i64> out(rows, 0);
    for (int r = 0; r < rows; ++r) {
        i64 acc = 0;
        for (int c = 0; c < cols; ++c) acc += at(r, c) * v[c] % p;
        out[r] = acc % p;
    }
    return out;
}

FpMat FpMat::operator*(const FpMat& other) const {
    if (cols != other.rows || p != other.p) throw ArityMismatch("FpMat product shape mismatch");
    FpMat out(p, rows, other.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
            i64 v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < other.cols; ++c)
                out.at(r, c) = (out.at(r, c) + v * other.at(k, c)) % p;
        }
    return out;
}

FpMat FpMat::operator+(const FpMat& other) const {
    if (rows != other.rows || cols != other.cols || p != other.p)
        throw ArityMismatch("FpMat sum shape mismatch");
    FpMat out(p, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = modarith::add(a[i], other.a[i], p);
    return out;
}

FpMat FpMat::scaled(i64 c) const {
    FpMat out(p, rows, cols);
    c = modarith::norm(c, p);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = modarith::mul(a[i], c, p);
    return out;
}

i64 FpMat::trace() const {
    i64 acc = 0;
    for (int i = 0; i < rows && i < cols; ++i) acc = modarith::add(acc, at(i, i), p);
    return acc;
}

bool FpMat::operator==(const FpMat& other) const {
    return p == other.p && rows == other.rows && cols == other.cols && a == other.a;
}

FpMat omega_standard(const KzInstance& inst, int i, int j) {
    if (i < 1 || i > inst.n || j < 1 || j > inst.n) throw IndexError("omega index out of range");
    if (i == j) throw IndexError("omega requires i != j");
    FpMat om(inst.p, inst.n, inst.n);
    int a = i - 1, b = j - 1;
    om.at(a, a) = modarith::norm(-inst.m[b], inst.p);
    om.at(a, b) = modarith::norm(inst.m[b], inst.p);
    om.at(b, a) = modarith::norm(inst.m[a], inst.p);
    om.at(b, b) = modarith::norm(-inst.m[a], inst.p);
    return om;
}

FpMat omega_M(const KzInstance& inst, int j, int l) {
    if (j < 1 || j > inst.n || l < 1 || l > inst.n) throw IndexError("omega_M index out of range");
    if (j == l) throw IndexError("omega_M requires j != l");
    FpMat om(inst.p, inst.n, inst.n);
    int a = j - 1, b = l - 1;
    om.at(a, a) = inst.M[b] % inst.p;
    om.at(a, b) = modarith::norm(-inst.M[b], inst.p);
    om.at(b, a) = modarith::norm(-inst.M[a], inst.p);
    om.at(b, b) = inst.M[a] % inst.p;
    return om;
}

FpMat omega_M_rowsum(const KzInstance& inst, int j) {
    if (j < 1 || j > inst.n - 1) throw IndexError("omega_M_rowsum requires 1 <= j <= n-1");
    FpMat acc(inst.p, inst.n, inst.n);
    for (int l = j + 1; l <= inst.n; ++l) acc = acc + omega_M(inst, j, l);
    return acc;
}

} // namespace fpkz
