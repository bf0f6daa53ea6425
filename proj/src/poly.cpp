#include "fpkz/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fpkz {

using modarith::mul;
using modarith::norm;

Key pack_exponents(const Exponents& e) {
    if (int(e.size()) > kMaxArity) throw Error("arity exceeds packed-key limit");
    Key k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > kMaxExponent) throw Error("exponent outside [0, 255]");
        k |= Key(e[i]) << (8 * (7 - i));
    }
    return k;
}

Exponents unpack_key(Key k, int arity) {
    Exponents e(arity);
    for (int i = 0; i < arity; ++i) e[i] = key_get(k, i);
    return e;
}

int key_total_degree(Key k, int arity) {
    int d = 0;
    for (int i = 0; i < arity; ++i) d += key_get(k, i);
    return d;
}

Perm identity_perm(int n) {
    Perm s(n);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

Perm reversal_perm(int n) {
    Perm s(n);
    for (int i = 0; i < n; ++i) s[i] = n - i;
    return s;
}

bool is_valid_perm(const Perm& sigma, int n) {
    if (int(sigma.size()) != n) return false;
    std::vector<bool> seen(n + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool sigma_key_less(Key a, Key b, const Perm& sigma) {
    for (int idx : sigma) {
        int ea = key_get(a, idx - 1), eb = key_get(b, idx - 1);
        if (ea != eb) return ea < eb;
    }
    return false;
}

namespace {

bool is_identity(const Perm& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] != int(i) + 1) return false;
    return true;
}

// Open-addressing accumulator for products; keys are packed monomials.
class Accum {
public:
    explicit Accum(std::size_t expected) {
        std::size_t cap = 64;
        while (cap < expected * 2) cap <<= 1;
        keys_.assign(cap, 0);
        vals_.assign(cap, 0);
        used_.assign(cap, 0);
        mask_ = cap - 1;
    }

    void add(Key k, i64 v, i64 p) {
        std::size_t h = std::size_t((k * 0x9e3779b97f4a7c15ull) >> 32) & mask_;
        while (true) {
            if (!used_[h]) {
                used_[h] = 1;
                keys_[h] = k;
                vals_[h] = v;
                if (++count_ * 10 > (mask_ + 1) * 7) grow(p);
                return;
            }
            if (keys_[h] == k) {
                vals_[h] = modarith::add(vals_[h], v, p);
                return;
            }
            h = (h + 1) & mask_;
        }
    }

    std::vector<std::pair<Key, i64>> take() {
        std::vector<std::pair<Key, i64>> out;
        out.reserve(count_);
        for (std::size_t i = 0; i <= mask_; ++i)
            if (used_[i] && vals_[i] != 0) out.emplace_back(keys_[i], vals_[i]);
        return out;
    }

private:
    void grow(i64 p) {
        std::vector<Key> ok = std::move(keys_);
        std::vector<i64> ov = std::move(vals_);
        std::vector<std::uint8_t> ou = std::move(used_);
        std::size_t cap = (mask_ + 1) << 1;
        keys_.assign(cap, 0);
        vals_.assign(cap, 0);
        used_.assign(cap, 0);
        mask_ = cap - 1;
        count_ = 0;
        for (std::size_t i = 0; i < ok.size(); ++i)
            if (ou[i]) add(ok[i], ov[i], p);
    }

    std::vector<Key> keys_;
    std::vector<i64> vals_;
    std::vector<std::uint8_t> used_;
    std::size_t mask_ = 0;
    std::size_t count_ = 0;
};

} // namespace

Poly::Poly(i64 p, int arity) : p_(p), arity_(arity) {
    if (p < 2) throw Error("modulus must be at least 2");
    if (arity < 0 || arity > kMaxArity) throw Error("arity outside [0, 8]");
}

Poly Poly::constant(i64 p, int arity, i64 c) {
    Poly f(p, arity);
    i64 v = norm(c, p);
    if (v != 0) f.terms_.push_back({0, v});
    return f;
}

Poly Poly::variable(i64 p, int arity, int slot) {
    if (slot < 0 || slot >= arity) throw IndexError("variable slot out of range");
    Poly f(p, arity);
    f.terms_.push_back({key_of_var(slot), 1 % p});
    return f;
}

Poly Poly::monomial(i64 p, int arity, const Exponents& e, i64 c) {
    if (int(e.size()) != arity) throw ArityMismatch("monomial exponent arity mismatch");
    Poly f(p, arity);
    i64 v = norm(c, p);
    if (v != 0) f.terms_.push_back({pack_exponents(e), v});
    return f;
}

Poly Poly::linear_diff_power(i64 p, int arity, int slot_a, int slot_b, int e) {
    if (slot_a < 0 || slot_a >= arity || slot_b < 0 || slot_b >= arity || slot_a == slot_b)
        throw IndexError("linear_diff_power slots out of range");
    if (e < 0 || e > kMaxExponent) throw Error("exponent outside [0, 255]");
    std::vector<std::pair<Key, i64>> pairs;
    pairs.reserve(e + 1);
    for (int t = 0; t <= e; ++t) {
        i64 c = binom_mod_p(e, t, p).value();
        if ((e - t) & 1) c = norm(-c, p);
        if (c == 0) continue;
        Key k = (Key(t) << (8 * (7 - slot_a))) | (Key(e - t) << (8 * (7 - slot_b)));
        pairs.emplace_back(k, c);
    }
    return from_pairs(p, arity, std::move(pairs));
}

Poly Poly::from_pairs(i64 p, int arity, std::vector<std::pair<Key, i64>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    Poly f(p, arity);
    f.terms_.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size();) {
        Key k = pairs[i].first;
        i64 acc = 0;
        for (; i < pairs.size() && pairs[i].first == k; ++i)
            acc = modarith::add(acc, norm(pairs[i].second, p), p);
        if (acc != 0) f.terms_.push_back({k, acc});
    }
    return f;
}

void Poly::check_compatible(const Poly& b) const {
    if (p_ != b.p_) throw ModulusMismatch("polynomial modulus mismatch");
    if (arity_ != b.arity_) throw ArityMismatch("polynomial arity mismatch");
}

std::vector<int> Poly::slot_maxima() const {
    std::vector<int> mx(arity_, 0);
    for (const Term& t : terms_)
        for (int i = 0; i < arity_; ++i) mx[i] = std::max(mx[i], key_get(t.key, i));
    return mx;
}

i64 Poly::coeff_at(const Exponents& e) const {
    if (int(e.size()) != arity_) throw ArityMismatch("coeff_at arity mismatch");
    return coeff_at_key(pack_exponents(e));
}

i64 Poly::coeff_at_key(Key k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Key key) { return t.key > key; });
    if (it != terms_.end() && it->key == k) return it->coeff;
    return 0;
}

Poly Poly::operator-() const {
    Poly f(p_, arity_);
    f.terms_.reserve(terms_.size());
    for (const Term& t : terms_) f.terms_.push_back({t.key, p_ - t.coeff});
    return f;
}

Poly Poly::scaled(i64 c) const {
    c = norm(c, p_);
    Poly f(p_, arity_);
    if (c == 0) return f;
    f.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        i64 v = mul(t.coeff, c, p_);
        if (v != 0) f.terms_.push_back({t.key, v});
    }
    return f;
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly f(a.p_, a.arity_);
    f.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        if (a.terms_[i].key > b.terms_[j].key) {
            f.terms_.push_back(a.terms_[i++]);
        } else if (a.terms_[i].key < b.terms_[j].key) {
            f.terms_.push_back(b.terms_[j++]);
        } else {
            i64 v = modarith::add(a.terms_[i].coeff, b.terms_[j].coeff, a.p_);
            if (v != 0) f.terms_.push_back({a.terms_[i].key, v});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) f.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) f.terms_.push_back(b.terms_[j]);
    return f;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly& Poly::operator+=(const Poly& b) {
    *this = *this + b;
    return *this;
}

Poly& Poly::operator-=(const Poly& b) {
    *this = *this - b;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly f(a.p_, a.arity_);
    if (a.is_zero() || b.is_zero()) return f;
    std::vector<int> ma = a.slot_maxima(), mb = b.slot_maxima();
    for (int i = 0; i < a.arity_; ++i)
        if (ma[i] + mb[i] > kMaxExponent) throw Error("product exponent exceeds 255");

    const Poly& small = a.num_terms() <= b.num_terms() ? a : b;
    const Poly& big = a.num_terms() <= b.num_terms() ? b : a;
    if (small.num_terms() <= 8) {
        for (const Term& t : small.terms_) f += big.shifted_mul_monomial(t.key, t.coeff);
        return f;
    }
    Accum acc(small.num_terms() + big.num_terms());
    for (const Term& ta : a.terms_)
        for (const Term& tb : b.terms_)
            acc.add(ta.key + tb.key, mul(ta.coeff, tb.coeff, a.p_), a.p_);
    return Poly::from_pairs(a.p_, a.arity_, acc.take());
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.p_ != b.p_ || a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::derivative(int slot, int order) const {
    if (slot < 0 || slot >= arity_) throw IndexError("derivative slot out of range");
    if (order < 0) throw DomainError("derivative order must be nonnegative");
    if (order == 0) return *this;
    Poly f(p_, arity_);
    f.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        int d = key_get(t.key, slot);
        if (d < order) continue; // falling factorial hits an integer zero
        i64 c = t.coeff;
        for (int k = 0; k < order; ++k) c = mul(c, (d - k) % p_, p_);
        if (c == 0) continue;
        f.terms_.push_back({t.key - (Key(order) << (8 * (7 - slot))), c});
    }
    return f;
}

Poly Poly::extract_x_coeff(int k) const {
    if (arity_ < 1) throw ArityMismatch("extract_x_coeff needs the auxiliary slot");
    int slot = arity_ - 1;
    Poly f(p_, arity_ - 1);
    for (const Term& t : terms_)
        if (key_get(t.key, slot) == k)
            f.terms_.push_back({t.key - (Key(k) << (8 * (7 - slot))), t.coeff});
    // dropping the top slot preserves the descending key order
    return f;
}

Poly Poly::shifted_mul_monomial(Key k, i64 c) const {
    c = norm(c, p_);
    Poly f(p_, arity_);
    if (c == 0) return f;
    f.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        i64 v = mul(t.coeff, c, p_);
        if (v != 0) f.terms_.push_back({t.key + k, v});
    }
    return f;
}

int Poly::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, key_total_degree(t.key, arity_));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = key_total_degree(terms_[0].key, arity_);
    for (const Term& t : terms_)
        if (key_total_degree(t.key, arity_) != d) return false;
    return true;
}

int Poly::degree_in(int slot) const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, key_get(t.key, slot));
    return d;
}

i64 Poly::eval(const std::vector<i64>& point) const {
    if (int(point.size()) != arity_) throw ArityMismatch("eval point arity mismatch");
    i64 acc = 0;
    for (const Term& t : terms_) {
        i64 v = t.coeff;
        for (int i = 0; i < arity_; ++i) {
            int e = key_get(t.key, i);
            if (e != 0) v = mul(v, modarith::pow(point[i], e, p_), p_);
        }
        acc = modarith::add(acc, v, p_);
    }
    return acc;
}

Key Poly::leading_key(const Perm& sigma) const {
    if (terms_.empty()) throw ZeroPolynomial();
    if (is_identity(sigma)) return terms_[0].key;
    Key best = terms_[0].key;
    for (const Term& t : terms_)
        if (sigma_key_less(best, t.key, sigma)) best = t.key;
    return best;
}

ScalarLeadingTerm Poly::leading_term(const Perm& sigma) const {
    Key k = leading_key(sigma);
    return {coeff_at_key(k), unpack_key(k, arity_)};
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (t.coeff != 1 || t.key == 0) {
            os << t.coeff;
            printed = true;
        }
        for (int i = 0; i < arity_; ++i) {
            int e = key_get(t.key, i);
            if (e == 0) continue;
            if (printed) os << "*";
            if (int(var_names.size()) > i)
                os << var_names[i];
            else
                os << "z" << (i + 1);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

VecPoly::VecPoly(i64 p, int arity, int n) : p_(p), arity_(arity) {
    if (n < 1) throw Error("VecPoly needs at least one coordinate");
    coords_.assign(n, Poly(p, arity));
}

VecPoly::VecPoly(std::vector<Poly> coords) {
    if (coords.empty()) throw Error("VecPoly needs at least one coordinate");
    p_ = coords[0].p();
    arity_ = coords[0].arity();
    for (const Poly& c : coords) {
        if (c.p() != p_) throw ModulusMismatch("VecPoly coordinate modulus mismatch");
        if (c.arity() != arity_) throw ArityMismatch("VecPoly coordinate arity mismatch");
    }
    coords_ = std::move(coords);
}

bool VecPoly::is_zero() const {
    for (const Poly& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

int VecPoly::total_degree() const {
    int d = -1;
    for (const Poly& c : coords_) d = std::max(d, c.total_degree());
    return d;
}

bool VecPoly::is_homogeneous() const {
    int d = -1;
    for (const Poly& c : coords_) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) return false;
        int dc = c.total_degree();
        if (d == -1)
            d = dc;
        else if (d != dc)
            return false;
    }
    return true;
}

VecPoly VecPoly::operator-() const {
    VecPoly v = *this;
    for (Poly& c : v.coords_) c = -c;
    return v;
}

VecPoly VecPoly::scaled(i64 c) const {
    VecPoly v = *this;
    for (Poly& f : v.coords_) f = f.scaled(c);
    return v;
}

VecPoly operator+(const VecPoly& a, const VecPoly& b) {
    if (a.size() != b.size()) throw ArityMismatch("VecPoly size mismatch");
    VecPoly v = a;
    for (int i = 0; i < a.size(); ++i) v.coords_[i] = a.coords_[i] + b.coords_[i];
    return v;
}

VecPoly operator-(const VecPoly& a, const VecPoly& b) { return a + (-b); }

bool operator==(const VecPoly& a, const VecPoly& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (a.coords_[i] != b.coords_[i]) return false;
    return true;
}

VecPoly VecPoly::mul_poly(const Poly& f) const {
    VecPoly v = *this;
    for (Poly& c : v.coords_) c = c * f;
    return v;
}

VecPoly VecPoly::derivative(int slot, int order) const {
    VecPoly v = *this;
    for (Poly& c : v.coords_) c = c.derivative(slot, order);
    return v;
}

VecPoly VecPoly::extract_x_coeff(int k) const {
    std::vector<Poly> out;
    out.reserve(coords_.size());
    for (const Poly& c : coords_) out.push_back(c.extract_x_coeff(k));
    return VecPoly(std::move(out));
}

std::vector<i64> VecPoly::coeff_vector_at(const Exponents& e) const {
    return coeff_vector_at_key(pack_exponents(e));
}

std::vector<i64> VecPoly::coeff_vector_at_key(Key k) const {
    std::vector<i64> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i].coeff_at_key(k);
    return out;
}

std::vector<i64> VecPoly::eval(const std::vector<i64>& point) const {
    std::vector<i64> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i].eval(point);
    return out;
}

Key VecPoly::leading_key(const Perm& sigma) const {
    bool have = false;
    Key best = 0;
    for (const Poly& c : coords_) {
        if (c.is_zero()) continue;
        Key k = c.leading_key(sigma);
        if (!have || sigma_key_less(best, k, sigma)) {
            best = k;
            have = true;
        }
    }
    if (!have) throw ZeroPolynomial();
    return best;
}

VectorLeadingTerm VecPoly::leading_term(const Perm& sigma) const {
    Key k = leading_key(sigma);
    return {coeff_vector_at_key(k), unpack_key(k, arity_)};
}

} // namespace fpkz
