#ifndef FPKZ_POLY_HPP
#define FPKZ_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpkz/errors.hpp"
#include "fpkz/fp.hpp"

namespace fpkz {

// Monomials are packed into a 64-bit key, 8 bits per variable, slot 0 in the
// most significant byte.  With that layout the plain integer order on keys is
// exactly the id-lexicographic order on monomials (z_1 compared first).
// Exponents are capped at 255 and arity at 8, which covers every instance
// this library targets; violations throw.
using Key = std::uint64_t;
using Exponents = std::vector<int>;

// A permutation of (1..n), sigma[0] = index of the heaviest variable.
using Perm = std::vector<int>;

constexpr int kMaxArity = 8;
constexpr int kMaxExponent = 255;

inline int key_get(Key k, int slot) { return int((k >> (8 * (7 - slot))) & 0xffu); }

inline Key key_of_var(int slot, int e = 1) { return Key(e) << (8 * (7 - slot)); }

Key pack_exponents(const Exponents& e);
Exponents unpack_key(Key k, int arity);
int key_total_degree(Key k, int arity);

Perm identity_perm(int n);
Perm reversal_perm(int n);
bool is_valid_perm(const Perm& sigma, int n);

// true iff a < b in the sigma-lexicographic order.
bool sigma_key_less(Key a, Key b, const Perm& sigma);

struct Term {
    Key key;
    i64 coeff; // in [1, p)
};

struct ScalarLeadingTerm {
    i64 coeff;
    Exponents exponents;
};

// sigma-leading term of a coordinate vector of polynomials: the coefficient
// is the vector of coordinate coefficients at the sigma-largest monomial.
struct VectorLeadingTerm {
    std::vector<i64> coeff;
    Exponents exponents;
};

// Sparse multivariate polynomial over F_p, canonical form: terms sorted by
// key descending (id-lex descending), no zero coefficients.
class Poly {
public:
    Poly(i64 p, int arity);

    static Poly zero(i64 p, int arity) { return Poly(p, arity); }
    static Poly constant(i64 p, int arity, i64 c);
    static Poly one(i64 p, int arity) { return constant(p, arity, 1); }
    static Poly variable(i64 p, int arity, int slot);
    static Poly monomial(i64 p, int arity, const Exponents& e, i64 c);
    // (x_a - x_b)^e expanded by the binomial theorem.
    static Poly linear_diff_power(i64 p, int arity, int slot_a, int slot_b, int e);

    i64 p() const { return p_; }
    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    i64 coeff_at(const Exponents& e) const;
    i64 coeff_at_key(Key k) const;

    Poly operator-() const;
    Poly scaled(i64 c) const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // k-fold formal partial derivative in the given variable slot.
    Poly derivative(int slot, int order = 1) const;

    // For a polynomial whose last slot is the auxiliary variable x: the
    // coefficient of x^k, as a polynomial of arity-1 variables.
    Poly extract_x_coeff(int k) const;

    Poly shifted_mul_monomial(Key k, i64 c) const; // this * c z^k

    int total_degree() const;    // max over terms; -1 for the zero polynomial
    bool is_homogeneous() const; // zero polynomial counts as homogeneous
    int degree_in(int slot) const;

    i64 eval(const std::vector<i64>& point) const;

    ScalarLeadingTerm leading_term(const Perm& sigma) const; // ZeroPolynomial on 0
    Key leading_key(const Perm& sigma) const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

    // Builder access used by the arithmetic kernels and deserialization:
    // pairs need not be sorted or reduced; zero coefficients are dropped.
    static Poly from_pairs(i64 p, int arity, std::vector<std::pair<Key, i64>> pairs);

private:
    void check_compatible(const Poly& b) const;
    std::vector<int> slot_maxima() const;

    i64 p_;
    int arity_;
    std::vector<Term> terms_;
};

// An n-tuple of coordinate polynomials sharing modulus and arity; the
// carrier of solution vectors I(z).
class VecPoly {
public:
    VecPoly(i64 p, int arity, int n);
    explicit VecPoly(std::vector<Poly> coords);

    i64 p() const { return p_; }
    int arity() const { return arity_; }
    int size() const { return int(coords_.size()); }
    const Poly& operator[](int i) const { return coords_[i]; }
    Poly& operator[](int i) { return coords_[i]; }
    const std::vector<Poly>& coords() const { return coords_; }

    bool is_zero() const;
    int total_degree() const;
    bool is_homogeneous() const;

    VecPoly operator-() const;
    VecPoly scaled(i64 c) const;
    friend VecPoly operator+(const VecPoly& a, const VecPoly& b);
    friend VecPoly operator-(const VecPoly& a, const VecPoly& b);
    friend bool operator==(const VecPoly& a, const VecPoly& b);
    friend bool operator!=(const VecPoly& a, const VecPoly& b) { return !(a == b); }

    VecPoly mul_poly(const Poly& f) const;
    VecPoly derivative(int slot, int order = 1) const;
    VecPoly extract_x_coeff(int k) const;

    // Coefficient vector of the monomial z^e across the coordinates.
    std::vector<i64> coeff_vector_at(const Exponents& e) const;
    std::vector<i64> coeff_vector_at_key(Key k) const;

    std::vector<i64> eval(const std::vector<i64>& point) const;

    VectorLeadingTerm leading_term(const Perm& sigma) const; // ZeroPolynomial on 0
    Key leading_key(const Perm& sigma) const;

private:
    i64 p_;
    int arity_;
    std::vector<Poly> coords_;
};

} // namespace fpkz

#endif
