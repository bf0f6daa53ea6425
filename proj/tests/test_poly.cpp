#include <doctest.h>

#include <random>

#include "fpkz/poly.hpp"

using namespace fpkz;

namespace {

Poly random_poly(std::mt19937& rng, i64 p, int arity, int max_exp, int terms) {
    std::uniform_int_distribution<int> ed(0, max_exp);
    std::uniform_int_distribution<i64> cd(0, p - 1);
    std::vector<std::pair<Key, i64>> pairs;
    for (int t = 0; t < terms; ++t) {
        Exponents e(arity);
        for (int& v : e) v = ed(rng);
        pairs.emplace_back(pack_exponents(e), cd(rng));
    }
    return Poly::from_pairs(p, arity, std::move(pairs));
}

} // namespace

TEST_CASE("binomial expansion of (x - z1)^e") {
    // arity 2: slot 0 = z1, slot 1 = x
    Poly f = Poly::linear_diff_power(5, 2, 1, 0, 3);
    CHECK(f.num_terms() == 4);
    CHECK(f.coeff_at({0, 3}) == 1);
    CHECK(f.coeff_at({1, 2}) == 2);
    CHECK(f.coeff_at({2, 1}) == 3);
    CHECK(f.coeff_at({3, 0}) == 4);

    // Frobenius: (x - z1)^5 = x^5 - z1^5 over F_5
    Poly g = Poly::linear_diff_power(5, 2, 1, 0, 5);
    CHECK(g.num_terms() == 2);
    CHECK(g.coeff_at({0, 5}) == 1);
    CHECK(g.coeff_at({5, 0}) == 4);
}

TEST_CASE("multiplicative identity and compatibility errors") {
    std::mt19937 rng(7);
    Poly f = random_poly(rng, 7, 3, 5, 12);
    CHECK(f * Poly::one(7, 3) == f);
    CHECK_THROWS_AS(f * Poly::one(5, 3), ModulusMismatch);
    CHECK_THROWS_AS(f * Poly::one(7, 2), ArityMismatch);
}

TEST_CASE("formal derivatives in characteristic p") {
    i64 p = 5;
    Poly zp = Poly::monomial(p, 1, {int(p)}, 1);
    CHECK(zp.derivative(0).is_zero());
    Poly z2 = Poly::monomial(p, 1, {2}, 1);
    CHECK(z2.derivative(0, 2) == Poly::constant(p, 1, 2));
    Poly zp1 = Poly::monomial(p, 1, {int(p) + 1}, 1);
    CHECK(zp1.derivative(0) == Poly::monomial(p, 1, {int(p)}, 1));
    CHECK(z2.derivative(0, 3).is_zero());
    CHECK(z2.derivative(0, 0) == z2);
}

TEST_CASE("extract_x_coeff") {
    // arity 3: z1, z2, x
    i64 p = 5;
    Poly f = Poly::monomial(p, 3, {1, 0, 4}, 1) + Poly::monomial(p, 3, {0, 1, 4}, 1) +
             Poly::monomial(p, 3, {1, 0, 1}, 1);
    Poly c4 = f.extract_x_coeff(4);
    CHECK(c4.arity() == 2);
    CHECK(c4 == Poly::monomial(p, 2, {1, 0}, 1) + Poly::monomial(p, 2, {0, 1}, 1));
    CHECK(f.extract_x_coeff(9).is_zero());

    Poly g = Poly::linear_diff_power(p, 3, 2, 0, 2) * Poly::linear_diff_power(p, 3, 2, 1, 3);
    Poly want = Poly::monomial(p, 2, {1, 0}, 3) + Poly::monomial(p, 2, {0, 1}, 2);
    CHECK(g.extract_x_coeff(4) == want);
}

TEST_CASE("leading terms under permutation orderings") {
    i64 p = 7;
    Poly f = Poly::monomial(p, 2, {1, 2}, 1) + Poly::monomial(p, 2, {2, 0}, 1);
    ScalarLeadingTerm id_lt = f.leading_term(identity_perm(2));
    CHECK(id_lt.coeff == 1);
    CHECK(id_lt.exponents == Exponents{2, 0});
    ScalarLeadingTerm sw_lt = f.leading_term(Perm{2, 1});
    CHECK(sw_lt.exponents == Exponents{1, 2});
    CHECK_THROWS_AS(Poly::zero(p, 2).leading_term(identity_perm(2)), ZeroPolynomial);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240601);
    for (int it = 0; it < 40; ++it) {
        Poly a = random_poly(rng, 7, 3, 4, 8);
        Poly b = random_poly(rng, 7, 3, 4, 8);
        Poly c = random_poly(rng, 7, 3, 4, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("Stokes analog: d/dx never contributes to x^{lp-1}") {
    std::mt19937 rng(99);
    i64 p = 5;
    for (int it = 0; it < 30; ++it) {
        Poly q = random_poly(rng, p, 3, 11, 20); // z1, z2, x
        Poly dq = q.derivative(2);
        for (int l = 1; l <= 2; ++l) CHECK(dq.extract_x_coeff(int(l * p - 1)).is_zero());
    }
}

TEST_CASE("leading monomial of a product multiplies") {
    std::mt19937 rng(5);
    Perm swapped{3, 1, 2};
    for (int it = 0; it < 40; ++it) {
        Poly a = random_poly(rng, 11, 3, 5, 6);
        Poly b = random_poly(rng, 11, 3, 5, 6);
        if (a.is_zero() || b.is_zero()) continue;
        for (const Perm& sigma : {identity_perm(3), swapped}) {
            CHECK((a * b).leading_key(sigma) == a.leading_key(sigma) + b.leading_key(sigma));
        }
    }
}

TEST_CASE("homogeneity and derivative degree drop") {
    i64 p = 7;
    Poly f = Poly::monomial(p, 2, {2, 1}, 3) + Poly::monomial(p, 2, {0, 3}, 5);
    CHECK(f.is_homogeneous());
    CHECK(f.total_degree() == 3);
    Poly df = f.derivative(1);
    CHECK(!df.is_zero());
    CHECK(df.total_degree() == 2);
    Poly g = f + Poly::one(p, 2);
    CHECK(!g.is_homogeneous());
}

TEST_CASE("evaluation") {
    i64 p = 13;
    Poly f = Poly::monomial(p, 2, {2, 1}, 3) + Poly::constant(p, 2, 5);
    // 3 * 4 * 5 + 5 = 65 = 0 mod 13
    CHECK(f.eval({2, 5}) == 0);
}

TEST_CASE("VecPoly leading term takes the vector of coordinate coefficients") {
    i64 p = 5;
    Poly a = Poly::monomial(p, 2, {1, 0}, 3) + Poly::monomial(p, 2, {0, 1}, 2);
    Poly b = Poly::monomial(p, 2, {1, 0}, 2) + Poly::monomial(p, 2, {0, 1}, 3);
    VecPoly v(std::vector<Poly>{a, b});
    VectorLeadingTerm lt = v.leading_term(identity_perm(2));
    CHECK(lt.exponents == Exponents{1, 0});
    CHECK(lt.coeff == std::vector<i64>{3, 2});
    CHECK_THROWS_AS(VecPoly(p, 2, 2).leading_term(identity_perm(2)), ZeroPolynomial);
}
