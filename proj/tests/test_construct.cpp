#include <doctest.h>

#include <random>

#include "test_cases.hpp"

#include "fpkz/construct.hpp"
#include "fpkz/kz.hpp"

using namespace fpkz;

TEST_CASE("integrand vector") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    VecPoly P = integrand_vector(inst);
    // coordinate 1 = (x - z1)^2 (x - z2)^3, slots: z1, z2, x
    Poly want = Poly::linear_diff_power(5, 3, 2, 0, 2) * Poly::linear_diff_power(5, 3, 2, 1, 3);
    CHECK(P[0] == want);
    for (int j = 0; j < 2; ++j) CHECK(P[j].degree_in(2) == inst.sum_M() - 1);

    KzInstance ex = make_instance(3, 2, {1, 1});
    VecPoly Q = integrand_vector(ex);
    CHECK(Q[0] == Poly::linear_diff_power(3, 3, 2, 1, 1)); // (x - z2)
}

TEST_CASE("hypergeometric solution for the beta instance") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    HypergeomSolution sol = hypergeometric_solution(inst, 1);
    Poly i1 = Poly::monomial(5, 2, {1, 0}, 3) + Poly::monomial(5, 2, {0, 1}, 2);
    Poly i2 = Poly::monomial(5, 2, {1, 0}, 2) + Poly::monomial(5, 2, {0, 1}, 3);
    CHECK(sol.poly == VecPoly(std::vector<Poly>{i1, i2}));
    CHECK(sol.degree == 1);
    CHECK_THROWS_AS(hypergeometric_solution(inst, 2), CycleOutOfRange);
    CHECK_THROWS_AS(hypergeometric_solution(inst, 0), CycleOutOfRange);
    CHECK_THROWS_AS(hypergeometric_solution(make_instance(3, 2, {1, 1}), 1), CycleOutOfRange);
}

TEST_CASE("worked-example degrees") {
    KzInstance inst = make_instance(13, 3, {2, 2, 2, 1, 1, 1});
    HypergeomSolution s1 = hypergeometric_solution(inst, 1);
    HypergeomSolution s2 = hypergeometric_solution(inst, 2);
    CHECK(s1.degree == 23);
    CHECK(s2.degree == 10);
    CHECK(s1.poly.is_homogeneous());
    CHECK(s1.poly.total_degree() == 23);
    CHECK(s2.poly.total_degree() == 10);
}

TEST_CASE("convolution extraction equals full-product extraction") {
    for (const auto& [p, q, m] : std::vector<PQm>{
             {5, 3, {1, 1}}, {7, 5, {3, 3}}, {11, 5, {3, 4, 4}}}) {
        KzInstance inst = make_instance(p, q, m);
        VecPoly P = integrand_vector(inst);
        for (int l = 1; l <= inst.r; ++l) {
            VecPoly direct = P.extract_x_coeff(int(l * inst.p - 1));
            CHECK(direct == hypergeometric_solution(inst, l).poly);
        }
    }
}

TEST_CASE("solution invariants: degree bounds and KZ verification") {
    for (const auto& [p, q, m] : std::vector<PQm>{
             {7, 5, {3, 4}}, {11, 5, {4, 4, 4}}, {13, 5, {2, 2, 2, 2}}}) {
        KzInstance inst = make_instance(p, q, m);
        REQUIRE(inst.r >= 1);
        for (int l = 1; l <= inst.r; ++l) {
            HypergeomSolution sol = hypergeometric_solution(inst, l);
            CHECK(sol.poly.is_homogeneous());
            CHECK(sol.poly.total_degree() == inst.delta(l));
            for (int j = 0; j < inst.n; ++j)
                for (int s = 0; s < inst.n; ++s)
                    CHECK(sol.poly[j].degree_in(s) <= inst.M[s]);
            CHECK(verify_kz_solution(inst, sol.poly).pass);
        }
    }
}

TEST_CASE("coefficient closed form") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    CHECK(coefficient_closed_form(inst, 1, {1, 0}) == std::vector<i64>{3, 2});
    CHECK(coefficient_closed_form(inst, 1, {0, 1}) == std::vector<i64>{2, 3});
    CHECK(coefficient_closed_form(inst, 1, {2, 0}) == std::vector<i64>{0, 0}); // sum != delta
    CHECK(coefficient_closed_form(inst, 1, {4, 2}) == std::vector<i64>{0, 0}); // d_1 > M_1
    CHECK_THROWS_AS(coefficient_closed_form(inst, 2, {1, 0}), CycleOutOfRange);

    // nonzero coefficients satisfy both singular-vector constraints
    KzInstance big = make_instance(13, 3, {2, 2, 2, 1, 1, 1});
    HypergeomSolution sol = hypergeometric_solution(big, 2);
    for (const Term& t : sol.poly[0].terms()) {
        Exponents d = unpack_key(t.key, big.n);
        std::vector<i64> v = coefficient_closed_form(big, 2, d);
        i64 sm = 0, sM = 0;
        for (int i = 0; i < big.n; ++i) {
            sm = modarith::add(sm, modarith::mul(big.m[i], v[i], big.p), big.p);
            sM = modarith::add(sM, modarith::mul(big.M[i], v[i], big.p), big.p);
        }
        CHECK(sm == 0);
        CHECK(sM == 0);
    }
}

TEST_CASE("closed form equals extraction on the whole support") {
    KzInstance inst = make_instance(11, 5, {3, 4, 4});
    for (int l = 1; l <= inst.r; ++l) {
        HypergeomSolution sol = hypergeometric_solution(inst, l);
        for (int i = 0; i < inst.n; ++i)
            for (const Term& t : sol.poly[i].terms()) {
                Exponents d = unpack_key(t.key, inst.n);
                CHECK(coefficient_closed_form(inst, l, d) == sol.poly.coeff_vector_at(d));
            }
    }
}

TEST_CASE("beta solution closed form for n = 2") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    BetaSolutionN2 bs = beta_solution_n2(inst);
    CHECK(bs.solution.poly == hypergeometric_solution(inst, 1).poly);
    CHECK(bs.gamma_form_sign_offset == 1);

    // scalar audit: 3 C(2,1) = 6 = 1 and (-1)^{A+1} A! B! / (A+B-p)! = 36 = 1
    i64 p = 5, A = 3, B = 3;
    i64 lhs = modarith::mul(B, binom_mod_p(B - 1, p - A - 1, p).value(), p);
    i64 rhs = modarith::mul(factorial_fp(A, p).value(), factorial_fp(B, p).value(), p);
    rhs = modarith::mul(rhs, modarith::inv(factorial_fp(A + B - p, p).value(), p), p);
    if ((A + 1) & 1) rhs = modarith::norm(-rhs, p);
    CHECK(lhs == 1);
    CHECK(rhs == 1);

    CHECK_THROWS_AS(beta_solution_n2(make_instance(19, 5, {1, 1, 1})), PreconditionError);
    CHECK_THROWS_AS(beta_solution_n2(make_instance(3, 2, {1, 1})), PreconditionError);

    // wider ample sweep including a degree-zero case (sum M = p)
    for (const auto& [pp, qq, mm] : std::vector<PQm>{
             {7, 5, {3, 4}}, {7, 5, {1, 1}}, {11, 5, {3, 4}}, {7, 3, {2, 2}}}) {
        KzInstance in2 = make_instance(pp, qq, mm);
        REQUIRE(in2.ample);
        BetaSolutionN2 b2 = beta_solution_n2(in2);
        CHECK(b2.solution.poly == hypergeometric_solution(in2, 1).poly);
        CHECK(b2.gamma_form_sign_offset == 1);
    }
}

TEST_CASE("Stokes consistency of the integrand") {
    KzInstance inst = make_instance(7, 5, {3, 3});
    VecPoly P = integrand_vector(inst);
    for (int j = 0; j < inst.n; ++j) {
        Poly dP = P[j].derivative(inst.n); // d/dx
        for (int l = 1; l <= inst.r; ++l)
            CHECK(dP.extract_x_coeff(int(l * inst.p - 1)).is_zero());
    }
}

TEST_CASE("leading coefficients of I^[1..r] are independent over F_p") {
    KzInstance inst = make_instance(13, 3, {2, 2, 2, 1, 1, 1});
    std::vector<std::vector<i64>> rows;
    Perm id = identity_perm(inst.n);
    for (int l = 1; l <= inst.r; ++l)
        rows.push_back(hypergeometric_solution(inst, l).poly.leading_term(id).coeff);
    // row reduce the r x n matrix and demand full row rank
    int rank = 0;
    for (int col = 0; col < inst.n && rank < int(rows.size()); ++col) {
        int pr = -1;
        for (int r = rank; r < int(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            i64 f = modarith::mul(rows[r][col], modarith::inv(rows[rank][col], inst.p), inst.p);
            for (int c = 0; c < inst.n; ++c)
                rows[r][c] = modarith::sub(rows[r][c],
                                           modarith::mul(f, rows[rank][c], inst.p), inst.p);
        }
        ++rank;
    }
    CHECK(rank == inst.r);
}

TEST_CASE("x_coeff_of_product matches naive expansion") {
    std::mt19937 rng(17);
    for (int it = 0; it < 10; ++it) {
        i64 p = 7;
        int n = 3;
        std::vector<i64> E(n);
        for (i64& e : E) e = std::uniform_int_distribution<i64>(0, 5)(rng);
        Poly full = Poly::one(p, n + 1);
        for (int i = 0; i < n; ++i)
            full = full * Poly::linear_diff_power(p, n + 1, n, i, int(E[i]));
        for (i64 K = 0; K <= 6; ++K)
            CHECK(x_coeff_of_product(p, n, E, K) == full.extract_x_coeff(int(K)));
    }
}
