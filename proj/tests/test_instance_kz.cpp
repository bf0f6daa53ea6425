#include <doctest.h>

#include <random>

#include "fpkz/construct.hpp"
#include "fpkz/kz.hpp"

using namespace fpkz;

TEST_CASE("instance derivation") {
    KzInstance a = make_instance(13, 3, {2, 2, 2, 1, 1, 1});
    CHECK(a.M == std::vector<i64>{8, 8, 8, 4, 4, 4});
    CHECK(a.r == 2);
    CHECK_FALSE(a.ample);

    KzInstance b = make_instance(3, 2, {1, 1});
    CHECK(b.M == std::vector<i64>{1, 1});
    CHECK(b.r == 0);
    CHECK_FALSE(b.ample);

    KzInstance c = make_instance(19, 5, {1, 1, 1});
    CHECK(c.M == std::vector<i64>{15, 15, 15});
    CHECK(c.r == 2);
    CHECK(c.ample);
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(make_instance(4, 2, {1, 1}), InvalidInstance);   // p not prime
    CHECK_THROWS_AS(make_instance(13, 4, {1, 1}), InvalidInstance);  // q not prime
    CHECK_THROWS_AS(make_instance(3, 5, {1, 1}), InvalidInstance);   // p <= q
    CHECK_THROWS_AS(make_instance(13, 3, {3, 1}), InvalidInstance);  // m_i >= q
    CHECK_THROWS_AS(make_instance(13, 3, {0, 1}), InvalidInstance);  // m_i <= 0
    CHECK_THROWS_AS(make_instance(3, 2, {1, 1, 1}), InvalidInstance); // p <= n
    CHECK_THROWS_AS(make_instance(13, 3, {1}), InvalidInstance);     // n < 2
}

TEST_CASE("derived data invariants on random instances") {
    std::mt19937 rng(42);
    std::vector<i64> primes{5, 7, 11, 13, 17, 19, 23};
    std::uniform_int_distribution<int> pi(0, int(primes.size()) - 1);
    for (int it = 0; it < 200; ++it) {
        i64 p = primes[pi(rng)];
        std::vector<i64> qs;
        for (i64 q : {2, 3, 5, 7})
            if (q < p) qs.push_back(q);
        i64 q = qs[std::uniform_int_distribution<int>(0, int(qs.size()) - 1)(rng)];
        int n = std::uniform_int_distribution<int>(2, 4)(rng);
        std::vector<i64> m(n);
        for (i64& v : m) v = std::uniform_int_distribution<i64>(1, q - 1)(rng);
        KzInstance inst = make_instance(p, q, m);
        CHECK(inst.r < inst.n);
        for (int i = 0; i < n; ++i) {
            CHECK(inst.M[i] > 0);
            CHECK(inst.M[i] < p);
            CHECK((q * inst.M[i] + m[i]) % p == 0);
        }
    }
}

TEST_CASE("omega matrices") {
    KzInstance inst = make_instance(3, 2, {1, 1});
    FpMat om = omega_standard(inst, 1, 2);
    CHECK(om.at(0, 0) == 2); // -1
    CHECK(om.at(0, 1) == 1);
    CHECK(om.at(1, 0) == 1);
    CHECK(om.at(1, 1) == 2);
    CHECK(om == omega_standard(inst, 2, 1));
    CHECK_THROWS_AS(omega_standard(inst, 1, 1), IndexError);
    CHECK_THROWS_AS(omega_standard(inst, 0, 2), IndexError);

    KzInstance inst2 = make_instance(5, 3, {1, 1});
    FpMat omM = omega_M(inst2, 1, 2);
    CHECK(omM.at(0, 0) == 3);
    CHECK(omM.at(0, 1) == 2);
    CHECK(omM.at(1, 0) == 2);
    CHECK(omM.at(1, 1) == 3);

    // Omega_ij annihilates any vector with equal i-th and j-th coordinates
    KzInstance inst4 = make_instance(11, 5, {3, 4, 2, 1});
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            std::vector<i64> v{7, 2, 9, 5};
            v[j - 1] = v[i - 1];
            std::vector<i64> img = omega_standard(inst4, i, j).apply(v);
            for (i64 x : img) CHECK(x == 0);
        }
}

TEST_CASE("omega_M is (1/q) omega and rows sum to zero") {
    for (auto [p, q] : std::vector<std::pair<i64, i64>>{{5, 3}, {13, 3}, {11, 5}}) {
        std::vector<i64> m{1, 1, 1};
        KzInstance inst = make_instance(p, q, m);
        i64 qinv = modarith::inv(q, p);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                if (i == j) continue;
                CHECK(omega_M(inst, i, j) == omega_standard(inst, i, j).scaled(qinv));
                FpMat om = omega_M(inst, i, j);
                for (int r = 0; r < 3; ++r) {
                    i64 s = 0;
                    for (int c = 0; c < 3; ++c) s = modarith::add(s, om.at(r, c), p);
                    CHECK(s == 0);
                }
            }
    }
}

TEST_CASE("verify_kz_solution on the rank-zero example") {
    KzInstance inst = make_instance(3, 2, {1, 1});
    Poly sq = Poly::linear_diff_power(3, 2, 0, 1, 2);
    VecPoly I(std::vector<Poly>{sq, -sq});
    VerificationReport rep = verify_kz_solution(inst, I);
    CHECK(rep.pass);
    CHECK(rep.algebraic_ok);
    CHECK(rep.first_failure == -1);

    CHECK(verify_kz_solution(inst, VecPoly(3, 2, 2)).pass); // zero solution

    // breaking one coefficient must fail with a report, not an error
    VecPoly bad(std::vector<Poly>{sq + Poly::one(3, 2), -sq});
    VerificationReport repbad = verify_kz_solution(inst, bad);
    CHECK_FALSE(repbad.pass);
    CHECK(repbad.first_failure == 0); // algebraic constraint breaks first
    CHECK_FALSE(repbad.algebraic_residual.is_zero());

    // homogeneous-looking non-solution: satisfies the constraint, fails an equation
    Poly z1 = Poly::variable(3, 2, 0);
    VecPoly bad2(std::vector<Poly>{z1, -z1});
    VerificationReport rep2 = verify_kz_solution(inst, bad2);
    CHECK_FALSE(rep2.pass);
    CHECK(rep2.algebraic_ok);
    CHECK(rep2.first_failure >= 1);
    CHECK_FALSE(rep2.residuals[rep2.first_failure - 1].is_zero());
}

TEST_CASE("verify_kz_solution on a constructed solution") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    Poly i1 = Poly::monomial(5, 2, {1, 0}, 3) + Poly::monomial(5, 2, {0, 1}, 2);
    Poly i2 = Poly::monomial(5, 2, {1, 0}, 2) + Poly::monomial(5, 2, {0, 1}, 3);
    CHECK(verify_kz_solution(inst, VecPoly(std::vector<Poly>{i1, i2})).pass);
}

TEST_CASE("Frobenius shifts of solutions still solve") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    VecPoly I = hypergeometric_solution(inst, 1).poly;
    Poly shift = Poly::monomial(5, 2, {5, 0}, 1) + Poly::constant(5, 2, 1); // 1 + z1^p
    CHECK(verify_kz_solution(inst, I.mul_poly(shift)).pass);
    Poly shift2 = Poly::monomial(5, 2, {5, 10}, 2); // 2 z1^p z2^{2p}
    CHECK(verify_kz_solution(inst, I.mul_poly(shift2)).pass);
}

TEST_CASE("L-admissibility") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    VecPoly I = hypergeometric_solution(inst, 1).poly;
    std::vector<i64> L{inst.M[0] + 1, inst.M[1] + 1};
    CHECK(is_L_admissible(inst, I, L));
    CHECK_FALSE(is_L_admissible(inst, I, {1, 1})); // first derivatives do not vanish

    // z1^p kills the first z1-derivative regardless of the other slots
    VecPoly frob(std::vector<Poly>{Poly::monomial(5, 2, {5, 0}, 1),
                                   Poly::monomial(5, 2, {5, 0}, 4)});
    CHECK(is_L_admissible(inst, frob, {1, 100}));

    // order 0 demands the zero polynomial
    CHECK_FALSE(is_L_admissible(inst, I, {0, 0}));
    CHECK(is_L_admissible(inst, VecPoly(5, 2, 2), {0, 0}));

    // The rank-zero example: under the order convention that makes
    // L = (M_1+1, ..., M_n+1) carve out exactly the hypergeometric module,
    // the non-hypergeometric solution (z1-z2)^2 (1,-1) must NOT be
    // (2,2)-admissible: its second z1-derivative is 2*1 = 2, nonzero mod 3.
    KzInstance ex = make_instance(3, 2, {1, 1});
    Poly sq = Poly::linear_diff_power(3, 2, 0, 1, 2);
    VecPoly J(std::vector<Poly>{sq, -sq});
    CHECK_FALSE(is_L_admissible(ex, J, {2, 2}));
    CHECK(is_L_admissible(ex, J, {3, 3}));
}

TEST_CASE("ample subset inequalities") {
    CHECK(ample_inequalities_check(make_instance(19, 5, {1, 1, 1})));
    CHECK(ample_inequalities_check(make_instance(5, 3, {1, 1})));
    CHECK_THROWS_AS(ample_inequalities_check(make_instance(3, 2, {1, 1})), PreconditionError);
}
