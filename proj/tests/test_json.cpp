#include <doctest.h>

#include <random>

#include "fpkz/construct.hpp"
#include "fpkz/json_io.hpp"
#include "fpkz/kz.hpp"

using namespace fpkz;

namespace {

Poly random_poly(std::mt19937& rng, i64 p, int arity) {
    std::uniform_int_distribution<int> ed(0, 6);
    std::uniform_int_distribution<i64> cd(0, p - 1);
    std::vector<std::pair<Key, i64>> pairs;
    for (int t = 0; t < 10; ++t) {
        Exponents e(arity);
        for (int& v : e) v = ed(rng);
        pairs.emplace_back(pack_exponents(e), cd(rng));
    }
    return Poly::from_pairs(p, arity, std::move(pairs));
}

} // namespace

TEST_CASE("polynomial JSON round-trips bit-exactly") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 25; ++it) {
        Poly f = random_poly(rng, 11, 3);
        json j = poly_to_json(f);
        Poly g = poly_from_json(j);
        CHECK(f == g);
        CHECK(j.dump() == poly_to_json(g).dump());
        // terms arrive id-lex descending
        const json& terms = j.at("terms");
        for (std::size_t t = 1; t < terms.size(); ++t) {
            Exponents a = terms[t - 1].at("exp").get<Exponents>();
            Exponents b = terms[t].at("exp").get<Exponents>();
            CHECK(pack_exponents(a) > pack_exponents(b));
        }
    }
}

TEST_CASE("vector JSON round-trips") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    VecPoly I = hypergeometric_solution(inst, 1).poly;
    json j = vecpoly_to_json(I);
    CHECK(vecpoly_from_json(j) == I);
    CHECK(vecpoly_to_json(vecpoly_from_json(j)).dump() == j.dump());
}

TEST_CASE("instance JSON") {
    KzInstance inst = make_instance(13, 3, {2, 2, 2, 1, 1, 1});
    KzInstance back = instance_from_json(instance_to_json(inst));
    CHECK(back.p == inst.p);
    CHECK(back.q == inst.q);
    CHECK(back.m == inst.m);
    CHECK(back.M == inst.M);
    CHECK(back.r == inst.r);
}

TEST_CASE("solution files carry schema and payload") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    HypergeomSolution sol = hypergeometric_solution(inst, 1);
    json file = solution_to_json(inst, sol);
    CHECK(file.at("schema") == kSchemaTag);
    CHECK(file.at("l") == 1);
    CHECK(file.at("degree") == 1);
    CHECK(solution_payload_from_json(file) == sol.poly);
    CHECK(solution_payload_from_json(vecpoly_to_json(sol.poly)) == sol.poly);
}

TEST_CASE("verification report JSON") {
    KzInstance inst = make_instance(5, 3, {1, 1});
    VerificationReport rep = verify_kz_solution(inst, hypergeometric_solution(inst, 1).poly);
    json j = verification_report_to_json(rep);
    CHECK(j.at("pass") == true);
    for (const json& eq : j.at("equations")) CHECK(eq.at("residuals").empty());

    Poly z1 = Poly::variable(5, 2, 0);
    VerificationReport bad = verify_kz_solution(inst, VecPoly(std::vector<Poly>{z1, z1}));
    json jb = verification_report_to_json(bad);
    CHECK(jb.at("pass") == false);
    CHECK_FALSE(jb.at("algebraic_residual").empty());
}
