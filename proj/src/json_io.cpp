#include "fpkz/json_io.hpp"

namespace fpkz {

json poly_to_json(const Poly& f) {
    json terms = json::array();
    for (const Term& t : f.terms()) {
        json e = json::array();
        for (int v : unpack_key(t.key, f.arity())) e.push_back(v);
        terms.push_back({{"exp", std::move(e)}, {"coeff", t.coeff}});
    }
    return {{"p", f.p()}, {"arity", f.arity()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const json& j) {
    i64 p = j.at("p").get<i64>();
    int arity = j.at("arity").get<int>();
    std::vector<std::pair<Key, i64>> pairs;
    for (const json& t : j.at("terms")) {
        Exponents e = t.at("exp").get<Exponents>();
        if (int(e.size()) != arity) throw ArityMismatch("term exponent arity mismatch");
        pairs.emplace_back(pack_exponents(e), t.at("coeff").get<i64>());
    }
    return Poly::from_pairs(p, arity, std::move(pairs));
}

json vecpoly_to_json(const VecPoly& v) {
    json coords = json::array();
    for (const Poly& c : v.coords()) coords.push_back(poly_to_json(c));
    return {{"p", v.p()}, {"arity", v.arity()}, {"coords", std::move(coords)}};
}

VecPoly vecpoly_from_json(const json& j) {
    std::vector<Poly> coords;
    for (const json& c : j.at("coords")) coords.push_back(poly_from_json(c));
    VecPoly v(std::move(coords));
    if (j.contains("p") && j.at("p").get<i64>() != v.p())
        throw ModulusMismatch("vector modulus disagrees with coordinates");
    if (j.contains("arity") && j.at("arity").get<int>() != v.arity())
        throw ArityMismatch("vector arity disagrees with coordinates");
    return v;
}

json instance_to_json(const KzInstance& inst) {
    return {{"p", inst.p}, {"q", inst.q}, {"m", inst.m}};
}

KzInstance instance_from_json(const json& j) {
    return make_instance(j.at("p").get<i64>(), j.at("q").get<i64>(),
                         j.at("m").get<std::vector<i64>>());
}

json solution_to_json(const KzInstance& inst, const HypergeomSolution& sol) {
    return {{"schema", kSchemaTag},
            {"instance", instance_to_json(inst)},
            {"l", sol.l},
            {"degree", sol.degree},
            {"solution", vecpoly_to_json(sol.poly)}};
}

VecPoly solution_payload_from_json(const json& j) {
    if (j.contains("solution")) return vecpoly_from_json(j.at("solution"));
    return vecpoly_from_json(j);
}

json verification_report_to_json(const VerificationReport& rep) {
    json eqs = json::array();
    for (std::size_t j = 0; j < rep.residuals.size(); ++j) {
        json residuals = json::array();
        if (!rep.residuals[j].is_zero())
            for (const Poly& c : rep.residuals[j].coords()) residuals.push_back(poly_to_json(c));
        eqs.push_back({{"j", j + 1}, {"residuals", std::move(residuals)}});
    }
    json alg = json::array();
    if (!rep.algebraic_ok) alg.push_back(poly_to_json(rep.algebraic_residual));
    return {{"schema", kSchemaTag},
            {"pass", rep.pass},
            {"algebraic_ok", rep.algebraic_ok},
            {"algebraic_residual", std::move(alg)},
            {"equations", std::move(eqs)},
            {"summary", rep.summary()}};
}

json det_report_to_json(const DetReport& rep) {
    return {{"schema", kSchemaTag},
            {"det", poly_to_json(rep.det)},
            {"closed_form", poly_to_json(rep.closed_form)},
            {"equal", rep.equal},
            {"gamma_form_sign_offset", rep.gamma_form_sign_offset}};
}

json basis_to_json(const std::vector<VecPoly>& basis) {
    json arr = json::array();
    for (const VecPoly& b : basis) arr.push_back(vecpoly_to_json(b));
    return {{"schema", kSchemaTag}, {"dimension", basis.size()}, {"basis", std::move(arr)}};
}

json reduce_result_to_json(const KzInstance& inst, const ReduceResult& res) {
    json out{{"schema", kSchemaTag}, {"reducible", res.reducible}};
    if (res.reducible) {
        json cert = json::array();
        for (const ReduceTerm& t : res.certificate)
            cert.push_back({{"l", t.l}, {"coeff_poly", poly_to_json(t.c)}});
        out["certificate"] = std::move(cert);
    } else {
        out["blocking"] = {{"coeff", res.blocking.coeff},
                           {"exponents", res.blocking.exponents}};
        out["rank"] = inst.r;
    }
    return out;
}

} // namespace fpkz
