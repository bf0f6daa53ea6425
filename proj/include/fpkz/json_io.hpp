#ifndef FPKZ_JSON_IO_HPP
#define FPKZ_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "fpkz/analysis.hpp"
#include "fpkz/construct.hpp"
#include "fpkz/instance.hpp"
#include "fpkz/kz.hpp"
#include "fpkz/oracle.hpp"
#include "fpkz/poly.hpp"

namespace fpkz {

using nlohmann::json;

inline constexpr const char* kSchemaTag = "fpkz/1";

// Canonical polynomial form; terms id-lex descending.  Round-trips
// bit-exactly through the canonical dump.
json poly_to_json(const Poly& f);
Poly poly_from_json(const json& j);

json vecpoly_to_json(const VecPoly& v);
VecPoly vecpoly_from_json(const json& j);

json instance_to_json(const KzInstance& inst);
KzInstance instance_from_json(const json& j);

json solution_to_json(const KzInstance& inst, const HypergeomSolution& sol);

// Accepts either a bare VecPoly object or a solution file with a
// "solution" member.
VecPoly solution_payload_from_json(const json& j);

json verification_report_to_json(const VerificationReport& rep);
json det_report_to_json(const DetReport& rep);
json basis_to_json(const std::vector<VecPoly>& basis);
json reduce_result_to_json(const KzInstance& inst, const ReduceResult& res);

} // namespace fpkz

#endif
