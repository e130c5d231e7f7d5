#pragma once

// JSON and CSV exchange formats.
//
//   PhaseFunction  {"kind", "N", "L"?, "re": [[..]], "im": [[..]]}, rows indexed by m
//                  CSV columns m,k,x,omega,re,im
//   Op             {"N", "re", "im"} nested arrays
//   StateVector    {"N", "re", "im"} flat arrays
//   reports        one JSON object per line

#include <string>

#include "json.hpp"
#include "qha/berezin.hpp"
#include "qha/opalg.hpp"
#include "qha/phasespace.hpp"
#include "qha/verify.hpp"

namespace qha::io {

using nlohmann::json;

json to_json(const PhaseFunction& f);
// The model is rebuilt from the "kind", "N" and "L" fields.
PhaseFunction phase_function_from_json(const json& j);
std::string to_csv(const PhaseFunction& f);

json to_json(const Op& a);
Op op_from_json(const json& j, const PhaseSpaceModel& model);
std::string eigenvalues_csv(const Op& a);

json to_json(const StateVector& v);
StateVector state_from_json(const json& j, const PhaseSpaceModel& model);

json to_json(const VerificationReport& r);
json to_json(const ZeroSetReport& r);
std::string zero_points_csv(const ZeroSetReport& r);
json to_json(const BerezinLiebResult& r);

json read_json_file(const std::string& path);
// Writes to a sibling temporary file and renames it over the target.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace qha::io
