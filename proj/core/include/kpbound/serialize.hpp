#ifndef KPBOUND_SERIALIZE_HPP
#define KPBOUND_SERIALIZE_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "kpbound/bounds.hpp"
#include "kpbound/geometry.hpp"
#include "kpbound/verify.hpp"

namespace kp {

using json = nlohmann::json;

// Domain schema: {"kind": "disk"|"stadium"|"disk_union", ...params}.
// disk:       {"kind":"disk","center":[x,y],"radius":r}
// stadium:    {"kind":"stadium","disk_a":{...},"disk_b":{...}}
// disk_union: {"kind":"disk_union","r_outer":..,"r_inner":..,"r_curv":..}
json domain_to_json(const Domain& dom);
Domain domain_from_json(const json& j);

json to_json(const BoundReport& r);
json to_json(const VerificationReport& r);
json to_json(const KPCaseBranch& b);

std::string csv_header_bound_report();
std::string csv_row(const BoundReport& r, int precision = 17);

std::string csv_header_sweep();
std::string csv_row_sweep(const BoundReport& r, const VerificationReport* v, int precision = 17);

}  // namespace kp

#endif
