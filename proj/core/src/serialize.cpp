#include "kpbound/serialize.hpp"

#include <sstream>

namespace kp {

namespace {

json disk_to_json(const Disk& d) {
  return {{"kind", "disk"}, {"center", {d.center.x, d.center.y}}, {"radius", d.radius}};
}

Disk disk_from_json(const json& j) {
  return {{j.at("center").at(0).get<double>(), j.at("center").at(1).get<double>()},
          j.at("radius").get<double>()};
}

}  // namespace

json domain_to_json(const Domain& dom) {
  return std::visit(
      [](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return disk_to_json(d);
        } else if constexpr (std::is_same_v<T, Stadium>) {
          json j = {{"kind", "stadium"}};
          j["disk_a"] = disk_to_json(d.disk_a());
          j["disk_b"] = disk_to_json(d.disk_b());
          return j;
        } else if constexpr (std::is_same_v<T, DiskUnionDomain>) {
          const RadiiTriple& t = d.triple();
          return {{"kind", "disk_union"},
                  {"r_outer", t.r_outer},
                  {"r_inner", t.r_inner},
                  {"r_curv", t.r_curv}};
        } else {
          throw std::invalid_argument("strip domains are not serializable");
        }
      },
      dom);
}

Domain domain_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "disk") return disk_from_json(j);
  if (kind == "stadium")
    return Stadium(disk_from_json(j.at("disk_a")), disk_from_json(j.at("disk_b")));
  if (kind == "disk_union") {
    RadiiTriple t{j.at("r_outer").get<double>(), j.at("r_inner").get<double>(),
                  j.at("r_curv").get<double>()};
    return DiskUnionDomain::canonical(t);
  }
  throw std::invalid_argument("unknown domain kind: " + kind);
}

json to_json(const KPCaseBranch& b) {
  return {{"tag", to_string(b.tag)}, {"theta", b.theta}, {"threshold", b.threshold}};
}

json to_json(const BoundReport& r) {
  return {{"r_outer", r.triple.r_outer},
          {"r_inner", r.triple.r_inner},
          {"r_curv", r.triple.r_curv},
          {"f_value", r.f_value},
          {"case", to_json(r.case_branch)},
          {"new_bound", r.new_bound},
          {"old_bound", r.old_bound},
          {"ratio", r.ratio},
          {"sharp", r.sharp}};
}

json to_json(const VerificationReport& r) {
  return {{"r_outer", r.triple.r_outer},
          {"r_inner", r.triple.r_inner},
          {"r_curv", r.triple.r_curv},
          {"bound_value", r.bound_value},
          {"empirical_sup", r.empirical_sup},
          {"margin", r.margin},
          {"samples", r.samples},
          {"method", r.method},
          {"pass", r.pass}};
}

namespace {
std::string fmt(double v, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}
}  // namespace

std::string csv_header_bound_report() {
  return "R_O,R_I,R_C,F,case,new_bound,old_bound,ratio,sharp";
}

std::string csv_row(const BoundReport& r, int precision) {
  std::ostringstream os;
  os << fmt(r.triple.r_outer, precision) << ',' << fmt(r.triple.r_inner, precision) << ','
     << fmt(r.triple.r_curv, precision) << ',' << fmt(r.f_value, precision) << ','
     << to_string(r.case_branch.tag) << ',' << fmt(r.new_bound, precision) << ','
     << fmt(r.old_bound, precision) << ',' << fmt(r.ratio, precision) << ','
     << (r.sharp ? "true" : "false");
  return os.str();
}

std::string csv_header_sweep() {
  return "R_O,R_I,R_C,F,case,new_bound,old_bound,empirical_sup,margin,pass";
}

std::string csv_row_sweep(const BoundReport& r, const VerificationReport* v, int precision) {
  std::ostringstream os;
  os << fmt(r.triple.r_outer, precision) << ',' << fmt(r.triple.r_inner, precision) << ','
     << fmt(r.triple.r_curv, precision) << ',' << fmt(r.f_value, precision) << ','
     << to_string(r.case_branch.tag) << ',' << fmt(r.new_bound, precision) << ','
     << fmt(r.old_bound, precision) << ',';
  if (v)
    os << fmt(v->empirical_sup, precision) << ',' << fmt(v->margin, precision) << ','
       << (v->pass ? "true" : "false");
  else
    os << ",,";
  return os.str();
}

}  // namespace kp
