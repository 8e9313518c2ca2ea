// kpbound: derivative bounds and Kulkarni-Pinkall metric quantities for
// planar convex domains.
//
// Subcommands: validate, bound, kp-distance, density, verify, sweep.
// Exit codes: 0 success/PASS, 1 verification FAIL, 2 input error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "kpbound/serialize.hpp"
#include "kpbound/verify.hpp"

using namespace kp;

namespace {

struct OutputOptions {
  std::string format = "json";  // json | csv | plain
  int precision = 6;            // significant digits
  bool round3 = false;  // 3 decimals
};

double rounded(double v, const OutputOptions& o) {
  if (o.round3) return std::round(v * 1000.0) / 1000.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", o.precision, v);
  return std::atof(buf);
}

json round_numbers(const json& j, const OutputOptions& o) {
  if (j.is_number_float()) return rounded(j.get<double>(), o);
  if (j.is_object()) {
    json out = json::object();
    for (auto& [k, v] : j.items()) out[k] = round_numbers(v, o);
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (auto& v : j) out.push_back(round_numbers(v, o));
    return out;
  }
  return j;
}

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format: json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  cmd->add_option("--precision", o.precision, "Significant digits in output")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--rounded", o.round3, "Round values to 3 decimals");
}

struct TripleFlags {
  double ro = 0, ri = 0, rc = 0;
};

void add_triple_flags(CLI::App* cmd, TripleFlags& t) {
  cmd->add_option("--r-outer", t.ro, "Outer radius R_O")->required();
  cmd->add_option("--r-inner", t.ri, "Inner radius R_I")->required();
  cmd->add_option("--r-curv", t.rc, "Curvature radius R_C")->required();
}

int require_valid_triple(const RadiiTriple& t) {
  RadiiCheck chk = validate_radii(t);
  if (!chk.ok) {
    std::cerr << "invalid triple: " << chk.reason << "\n";
    return 2;
  }
  return 0;
}

int emit_bound(const BoundReport& rep, const OutputOptions& o) {
  if (o.format == "csv") {
    std::cout << csv_header_bound_report() << "\n"
              << csv_row(rep, o.round3 ? 4 : o.precision) << "\n";
  } else if (o.format == "plain") {
    std::cout << "F = " << rounded(rep.f_value, o) << " (" << to_string(rep.case_branch.tag)
              << ")\nnew_bound = " << rounded(rep.new_bound, o)
              << "\nold_bound = " << rounded(rep.old_bound, o)
              << "\nratio = " << rounded(rep.ratio, o) << (rep.sharp ? "\nsharp" : "") << "\n";
  } else {
    std::cout << round_numbers(to_json(rep), o).dump(2) << "\n";
  }
  return 0;
}

int run_sweep(double lo, double hi, int steps, bool with_verify, int resolution,
              const std::string& out_path, const OutputOptions& o) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open output path: " << out_path << "\n";
      return 2;
    }
    os = &file;
  }

  std::vector<RadiiTriple> triples;
  long skipped = 0;
  for (int i = 0; i < steps; ++i)
    for (int j = 0; j < steps; ++j)
      for (int k = 0; k < steps; ++k) {
        RadiiTriple t{lo + (hi - lo) * i / std::max(1, steps - 1),
                      lo + (hi - lo) * j / std::max(1, steps - 1),
                      lo + (hi - lo) * k / std::max(1, steps - 1)};
        if (validate_radii(t).ok)
          triples.push_back(t);
        else
          ++skipped;
      }

  std::vector<BoundReport> reports(triples.size());
  std::vector<VerificationReport> vreports(with_verify ? triples.size() : 0);

  int threads = 1;
  if (const char* env = std::getenv("KPBOUND_THREADS")) threads = std::max(1, std::atoi(env));
  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      reports[i] = main_bound(triples[i]);
      if (with_verify) vreports[i] = check_main_bound(triples[i], resolution);
    }
  };
  if (threads <= 1 || triples.size() < 2) {
    work(0, triples.size());
  } else {
    size_t chunk = (triples.size() + threads - 1) / threads;
    std::vector<std::future<void>> futs;
    for (size_t b = 0; b < triples.size(); b += chunk)
      futs.push_back(std::async(std::launch::async, work, b,
                                std::min(b + chunk, triples.size())));
    for (auto& f : futs) f.get();
  }

  *os << "# kpbound sweep grid=[" << lo << "," << hi << "] steps=" << steps
      << " skipped_invalid=" << skipped << "\n";
  *os << (with_verify ? csv_header_sweep() : csv_header_bound_report()) << "\n";
  int prec = o.round3 ? 4 : o.precision;
  for (size_t i = 0; i < triples.size(); ++i) {
    if (with_verify)
      *os << csv_row_sweep(reports[i], &vreports[i], prec) << "\n";
    else
      *os << csv_row(reports[i], prec) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivative bounds and KP metric computations on convex domains"};
  app.require_subcommand(1);

  TripleFlags tf;
  OutputOptions out;

  auto* c_validate = app.add_subcommand("validate", "Check the (R_O, R_I, R_C) condition");
  add_triple_flags(c_validate, tf);
  add_output_flags(c_validate, out);

  auto* c_bound = app.add_subcommand("bound", "Derivative bound report for a radii triple");
  add_triple_flags(c_bound, tf);
  add_output_flags(c_bound, out);

  double kp_R = 0, kp_r = 0, kp_d = 0;
  auto* c_kp = app.add_subcommand("kp-distance", "KP distance between stadium centers");
  c_kp->add_option("--R", kp_R, "Larger disk radius")->required();
  c_kp->add_option("--r", kp_r, "Smaller disk radius")->required();
  c_kp->add_option("--d", kp_d, "Distance between centers")->required();
  add_output_flags(c_kp, out);

  std::string dom_spec, metric = "kp";
  double px = 0, py = 0;
  auto* c_density = app.add_subcommand("density", "Metric density at a point of a domain");
  c_density->add_option("--domain", dom_spec, "Domain JSON (inline or @file)")->required();
  c_density->add_option("--x", px, "Point x")->required();
  c_density->add_option("--y", py, "Point y");
  c_density->add_option("--metric", metric, "kp, hyperbolic or quasihyperbolic")
      ->check(CLI::IsMember({"kp", "hyperbolic", "quasihyperbolic"}));
  add_output_flags(c_density, out);

  int resolution = 4096;
  auto* c_verify = app.add_subcommand("verify", "Empirical check of the derivative bound");
  add_triple_flags(c_verify, tf);
  c_verify->add_option("--resolution", resolution, "Boundary grid size (power of two)")
      ->check(CLI::Range(64, 1 << 20));
  add_output_flags(c_verify, out);

  double sw_min = 0.1, sw_max = 1.0;
  int sw_steps = 10;
  bool sw_verify = false;
  std::string sw_out;
  auto* c_sweep = app.add_subcommand("sweep", "Bound reports over a triple grid, CSV");
  c_sweep->add_option("--min", sw_min, "Grid minimum (all three axes)");
  c_sweep->add_option("--max", sw_max, "Grid maximum");
  c_sweep->add_option("--steps", sw_steps, "Grid steps per axis")->check(CLI::PositiveNumber);
  c_sweep->add_flag("--verify", sw_verify, "Add empirical verification columns");
  c_sweep->add_option("--resolution", resolution, "Boundary grid size for --verify");
  c_sweep->add_option("--out", sw_out, "Output file (default stdout)");
  add_output_flags(c_sweep, out);

  CLI11_PARSE(app, argc, argv);

  try {
    RadiiTriple triple{tf.ro, tf.ri, tf.rc};

    if (c_validate->parsed()) {
      RadiiCheck chk = validate_radii(triple);
      json j = {{"valid", chk.ok}};
      if (!chk.ok) j["reason"] = chk.reason;
      std::cout << j.dump(2) << "\n";
      return chk.ok ? 0 : 2;
    }

    if (c_bound->parsed()) {
      if (int rc = require_valid_triple(triple)) return rc;
      return emit_bound(main_bound(triple), out);
    }

    if (c_kp->parsed()) {
      auto [mv, branch] = kp_distance_stadium_centers(kp_R, kp_r, kp_d);
      if (out.format == "plain")
        std::cout << rounded(mv.value, out) << " " << to_string(branch.tag) << "\n";
      else
        std::cout << round_numbers(
                         json{{"value", mv.value}, {"case", to_json(branch)}}, out)
                         .dump(2)
                  << "\n";
      return 0;
    }

    if (c_density->parsed()) {
      std::string spec = dom_spec;
      if (!spec.empty() && spec[0] == '@') {
        std::ifstream f(spec.substr(1));
        if (!f) {
          std::cerr << "cannot read domain file\n";
          return 2;
        }
        std::stringstream ss;
        ss << f.rdbuf();
        spec = ss.str();
      }
      Domain dom = domain_from_json(json::parse(spec));
      Point2 z{px, py};
      json j;
      if (metric == "quasihyperbolic") {
        j = {{"value", quasihyperbolic_density(dom, z).value},
             {"metric", "quasihyperbolic"},
             {"provenance", "closed_form"}};
      } else if (metric == "kp") {
        j = {{"value", kp_density_numeric(dom, z).value},
             {"metric", "kp"},
             {"provenance", "numeric"}};
      } else {  // hyperbolic via conformal pushforward
        if (const Disk* dsk = std::get_if<Disk>(&dom)) {
          double d = dist(z, dsk->center);
          j = {{"value", hyperbolic_density_disk(dsk->radius, d).value},
               {"metric", "hyperbolic"},
               {"provenance", "closed_form"}};
        } else {
          NumericConformalMap f = NumericConformalMap::build(dom, resolution);
          Complex zz = f.inverse(Complex(z.x, z.y));
          double lam = 1.0 / (1.0 - std::norm(zz)) / std::abs(f.derivative(zz));
          j = {{"value", lam}, {"metric", "hyperbolic"}, {"provenance", "numeric"}};
        }
      }
      std::cout << round_numbers(j, out).dump(2) << "\n";
      return 0;
    }

    if (c_verify->parsed()) {
      if (int rc = require_valid_triple(triple)) return rc;
      VerificationReport rep = check_main_bound(triple, resolution);
      std::cout << round_numbers(to_json(rep), out).dump(2) << "\n";
      return rep.pass ? 0 : 1;
    }

    if (c_sweep->parsed()) return run_sweep(sw_min, sw_max, sw_steps, sw_verify, resolution, sw_out, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
