// mlr: radii of starlikeness/convexity families for the generalized
// Mittag-Leffler normalizations. Subcommands: eval, radius, sweep, wi-check,
// zeros. Exit codes: 0 success, 2 invalid input, 3 parameters not admitted,
// 4 numerical failure.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <future>
#include <json.hpp>
#include <string>
#include <vector>

#include "mlradii/errors.hpp"
#include "mlradii/radii.hpp"
#include "mlradii/region.hpp"
#include "mlradii/serialization.hpp"
#include "mlradii/series.hpp"
#include "mlradii/verify.hpp"
#include "mlradii/zeros.hpp"

namespace {

using nlohmann::json;
using namespace mlradii;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNotAdmitted = 3;
constexpr int kExitNumerical = 4;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw DomainError("unknown format: " + s);
}

void print_table(const json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      print_table(value, prefix + key + ".");
    } else if (value.is_number_float()) {
      std::printf("%-24s %s\n", (prefix + key).c_str(), fmt17(value.get<double>()).c_str());
    } else {
      std::printf("%-24s %s\n", (prefix + key).c_str(), value.dump().c_str());
    }
  }
}

void print_csv(const json& row_obj) {
  std::string header, row;
  for (const auto& [key, value] : row_obj.items()) {
    if (!header.empty()) {
      header += ",";
      row += ",";
    }
    header += key;
    if (value.is_number_float()) {
      row += fmt17(value.get<double>());
    } else if (value.is_string()) {
      row += value.get<std::string>();
    } else {
      row += value.dump();
    }
  }
  std::printf("%s\n%s\n", header.c_str(), row.c_str());
}

void emit(const json& payload, Format format) {
  switch (format) {
    case Format::Json:
      std::printf("%s\n", payload.dump().c_str());
      break;
    case Format::Table:
      print_table(payload);
      break;
    case Format::Csv: {
      // flatten one level for csv
      json flat;
      for (const auto& [key, value] : payload.items()) {
        if (value.is_object()) {
          for (const auto& [k2, v2] : value.items()) flat[key + "." + k2] = v2;
        } else if (value.is_array()) {
          flat[key] = value.dump();
        } else {
          flat[key] = value;
        }
      }
      print_csv(flat);
      break;
    }
  }
}

struct RadiusArgs {
  std::string problem, norm = "g", format = "table";
  double omega = 0, beta = 0, gamma = 0;
  double eta = 0, alpha = 0, rho = 0;
  double tol = 1e-10;
  double zero_tol = 1e-11;
  bool assume_real_zeros = false;
  bool verify = false;
  double delta = 1e-3;
  int grid = 720;
  int max_depth = 64;
};

ProblemSpec problem_of(const RadiusArgs& a) {
  ProblemSpec prob{};
  prob.kind = problem_kind_from_string(a.problem);
  prob.eta = a.eta;
  prob.alpha = a.alpha;
  prob.rho = a.rho;
  return prob;
}

json radius_payload(const RadiusResult& r, const RadiusArgs& a) {
  json j = json::parse(to_json(r));
  j["tol"] = a.tol;
  j["zero_tol"] = a.zero_tol;
  j["assume_real_zeros"] = a.assume_real_zeros;
  return j;
}

int run_radius(const RadiusArgs& a) {
  const MLParams params{a.omega, a.beta, a.gamma};
  const ProblemSpec prob = problem_of(a);
  SolverOptions opts;
  opts.tol = a.tol;
  opts.zero_tol = a.zero_tol;
  opts.assume_real_zeros = a.assume_real_zeros;
  opts.max_c_depth = a.max_depth;

  RadiusResult result = solve_radius(params, normalization_from_string(a.norm), prob, opts);
  json payload = json::object();
  if (a.verify) {
    const VerificationReport report =
        verify_radius(params, normalization_from_string(a.norm), result, a.delta, a.grid);
    payload = radius_payload(result, a);
    payload["verification"] = json::parse(to_json(report));
  } else {
    payload = radius_payload(result, a);
  }
  emit(payload, parse_format(a.format));
  return kExitOk;
}

int run_sweep(const RadiusArgs& a, const std::string& vary, double from, double to, int steps) {
  if (steps < 2) throw DomainError("sweep: --steps must be >= 2");
  if (vary != "eta" && vary != "rho" && vary != "alpha") {
    throw DomainError("sweep: --vary must be eta, rho or alpha");
  }
  const MLParams params{a.omega, a.beta, a.gamma};
  const Normalization norm = normalization_from_string(a.norm);
  SolverOptions opts;
  opts.tol = a.tol;
  opts.zero_tol = a.zero_tol;
  opts.assume_real_zeros = a.assume_real_zeros;
  opts.max_c_depth = a.max_depth;

  // grid points solve independently; results re-assembled in grid order
  std::vector<std::future<json>> rows;
  for (int i = 0; i < steps; ++i) {
    const double value = from + (to - from) * i / (steps - 1);
    rows.push_back(std::async(std::launch::async, [=]() -> json {
      ProblemSpec prob = problem_of(a);
      if (vary == "eta") prob.eta = value;
      if (vary == "rho") prob.rho = value;
      if (vary == "alpha") prob.alpha = value;
      json row{{vary, value}};
      try {
        const RadiusResult r = solve_radius(params, norm, prob, opts);
        row["radius"] = r.radius;
        row["residual"] = r.residual;
        row["zeros_used"] = r.zeros_used;
        row["status"] = "ok";
      } catch (const Error& e) {
        row["status"] = std::string("error: ") + e.what();
      }
      return row;
    }));
  }

  int succeeded = 0;
  std::vector<json> resolved;
  for (auto& f : rows) {
    resolved.push_back(f.get());
    if (resolved.back()["status"] == "ok") ++succeeded;
  }

  const Format format = parse_format(a.format);
  if (format == Format::Csv) {
    std::printf("%s,radius,residual,zeros_used,status\n", vary.c_str());
    for (const auto& row : resolved) {
      std::printf("%s,%s,%s,%s,%s\n", fmt17(row[vary].get<double>()).c_str(),
                  row.contains("radius") ? fmt17(row["radius"].get<double>()).c_str() : "",
                  row.contains("residual") ? fmt17(row["residual"].get<double>()).c_str() : "",
                  row.contains("zeros_used") ? std::to_string(row["zeros_used"].get<int>()).c_str()
                                             : "",
                  row["status"].get<std::string>().c_str());
    }
  } else if (format == Format::Json) {
    std::printf("%s\n", json(resolved).dump().c_str());
  } else {
    for (const auto& row : resolved) {
      print_table(row);
      std::printf("\n");
    }
  }
  return succeeded > 0 ? kExitOk : kExitNumerical;
}

int dispatch_error(const std::exception& e) {
  std::fprintf(stderr, "error: %s\n", e.what());
  if (dynamic_cast<const ParamsNotAdmitted*>(&e)) return kExitNotAdmitted;
  if (dynamic_cast<const DomainError*>(&e)) return kExitInvalid;
  if (dynamic_cast<const Error*>(&e)) return kExitNumerical;
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radii of the generalized Mittag-Leffler normalizations"};
  app.require_subcommand(1);

  // ---- eval ----
  double e_omega = 0, e_beta = 0, e_gamma = 0, e_x = 0;
  int e_order = 0;
  std::string e_format = "table";
  auto* eval_cmd = app.add_subcommand("eval", "evaluate phi(omega,beta,gamma,x) or a derivative");
  eval_cmd->add_option("--omega", e_omega)->required();
  eval_cmd->add_option("--beta", e_beta)->required();
  eval_cmd->add_option("--gamma", e_gamma)->required();
  eval_cmd->add_option("--x", e_x)->required();
  eval_cmd->add_option("--order", e_order)->check(CLI::Range(0, 2));
  eval_cmd->add_option("--format", e_format);

  // ---- radius ----
  RadiusArgs ra;
  auto* radius_cmd = app.add_subcommand("radius", "solve one radius problem");
  radius_cmd->add_option("--problem", ra.problem, "ucv|alphaconvex|sp|strong|star|convex")
      ->required();
  radius_cmd->add_option("--norm", ra.norm, "f|g|h");
  radius_cmd->add_option("--omega", ra.omega)->required();
  radius_cmd->add_option("--beta", ra.beta)->required();
  radius_cmd->add_option("--gamma", ra.gamma)->required();
  radius_cmd->add_option("--eta", ra.eta);
  radius_cmd->add_option("--alpha", ra.alpha);
  radius_cmd->add_option("--rho", ra.rho);
  radius_cmd->add_option("--tol", ra.tol);
  radius_cmd->add_option("--zero-tol", ra.zero_tol);
  radius_cmd->add_flag("--assume-real-zeros", ra.assume_real_zeros);
  radius_cmd->add_flag("--verify", ra.verify);
  radius_cmd->add_option("--delta", ra.delta);
  radius_cmd->add_option("--grid", ra.grid);
  radius_cmd->add_option("--max-depth", ra.max_depth);
  radius_cmd->add_option("--format", ra.format);

  // ---- sweep ----
  RadiusArgs sa;
  std::string s_vary;
  double s_from = 0, s_to = 0;
  int s_steps = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "solve a radius problem over a parameter grid");
  sweep_cmd->add_option("--problem", sa.problem)->required();
  sweep_cmd->add_option("--norm", sa.norm);
  sweep_cmd->add_option("--omega", sa.omega)->required();
  sweep_cmd->add_option("--beta", sa.beta)->required();
  sweep_cmd->add_option("--gamma", sa.gamma)->required();
  sweep_cmd->add_option("--eta", sa.eta);
  sweep_cmd->add_option("--alpha", sa.alpha);
  sweep_cmd->add_option("--rho", sa.rho);
  sweep_cmd->add_option("--tol", sa.tol);
  sweep_cmd->add_option("--zero-tol", sa.zero_tol);
  sweep_cmd->add_flag("--assume-real-zeros", sa.assume_real_zeros);
  sweep_cmd->add_option("--vary", s_vary, "eta|rho|alpha")->required();
  sweep_cmd->add_option("--from", s_from)->required();
  sweep_cmd->add_option("--to", s_to)->required();
  sweep_cmd->add_option("--steps", s_steps)->required();
  sweep_cmd->add_option("--format", sa.format);

  // ---- wi-check ----
  double w_omega = 0, w_beta = 0;
  int w_depth = 64;
  std::string w_format = "table";
  auto* wi_cmd = app.add_subcommand("wi-check", "decide membership in the zero-reality region W_i");
  wi_cmd->add_option("--omega", w_omega)->required();
  wi_cmd->add_option("--beta", w_beta)->required();
  wi_cmd->add_option("--max-depth", w_depth);
  wi_cmd->add_option("--format", w_format);

  // ---- zeros ----
  double z_omega = 0, z_beta = 0, z_gamma = 0, z_tol = 1e-11;
  int z_count = 0;
  bool z_assume = false;
  std::string z_target = "lambda", z_format = "table";
  auto* zeros_cmd = app.add_subcommand("zeros", "tabulate positive real zeros");
  zeros_cmd->add_option("--omega", z_omega)->required();
  zeros_cmd->add_option("--beta", z_beta)->required();
  zeros_cmd->add_option("--gamma", z_gamma)->required();
  zeros_cmd->add_option("--target", z_target, "lambda|psiprime|gprime|hprime|hfunction");
  zeros_cmd->add_option("--count", z_count)->required();
  zeros_cmd->add_option("--tol", z_tol);
  zeros_cmd->add_flag("--assume-real-zeros", z_assume);
  zeros_cmd->add_option("--format", z_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);      // prints the message / help text
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*eval_cmd) {
      const MLParams p{e_omega, e_beta, e_gamma};
      const EvalResult r =
          e_order == 0 ? eval_phi(p, e_x) : eval_phi_derivative(p, e_x, e_order);
      json payload = json::parse(to_json(r));
      payload["omega"] = e_omega;
      payload["beta"] = e_beta;
      payload["gamma"] = e_gamma;
      payload["x"] = e_x;
      payload["order"] = e_order;
      emit(payload, parse_format(e_format));
      return kExitOk;
    }
    if (*radius_cmd) return run_radius(ra);
    if (*sweep_cmd) return run_sweep(sa, s_vary, s_from, s_to, s_steps);
    if (*wi_cmd) {
      json payload{{"omega", w_omega}, {"beta", w_beta}, {"max_depth", w_depth}};
      if (!(w_beta > 0.0)) throw DomainError("wi-check: beta must be positive");
      if (!(w_omega > 1.0)) {
        payload["status"] = "non_member";
        payload["witness"] = nullptr;
        payload["note"] = "omega <= 1: (1/omega, beta) lies outside the domain of W_i";
      } else {
        const WiVerdict v = in_Wi({1.0 / w_omega, w_beta}, w_depth);
        const json vj = json::parse(to_json(v));
        payload["status"] = vj["status"];
        payload["witness"] = vj["witness"];
      }
      emit(payload, parse_format(w_format));
      return kExitOk;
    }
    if (*zeros_cmd) {
      const ZeroTable table = zeros_of({z_omega, z_beta, z_gamma},
                                       zero_target_from_string(z_target), z_count, z_tol,
                                       z_assume);
      emit(json::parse(to_json(table)), parse_format(z_format));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    return dispatch_error(e);
  }
  return kExitInvalid;
}
