#include "mlradii/serialization.hpp"

#include <json.hpp>

#include "mlradii/errors.hpp"

namespace mlradii {

namespace {

using nlohmann::json;

json params_to_json(const MLParams& p) {
  return json{{"omega", p.omega}, {"beta", p.beta}, {"gamma", p.gamma}};
}

MLParams params_from_json(const json& j) {
  return {j.at("omega").get<double>(), j.at("beta").get<double>(), j.at("gamma").get<double>()};
}

json problem_to_json(const ProblemSpec& p) {
  json j{{"kind", to_string(p.kind)}, {"rho", p.rho}};
  switch (p.kind) {
    case ProblemKind::UniformConvex:
    case ProblemKind::ParabolicStarlike:
      j["eta"] = p.eta;
      break;
    case ProblemKind::AlphaConvex:
      j["alpha"] = p.alpha;
      break;
    default:
      break;
  }
  return j;
}

ProblemSpec problem_from_json(const json& j) {
  ProblemSpec p{};
  p.kind = problem_kind_from_string(j.at("kind").get<std::string>());
  p.rho = j.at("rho").get<double>();
  p.eta = j.value("eta", 0.0);
  p.alpha = j.value("alpha", 0.0);
  return p;
}

VerifyState verify_state_from_string(const std::string& s) {
  if (s == "unverified") return VerifyState::Unverified;
  if (s == "passed") return VerifyState::Passed;
  if (s == "failed") return VerifyState::Failed;
  throw DomainError("unknown verify state: " + s);
}

}  // namespace

ProblemKind problem_kind_from_string(const std::string& s) {
  if (s == "ucv") return ProblemKind::UniformConvex;
  if (s == "alphaconvex") return ProblemKind::AlphaConvex;
  if (s == "sp") return ProblemKind::ParabolicStarlike;
  if (s == "strong") return ProblemKind::StrongStarlike;
  if (s == "star") return ProblemKind::Starlike;
  if (s == "convex") return ProblemKind::Convex;
  throw DomainError("unknown problem kind: " + s);
}

Normalization normalization_from_string(const std::string& s) {
  if (s == "f") return Normalization::F;
  if (s == "g") return Normalization::G;
  if (s == "h") return Normalization::H;
  throw DomainError("unknown normalization: " + s + " (expected f, g or h)");
}

ZeroTarget zero_target_from_string(const std::string& s) {
  if (s == "lambda") return ZeroTarget::LambdaZeros;
  if (s == "psiprime") return ZeroTarget::PsiPrimeZeros;
  if (s == "gprime") return ZeroTarget::GPrimeZeros;
  if (s == "hprime") return ZeroTarget::HPrimeZeros;
  if (s == "hfunction") return ZeroTarget::HFunctionZeros;
  throw DomainError("unknown zero target: " + s);
}

std::string to_json(const ZeroTable& table) {
  json j{{"omega", table.params.omega},
         {"beta", table.params.beta},
         {"gamma", table.params.gamma},
         {"target", to_string(table.target)},
         {"zeros", table.zeros},
         {"tol", table.per_zero_tol}};
  return j.dump();
}

ZeroTable zero_table_from_json(const std::string& text) {
  const json j = json::parse(text);
  ZeroTable t;
  t.params = {j.at("omega").get<double>(), j.at("beta").get<double>(),
              j.at("gamma").get<double>()};
  t.target = zero_target_from_string(j.at("target").get<std::string>());
  t.zeros = j.at("zeros").get<std::vector<double>>();
  t.per_zero_tol = j.at("tol").get<double>();
  return t;
}

std::string to_json(const RadiusResult& r) {
  json j{{"problem", problem_to_json(r.problem)},
         {"norm", to_string(r.norm)},
         {"params", params_to_json(r.params)},
         {"radius", r.radius},
         {"bracket", {r.bracket_lo, r.bracket_hi}},
         {"residual", r.residual},
         {"iterations", r.iterations},
         {"zeros_used", r.zeros_used},
         {"verified", to_string(r.verified)}};
  return j.dump();
}

RadiusResult radius_result_from_json(const std::string& text) {
  const json j = json::parse(text);
  RadiusResult r{};
  r.problem = problem_from_json(j.at("problem"));
  r.norm = normalization_from_string(j.at("norm").get<std::string>());
  r.params = params_from_json(j.at("params"));
  r.radius = j.at("radius").get<double>();
  r.bracket_lo = j.at("bracket").at(0).get<double>();
  r.bracket_hi = j.at("bracket").at(1).get<double>();
  r.residual = j.at("residual").get<double>();
  r.iterations = j.at("iterations").get<int>();
  r.zeros_used = j.at("zeros_used").get<int>();
  r.verified = verify_state_from_string(j.at("verified").get<std::string>());
  return r;
}

std::string to_json(const VerificationReport& v) {
  json j{{"problem", problem_to_json(v.problem)},
         {"radius", v.radius},
         {"inner_pass", v.inner_pass},
         {"outer_fail", v.outer_fail},
         {"worst_margin_inner", v.worst_margin_inner},
         {"samples", v.samples},
         {"delta", v.delta}};
  if (std::isnan(v.violation_angle_outer)) {
    j["violation_angle_outer"] = nullptr;
  } else {
    j["violation_angle_outer"] = v.violation_angle_outer;
  }
  return j.dump();
}

VerificationReport verification_report_from_json(const std::string& text) {
  const json j = json::parse(text);
  VerificationReport v{};
  v.problem = problem_from_json(j.at("problem"));
  v.radius = j.at("radius").get<double>();
  v.inner_pass = j.at("inner_pass").get<bool>();
  v.outer_fail = j.at("outer_fail").get<bool>();
  v.worst_margin_inner = j.at("worst_margin_inner").get<double>();
  const auto& angle = j.at("violation_angle_outer");
  v.violation_angle_outer = angle.is_null() ? std::nan("") : angle.get<double>();
  v.samples = j.at("samples").get<int>();
  v.delta = j.at("delta").get<double>();
  return v;
}

std::string to_json(const WiVerdict& verdict) {
  json j{{"status", to_string(verdict.status)}};
  if (verdict.witness) {
    json maps = json::array();
    for (RegionMap m : verdict.witness->maps) maps.push_back(to_string(m));
    j["witness"] = json{{"wa_point",
                         {{"x", verdict.witness->wa_point.x},
                          {"beta", verdict.witness->wa_point.beta}}},
                        {"maps", maps}};
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

WiVerdict wi_verdict_from_json(const std::string& text) {
  const json j = json::parse(text);
  WiVerdict v;
  const std::string status = j.at("status").get<std::string>();
  if (status == "member") {
    v.status = WiStatus::Member;
  } else if (status == "non_member") {
    v.status = WiStatus::NonMember;
  } else if (status == "unknown") {
    v.status = WiStatus::Unknown;
  } else {
    throw DomainError("unknown Wi status: " + status);
  }
  if (!j.at("witness").is_null()) {
    WiWitness w;
    const auto& wj = j.at("witness");
    w.wa_point = {wj.at("wa_point").at("x").get<double>(),
                  wj.at("wa_point").at("beta").get<double>()};
    for (const auto& ms : wj.at("maps")) {
      const std::string m = ms.get<std::string>();
      if (m == "A") {
        w.maps.push_back(RegionMap::A);
      } else if (m == "B") {
        w.maps.push_back(RegionMap::B);
      } else if (m == "C") {
        w.maps.push_back(RegionMap::C);
      } else {
        throw DomainError("unknown region map: " + m);
      }
    }
    v.witness = std::move(w);
  }
  return v;
}

std::string to_json(const EvalResult& r) {
  json j{{"value", r.value}, {"est_error", r.est_error}, {"terms_used", r.terms_used}};
  return j.dump();
}

EvalResult eval_result_from_json(const std::string& text) {
  const json j = json::parse(text);
  return {j.at("value").get<double>(), j.at("est_error").get<double>(),
          j.at("terms_used").get<int>()};
}

}  // namespace mlradii
