#include <doctest.h>

#include <cmath>

#include "mlradii/radii.hpp"
#include "mlradii/region.hpp"
#include "mlradii/serialization.hpp"
#include "mlradii/verify.hpp"
#include "mlradii/zeros.hpp"

using namespace mlradii;

namespace {

SolverOptions assume() {
  SolverOptions o;
  o.assume_real_zeros = true;
  return o;
}

}  // namespace

TEST_CASE("zero table JSON round-trip uses the documented keys") {
  auto table = zeros_of({2, 2, 1}, ZeroTarget::LambdaZeros, 3, 1e-11, true);
  const std::string text = to_json(table);
  CHECK(text.find("\"omega\"") != std::string::npos);
  CHECK(text.find("\"beta\"") != std::string::npos);
  CHECK(text.find("\"gamma\"") != std::string::npos);
  CHECK(text.find("\"target\"") != std::string::npos);
  CHECK(text.find("\"zeros\"") != std::string::npos);
  CHECK(text.find("\"tol\"") != std::string::npos);

  const ZeroTable back = zero_table_from_json(text);
  CHECK(back.params.omega == table.params.omega);
  CHECK(back.target == table.target);
  CHECK(back.per_zero_tol == table.per_zero_tol);
  REQUIRE(back.zeros.size() == table.zeros.size());
  for (std::size_t i = 0; i < table.zeros.size(); ++i) {
    CHECK(back.zeros[i] == table.zeros[i]);  // exact, shortest-round-trip doubles
  }
}

TEST_CASE("radius result JSON round-trip is exact") {
  auto r = radius_uniform_convex({2, 2, 1}, Normalization::G, 1.0, 0.25, assume());
  const RadiusResult back = radius_result_from_json(to_json(r));
  CHECK(back.problem.kind == r.problem.kind);
  CHECK(back.problem.eta == r.problem.eta);
  CHECK(back.problem.rho == r.problem.rho);
  CHECK(back.norm == r.norm);
  CHECK(back.params.omega == r.params.omega);
  CHECK(back.radius == r.radius);
  CHECK(back.bracket_lo == r.bracket_lo);
  CHECK(back.bracket_hi == r.bracket_hi);
  CHECK(back.residual == r.residual);
  CHECK(back.iterations == r.iterations);
  CHECK(back.zeros_used == r.zeros_used);
  CHECK(back.verified == r.verified);
}

TEST_CASE("verification report JSON round-trip") {
  auto r = radius_starlike({2, 2, 1}, Normalization::G, 0.0, assume());
  auto rep = verify_radius({2, 2, 1}, Normalization::G, r);
  const VerificationReport back = verification_report_from_json(to_json(rep));
  CHECK(back.inner_pass == rep.inner_pass);
  CHECK(back.outer_fail == rep.outer_fail);
  CHECK(back.worst_margin_inner == rep.worst_margin_inner);
  CHECK(back.violation_angle_outer == rep.violation_angle_outer);
  CHECK(back.samples == rep.samples);
  CHECK(back.delta == rep.delta);
  CHECK(back.radius == rep.radius);
}

TEST_CASE("Wi verdict JSON round-trip, with and without witness") {
  const WiVerdict member = in_Wi({1.0 / 3.0, 1.5});
  REQUIRE(member.status == WiStatus::Member);
  const WiVerdict back = wi_verdict_from_json(to_json(member));
  CHECK(back.status == WiStatus::Member);
  REQUIRE(back.witness.has_value());
  CHECK(back.witness->wa_point.x == member.witness->wa_point.x);
  CHECK(back.witness->wa_point.beta == member.witness->wa_point.beta);
  REQUIRE(back.witness->maps.size() == member.witness->maps.size());
  for (std::size_t i = 0; i < member.witness->maps.size(); ++i) {
    CHECK(back.witness->maps[i] == member.witness->maps[i]);
  }

  const WiVerdict non = in_Wi({0.7, 1.0});
  const WiVerdict back2 = wi_verdict_from_json(to_json(non));
  CHECK(back2.status == WiStatus::NonMember);
  CHECK(!back2.witness.has_value());
}

TEST_CASE("eval result JSON round-trip") {
  const EvalResult r{2.718281828459045, 3.5e-16, 24};
  const EvalResult back = eval_result_from_json(to_json(r));
  CHECK(back.value == r.value);
  CHECK(back.est_error == r.est_error);
  CHECK(back.terms_used == r.terms_used);
}

TEST_CASE("enum parsing rejects unknown names") {
  CHECK_THROWS(problem_kind_from_string("banana"));
  CHECK_THROWS(normalization_from_string("q"));
  CHECK_THROWS(zero_target_from_string("zeta"));
  CHECK(problem_kind_from_string("ucv") == ProblemKind::UniformConvex);
  CHECK(normalization_from_string("h") == Normalization::H);
  CHECK(zero_target_from_string("psiprime") == ZeroTarget::PsiPrimeZeros);
}
