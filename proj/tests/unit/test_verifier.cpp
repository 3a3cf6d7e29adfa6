#include <doctest.h>

#include <algorithm>

#include "hetero/catalog.hpp"
#include "hetero/identities.hpp"
#include "hetero/verifier.hpp"
#include "support/helpers.hpp"

using namespace hetero;
using namespace hetero::testing;

namespace {

const Verdict& verdict(const VerificationReport& r, const std::string& check) {
  auto it = std::find_if(r.verdicts.begin(), r.verdicts.end(), [&](const Verdict& v) { return v.check == check; });
  REQUIRE(it != r.verdicts.end());
  return *it;
}

VerifyInput catalog_input(const std::string& name, const Assignment& params,
                          ConnectionChoice choice = ConnectionChoice::Plus) {
  const CatalogEntry* entry = find_catalog_entry(name);
  REQUIRE(entry != nullptr);
  return configure(*entry, params, choice);
}

bool ratio_equals(const AlphaPrime& alpha, const Scalar& num, const Scalar& den) {
  return alpha.status == AlphaPrime::Status::Ratio && alpha.numerator * den == num * alpha.denominator;
}

}  // namespace

TEST_CASE("anomaly solving") {
  KForm v = e(7, {1, 2, 3, 4});
  AlphaPrime fixed = anomaly_solve(q(2) * v, q(3) * v, q(1) * v);
  CHECK(ratio_equals(fixed, q(4), q(1)));
  AlphaPrime any = anomaly_solve(KForm(7, 4), KForm(7, 4), KForm(7, 4));
  CHECK(any.status == AlphaPrime::Status::Any);
  AlphaPrime none = anomaly_solve(v, KForm(7, 4), KForm(7, 4));
  CHECK(none.status == AlphaPrime::Status::None);
  AlphaPrime skew = anomaly_solve(v + e(7, {1, 2, 5, 6}), v - e(7, {1, 2, 5, 6}), KForm(7, 4));
  CHECK(skew.status == AlphaPrime::Status::None);
  CHECK_FALSE(skew.diagnostic.empty());
}

TEST_CASE("anomaly solutions of the catalog families") {
  Scalar a = var("a"), b = var("b"), l = var("lambda"), m = var("mu"), t = var("tau");
  VerificationReport n31 = verify_model(find_catalog_entry("n31")->build(ConnectionChoice::Plus));
  CHECK(ratio_equals(n31.alpha_prime, q(4), q(2) * (a * a + a * b + b * b) - l * l - m * m - t * t));

  Scalar c = var("c");
  VerificationReport h8 = verify_model(find_catalog_entry("h8")->build(ConnectionChoice::Plus));
  CHECK(ratio_equals(h8.alpha_prime, q(2), a * a + a * b + b * b - q(3) * l * l));
}

TEST_CASE("alpha' is invariant under a common rescaling") {
  Scalar a = var("a"), b = var("b"), l = var("lambda"), m = var("mu"), t = var("tau");
  LieAlgebraModel n31 = build_n31(a, b);
  GStructure g2 = standard_g2();
  KForm T = torsion_3form(n31, g2);
  TorsionGeometry geo = TorsionGeometry::build(n31, T, g2.psi());
  KForm qr = pontrjagin_q1(geo.curvature_plus);
  KForm qa = pontrjagin_q1(curvature(n31, instanton_n31(l, m, t)));
  AlphaPrime base = anomaly_solve(geo.d_torsion, qr, qa);
  AlphaPrime scaled = anomaly_solve(q(3) * geo.d_torsion, q(3) * qr, q(3) * qa);
  CHECK(ratio_equals(scaled, base.numerator, base.denominator));
}

TEST_CASE("positivity at sample points") {
  VerifyInput in = catalog_input("h7", {{"lambda", Rational(1, 3)}});
  VerificationReport r = verify_model(in);
  REQUIRE(r.positivity.size() == 1);
  CHECK(r.positivity[0].positive);
  CHECK(*r.positivity[0].value == Rational(60, 97));
  VerificationReport big = verify_model(catalog_input("h7", {{"lambda", 2}}));
  REQUIRE(big.positivity.size() == 1);
  CHECK_FALSE(big.positivity[0].positive);
  CHECK_FALSE(verdict(big, "anomaly").pass);

  AlphaPrime alpha;
  alpha.status = AlphaPrime::Status::Ratio;
  alpha.numerator = q(1);
  alpha.denominator = var("x") - q(1);
  auto checks = alpha_positivity(alpha, {{{"x", 1}}, {{"x", 3}}});
  CHECK_FALSE(checks[0].value.has_value());
  CHECK(checks[1].positive);
}

TEST_CASE("quadratic condition residual") {
  Scalar a = var("a"), b = var("b"), l = var("lambda"), m = var("mu"), t = var("tau");
  LieAlgebraModel n31 = build_n31(a, b);
  GStructure g2 = standard_g2();
  CHECK(quadratic_condition_residual(curvature(n31, instanton_n31(l, m, t)), g2.psi()).is_zero());
  TorsionGeometry geo = TorsionGeometry::build(n31, torsion_3form(n31, g2), g2.psi());
  CHECK(quadratic_condition_residual(geo.curvature_plus, g2.psi()).is_zero());

  LieAlgebraModel h7 = build_h7(q(1), q(1), q(0));
  TorsionGeometry g7 = TorsionGeometry::build(h7, torsion_3form(h7, g2), g2.psi());
  ScalarMatrix residual = quadratic_condition_residual(g7.curvature_plus, g2.psi());
  CHECK_FALSE(residual.is_zero());
  CHECK(residual.is_symmetric());
}

TEST_CASE("equations of motion residuals") {
  VerificationReport n31 = verify_model(catalog_input("n31", {}));
  CHECK(n31.einstein_zero);
  CHECK(n31.torsion_divergence_zero);
  CHECK(n31.instanton_divergence_zero);
  CHECK(n31.codifferential_agrees);
  CHECK(n31.chain_agrees);
  CHECK(n31.passed());

  VerificationReport h8 = verify_model(catalog_input("h8", {}));
  CHECK(h8.einstein_zero);
  CHECK(h8.torsion_divergence_zero);
  CHECK(h8.instanton_divergence_zero);

  VerificationReport h7 = verify_model(catalog_input("h7", {}));
  CHECK_FALSE(h7.einstein_zero);
  CHECK_FALSE(h7.quadratic_condition_zero);
  CHECK(h7.torsion_divergence_zero);
  CHECK(h7.instanton_divergence_zero);
  CHECK(h7.chain_agrees);
  CHECK_FALSE(verdict(h7, "equations-of-motion").pass);
  CHECK(verdict(h7, "anomaly").pass);
  CHECK(verdict(h7, "structure").pass);
}

TEST_CASE("codifferential agrees with the Levi-Civita divergence for arbitrary 3-forms") {
  Scalar t = var("t"), c1 = var("c1"), c2 = var("c2");
  LieAlgebraModel h7 = build_h7(t, c1, c2);
  GStructure g2 = standard_g2();
  const std::vector<KForm> samples{e(7, {1, 2, 3}), e(7, {1, 6, 7}) - q(2) * e(7, {2, 4, 5}),
                                   t * e(7, {3, 4, 6}) + c1 * e(7, {1, 2, 7})};
  for (const auto& T : samples) {
    TorsionGeometry geo = TorsionGeometry::build(h7, T, g2.psi());
    Connection flat(7);
    Curvature zero = curvature(h7, flat);
    MotionResiduals res = motion_residuals(geo, geo.curvature_plus, pontrjagin_q1(geo.curvature_plus), flat,
                                           zero, q(1), q(1));
    CHECK(res.codifferential_agrees);
  }
}

TEST_CASE("trivial abelian report") {
  VerifyInput in;
  in.name = "abelian";
  in.model = LieAlgebraModel::abelian(7);
  in.structure = standard_g2();
  in.instanton = Connection(7);
  VerificationReport r = verify_model(in);
  CHECK(r.alpha_prime.status == AlphaPrime::Status::Any);
  CHECK(r.d_torsion.is_zero());
  CHECK(r.passed());
}

TEST_CASE("identity suite vanishes on the catalog families") {
  for (const char* name : {"h7", "n31", "h8"}) {
    VerifyInput in = find_catalog_entry(name)->build(ConnectionChoice::Plus);
    TorsionGeometry geo =
        TorsionGeometry::build(in.model, torsion_3form(in.model, in.structure), in.structure.psi());
    auto results = identity_suite(geo);
    CHECK(results.size() >= 7);
    for (const auto& r : results) {
      INFO(name << ": " << r.name);
      CHECK(r.zero);
    }
  }
}

TEST_CASE("identity suite detects a wrong torsion") {
  LieAlgebraModel n31 = build_n31(q(1), q(2));
  GStructure g2 = standard_g2();
  TorsionGeometry geo = TorsionGeometry::build(n31, q(2) * torsion_3form(n31, g2), g2.psi());
  auto results = identity_suite(geo);
  CHECK(std::any_of(results.begin(), results.end(), [](const IdentityResult& r) { return !r.zero; }));
}
