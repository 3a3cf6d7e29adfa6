#include <doctest.h>

#include <algorithm>

#include "hetero/catalog.hpp"
#include "hetero/error.hpp"
#include "support/helpers.hpp"

using namespace hetero;
using namespace hetero::testing;

namespace {

void check_goldens(const VerificationReport& r) {
  for (const auto& g : r.golden) {
    INFO(r.name << " " << g.id << " expected " << g.expected << " recomputed " << g.recomputed);
    CHECK(g.matches);
  }
}

}  // namespace

TEST_CASE("catalog listing") {
  std::vector<std::string> names;
  for (const auto& entry : catalog()) names.push_back(entry.name);
  CHECK(names == std::vector<std::string>{"h7", "n31", "h8", "h7-x-s1", "n31-x-s1"});
  CHECK(find_catalog_entry("nope") == nullptr);
  CHECK(find_catalog_entry("h8")->params.size() == 4);
}

TEST_CASE("golden values match symbolically for every entry and connection") {
  for (const auto& entry : catalog()) {
    for (auto choice : {ConnectionChoice::Plus, ConnectionChoice::LeviCivita}) {
      VerificationReport r = verify_model(entry.build(choice));
      CHECK_FALSE(r.golden.empty());
      check_goldens(r);
    }
  }
}

TEST_CASE("plus-connection entries pass at their defaults") {
  for (const char* name : {"n31", "h8", "h7-x-s1", "n31-x-s1"}) {
    VerificationReport r = verify_model(configure(*find_catalog_entry(name), {}, ConnectionChoice::Plus));
    INFO(name);
    CHECK(r.passed());
  }
  VerificationReport h7 = verify_model(configure(*find_catalog_entry("h7"), {}, ConnectionChoice::Plus));
  CHECK_FALSE(h7.passed());
}

TEST_CASE("Levi-Civita variants do not satisfy the quadratic condition") {
  VerificationReport n31 =
      verify_model(configure(*find_catalog_entry("n31"), {}, ConnectionChoice::LeviCivita));
  CHECK_FALSE(n31.passed());
  VerificationReport h8 = verify_model(
      configure(*find_catalog_entry("h8"), {{"lambda", Rational(1, 2)}}, ConnectionChoice::LeviCivita));
  REQUIRE(h8.alpha_prime.status == AlphaPrime::Status::Ratio);
  REQUIRE(h8.positivity.size() == 1);
  CHECK(*h8.positivity[0].value == Rational(32, 7));
  CHECK_FALSE(h8.quadratic_condition_zero);
}

TEST_CASE("h8 records the printed instanton curvature sign as a discrepancy") {
  VerificationReport r = verify_model(configure(*find_catalog_entry("h8"), {}, ConnectionChoice::Plus));
  REQUIRE(r.discrepancies.size() == 1);
  CHECK(r.discrepancies[0].quantity == "omega_instanton:5:3");
  CHECK(r.passed());
}

TEST_CASE("configure validates parameters") {
  const CatalogEntry& h8 = *find_catalog_entry("h8");
  CHECK_THROWS_AS(configure(h8, {{"zeta", 1}}, ConnectionChoice::Plus), PreconditionFailure);
  // mu^2 = (3 lambda^2 - 3)/2 < 0 at a=b=c=1, lambda=0.
  CHECK_THROWS_AS(configure(h8, {{"lambda", 0}}, ConnectionChoice::Plus), PreconditionFailure);
  VerifyInput in = configure(*find_catalog_entry("n31"), {{"a", 2}}, ConnectionChoice::Plus);
  CHECK(in.model == build_n31(q(2), q(1)));
}

TEST_CASE("specialize substitutes everywhere") {
  VerifyInput in = find_catalog_entry("n31")->build(ConnectionChoice::Plus);
  VerifyInput s = specialize(in, {{"a", 1}, {"b", 1}});
  CHECK(s.model == build_n31(q(1), q(1)));
  REQUIRE(s.instanton);
  CHECK(*s.instanton == instanton_n31(var("lambda"), var("mu"), var("tau")));
}

TEST_CASE("circle products") {
  Scalar t = var("t");
  LieAlgebraModel h3 = build_h3(t);
  ProductModel g2 = extend_g2_product(h3, SU3Data::standard());
  CHECK(g2.model == build_h7(t, q(0), q(0)));
  CHECK(g2.structure == standard_g2());
  G2Class cls = classify_g2(extend_g2_product(build_h3(q(1)), SU3Data::standard()).model, standard_g2());
  CHECK(cls.cocalibrated);
  CHECK(cls.pure_type);
  CHECK(extend_g2_product(LieAlgebraModel::abelian(6), SU3Data::standard()).model == LieAlgebraModel::abelian(7));

  Scalar a = var("a"), b = var("b");
  ProductModel s7 = extend_spin7_product(build_n31(a, b), standard_g2());
  CHECK(s7.structure == standard_spin7());
  CHECK(classify_spin7(s7.model, s7.structure).balanced);
  CHECK(extend_spin7_product(LieAlgebraModel::abelian(7), standard_g2()).model == LieAlgebraModel::abelian(8));
  CHECK(is_instanton(curvature(s7.model, instanton_n31(var("lambda"), var("mu"), var("tau")).extended_by_circle()),
                     s7.structure));

  // Not of pure type: the Spin(7) product is refused.
  CHECK_THROWS_AS(extend_spin7_product(build_n31_general(a, b, a), standard_g2()), PreconditionFailure);
  std::vector<KForm> d(6, KForm(6, 2));
  d[5] = e(6, {1, 3});
  CHECK_THROWS_AS(extend_g2_product(LieAlgebraModel(6, {}, d), SU3Data::standard()), PreconditionFailure);
}

TEST_CASE("h7 positivity region boundary") {
  const CatalogEntry& h7 = *find_catalog_entry("h7");
  // lambda^2 < min(8 t^2, 2 (c1^2 + c2^2) / 11) is sufficient; at t=1, c1=1, c2=0
  // the exact region is lambda^2 < 34/15.
  for (auto [lambda, positive] : std::vector<std::pair<Rational, bool>>{
           {Rational(1, 3), true}, {Rational(3, 2), true}, {Rational(8, 5), false}, {Rational(2), false}}) {
    VerificationReport r = verify_model(configure(h7, {{"lambda", lambda}}, ConnectionChoice::Plus));
    REQUIRE(r.positivity.size() == 1);
    CHECK(r.positivity[0].positive == positive);
  }
}
