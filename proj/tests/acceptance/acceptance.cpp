// Acceptance runner: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hetero/catalog.hpp"
#include "hetero/identities.hpp"
#include "hetero/verifier.hpp"
#include "support/helpers.hpp"
#include "support/properties.hpp"

using namespace hetero;
using namespace hetero::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
};

bool is_identity(const ScalarMatrix& m) {
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j)
      if (!(m(i, j) == q(i == j ? 1 : 0))) return false;
  return true;
}

bool all_zero(const std::vector<KForm>& forms) {
  return std::all_of(forms.begin(), forms.end(), [](const KForm& f) { return f.is_zero(); });
}

const Verdict* find_verdict(const VerificationReport& r, const std::string& check) {
  for (const auto& v : r.verdicts)
    if (v.check == check) return &v;
  return nullptr;
}

bool verdict_pass(const VerificationReport& r, const std::string& check) {
  const Verdict* v = find_verdict(r, check);
  return v && v->pass;
}

bool golden_ok(const VerificationReport& r, Outcome& out) {
  bool ok = true;
  for (const auto& g : r.golden)
    if (!g.matches) {
      out.note(r.name + " " + g.id + " recomputed " + g.recomputed);
      ok = false;
    }
  return ok && !r.golden.empty();
}

bool has_golden(const VerificationReport& r, const std::string& id) {
  return std::any_of(r.golden.begin(), r.golden.end(), [&](const GoldenOutcome& g) { return g.id == id && g.matches; });
}

VerificationReport run(const std::string& name, const Assignment& params = {},
                       ConnectionChoice choice = ConnectionChoice::Plus) {
  return verify_model(configure(*find_catalog_entry(name), params, choice));
}

VerificationReport run_symbolic(const std::string& name, ConnectionChoice choice = ConnectionChoice::Plus) {
  return verify_model(find_catalog_entry(name)->build(choice));
}

bool ratio_equals(const AlphaPrime& alpha, const Scalar& num, const Scalar& den) {
  return alpha.status == AlphaPrime::Status::Ratio && alpha.numerator * den == num * alpha.denominator;
}

Outcome structural_constants() {
  Outcome out;
  KForm expected = e(7, {3, 4, 5, 6}) + e(7, {1, 4, 5, 7}) + e(7, {1, 2, 5, 6}) + e(7, {1, 2, 3, 4}) +
                   e(7, {2, 3, 5, 7}) + e(7, {1, 3, 6, 7}) - e(7, {2, 4, 6, 7});
  out.require(hodge_star(standard_theta()) == expected, "*Theta term-for-term");
  out.require(hodge_star(standard_spin7_form()) == standard_spin7_form(), "*Phi = Phi");
  out.require(is_identity(metric_from_structure(StructureKind::G2, standard_theta())), "G2 metric (1/6)");
  out.require(is_identity(metric_from_structure(StructureKind::Spin7, standard_spin7_form())),
              "Spin(7) metric (1/42)");
  ScalarMatrix with_24 = q(42, 24) * metric_from_structure(StructureKind::Spin7, standard_spin7_form());
  out.note("Spin(7) metric uses 1/42; the 1/24 normalization gives " + with_24(1, 1).to_string() + " * I");
  return out;
}

Outcome h7_suite() {
  Outcome out;
  VerificationReport plus = run_symbolic("h7");
  VerificationReport lc = run_symbolic("h7", ConnectionChoice::LeviCivita);
  out.require(golden_ok(plus, out) && golden_ok(lc, out), "h7 golden values (dT, q1 plus, q1 instanton, q1 LC)");
  for (const char* id : {"dT", "q1_plus", "q1_instanton"}) out.require(has_golden(plus, id), id);
  out.require(has_golden(lc, "q1_lc"), "q1_lc");
  VerificationReport small = run("h7", {{"lambda", Rational(1, 3)}});
  VerificationReport big = run("h7", {{"lambda", 2}});
  out.require(!small.positivity.empty() && small.positivity[0].positive, "alpha' > 0 at lambda = 1/3");
  out.require(!big.positivity.empty() && !big.positivity[0].positive, "alpha' not positive at lambda = 2");
  if (!small.positivity.empty() && small.positivity[0].value)
    out.note("alpha'(lambda=1/3) = " + to_string(*small.positivity[0].value));
  if (!big.positivity.empty() && big.positivity[0].value)
    out.note("alpha'(lambda=2) = " + to_string(*big.positivity[0].value));
  return out;
}

Outcome n31_suite() {
  Outcome out;
  Scalar a = var("a"), b = var("b"), c = var("c"), l = var("lambda"), m = var("mu"), t = var("tau");
  LieAlgebraModel general = build_n31_general(a, b, c);
  KForm theta = standard_theta();
  out.require(wedge(theta, ce_differential(general, theta)) == q(2) * (a + b + c) * KForm::volume(7),
              "Theta ^ dTheta = 2(a+b+c) vol");
  G2Class cls = classify_g2(general, standard_g2());
  out.require(cls.cocalibrated && !cls.pure_type, "cocalibrated, not pure type for free c");
  out.require(classify_g2(build_n31_general(a, b, -a - b), standard_g2()).pure_type, "pure type at c = -a-b");

  VerificationReport r = run_symbolic("n31");
  out.require(golden_ok(r, out), "N(3,1) golden values (T, dT, curvature forms, q1)");
  out.require(r.instanton_ok, "A is a G2 instanton");
  out.require(r.nabla_plus_torsion_zero, "nabla+ T = 0");
  out.require(ratio_equals(r.alpha_prime, q(4), q(2) * (a * a + a * b + b * b) - l * l - m * m - t * t),
              "alpha' = 4/(2(a^2+ab+b^2) - lambda^2 - mu^2 - tau^2)");
  out.require(r.quadratic_condition_zero, "quadratic condition residual zero for R+");
  out.require(r.einstein_zero && r.torsion_divergence_zero && r.instanton_divergence_zero,
              "motion residuals zero");
  VerificationReport at_unit = run("n31");
  out.require(at_unit.passed() && !at_unit.positivity.empty() && *at_unit.positivity[0].value == Rational(4, 5),
              "alpha' = 4/5 at a=b=lambda=1");
  return out;
}

Outcome h8_suite() {
  Outcome out;
  Scalar a = var("a"), b = var("b"), c = var("c"), l = var("lambda");
  LieAlgebraModel h8 = build_h8(a, b, c);
  KForm T = torsion_3form(h8, standard_spin7());
  out.require(wedge(T, standard_spin7_form()).is_zero(), "T ^ Phi = 0");

  VerificationReport r = run_symbolic("h8");
  out.require(golden_ok(r, out), "h8 golden values (T, dT, curvature forms, q1 plus, q1 instanton)");
  out.require(r.instanton_ok, "A is a Spin(7) instanton");
  out.require(ratio_equals(r.alpha_prime, q(2), a * a + a * b + b * b - q(3) * l * l),
              "alpha' = 2/(a^2+ab+b^2-3 lambda^2) under the mu constraint");

  TorsionGeometry geo = TorsionGeometry::build(h8, T, standard_spin7().psi());
  Scalar factor = (a - b) * c;
  bool divisible = true;
  for (const auto& form : geo.plus_derivative_of_torsion)
    for (const auto& [blade, coeff] : form.terms()) divisible = divisible && coeff.exact_divide(factor).has_value();
  out.require(divisible && !all_zero(geo.plus_derivative_of_torsion), "nabla+ T divisible by (a-b)c");

  VerifyInput equal = find_catalog_entry("h8")->build(ConnectionChoice::Plus);
  VerificationReport ab = verify_model(specialize(equal, {{"b", 1}, {"a", 1}}));
  out.require(ab.einstein_zero && ab.torsion_divergence_zero && ab.instanton_divergence_zero,
              "a = b: motion residuals zero");

  VerificationReport lc = run("h8", {{"lambda", Rational(1, 2)}}, ConnectionChoice::LeviCivita);
  out.require(golden_ok(lc, out) && has_golden(lc, "q1_lc"), "16 pi^2 p1(LC) = -5, -19, -19");
  out.require(has_golden(lc, "alpha_prime"), "alpha' = 32/(19 - 48 lambda^2)");
  if (!lc.positivity.empty() && lc.positivity[0].value)
    out.note("LC alpha'(lambda=1/2) = " + to_string(*lc.positivity[0].value));
  return out;
}

Outcome identity_suite_criterion() {
  Outcome out;
  for (const char* name : {"h7", "n31", "h8"}) {
    VerifyInput in = find_catalog_entry(name)->build(ConnectionChoice::Plus);
    TorsionGeometry geo =
        TorsionGeometry::build(in.model, torsion_3form(in.model, in.structure), in.structure.psi());
    for (const auto& r : identity_suite(geo)) out.require(r.zero, std::string(name) + " " + r.name);
  }
  out.note("symbolic in all parameters");
  return out;
}

Outcome scalar_curvature_check() {
  Outcome out;
  for (const char* name : {"h7", "n31", "h8"}) {
    VerifyInput in = find_catalog_entry(name)->build(ConnectionChoice::Plus);
    KForm T = torsion_3form(in.model, in.structure);
    Scalar s = scalar_curvature(curvature(in.model, levi_civita(in.model)));
    out.require(s == q(-1, 12) * q(6) * inner(T, T), std::string(name) + " s = -|T|^2/12");
  }
  return out;
}

Outcome product_extensions() {
  Outcome out;
  Scalar t = var("t");
  ProductModel g2 = extend_g2_product(build_h3(t), SU3Data::standard());
  out.require(g2.model == build_h7(t, q(0), q(0)), "h3 x S1 = h7(t,0,0)");
  G2Class cls = classify_g2(g2.model, g2.structure);
  out.require(cls.cocalibrated && cls.pure_type, "cocalibrated of pure type");
  VerificationReport r = run_symbolic("n31-x-s1");
  out.require(r.spin7_class && r.spin7_class->balanced, "N(3,1) x S1 balanced");
  out.require(r.instanton_ok, "extended instanton");
  out.require(r.einstein_zero && r.torsion_divergence_zero && r.instanton_divergence_zero,
              "motion residuals zero");
  VerificationReport h7s1 = run_symbolic("h7-x-s1");
  out.require(h7s1.instanton_ok && h7s1.einstein_zero, "h3 x S1 configuration solves the equations of motion");
  return out;
}

Outcome negative_controls() {
  Outcome out;
  for (Assignment point : {Assignment{{"c1", 1}, {"c2", 0}}, Assignment{{"c1", 0}, {"c2", 1}},
                           Assignment{{"c1", 1}, {"c2", 2}}}) {
    VerificationReport r = run("h7", point);
    std::string at = "c1=" + to_string(point.at("c1")) + " c2=" + to_string(point.at("c2"));
    out.require(!r.quadratic_condition_zero, at + " quadratic residual nonzero");
    out.require(!r.einstein_zero, at + " Einstein residual nonzero");
    out.require(r.torsion_divergence_zero && r.instanton_divergence_zero, at + " residuals 2-3 vanish");
  }
  return out;
}

Outcome discrepancy_ledger() {
  Outcome out;
  std::size_t total = 0;
  for (const auto& entry : catalog()) {
    VerificationReport r = verify_model(configure(entry, {}, ConnectionChoice::Plus));
    out.require(golden_ok(r, out), entry.name + " matches recomputation");
    for (const auto& d : r.discrepancies) {
      ++total;
      out.note(entry.name + " " + d.quantity + ": printed " + d.printed + ", recomputed " + d.recomputed);
    }
    out.require(verdict_pass(r, "golden"), entry.name + " golden verdict");
  }
  out.require(total > 0, "known printed discrepancy is reported");
  return out;
}

Outcome property_suites() {
  Outcome out;
  int total = 0;
  for (const auto& r : all_property_suites(150)) {
    total += r.cases;
    out.require(r.failures == 0, r.name + " (" + r.first_failure + ")");
  }
  out.require(total >= 1000, "at least 1000 cases");
  out.note(std::to_string(total) + " randomized cases");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"structural constants", structural_constants},
      {"h7 suite", h7_suite},
      {"N(3,1) suite", n31_suite},
      {"h8 suite", h8_suite},
      {"identity suite", identity_suite_criterion},
      {"scalar curvature cross-check", scalar_curvature_check},
      {"product extensions", product_extensions},
      {"negative controls", negative_controls},
      {"discrepancy ledger", discrepancy_ledger},
      {"property suites", property_suites},
  };
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    all = all && out.pass;
    std::cout << (out.pass ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first;
    for (const auto& n : out.notes) std::cout << "; " << n;
    std::cout << "\n";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << seconds << " s\n";
  return all ? 0 : 1;
}
