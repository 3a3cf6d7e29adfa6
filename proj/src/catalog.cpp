#include "hetero/catalog.hpp"

#include <algorithm>
#include <set>

#include "hetero/error.hpp"

namespace hetero {

namespace {

KForm e(int n, std::initializer_list<int> idx) { return KForm::basis(n, idx); }
Scalar var(const char* name) { return Scalar::variable(name); }
Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

std::vector<std::string> params_of(std::initializer_list<Scalar> values) {
  std::set<std::string> names;
  for (const auto& s : values)
    for (auto& v : s.variables()) names.insert(v);
  return {names.begin(), names.end()};
}

std::vector<KForm> zero_differentials(int n) { return std::vector<KForm>(n, KForm(n, 2)); }

GoldenValue golden(std::string id, KForm expected, std::string note = {}) {
  GoldenValue g;
  g.id = std::move(id);
  g.expected = std::move(expected);
  g.note = std::move(note);
  return g;
}

GoldenValue golden_ratio(const Scalar& num, const Scalar& den, int dim) {
  GoldenValue g;
  g.id = "alpha_prime";
  g.expected = KForm::constant(dim, num);
  g.denominator = den;
  return g;
}

GoldenValue golden_scalar(std::string id, const Scalar& value, int dim) {
  return golden(std::move(id), KForm::constant(dim, value));
}

// ---- h7 ----------------------------------------------------------------

std::vector<GoldenValue> h7_golden(const Scalar& t, const Scalar& c1, const Scalar& c2,
                                   const Scalar& l, ConnectionChoice choice) {
  const int n = 7;
  const Scalar c = c1 * c1 + c2 * c2;
  const Scalar t2 = t * t;
  const KForm v = e(n, {1, 2, 3, 4});
  const KForm x = e(n, {1, 2}) - e(n, {3, 4});
  const KForm y = e(n, {1, 3}) + e(n, {2, 4});
  const KForm z = e(n, {1, 4}) - e(n, {2, 3});
  std::vector<GoldenValue> out;
  out.push_back(golden("T", q(-2) * t * e(n, {1, 2, 6}) + q(2) * t * e(n, {3, 4, 6}) +
                                c1 * e(n, {1, 3, 7}) + c2 * e(n, {1, 4, 7}) - c2 * e(n, {2, 3, 7}) +
                                c1 * e(n, {2, 4, 7})));
  out.push_back(golden("dT", q(-2) * (q(4) * t2 + c) * v));
  const KForm op12 = q(-4) * t2 * x;
  const KForm op13 = -(c1 * c1) * y - c1 * c2 * z + q(4) * t * c2 * e(n, {6, 7});
  const KForm op14 = -(c1 * c2) * y - c2 * c2 * z - q(4) * t * c1 * e(n, {6, 7});
  out.push_back(golden("omega_plus:1:2", op12));
  out.push_back(golden("omega_plus:3:4", -op12));
  out.push_back(golden("omega_plus:1:3", op13));
  out.push_back(golden("omega_plus:2:4", op13));
  out.push_back(golden("omega_plus:1:4", op14));
  out.push_back(golden("omega_plus:2:3", -op14));
  out.push_back(golden("q1_plus", q(-4) * (q(16) * t2 * t2 + c * c) * v));
  const KForm oa = l * c1 * y + l * c2 * z;
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                      {3, 5}, {4, 5}})
    out.push_back(golden("omega_instanton:" + std::to_string(i) + ":" + std::to_string(j), oa));
  out.push_back(golden("omega_instanton:6:7", q(-2) * l * t * x + oa));
  out.push_back(golden("q1_instanton", q(-2) * l * l * (q(4) * t2 + q(11) * c) * v));
  const Scalar u = q(4) * t2 - c;
  out.push_back(golden("q1_lc", q(-1, 2) * (q(3) * u * u + q(16) * t2 * c) * v));
  out.push_back(golden_scalar("scalar_curvature_lc", -(q(4) * t2 + c), n));
  if (choice == ConnectionChoice::Plus) {
    out.push_back(golden("q1_difference",
                         q(2) * (q(4) * t2 * (l * l - q(8) * t2) + c * (q(11) * l * l - q(2) * c)) * v));
    out.push_back(golden_ratio(q(4) * (q(4) * t2 + c),
                               q(4) * t2 * (q(8) * t2 - l * l) + c * (q(2) * c - q(11) * l * l), n));
  }
  return out;
}

// ---- N(3,1) ------------------------------------------------------------

std::vector<GoldenValue> n31_golden(const Scalar& a, const Scalar& b, const Scalar& l,
                                    const Scalar& m, const Scalar& t, ConnectionChoice choice,
                                    int offset) {
  const int n = 7 + offset;
  auto E = [&](std::initializer_list<int> idx) {
    std::vector<int> v(idx);
    for (int& i : v) i += offset;
    return KForm::basis(n, std::span<const int>(v));
  };
  auto pair = [&](const char* prefix, int i, int j) {
    return std::string(prefix) + std::to_string(i + offset) + ":" + std::to_string(j + offset);
  };
  const Scalar s = a * a + a * b + b * b;
  const KForm x = a * E({1, 2}) + b * E({3, 4}) - (a + b) * E({5, 6});
  const KForm w = a * b * E({1, 2, 3, 4}) - a * (a + b) * E({1, 2, 5, 6}) - b * (a + b) * E({3, 4, 5, 6});
  std::vector<GoldenValue> out;
  out.push_back(golden("T", a * E({1, 2, 7}) + b * E({3, 4, 7}) - (a + b) * E({5, 6, 7})));
  out.push_back(golden("dT", q(2) * w));
  out.push_back(golden(pair("omega_plus:", 1, 2), -a * x));
  out.push_back(golden(pair("omega_plus:", 3, 4), -b * x));
  out.push_back(golden(pair("omega_plus:", 5, 6), (a + b) * x));
  out.push_back(golden("q1_plus", q(4) * s * w));
  out.push_back(golden(pair("omega_instanton:", 1, 2), l * x));
  out.push_back(golden(pair("omega_instanton:", 3, 4), m * x));
  out.push_back(golden(pair("omega_instanton:", 5, 6), t * x));
  out.push_back(golden("q1_instanton", q(2) * (l * l + m * m + t * t) * w));
  out.push_back(golden("q1_lc", q(1, 4) * (a * b * (q(5) * a * a + q(4) * a * b + q(5) * b * b) * E({1, 2, 3, 4}) -
                                           a * (a + b) * (q(6) * a * a + q(6) * a * b + q(5) * b * b) * E({1, 2, 5, 6}) -
                                           b * (a + b) * (q(5) * a * a + q(6) * a * b + q(6) * b * b) * E({3, 4, 5, 6}))));
  out.push_back(golden_scalar("scalar_curvature_lc", -s, n));
  if (choice == ConnectionChoice::Plus)
    out.push_back(golden_ratio(q(4), q(2) * s - l * l - m * m - t * t, n));
  return out;
}

// ---- h8 ----------------------------------------------------------------

std::vector<GoldenValue> h8_golden(const Scalar& a, const Scalar& b, const Scalar& c,
                                   const Scalar& l, const Scalar& m, ConnectionChoice choice) {
  const int n = 8;
  const Scalar s = a * a + a * b + b * b;
  const KForm y = a * e(n, {2, 3}) + b * e(n, {4, 5}) - (a + b) * e(n, {6, 7});
  const KForm z = e(n, {2, 4}) + e(n, {2, 5}) - e(n, {3, 4}) + e(n, {3, 5});
  std::vector<GoldenValue> out;
  out.push_back(golden("T", c * e(n, {1, 2, 4}) + c * e(n, {1, 2, 5}) - c * e(n, {1, 3, 4}) +
                                c * e(n, {1, 3, 5}) + a * e(n, {2, 3, 8}) + b * e(n, {4, 5, 8}) -
                                (a + b) * e(n, {6, 7, 8})));
  out.push_back(golden("dT", q(2) * (a * b - q(2) * c * c) * e(n, {2, 3, 4, 5}) -
                                 q(2) * a * (a + b) * e(n, {2, 3, 6, 7}) -
                                 q(2) * b * (a + b) * e(n, {4, 5, 6, 7})));
  const KForm c2z = c * c * (e(n, {2, 4}) + e(n, {2, 5}) - e(n, {3, 4}) + e(n, {3, 5}));
  const KForm r18 = (a - b) * c * e(n, {1, 8});
  out.push_back(golden("omega_plus:2:3", -(a * a) * e(n, {2, 3}) - a * b * e(n, {4, 5}) +
                                             a * (a + b) * e(n, {6, 7})));
  out.push_back(golden("omega_plus:2:4", r18 - c2z));
  out.push_back(golden("omega_plus:3:5", r18 - c2z));
  out.push_back(golden("omega_plus:2:5", -r18 - c2z));
  out.push_back(golden("omega_plus:3:4", r18 + c2z));
  out.push_back(golden("omega_plus:4:5", -(a * b) * e(n, {2, 3}) - b * b * e(n, {4, 5}) +
                                             b * (a + b) * e(n, {6, 7})));
  out.push_back(golden("omega_plus:6:7", a * (a + b) * e(n, {2, 3}) + b * (a + b) * e(n, {4, 5}) -
                                             (a + b) * (a + b) * e(n, {6, 7})));
  out.push_back(golden("q1_plus", q(4) * ((a * b * s - q(4) * c * c * c * c) * e(n, {2, 3, 4, 5}) -
                                          a * (a + b) * s * e(n, {2, 3, 6, 7}) -
                                          b * (a + b) * s * e(n, {4, 5, 6, 7}))));
  out.push_back(golden("omega_instanton:2:3", l * y));
  out.push_back(golden("omega_instanton:4:5", l * y));
  out.push_back(golden("omega_instanton:2:4", -(m * c) * z));
  out.push_back(golden("omega_instanton:2:5", -(m * c) * z));
  out.push_back(golden("omega_instanton:3:4", m * c * z));
  {
    GoldenValue g = golden("omega_instanton:5:3", m * c * z,
                           "printed with the opposite sign; recomputation and metric compatibility "
                           "with the (3,5) entry give +mu c Z");
    g.printed = -(m * c) * z;
    out.push_back(std::move(g));
  }
  out.push_back(golden("omega_instanton:6:7", q(-2) * l * y));
  out.push_back(golden("q1_instanton",
                       q(4) * ((q(3) * a * b * l * l - q(4) * c * c * m * m) * e(n, {2, 3, 4, 5}) -
                               q(3) * a * (a + b) * l * l * e(n, {2, 3, 6, 7}) -
                               q(3) * b * (a + b) * l * l * e(n, {4, 5, 6, 7}))));
  out.push_back(golden_scalar("scalar_curvature_lc", -(s + q(2) * c * c), n));
  if (choice == ConnectionChoice::Plus) out.push_back(golden_ratio(q(2), s - q(3) * l * l, n));
  return out;
}

// Goldens that only hold at a = b = c = 1 (Levi-Civita variant).
std::vector<GoldenValue> h8_unit_levi_civita_golden(const Scalar& l) {
  const int n = 8;
  std::vector<GoldenValue> out;
  out.push_back(golden("q1_lc", q(1, 2) * (q(-5) * e(n, {2, 3, 4, 5}) - q(19) * e(n, {2, 3, 6, 7}) -
                                           q(19) * e(n, {4, 5, 6, 7}))));
  out.push_back(golden_ratio(q(32), q(19) - q(48) * l * l, n));
  return out;
}

VerifyInput make_input(std::string name, LieAlgebraModel model, GStructure structure,
                       Connection instanton, std::string instanton_name, ConnectionChoice choice) {
  VerifyInput in;
  in.name = std::move(name);
  in.model = std::move(model);
  in.structure = std::move(structure);
  in.instanton = std::move(instanton);
  in.instanton_name = std::move(instanton_name);
  in.connection = choice;
  return in;
}

VerifyInput h7_input(ConnectionChoice choice) {
  const Scalar t = var("t"), c1 = var("c1"), c2 = var("c2"), l = var("lambda");
  VerifyInput in = make_input("h7", build_h7(t, c1, c2), standard_g2(), instanton_h7(l),
                                "A_lambda", choice);
  in.golden = h7_golden(t, c1, c2, l, choice);
  in.parameter_order = {"t", "c1", "c2", "lambda"};
  return in;
}

VerifyInput n31_input(ConnectionChoice choice) {
  const Scalar a = var("a"), b = var("b"), l = var("lambda"), m = var("mu"), t = var("tau");
  VerifyInput in = make_input("n31", build_n31(a, b), standard_g2(), instanton_n31(l, m, t),
                                "A_lambda_mu_tau", choice);
  in.golden = n31_golden(a, b, l, m, t, choice, 0);
  in.parameter_order = {"a", "b", "lambda", "mu", "tau"};
  return in;
}

VerifyInput h8_input(ConnectionChoice choice) {
  const Scalar a = var("a"), b = var("b"), c = var("c"), l = var("lambda"), m = var("mu");
  VerifyInput in = make_input("h8", build_h8(a, b, c), standard_spin7(), instanton_h8(l, m),
                                "A_lambda_mu", choice);
  in.golden = h8_golden(a, b, c, l, m, choice);
  in.reductions = {PowerReduction{"mu", 2,
                                  choice == ConnectionChoice::Plus ? h8_mu_squared_plus(a, b, c, l)
                                                                   : h8_mu_squared_levi_civita(l)}};
  in.parameter_order = {"a", "b", "c", "lambda", "mu"};
  return in;
}

VerifyInput h7_x_s1_input(ConnectionChoice choice) {
  const Scalar t = var("t"), l = var("lambda");
  ProductModel p = extend_g2_product(build_h3(t), SU3Data::standard());
  VerifyInput in = make_input("h7-x-s1", p.model, p.structure, instanton_h7(l),
                                "A_lambda", choice);
  in.golden = h7_golden(t, Scalar{}, Scalar{}, l, choice);
  in.parameter_order = {"t", "lambda"};
  return in;
}

VerifyInput n31_x_s1_input(ConnectionChoice choice) {
  const Scalar a = var("a"), b = var("b"), l = var("lambda"), m = var("mu"), t = var("tau");
  ProductModel p = extend_spin7_product(build_n31(a, b), standard_g2());
  VerifyInput in = make_input("n31-x-s1", p.model, p.structure, instanton_n31(l, m, t).extended_by_circle(),
                                "A_lambda_mu_tau x S1", choice);
  in.golden = n31_golden(a, b, l, m, t, choice, 1);
  in.parameter_order = {"a", "b", "lambda", "mu", "tau"};
  return in;
}

Rational fraction(long num, long den = 1) { return Rational(num, den); }

}  // namespace

LieAlgebraModel build_h3(const Scalar& t) {
  const int n = 6;
  auto d = zero_differentials(n);
  d[5] = q(-2) * t * (e(n, {1, 2}) - e(n, {3, 4}));
  return LieAlgebraModel(n, params_of({t}), std::move(d));
}

LieAlgebraModel build_h7(const Scalar& t, const Scalar& c1, const Scalar& c2) {
  const int n = 7;
  auto d = zero_differentials(n);
  d[5] = q(-2) * t * (e(n, {1, 2}) - e(n, {3, 4}));
  d[6] = c1 * (e(n, {1, 3}) + e(n, {2, 4})) + c2 * (e(n, {1, 4}) - e(n, {2, 3}));
  return LieAlgebraModel(n, params_of({t, c1, c2}), std::move(d));
}

LieAlgebraModel build_n31(const Scalar& a, const Scalar& b) {
  return build_n31_general(a, b, -(a + b));
}

LieAlgebraModel build_n31_general(const Scalar& a, const Scalar& b, const Scalar& c) {
  const int n = 7;
  auto d = zero_differentials(n);
  d[6] = a * e(n, {1, 2}) + b * e(n, {3, 4}) + c * e(n, {5, 6});
  return LieAlgebraModel(n, params_of({a, b, c}), std::move(d));
}

LieAlgebraModel build_h8(const Scalar& a, const Scalar& b, const Scalar& c) {
  const int n = 8;
  auto d = zero_differentials(n);
  d[0] = c * (e(n, {2, 4}) + e(n, {2, 5}) - e(n, {3, 4}) + e(n, {3, 5}));
  d[7] = a * e(n, {2, 3}) + b * e(n, {4, 5}) - (a + b) * e(n, {6, 7});
  return LieAlgebraModel(n, params_of({a, b, c}), std::move(d));
}

Connection instanton_h7(const Scalar& lambda) {
  const int n = 7;
  Connection A(n);
  const KForm le7 = lambda * e(n, {7});
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                      {3, 5}, {4, 5}})
    A.set_antisymmetric(i, j, le7);
  A.set_antisymmetric(6, 7, e(n, {1}) + e(n, {2}) + e(n, {3}) + e(n, {4}) + e(n, {5}) +
                                lambda * e(n, {6}) + le7);
  return A;
}

Connection instanton_n31(const Scalar& lambda, const Scalar& mu, const Scalar& tau) {
  const int n = 7;
  Connection A(n);
  A.set_antisymmetric(1, 2, lambda * e(n, {7}));
  A.set_antisymmetric(3, 4, mu * e(n, {7}));
  A.set_antisymmetric(5, 6, tau * e(n, {7}));
  return A;
}

Connection instanton_h8(const Scalar& lambda, const Scalar& mu) {
  const int n = 8;
  Connection A(n);
  const KForm le8 = lambda * e(n, {8});
  const KForm me1 = -mu * e(n, {1});
  A.set_antisymmetric(2, 3, le8);
  A.set_antisymmetric(4, 5, le8);
  A.set_antisymmetric(2, 4, me1);
  A.set_antisymmetric(2, 5, me1);
  A.set_antisymmetric(3, 5, me1);
  A.set_antisymmetric(4, 3, me1);
  A.set_antisymmetric(6, 7, q(-2) * le8);
  return A;
}

ProductModel extend_g2_product(const LieAlgebraModel& model6, const SU3Data& su3) {
  if (model6.dim() != 6) throw DimensionMismatch("the SU(3) factor must have dimension 6");
  const KForm dF = ce_differential(model6, su3.F);
  if (!wedge(dF, su3.F).is_zero() || !ce_differential(model6, su3.psi_plus).is_zero() ||
      !ce_differential(model6, su3.psi_minus).is_zero())
    throw PreconditionFailure("SU(3) structure is not balanced with closed Psi");
  std::vector<KForm> d;
  for (const auto& f : model6.differentials()) d.push_back(shifted(f, 7));
  d.emplace_back(7, 2);
  LieAlgebraModel model(7, model6.params(), std::move(d));
  return {std::move(model), GStructure::g2(su3.g2_form())};
}

ProductModel extend_spin7_product(const LieAlgebraModel& model7, const GStructure& g2) {
  if (g2.kind() != StructureKind::G2 || model7.dim() != 7)
    throw DimensionMismatch("the Spin(7) product needs a 7-dimensional G2 model");
  const G2Class cls = classify_g2(model7, g2);
  if (!cls.cocalibrated || !cls.pure_type)
    throw PreconditionFailure("G2 structure is not cocalibrated of pure type");
  std::vector<KForm> d{KForm(8, 2)};
  for (const auto& f : model7.differentials()) d.push_back(shifted(f, 8, 1));
  LieAlgebraModel model(8, model7.params(), std::move(d));
  KForm phi = wedge(e(8, {1}), shifted(g2.form(), 8, 1)) + shifted(g2.dual(), 8, 1);
  return {std::move(model), GStructure::spin7(std::move(phi))};
}

Scalar h8_mu_squared_plus(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& lambda) {
  return q(1, 2) * (q(3) * lambda * lambda - a * a - a * b - b * b + q(2) * c * c);
}

Scalar h8_mu_squared_levi_civita(const Scalar& lambda) {
  return q(1, 64) * (q(96) * lambda * lambda - q(9));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"h7",
       "cocalibrated G2 nilmanifold h7 with the instanton family A_lambda",
       {{"t", fraction(1)}, {"c1", fraction(1)}, {"c2", fraction(0)}, {"lambda", fraction(1, 3)}},
       h7_input},
      {"n31",
       "generalized Heisenberg nilmanifold N(3,1) with the instantons A_lambda,mu,tau",
       {{"a", fraction(1)}, {"b", fraction(1)}, {"lambda", fraction(1)}, {"mu", fraction(0)},
        {"tau", fraction(0)}},
       n31_input},
      {"h8",
       "balanced Spin(7) nilmanifold h8 with A_lambda,mu; mu^2 is fixed by proportionality",
       {{"a", fraction(1)}, {"b", fraction(1)}, {"c", fraction(1)}, {"lambda", fraction(2, 3)}},
       h8_input},
      {"h7-x-s1",
       "balanced SU(3) nilmanifold h3 times a circle with A_lambda",
       {{"t", fraction(1)}, {"lambda", fraction(1)}},
       h7_x_s1_input},
      {"n31-x-s1",
       "N(3,1) times a circle as a balanced Spin(7) manifold with the extended instanton",
       {{"a", fraction(1)}, {"b", fraction(1)}, {"lambda", fraction(1)}, {"mu", fraction(0)},
        {"tau", fraction(0)}},
       n31_x_s1_input},
  };
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& entry : catalog())
    if (entry.name == name) return &entry;
  return nullptr;
}

VerifyInput specialize(const VerifyInput& input, const Assignment& assignment) {
  VerifyInput out = input;
  out.model = input.model.specialize(assignment);
  if (input.instanton) out.instanton = input.instanton->specialize(assignment);
  for (auto& r : out.reductions) r.replacement = r.replacement.specialize(assignment);
  for (auto& g : out.golden) {
    g.expected = g.expected.specialize(assignment);
    g.denominator = g.denominator.specialize(assignment);
    if (g.printed) g.printed = g.printed->specialize(assignment);
  }
  for (auto& p : out.eval_points)
    for (const auto& [k, v] : assignment) p[k] = v;
  return out;
}

VerifyInput configure(const CatalogEntry& entry, const Assignment& overrides,
                      ConnectionChoice connection) {
  Assignment values;
  for (const auto& p : entry.params) values[p.name] = p.default_value;
  for (const auto& [k, v] : overrides) {
    auto it = std::find_if(entry.params.begin(), entry.params.end(),
                           [&](const CatalogParameter& p) { return p.name == k; });
    if (it == entry.params.end())
      throw PreconditionFailure("catalog entry '" + entry.name + "' has no parameter '" + k + "'");
    values[k] = v;
  }
  VerifyInput in = specialize(entry.build(connection), values);
  if (entry.name == "h8") {
    // mu must be real: the fixed value of mu^2 cannot be negative.
    const Rational mu2 = in.reductions.front().replacement.evaluate({});
    if (mu2 < 0)
      throw PreconditionFailure("no real mu: the anomaly constraint forces mu^2 = " +
                                to_string(mu2));
    if (connection == ConnectionChoice::LeviCivita && values["a"] == 1 && values["b"] == 1 &&
        values["c"] == 1) {
      auto extra = h8_unit_levi_civita_golden(Scalar(values["lambda"]));
      in.golden.insert(in.golden.end(), extra.begin(), extra.end());
    }
  }
  return in;
}

}  // namespace hetero
