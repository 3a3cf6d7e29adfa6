#include "hetero/verifier.hpp"

#include <future>
#include <numeric>
#include <sstream>

#include "hetero/error.hpp"

namespace hetero {

namespace {

// Rows R(i,j,.,.) of a curvature tensor, flattened over all (a,b).
class PairRows {
 public:
  explicit PairRows(const Curvature& curvature) : n_(curvature.dim()) {
    rows_.assign(static_cast<std::size_t>(n_ * n_), {});
    const Tensor4 r = curvature_tensor(curvature);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        auto& row = rows_[index(i, j)];
        for (int a = 1; a <= n_; ++a)
          for (int b = 1; b <= n_; ++b)
            if (!r(i, j, a, b).is_zero()) row.emplace_back((a - 1) * n_ + (b - 1), r(i, j, a, b));
      }
  }

  // sum_ab R(i,j,a,b) R(k,l,a,b)
  Scalar dot(int i, int j, int k, int l) const {
    const auto& x = rows_[index(i, j)];
    const auto& y = rows_[index(k, l)];
    Scalar out;
    auto p = x.begin();
    auto q = y.begin();
    while (p != x.end() && q != y.end()) {
      if (p->first < q->first) {
        ++p;
      } else if (q->first < p->first) {
        ++q;
      } else {
        out += p->second * q->second;
        ++p;
        ++q;
      }
    }
    return out;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  int n_;
  std::vector<std::vector<std::pair<int, Scalar>>> rows_;
};

// sum_{m,a,b} R(i,m,a,b) R(j,m,a,b)
ScalarMatrix curvature_square(const PairRows& rows, int n) {
  ScalarMatrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Scalar sum;
      for (int m = 1; m <= n; ++m) sum += rows.dot(i, m, j, m);
      out(i, j) = sum;
      out(j, i) = sum;
    }
  return out;
}

ScalarMatrix reduce(const ScalarMatrix& m, const std::vector<PowerReduction>& reductions) {
  if (reductions.empty()) return m;
  ScalarMatrix out(m.size());
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) out(i, j) = reduce(m(i, j), reductions);
  return out;
}

std::string blade_label(Blade b) {
  std::string s = "e";
  for (int i : blade_indices(b)) s += std::to_string(i);
  return s;
}

// Scales numerator/denominator so the denominator has coprime integer
// coefficients and a positive constant term (or positive leading printed term).
void normalize_ratio(Scalar& num, Scalar& den) {
  if (den.is_zero()) return;
  mpz_class lcm_den = 1;
  mpz_class gcd_num = 0;
  for (const auto& t : den.terms()) {
    mpz_class d = t.coefficient.get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    mpz_class nn = abs(t.coefficient.get_num());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), nn.get_mpz_t());
  }
  Rational scale(lcm_den, gcd_num);
  scale.canonicalize();
  bool flip;
  const auto& first = den.terms().front();
  if (first.monomial.is_constant()) {
    flip = first.coefficient < 0;
  } else {
    flip = den.to_string().front() == '-';
  }
  if (flip) scale = -scale;
  num = Scalar(scale) * num;
  den = Scalar(scale) * den;
}

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace

Scalar reduce(const Scalar& s, const std::vector<PowerReduction>& reductions) {
  Scalar out = s;
  for (const auto& r : reductions) out = out.reduce_power(r.name, r.power, r.replacement);
  return out;
}

KForm reduce(const KForm& f, const std::vector<PowerReduction>& reductions) {
  if (reductions.empty()) return f;
  return f.map_coefficients([&](const Scalar& c) { return reduce(c, reductions); });
}

const char* to_string(AlphaPrime::Status status) {
  switch (status) {
    case AlphaPrime::Status::Ratio: return "ratio";
    case AlphaPrime::Status::Any: return "any";
    case AlphaPrime::Status::None: return "none";
  }
  return "none";
}

const char* to_string(ConnectionChoice choice) {
  return choice == ConnectionChoice::Plus ? "plus" : "levi-civita";
}

AlphaPrime anomaly_solve(const KForm& d_torsion, const KForm& q1_r, const KForm& q1_a,
                         const std::vector<PowerReduction>& reductions) {
  if (d_torsion.degree() != 4 || q1_r.degree() != 4 || q1_a.degree() != 4)
    throw DimensionMismatch("anomaly_solve needs 4-forms");
  if (d_torsion.dim() != q1_r.dim() || q1_r.dim() != q1_a.dim())
    throw DimensionMismatch("anomaly_solve needs forms of one dimension");
  const KForm dt = reduce(d_torsion, reductions);
  const KForm diff = reduce(q1_r - q1_a, reductions);
  AlphaPrime out;
  if (diff.is_zero()) {
    if (dt.is_zero()) {
      out.status = AlphaPrime::Status::Any;
      out.diagnostic = "dT and the q1 difference both vanish";
    } else {
      out.diagnostic = "q1 difference vanishes but dT does not (first term " +
                       blade_label(dt.terms().begin()->first) + ")";
    }
    return out;
  }
  const auto& [b0, d0] = *diff.terms().begin();
  const Scalar t0 = dt.coefficient(b0);
  std::vector<Blade> blades;
  for (const auto& [b, c] : dt.terms()) blades.push_back(b);
  for (const auto& [b, c] : diff.terms()) blades.push_back(b);
  for (Blade b : blades) {
    Scalar cross = reduce(dt.coefficient(b) * d0 - t0 * diff.coefficient(b), reductions);
    if (!cross.is_zero()) {
      out.diagnostic = "dT and the q1 difference are not proportional: " + blade_label(b0) +
                       " against " + blade_label(b);
      return out;
    }
  }
  out.status = AlphaPrime::Status::Ratio;
  Scalar num = Scalar(4L) * t0;
  Scalar den = d0;
  if (t0.is_zero()) {
    num = Scalar{};
    den = Scalar(1L);
  } else if (auto q = d0.exact_divide(t0)) {
    num = Scalar(4L);
    den = *q;
  } else if (auto q2 = num.exact_divide(d0)) {
    num = *q2;
    den = Scalar(1L);
  }
  normalize_ratio(num, den);
  out.numerator = num;
  out.denominator = den;
  return out;
}

std::vector<PositivityCheck> alpha_positivity(const AlphaPrime& alpha,
                                              const std::vector<Assignment>& points) {
  std::vector<PositivityCheck> out;
  if (alpha.status != AlphaPrime::Status::Ratio) return out;
  for (const auto& p : points) {
    PositivityCheck check;
    check.point = p;
    Rational den = alpha.denominator.evaluate(p);
    if (den != 0) {
      Rational v = alpha.numerator.evaluate(p) / den;
      check.value = v;
      check.positive = v > 0;
    }
    out.push_back(std::move(check));
  }
  return out;
}

ScalarMatrix quadratic_condition_residual(const Curvature& curvature, const KForm& psi) {
  const int n = curvature.dim();
  if (psi.dim() != n || psi.degree() != 4) throw DimensionMismatch("psi must be a 4-form");
  PairRows rows(curvature);
  const auto p = dense_components(psi);
  auto at = [n](int j, int k, int l, int q) {
    return static_cast<std::size_t>((((j - 1) * n + (k - 1)) * n + (l - 1)) * n + (q - 1));
  };
  // Q(m,j,k,l) for all index tuples, memoized on first use.
  std::vector<std::optional<Scalar>> q_cache(static_cast<std::size_t>(n * n * n * n));
  auto Q = [&](int m, int j, int k, int l) -> const Scalar& {
    auto& slot = q_cache[at(m, j, k, l)];
    if (!slot) slot = rows.dot(m, j, k, l);
    return *slot;
  };
  const Scalar sixth(Rational(1, 6));
  ScalarMatrix out(n);
  for (int m = 1; m <= n; ++m)
    for (int q = 1; q <= n; ++q) {
      Scalar sum;
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            const Scalar& w = p[at(j, k, l, q)];
            if (w.is_zero()) continue;
            Scalar s = Q(m, j, k, l) + Q(m, k, l, j) + Q(m, l, j, k);
            if (!s.is_zero()) sum += s * w;
          }
      Scalar rr;
      for (int x = 1; x <= n; ++x) rr += rows.dot(m, x, q, x);
      out(m, q) = sixth * sum + rr;
    }
  return out;
}

MotionResiduals motion_residuals(const TorsionGeometry& g, const Curvature& gravity,
                                 const KForm& q1_gravity, const Connection& instanton,
                                 const Curvature& instanton_curvature, const Scalar& numerator,
                                 const Scalar& denominator,
                                 const std::vector<PowerReduction>& reductions) {
  (void)instanton;
  const int n = g.model.dim();
  MotionResiduals out;
  const Scalar quarter(Rational(1, 4));
  const Scalar num_eighth = Scalar(Rational(1, 8)) * numerator;

  const PairRows rows_r(gravity);
  const PairRows rows_f(instanton_curvature);
  const ScalarMatrix ff_r = curvature_square(rows_r, n);
  const ScalarMatrix ff_f = curvature_square(rows_f, n);
  const ScalarMatrix tt = torsion_square(g.torsion);
  out.einstein = reduce(denominator * (g.ricci_lc - quarter * tt) - num_eighth * (ff_f - ff_r),
                        reductions);

  // Divergence of T for the Levi-Civita connection, and the codifferential.
  const auto nabla_g = covariant_derivative(g.model, g.levi_civita, g.torsion);
  out.torsion_divergence = ScalarMatrix(n);
  for (int i = 1; i <= n; ++i) {
    const auto d = dense_components(nabla_g[i - 1]);
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        out.torsion_divergence(j, k) += d[static_cast<std::size_t>(((i - 1) * n + (j - 1)) * n + (k - 1))];
  }
  out.torsion_divergence = reduce(out.torsion_divergence, reductions);
  KForm delta = Scalar(long(codifferential_sign(n, 3))) *
                hodge_star(ce_differential(g.model, hodge_star(g.torsion)));
  out.codifferential = reduce(-delta, reductions);
  out.codifferential_agrees = true;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      if (!(out.torsion_divergence(j, k) == component(out.codifferential, {j, k})))
        out.codifferential_agrees = false;

  // Divergence of the instanton curvature for nabla+ on all indices.
  const Tensor4 f = curvature_tensor(instanton_curvature);
  std::vector<Scalar> sigma(static_cast<std::size_t>(n * n * n));
  auto sig = [&](int s, int j, int i) -> Scalar& {  // sigma_j^s(E_i)
    return sigma[static_cast<std::size_t>(((s - 1) * n + (j - 1)) * n + (i - 1))];
  };
  for (int s = 1; s <= n; ++s)
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i) sig(s, j, i) = g.plus.value(s, j, i);
  out.instanton_divergence.assign(static_cast<std::size_t>(n * n * n), Scalar{});
  for (int j = 1; j <= n; ++j)
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        Scalar v;
        for (int i = 1; i <= n; ++i)
          for (int s = 1; s <= n; ++s) {
            const Scalar& si = sig(s, i, i);
            const Scalar& sj = sig(s, j, i);
            const Scalar& sx = sig(s, x, i);
            const Scalar& sy = sig(s, y, i);
            if (!si.is_zero()) v -= si * f(s, j, x, y);
            if (!sj.is_zero()) v -= sj * f(i, s, x, y);
            if (!sx.is_zero()) v -= sx * f(i, j, s, y);
            if (!sy.is_zero()) v -= sy * f(i, j, x, s);
          }
        out.instanton_divergence[static_cast<std::size_t>(((j - 1) * n + (x - 1)) * n + (y - 1))] =
            reduce(v, reductions);
      }

  // Second route: den * sym[(1/12)(dT - alpha'/4 D) Psi + (1/6)(nabla+ T) Psi]
  //             + alpha'/8 * den * sym[quadratic residual(R) - quadratic residual(F)].
  const KForm diff = q1_gravity - pontrjagin_q1(instanton_curvature);
  const ScalarMatrix dt_psi = contract_with_psi(g.d_torsion, g.psi);
  const ScalarMatrix diff_psi = contract_with_psi(diff, g.psi);
  ScalarMatrix nabla_psi(n);
  const auto psi = dense_components(g.psi);
  for (int m = 1; m <= n; ++m) {
    const auto d = dense_components(g.plus_derivative_of_torsion[m - 1]);
    for (int q = 1; q <= n; ++q)
      for (std::size_t r = 0; r < d.size(); ++r) {
        if (d[r].is_zero()) continue;
        const Scalar& w = psi[r * static_cast<std::size_t>(n) + (q - 1)];
        if (!w.is_zero()) nabla_psi(m, q) += d[r] * w;
      }
  }
  const ScalarMatrix anomaly_part =
      Scalar(Rational(1, 12)) * denominator * dt_psi - Scalar(Rational(1, 48)) * numerator * diff_psi;
  const ScalarMatrix parallel_part = Scalar(Rational(1, 6)) * denominator * nabla_psi;
  const ScalarMatrix quad = quadratic_condition_residual(gravity, g.psi) -
                            quadratic_condition_residual(instanton_curvature, g.psi);
  out.einstein_chain =
      reduce((anomaly_part + parallel_part).symmetrized() + num_eighth * quad.symmetrized(), reductions);
  out.chain_agrees = out.einstein_chain == out.einstein;
  return out;
}

bool VerificationReport::passed() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

namespace {

std::size_t count_nonzero(const ScalarMatrix& m) {
  std::size_t c = 0;
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j)
      if (!m(i, j).is_zero()) ++c;
  return c;
}

std::optional<std::pair<int, int>> parse_pair(const std::string& id, const std::string& prefix) {
  if (id.rfind(prefix, 0) != 0) return std::nullopt;
  std::istringstream in(id.substr(prefix.size()));
  int i = 0;
  int j = 0;
  char colon = 0;
  if (!(in >> i >> colon >> j) || colon != ':') return std::nullopt;
  return std::pair{i, j};
}

}  // namespace

VerificationReport verify_model(const VerifyInput& input) {
  const LieAlgebraModel& model = input.model;
  const GStructure& structure = input.structure;
  if (model.dim() != structure.dim())
    throw DimensionMismatch("model and structure dimensions differ");
  require_closure(model);
  const int n = model.dim();
  const auto& red = input.reductions;

  VerificationReport rep;
  rep.name = input.name;
  rep.dim = n;
  rep.params = input.parameter_order.empty() ? model.params() : input.parameter_order;
  const auto& order = rep.params;
  rep.kind = structure.kind();
  rep.connection = input.connection;
  rep.conventions = {
      {"bracket", "[E_i,E_j] = -sum_k a^k_ij E_k with a^k_ij = de^k(E_i,E_j)"},
      {"curvature", "Omega_j^i = d sigma_j^i + sigma_k^i ^ sigma_j^k, R(i,j,k,l) = Omega_k^l(E_i,E_j)"},
      {"ricci", "Ric_mn = sum_i R(i,m,n,i)"},
      {"hodge", "vol = +e^{1..n}"},
      {"pontrjagin", "q1 = sum_{i<j} Omega_j^i ^ Omega_j^i = 8 pi^2 p1"},
      {"torsion_connection", "sigma+_j^i(E_k) = sigma^g_j^i(E_k) - 1/2 T(E_i,E_j,E_k)"},
      {"quadratic_condition",
       "(1/6) sum (Q_mjkl + Q_mklj + Q_mljk) Psi_jkln + sum R_mpqr R_npqr, Q_mjkl = sum_ab R_mjab R_klab"},
      {"einstein_trace", "F.F and R.R summed over ordered pairs (a,b) and scaled by alpha'/8"},
      {"instanton_divergence", "nabla+ acts on all four indices of F_ijab; divergence over i"},
      {"lee_form_spin7", "theta8 = 1/7 *(delta Phi ^ Phi), delta = -*d*"},
  };

  // Structure class and torsion.
  if (structure.kind() == StructureKind::G2) {
    rep.g2_class = classify_g2(model, structure);
  } else {
    rep.spin7_class = classify_spin7(model, structure);
  }
  rep.lee_form = reduce(lee_form(model, structure), red);
  rep.lee_forms_agree = rep.lee_form == reduce(lee_form_alternative(model, structure), red);
  rep.torsion = reduce(torsion_3form(model, structure), red);
  const TorsionGeometry geometry = TorsionGeometry::build(model, rep.torsion, structure.psi());
  rep.d_torsion = reduce(geometry.d_torsion, red);
  try {
    rep.torsion_roundtrip = reduce(connection_torsion(model, geometry.plus), red) == rep.torsion;
  } catch (const NonSkewTorsion&) {
    rep.torsion_roundtrip = false;
  }
  rep.nabla_plus_torsion_zero = true;
  for (const auto& f : geometry.plus_derivative_of_torsion)
    if (!reduce(f, red).is_zero()) rep.nabla_plus_torsion_zero = false;

  const Curvature& gravity =
      input.connection == ConnectionChoice::Plus ? geometry.curvature_plus : geometry.curvature_lc;
  rep.q1_gravity = reduce(pontrjagin_q1(gravity), red);

  // Instanton.
  rep.instanton_name = input.instanton_name;
  rep.instanton_present = input.instanton.has_value();
  const Connection instanton = input.instanton.value_or(Connection(n));
  if (instanton.dim() != n) throw DimensionMismatch("instanton and model dimensions differ");
  const Curvature instanton_curvature = curvature(model, instanton);

  auto identities_task =
      std::async(std::launch::async, [&geometry] { return identity_suite(geometry); });
  auto quadratic_task = std::async(std::launch::async, [&] {
    return reduce(quadratic_condition_residual(gravity, structure.psi()), red);
  });
  auto instanton_task = std::async(std::launch::async, [&] {
    return is_instanton(instanton_curvature, structure);
  });

  rep.q1_instanton = reduce(pontrjagin_q1(instanton_curvature), red);
  rep.alpha_prime = anomaly_solve(rep.d_torsion, rep.q1_gravity, rep.q1_instanton, red);
  std::vector<Assignment> points = input.eval_points;
  if (points.empty() && rep.alpha_prime.status == AlphaPrime::Status::Ratio &&
      rep.alpha_prime.numerator.is_constant() && rep.alpha_prime.denominator.is_constant())
    points.push_back({});
  rep.positivity = alpha_positivity(rep.alpha_prime, points);

  Scalar num;
  Scalar den(1L);
  if (rep.alpha_prime.status == AlphaPrime::Status::Ratio) {
    num = rep.alpha_prime.numerator;
    den = rep.alpha_prime.denominator;
  }
  const MotionResiduals motion = motion_residuals(geometry, gravity, rep.q1_gravity, instanton,
                                                  instanton_curvature, num, den, red);
  rep.einstein = motion.einstein;
  rep.einstein_zero = motion.einstein.is_zero();
  rep.torsion_divergence_zero = motion.torsion_divergence.is_zero();
  rep.instanton_divergence_zero = all_zero(motion.instanton_divergence);
  rep.codifferential_agrees = motion.codifferential_agrees;
  rep.chain_agrees = motion.chain_agrees;

  rep.instanton_ok = instanton_task.get();
  rep.quadratic_condition = quadratic_task.get();
  rep.quadratic_condition_zero = rep.quadratic_condition.is_zero();
  rep.quadratic_condition_symmetric = rep.quadratic_condition.is_symmetric();
  rep.identities = identities_task.get();

  // Golden values.
  for (const auto& gv : input.golden) {
    GoldenOutcome outcome;
    outcome.id = gv.id;
    KForm recomputed;
    bool known = true;
    if (gv.id == "alpha_prime") {
      const KForm expected_num = reduce(gv.expected, red);
      const Scalar expected_den = reduce(gv.denominator, red);
      outcome.expected = expected_num.to_string(order) + " / (" + expected_den.to_string(order) + ")";
      if (rep.alpha_prime.status == AlphaPrime::Status::Ratio) {
        outcome.recomputed = num.to_string(order) + " / (" + den.to_string(order) + ")";
        outcome.matches =
            reduce(expected_num.coefficient(0) * den - num * expected_den, red).is_zero();
      } else {
        outcome.recomputed = to_string(rep.alpha_prime.status);
      }
      rep.golden.push_back(std::move(outcome));
      continue;
    }
    if (gv.id == "T") {
      recomputed = rep.torsion;
    } else if (gv.id == "dT") {
      recomputed = rep.d_torsion;
    } else if (gv.id == "q1_plus") {
      recomputed = reduce(pontrjagin_q1(geometry.curvature_plus), red);
    } else if (gv.id == "q1_lc") {
      recomputed = reduce(pontrjagin_q1(geometry.curvature_lc), red);
    } else if (gv.id == "q1_instanton") {
      recomputed = rep.q1_instanton;
    } else if (gv.id == "q1_difference") {
      recomputed = rep.q1_gravity - rep.q1_instanton;
    } else if (gv.id == "scalar_curvature_lc") {
      recomputed = KForm::constant(n, reduce(scalar_curvature(geometry.curvature_lc), red));
    } else if (gv.id == "lee_form") {
      recomputed = rep.lee_form;
    } else if (auto p = parse_pair(gv.id, "omega_plus:")) {
      recomputed = reduce(geometry.curvature_plus.omega(p->first, p->second), red);
    } else if (auto p2 = parse_pair(gv.id, "omega_lc:")) {
      recomputed = reduce(geometry.curvature_lc.omega(p2->first, p2->second), red);
    } else if (auto p3 = parse_pair(gv.id, "omega_instanton:")) {
      recomputed = reduce(instanton_curvature.omega(p3->first, p3->second), red);
    } else {
      known = false;
    }
    const KForm expected = reduce(gv.expected, red);
    outcome.expected = expected.to_string(order);
    if (known) {
      outcome.recomputed = recomputed.to_string(order);
      outcome.matches = recomputed == expected;
      if (gv.printed) {
        const KForm printed = reduce(*gv.printed, red);
        if (!(printed == recomputed))
          rep.discrepancies.push_back(
              {gv.id, printed.to_string(order), recomputed.to_string(order), gv.note});
      }
    } else {
      outcome.recomputed = "unknown quantity";
    }
    rep.golden.push_back(std::move(outcome));
  }

  // Verdicts.
  auto add = [&rep](std::string check, bool pass, std::string detail) {
    rep.verdicts.push_back({std::move(check), pass, std::move(detail)});
  };
  if (rep.g2_class) {
    add("structure", rep.g2_class->cocalibrated && rep.g2_class->pure_type,
        std::string("cocalibrated=") + (rep.g2_class->cocalibrated ? "yes" : "no") +
            " pure_type=" + (rep.g2_class->pure_type ? "yes" : "no"));
  } else {
    add("structure", rep.spin7_class->balanced,
        std::string("balanced=") + (rep.spin7_class->balanced ? "yes" : "no"));
  }
  add("torsion-connection", rep.torsion_roundtrip,
      rep.torsion_roundtrip ? "nabla+ has torsion T" : "torsion of nabla+ differs from T");
  add("instanton", rep.instanton_ok,
      rep.instanton_present ? (rep.instanton_ok ? "curvature in the structure algebra"
                                                : "curvature leaves the structure algebra")
                            : "no instanton supplied; flat connection used");
  {
    bool ok = rep.alpha_prime.status != AlphaPrime::Status::None;
    std::string detail = rep.alpha_prime.diagnostic;
    if (rep.alpha_prime.status == AlphaPrime::Status::Ratio) {
      detail = "alpha' = " + num.to_string(order) +
               (den == Scalar(1L) ? "" : " / (" + den.to_string(order) + ")");
      if (rep.positivity.empty()) {
        detail += "; positivity not evaluated";
      } else {
        for (const auto& c : rep.positivity)
          if (!c.positive) ok = false;
        detail += ok ? "; positive at every evaluation point" : "; not positive at some evaluation point";
      }
    }
    add("anomaly", ok, detail);
  }
  add("quadratic-condition", rep.quadratic_condition_zero,
      std::to_string(count_nonzero(rep.quadratic_condition)) + " nonzero entries");
  add("equations-of-motion",
      rep.einstein_zero && rep.torsion_divergence_zero && rep.instanton_divergence_zero,
      std::string("einstein=") + (rep.einstein_zero ? "0" : "nonzero") +
          " torsion-divergence=" + (rep.torsion_divergence_zero ? "0" : "nonzero") +
          " instanton-divergence=" + (rep.instanton_divergence_zero ? "0" : "nonzero"));
  {
    std::size_t failed = 0;
    for (const auto& r : rep.identities)
      if (!r.zero) ++failed;
    add("identities", failed == 0, std::to_string(failed) + " identities with nonzero residual");
  }
  add("consistency", rep.chain_agrees && rep.codifferential_agrees,
      std::string("einstein-two-routes=") + (rep.chain_agrees ? "agree" : "differ") +
          " divergence-codifferential=" + (rep.codifferential_agrees ? "agree" : "differ"));
  if (!input.golden.empty()) {
    std::size_t failed = 0;
    for (const auto& g : rep.golden)
      if (!g.matches) ++failed;
    add("golden", failed == 0, std::to_string(failed) + " golden values differ from recomputation");
  }
  return rep;
}

}  // namespace hetero
