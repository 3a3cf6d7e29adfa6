#include "hetero/identities.hpp"

#include "hetero/error.hpp"

namespace hetero {

namespace {

struct Dense3 {
  int n;
  std::vector<Scalar> v;
  Dense3(const KForm& f) : n(f.dim()), v(dense_components(f)) {}
  const Scalar& operator()(int i, int j, int k) const {
    return v[static_cast<std::size_t>(((i - 1) * n + (j - 1)) * n + (k - 1))];
  }
};

struct Dense4 {
  int n;
  std::vector<Scalar> v;
  Dense4(const KForm& f) : n(f.dim()), v(dense_components(f)) {}
  const Scalar& operator()(int i, int j, int k, int l) const {
    return v[static_cast<std::size_t>((((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1))];
  }
};

void add_product(Scalar& acc, const Scalar& x, const Scalar& y) {
  if (!x.is_zero() && !y.is_zero()) acc += x * y;
}

std::size_t count_nonzero(const ScalarMatrix& m) {
  std::size_t count = 0;
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j)
      if (!m(i, j).is_zero()) ++count;
  return count;
}

IdentityResult matrix_result(std::string name, std::string statement, const ScalarMatrix& residual) {
  IdentityResult r{std::move(name), std::move(statement), false, count_nonzero(residual)};
  r.zero = r.nonzero_entries == 0;
  return r;
}

// sum_s (nabla_{E_s} T)_{s m p}
ScalarMatrix divergence(const std::vector<KForm>& derivative) {
  const int n = static_cast<int>(derivative.size());
  ScalarMatrix out(n);
  for (int s = 1; s <= n; ++s) {
    Dense3 d(derivative[s - 1]);
    for (int m = 1; m <= n; ++m)
      for (int p = 1; p <= n; ++p) out(m, p) += d(s, m, p);
  }
  return out;
}

}  // namespace

TorsionGeometry TorsionGeometry::build(const LieAlgebraModel& model, const KForm& torsion,
                                       const KForm& psi) {
  if (torsion.dim() != model.dim() || psi.dim() != model.dim())
    throw DimensionMismatch("torsion, psi and model dimensions differ");
  TorsionGeometry g;
  g.model = model;
  g.torsion = torsion;
  g.psi = psi;
  g.levi_civita = hetero::levi_civita(model);
  g.plus = with_torsion(model, g.levi_civita, torsion, 1);
  g.curvature_lc = curvature(model, g.levi_civita);
  g.curvature_plus = curvature(model, g.plus);
  g.ricci_lc = ricci(g.curvature_lc);
  g.ricci_plus = ricci(g.curvature_plus);
  g.d_torsion = ce_differential(model, torsion);
  g.plus_derivative_of_torsion = covariant_derivative(model, g.plus, torsion);
  return g;
}

ScalarMatrix contract_with_psi(const KForm& four_form, const KForm& psi) {
  const int n = psi.dim();
  Dense4 x(four_form);
  Dense4 p(psi);
  ScalarMatrix out(n);
  for (int m = 1; m <= n; ++m)
    for (int q = 1; q <= n; ++q)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) add_product(out(m, q), x(m, j, k, l), p(j, k, l, q));
  return out;
}

ScalarMatrix torsion_square(const KForm& torsion) {
  const int n = torsion.dim();
  Dense3 t(torsion);
  ScalarMatrix out(n);
  for (int m = 1; m <= n; ++m)
    for (int p = 1; p <= n; ++p)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) add_product(out(m, p), t(m, i, j), t(p, i, j));
  return out;
}

std::vector<IdentityResult> identity_suite(const TorsionGeometry& g) {
  const int n = g.model.dim();
  const Scalar quarter(Rational(1, 4));
  const Scalar half(Rational(1, 2));
  const ScalarMatrix tt = torsion_square(g.torsion);
  const ScalarMatrix div_plus = divergence(g.plus_derivative_of_torsion);
  const ScalarMatrix div_lc = divergence(covariant_derivative(g.model, g.levi_civita, g.torsion));
  const ScalarMatrix& ric_g = g.ricci_lc;
  const ScalarMatrix& ric_p = g.ricci_plus;
  std::vector<IdentityResult> out;

  out.push_back(matrix_result("ricci-torsion-relation",
                              "Ric^g = Ric+ + 1/4 T.T - 1/2 div+ T",
                              ric_g - ric_p - quarter * tt + half * div_plus));

  ScalarMatrix skew = ric_p - ric_p.transpose() - div_plus;
  auto skew_result = matrix_result("ricci-skew-part", "Ric+ - (Ric+)^t = div+ T = div^g T",
                                   skew);
  ScalarMatrix div_gap = div_plus - div_lc;
  skew_result.nonzero_entries += count_nonzero(div_gap);
  skew_result.zero = skew_result.nonzero_entries == 0;
  out.push_back(skew_result);

  out.push_back(matrix_result("ricci-symmetric-part", "Ric^g = sym(Ric+) + 1/4 T.T",
                              ric_g - ric_p.symmetrized() - quarter * tt));

  const Tensor4 r = curvature_tensor(g.curvature_plus);
  Dense4 psi(g.psi);
  {
    ScalarMatrix residual(n);
    for (int m = 1; m <= n; ++m)
      for (int q = 1; q <= n; ++q) {
        Scalar sum;
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) add_product(sum, r(m, j, k, l), psi(j, k, l, q));
        residual(m, q) = Scalar(2L) * ric_p(m, q) - sum;
      }
    out.push_back(matrix_result("ricci-psi-contraction", "2 Ric+_mn = R+_mjkl Psi_jkln", residual));
  }

  Dense3 t(g.torsion);
  Dense4 dt(g.d_torsion);
  std::vector<Dense3> nabla_t;
  for (const auto& f : g.plus_derivative_of_torsion) nabla_t.emplace_back(f);
  const Scalar three_halves(Rational(3, 2));
  std::size_t bianchi_sym = 0;
  std::size_t bianchi_first = 0;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m) {
          Scalar sigma;
          for (int s = 1; s <= n; ++s) {
            add_product(sigma, t(j, k, s), t(l, m, s));
            add_product(sigma, t(k, l, s), t(j, m, s));
            add_product(sigma, t(l, j, s), t(k, m, s));
          }
          Scalar cyclic = r(j, k, l, m) + r(k, l, j, m) + r(l, j, k, m);
          Scalar first = cyclic - dt(j, k, l, m) + sigma - nabla_t[m - 1](j, k, l);
          if (!first.is_zero()) ++bianchi_first;
          Scalar swapped = r(m, j, k, l) + r(m, k, l, j) + r(m, l, j, k);
          Scalar sym = cyclic - swapped - three_halves * dt(j, k, l, m) + sigma;
          if (!sym.is_zero()) ++bianchi_sym;
        }
  out.push_back({"bianchi-pair-symmetry",
                 "cyclic R+_jklm - cyclic R+_mjkl = 3/2 dT_jklm - sigma^T_jklm",
                 bianchi_sym == 0, bianchi_sym});
  out.push_back({"bianchi-first",
                 "cyclic R+_jklm = dT_jklm - sigma^T_jklm + nabla+_m T_jkl",
                 bianchi_first == 0, bianchi_first});

  const ScalarMatrix dt_psi = contract_with_psi(g.d_torsion, g.psi);
  ScalarMatrix nabla_psi(n);
  for (int m = 1; m <= n; ++m)
    for (int q = 1; q <= n; ++q)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) add_product(nabla_psi(m, q), nabla_t[m - 1](j, k, l), psi(j, k, l, q));
  const Scalar twelfth(Rational(1, 12));
  const Scalar sixth(Rational(1, 6));
  out.push_back(matrix_result("ricci-from-torsion",
                              "Ric+_mn = 1/12 dT_mjkl Psi_jkln + 1/6 nabla+_m T_jkl Psi_jkln",
                              ric_p - twelfth * dt_psi - sixth * nabla_psi));
  out.push_back(matrix_result("ricci-constant-dilaton", "Ric+_mn = 1/12 dT_mjkl Psi_jkln",
                              ric_p - twelfth * dt_psi));

  Scalar scal;
  for (int i = 1; i <= n; ++i) scal += ric_g(i, i);
  Scalar norm;
  for (int i = 1; i <= n; ++i) norm += tt(i, i);
  Scalar gap = scal + twelfth * norm;
  out.push_back({"scalar-curvature", "s^g = -1/12 |T|^2", gap.is_zero(), gap.is_zero() ? 0U : 1U});
  return out;
}

}  // namespace hetero
