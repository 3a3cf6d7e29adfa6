#include "hetero/gstructure.hpp"

#include <stdexcept>

#include "hetero/error.hpp"

namespace hetero {

namespace {

KForm e(int n, std::initializer_list<int> idx) { return KForm::basis(n, idx); }

Scalar rational(long num, long den) { return Scalar(Rational(num, den)); }

void require_kind(const GStructure& s, StructureKind kind, const char* what) {
  if (s.kind() != kind)
    throw DimensionMismatch(std::string(what) + " needs a " + to_string(kind) + " structure");
}

void require_dims(const LieAlgebraModel& model, const GStructure& s) {
  if (model.dim() != s.dim()) throw DimensionMismatch("model and structure dimensions differ");
}

}  // namespace

const char* to_string(StructureKind kind) {
  return kind == StructureKind::G2 ? "G2" : "Spin(7)";
}

ScalarMatrix metric_from_structure(StructureKind kind, const KForm& form) {
  const int n = form.dim();
  const auto dense = dense_components(form);
  std::size_t block = dense.size() / static_cast<std::size_t>(n);
  ScalarMatrix g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Scalar sum;
      for (std::size_t r = 0; r < block; ++r) {
        const Scalar& x = dense[(i - 1) * block + r];
        if (x.is_zero()) continue;
        const Scalar& y = dense[(j - 1) * block + r];
        if (!y.is_zero()) sum += x * y;
      }
      g(i, j) = sum;
    }
  }
  // Each index of Phi sits in 7 of its 14 terms, so the Spin(7) sum is 3! * 7 = 42.
  return rational(1, kind == StructureKind::G2 ? 6 : 42) * g;
}

GStructure GStructure::g2(KForm theta) {
  if (theta.dim() != 7 || theta.degree() != 3)
    throw DimensionMismatch("a G2 structure is a 3-form in dimension 7");
  ScalarMatrix g = metric_from_structure(StructureKind::G2, theta);
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      if (!(g(i, j) == Scalar(long(i == j))))
        throw PreconditionFailure("3-form does not induce the orthonormal frame metric");
  GStructure s;
  s.kind_ = StructureKind::G2;
  s.dual_ = hodge_star(theta);
  s.form_ = std::move(theta);
  return s;
}

GStructure GStructure::spin7(KForm phi) {
  if (phi.dim() != 8 || phi.degree() != 4)
    throw DimensionMismatch("a Spin(7) structure is a 4-form in dimension 8");
  if (!(hodge_star(phi) == phi)) throw PreconditionFailure("Spin(7) form is not self-dual");
  ScalarMatrix g = metric_from_structure(StructureKind::Spin7, phi);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      if (!(g(i, j) == Scalar(long(i == j))))
        throw PreconditionFailure("4-form does not induce the orthonormal frame metric");
  GStructure s;
  s.kind_ = StructureKind::Spin7;
  s.dual_ = phi;
  s.form_ = std::move(phi);
  return s;
}

KForm standard_theta() {
  const int n = 7;
  return e(n, {1, 2, 7}) - e(n, {2, 3, 6}) + e(n, {3, 4, 7}) + e(n, {5, 6, 7}) - e(n, {1, 4, 6}) -
         e(n, {2, 4, 5}) + e(n, {1, 3, 5});
}

KForm standard_spin7_form() {
  const int n = 8;
  return e(n, {1, 2, 3, 8}) - e(n, {1, 3, 4, 7}) + e(n, {1, 4, 5, 8}) + e(n, {1, 6, 7, 8}) -
         e(n, {1, 2, 5, 7}) - e(n, {1, 3, 5, 6}) + e(n, {1, 2, 4, 6}) + e(n, {4, 5, 6, 7}) +
         e(n, {2, 5, 6, 8}) + e(n, {2, 3, 6, 7}) + e(n, {2, 3, 4, 5}) + e(n, {3, 4, 6, 8}) +
         e(n, {2, 4, 7, 8}) - e(n, {3, 5, 7, 8});
}

GStructure standard_g2() { return GStructure::g2(standard_theta()); }
GStructure standard_spin7() { return GStructure::spin7(standard_spin7_form()); }

SU3Data SU3Data::standard() {
  const int n = 6;
  SU3Data d;
  d.F = e(n, {1, 2}) + e(n, {3, 4}) + e(n, {5, 6});
  d.psi_plus = e(n, {1, 3, 5}) - e(n, {1, 4, 6}) - e(n, {2, 3, 6}) - e(n, {2, 4, 5});
  d.psi_minus = e(n, {1, 3, 6}) + e(n, {1, 4, 5}) + e(n, {2, 3, 5}) - e(n, {2, 4, 6});
  return d;
}

std::pair<int, int> SU3Data::J(int index) {
  if (index < 1 || index > 6) throw IndexOutOfRange("SU(3) frame index outside 1..6");
  return index % 2 == 1 ? std::pair{index + 1, 1} : std::pair{index - 1, -1};
}

KForm SU3Data::g2_form() const {
  return wedge(shifted(F, 7), KForm::basis(7, {7})) + shifted(psi_plus, 7);
}

KForm lee_form(const LieAlgebraModel& model, const GStructure& s) {
  require_dims(model, s);
  if (s.kind() == StructureKind::G2) {
    KForm d_theta = ce_differential(model, s.form());
    return rational(-1, 3) * hodge_star(wedge(hodge_star(d_theta), s.form()));
  }
  const int sign = codifferential_sign(8, 4);
  KForm delta_phi = Scalar(long(sign)) * hodge_star(ce_differential(model, hodge_star(s.form())));
  return rational(1, 7) * hodge_star(wedge(delta_phi, s.form()));
}

KForm lee_form_alternative(const LieAlgebraModel& model, const GStructure& s) {
  require_dims(model, s);
  if (s.kind() == StructureKind::G2) {
    KForm d_dual = ce_differential(model, s.dual());
    return rational(1, 3) * hodge_star(wedge(hodge_star(d_dual), s.dual()));
  }
  KForm d_phi = ce_differential(model, s.form());
  return rational(1, 7) * hodge_star(wedge(hodge_star(d_phi), s.form()));
}

G2Class classify_g2(const LieAlgebraModel& model, const GStructure& s) {
  require_dims(model, s);
  require_kind(s, StructureKind::G2, "classify_g2");
  G2Class c;
  c.cocalibrated = ce_differential(model, s.dual()).is_zero();
  c.pure_type = wedge(ce_differential(model, s.form()), s.form()).is_zero();
  return c;
}

Spin7Class classify_spin7(const LieAlgebraModel& model, const GStructure& s) {
  require_dims(model, s);
  require_kind(s, StructureKind::Spin7, "classify_spin7");
  KForm d_phi = ce_differential(model, s.form());
  return Spin7Class{wedge(hodge_star(d_phi), s.form()).is_zero()};
}

KForm torsion_3form(const LieAlgebraModel& model, const GStructure& s) {
  require_dims(model, s);
  KForm d_form = ce_differential(model, s.form());
  KForm theta = lee_form(model, s);
  if (s.kind() == StructureKind::G2) {
    Scalar torsion_class = rational(1, 6) * inner(d_form, s.dual());
    return torsion_class * s.form() - hodge_star(d_form) + hodge_star(wedge(theta, s.form()));
  }
  return hodge_star(d_form) - rational(7, 6) * hodge_star(wedge(theta, s.form()));
}

bool in_subalgebra(const KForm& beta, const GStructure& s) {
  if (beta.degree() != 2 || beta.dim() != s.dim())
    throw DimensionMismatch("subalgebra membership needs a 2-form of the structure dimension");
  return hodge_star(wedge(beta, s.form())) == -beta;
}

bool in_subalgebra(const KForm& beta, const SU3Data& su3) {
  if (beta.degree() != 2 || beta.dim() != 6)
    throw DimensionMismatch("su(3) membership needs a 2-form in dimension 6");
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      auto [ji, si] = SU3Data::J(i);
      auto [jj, sj] = SU3Data::J(j);
      Scalar rotated = component(beta, {ji, jj});
      if (si * sj < 0) rotated = -rotated;
      if (!(component(beta, {i, j}) == rotated)) return false;
    }
  }
  return inner(beta, su3.F).is_zero();
}

bool is_instanton(const Curvature& curvature, const GStructure& s) {
  const int n = s.dim();
  if (curvature.dim() != n) throw DimensionMismatch("curvature and structure dimensions differ");
  const auto psi = dense_components(s.psi());
  const auto form = dense_components(s.form());
  auto at4 = [n](int p, int q, int m, int r) {
    return static_cast<std::size_t>((((p - 1) * n + (q - 1)) * n + (m - 1)) * n + (r - 1));
  };
  const Scalar half(Rational(1, 2));
  bool membership = true;
  bool contraction = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const KForm& omega = curvature.omega(i, j);
      if (omega.is_zero()) continue;
      if (!in_subalgebra(omega, s)) membership = false;
      const auto w = dense_components(omega);
      for (int m = 1; m <= n && contraction; ++m) {
        for (int r = m + 1; r <= n; ++r) {
          Scalar rhs;
          for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q) {
              const Scalar& x = w[(p - 1) * n + (q - 1)];
              if (x.is_zero()) continue;
              const Scalar& y = psi[at4(p, q, m, r)];
              if (!y.is_zero()) rhs += x * y;
            }
          if (!(w[(m - 1) * n + (r - 1)] == half * rhs)) {
            contraction = false;
            break;
          }
        }
      }
      if (s.kind() == StructureKind::G2 && contraction) {
        for (int p = 1; p <= n; ++p) {
          Scalar sum;
          for (int m = 1; m <= n; ++m)
            for (int r = 1; r <= n; ++r) {
              const Scalar& x = w[(m - 1) * n + (r - 1)];
              const Scalar& y = form[((m - 1) * n + (r - 1)) * n + (p - 1)];
              if (!x.is_zero() && !y.is_zero()) sum += x * y;
            }
          if (!sum.is_zero()) contraction = false;
        }
      }
    }
  }
  if (membership != contraction)
    throw std::logic_error("instanton membership and contraction characterizations disagree");
  return membership;
}

}  // namespace hetero
