#include "hetero/connection.hpp"

#include "hetero/error.hpp"

namespace hetero {

// --- ScalarMatrix -----------------------------------------------------------

bool ScalarMatrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool ScalarMatrix::is_symmetric() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix out(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out(i, j) = (*this)(j, i);
  return out;
}

ScalarMatrix ScalarMatrix::symmetrized() const {
  ScalarMatrix out(n_);
  const Scalar half(Rational(1, 2));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out(i, j) = half * ((*this)(i, j) + (*this)(j, i));
  return out;
}

ScalarMatrix ScalarMatrix::specialize(const Assignment& assignment) const {
  ScalarMatrix out = *this;
  for (auto& s : out.data_) s = s.specialize(assignment);
  return out;
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& other) {
  if (other.n_ != n_) throw DimensionMismatch("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ScalarMatrix& ScalarMatrix::operator-=(const ScalarMatrix& other) {
  if (other.n_ != n_) throw DimensionMismatch("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ScalarMatrix operator*(const Scalar& s, const ScalarMatrix& m) {
  ScalarMatrix out = m;
  for (auto& x : out.data_) x = s * x;
  return out;
}

// --- Connection -------------------------------------------------------------

Connection::Connection(int dim)
    : dim_(dim), sigma_(static_cast<std::size_t>(dim * dim), KForm(dim, 1)) {}

std::size_t Connection::slot(int upper, int lower) const {
  if (upper < 1 || upper > dim_ || lower < 1 || lower > dim_)
    throw IndexOutOfRange("connection index out of range");
  return static_cast<std::size_t>((upper - 1) * dim_ + (lower - 1));
}

const KForm& Connection::form(int upper, int lower) const { return sigma_[slot(upper, lower)]; }

void Connection::set(int upper, int lower, KForm form) {
  if (form.dim() != dim_ || form.degree() != 1)
    throw DimensionMismatch("connection entries must be 1-forms of the frame dimension");
  sigma_[slot(upper, lower)] = std::move(form);
}

void Connection::set_antisymmetric(int upper, int lower, const KForm& form) {
  if (upper == lower) throw Error("diagonal connection entries of a metric connection vanish");
  set(upper, lower, form);
  set(lower, upper, -form);
}

Scalar Connection::value(int upper, int lower, int direction) const {
  return component(form(upper, lower), {direction});
}

bool Connection::metric_compatible() const {
  for (int i = 1; i <= dim_; ++i)
    for (int j = i; j <= dim_; ++j)
      if (!(form(i, j) == -form(j, i))) return false;
  return true;
}

Connection Connection::specialize(const Assignment& assignment) const {
  Connection out = *this;
  for (auto& f : out.sigma_) f = f.specialize(assignment);
  return out;
}

Connection Connection::extended_by_circle() const {
  Connection out(dim_ + 1);
  for (int i = 1; i <= dim_; ++i)
    for (int j = 1; j <= dim_; ++j) out.set(i + 1, j + 1, shifted(form(i, j), dim_ + 1, 1));
  return out;
}

// --- Curvature --------------------------------------------------------------

Curvature::Curvature(int dim)
    : dim_(dim), omega_(static_cast<std::size_t>(dim * dim), KForm(dim, 2)) {}

std::size_t Curvature::slot(int upper, int lower) const {
  if (upper < 1 || upper > dim_ || lower < 1 || lower > dim_)
    throw IndexOutOfRange("curvature index out of range");
  return static_cast<std::size_t>((upper - 1) * dim_ + (lower - 1));
}

const KForm& Curvature::omega(int upper, int lower) const { return omega_[slot(upper, lower)]; }

void Curvature::set(int upper, int lower, KForm form) { omega_[slot(upper, lower)] = std::move(form); }

Scalar Curvature::R(int i, int j, int k, int l) const { return component(omega(l, k), {i, j}); }

bool Curvature::is_antisymmetric() const {
  for (int i = 1; i <= dim_; ++i)
    for (int j = i; j <= dim_; ++j)
      if (!(omega(i, j) == -omega(j, i))) return false;
  return true;
}

Curvature Curvature::specialize(const Assignment& assignment) const {
  Curvature out = *this;
  for (auto& f : out.omega_) f = f.specialize(assignment);
  return out;
}

// --- Operations -------------------------------------------------------------

Connection levi_civita(const LieAlgebraModel& model) {
  require_closure(model);
  const int n = model.dim();
  const Scalar half(Rational(1, 2));
  Connection out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      KForm f(n, 1);
      for (int k = 1; k <= n; ++k) {
        Scalar v = model.structure_constant(i, j, k) - model.structure_constant(k, i, j) +
                   model.structure_constant(j, k, i);
        if (!v.is_zero()) f.add_term(static_cast<Blade>(1U << (k - 1)), half * v);
      }
      out.set(i, j, std::move(f));
    }
  }
  return out;
}

Connection with_torsion(const LieAlgebraModel& model, const Connection& base, const KForm& torsion,
                        int sign) {
  if (torsion.degree() != 3) throw DimensionMismatch("torsion must be a 3-form");
  if (torsion.dim() != model.dim() || base.dim() != model.dim())
    throw DimensionMismatch("torsion, connection and model dimensions differ");
  if (sign != 1 && sign != -1) throw Error("torsion sign must be +1 or -1");
  const int n = model.dim();
  const Scalar coeff(Rational(-sign, 2));
  Connection out = base;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      KForm shift(n, 1);
      for (int k = 1; k <= n; ++k) {
        Scalar t = component(torsion, {i, j, k});
        if (!t.is_zero()) shift.add_term(static_cast<Blade>(1U << (k - 1)), coeff * t);
      }
      if (!shift.is_zero()) out.set(i, j, base.form(i, j) + shift);
    }
  }
  return out;
}

KForm connection_torsion(const LieAlgebraModel& model, const Connection& connection) {
  const int n = model.dim();
  if (connection.dim() != n) throw DimensionMismatch("connection and model dimensions differ");
  auto value = [&](int i, int j, int k) {
    return connection.value(k, j, i) - connection.value(k, i, j) + model.structure_constant(k, i, j);
  };
  KForm out(n, 3);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        Scalar t = value(i, j, k);
        if (j == k || i == k) {
          if (!t.is_zero()) throw NonSkewTorsion("torsion has a nonzero component with a repeated index");
          continue;
        }
        if (!(t == -value(i, k, j)))
          throw NonSkewTorsion("torsion is not totally skew-symmetric");
        if (i < j && j < k && !t.is_zero()) {
          const int idx[] = {i, j, k};
          out.add_term(blade_of(idx), t);
        }
      }
    }
  }
  return out;
}

Curvature curvature(const LieAlgebraModel& model, const Connection& connection) {
  const int n = model.dim();
  if (connection.dim() != n) throw DimensionMismatch("connection and model dimensions differ");
  Curvature out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      KForm omega = ce_differential(model, connection.form(i, j));
      for (int k = 1; k <= n; ++k) {
        const KForm& left = connection.form(i, k);
        const KForm& right = connection.form(k, j);
        if (left.is_zero() || right.is_zero()) continue;
        omega += wedge(left, right);
      }
      out.set(i, j, std::move(omega));
    }
  }
  return out;
}

KForm pontrjagin_q1(const Curvature& curvature) {
  const int n = curvature.dim();
  KForm out(n, 4);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const KForm& omega = curvature.omega(i, j);
      if (!omega.is_zero()) out += wedge(omega, omega);
    }
  }
  return out;
}

ScalarMatrix ricci(const Curvature& curvature) {
  const int n = curvature.dim();
  ScalarMatrix out(n);
  for (int m = 1; m <= n; ++m)
    for (int p = 1; p <= n; ++p)
      for (int i = 1; i <= n; ++i) out(m, p) += curvature.R(i, m, p, i);
  return out;
}

Scalar scalar_curvature(const Curvature& curvature) {
  ScalarMatrix ric = ricci(curvature);
  Scalar total;
  for (int i = 1; i <= ric.size(); ++i) total += ric(i, i);
  return total;
}

std::vector<KForm> covariant_derivative(const LieAlgebraModel& model, const Connection& connection,
                                        const KForm& form) {
  const int n = model.dim();
  if (connection.dim() != n || form.dim() != n)
    throw DimensionMismatch("connection, form and model dimensions differ");
  // nabla_X is the even derivation a -> -sum_{q,s} sigma_s^q(X) e^s ^ i_{E_q} a.
  std::vector<KForm> contracted;
  contracted.reserve(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q) contracted.push_back(interior(q, form));
  std::vector<KForm> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    KForm d(n, form.degree());
    for (int q = 1; q <= n; ++q) {
      if (contracted[q - 1].is_zero()) continue;
      for (int s = 1; s <= n; ++s) {
        Scalar sigma = connection.value(q, s, i);
        if (sigma.is_zero()) continue;
        d -= sigma * wedge(KForm::basis(n, {s}), contracted[q - 1]);
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

Tensor4 curvature_tensor(const Curvature& curvature) {
  const int n = curvature.dim();
  Tensor4 out(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      const KForm& omega = curvature.omega(l, k);
      for (const auto& [b, c] : omega.terms()) {
        auto idx = blade_indices(b);
        out(idx[0], idx[1], k, l) = c;
        out(idx[1], idx[0], k, l) = -c;
      }
    }
  }
  return out;
}

}  // namespace hetero
