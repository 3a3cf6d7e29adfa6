#pragma once

// Invariant linear connections on the frame bundle of a Lie algebra model.
//
// Index conventions (frame indices are 1-based everywhere):
//   nabla_X E_j = sum_s sigma_j^s(X) E_s          form(s, j) == sigma_j^s
//   Omega_j^i = d sigma_j^i + sigma_k^i ^ sigma_j^k
//   R(i,j,k,l) = Omega_k^l(E_i, E_j)
//   Ric_mn = sum_i R(i,m,n,i)
//   [E_i, E_j] = -sum_k a^k_ij E_k   (so that de^k(X,Y) = -e^k([X,Y]))

#include <vector>

#include "hetero/kform.hpp"
#include "hetero/lie_model.hpp"

namespace hetero {

/// Dense n x n matrix of Scalars with 1-based access.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  explicit ScalarMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n)) {}

  int size() const { return n_; }
  Scalar& operator()(int i, int j) { return data_[index(i, j)]; }
  const Scalar& operator()(int i, int j) const { return data_[index(i, j)]; }

  bool is_zero() const;
  bool is_symmetric() const;
  ScalarMatrix transpose() const;
  ScalarMatrix symmetrized() const;
  ScalarMatrix specialize(const Assignment& assignment) const;
  ScalarMatrix& operator+=(const ScalarMatrix& other);
  ScalarMatrix& operator-=(const ScalarMatrix& other);
  friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
  friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) { return a -= b; }
  friend ScalarMatrix operator*(const Scalar& s, const ScalarMatrix& m);
  bool operator==(const ScalarMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }
  int n_ = 0;
  std::vector<Scalar> data_;
};

class Connection {
 public:
  Connection() = default;
  explicit Connection(int dim);

  int dim() const { return dim_; }
  /// sigma_lower^upper as a 1-form.
  const KForm& form(int upper, int lower) const;
  void set(int upper, int lower, KForm form);
  /// sigma_lower^upper = form, sigma_upper^lower = -form.
  void set_antisymmetric(int upper, int lower, const KForm& form);
  /// sigma_lower^upper(E_direction).
  Scalar value(int upper, int lower, int direction) const;

  bool metric_compatible() const;
  Connection specialize(const Assignment& assignment) const;
  /// Prepends a flat frame direction: index i becomes i+1, row/column 1 zero.
  Connection extended_by_circle() const;

  bool operator==(const Connection&) const = default;

 private:
  std::size_t slot(int upper, int lower) const;
  int dim_ = 0;
  std::vector<KForm> sigma_;
};

class Curvature {
 public:
  Curvature() = default;
  explicit Curvature(int dim);

  int dim() const { return dim_; }
  /// Omega_lower^upper.
  const KForm& omega(int upper, int lower) const;
  void set(int upper, int lower, KForm form);
  /// R(i,j,k,l) = Omega_k^l(E_i, E_j).
  Scalar R(int i, int j, int k, int l) const;
  bool is_antisymmetric() const;
  Curvature specialize(const Assignment& assignment) const;

 private:
  std::size_t slot(int upper, int lower) const;
  int dim_ = 0;
  std::vector<KForm> omega_;
};

/// (sigma^g)_j^i(E_k) = 1/2 (a^i_jk - a^k_ij + a^j_ki). Requires d^2 = 0.
Connection levi_civita(const LieAlgebraModel& model);

/// sigma_j^i(E_k) = base_j^i(E_k) - sign/2 * T(E_i,E_j,E_k); the result has
/// torsion sign*T when base is torsion-free.
Connection with_torsion(const LieAlgebraModel& model, const Connection& base, const KForm& torsion,
                        int sign);

/// T(E_i,E_j,E_k) = g(nabla_i E_j - nabla_j E_i - [E_i,E_j], E_k). Throws
/// NonSkewTorsion if the tensor is not totally antisymmetric.
KForm connection_torsion(const LieAlgebraModel& model, const Connection& connection);

Curvature curvature(const LieAlgebraModel& model, const Connection& connection);

/// q1 = sum_{i<j} Omega_j^i ^ Omega_j^i = 8 pi^2 p1.
KForm pontrjagin_q1(const Curvature& curvature);

ScalarMatrix ricci(const Curvature& curvature);
Scalar scalar_curvature(const Curvature& curvature);

/// The n forms nabla_{E_i} a, i = 1..n (entry i-1). Coefficients are
/// constant, so only the connection terms contribute.
std::vector<KForm> covariant_derivative(const LieAlgebraModel& model, const Connection& connection,
                                        const KForm& form);

/// Dense rank-4 tensor with 1-based access; used for curvature-valued data.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), data_(static_cast<std::size_t>(n * n * n * n)) {}
  int size() const { return n_; }
  Scalar& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
  const Scalar& operator()(int i, int j, int k, int l) const { return data_[index(i, j, k, l)]; }

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return static_cast<std::size_t>((((i - 1) * n_ + (j - 1)) * n_ + (k - 1)) * n_ + (l - 1));
  }
  int n_ = 0;
  std::vector<Scalar> data_;
};

/// R(i,j,k,l) materialized densely.
Tensor4 curvature_tensor(const Curvature& curvature);

}  // namespace hetero
