#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hetero/kform.hpp"

namespace hetero {

/// Left-invariant geometry of a Lie group: an orthonormal coframe e^1..e^n and
/// its structure equations de^k = sum_{i<j} a^k_ij e^ij.
class LieAlgebraModel {
 public:
  LieAlgebraModel() = default;
  /// `d_of_frame[k-1]` is de^k. Does not check closure; see check_closure.
  LieAlgebraModel(int dim, std::vector<std::string> params, std::vector<KForm> d_of_frame);

  static LieAlgebraModel abelian(int dim, std::vector<std::string> params = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& params() const { return params_; }
  /// de^k, 1-based.
  const KForm& d_of_frame(int k) const;
  const std::vector<KForm>& differentials() const { return d_; }

  /// a^k_ij = de^k(E_i, E_j).
  Scalar structure_constant(int k, int i, int j) const;

  LieAlgebraModel specialize(const Assignment& assignment) const;

  bool operator==(const LieAlgebraModel&) const = default;

 private:
  int dim_ = 0;
  std::vector<std::string> params_;
  std::vector<KForm> d_;
};

/// Chevalley-Eilenberg differential: d(e^k) = de^k extended as an
/// antiderivation; constants are closed.
KForm ce_differential(const LieAlgebraModel& model, const KForm& form);

/// First frame index k with d(de^k) != 0, if any.
std::optional<int> first_nonclosed_frame(const LieAlgebraModel& model);
bool check_closure(const LieAlgebraModel& model);
/// Throws ClosureError naming the offending frame.
void require_closure(const LieAlgebraModel& model);

}  // namespace hetero
