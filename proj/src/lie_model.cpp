#include "hetero/lie_model.hpp"

#include "hetero/error.hpp"

namespace hetero {

LieAlgebraModel::LieAlgebraModel(int dim, std::vector<std::string> params,
                                 std::vector<KForm> d_of_frame)
    : dim_(dim), params_(std::move(params)), d_(std::move(d_of_frame)) {
  if (dim < 1 || dim > kMaxDim)
    throw DimensionMismatch("model dimension " + std::to_string(dim) + " unsupported");
  if (static_cast<int>(d_.size()) != dim)
    throw DimensionMismatch("need exactly one differential per frame element");
  for (const auto& f : d_) {
    if (f.dim() != dim || f.degree() != 2)
      throw DimensionMismatch("each de^k must be a 2-form of the model dimension");
  }
}

LieAlgebraModel LieAlgebraModel::abelian(int dim, std::vector<std::string> params) {
  return LieAlgebraModel(dim, std::move(params), std::vector<KForm>(dim, KForm(dim, 2)));
}

const KForm& LieAlgebraModel::d_of_frame(int k) const {
  if (k < 1 || k > dim_) throw IndexOutOfRange("frame index out of range");
  return d_[k - 1];
}

Scalar LieAlgebraModel::structure_constant(int k, int i, int j) const {
  return component(d_of_frame(k), {i, j});
}

LieAlgebraModel LieAlgebraModel::specialize(const Assignment& assignment) const {
  std::vector<KForm> d;
  d.reserve(d_.size());
  for (const auto& f : d_) d.push_back(f.specialize(assignment));
  std::vector<std::string> remaining;
  for (const auto& p : params_)
    if (!assignment.contains(p)) remaining.push_back(p);
  return LieAlgebraModel(dim_, std::move(remaining), std::move(d));
}

KForm ce_differential(const LieAlgebraModel& model, const KForm& form) {
  if (form.dim() != model.dim())
    throw DimensionMismatch("form and model have different dimensions");
  // d is the odd derivation a -> sum_q de^q ^ i_{E_q} a.
  KForm out(form.dim(), form.degree() + 1);
  if (form.degree() == 0) return out;
  for (int q = 1; q <= model.dim(); ++q) {
    const KForm& dq = model.d_of_frame(q);
    if (dq.is_zero()) continue;
    KForm contracted = interior(q, form);
    if (contracted.is_zero()) continue;
    out += wedge(dq, contracted);
  }
  return out;
}

std::optional<int> first_nonclosed_frame(const LieAlgebraModel& model) {
  for (int k = 1; k <= model.dim(); ++k)
    if (!ce_differential(model, model.d_of_frame(k)).is_zero()) return k;
  return std::nullopt;
}

bool check_closure(const LieAlgebraModel& model) { return !first_nonclosed_frame(model); }

void require_closure(const LieAlgebraModel& model) {
  if (auto k = first_nonclosed_frame(model)) throw ClosureError(*k);
}

}  // namespace hetero
