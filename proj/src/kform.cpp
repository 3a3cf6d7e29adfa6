#include "hetero/kform.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hetero/error.hpp"

namespace hetero {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim)
    throw DimensionMismatch("form dimension " + std::to_string(dim) + " outside 0.." +
                            std::to_string(kMaxDim));
}

void check_index(int dim, int index) {
  if (index < 1 || index > dim)
    throw IndexOutOfRange("frame index " + std::to_string(index) + " outside 1.." +
                          std::to_string(dim));
}

// Number of bits of `mask` strictly above bit position `bit`.
int bits_above(Blade mask, int bit) {
  return std::popcount(static_cast<unsigned>(mask) >> (bit + 1));
}

// Sign of the shuffle e^A ^ e^B -> e^{A u B}; A, B disjoint.
int shuffle_sign(Blade a, Blade b) {
  int inversions = 0;
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    int bit = std::countr_zero(static_cast<unsigned>(rest));
    inversions += bits_above(a, bit);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// Sorts a copy of the indices; returns the permutation sign (0 on repeats).
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

Blade blade_of(std::span<const int> increasing_indices) {
  Blade b = 0;
  for (int i : increasing_indices) b = static_cast<Blade>(b | (1U << (i - 1)));
  return b;
}

std::vector<int> blade_indices(Blade blade) {
  std::vector<int> out;
  for (int bit = 0; bit < 16; ++bit)
    if (blade & (1U << bit)) out.push_back(bit + 1);
  return out;
}

int blade_degree(Blade blade) { return std::popcount(static_cast<unsigned>(blade)); }

int codifferential_sign(int dim, int degree) {
  return ((dim * (degree + 1) + 1) % 2 == 0) ? 1 : -1;
}

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
  check_dim(dim);
  if (degree < 0) throw DimensionMismatch("negative form degree");
}

KForm KForm::basis(int dim, std::initializer_list<int> indices) {
  return basis(dim, std::span<const int>(indices.begin(), indices.size()));
}

KForm KForm::basis(int dim, std::span<const int> indices) {
  KForm out(dim, static_cast<int>(indices.size()));
  for (int i : indices) check_index(dim, i);
  std::vector<int> idx(indices.begin(), indices.end());
  int sign = sort_with_sign(idx);
  if (sign != 0) out.terms_.emplace(blade_of(idx), Scalar(long(sign)));
  return out;
}

KForm KForm::constant(int dim, const Scalar& value) {
  KForm out(dim, 0);
  if (!value.is_zero()) out.terms_.emplace(Blade{0}, value);
  return out;
}

KForm KForm::volume(int dim, Orientation orientation) {
  KForm out(dim, dim);
  out.terms_.emplace(static_cast<Blade>((1U << dim) - 1), Scalar(long(orientation.sign)));
  return out;
}

Scalar KForm::coefficient(Blade blade) const {
  auto it = terms_.find(blade);
  return it == terms_.end() ? Scalar{} : it->second;
}

void KForm::add_term(Blade blade, const Scalar& coefficient) {
  if (blade_degree(blade) != degree_)
    throw DimensionMismatch("term degree does not match form degree");
  if (dim_ < 16 && (blade >> dim_) != 0) throw IndexOutOfRange("term index exceeds dimension");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(blade, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KForm& KForm::operator+=(const KForm& other) {
  if (other.dim_ != dim_ || other.degree_ != degree_)
    throw DimensionMismatch("adding forms of different dimension or degree");
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& other) {
  if (other.dim_ != dim_ || other.degree_ != degree_)
    throw DimensionMismatch("subtracting forms of different dimension or degree");
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

KForm KForm::operator-() const {
  KForm out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

KForm operator*(const Scalar& s, const KForm& a) {
  KForm out(a.dim_, a.degree_);
  if (s.is_zero()) return out;
  for (const auto& [b, c] : a.terms_) out.add_term(b, s * c);
  return out;
}

KForm KForm::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  KForm out(dim_, degree_);
  for (const auto& [b, c] : terms_) out.add_term(b, f(c));
  return out;
}

KForm KForm::specialize(const Assignment& assignment) const {
  return map_coefficients([&](const Scalar& c) { return c.specialize(assignment); });
}

std::string KForm::to_string(const std::vector<std::string>& order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, const Scalar*>> sorted;
  for (const auto& [b, c] : terms_) sorted.emplace_back(blade_indices(b), &c);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, coeff] : sorted) {
    std::string label = "e";
    for (int i : idx) label += std::to_string(i);
    if (idx.empty()) label.clear();
    std::string c = coeff->to_string(order);
    bool single_term = coeff->terms().size() == 1;
    bool negative = single_term && coeff->terms()[0].coefficient < 0;
    if (negative) c = (-*coeff).to_string(order);
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;
    if (label.empty()) {
      out << (single_term ? c : "(" + c + ")");
    } else if (c == "1") {
      out << label;
    } else if (single_term) {
      out << c << "*" << label;
    } else {
      out << "(" << c << ")*" << label;
    }
  }
  return out.str();
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of forms of different dimension");
  KForm out(a.dim(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.dim()) return out;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if (ba & bb) continue;
      Scalar prod = ca * cb;
      if (shuffle_sign(ba, bb) < 0) prod = -prod;
      out.add_term(static_cast<Blade>(ba | bb), prod);
    }
  }
  return out;
}

KForm hodge_star(const KForm& a, Orientation orientation) {
  const int n = a.dim();
  const Blade full = static_cast<Blade>((1U << n) - 1);
  KForm out(n, n - a.degree());
  for (const auto& [b, c] : a.terms()) {
    Blade complement = static_cast<Blade>(full & ~b);
    int sign = shuffle_sign(b, complement) * orientation.sign;
    out.add_term(complement, sign > 0 ? c : -c);
  }
  return out;
}

Scalar inner(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree())
    throw DimensionMismatch("inner product needs equal dimension and degree");
  Scalar total;
  for (const auto& [blade, c] : a.terms()) {
    auto it = b.terms().find(blade);
    if (it != b.terms().end()) total += c * it->second;
  }
  return total;
}

KForm interior(int index, const KForm& a) {
  check_index(a.dim(), index);
  if (a.degree() == 0) return KForm(a.dim(), 0);
  KForm out(a.dim(), a.degree() - 1);
  const int bit = index - 1;
  const Blade mask = static_cast<Blade>(1U << bit);
  for (const auto& [b, c] : a.terms()) {
    if (!(b & mask)) continue;
    int below = std::popcount(static_cast<unsigned>(b & (mask - 1)));
    out.add_term(static_cast<Blade>(b & ~mask), below % 2 == 0 ? c : -c);
  }
  return out;
}

Scalar component(const KForm& a, std::span<const int> indices) {
  if (static_cast<int>(indices.size()) != a.degree())
    throw DimensionMismatch("component index count differs from form degree");
  std::vector<int> idx(indices.begin(), indices.end());
  for (int i : idx) check_index(a.dim(), i);
  int sign = sort_with_sign(idx);
  if (sign == 0) return Scalar{};
  Scalar c = a.coefficient(blade_of(idx));
  return sign > 0 ? c : -c;
}

Scalar component(const KForm& a, std::initializer_list<int> indices) {
  return component(a, std::span<const int>(indices.begin(), indices.size()));
}

std::vector<Scalar> dense_components(const KForm& a) {
  const int n = a.dim();
  const int k = a.degree();
  std::size_t size = 1;
  for (int i = 0; i < k; ++i) size *= static_cast<std::size_t>(n);
  std::vector<Scalar> out(size);
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (const auto& [b, c] : a.terms()) {
    std::vector<int> idx = blade_indices(b);
    for (int i = 0; i < k; ++i) perm[i] = i;
    // Visit every permutation of the increasing tuple, tracking its parity.
    do {
      int inversions = 0;
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
          if (perm[x] > perm[y]) ++inversions;
      std::size_t flat = 0;
      for (int x = 0; x < k; ++x) flat = flat * static_cast<std::size_t>(n) + (idx[perm[x]] - 1);
      out[flat] = inversions % 2 == 0 ? c : -c;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

KForm shifted(const KForm& a, int new_dim, int offset) {
  check_dim(new_dim);
  if (offset < 0 || a.dim() + offset > new_dim)
    throw DimensionMismatch("shifted form does not fit the target dimension");
  KForm out(new_dim, a.degree());
  for (const auto& [b, c] : a.terms()) out.add_term(static_cast<Blade>(b << offset), c);
  return out;
}

}  // namespace hetero
