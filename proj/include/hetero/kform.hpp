#pragma once

// Invariant alternating forms on an oriented orthonormal frame e^1..e^n.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hetero/scalar.hpp"

namespace hetero {

inline constexpr int kMaxDim = 8;

/// Strictly increasing index tuple encoded as a bit set (bit i-1 <-> e^i).
using Blade = std::uint16_t;

Blade blade_of(std::span<const int> increasing_indices);
std::vector<int> blade_indices(Blade blade);
int blade_degree(Blade blade);

/// Orientation relative to e^1 ^ ... ^ e^n. Fixed per model; +1 everywhere in
/// the catalog.
struct Orientation {
  int sign = 1;
};

class KForm {
 public:
  KForm() = default;
  KForm(int dim, int degree);

  /// e^{i1} ^ ... ^ e^{ik} for arbitrary (possibly unsorted) indices; zero if
  /// an index repeats.
  static KForm basis(int dim, std::initializer_list<int> indices);
  static KForm basis(int dim, std::span<const int> indices);
  static KForm constant(int dim, const Scalar& value);
  static KForm volume(int dim, Orientation orientation = {});

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<Blade, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Blade blade) const;

  void add_term(Blade blade, const Scalar& coefficient);

  KForm& operator+=(const KForm& other);
  KForm& operator-=(const KForm& other);
  KForm operator-() const;
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Scalar& s, const KForm& a);
  bool operator==(const KForm& other) const = default;

  KForm map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;
  KForm specialize(const Assignment& assignment) const;

  std::string to_string(const std::vector<std::string>& order = {}) const;

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<Blade, Scalar> terms_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm hodge_star(const KForm& a, Orientation orientation = {});
Scalar inner(const KForm& a, const KForm& b);
KForm interior(int index, const KForm& a);

/// Fully antisymmetric tensor component a(E_{i1}, ..., E_{ik}); equals the
/// stored coefficient for an increasing tuple and vanishes on repeats.
Scalar component(const KForm& a, std::span<const int> indices);
Scalar component(const KForm& a, std::initializer_list<int> indices);

/// All n^k components a(E_{i1},...,E_{ik}) in row-major order with 0-based
/// indices; the dense view used by tensor contractions.
std::vector<Scalar> dense_components(const KForm& a);

/// Re-expresses `a` in dimension new_dim with every frame index moved up by
/// `offset` (e^i -> e^{i+offset}).
KForm shifted(const KForm& a, int new_dim, int offset = 0);

/// Codifferential sign: delta = (-1)^{n(k+1)+1} * d *.
int codifferential_sign(int dim, int degree);

}  // namespace hetero
