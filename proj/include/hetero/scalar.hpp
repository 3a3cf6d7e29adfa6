#pragma once

// Exact coefficient ring: multivariate polynomials with rational coefficients
// in named parameters.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hetero {

using Rational = mpq_class;

/// Parameter assignment used for evaluation at rational points.
using Assignment = std::map<std::string, Rational>;

inline constexpr std::size_t kMaxVariables = 32;

/// Process-wide interning of parameter names. Ids are stable for the lifetime
/// of the process; lookups are thread-safe.
class Variables {
 public:
  static std::size_t intern(std::string_view name);
  static std::optional<std::size_t> find(std::string_view name);
  static std::string name(std::size_t id);
};

class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::size_t id, unsigned power = 1);

  unsigned exponent(std::size_t id) const { return exponents_[id]; }
  unsigned degree() const;
  bool is_constant() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient(const Monomial& divisor) const;
  Monomial with_exponent(std::size_t id, unsigned power) const;

  /// Lexicographic on variable id; a monomial order compatible with products.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exponents_{};
};

/// Canonical polynomial: terms sorted by ascending monomial, no zero
/// coefficients. Two Scalars are equal iff their term lists are identical.
class Scalar {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;
    bool operator==(const Term& other) const {
      return monomial == other.monomial && coefficient == other.coefficient;
    }
  };

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  static Scalar variable(std::string_view name, unsigned power = 1);
  static Scalar from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Requires is_constant().
  Rational constant_value() const;
  unsigned degree() const;
  std::vector<std::string> variables() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  bool operator==(const Scalar& other) const { return terms_ == other.terms_; }

  Scalar pow(unsigned exponent) const;

  /// Exact substitution; throws MissingParameter for an uncovered variable.
  Rational evaluate(const Assignment& assignment) const;
  /// Replaces the variables present in `assignment`, keeping the rest symbolic.
  Scalar specialize(const Assignment& assignment) const;
  Scalar substitute(std::string_view name, const Scalar& replacement) const;
  /// Rewrites every occurrence of name^power using `replacement`, i.e. reduces
  /// modulo name^power - replacement.
  Scalar reduce_power(std::string_view name, unsigned power, const Scalar& replacement) const;

  /// q with q * divisor == *this, if such a polynomial exists.
  std::optional<Scalar> exact_divide(const Scalar& divisor) const;

  /// Canonical text form; variables ordered by `order` first, then by name.
  std::string to_string(const std::vector<std::string>& order = {}) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

std::string to_string(const Rational& value);

}  // namespace hetero
