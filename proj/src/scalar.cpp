#include "hetero/scalar.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "hetero/error.hpp"

namespace hetero {

namespace {

struct Registry {
  std::shared_mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, std::size_t> ids;
};

Registry& registry() {
  static Registry instance;
  return instance;
}

}  // namespace

std::size_t Variables::intern(std::string_view name) {
  auto& reg = registry();
  {
    std::shared_lock lock(reg.mutex);
    if (auto it = reg.ids.find(std::string(name)); it != reg.ids.end()) return it->second;
  }
  std::unique_lock lock(reg.mutex);
  if (auto it = reg.ids.find(std::string(name)); it != reg.ids.end()) return it->second;
  if (reg.names.size() >= kMaxVariables)
    throw Error("too many distinct parameter names (limit " + std::to_string(kMaxVariables) + ")");
  reg.names.emplace_back(name);
  reg.ids.emplace(std::string(name), reg.names.size() - 1);
  return reg.names.size() - 1;
}

std::optional<std::size_t> Variables::find(std::string_view name) {
  auto& reg = registry();
  std::shared_lock lock(reg.mutex);
  if (auto it = reg.ids.find(std::string(name)); it != reg.ids.end()) return it->second;
  return std::nullopt;
}

std::string Variables::name(std::size_t id) {
  auto& reg = registry();
  std::shared_lock lock(reg.mutex);
  return reg.names.at(id);
}

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(std::size_t id, unsigned power) {
  Monomial m;
  return m.with_exponent(id, power);
}

unsigned Monomial::degree() const {
  unsigned total = 0;
  for (auto e : exponents_) total += e;
  return total;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(exponents_[i]) + other.exponents_[i];
    if (e > 255) throw Error("monomial exponent overflow");
    out.exponents_[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    out.exponents_[i] = static_cast<std::uint8_t>(exponents_[i] - divisor.exponents_[i]);
  return out;
}

Monomial Monomial::with_exponent(std::size_t id, unsigned power) const {
  if (id >= kMaxVariables) throw IndexOutOfRange("variable id out of range");
  if (power > 255) throw Error("monomial exponent overflow");
  Monomial out = *this;
  out.exponents_[id] = static_cast<std::uint8_t>(power);
  return out;
}

// --- Scalar -----------------------------------------------------------------

Scalar::Scalar(long value) {
  if (value != 0) terms_.push_back({Monomial{}, Rational(value)});
}

Scalar::Scalar(const Rational& value) {
  if (value != 0) {
    Rational v = value;
    v.canonicalize();
    terms_.push_back({Monomial{}, v});
  }
}

Scalar Scalar::variable(std::string_view name, unsigned power) {
  Scalar s;
  s.terms_.push_back({Monomial::variable(Variables::intern(name), power), Rational(1)});
  return s;
}

Scalar Scalar::from_terms(std::vector<Term> terms) {
  Scalar s;
  s.terms_ = std::move(terms);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
  for (auto& t : merged) t.coefficient.canonicalize();
  terms_ = std::move(merged);
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_constant());
}

Rational Scalar::constant_value() const {
  if (!is_constant()) throw Error("scalar is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].coefficient;
}

unsigned Scalar::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::vector<std::string> Scalar::variables() const {
  std::vector<std::string> out;
  for (std::size_t id = 0; id < kMaxVariables; ++id) {
    for (const auto& t : terms_) {
      if (t.monomial.exponent(id) > 0) {
        out.push_back(Variables::name(id));
        break;
      }
    }
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

namespace {

// Merge of two sorted term lists with sign applied to the second.
std::vector<Scalar::Term> merge_terms(const std::vector<Scalar::Term>& a,
                                      const std::vector<Scalar::Term>& b, bool subtract) {
  std::vector<Scalar::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial < b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial < a[i].monomial) {
      out.push_back(b[j]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (c != 0) out.push_back({a[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Scalar{};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    Scalar out;
    out.terms_.push_back({a.terms_[0].monomial * b.terms_[0].monomial,
                          a.terms_[0].coefficient * b.terms_[0].coefficient});
    return out;
  }
  std::map<Monomial, Rational> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[x.monomial * y.monomial] += x.coefficient * y.coefficient;
  Scalar out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, c});
  return out;
}

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result(1L);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational Scalar::evaluate(const Assignment& assignment) const {
  Rational total = 0;
  std::array<const Rational*, kMaxVariables> values{};
  for (std::size_t id = 0; id < kMaxVariables; ++id) {
    bool used = false;
    for (const auto& t : terms_) used = used || t.monomial.exponent(id) > 0;
    if (!used) continue;
    auto name = Variables::name(id);
    auto it = assignment.find(name);
    if (it == assignment.end()) throw MissingParameter(name);
    values[id] = &it->second;
  }
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t id = 0; id < kMaxVariables; ++id) {
      for (unsigned k = 0; k < t.monomial.exponent(id); ++k) v *= *values[id];
    }
    total += v;
  }
  total.canonicalize();
  return total;
}

Scalar Scalar::specialize(const Assignment& assignment) const {
  Scalar out = *this;
  for (const auto& [name, value] : assignment) {
    if (!Variables::find(name)) continue;
    out = out.substitute(name, Scalar(value));
  }
  return out;
}

Scalar Scalar::substitute(std::string_view name, const Scalar& replacement) const {
  auto id = Variables::find(name);
  if (!id) return *this;
  bool present = false;
  for (const auto& t : terms_) present = present || t.monomial.exponent(*id) > 0;
  if (!present) return *this;
  Scalar out;
  for (const auto& t : terms_) {
    unsigned e = t.monomial.exponent(*id);
    Scalar rest = Scalar::from_terms({{t.monomial.with_exponent(*id, 0), t.coefficient}});
    out += rest * replacement.pow(e);
  }
  return out;
}

Scalar Scalar::reduce_power(std::string_view name, unsigned power, const Scalar& replacement) const {
  if (power == 0) throw Error("reduce_power requires a positive power");
  auto id = Variables::find(name);
  if (!id) return *this;
  Scalar out;
  for (const auto& t : terms_) {
    unsigned e = t.monomial.exponent(*id);
    Scalar rest = Scalar::from_terms({{t.monomial.with_exponent(*id, e % power), t.coefficient}});
    out += rest * replacement.pow(e / power);
  }
  return out;
}

std::optional<Scalar> Scalar::exact_divide(const Scalar& divisor) const {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  const Term& lead = divisor.terms_.back();
  Scalar remainder = *this;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& r = remainder.terms_.back();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Term step{r.monomial.quotient(lead.monomial), r.coefficient / lead.coefficient};
    quotient.push_back(step);
    remainder -= Scalar::from_terms({step}) * divisor;
  }
  return Scalar::from_terms(std::move(quotient));
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

std::string Scalar::to_string(const std::vector<std::string>& order) const {
  if (terms_.empty()) return "0";
  // Variable ids in print order: declared order first, then remaining by name.
  std::vector<std::size_t> ids;
  for (const auto& name : order)
    if (auto id = Variables::find(name)) ids.push_back(*id);
  std::vector<std::pair<std::string, std::size_t>> rest;
  for (const auto& name : variables()) {
    auto id = *Variables::find(name);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) rest.emplace_back(name, id);
  }
  std::sort(rest.begin(), rest.end());
  for (const auto& [name, id] : rest) ids.push_back(id);

  auto key = [&](const Monomial& m) {
    std::vector<unsigned> k;
    k.reserve(ids.size());
    for (auto id : ids) k.push_back(m.exponent(id));
    return k;
  };
  std::vector<const Term*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term* a, const Term* b) { return key(a->monomial) > key(b->monomial); });

  std::ostringstream out;
  bool first = true;
  for (const Term* t : sorted) {
    Rational c = t->coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::ostringstream body;
    bool wrote = false;
    if (t->monomial.is_constant() || c != 1) {
      body << hetero::to_string(c);
      wrote = true;
    }
    for (auto id : ids) {
      unsigned e = t->monomial.exponent(id);
      if (e == 0) continue;
      if (wrote) body << "*";
      body << Variables::name(id);
      if (e > 1) body << "^" << e;
      wrote = true;
    }
    out << body.str();
  }
  return out.str();
}

}  // namespace hetero
