#pragma once

// Randomized algebraic properties shared by the unit tests and the acceptance
// runner. Each suite runs `cases` seeded trials and returns the failures.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hetero/catalog.hpp"
#include "hetero/expression.hpp"
#include "hetero/kform.hpp"
#include "hetero/lie_model.hpp"
#include "hetero/model_file.hpp"
#include "hetero/scalar.hpp"

namespace hetero::testing {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

class Random {
 public:
  explicit Random(std::uint32_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Rational rational() {
    int num = uniform(-5, 5);
    int den = uniform(1, 3);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (r == 0);
    return r;
  }

  /// Small polynomial in the given variables.
  Scalar scalar(const std::vector<std::string>& vars, int max_terms = 3, int max_degree = 2) {
    Scalar out;
    int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Scalar term(rational());
      for (const auto& v : vars) {
        int p = uniform(0, max_degree);
        if (p > 0) term *= Scalar::variable(v, static_cast<unsigned>(p));
      }
      out += term;
    }
    return out;
  }

  std::vector<int> subset(int n, int k) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    std::shuffle(all.begin(), all.end(), gen_);
    all.resize(static_cast<std::size_t>(k));
    std::sort(all.begin(), all.end());
    return all;
  }

  KForm form(int n, int k, const std::vector<std::string>& vars, int max_terms = 4) {
    KForm out(n, k);
    int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      auto idx = subset(n, k);
      Scalar c = vars.empty() ? Scalar(rational()) : scalar(vars, 2, 1);
      out += c * KForm::basis(n, std::span<const int>(idx));
    }
    return out;
  }

  /// Two-step nilpotent model: frames 1..m closed, the rest have
  /// differentials in the span of e^ij with i<j<=m. Always satisfies d^2 = 0.
  LieAlgebraModel two_step_model(int n, const std::vector<std::string>& vars) {
    int m = uniform(n - 3, n - 1);
    std::vector<KForm> d(static_cast<std::size_t>(n), KForm(n, 2));
    for (int k = m + 1; k <= n; ++k) {
      int terms = uniform(0, 3);
      for (int t = 0; t < terms; ++t) {
        auto idx = subset(m, 2);
        Scalar c = vars.empty() ? Scalar(nonzero_rational()) : scalar(vars, 2, 1);
        d[static_cast<std::size_t>(k - 1)] += c * KForm::basis(n, std::span<const int>(idx));
      }
    }
    return LieAlgebraModel(n, vars, std::move(d));
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

inline void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) {
    if (r.failures == 0) r.first_failure = what;
    ++r.failures;
  }
}

inline const std::vector<std::string>& sample_vars() {
  static const std::vector<std::string> v{"a", "b", "t"};
  return v;
}

inline SuiteResult ring_axioms(int cases, std::uint32_t seed) {
  SuiteResult r{"scalar ring axioms"};
  Random rng(seed);
  for (int i = 0; i < cases; ++i) {
    Scalar p = rng.scalar(sample_vars()), q = rng.scalar(sample_vars()), s = rng.scalar(sample_vars());
    bool ok = (p + q == q + p) && (p * q == q * p) && ((p + q) + s == p + (q + s)) &&
              ((p * q) * s == p * (q * s)) && (p * (q + s) == p * q + p * s) && ((p - p).is_zero());
    record(r, ok, "p=" + p.to_string() + " q=" + q.to_string() + " s=" + s.to_string());
  }
  return r;
}

inline SuiteResult evaluation_homomorphism(int cases, std::uint32_t seed) {
  SuiteResult r{"evaluation is a ring homomorphism"};
  Random rng(seed);
  for (int i = 0; i < cases; ++i) {
    Scalar p = rng.scalar(sample_vars()), q = rng.scalar(sample_vars());
    Assignment at{{"a", rng.rational()}, {"b", rng.rational()}, {"t", rng.rational()}};
    bool ok = (p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at) &&
              (p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at) &&
              p.specialize(at) == Scalar(p.evaluate(at));
    record(r, ok, "p=" + p.to_string() + " q=" + q.to_string());
  }
  return r;
}

inline SuiteResult hodge_involution(int cases, std::uint32_t seed) {
  SuiteResult r{"Hodge star involution"};
  Random rng(seed);
  for (int i = 0; i < cases; ++i) {
    int n = rng.uniform(7, 8);
    int k = rng.uniform(0, n);
    KForm a = rng.form(n, k, {"a"});
    int sign = (k * (n - k)) % 2 == 0 ? 1 : -1;
    record(r, hodge_star(hodge_star(a)) == Scalar(long(sign)) * a, a.to_string());
  }
  return r;
}

inline SuiteResult star_pairing(int cases, std::uint32_t seed) {
  SuiteResult r{"a ^ *b = <a,b> vol"};
  Random rng(seed);
  for (int i = 0; i < cases; ++i) {
    int n = rng.uniform(7, 8);
    int k = rng.uniform(0, n);
    KForm a = rng.form(n, k, {"a"}), b = rng.form(n, k, {"b"});
    record(r, wedge(a, hodge_star(b)) == inner(a, b) * KForm::volume(n) && inner(a, b) == inner(b, a),
           a.to_string() + " | " + b.to_string());
  }
  return r;
}

inline SuiteResult graded_commutativity(int cases, std::uint32_t seed) {
  SuiteResult r{"wedge graded commutativity"};
  Random rng(seed);
  for (int i = 0; i < cases; ++i) {
    int n = rng.uniform(7, 8);
    int p = rng.uniform(0, 4), q = rng.uniform(0, 4);
    KForm a = rng.form(n, p, {"a"}), b = rng.form(n, q, {"b"});
    int sign = (p * q) % 2 == 0 ? 1 : -1;
    record(r, wedge(a, b) == Scalar(long(sign)) * wedge(b, a), a.to_string() + " | " + b.to_string());
  }
  return r;
}

inline SuiteResult interior_antiderivation(int cases, std::uint32_t seed) {
  SuiteResult r{"interior product antiderivation"};
  Random rng(seed);
  for (int i = 0; i < cases; ++i) {
    int n = rng.uniform(7, 8);
    int p = rng.uniform(1, 4), q = rng.uniform(1, 4);
    int idx = rng.uniform(1, n);
    KForm a = rng.form(n, p, {"a"}), b = rng.form(n, q, {"b"});
    int sign = p % 2 == 0 ? 1 : -1;
    KForm lhs = interior(idx, wedge(a, b));
    KForm rhs = wedge(interior(idx, a), b) + Scalar(long(sign)) * wedge(a, interior(idx, b));
    record(r, lhs == rhs, a.to_string() + " | " + b.to_string());
  }
  return r;
}

inline SuiteResult d_squared(int cases, std::uint32_t seed) {
  SuiteResult r{"d^2 = 0 and the Leibniz rule"};
  Random rng(seed);
  const Scalar t = Scalar::variable("t"), a = Scalar::variable("a"), b = Scalar::variable("b");
  const std::vector<LieAlgebraModel> fixed{build_h7(t, a, b), build_n31(a, b), build_h8(a, b, t)};
  for (int i = 0; i < cases; ++i) {
    LieAlgebraModel model = i % 2 == 0 ? fixed[static_cast<std::size_t>(rng.uniform(0, 2))]
                                       : rng.two_step_model(rng.uniform(7, 8), {"a", "b"});
    const int n = model.dim();
    int p = rng.uniform(0, 3), q = rng.uniform(0, 3);
    KForm x = rng.form(n, p, {}), y = rng.form(n, q, {});
    int sign = p % 2 == 0 ? 1 : -1;
    bool ok = ce_differential(model, ce_differential(model, x)).is_zero() &&
              ce_differential(model, wedge(x, y)) ==
                  wedge(ce_differential(model, x), y) + Scalar(long(sign)) * wedge(x, ce_differential(model, y));
    record(r, ok, x.to_string());
  }
  return r;
}

inline SuiteResult parse_print_roundtrip(int cases, std::uint32_t seed) {
  SuiteResult r{"parse/print round trip"};
  Random rng(seed);
  const std::vector<std::string> vars{"a", "b", "lambda"};
  for (int i = 0; i < cases; ++i) {
    if (i % 2 == 0) {
      int n = rng.uniform(7, 8);
      KForm f = rng.form(n, rng.uniform(1, 4), vars);
      if (f.is_zero()) f = KForm::basis(n, {1});
      ExpressionOptions opt;
      opt.dim = n;
      opt.declared = &vars;
      KForm back = parse_form_expression(f.to_string(vars), opt);
      record(r, back == f, f.to_string(vars));
    } else {
      ModelFile file;
      file.dim = rng.uniform(7, 8);
      file.params = {"a", "b"};
      file.structure = file.dim == 7 ? ModelFile::Structure::G2Standard : ModelFile::Structure::Spin7Standard;
      LieAlgebraModel m = rng.two_step_model(file.dim, file.params);
      for (int k = 1; k <= file.dim; ++k)
        if (!m.d_of_frame(k).is_zero()) file.differentials[k] = m.d_of_frame(k);
      int entries = rng.uniform(0, 3);
      for (int e = 0; e < entries; ++e) {
        auto ij = rng.subset(file.dim, 2);
        KForm f = rng.form(file.dim, 1, file.params, 2);
        if (!f.is_zero()) file.instanton[{ij[0], ij[1]}] = f;
      }
      if (rng.uniform(0, 1)) file.eval_points.push_back({{"a", rng.rational()}, {"b", rng.rational()}});
      std::string text = print_model(file);
      bool ok = false;
      try {
        ok = parse_model(text) == file && print_model(parse_model(text)) == text;
      } catch (const std::exception&) {
        ok = false;
      }
      record(r, ok, text);
    }
  }
  return r;
}

/// Every suite at the given size; the unit tests and the acceptance runner
/// use the same seeds.
inline std::vector<SuiteResult> all_property_suites(int cases_each) {
  return {ring_axioms(cases_each, 11),        evaluation_homomorphism(cases_each, 12),
          hodge_involution(cases_each, 13),   star_pairing(cases_each, 14),
          graded_commutativity(cases_each, 15), interior_antiderivation(cases_each, 16),
          d_squared(cases_each, 17),          parse_print_roundtrip(cases_each, 18)};
}

}  // namespace hetero::testing
