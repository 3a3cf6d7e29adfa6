#pragma once

// Built-in nilmanifold examples, their instantons, the circle-product
// extensions, and the printed values each example is checked against.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hetero/connection.hpp"
#include "hetero/gstructure.hpp"
#include "hetero/lie_model.hpp"
#include "hetero/verifier.hpp"

namespace hetero {

/// Balanced SU(3) nilmanifold h3: de6 = -2t(e12 - e34).
LieAlgebraModel build_h3(const Scalar& t);
/// de6 = -2t(e12 - e34), de7 = c1(e13 + e24) + c2(e14 - e23).
LieAlgebraModel build_h7(const Scalar& t, const Scalar& c1, const Scalar& c2);
/// de7 = a e12 + b e34 - (a+b) e56.
LieAlgebraModel build_n31(const Scalar& a, const Scalar& b);
/// de7 = a e12 + b e34 + c e56; pure type only when c = -a-b.
LieAlgebraModel build_n31_general(const Scalar& a, const Scalar& b, const Scalar& c);
/// de1 = c(e24 + e25 - e34 + e35), de8 = a e23 + b e45 - (a+b) e67.
LieAlgebraModel build_h8(const Scalar& a, const Scalar& b, const Scalar& c);

/// sigma = lambda e7 on ten pairs and sigma_7^6 = e1+...+e5 + lambda(e6 + e7).
Connection instanton_h7(const Scalar& lambda);
/// sigma_2^1 = lambda e7, sigma_4^3 = mu e7, sigma_6^5 = tau e7.
Connection instanton_n31(const Scalar& lambda, const Scalar& mu, const Scalar& tau);
Connection instanton_h8(const Scalar& lambda, const Scalar& mu);

struct ProductModel {
  LieAlgebraModel model;
  GStructure structure;
};

/// M6 x S1 with Theta = F ^ e7 + Psi+. Throws PreconditionFailure unless
/// dF ^ F = dPsi+ = dPsi- = 0.
ProductModel extend_g2_product(const LieAlgebraModel& model6, const SU3Data& su3);
/// S1 x M7 with Phi = e1 ^ Theta + *Theta (frame indices of M7 move up by
/// one). Throws PreconditionFailure unless Theta is cocalibrated of pure type.
ProductModel extend_spin7_product(const LieAlgebraModel& model7, const GStructure& g2);

/// mu^2 as forced by proportionality on h8 with nabla+.
Scalar h8_mu_squared_plus(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& lambda);
/// mu^2 for the Levi-Civita variant at a = b = c = 1.
Scalar h8_mu_squared_levi_civita(const Scalar& lambda);

struct CatalogParameter {
  std::string name;
  Rational default_value;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<CatalogParameter> params;
  /// Symbolic configuration: every parameter is a free variable.
  std::function<VerifyInput(ConnectionChoice)> build;
};

const std::vector<CatalogEntry>& catalog();
/// nullptr when no entry has this name.
const CatalogEntry* find_catalog_entry(std::string_view name);

/// Substitutes `assignment` everywhere in the input (model, instanton, golden
/// values, reductions, evaluation points).
VerifyInput specialize(const VerifyInput& input, const Assignment& assignment);

/// Entry configured at defaults overridden by `overrides`. Throws
/// PreconditionFailure for unknown parameter names.
VerifyInput configure(const CatalogEntry& entry, const Assignment& overrides,
                      ConnectionChoice connection);

}  // namespace hetero
