#pragma once

// Curvature identities relating the Levi-Civita connection and the torsion
// connection nabla+ = nabla^g + T/2 at constant dilaton.

#include <string>
#include <vector>

#include "hetero/connection.hpp"
#include "hetero/lie_model.hpp"

namespace hetero {

/// Everything derived from (model, T, Psi) that the identity suite and the
/// verifier share.
struct TorsionGeometry {
  LieAlgebraModel model;
  KForm torsion;
  KForm psi;
  Connection levi_civita;
  Connection plus;
  Curvature curvature_lc;
  Curvature curvature_plus;
  ScalarMatrix ricci_lc;
  ScalarMatrix ricci_plus;
  KForm d_torsion;
  /// nabla+_{E_i} T, i = 1..n.
  std::vector<KForm> plus_derivative_of_torsion;

  static TorsionGeometry build(const LieAlgebraModel& model, const KForm& torsion, const KForm& psi);
};

struct IdentityResult {
  std::string name;
  std::string statement;
  bool zero = false;
  std::size_t nonzero_entries = 0;
};

/// Runs every identity; each result counts the nonzero residual components.
std::vector<IdentityResult> identity_suite(const TorsionGeometry& geometry);

/// sum_{jkl} X_{mjkl} Psi_{jkln} for a 4-form X.
ScalarMatrix contract_with_psi(const KForm& four_form, const KForm& psi);

/// sum_{ij} T_{m i j} T_{n i j}.
ScalarMatrix torsion_square(const KForm& torsion);

}  // namespace hetero
