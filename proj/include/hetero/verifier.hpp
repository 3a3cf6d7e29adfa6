#pragma once

// Heterotic checks: anomaly cancellation, the quadratic curvature condition,
// equations of motion at constant dilaton, and the report that collects them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hetero/connection.hpp"
#include "hetero/gstructure.hpp"
#include "hetero/identities.hpp"
#include "hetero/lie_model.hpp"

namespace hetero {

/// name^power -> replacement, applied to scalars before they are compared.
struct PowerReduction {
  std::string name;
  unsigned power = 2;
  Scalar replacement;
};

Scalar reduce(const Scalar& s, const std::vector<PowerReduction>& reductions);
KForm reduce(const KForm& f, const std::vector<PowerReduction>& reductions);

struct AlphaPrime {
  enum class Status { Ratio, Any, None };
  Status status = Status::None;
  /// alpha' = numerator / denominator when status == Ratio.
  Scalar numerator;
  Scalar denominator{1L};
  std::string diagnostic;
};

const char* to_string(AlphaPrime::Status status);

/// Solves dT = (alpha'/4) (q1_R - q1_A) by cross-multiplication.
AlphaPrime anomaly_solve(const KForm& d_torsion, const KForm& q1_r, const KForm& q1_a,
                         const std::vector<PowerReduction>& reductions = {});

struct PositivityCheck {
  Assignment point;
  std::optional<Rational> value;  // empty when the denominator vanishes
  bool positive = false;
};

/// Evaluates alpha' at each point; throws MissingParameter when a point does
/// not cover the ratio's parameters.
std::vector<PositivityCheck> alpha_positivity(const AlphaPrime& alpha,
                                              const std::vector<Assignment>& points);

/// (1/6) sum [Q_mjkl + Q_mklj + Q_mljk] Psi_jkln + sum R_mpqr R_npqr with
/// Q_mjkl = sum_ab R_mjab R_klab. Zero iff the quadratic condition holds.
ScalarMatrix quadratic_condition_residual(const Curvature& curvature, const KForm& psi);

struct MotionResiduals {
  /// denominator * (Einstein equation), so alpha' enters polynomially.
  ScalarMatrix einstein;
  /// sum_i (nabla^g_i T)_{ijk}.
  ScalarMatrix torsion_divergence;
  /// -delta T as a 2-form; agrees with torsion_divergence.
  KForm codifferential;
  bool codifferential_agrees = false;
  /// sum_i (nabla+_i F)_{i j a b} with nabla+ acting on every index; entry
  /// ((j-1)*n + (a-1))*n + (b-1).
  std::vector<Scalar> instanton_divergence;
  /// The Einstein residual reassembled as anomaly defect + parallel-torsion
  /// defect + quadratic-condition defects of R and F.
  ScalarMatrix einstein_chain;
  bool chain_agrees = false;
};

MotionResiduals motion_residuals(const TorsionGeometry& geometry, const Curvature& gravity,
                                 const KForm& q1_gravity, const Connection& instanton,
                                 const Curvature& instanton_curvature, const Scalar& numerator,
                                 const Scalar& denominator,
                                 const std::vector<PowerReduction>& reductions = {});

enum class ConnectionChoice { Plus, LeviCivita };
const char* to_string(ConnectionChoice choice);

/// A value printed alongside an example, compared with recomputation.
/// `expected` is the value recomputation must reproduce; `printed`, when set,
/// is a differing printed form recorded as a discrepancy.
struct GoldenValue {
  std::string id;
  KForm expected;
  Scalar denominator{1L};  // only for ratio-valued ids such as alpha_prime
  std::optional<KForm> printed;
  std::string note;
};

struct VerifyInput {
  std::string name;
  LieAlgebraModel model;
  GStructure structure;
  std::optional<Connection> instanton;
  std::string instanton_name = "A";
  ConnectionChoice connection = ConnectionChoice::Plus;
  std::vector<Assignment> eval_points;
  std::vector<PowerReduction> reductions;
  std::vector<GoldenValue> golden;
  /// Order in which parameters are printed.
  std::vector<std::string> parameter_order;
};

struct GoldenOutcome {
  std::string id;
  bool matches = false;
  std::string expected;
  std::string recomputed;
};

struct Discrepancy {
  std::string quantity;
  std::string printed;
  std::string recomputed;
  std::string note;
};

struct Verdict {
  std::string check;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  int dim = 0;
  std::vector<std::string> params;
  std::map<std::string, std::string> conventions;

  StructureKind kind = StructureKind::G2;
  std::optional<G2Class> g2_class;
  std::optional<Spin7Class> spin7_class;
  KForm lee_form;
  bool lee_forms_agree = true;

  ConnectionChoice connection = ConnectionChoice::Plus;
  KForm torsion;
  KForm d_torsion;
  bool torsion_roundtrip = false;
  bool nabla_plus_torsion_zero = false;

  std::string instanton_name;
  bool instanton_present = false;
  bool instanton_ok = false;
  KForm q1_gravity;
  KForm q1_instanton;

  AlphaPrime alpha_prime;
  std::vector<PositivityCheck> positivity;

  bool quadratic_condition_zero = false;
  ScalarMatrix quadratic_condition;
  bool quadratic_condition_symmetric = false;

  bool einstein_zero = false;
  bool torsion_divergence_zero = false;
  bool instanton_divergence_zero = false;
  bool codifferential_agrees = false;
  bool chain_agrees = false;
  ScalarMatrix einstein;

  std::vector<IdentityResult> identities;
  std::vector<GoldenOutcome> golden;
  std::vector<Discrepancy> discrepancies;

  std::vector<Verdict> verdicts;
  bool passed() const;
};

VerificationReport verify_model(const VerifyInput& input);

}  // namespace hetero
