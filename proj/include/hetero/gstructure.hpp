#pragma once

// G2 (dimension 7), Spin(7) (dimension 8) and SU(3) (dimension 6) structure
// data on an orthonormal frame.

#include <utility>

#include "hetero/connection.hpp"
#include "hetero/kform.hpp"
#include "hetero/lie_model.hpp"

namespace hetero {

enum class StructureKind { G2, Spin7 };

const char* to_string(StructureKind kind);

class GStructure {
 public:
  GStructure() = default;
  /// Throws PreconditionFailure unless the form induces the frame metric.
  static GStructure g2(KForm theta);
  /// Additionally requires *Phi = Phi.
  static GStructure spin7(KForm phi);

  StructureKind kind() const { return kind_; }
  int dim() const { return form_.dim(); }
  /// Theta or Phi.
  const KForm& form() const { return form_; }
  /// *Theta, or Phi itself in dimension 8.
  const KForm& dual() const { return dual_; }
  /// -*Theta in dimension 7, -Phi in dimension 8.
  KForm psi() const { return -dual_; }

  bool operator==(const GStructure&) const = default;

 private:
  StructureKind kind_ = StructureKind::G2;
  KForm form_;
  KForm dual_;
};

KForm standard_theta();
KForm standard_spin7_form();
GStructure standard_g2();
GStructure standard_spin7();

/// g_ij = (1/6) sum Theta_ikl Theta_jkl, or (1/42) sum Phi_iklm Phi_jklm.
ScalarMatrix metric_from_structure(StructureKind kind, const KForm& form);

struct SU3Data {
  KForm F;
  KForm psi_plus;
  KForm psi_minus;

  static SU3Data standard();
  /// J E_{2k-1} = E_{2k}, J E_{2k} = -E_{2k-1}: returns (index, sign).
  static std::pair<int, int> J(int index);
  /// Theta = F ^ e7 + Psi+ on the 7-dimensional product frame.
  KForm g2_form() const;
};

/// dim 7: -(1/3) *(*dTheta ^ Theta); dim 8: (1/7) *(delta Phi ^ Phi).
KForm lee_form(const LieAlgebraModel& model, const GStructure& s);
/// dim 7: (1/3) *(*d*Theta ^ *Theta); dim 8: (1/7) *(*dPhi ^ Phi).
KForm lee_form_alternative(const LieAlgebraModel& model, const GStructure& s);

struct G2Class {
  bool cocalibrated = false;
  bool pure_type = false;
};
struct Spin7Class {
  bool balanced = false;
};

G2Class classify_g2(const LieAlgebraModel& model, const GStructure& s);
Spin7Class classify_spin7(const LieAlgebraModel& model, const GStructure& s);

/// General formulas: G2 T = (1/6)<dTheta,*Theta> Theta - *dTheta + *(theta7 ^ Theta);
/// Spin(7) T = *dPhi - (7/6) *(theta8 ^ Phi).
KForm torsion_3form(const LieAlgebraModel& model, const GStructure& s);

bool in_subalgebra(const KForm& beta, const GStructure& s);
bool in_subalgebra(const KForm& beta, const SU3Data& su3);

/// Every Omega_j^i lies in g2 / spin(7). The contraction characterization
/// Omega_mn = 1/2 sum Omega_pq Psi_pqmn is evaluated independently; a
/// disagreement between the two routes throws std::logic_error.
bool is_instanton(const Curvature& curvature, const GStructure& s);

}  // namespace hetero
