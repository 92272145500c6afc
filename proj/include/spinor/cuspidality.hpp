#pragma once

#include "spinor/lifting.hpp"
#include "spinor/satake.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinor {

enum class EisensteinKind { SiegelEisenstein, KlingenFromDegree2, KlingenFromElliptic };

std::string to_string(EisensteinKind kind);

/// Degree-3 Satake template of a non-cuspidal eigenform of weight k:
///   Siegel:               (p^(k-3), p^(k-2), p^(k-1))
///   Klingen, degree 2:    (gamma1, gamma2, p^(k-3))
///   Klingen, elliptic:    (gamma1, p^(k-2), p^(k-3))
/// gamma holds the cusp-form parameters the Klingen kinds are built from.
struct EisensteinModel {
  EisensteinKind kind = EisensteinKind::SiegelEisenstein;
  int weight = 0;
  long prime = 2;
  std::vector<Complex> gamma;
};

/// Throws InputError when gamma data is missing or the wrong length.
SatakeParams eisenstein_params(const EisensteinModel& model);

/// log_p |mu_i| for the model; template entries are exact integers.
std::vector<double> log_moduli(const EisensteinModel& model);

/// Some Weyl-orbit element has |mu1 ... mun| = 1 (log scale, absolute tol).
/// Throws InputError unless k > n.
bool chai_faltings_test(const SatakeParams& sp, double tol = kDefaultTolerance);

/// First orbit element satisfying the Chai-Faltings condition, if any.
std::optional<SatakeParams> chai_faltings_representative(const SatakeParams& sp, double tol = kDefaultTolerance);

/// Some lifted parameter mu1, mu2, mu3 has absolute value one.
bool lifted_mu_constraint(const LiftInput& in, double tol = kDefaultTolerance);

struct CaseReport {
  EisensteinKind kind;
  std::vector<double> log_moduli;
  bool has_unit_parameter = false;
  bool chai_faltings_degree3 = false;
  std::vector<double> orbit_product_exponents;  // distinct values of log_p |mu1 mu2 mu3| over the orbit
  bool refuted = false;
  std::string reason;
};

struct CuspidalityReport {
  bool cuspidal = false;
  // Properties of the lifted parameters the refutations rely on.
  bool lifted_has_unit_parameter = false;
  bool lifted_chai_faltings = false;
  bool gl2_ramanujan = false;
  std::vector<CaseReport> cases;
  std::vector<std::string> warnings;
};

/// Refutes each candidate non-cuspidal model against the lifted parameters:
/// a model is impossible when none of its parameters has modulus one, or
/// when no orbit element has |mu1 mu2 mu3| = 1 although the lift does.
/// Cuspidal iff every model is refuted (vacuously, with a warning, for none).
CuspidalityReport cuspidality_decision(const LiftInput& in, const std::vector<EisensteinModel>& models,
                                       double tol = kDefaultTolerance);

/// Lift input at weight k from fixed tempered parameters: an elliptic point of
/// weight k - 2 with |alpha1| = 1 and a degree-2 point of weight k with
/// |beta1| = |beta2| = 1, both normalized. Needs even k >= 4.
LiftInput tempered_lift_input(int k, long p);

/// The three standard models at weight k = k2 of the input, with Klingen
/// data taken from the input itself: the Chai-Faltings representative of the
/// degree-2 component and the elliptic unit parameter alpha1.
std::vector<EisensteinModel> standard_models(const LiftInput& in, double tol = kDefaultTolerance);

}  // namespace spinor
