#pragma once

#include "spinor/exact_satake.hpp"
#include "spinor/hodge.hpp"
#include "spinor/local_factor.hpp"
#include "spinor/satake.hpp"

#include <optional>
#include <variant>

namespace spinor {

/// Elliptic eigenform data at one prime.
struct Gl2Data {
  int weight = 0;
  Integer a_p;
};

/// Degree-2 eigenform data at one prime: T(p) and T(p^2) eigenvalues.
struct Gsp4Data {
  int weight = 0;
  Integer lambda_p;
  Integer lambda_p2;
};

/// Why a weight pair cannot lift: the Kuenneth product of the component
/// Hodge types together with the degree-3 types it was compared against.
struct WeightRejection {
  int k1 = 0;
  int k2 = 0;
  HodgeType tensor;
  std::vector<std::pair<int, HodgeType>> compared;  // (K, hodge_gsp6(K)) of matching total weight
};

using LiftWeights = std::variant<int, WeightRejection>;

/// Accepts exactly k1 = k2 - 2 (returning k = k2). Throws InputError for
/// non-positive or odd weights.
LiftWeights lift_weights(int k1, int k2);

/// Input to the torus lift at one prime: an elliptic and a degree-2 component,
/// each given either as Satake parameters or as exact eigenvalues.
class LiftInput {
 public:
  using Gl2Part = std::variant<SatakeParams, Gl2Data>;
  using Gsp4Part = std::variant<SatakeParams, Gsp4Data>;

  /// Enforces even positive weights with k1 = k2 - 2.
  static LiftInput make(long prime, Gl2Part gl2, Gsp4Part gsp4);
  /// Skips the weight check, for building non-conforming test inputs.
  static LiftInput unchecked(long prime, Gl2Part gl2, Gsp4Part gsp4);

  long prime() const { return prime_; }
  int gl2_weight() const;
  int gsp4_weight() const;
  const Gl2Part& gl2() const { return gl2_; }
  const Gsp4Part& gsp4() const { return gsp4_; }
  bool has_exact_data() const;

  SatakeParams gl2_satake() const;
  SatakeParams gsp4_satake() const;

 private:
  LiftInput(long prime, Gl2Part gl2, Gsp4Part gsp4);

  long prime_;
  Gl2Part gl2_;
  Gsp4Part gsp4_;
};

/// (alpha0; alpha1) x (beta0; beta1, beta2) -> (alpha0 beta0; beta1, beta2, alpha1),
/// a degree-3 point of weight k2.
SatakeParams theta_lift(const SatakeParams& gl2, const SatakeParams& gsp4);
SatakeParams theta_lift(const LiftInput& in);

exact::ExactSatakePoint theta_lift_exact(const exact::ExactSatakePoint& gl2, const exact::ExactSatakePoint& gsp4);
/// Exact lifted point in a common quadratic tower. Requires exact data on both sides.
exact::ExactSatakePoint theta_lift_exact(const LiftInput& in);

/// Spin factor of the lifted point (numeric, or exact through the tower).
LocalFactor theta_route_factor(const LiftInput& in, bool exact);
/// Companion-matrix tensor of the two component spin factors.
LocalFactor tensor_route_factor(const LiftInput& in, bool exact);

inline constexpr double kNumericRouteTolerance = 1e-6;

/// Coefficientwise agreement. Exact factors compare as integers; numeric
/// coefficient j compares against tol * scale[j] (tol * max(1,|a_j|,|b_j|)
/// without a scale).
bool factors_agree(const LocalFactor& a, const LocalFactor& b, double tol = kNumericRouteTolerance,
                   const std::vector<double>& scale = {});

/// Natural magnitude of each coefficient: the coefficients of prod (1 + |r| X).
std::vector<double> coefficient_scale(const std::vector<Complex>& inverse_roots);

struct TensorIdentityReport {
  bool holds = false;
  bool exact = true;
  LocalFactor theta_route;
  LocalFactor tensor_route;
};

TensorIdentityReport verify_tensor_identity(const LiftInput& in, bool exact);

struct EigenvalueProduct {
  Integer product;
  std::optional<bool> matches;  // set when an expected value was supplied
};

/// lambda_p(h) * lambda_p(G), compared exactly with the expected lifted value.
EigenvalueProduct verify_eigenvalue_product(const EigenvalueRecord& h, const EigenvalueRecord& g,
                                            const std::optional<Integer>& expected, long p);

/// Lift input at p from a degree-1 and a degree-2 eigenvalue record.
LiftInput lift_input_from_records(const EigenvalueRecord& h, const EigenvalueRecord& g, long p);

}  // namespace spinor
