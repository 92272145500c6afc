#include "spinor/lifting.hpp"

#include "spinor/errors.hpp"

#include <algorithm>
#include <cmath>

namespace spinor {

namespace {

void require_even_positive(int k, const char* what) {
  if (k < 2 || k % 2 != 0)
    throw InputError(std::string(what) + " weight must be a positive even integer, got " + std::to_string(k));
}

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

LiftWeights lift_weights(int k1, int k2) {
  require_even_positive(k1, "elliptic");
  require_even_positive(k2, "degree-2");
  if (k1 == k2 - 2) return k2;
  WeightRejection rej;
  rej.k1 = k1;
  rej.k2 = k2;
  rej.tensor = kunneth_tensor(hodge_gl2(k1), hodge_gsp4(k2));
  // Degree-3 candidates with the same motivic weight 3K - 6 = k1 + 2 k2 - 4.
  int total = k1 + 2 * k2 - 4;
  if ((total + 6) % 3 == 0) {
    int K = (total + 6) / 3;
    if (K >= 1) rej.compared.emplace_back(K, hodge_gsp6(K));
  }
  if (k2 >= 1) {
    bool listed = false;
    for (const auto& [K, h] : rej.compared) listed = listed || K == k2;
    if (!listed) rej.compared.emplace_back(k2, hodge_gsp6(k2));
  }
  return rej;
}

LiftInput::LiftInput(long prime, Gl2Part gl2, Gsp4Part gsp4)
    : prime_(prime), gl2_(std::move(gl2)), gsp4_(std::move(gsp4)) {
  if (!is_prime(prime)) throw InputError(std::to_string(prime) + " is not prime");
  auto check_prime = [prime](const auto& part) {
    if constexpr (std::is_same_v<std::decay_t<decltype(part)>, SatakeParams>) {
      if (part.prime != prime) throw InputError("component Satake parameters are at a different prime");
    }
  };
  std::visit(check_prime, gl2_);
  std::visit(check_prime, gsp4_);
  if (const auto* sp = std::get_if<SatakeParams>(&gl2_); sp && sp->degree != 1)
    throw InputError("elliptic component must have degree 1");
  if (const auto* sp = std::get_if<SatakeParams>(&gsp4_); sp && sp->degree != 2)
    throw InputError("degree-2 component must have degree 2");
}

LiftInput LiftInput::make(long prime, Gl2Part gl2, Gsp4Part gsp4) {
  LiftInput in(prime, std::move(gl2), std::move(gsp4));
  auto weights = lift_weights(in.gl2_weight(), in.gsp4_weight());
  if (std::holds_alternative<WeightRejection>(weights))
    throw InputError("weights (" + std::to_string(in.gl2_weight()) + ", " + std::to_string(in.gsp4_weight()) +
                     ") cannot lift: need k1 = k2 - 2");
  return in;
}

LiftInput LiftInput::unchecked(long prime, Gl2Part gl2, Gsp4Part gsp4) {
  return LiftInput(prime, std::move(gl2), std::move(gsp4));
}

int LiftInput::gl2_weight() const {
  return std::visit(Overloaded{[](const SatakeParams& sp) { return sp.weight; },
                               [](const Gl2Data& d) { return d.weight; }},
                    gl2_);
}

int LiftInput::gsp4_weight() const {
  return std::visit(Overloaded{[](const SatakeParams& sp) { return sp.weight; },
                               [](const Gsp4Data& d) { return d.weight; }},
                    gsp4_);
}

bool LiftInput::has_exact_data() const {
  return std::holds_alternative<Gl2Data>(gl2_) && std::holds_alternative<Gsp4Data>(gsp4_);
}

SatakeParams LiftInput::gl2_satake() const {
  return std::visit(Overloaded{[](const SatakeParams& sp) { return sp; },
                               [this](const Gl2Data& d) { return satake_from_gl2(d.weight, prime_, d.a_p); }},
                    gl2_);
}

SatakeParams LiftInput::gsp4_satake() const {
  return std::visit(Overloaded{[](const SatakeParams& sp) { return sp; },
                               [this](const Gsp4Data& d) {
                                 return satake_from_gsp4(d.weight, prime_, d.lambda_p, d.lambda_p2);
                               }},
                    gsp4_);
}

SatakeParams theta_lift(const SatakeParams& gl2, const SatakeParams& gsp4) {
  gl2.validate();
  gsp4.validate();
  if (gl2.degree != 1 || gsp4.degree != 2) throw InputError("theta lift takes degree-1 and degree-2 points");
  if (gl2.prime != gsp4.prime) throw InputError("theta lift of points at different primes");
  return make_satake(3, gsp4.weight, gsp4.prime, gl2.mu0 * gsp4.mu0, {gsp4.mu[0], gsp4.mu[1], gl2.mu[0]});
}

SatakeParams theta_lift(const LiftInput& in) {
  if (in.gl2_weight() != in.gsp4_weight() - 2)
    throw InputError("theta lift needs k1 = k2 - 2, got (" + std::to_string(in.gl2_weight()) + ", " +
                     std::to_string(in.gsp4_weight()) + ")");
  return theta_lift(in.gl2_satake(), in.gsp4_satake());
}

exact::ExactSatakePoint theta_lift_exact(const exact::ExactSatakePoint& gl2, const exact::ExactSatakePoint& gsp4) {
  if (gl2.degree != 1 || gsp4.degree != 2) throw InputError("theta lift takes degree-1 and degree-2 points");
  return exact::ExactSatakePoint{3, gsp4.weight, gsp4.prime, gl2.mu0 * gsp4.mu0,
                                 {gsp4.mu[0], gsp4.mu[1], gl2.mu[0]}};
}

namespace {

const Gl2Data& exact_gl2_data(const LiftInput& in) {
  if (const auto* d = std::get_if<Gl2Data>(&in.gl2())) return *d;
  throw InputError("exact mode needs eigenvalue data for the elliptic component");
}

const Gsp4Data& exact_gsp4_data(const LiftInput& in) {
  if (const auto* d = std::get_if<Gsp4Data>(&in.gsp4())) return *d;
  throw InputError("exact mode needs eigenvalue data for the degree-2 component");
}

}  // namespace

exact::ExactSatakePoint theta_lift_exact(const LiftInput& in) {
  const auto& h = exact_gl2_data(in);
  const auto& g = exact_gsp4_data(in);
  long p = in.prime();
  auto tower = exact::make_tower({exact::gl2_radicands(h.weight, p, h.a_p),
                                  exact::gsp4_radicands(g.weight, p, g.lambda_p, g.lambda_p2)});
  return theta_lift_exact(exact::exact_gl2(tower, h.weight, p, h.a_p),
                          exact::exact_gsp4(tower, g.weight, p, g.lambda_p, g.lambda_p2));
}

LocalFactor theta_route_factor(const LiftInput& in, bool exact) {
  if (exact) return exact::exact_spin_factor(theta_lift_exact(in));
  return spin_local_factor(theta_lift(in));
}

LocalFactor tensor_route_factor(const LiftInput& in, bool exact) {
  if (exact) {
    const auto& h = exact_gl2_data(in);
    const auto& g = exact_gsp4_data(in);
    return tensor_local_factor(gl2_factor_exact(h.weight, in.prime(), h.a_p),
                               gsp4_spin_factor_exact(g.weight, in.prime(), g.lambda_p, g.lambda_p2));
  }
  return tensor_local_factor(spin_local_factor(in.gl2_satake()), spin_local_factor(in.gsp4_satake()));
}

std::vector<double> coefficient_scale(const std::vector<Complex>& inverse_roots) {
  std::vector<double> poly{1.0};
  for (const auto& r : inverse_roots) {
    double m = std::abs(r);
    poly.push_back(0.0);
    for (std::size_t j = poly.size() - 1; j >= 1; --j) poly[j] += m * poly[j - 1];
  }
  return poly;
}

bool factors_agree(const LocalFactor& a, const LocalFactor& b, double tol, const std::vector<double>& scale) {
  if (a.prime() != b.prime() || a.degree() != b.degree()) return false;
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  auto ca = a.as_complex();
  auto cb = b.as_complex();
  for (std::size_t j = 0; j < ca.size(); ++j) {
    double ref = j < scale.size() ? scale[j] : std::max({1.0, std::abs(ca[j]), std::abs(cb[j])});
    if (!(std::abs(ca[j] - cb[j]) <= tol * ref)) return false;
  }
  return true;
}

TensorIdentityReport verify_tensor_identity(const LiftInput& in, bool exact) {
  LocalFactor theta = theta_route_factor(in, exact);
  LocalFactor tensor = tensor_route_factor(in, exact);
  bool holds = exact ? factors_agree(theta, tensor)
                     : factors_agree(theta, tensor, kNumericRouteTolerance,
                                     coefficient_scale(spin_inverse_roots(theta_lift(in))));
  return {holds, exact, std::move(theta), std::move(tensor)};
}

EigenvalueProduct verify_eigenvalue_product(const EigenvalueRecord& h, const EigenvalueRecord& g,
                                            const std::optional<Integer>& expected, long p) {
  EigenvalueProduct out;
  out.product = h.at(p).lambda_p * g.at(p).lambda_p;
  if (expected) out.matches = (out.product == *expected);
  return out;
}

LiftInput lift_input_from_records(const EigenvalueRecord& h, const EigenvalueRecord& g, long p) {
  if (h.degree != 1) throw InputError("record '" + h.label + "' is not elliptic (degree 1)");
  if (g.degree != 2) throw InputError("record '" + g.label + "' is not of degree 2");
  const auto& eg = g.at(p);
  if (!eg.lambda_p2) throw InputError("record '" + g.label + "' lacks lambda_p2 at p=" + std::to_string(p));
  return LiftInput::make(p, Gl2Data{h.weight, h.at(p).lambda_p}, Gsp4Data{g.weight, eg.lambda_p, *eg.lambda_p2});
}

}  // namespace spinor
