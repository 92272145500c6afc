#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinor {

using HodgePair = std::pair<int, int>;

/// Multiset of Hodge types (p, q), kept sorted so that equality is multiset equality.
class HodgeType {
 public:
  HodgeType() = default;
  explicit HodgeType(std::vector<HodgePair> pairs);

  const std::vector<HodgePair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(HodgePair pq) const;

  /// p + q when it is the same for every pair.
  std::optional<int> pure_weight() const;
  /// Invariant under (p, q) -> (q, p) as a multiset.
  bool is_symmetric() const;

  friend bool operator==(const HodgeType&, const HodgeType&) = default;

 private:
  std::vector<HodgePair> pairs_;
};

std::string to_string(const HodgeType& h);

HodgeType hodge_gl2(int k);
HodgeType hodge_gsp4(int l);
HodgeType hodge_gsp6(int K);

/// {(p1 + p2, q1 + q2)} over all pairs. Throws InputError on impure input.
HodgeType kunneth_tensor(const HodgeType& a, const HodgeType& b);

struct WeightTriple {
  int k = 0;  // elliptic
  int l = 0;  // degree 2
  int K = 0;  // degree 3
  friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
};

/// Every even (k, l, K) in [min_weight, max_weight]^3 with
/// hodge_gl2(k) (x) hodge_gsp4(l) == hodge_gsp6(K) as multisets.
std::vector<WeightTriple> weight_solver(int min_weight, int max_weight);

}  // namespace spinor
