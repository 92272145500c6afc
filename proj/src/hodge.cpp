#include "spinor/hodge.hpp"

#include "spinor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace spinor {

HodgeType::HodgeType(std::vector<HodgePair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

bool HodgeType::contains(HodgePair pq) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), pq);
}

std::optional<int> HodgeType::pure_weight() const {
  if (pairs_.empty()) return std::nullopt;
  int w = pairs_.front().first + pairs_.front().second;
  for (const auto& [p, q] : pairs_)
    if (p + q != w) return std::nullopt;
  return w;
}

bool HodgeType::is_symmetric() const {
  std::vector<HodgePair> mirrored;
  for (const auto& [p, q] : pairs_) mirrored.emplace_back(q, p);
  return HodgeType(std::move(mirrored)) == *this;
}

std::string to_string(const HodgeType& h) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, q] : h.pairs()) {
    out << (first ? "" : " + ") << '(' << p << ',' << q << ')';
    first = false;
  }
  return out.str();
}

namespace {

void require_positive(int w, const char* what) {
  if (w < 1) throw InputError(std::string(what) + " weight must be positive");
}

}  // namespace

HodgeType hodge_gl2(int k) {
  require_positive(k, "elliptic");
  return HodgeType({{0, k - 1}, {k - 1, 0}});
}

HodgeType hodge_gsp4(int l) {
  require_positive(l, "degree-2");
  return HodgeType({{0, 2 * l - 3}, {l - 2, l - 1}, {l - 1, l - 2}, {2 * l - 3, 0}});
}

HodgeType hodge_gsp6(int K) {
  require_positive(K, "degree-3");
  std::vector<HodgePair> half{{0, 3 * K - 6}, {K - 3, 2 * K - 3}, {K - 2, 2 * K - 4}, {K - 1, 2 * K - 5}};
  std::vector<HodgePair> all = half;
  for (const auto& [p, q] : half) all.emplace_back(q, p);
  return HodgeType(std::move(all));
}

HodgeType kunneth_tensor(const HodgeType& a, const HodgeType& b) {
  if (!a.pure_weight() || !b.pure_weight()) throw InputError("Kuenneth product needs pure Hodge types");
  std::vector<HodgePair> out;
  for (const auto& [p1, q1] : a.pairs())
    for (const auto& [p2, q2] : b.pairs()) out.emplace_back(p1 + p2, q1 + q2);
  return HodgeType(std::move(out));
}

std::vector<WeightTriple> weight_solver(int min_weight, int max_weight) {
  std::vector<WeightTriple> solutions;
  int lo = std::max(min_weight + (min_weight % 2 != 0), 2);
  for (int k = lo; k <= max_weight; k += 2)
    for (int l = lo; l <= max_weight; l += 2) {
      HodgeType product = kunneth_tensor(hodge_gl2(k), hodge_gsp4(l));
      for (int K = lo; K <= max_weight; K += 2)
        if (product == hodge_gsp6(K)) solutions.push_back({k, l, K});
    }
  return solutions;
}

}  // namespace spinor
