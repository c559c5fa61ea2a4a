#include "fusion/alcove.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusion {

Alcove::Alcove(const RootSystem& rs, int k) : rs_(&rs), k_(k) {
  if (k < 0) throw std::invalid_argument("alcove level must be nonnegative");
  const Weight c = rs.comarks();
  for (int a = 0; c.a * a <= k; ++a)
    for (int b = 0; c.a * a + c.b * b <= k; ++b) weights_.push_back({a, b});
  std::sort(weights_.begin(), weights_.end(), [&](Weight x, Weight y) {
    const int lx = level(rs, x), ly = level(rs, y);
    return lx != ly ? lx < ly : x < y;
  });
  for (std::size_t i = 0; i < weights_.size(); ++i) index_.emplace(weights_[i], i);
  dual_.reserve(weights_.size());
  for (Weight w : weights_) dual_.push_back(index_.at(dual_weight(rs, w)));
}

bool Alcove::contains(Weight w) const { return index_.contains(w); }

std::optional<std::size_t> Alcove::index_of(Weight w) const {
  if (auto it = index_.find(w); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t Alcove::at(Weight w) const {
  if (auto i = index_of(w)) return *i;
  throw std::out_of_range("weight is not in the alcove");
}

Alcove enumerate_alcove(const RootSystem& rs, int k) { return Alcove(rs, k); }

FoldResult fold_to_alcove(const Alcove& alc, Weight w) {
  return fold_to_alcove(alc.root_system(), alc.k(), w);
}

FoldResult fold_to_alcove(const RootSystem& rs, int k, Weight w) {
  const int wall_level = k + rs.dual_coxeter();
  const Weight rho = RootSystem::rho();
  const Weight beta0 = rs.highest_root();
  Weight v = w + rho;
  int sign = 1;
  // Every step reflects v across a wall separating it from ρ, an interior
  // point of the shifted alcove, so |v − ρ|² strictly decreases.
  std::int64_t measure = rs.scaled_norm(v - rho);
  for (;;) {
    if (v.a == 0 || v.b == 0) return FoldResult::wall();
    if (v.a < 0 || v.b < 0) {
      v = reflect(rs, v.a < 0 ? 0 : 1, v);
    } else {
      const int lv = level(rs, v);
      if (lv == wall_level) return FoldResult::wall();
      if (lv < wall_level) return FoldResult::interior(v - rho, sign);
      v = v - (lv - wall_level) * beta0;
    }
    sign = -sign;
    const std::int64_t next = rs.scaled_norm(v - rho);
    if (next >= measure) throw std::logic_error("fold_to_alcove: progress measure did not decrease");
    measure = next;
  }
}

}  // namespace fusion
