#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fusion/cartan.hpp"

namespace fusion {

/// The level-k alcove P_k: dominant weights with level ≤ k, listed by level
/// and then lexicographically.  Index 0 is always the zero weight.
class Alcove {
 public:
  Alcove(const RootSystem& rs, int k);

  const RootSystem& root_system() const { return *rs_; }
  Algebra algebra() const { return rs_->algebra(); }
  int k() const { return k_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight operator[](std::size_t i) const { return weights_[i]; }

  bool contains(Weight w) const;
  /// Position of w, or nullopt when w ∉ P_k.
  std::optional<std::size_t> index_of(Weight w) const;
  std::size_t at(Weight w) const;  // throws std::out_of_range

  /// Index of λ* for the i-th weight.
  std::size_t dual_index(std::size_t i) const { return dual_[i]; }

  friend bool operator==(const Alcove& x, const Alcove& y) {
    return x.algebra() == y.algebra() && x.k_ == y.k_;
  }

 private:
  const RootSystem* rs_;
  int k_;
  std::vector<Weight> weights_;
  std::unordered_map<Weight, std::size_t> index_;
  std::vector<std::size_t> dual_;
};

Alcove enumerate_alcove(const RootSystem& rs, int k);

/// Outcome of reflecting a weight into P_k by the shifted level-(k+h∨)
/// affine Weyl group.  A wall result has no image.
struct FoldResult {
  std::optional<Weight> image;
  int sign = 0;

  bool is_wall() const { return !image.has_value(); }
  static FoldResult wall() { return {}; }
  static FoldResult interior(Weight w, int s) { return {w, s}; }
  friend bool operator==(const FoldResult&, const FoldResult&) = default;
};

FoldResult fold_to_alcove(const Alcove& alc, Weight w);

/// Same folding with an explicit level; used where no Alcove is at hand.
FoldResult fold_to_alcove(const RootSystem& rs, int k, Weight w);

}  // namespace fusion
