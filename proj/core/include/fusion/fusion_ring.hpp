#pragma once

// The level-k fusion ring F_k on the alcove basis P_k.  Structure constants
// come from the Kac–Walton formula: classical tensor multiplicities folded
// into the alcove by the shifted affine Weyl group with determinant signs.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fusion/alcove.hpp"
#include "fusion/polynomial.hpp"

namespace fusion {

/// Dense n×n integer matrix, row-major.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n = 0) : n_(n), data_(n * n, 0) {}
  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y);
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

struct FusionElement {
  Algebra algebra;
  int level;
  std::vector<std::int64_t> coeffs;  // canonical alcove order

  friend bool operator==(const FusionElement&, const FusionElement&) = default;
};

class FusionTable {
 public:
  /// Runs Kac–Walton over all pairs of P_k.
  static FusionTable compute(const Alcove& alc);
  /// Wraps externally supplied constants (e.g. a cache file).  Only the
  /// shape is validated; use the property checks for the rest.
  static FusionTable from_constants(const Alcove& alc, std::vector<std::int64_t> n);

  const Alcove& alcove() const { return alc_; }
  std::size_t size() const { return alc_.size(); }
  std::int64_t N(std::size_t lambda, std::size_t mu, std::size_t nu) const {
    return n_[(lambda * size() + mu) * size() + nu];
  }
  const std::vector<std::int64_t>& constants() const { return n_; }

  /// Multiplication by the image of X = [ω1] (resp. Y = [ω2]) in F_k;
  /// column μ holds the product with [μ].
  const SquareMatrix& mult_X() const { return mult_[0]; }
  const SquareMatrix& mult_Y() const { return mult_[1]; }

  FusionElement zero() const;
  FusionElement basis(std::size_t i) const;
  FusionElement basis(Weight w) const { return basis(alc_.at(w)); }
  /// Image of [λ] for any dominant λ: ±basis of its fold, or zero on a wall.
  FusionElement image(Weight w) const;

  friend bool operator==(const FusionTable& x, const FusionTable& y) {
    return x.alc_ == y.alc_ && x.n_ == y.n_;
  }

 private:
  FusionTable(Alcove alc, std::vector<std::int64_t> n);

  Alcove alc_;
  std::vector<std::int64_t> n_;
  std::array<SquareMatrix, 2> mult_;
};

FusionTable fusion_table(const Alcove& alc);

FusionElement multiply(const FusionTable& t, const FusionElement& u, const FusionElement& v);

/// u* = Σ u_λ [λ*].
FusionElement dual(const FusionTable& t, const FusionElement& u);

/// ⟨u, v⟩ = coefficient of [0] in u·v*.
std::int64_t pairing(const FusionTable& t, const FusionElement& u, const FusionElement& v);

/// Fusion rule N(λ1 + … + λs) = ⟨[λ1]⋯[λs−1], [λs*]⟩.  Throws on an empty
/// multiset or a weight outside P_k.
std::int64_t fusion_rule_N(const FusionTable& t, std::span<const Weight> weights);

struct FrobeniusCheck {
  bool holds = true;
  /// First (λ, ν, μ) with ⟨[λ][ν], [μ]⟩ ≠ ⟨[λ], [ν*][μ]⟩.
  std::optional<std::array<Weight, 3>> counterexample;
};

FrobeniusCheck check_frobenius(const FusionTable& t);

/// p(mult_X, mult_Y) applied to [0].  Throws std::overflow_error if a
/// coefficient leaves the int64 range.
FusionElement evaluate_poly(const FusionTable& t, const IntPolynomial& p);

}  // namespace fusion
