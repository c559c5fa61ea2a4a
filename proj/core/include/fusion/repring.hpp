#pragma once

// Classical representation ring of a rank-2 algebra: weight multiplicities
// (Freudenthal), tensor product multiplicities M_{λμ}^ν (Klimyk folding)
// and the character polynomials χ_λ ∈ Z[X,Y] with X = [ω1], Y = [ω2].

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fusion/cartan.hpp"
#include "fusion/polynomial.hpp"

namespace fusion {

struct WeightMultiplicityTable {
  Weight highest;
  /// Dominant weights μ of V(λ) with their multiplicities.
  std::map<Weight, std::int64_t> entries;
};

/// ν ↦ M_{λμ}^ν, strictly positive entries only.
using Decomposition = std::map<Weight, std::int64_t>;

class RepresentationRing {
 public:
  explicit RepresentationRing(const RootSystem& rs) : rs_(&rs) {}
  RepresentationRing(const RepresentationRing&) = delete;
  RepresentationRing& operator=(const RepresentationRing&) = delete;

  /// Process-wide instance for one algebra.
  static RepresentationRing& shared(Algebra algebra);

  const RootSystem& root_system() const { return *rs_; }

  const WeightMultiplicityTable& weight_multiplicities(Weight lambda);
  /// Every weight of V(λ) (full Weyl orbits) with multiplicity.
  std::vector<std::pair<Weight, std::int64_t>> weight_system(Weight lambda);
  Decomposition tensor_decompose(Weight lambda, Weight mu);
  const IntPolynomial& char_poly(Weight lambda);
  /// χ_λ computed by peeling off ω_{node} first (node ∈ {0,1}, λ_node > 0).
  IntPolynomial char_poly_descending(Weight lambda, int node);

 private:
  WeightMultiplicityTable freudenthal(Weight lambda) const;

  const RootSystem* rs_;
  std::mutex mutex_;
  std::unordered_map<Weight, WeightMultiplicityTable> multiplicities_;
  std::unordered_map<Weight, IntPolynomial> characters_;
};

WeightMultiplicityTable weight_multiplicities(const RootSystem& rs, Weight lambda);
Decomposition tensor_decompose(const RootSystem& rs, Weight lambda, Weight mu);
IntPolynomial char_poly(const RootSystem& rs, Weight lambda);

}  // namespace fusion
