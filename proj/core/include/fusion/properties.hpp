#pragma once

// Exhaustive property checks over a fusion table, shared by the CLI
// selftest.  Each check reports the first failing witness.

#include <string>
#include <vector>

#include "fusion/fusion_ring.hpp"

namespace fusion {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string witness;  // empty when passed
};

PropertyResult check_unit(const FusionTable& t);
PropertyResult check_commutative(const FusionTable& t);
PropertyResult check_nonnegative(const FusionTable& t);
PropertyResult check_associative(const FusionTable& t);
PropertyResult check_duality(const FusionTable& t);
PropertyResult check_gram_identity(const FusionTable& t);
PropertyResult check_frobenius_property(const FusionTable& t);
/// [λ] ↦ ±[fold λ] or 0 through χ_λ, for every dominant λ with level ≤ k + extra.
PropertyResult check_presentation_kernel(const FusionTable& t, int extra_levels);
/// χ_λ(dim ω1, dim ω2) = dim V(λ) for all dominant λ with level ≤ max_level.
PropertyResult check_dimension_homomorphism(const RootSystem& rs, int max_level);

std::vector<PropertyResult> run_table_properties(const FusionTable& t);

}  // namespace fusion
