#pragma once

// Certificates that a set of polynomials generates the fusion ideal
// I_k = ker(Z[X,Y] → F_k), without ever constructing I_k.
//
// Step A: every generator maps to zero in F_k, so J ⊆ I_k.
// Step B: a strong Gröbner basis of J has a finite staircase of size
//         n = |P_k| and Z[X,Y]/J is torsion-free, so Z[X,Y]/J ≅ Z^n.  Unit
//         leading coefficients settle freeness at once; otherwise the
//         relation matrix on the non-unit monomials must diagonalize to 1s.
// Together they force J = I_k: the surjection Z^n ≅ R/J → R/I_k ≅ Z^n
// splits, and its kernel is a summand of rank zero, hence zero.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusion/fusion_ring.hpp"
#include "fusion/groebner.hpp"

namespace fusion {

extern const char* const kSoundnessArgument;
extern const char* const kRegularSequenceArgument;

struct PresentationCertificate {
  Algebra algebra{};
  int level = 0;
  std::vector<IntPolynomial> generators;
  std::vector<FusionElement> evaluation_witnesses;
  StrongGB gb;
  /// Staircase size, nullopt when infinite.
  std::optional<std::size_t> rank;
  std::size_t alcove_size = 0;
  QuotientStructure quotient;
  bool verified = false;
  std::string failure_reason;  // empty when verified
};

struct CIReport {
  PresentationCertificate certificate;
  bool regular_sequence = false;
};

/// The generating sets printed for A2/C2 ({[(k+1)ω1], [kω1+ω2]}) and for
/// G2 (three elements, split by the parity of k).  Throws
/// std::invalid_argument when k is out of range for the formula.
std::vector<IntPolynomial> known_generators(const RootSystem& rs, int k);

PresentationCertificate verify_presentation(const FusionTable& table, std::span<const IntPolynomial> gens);
PresentationCertificate verify_presentation(const RootSystem& rs, int k, std::span<const IntPolynomial> gens);

/// χ_λ − sign·χ_{fold(λ)} (or χ_λ on a wall) for each dominant λ with
/// k < level(λ) ≤ level_bound, in alcove order.  Requires level_bound > k.
std::vector<IntPolynomial> natural_ideal_elements(const RootSystem& rs, int k, int level_bound);

CIReport certify_complete_intersection(const FusionTable& table, const IntPolynomial& p, const IntPolynomial& q);
CIReport certify_complete_intersection(const RootSystem& rs, int k, const IntPolynomial& p, const IntPolynomial& q);

/// Gram matrix of the pairing is the identity and the Frobenius identity
/// holds: the executable form of Hom_Z(R/I_k, Z) ≅ R/I_k as R-modules.
bool gorenstein_duality_check(const FusionTable& table);

struct SearchReport {
  Algebra algebra = Algebra::G2;
  int level = 0;
  int bound = 0;
  std::size_t candidate_count = 0;  // size of the enumerated space
  std::size_t candidates_tried = 0;
  std::vector<IntPolynomial> base_generators;
  std::vector<IntPolynomial> perturbations;
  std::optional<std::pair<IntPolynomial, IntPolynomial>> pair;
  std::optional<CIReport> report;
};

/// Brute-force search for a two-element generating set of the G2 fusion ideal.
///
/// Candidates are (g_i + a·h_s, g_j + b·h_t) for i < j over the three known
/// generators g, with h drawn from the known generators followed by the
/// natural ideal elements of level k+1 not already listed, and
/// a, b ∈ [−bound, bound].  Each side carries at most one perturbation
/// term.  Enumeration order: pair
/// (i, j) lexicographic, then the perturbation of the first element, then
/// of the second; a perturbation list starts with "none" and continues by h
/// index with coefficients 1, −1, 2, −2, ….  The first candidate that
/// certifies is returned.  Throws std::invalid_argument for non-G2 input or
/// a negative bound; levels without known generators give an empty space.
SearchReport search_two_generators(const FusionTable& table, int bound);

}  // namespace fusion
