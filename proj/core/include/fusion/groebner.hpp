#pragma once

// Strong Gröbner bases over the integers for ideals of Z[X,Y].
//
// A strong basis G has the property that the leading term (coefficient and
// monomial) of every ideal element is divisible by the leading term of some
// g ∈ G.  That makes normal forms detect torsion: if every leading
// coefficient is a unit and the standard monomials are finite, Z[X,Y]/I is
// a free Z-module with the standard monomials as basis.

#include <optional>
#include <span>
#include <vector>

#include "fusion/polynomial.hpp"

namespace fusion {

struct StrongGB {
  /// Reduced, sign-normalized (positive leading coefficients), sorted by
  /// ascending leading monomial.  Unique for a given ideal.
  std::vector<IntPolynomial> generators;
  /// Monomials divisible by no leading monomial, ascending; nullopt when
  /// there are infinitely many.
  std::optional<std::vector<Monomial>> staircase;
  bool unit_leading = false;

  bool staircase_finite() const { return staircase.has_value(); }
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t max_basis_size = 0;
};

/// Buchberger's algorithm over Z with S-polynomials and GCD-polynomials.
/// Throws std::invalid_argument if every input is zero (or the list is empty).
StrongGB strong_groebner(std::span<const IntPolynomial> gens, GroebnerStats* stats = nullptr);

/// Full reduction of p.  Each surviving term c·m has c reduced to the range
/// [0, |lc|) of the basis element with the smallest leading coefficient
/// among those whose leading monomial divides m.  Against a strong basis the
/// result is a canonical coset representative.
IntPolynomial normal_form(const IntPolynomial& p, std::span<const IntPolynomial> basis);
IntPolynomial normal_form(const IntPolynomial& p, const StrongGB& gb);

/// Staircase of a set of leading monomials (nullopt when infinite).
std::optional<std::vector<Monomial>> staircase_of(std::span<const Monomial> leading);

/// Z-module structure of Z[X,Y]/I read off a strong basis.
///
/// Monomials divisible by a unit leading term are eliminated.  The rest
/// (finitely many, if any unit pure powers exist) generate the quotient; each
/// one that is a non-unit leading monomial contributes one relation row.
/// The diagonal form of that relation matrix gives the invariant factors.
struct QuotientStructure {
  bool finitely_generated = false;
  std::optional<std::size_t> rank;
  /// Non-unit invariant factors; empty means the quotient is free.
  std::vector<BigInt> torsion;
  /// Monomials generating the quotient over Z (only if finitely generated).
  std::vector<Monomial> module_generators;

  bool is_free() const { return finitely_generated && torsion.empty(); }
};

QuotientStructure quotient_structure(const StrongGB& gb);

}  // namespace fusion
