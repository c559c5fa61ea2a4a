#pragma once

// Sparse bivariate polynomials over the integers, kept in canonical form
// under the graded-lex order (total degree first, then higher X-exponent).

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

using BigInt = mpz_class;

struct Monomial {
  int x = 0;
  int y = 0;

  constexpr int degree() const { return x + y; }
  constexpr bool divides(Monomial other) const { return x <= other.x && y <= other.y; }

  friend constexpr Monomial operator*(Monomial p, Monomial q) { return {p.x + q.x, p.y + q.y}; }
  /// Exact quotient; requires q.divides(p).
  friend constexpr Monomial operator/(Monomial p, Monomial q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr std::strong_ordering operator<=>(Monomial p, Monomial q) {
    if (auto c = p.degree() <=> q.degree(); c != 0) return c;
    return p.x <=> q.x;
  }
};

constexpr Monomial lcm(Monomial p, Monomial q) {
  return {p.x > q.x ? p.x : q.x, p.y > q.y ? p.y : q.y};
}

std::string to_string(Monomial m);

struct Term {
  Monomial monomial;
  BigInt coeff;
};

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  IntPolynomial(BigInt coeff, Monomial m);

  static IntPolynomial X() { return {BigInt(1), {1, 0}}; }
  static IntPolynomial Y() { return {BigInt(1), {0, 1}}; }
  /// Builds from arbitrary terms; duplicates are merged and zeros dropped.
  static IntPolynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  /// Terms in strictly decreasing monomial order.
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  Monomial leading_monomial() const { return terms_.front().monomial; }
  const BigInt& leading_coeff() const { return terms_.front().coeff; }
  int total_degree() const { return is_zero() ? -1 : leading_monomial().degree(); }
  BigInt coefficient(Monomial m) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q) { return p += q; }
  friend IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q) { return p -= q; }
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(IntPolynomial p, const BigInt& s) { return p *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial p) { return p *= s; }
  friend IntPolynomial operator-(IntPolynomial p);

  /// p · c · m in one pass.
  IntPolynomial scaled_shift(const BigInt& c, Monomial m) const;
  /// Removes and returns the leading term; requires !is_zero().
  Term pop_leading();
  /// this −= c · m · other, the reduction step.
  void subtract_scaled(const BigInt& c, Monomial m, const IntPolynomial& other);

  BigInt evaluate(const BigInt& x, const BigInt& y) const;

  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q);

 private:
  std::vector<Term> terms_;
};

/// Canonical text form, e.g. "X^2 - Y", "3*X*Y^2 - 1", "0".
std::string to_string(const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Parses the text form (whitespace-insensitive, terms in any order, like
/// terms merged).  Throws std::invalid_argument on malformed input.
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace fusion
