#include "fusion/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fusion {

std::string to_string(Monomial m) {
  if (m.x == 0 && m.y == 0) return "1";
  std::string out;
  const auto var = [&](char name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  };
  var('X', m.x);
  var('Y', m.y);
  return out;
}

IntPolynomial::IntPolynomial(long constant) {
  if (constant != 0) terms_.push_back({{0, 0}, BigInt(constant)});
}

IntPolynomial::IntPolynomial(BigInt coeff, Monomial m) {
  if (coeff != 0) terms_.push_back({m, std::move(coeff)});
}

IntPolynomial IntPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& p, const Term& q) { return p.monomial > q.monomial; });
  IntPolynomial out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

BigInt IntPolynomial::coefficient(Monomial m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

namespace {

// Merges a and sign·b, both sorted descending.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const BigInt& scale,
                        Monomial shift) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial * shift)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial * shift > a[i].monomial) {
      out.push_back({b[j].monomial * shift, scale * b[j].coeff});
      ++j;
    } else {
      BigInt c = a[i].coeff + scale * b[j].coeff;
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  terms_ = merge(terms_, other.terms_, BigInt(1), {0, 0});
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  terms_ = merge(terms_, other.terms_, BigInt(-1), {0, 0});
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  *this = *this * other;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Term> products;
  products.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& s : p.terms_)
    for (const auto& t : q.terms_) products.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return IntPolynomial::from_terms(std::move(products));
}

IntPolynomial operator-(IntPolynomial p) {
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

IntPolynomial IntPolynomial::scaled_shift(const BigInt& c, Monomial m) const {
  IntPolynomial out;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, c * t.coeff});
  return out;
}

Term IntPolynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void IntPolynomial::subtract_scaled(const BigInt& c, Monomial m, const IntPolynomial& other) {
  if (c == 0) return;
  terms_ = merge(terms_, other.terms_, BigInt(-c), m);
}

BigInt IntPolynomial::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  for (const auto& t : terms_) {
    BigInt xp, yp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(t.monomial.x));
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(t.monomial.y));
    total += t.coeff * xp * yp;
  }
  return total;
}

bool operator==(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i)
    if (p.terms_[i].monomial != q.terms_[i].monomial || p.terms_[i].coeff != q.terms_[i].coeff)
      return false;
  return true;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    BigInt magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool constant = t.monomial == Monomial{0, 0};
    if (constant) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + '*';
      out += to_string(t.monomial);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPolynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (done()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    for (;;) {
      terms.push_back(term(negative));
      skip_ws();
      if (done()) break;
      const char op = get();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negative = op == '-';
    }
    return IntPolynomial::from_terms(std::move(terms));
  }

 private:
  Term term(bool negative) {
    skip_ws();
    BigInt coeff = 1;
    Monomial mono;
    bool any = false;
    if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(digits());
      any = true;
      skip_ws();
      if (!done() && peek() == '*') {
        get();
        skip_ws();
        factor(mono);
      }
    } else {
      factor(mono);
      any = true;
    }
    for (;;) {
      skip_ws();
      if (done() || peek() != '*') break;
      get();
      skip_ws();
      factor(mono);
    }
    if (!any) fail("expected a term");
    if (negative) coeff = -coeff;
    return {mono, coeff};
  }

  void factor(Monomial& mono) {
    if (done()) fail("expected X or Y");
    const char v = static_cast<char>(std::toupper(static_cast<unsigned char>(get())));
    if (v != 'X' && v != 'Y') fail(std::string("expected X or Y, got '") + v + "'");
    int exponent = 1;
    skip_ws();
    if (!done() && peek() == '^') {
      get();
      skip_ws();
      exponent = std::stoi(digits());
    }
    (v == 'X' ? mono.x : mono.y) += exponent;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << "polynomial parse error at offset " << pos_ << ": " << what;
    throw std::invalid_argument(msg.str());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace fusion
