#include "fusion/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fusion {

namespace {

bool is_unit(const BigInt& c) { return c == 1 || c == -1; }

int cmpabs(const BigInt& x, const BigInt& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

bool divides(const BigInt& d, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

void normalize_sign(IntPolynomial& p) {
  if (!p.is_zero() && p.leading_coeff() < 0) p = -p;
}

// Basis element with the smallest |lc| whose leading monomial divides m
// (first one on ties), or -1.
int best_reducer(Monomial m, std::span<const IntPolynomial> basis) {
  int best = -1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& g = basis[i];
    if (g.is_zero() || !g.leading_monomial().divides(m)) continue;
    if (best < 0 || cmpabs(g.leading_coeff(), basis[best].leading_coeff()) < 0)
      best = static_cast<int>(i);
  }
  return best;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Normal selection: smallest lcm first, then by index so runs are reproducible.
bool pair_less(const Pair& p, const Pair& q) {
  if (p.lcm != q.lcm) return p.lcm < q.lcm;
  return std::tie(p.j, p.i) < std::tie(q.j, q.i);
}

}  // namespace

IntPolynomial normal_form(const IntPolynomial& p, std::span<const IntPolynomial> basis) {
  IntPolynomial work = p;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Monomial m = work.leading_monomial();
    const int r = best_reducer(m, basis);
    if (r >= 0) {
      const IntPolynomial& g = basis[r];
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), work.leading_coeff().get_mpz_t(), g.leading_coeff().get_mpz_t());
      if (g.leading_coeff() < 0) {
        // Keep the residue nonnegative for negative divisors as well.
        BigInt rem = work.leading_coeff() - q * g.leading_coeff();
        if (rem < 0) ++q;
      }
      work.subtract_scaled(q, m / g.leading_monomial(), g);
      if (work.is_zero() || work.leading_monomial() != m) continue;
    }
    remainder.push_back(work.pop_leading());
  }
  return IntPolynomial::from_terms(std::move(remainder));
}

IntPolynomial normal_form(const IntPolynomial& p, const StrongGB& gb) { return normal_form(p, gb.generators); }

std::optional<std::vector<Monomial>> staircase_of(std::span<const Monomial> leading) {
  int x_bound = -1, y_bound = -1;
  for (Monomial m : leading) {
    if (m.y == 0 && (x_bound < 0 || m.x < x_bound)) x_bound = m.x;
    if (m.x == 0 && (y_bound < 0 || m.y < y_bound)) y_bound = m.y;
  }
  if (x_bound < 0 || y_bound < 0) return std::nullopt;
  std::vector<Monomial> stairs;
  for (int i = 0; i < x_bound; ++i)
    for (int j = 0; j < y_bound; ++j) {
      const Monomial m{i, j};
      if (std::none_of(leading.begin(), leading.end(), [&](Monomial l) { return l.divides(m); }))
        stairs.push_back(m);
    }
  std::sort(stairs.begin(), stairs.end());
  return stairs;
}

StrongGB strong_groebner(std::span<const IntPolynomial> gens, GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;

  std::vector<IntPolynomial> basis;
  std::vector<Pair> pairs;
  const auto add = [&](IntPolynomial h) {
    normalize_sign(h);
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
      pairs.push_back({i, n, lcm(basis[i].leading_monomial(), h.leading_monomial())});
    basis.push_back(std::move(h));
    st.max_basis_size = std::max(st.max_basis_size, basis.size());
  };
  const auto add_reduced = [&](const IntPolynomial& p) {
    IntPolynomial h = normal_form(p, basis);
    if (h.is_zero()) {
      ++st.reductions_to_zero;
    } else {
      add(std::move(h));
    }
  };

  for (const auto& g : gens)
    if (!g.is_zero()) add_reduced(g);
  if (basis.empty()) throw std::invalid_argument("strong_groebner: all generators are zero");

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    const Pair pr = *it;
    pairs.erase(it);
    ++st.pairs_considered;

    // Copies: add() may reallocate the basis.
    const IntPolynomial f = basis[pr.i];
    const IntPolynomial g = basis[pr.j];
    const BigInt& a = f.leading_coeff();
    const BigInt& b = g.leading_coeff();
    const Monomial tf = pr.lcm / f.leading_monomial();
    const Monomial tg = pr.lcm / g.leading_monomial();

    // Coprime leading monomials with unit leading coefficients: the
    // S-polynomial reduces to zero and no GCD-polynomial is needed.
    const bool coprime = pr.lcm == f.leading_monomial() * g.leading_monomial();
    if (coprime && is_unit(a) && is_unit(b)) {
      ++st.pairs_skipped;
      continue;
    }

    BigInt c;
    mpz_lcm(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    IntPolynomial s = f.scaled_shift(BigInt(c / a), tf);
    s.subtract_scaled(BigInt(c / b), tg, g);

    if (!divides(a, b) && !divides(b, a)) {
      BigInt d, u, v;
      mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      IntPolynomial gp = f.scaled_shift(u, tf);
      gp += g.scaled_shift(v, tg);
      add_reduced(gp);
    }
    add_reduced(s);
  }

  // Minimize: drop elements whose leading term is divisible by another's.
  std::sort(basis.begin(), basis.end(), [](const IntPolynomial& p, const IntPolynomial& q) {
    if (p.leading_monomial() != q.leading_monomial()) return p.leading_monomial() < q.leading_monomial();
    return cmpabs(p.leading_coeff(), q.leading_coeff()) < 0;
  });
  std::vector<IntPolynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const bool lt_divides = basis[j].leading_monomial().divides(basis[i].leading_monomial()) &&
                              divides(basis[j].leading_coeff(), basis[i].leading_coeff());
      if (!lt_divides) continue;
      // Identical leading terms: keep the earliest.
      const bool same = basis[j].leading_monomial() == basis[i].leading_monomial() &&
                        cmpabs(basis[j].leading_coeff(), basis[i].leading_coeff()) == 0;
      redundant = !same || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce against the minimal basis; leading terms stay fixed.
  StrongGB out;
  for (const auto& g : minimal) {
    IntPolynomial tail = g;
    Term lead = tail.pop_leading();
    IntPolynomial reduced = normal_form(tail, minimal);
    reduced += IntPolynomial(lead.coeff, lead.monomial);
    out.generators.push_back(std::move(reduced));
  }
  std::sort(out.generators.begin(), out.generators.end(), [](const IntPolynomial& p, const IntPolynomial& q) {
    return p.leading_monomial() < q.leading_monomial();
  });

  std::vector<Monomial> leading;
  out.unit_leading = true;
  for (const auto& g : out.generators) {
    leading.push_back(g.leading_monomial());
    if (!is_unit(g.leading_coeff())) out.unit_leading = false;
  }
  out.staircase = staircase_of(leading);
  return out;
}

namespace {

// Diagonalizes m in place by unimodular row and column operations and
// returns the nonzero diagonal entries (up to sign).
std::vector<BigInt> diagonal_form(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m[r][c] != 0 && (pr == rows || cmpabs(m[r][c], m[pr][pc]) < 0)) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][c].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

}  // namespace

QuotientStructure quotient_structure(const StrongGB& gb) {
  QuotientStructure out;
  std::vector<Monomial> unit_leading;
  for (const auto& g : gb.generators)
    if (is_unit(g.leading_coeff())) unit_leading.push_back(g.leading_monomial());

  int x_bound = -1, y_bound = -1;
  for (Monomial m : unit_leading) {
    if (m.y == 0 && (x_bound < 0 || m.x < x_bound)) x_bound = m.x;
    if (m.x == 0 && (y_bound < 0 || m.y < y_bound)) y_bound = m.y;
  }
  if (x_bound < 0 || y_bound < 0) return out;
  out.finitely_generated = true;

  std::vector<Monomial> related;  // generators that carry a relation
  for (int i = 0; i < x_bound; ++i)
    for (int j = 0; j < y_bound; ++j) {
      const Monomial m{i, j};
      if (std::any_of(unit_leading.begin(), unit_leading.end(), [&](Monomial u) { return u.divides(m); }))
        continue;
      out.module_generators.push_back(m);
      if (best_reducer(m, gb.generators) >= 0) related.push_back(m);
    }
  std::sort(out.module_generators.begin(), out.module_generators.end());
  out.rank = out.module_generators.size() - related.size();
  if (related.empty()) return out;

  std::vector<std::vector<BigInt>> relations;
  for (Monomial m : related) {
    const IntPolynomial& g = gb.generators[best_reducer(m, gb.generators)];
    IntPolynomial row = g.scaled_shift(BigInt(1), m / g.leading_monomial());
    Term lead = row.pop_leading();
    row = normal_form(row, gb.generators) + IntPolynomial(lead.coeff, lead.monomial);
    std::vector<BigInt> dense(out.module_generators.size(), 0);
    for (const auto& t : row.terms()) {
      auto it = std::lower_bound(out.module_generators.begin(), out.module_generators.end(), t.monomial);
      dense[it - out.module_generators.begin()] = t.coeff;
    }
    relations.push_back(std::move(dense));
  }
  for (BigInt& d : diagonal_form(std::move(relations)))
    if (d != 1) out.torsion.push_back(std::move(d));
  return out;
}

}  // namespace fusion
