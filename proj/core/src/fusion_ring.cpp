#include "fusion/fusion_ring.hpp"

#include <map>
#include <stdexcept>

#include "fusion/repring.hpp"

namespace fusion {

SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
  SquareMatrix out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) {
      const std::int64_t xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < x.size(); ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

namespace {

// Σ_ν' M_{λμ}^ν' · det(w) [w.ν'] accumulated onto the alcove basis.
void fold_product(const Alcove& alc, Weight lambda, Weight mu, std::span<std::int64_t> out) {
  for (const auto& [nu, m] : tensor_decompose(alc.root_system(), lambda, mu)) {
    const FoldResult f = fold_to_alcove(alc, nu);
    if (!f.is_wall()) out[alc.at(*f.image)] += f.sign * m;
  }
}

void require_same(const FusionTable& t, const FusionElement& u) {
  if (u.algebra != t.alcove().algebra() || u.level != t.alcove().k() || u.coeffs.size() != t.size())
    throw std::invalid_argument("fusion element belongs to a different alcove");
}

}  // namespace

// mult_X / mult_Y are read off the stored constants, so a table loaded from
// disk is checked through the same matrices that evaluate polynomials.
FusionTable::FusionTable(Alcove alc, std::vector<std::int64_t> n) : alc_(std::move(alc)), n_(std::move(n)) {
  const std::size_t size = alc_.size();
  for (int g = 0; g < 2; ++g) {
    const FoldResult f = fold_to_alcove(alc_, g == 0 ? Weight{1, 0} : Weight{0, 1});
    mult_[g] = SquareMatrix(size);
    if (f.is_wall()) continue;
    const std::size_t l = alc_.at(*f.image);
    for (std::size_t mu = 0; mu < size; ++mu)
      for (std::size_t nu = 0; nu < size; ++nu) mult_[g](nu, mu) = f.sign * N(l, mu, nu);
  }
}

FusionTable FusionTable::compute(const Alcove& alc) {
  const std::size_t n = alc.size();
  std::vector<std::int64_t> constants(n * n * n, 0);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      fold_product(alc, alc[l], alc[m], std::span(constants).subspan((l * n + m) * n, n));
  return FusionTable(alc, std::move(constants));
}

FusionTable FusionTable::from_constants(const Alcove& alc, std::vector<std::int64_t> n) {
  if (n.size() != alc.size() * alc.size() * alc.size())
    throw std::invalid_argument("fusion table has the wrong number of entries");
  return FusionTable(alc, std::move(n));
}

FusionTable fusion_table(const Alcove& alc) { return FusionTable::compute(alc); }

FusionElement FusionTable::zero() const { return {alc_.algebra(), alc_.k(), std::vector<std::int64_t>(size(), 0)}; }

FusionElement FusionTable::basis(std::size_t i) const {
  FusionElement e = zero();
  e.coeffs.at(i) = 1;
  return e;
}

FusionElement FusionTable::image(Weight w) const {
  FusionElement e = zero();
  const FoldResult f = fold_to_alcove(alc_, w);
  if (!f.is_wall()) e.coeffs[alc_.at(*f.image)] = f.sign;
  return e;
}

FusionElement multiply(const FusionTable& t, const FusionElement& u, const FusionElement& v) {
  require_same(t, u);
  require_same(t, v);
  FusionElement out = t.zero();
  const std::size_t n = t.size();
  for (std::size_t l = 0; l < n; ++l) {
    if (u.coeffs[l] == 0) continue;
    for (std::size_t m = 0; m < n; ++m) {
      const std::int64_t c = u.coeffs[l] * v.coeffs[m];
      if (c == 0) continue;
      for (std::size_t nu = 0; nu < n; ++nu) out.coeffs[nu] += c * t.N(l, m, nu);
    }
  }
  return out;
}

FusionElement dual(const FusionTable& t, const FusionElement& u) {
  require_same(t, u);
  FusionElement out = t.zero();
  for (std::size_t i = 0; i < t.size(); ++i) out.coeffs[t.alcove().dual_index(i)] = u.coeffs[i];
  return out;
}

std::int64_t pairing(const FusionTable& t, const FusionElement& u, const FusionElement& v) {
  require_same(t, u);
  require_same(t, v);
  std::int64_t total = 0;
  for (std::size_t l = 0; l < t.size(); ++l) {
    if (u.coeffs[l] == 0) continue;
    for (std::size_t m = 0; m < t.size(); ++m)
      total += u.coeffs[l] * v.coeffs[m] * t.N(l, t.alcove().dual_index(m), 0);
  }
  return total;
}

std::int64_t fusion_rule_N(const FusionTable& t, std::span<const Weight> weights) {
  if (weights.empty()) throw std::invalid_argument("fusion_rule_N: empty multiset");
  for (Weight w : weights)
    if (!t.alcove().contains(w)) throw std::invalid_argument("fusion_rule_N: weight outside the alcove");
  FusionElement product = t.basis(std::size_t{0});
  for (Weight w : weights.first(weights.size() - 1)) product = multiply(t, product, t.basis(w));
  return pairing(t, product, t.basis(dual_weight(t.alcove().root_system(), weights.back())));
}

FrobeniusCheck check_frobenius(const FusionTable& t) {
  const Alcove& alc = t.alcove();
  for (std::size_t l = 0; l < t.size(); ++l)
    for (std::size_t nu = 0; nu < t.size(); ++nu) {
      const FusionElement left = multiply(t, t.basis(l), t.basis(nu));
      const FusionElement nu_dual = t.basis(alc.dual_index(nu));
      for (std::size_t mu = 0; mu < t.size(); ++mu) {
        const FusionElement right = multiply(t, nu_dual, t.basis(mu));
        if (pairing(t, left, t.basis(mu)) != pairing(t, t.basis(l), right))
          return {false, std::array<Weight, 3>{alc[l], alc[nu], alc[mu]}};
      }
    }
  return {};
}

FusionElement evaluate_poly(const FusionTable& t, const IntPolynomial& p) {
  const std::size_t n = t.size();
  using BigVector = std::vector<BigInt>;
  // X^i Y^j [0], built from already known neighbours.
  std::map<std::pair<int, int>, BigVector> powers;
  powers[{0, 0}] = BigVector(n, 0);
  powers[{0, 0}][0] = 1;
  const auto apply_matrix = [&](const SquareMatrix& m, const BigVector& v) {
    BigVector out(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m(r, c) != 0 && v[c] != 0) out[r] += BigInt(static_cast<long>(m(r, c))) * v[c];
    return out;
  };
  const auto power = [&](auto&& self, int i, int j) -> const BigVector& {
    if (auto it = powers.find({i, j}); it != powers.end()) return it->second;
    BigVector v = i > 0 ? apply_matrix(t.mult_X(), self(self, i - 1, j))
                        : apply_matrix(t.mult_Y(), self(self, i, j - 1));
    return powers.emplace(std::pair{i, j}, std::move(v)).first->second;
  };

  BigVector acc(n, 0);
  for (const auto& term : p.terms()) {
    const BigVector& v = power(power, term.monomial.x, term.monomial.y);
    for (std::size_t r = 0; r < n; ++r) acc[r] += term.coeff * v[r];
  }
  FusionElement out = t.zero();
  for (std::size_t r = 0; r < n; ++r) {
    if (!acc[r].fits_slong_p()) throw std::overflow_error("evaluate_poly: coefficient exceeds int64");
    out.coeffs[r] = acc[r].get_si();
  }
  return out;
}

}  // namespace fusion
