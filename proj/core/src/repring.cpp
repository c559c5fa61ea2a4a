#include "fusion/repring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fusion {

namespace {

void require_dominant(Weight w, const char* what) {
  if (!is_dominant(w)) throw std::invalid_argument(std::string(what) + ": weight is not dominant");
}

// Shifted finite-Weyl fold of v = λ+ρ into the open dominant chamber.
// Returns the sign, or 0 when v sits on a wall.
int fold_dominant(const RootSystem& rs, Weight& v) {
  int sign = 1;
  for (;;) {
    if (v.a == 0 || v.b == 0) return 0;
    if (v.a > 0 && v.b > 0) return sign;
    v = reflect(rs, v.a < 0 ? 0 : 1, v);
    sign = -sign;
  }
}

}  // namespace

RepresentationRing& RepresentationRing::shared(Algebra algebra) {
  static RepresentationRing a2(fusion::root_system(Algebra::A2));
  static RepresentationRing c2(fusion::root_system(Algebra::C2));
  static RepresentationRing g2(fusion::root_system(Algebra::G2));
  switch (algebra) {
    case Algebra::A2: return a2;
    case Algebra::C2: return c2;
    case Algebra::G2: return g2;
  }
  throw std::invalid_argument("unknown algebra");
}

WeightMultiplicityTable RepresentationRing::freudenthal(Weight lambda) const {
  const RootSystem& rs = *rs_;
  const Weight rho = RootSystem::rho();
  const int det = determinant(rs.cartan());
  const Weight depth = rs.scaled_root_coordinates(lambda);

  // Dominant μ = λ − n1·α1 − n2·α2, visited by increasing n1 + n2.
  std::vector<std::pair<int, Weight>> order;
  for (int n1 = 0; n1 * det <= depth.a; ++n1)
    for (int n2 = 0; n2 * det <= depth.b; ++n2) {
      Weight mu = lambda - n1 * rs.simple_root(0) - n2 * rs.simple_root(1);
      if (is_dominant(mu)) order.push_back({n1 + n2, mu});
    }
  std::sort(order.begin(), order.end());

  WeightMultiplicityTable table{lambda, {}};
  const auto mult = [&](Weight w) -> std::int64_t {
    auto it = table.entries.find(dominant_representative(rs, w));
    return it == table.entries.end() ? 0 : it->second;
  };
  const std::int64_t top = rs.scaled_norm(lambda + rho);
  for (const auto& [height, mu] : order) {
    if (mu == lambda) {
      table.entries[mu] = 1;
      continue;
    }
    std::int64_t rhs = 0;
    for (Weight alpha : rs.positive_roots()) {
      for (int j = 1;; ++j) {
        const Weight shifted = mu + j * alpha;
        const std::int64_t m = mult(shifted);
        if (m == 0) break;
        rhs += m * rs.scaled_inner(shifted, alpha);
      }
    }
    rhs *= 2;
    const std::int64_t lhs = top - rs.scaled_norm(mu + rho);
    if (lhs <= 0 || rhs % lhs != 0) throw std::logic_error("freudenthal: inexact multiplicity");
    if (rhs != 0) table.entries[mu] = rhs / lhs;
  }
  return table;
}

const WeightMultiplicityTable& RepresentationRing::weight_multiplicities(Weight lambda) {
  require_dominant(lambda, "weight_multiplicities");
  {
    std::lock_guard lock(mutex_);
    if (auto it = multiplicities_.find(lambda); it != multiplicities_.end()) return it->second;
  }
  WeightMultiplicityTable table = freudenthal(lambda);
  std::lock_guard lock(mutex_);
  return multiplicities_.try_emplace(lambda, std::move(table)).first->second;
}

std::vector<std::pair<Weight, std::int64_t>> RepresentationRing::weight_system(Weight lambda) {
  const auto& table = weight_multiplicities(lambda);
  std::vector<std::pair<Weight, std::int64_t>> out;
  for (const auto& [mu, m] : table.entries) {
    std::set<Weight> orbit;
    for (const auto& w : rs_->weyl_elements()) orbit.insert(act(w.matrix, mu));
    for (Weight v : orbit) out.push_back({v, m});
  }
  return out;
}

Decomposition RepresentationRing::tensor_decompose(Weight lambda, Weight mu) {
  require_dominant(lambda, "tensor_decompose");
  require_dominant(mu, "tensor_decompose");
  // Fold over the weights of the smaller factor.
  if (weyl_dimension(*rs_, mu) > weyl_dimension(*rs_, lambda)) std::swap(lambda, mu);
  std::map<Weight, std::int64_t> acc;
  for (const auto& [w, m] : weight_system(mu)) {
    Weight v = lambda + w + RootSystem::rho();
    const int sign = fold_dominant(*rs_, v);
    if (sign != 0) acc[v - RootSystem::rho()] += sign * m;
  }
  Decomposition out;
  for (const auto& [nu, m] : acc) {
    if (m < 0) throw std::logic_error("tensor_decompose: negative multiplicity");
    if (m > 0) out.emplace(nu, m);
  }
  return out;
}

IntPolynomial RepresentationRing::char_poly_descending(Weight lambda, int node) {
  require_dominant(lambda, "char_poly");
  const Weight omega = node == 0 ? Weight{1, 0} : Weight{0, 1};
  const Weight base = lambda - omega;
  if (!is_dominant(base)) throw std::invalid_argument("char_poly: cannot descend along this node");
  IntPolynomial chi = char_poly(base) * (node == 0 ? IntPolynomial::X() : IntPolynomial::Y());
  for (const auto& [nu, m] : tensor_decompose(base, omega))
    if (nu != lambda) chi -= BigInt(static_cast<long>(m)) * char_poly(nu);
  return chi;
}

const IntPolynomial& RepresentationRing::char_poly(Weight lambda) {
  require_dominant(lambda, "char_poly");
  {
    std::lock_guard lock(mutex_);
    if (auto it = characters_.find(lambda); it != characters_.end()) return it->second;
  }
  IntPolynomial chi = lambda == Weight{0, 0} ? IntPolynomial(1) : char_poly_descending(lambda, lambda.a > 0 ? 0 : 1);
  std::lock_guard lock(mutex_);
  return characters_.try_emplace(lambda, std::move(chi)).first->second;
}

WeightMultiplicityTable weight_multiplicities(const RootSystem& rs, Weight lambda) {
  return RepresentationRing::shared(rs.algebra()).weight_multiplicities(lambda);
}

Decomposition tensor_decompose(const RootSystem& rs, Weight lambda, Weight mu) {
  return RepresentationRing::shared(rs.algebra()).tensor_decompose(lambda, mu);
}

IntPolynomial char_poly(const RootSystem& rs, Weight lambda) {
  return RepresentationRing::shared(rs.algebra()).char_poly(lambda);
}

}  // namespace fusion
