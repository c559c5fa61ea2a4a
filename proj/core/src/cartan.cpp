#include "fusion/cartan.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fusion {

std::string_view to_string(Algebra algebra) {
  switch (algebra) {
    case Algebra::A2: return "A2";
    case Algebra::C2: return "C2";
    case Algebra::G2: return "G2";
  }
  return "?";
}

std::optional<Algebra> parse_algebra(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "a2") return Algebra::A2;
  if (lower == "c2" || lower == "b2") return Algebra::C2;
  if (lower == "g2") return Algebra::G2;
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, Weight w) { return os << '(' << w.a << ',' << w.b << ')'; }

namespace {

IntMatrix2 adjugate(const IntMatrix2& m) { return {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}; }

IntMatrix2 reflection_matrix(const IntMatrix2& cartan, int i) {
  IntMatrix2 m{{{1, 0}, {0, 1}}};
  // s_i(e_i) = e_i - α_i, other basis vector fixed.
  m[0][i] -= cartan[0][i];
  m[1][i] -= cartan[1][i];
  return m;
}

}  // namespace

std::int64_t RootSystem::scaled_inner(Weight x, Weight y) const {
  const IntMatrix2 adj = adjugate(cartan_);
  std::int64_t total = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      total += static_cast<std::int64_t>(x[i]) * half_lengths_[i] * adj[i][j] * y[j];
  return total;
}

Weight RootSystem::scaled_root_coordinates(Weight w) const { return act(adjugate(cartan_), w); }

RootSystem build_root_system(Algebra algebra) {
  RootSystem rs;
  rs.algebra_ = algebra;
  switch (algebra) {
    case Algebra::A2:
      rs.cartan_ = {{{2, -1}, {-1, 2}}};
      rs.half_lengths_ = {1, 1};
      break;
    case Algebra::C2:
      // α1 short, α2 long.
      rs.cartan_ = {{{2, -2}, {-1, 2}}};
      rs.half_lengths_ = {1, 2};
      break;
    case Algebra::G2:
      // α1 short, so ω1 is the 7-dimensional representation.
      rs.cartan_ = {{{2, -3}, {-1, 2}}};
      rs.half_lengths_ = {1, 3};
      break;
  }
  for (int j = 0; j < 2; ++j) rs.simple_roots_[j] = {rs.cartan_[0][j], rs.cartan_[1][j]};

  const std::array<IntMatrix2, 2> gens = {reflection_matrix(rs.cartan_, 0),
                                          reflection_matrix(rs.cartan_, 1)};

  // Weyl group: closure of the simple reflections.
  rs.weyl_.push_back({{{{1, 0}, {0, 1}}}, +1});
  for (std::size_t head = 0; head < rs.weyl_.size(); ++head) {
    for (const auto& g : gens) {
      IntMatrix2 next = compose(g, rs.weyl_[head].matrix);
      bool seen = std::any_of(rs.weyl_.begin(), rs.weyl_.end(),
                              [&](const WeylElement& e) { return e.matrix == next; });
      if (!seen) rs.weyl_.push_back({next, determinant(next)});
    }
  }
  for (std::size_t i = 0; i < rs.weyl_.size(); ++i)
    if (act(rs.weyl_[i].matrix, RootSystem::rho()) == -RootSystem::rho()) rs.longest_ = i;

  // Roots: orbit of the simple roots under the simple reflections.
  std::vector<Weight> roots(rs.simple_roots_.begin(), rs.simple_roots_.end());
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (const auto& g : gens) {
      Weight r = act(g, roots[head]);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  }
  const auto height = [&](Weight r) {
    Weight m = rs.scaled_root_coordinates(r);
    return m.a + m.b;
  };
  for (Weight r : roots) {
    Weight m = rs.scaled_root_coordinates(r);
    if (m.a >= 0 && m.b >= 0) rs.positive_roots_.push_back(r);
  }
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
            [&](Weight x, Weight y) { return height(x) != height(y) ? height(x) < height(y) : x < y; });

  for (Weight r : rs.positive_roots_) {
    // α∨ = 2α/(α,α); coefficient of αi∨ is m_i·d_i / d_α.
    Weight m = rs.scaled_root_coordinates(r);
    std::int64_t norm = rs.scaled_norm(r);
    std::array<int, 2> c{};
    for (int i = 0; i < 2; ++i) {
      std::int64_t num = 2LL * m[i] * rs.half_lengths_[i];
      assert(num % norm == 0);
      c[i] = static_cast<int>(num / norm);
    }
    rs.positive_coroots_.push_back({c[0], c[1]});
  }
  rs.highest_root_ = rs.positive_roots_.back();
  rs.comarks_ = rs.positive_coroots_.back();
  rs.dual_coxeter_ = 1 + rs.comarks_.a + rs.comarks_.b;
  return rs;
}

const RootSystem& root_system(Algebra algebra) {
  static const RootSystem a2 = build_root_system(Algebra::A2);
  static const RootSystem c2 = build_root_system(Algebra::C2);
  static const RootSystem g2 = build_root_system(Algebra::G2);
  switch (algebra) {
    case Algebra::A2: return a2;
    case Algebra::C2: return c2;
    case Algebra::G2: return g2;
  }
  throw std::invalid_argument("unknown algebra");
}

Weight reflect(const RootSystem& rs, int i, Weight w) {
  if (i != 0 && i != 1) throw std::invalid_argument("simple root index must be 0 or 1");
  return w - w[i] * rs.simple_root(i);
}

Weight dual_weight(const RootSystem& rs, Weight w) {
  return -act(rs.weyl_elements()[rs.longest_element_index()].matrix, w);
}

int level(const RootSystem& rs, Weight w) { return rs.comarks().a * w.a + rs.comarks().b * w.b; }

std::int64_t weyl_dimension(const RootSystem& rs, Weight w) {
  if (!is_dominant(w)) throw std::invalid_argument("weyl_dimension: weight is not dominant");
  const Weight shifted = w + RootSystem::rho();
  std::int64_t num = 1;
  std::int64_t den = 1;
  for (Weight c : rs.positive_coroots()) {
    num *= c.a * shifted.a + c.b * shifted.b;
    den *= c.a + c.b;
  }
  return num / den;
}

Weight dominant_representative(const RootSystem& rs, Weight w) {
  while (!is_dominant(w)) w = reflect(rs, w.a < 0 ? 0 : 1, w);
  return w;
}

}  // namespace fusion
