#pragma once

// Root-system and Weyl-group data for the rank-2 simple Lie algebras A2, C2
// and G2.  Every weight is expressed in fundamental-weight coordinates
// (Bourbaki node numbering), so reflections are integer matrix operations.

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

enum class Algebra { A2, C2, G2 };

std::string_view to_string(Algebra algebra);

/// Parses "a2", "c2", "g2" (case-insensitive).  "b2" is accepted as an alias
/// of C2.  Returns nullopt for anything else.
std::optional<Algebra> parse_algebra(std::string_view name);

/// λ = a·ω1 + b·ω2.  Coordinates may be negative; dominance is a predicate.
struct Weight {
  int a = 0;
  int b = 0;

  constexpr int operator[](int i) const { return i == 0 ? a : b; }

  friend constexpr Weight operator+(Weight x, Weight y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr Weight operator-(Weight x, Weight y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr Weight operator-(Weight x) { return {-x.a, -x.b}; }
  friend constexpr Weight operator*(int s, Weight x) { return {s * x.a, s * x.b}; }
  friend constexpr bool operator==(Weight, Weight) = default;
  friend constexpr auto operator<=>(Weight, Weight) = default;
};

std::ostream& operator<<(std::ostream& os, Weight w);

constexpr bool is_dominant(Weight w) { return w.a >= 0 && w.b >= 0; }

using IntMatrix2 = std::array<std::array<int, 2>, 2>;

constexpr Weight act(const IntMatrix2& m, Weight w) {
  return {m[0][0] * w.a + m[0][1] * w.b, m[1][0] * w.a + m[1][1] * w.b};
}

constexpr IntMatrix2 compose(const IntMatrix2& x, const IntMatrix2& y) {
  IntMatrix2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

constexpr int determinant(const IntMatrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

struct WeylElement {
  IntMatrix2 matrix;  // acts on ω-coordinates
  int sign;           // det(w) = ±1
};

/// Immutable Cartan data.  Build through build_root_system().
class RootSystem {
 public:
  Algebra algebra() const { return algebra_; }

  /// cartan()[i][j] = ⟨αj, αi∨⟩; column j holds αj in ω-coordinates.
  const IntMatrix2& cartan() const { return cartan_; }
  Weight simple_root(int i) const { return simple_roots_[i]; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// Integer coefficients of α∨ in the simple-coroot basis, aligned with
  /// positive_roots(); ⟨λ, α∨⟩ = Σ c_i λ_i.
  const std::vector<Weight>& positive_coroots() const { return positive_coroots_; }
  Weight highest_root() const { return highest_root_; }
  Weight comarks() const { return comarks_; }
  static constexpr Weight rho() { return {1, 1}; }
  int dual_coxeter() const { return dual_coxeter_; }
  const std::vector<WeylElement>& weyl_elements() const { return weyl_; }
  std::size_t longest_element_index() const { return longest_; }

  /// Weyl-invariant inner product scaled by det(C) so it stays integral.
  std::int64_t scaled_inner(Weight x, Weight y) const;
  std::int64_t scaled_norm(Weight x) const { return scaled_inner(x, x); }

  /// λ in the simple-root basis, scaled by det(C) (exact, integral).
  Weight scaled_root_coordinates(Weight w) const;

 private:
  friend RootSystem build_root_system(Algebra);

  Algebra algebra_{};
  IntMatrix2 cartan_{};
  std::array<int, 2> half_lengths_{};  // (αi, αi)/2 with short roots at 1
  std::array<Weight, 2> simple_roots_{};
  std::vector<Weight> positive_roots_;
  std::vector<Weight> positive_coroots_;
  Weight highest_root_{};
  Weight comarks_{};
  int dual_coxeter_ = 0;
  std::vector<WeylElement> weyl_;
  std::size_t longest_ = 0;
};

RootSystem build_root_system(Algebra algebra);

/// Shared, lazily built instance per algebra.
const RootSystem& root_system(Algebra algebra);

/// Unshifted simple reflection s_i, i ∈ {0, 1}.
Weight reflect(const RootSystem& rs, int i, Weight w);

/// λ* = −w0(λ).
Weight dual_weight(const RootSystem& rs, Weight w);

/// ⟨λ, β0∨⟩.
int level(const RootSystem& rs, Weight w);

/// Dimension of V(λ); throws std::invalid_argument on non-dominant λ.
std::int64_t weyl_dimension(const RootSystem& rs, Weight w);

/// Reflects w into the dominant chamber using the unshifted action.
Weight dominant_representative(const RootSystem& rs, Weight w);

}  // namespace fusion

template <>
struct std::hash<fusion::Weight> {
  std::size_t operator()(fusion::Weight w) const noexcept {
    return std::hash<std::int64_t>{}((static_cast<std::int64_t>(w.a) << 32) ^
                                     static_cast<std::uint32_t>(w.b));
  }
};
