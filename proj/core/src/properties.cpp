#include "fusion/properties.hpp"

#include <sstream>

#include "fusion/repring.hpp"
#include "fusion/table_io.hpp"

namespace fusion {

namespace {

std::string triple(const Alcove& alc, std::size_t l, std::size_t m, std::size_t v) {
  std::ostringstream s;
  s << "(" << weight_label(alc[l]) << ", " << weight_label(alc[m]) << ", " << weight_label(alc[v]) << ")";
  return s.str();
}

PropertyResult pass(std::string name) { return {std::move(name), true, {}}; }
PropertyResult fail(std::string name, std::string witness) { return {std::move(name), false, std::move(witness)}; }

}  // namespace

PropertyResult check_unit(const FusionTable& t) {
  const std::size_t n = t.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t v = 0; v < n; ++v)
      if (t.N(l, 0, v) != (l == v ? 1 : 0) || t.N(0, l, v) != (l == v ? 1 : 0))
        return fail("unit", triple(t.alcove(), l, 0, v));
  return pass("unit");
}

PropertyResult check_commutative(const FusionTable& t) {
  const std::size_t n = t.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = l + 1; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v)
        if (t.N(l, m, v) != t.N(m, l, v)) return fail("commutative", triple(t.alcove(), l, m, v));
  return pass("commutative");
}

PropertyResult check_nonnegative(const FusionTable& t) {
  const std::size_t n = t.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v)
        if (t.N(l, m, v) < 0) return fail("nonnegative", triple(t.alcove(), l, m, v));
  return pass("nonnegative");
}

PropertyResult check_associative(const FusionTable& t) {
  const std::size_t n = t.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t tau = 0; tau < n; ++tau) {
          std::int64_t left = 0, right = 0;
          for (std::size_t s = 0; s < n; ++s) {
            left += t.N(l, m, s) * t.N(s, v, tau);
            right += t.N(m, v, s) * t.N(l, s, tau);
          }
          if (left != right) return fail("associative", triple(t.alcove(), l, m, v) + " -> " + weight_label(t.alcove()[tau]));
        }
  return pass("associative");
}

PropertyResult check_duality(const FusionTable& t) {
  const Alcove& alc = t.alcove();
  const std::size_t n = t.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      if (t.N(l, m, 0) != (m == alc.dual_index(l) ? 1 : 0)) return fail("duality", triple(alc, l, m, 0));
      for (std::size_t v = 0; v < n; ++v)
        if (t.N(l, m, v) != t.N(alc.dual_index(l), alc.dual_index(m), alc.dual_index(v)))
          return fail("duality", triple(alc, l, m, v));
    }
  return pass("duality");
}

PropertyResult check_gram_identity(const FusionTable& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (pairing(t, t.basis(i), t.basis(j)) != (i == j ? 1 : 0))
        return fail("gram-identity", "(" + weight_label(t.alcove()[i]) + ", " + weight_label(t.alcove()[j]) + ")");
  return pass("gram-identity");
}

PropertyResult check_frobenius_property(const FusionTable& t) {
  const FrobeniusCheck c = check_frobenius(t);
  if (c.holds) return pass("frobenius");
  const auto& w = *c.counterexample;
  return fail("frobenius", "(" + weight_label(w[0]) + ", " + weight_label(w[1]) + ", " + weight_label(w[2]) + ")");
}

PropertyResult check_presentation_kernel(const FusionTable& t, int extra_levels) {
  const RootSystem& rs = t.alcove().root_system();
  auto& ring = RepresentationRing::shared(rs.algebra());
  const Alcove outer(rs, t.alcove().k() + extra_levels);
  for (Weight w : outer.weights())
    if (evaluate_poly(t, ring.char_poly(w)) != t.image(w)) return fail("presentation-kernel", weight_label(w));
  return pass("presentation-kernel");
}

PropertyResult check_dimension_homomorphism(const RootSystem& rs, int max_level) {
  auto& ring = RepresentationRing::shared(rs.algebra());
  const BigInt x(static_cast<long>(weyl_dimension(rs, {1, 0})));
  const BigInt y(static_cast<long>(weyl_dimension(rs, {0, 1})));
  const Alcove box(rs, max_level);
  for (Weight w : box.weights())
    if (ring.char_poly(w).evaluate(x, y) != BigInt(static_cast<long>(weyl_dimension(rs, w))))
      return fail("dimension-homomorphism", weight_label(w));
  return pass("dimension-homomorphism");
}

std::vector<PropertyResult> run_table_properties(const FusionTable& t) {
  return {check_unit(t),        check_commutative(t),   check_nonnegative(t),        check_associative(t),
          check_duality(t),     check_gram_identity(t), check_frobenius_property(t), check_presentation_kernel(t, 6)};
}

}  // namespace fusion
