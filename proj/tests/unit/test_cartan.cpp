#include <set>

#include "doctest.h"
#include "fusion/cartan.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {
constexpr Algebra kAll[] = {Algebra::A2, Algebra::C2, Algebra::G2};
}

TEST_CASE("cartan matrices and basic data") {
  const auto& a2 = root_system(Algebra::A2);
  CHECK(a2.cartan() == IntMatrix2{{{2, -1}, {-1, 2}}});
  CHECK(a2.positive_roots().size() == 3);
  CHECK(a2.weyl_elements().size() == 6);
  CHECK(a2.dual_coxeter() == 3);

  const auto& c2 = root_system(Algebra::C2);
  CHECK(c2.cartan() == IntMatrix2{{{2, -2}, {-1, 2}}});
  CHECK(c2.positive_roots().size() == 4);
  CHECK(c2.weyl_elements().size() == 8);
  CHECK(c2.dual_coxeter() == 3);

  const auto& g2 = root_system(Algebra::G2);
  CHECK(g2.cartan() == IntMatrix2{{{2, -3}, {-1, 2}}});
  CHECK(g2.positive_roots().size() == 6);
  CHECK(g2.weyl_elements().size() == 12);
  CHECK(g2.dual_coxeter() == 4);
  CHECK(g2.comarks() == Weight{1, 2});
}

TEST_CASE("cartan matrices match the hand data") {
  for (Algebra a : kAll) {
    const auto& c = root_system(a).cartan();
    const auto& h = oracle::hand(a).cartan;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(c[i][j] == h[i][j]);
  }
}

TEST_CASE("parse_algebra") {
  CHECK(parse_algebra("a2") == Algebra::A2);
  CHECK(parse_algebra("G2") == Algebra::G2);
  CHECK(parse_algebra("b2") == Algebra::C2);
  CHECK(parse_algebra("C2") == Algebra::C2);
  CHECK_FALSE(parse_algebra("d4").has_value());
  CHECK_FALSE(parse_algebra("").has_value());
  CHECK(to_string(Algebra::G2) == "G2");
}

TEST_CASE("weyl group is closed and signs are multiplicative") {
  for (Algebra a : kAll) {
    const auto& rs = root_system(a);
    const auto& W = rs.weyl_elements();
    std::set<IntMatrix2> mats;
    for (const auto& w : W) {
      mats.insert(w.matrix);
      CHECK(determinant(w.matrix) == w.sign);
    }
    CHECK(mats.size() == W.size());
    for (const auto& x : W)
      for (const auto& y : W) {
        const IntMatrix2 xy = compose(x.matrix, y.matrix);
        CHECK(mats.count(xy) == 1);
        CHECK(determinant(xy) == x.sign * y.sign);
      }
  }
}

TEST_CASE("reflect is an involution and rejects bad indices") {
  for (Algebra a : kAll) {
    const auto& rs = root_system(a);
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y)
        for (int i = 0; i < 2; ++i) {
          const Weight w{x, y};
          CHECK(reflect(rs, i, reflect(rs, i, w)) == w);
          CHECK(reflect(rs, i, w) == oracle::simple_reflection(a, i, w));
        }
    CHECK_THROWS_AS(reflect(rs, 2, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(reflect(rs, -1, {1, 0}), std::invalid_argument);
  }
}

TEST_CASE("examples of the shifted reflection data") {
  const auto& a2 = root_system(Algebra::A2);
  CHECK(reflect(a2, 0, {1, 0}) == Weight{-1, 1});
  CHECK(reflect(a2, 1, {0, 1}) == Weight{1, -1});
  const auto& g2 = root_system(Algebra::G2);
  CHECK(reflect(g2, 0, {1, 0}) == Weight{-1, 1});
  CHECK(g2.highest_root() == Weight{0, 1});
  CHECK(root_system(Algebra::C2).highest_root() == Weight{2, 0});
  CHECK(a2.highest_root() == Weight{1, 1});
}

TEST_CASE("dual weights") {
  const auto& a2 = root_system(Algebra::A2);
  CHECK(dual_weight(a2, {1, 0}) == Weight{0, 1});
  CHECK(dual_weight(a2, {3, 1}) == Weight{1, 3});
  for (Algebra a : {Algebra::C2, Algebra::G2})
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) CHECK(dual_weight(root_system(a), {x, y}) == Weight{x, y});
  for (Algebra a : kAll) {
    const auto& rs = root_system(a);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) {
        const Weight w{x, y};
        CHECK(dual_weight(rs, dual_weight(rs, w)) == w);
        CHECK(level(rs, dual_weight(rs, w)) == level(rs, w));
        CHECK(weyl_dimension(rs, dual_weight(rs, w)) == weyl_dimension(rs, w));
      }
  }
}

TEST_CASE("level and dimension against the product formula") {
  CHECK(weyl_dimension(root_system(Algebra::A2), {1, 0}) == 3);
  CHECK(weyl_dimension(root_system(Algebra::A2), {1, 1}) == 8);
  CHECK(weyl_dimension(root_system(Algebra::C2), {1, 0}) == 4);
  CHECK(weyl_dimension(root_system(Algebra::C2), {0, 1}) == 5);
  CHECK(weyl_dimension(root_system(Algebra::G2), {1, 0}) == 7);
  CHECK(weyl_dimension(root_system(Algebra::G2), {0, 1}) == 14);
  CHECK(weyl_dimension(root_system(Algebra::G2), {0, 0}) == 1);
  for (Algebra a : kAll) {
    const auto& rs = root_system(a);
    for (int x = 0; x < 9; ++x)
      for (int y = 0; y < 9; ++y) {
        CHECK(level(rs, {x, y}) == oracle::level(a, {x, y}));
        CHECK(weyl_dimension(rs, {x, y}) == oracle::weyl_dimension(a, {x, y}));
      }
    CHECK_THROWS_AS(weyl_dimension(rs, {-1, 0}), std::invalid_argument);
    CHECK(1 + level(rs, RootSystem::rho()) == rs.dual_coxeter());
  }
}

TEST_CASE("dominant representative lies in the orbit") {
  for (Algebra a : kAll) {
    const auto& rs = root_system(a);
    for (int x = -5; x <= 5; ++x)
      for (int y = -5; y <= 5; ++y) {
        const Weight d = dominant_representative(rs, {x, y});
        CHECK(is_dominant(d));
        bool found = false;
        for (const auto& w : rs.weyl_elements()) found = found || act(w.matrix, d) == Weight{x, y};
        CHECK(found);
      }
  }
}

TEST_CASE("scaled inner product is Weyl invariant") {
  for (Algebra a : kAll) {
    const auto& rs = root_system(a);
    for (const auto& w : rs.weyl_elements())
      for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y) {
          const Weight u{x, y}, v{y + 1, x - 1};
          CHECK(rs.scaled_inner(act(w.matrix, u), act(w.matrix, v)) == rs.scaled_inner(u, v));
        }
  }
}
