#include "doctest.h"
#include "fusion/certificate_io.hpp"
#include "fusion/certify.hpp"
#include "fusion/repring.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

FusionTable table(Algebra a, int k) { return fusion_table(Alcove(root_system(a), k)); }

std::vector<IntPolynomial> polys(std::initializer_list<const char*> texts) {
  std::vector<IntPolynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t));
  return out;
}

}  // namespace

TEST_CASE("known generators") {
  const auto& a2 = root_system(Algebra::A2);
  CHECK(known_generators(a2, 1) == polys({"X^2 - Y", "X*Y - 1"}));
  const auto& g2 = root_system(Algebra::G2);
  CHECK(known_generators(g2, 2) ==
        std::vector<IntPolynomial>{char_poly(g2, {0, 2}) + char_poly(g2, {0, 1}), char_poly(g2, {1, 1}),
                                   char_poly(g2, {3, 0})});
  CHECK(known_generators(g2, 3) ==
        std::vector<IntPolynomial>{char_poly(g2, {0, 2}), char_poly(g2, {2, 1}),
                                   char_poly(g2, {3, 1}) + char_poly(g2, {3, 0})});
  CHECK_THROWS_AS(known_generators(g2, 1), std::invalid_argument);
  CHECK_THROWS_AS(known_generators(a2, 0), std::invalid_argument);
}

TEST_CASE("verify examples") {
  const auto cert = verify_presentation(root_system(Algebra::A2), 1, polys({"X^2 - Y", "X*Y - 1"}));
  CHECK(cert.verified);
  CHECK(cert.rank == std::size_t{3});
  CHECK(cert.failure_reason.empty());

  const auto repeated = certify_complete_intersection(root_system(Algebra::A2), 1, parse_polynomial("X^2 - Y"),
                                                      parse_polynomial("X^2 - Y"));
  CHECK_FALSE(repeated.certificate.verified);
  CHECK_FALSE(repeated.regular_sequence);
  CHECK(repeated.certificate.failure_reason == "staircase is infinite");

  const auto single = verify_presentation(root_system(Algebra::A2), 2, polys({"X^2 - Y"}));
  CHECK_FALSE(single.verified);
  CHECK(single.failure_reason == "generator 0 does not vanish in F_k");

  const auto c2 = certify_complete_intersection(root_system(Algebra::C2), 1, known_generators(root_system(Algebra::C2), 1)[0],
                                                known_generators(root_system(Algebra::C2), 1)[1]);
  CHECK(c2.certificate.verified);
  CHECK(c2.regular_sequence);
  CHECK(c2.certificate.rank == std::size_t{3});
}

TEST_CASE("a vanishing set of the wrong rank fails") {
  // Extra natural elements keep step A but the pair alone at a lower level
  // cannot match.  Use I_k generators at level k against level k+1.
  const auto gens = known_generators(root_system(Algebra::A2), 2);
  const auto cert = verify_presentation(root_system(Algebra::A2), 3, gens);
  CHECK_FALSE(cert.verified);
  const auto torsion = verify_presentation(root_system(Algebra::A2), 1, polys({"2*X^2 - 2*Y", "X*Y - 1", "3*X - 3*Y"}));
  CHECK_FALSE(torsion.verified);
}

TEST_CASE("all published generating sets verify") {
  for (Algebra a : {Algebra::A2, Algebra::C2})
    for (int k = 1; k <= 6; ++k) {
      const auto gens = known_generators(root_system(a), k);
      const auto report = certify_complete_intersection(table(a, k), gens[0], gens[1]);
      CHECK(report.certificate.verified);
      CHECK(report.regular_sequence);
      CHECK(report.certificate.rank == static_cast<std::size_t>((k + 1) * (k + 2) / 2));
    }
  for (int k = 2; k <= 5; ++k) {
    const auto cert = verify_presentation(root_system(Algebra::G2), k, known_generators(root_system(Algebra::G2), k));
    CHECK(cert.verified);
    CHECK(cert.rank == oracle::alcove_count(Algebra::G2, k));
  }
}

TEST_CASE("natural ideal elements") {
  const auto& a2 = root_system(Algebra::A2);
  const auto elems = natural_ideal_elements(a2, 1, 3);
  // Level-2 and level-3 weights in alcove order: (0,2), (1,1), (2,0), (0,3), (1,2), (2,1), (3,0).
  REQUIRE(elems.size() == 7);
  CHECK(elems[2] == char_poly(a2, {2, 0}));
  CHECK(elems[5] == char_poly(a2, {2, 1}) + char_poly(a2, {1, 0}));
  CHECK_THROWS_AS(natural_ideal_elements(a2, 2, 2), std::invalid_argument);
  const auto t = table(Algebra::G2, 3);
  for (const auto& p : natural_ideal_elements(root_system(Algebra::G2), 3, 8)) CHECK(evaluate_poly(t, p) == t.zero());
}

TEST_CASE("soundness and monotonicity cross-checks") {
  for (Algebra a : {Algebra::A2, Algebra::C2, Algebra::G2})
    for (int k = 2; k <= 4; ++k) {
      const auto& rs = root_system(a);
      const auto gens = known_generators(rs, k);
      const auto cert = verify_presentation(rs, k, gens);
      REQUIRE(cert.verified);
      const auto natural = natural_ideal_elements(rs, k, k + 4);
      for (const auto& p : natural) CHECK(normal_form(p, cert.gb).is_zero());
      for (std::size_t i = 0; i < natural.size(); i += 3) {
        auto more = gens;
        more.push_back(natural[i]);
        const auto bigger = verify_presentation(rs, k, more);
        CHECK(bigger.verified);
        CHECK(bigger.rank == cert.rank);
      }
    }
}

TEST_CASE("single coefficient mutations flip the verdict") {
  for (Algebra a : {Algebra::A2, Algebra::C2})
    for (int k = 1; k <= 4; ++k) {
      const auto gens = known_generators(root_system(a), k);
      const auto t = table(a, k);
      int mutations = 0;
      for (int side = 0; side < 2; ++side)
        for (const auto& term : gens[side].terms())
          for (int delta : {1, -1, 2}) {
            auto mutated = gens;
            mutated[side] += IntPolynomial(BigInt(delta), term.monomial);
            const auto report = certify_complete_intersection(t, mutated[0], mutated[1]);
            CHECK_FALSE(report.certificate.verified);
            CHECK_FALSE(report.regular_sequence);
            ++mutations;
          }
      CHECK(mutations >= 10);
    }
}

TEST_CASE("gorenstein duality check") {
  for (Algebra a : {Algebra::A2, Algebra::C2, Algebra::G2})
    for (int k = 0; k <= 3; ++k) CHECK(gorenstein_duality_check(table(a, k)));
}

TEST_CASE("search") {
  CHECK_THROWS_AS(search_two_generators(table(Algebra::A2, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(search_two_generators(table(Algebra::G2, 2), -1), std::invalid_argument);

  const auto empty = search_two_generators(table(Algebra::G2, 1), 0);
  CHECK(empty.candidate_count == 0);
  CHECK_FALSE(empty.pair.has_value());

  const auto t2 = table(Algebra::G2, 2);
  const auto unperturbed = search_two_generators(t2, 0);
  CHECK(unperturbed.candidate_count == 3);

  const auto first = search_two_generators(t2, 2);
  const auto second = search_two_generators(t2, 2);
  CHECK(search_report_to_json(first) == search_report_to_json(second));
  if (first.pair) {
    const auto again = certify_complete_intersection(t2, first.pair->first, first.pair->second);
    CHECK(again.certificate.verified);
    auto joined = known_generators(root_system(Algebra::G2), 2);
    joined.push_back(first.pair->first);
    joined.push_back(first.pair->second);
    CHECK(verify_presentation(t2, joined).rank == oracle::alcove_count(Algebra::G2, 2));
  }
}

TEST_CASE("certificate json is stable and complete") {
  const auto gens = known_generators(root_system(Algebra::A2), 2);
  const auto t = table(Algebra::A2, 2);
  const auto a = certificate_to_json(certify_complete_intersection(t, gens[0], gens[1]));
  const auto b = certificate_to_json(certify_complete_intersection(t, gens[0], gens[1]));
  CHECK(a == b);
  for (const char* field : {"\"algebra\": \"A2\"", "\"level\": 2", "\"generators\"", "\"staircase\"", "\"rank\": 6",
                            "\"alcove_size\": 6", "\"verdict\": \"verified\"", "\"soundness_argument\"",
                            "\"regular_sequence\": true"})
    CHECK(a.find(field) != std::string::npos);
  CHECK(a.find(to_string(gens[0])) != std::string::npos);
}
