#include "fusion/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "fusion/repring.hpp"

namespace fusion {

const char* const kSoundnessArgument =
    "Every generator maps to zero in F_k, so J is contained in I_k. The strong Groebner basis of J "
    "has n = |P_k| standard monomials and R/J is torsion-free, so R/J is free over Z of rank n. "
    "R/I_k is free of rank n as well, so the surjection R/J -> R/I_k splits and its kernel I_k/J is a "
    "direct summand of rank zero of a free module, hence zero. Therefore J = I_k.";

const char* const kRegularSequenceArgument =
    "I_k has codimension 2 in the regular ring Z[X,Y]; an ideal of codimension 2 generated by two "
    "elements is generated by a regular sequence, so R/I_k is a complete intersection.";

std::vector<IntPolynomial> known_generators(const RootSystem& rs, int k) {
  if (k < 1) throw std::invalid_argument("known_generators: level must be at least 1");
  auto& ring = RepresentationRing::shared(rs.algebra());
  const auto chi = [&](int a, int b) -> IntPolynomial {
    if (a < 0 || b < 0) throw std::invalid_argument("known_generators: level too small for this formula");
    return ring.char_poly({a, b});
  };
  switch (rs.algebra()) {
    case Algebra::A2:
    case Algebra::C2:
      return {chi(k + 1, 0), chi(k, 1)};
    case Algebra::G2:
      if (k % 2 == 0) {
        const int h = k / 2;
        return {chi(0, h + 1) + chi(0, h), chi(1, h), chi(3, h - 1)};
      } else {
        const int h = (k - 1) / 2;
        return {chi(0, h + 1), chi(2, h), chi(3, h) + chi(3, h - 1)};
      }
  }
  throw std::invalid_argument("unknown algebra");
}

PresentationCertificate verify_presentation(const FusionTable& table, std::span<const IntPolynomial> gens) {
  PresentationCertificate cert;
  cert.algebra = table.alcove().algebra();
  cert.level = table.alcove().k();
  cert.generators.assign(gens.begin(), gens.end());
  cert.alcove_size = table.size();

  std::string failure;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    FusionElement w = evaluate_poly(table, gens[i]);
    const bool vanishes = std::all_of(w.coeffs.begin(), w.coeffs.end(), [](auto c) { return c == 0; });
    if (!vanishes && failure.empty())
      failure = "generator " + std::to_string(i) + " does not vanish in F_k";
    cert.evaluation_witnesses.push_back(std::move(w));
  }

  try {
    cert.gb = strong_groebner(gens);
  } catch (const std::invalid_argument&) {
    cert.failure_reason = failure.empty() ? "all generators are zero" : failure;
    return cert;
  }
  if (cert.gb.staircase) cert.rank = cert.gb.staircase->size();

  cert.quotient = quotient_structure(cert.gb);
  if (failure.empty()) {
    if (!cert.gb.staircase) {
      failure = "staircase is infinite";
    } else if (!cert.quotient.finitely_generated) {
      failure = "quotient is not finitely generated over Z";
    } else if (!cert.quotient.is_free()) {
      failure = "quotient has torsion";
      for (const auto& d : cert.quotient.torsion) failure += " Z/" + d.get_str();
    } else if (*cert.rank != table.size()) {
      failure = "rank " + std::to_string(*cert.rank) + " differs from |P_k| = " + std::to_string(table.size());
    }
  }
  cert.verified = failure.empty();
  cert.failure_reason = std::move(failure);
  return cert;
}

PresentationCertificate verify_presentation(const RootSystem& rs, int k, std::span<const IntPolynomial> gens) {
  return verify_presentation(fusion_table(enumerate_alcove(rs, k)), gens);
}

std::vector<IntPolynomial> natural_ideal_elements(const RootSystem& rs, int k, int level_bound) {
  if (level_bound <= k) throw std::invalid_argument("natural_ideal_elements: level_bound must exceed k");
  auto& ring = RepresentationRing::shared(rs.algebra());
  const Alcove outer(rs, level_bound);
  std::vector<IntPolynomial> out;
  for (Weight w : outer.weights()) {
    if (level(rs, w) <= k) continue;
    IntPolynomial p = ring.char_poly(w);
    const FoldResult f = fold_to_alcove(rs, k, w);
    if (!f.is_wall()) p -= BigInt(f.sign) * ring.char_poly(*f.image);
    out.push_back(std::move(p));
  }
  return out;
}

CIReport certify_complete_intersection(const FusionTable& table, const IntPolynomial& p, const IntPolynomial& q) {
  const std::vector<IntPolynomial> gens{p, q};
  CIReport report{verify_presentation(table, gens), false};
  report.regular_sequence = report.certificate.verified;
  return report;
}

CIReport certify_complete_intersection(const RootSystem& rs, int k, const IntPolynomial& p, const IntPolynomial& q) {
  return certify_complete_intersection(fusion_table(enumerate_alcove(rs, k)), p, q);
}

bool gorenstein_duality_check(const FusionTable& table) {
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      if (pairing(table, table.basis(i), table.basis(j)) != (i == j ? 1 : 0)) return false;
  return check_frobenius(table).holds;
}

namespace {

struct Perturbation {
  int index = -1;  // into the h list; -1 means none
  int coeff = 0;
};

std::vector<Perturbation> perturbations_for(std::size_t base, std::size_t h_count, int bound) {
  std::vector<Perturbation> out{{}};
  for (std::size_t s = 0; s < h_count; ++s) {
    if (s == base) continue;  // g_i + a·g_i generates the same thing as g_i
    for (int c = 1; c <= bound; ++c) {
      out.push_back({static_cast<int>(s), c});
      out.push_back({static_cast<int>(s), -c});
    }
  }
  return out;
}

IntPolynomial perturb(const IntPolynomial& g, const Perturbation& pert, std::span<const IntPolynomial> h) {
  if (pert.index < 0) return g;
  return g + BigInt(pert.coeff) * h[pert.index];
}

}  // namespace

SearchReport search_two_generators(const FusionTable& table, int bound) {
  const RootSystem& rs = table.alcove().root_system();
  if (rs.algebra() != Algebra::G2) throw std::invalid_argument("search_two_generators: algebra must be G2");
  if (bound < 0) throw std::invalid_argument("search_two_generators: bound must be nonnegative");

  SearchReport report;
  report.algebra = rs.algebra();
  report.level = table.alcove().k();
  report.bound = bound;
  try {
    report.base_generators = known_generators(rs, report.level);
  } catch (const std::invalid_argument&) {
    return report;  // no known generators at this level: empty candidate space
  }
  report.perturbations = report.base_generators;
  for (auto& p : natural_ideal_elements(rs, report.level, report.level + 1))
    if (std::find(report.perturbations.begin(), report.perturbations.end(), p) == report.perturbations.end())
      report.perturbations.push_back(std::move(p));

  const auto& g = report.base_generators;
  const auto& h = report.perturbations;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      report.candidate_count +=
          perturbations_for(i, h.size(), bound).size() * perturbations_for(j, h.size(), bound).size();

  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto first = perturbations_for(i, h.size(), bound);
      const auto second = perturbations_for(j, h.size(), bound);
      for (const auto& a : first)
        for (const auto& b : second) {
          ++report.candidates_tried;
          IntPolynomial p = perturb(g[i], a, h);
          IntPolynomial q = perturb(g[j], b, h);
          CIReport ci = certify_complete_intersection(table, p, q);
          if (ci.certificate.verified) {
            report.pair = {std::move(p), std::move(q)};
            report.report = std::move(ci);
            return report;
          }
        }
    }
  return report;
}

}  // namespace fusion
