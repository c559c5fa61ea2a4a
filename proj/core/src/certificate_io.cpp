#include "fusion/certificate_io.hpp"

#include "fusion/table_io.hpp"
#include "json.hpp"

namespace fusion {

namespace {

using Json = nlohmann::ordered_json;

Json poly_list(const std::vector<IntPolynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(to_string(p));
  return out;
}

Json certificate_object(const PresentationCertificate& cert) {
  Json doc;
  doc["format"] = "fusionring-certificate";
  doc["code_version"] = std::string(code_version());
  doc["algebra"] = std::string(to_string(cert.algebra));
  doc["level"] = cert.level;
  doc["generators"] = poly_list(cert.generators);
  doc["verdict"] = cert.verified ? "verified" : "failed";
  doc["reason"] = cert.failure_reason;
  doc["alcove_size"] = cert.alcove_size;
  doc["rank"] = cert.rank ? Json(*cert.rank) : Json(nullptr);

  Json stairs = nullptr;
  if (cert.gb.staircase) {
    stairs = Json::array();
    for (Monomial m : *cert.gb.staircase) stairs.push_back(to_string(m));
  }
  doc["staircase"] = stairs;
  doc["groebner_basis"] = poly_list(cert.gb.generators);
  doc["unit_leading"] = cert.gb.unit_leading;
  Json torsion = Json::array();
  for (const auto& d : cert.quotient.torsion) torsion.push_back(d.get_str());
  doc["torsion"] = torsion;

  Json evals = Json::array();
  for (const auto& w : cert.evaluation_witnesses) evals.push_back(w.coeffs);
  doc["evaluations"] = evals;
  doc["soundness_argument"] = kSoundnessArgument;
  return doc;
}

Json ci_object(const CIReport& report) {
  Json doc = certificate_object(report.certificate);
  doc["regular_sequence"] = report.regular_sequence;
  doc["regular_sequence_argument"] = report.regular_sequence ? Json(kRegularSequenceArgument) : Json(nullptr);
  return doc;
}

}  // namespace

std::string certificate_to_json(const PresentationCertificate& cert) { return certificate_object(cert).dump(2) + "\n"; }

std::string certificate_to_json(const CIReport& report) { return ci_object(report).dump(2) + "\n"; }

std::string search_report_to_json(const SearchReport& report) {
  Json doc;
  doc["format"] = "fusionring-search";
  doc["code_version"] = std::string(code_version());
  doc["algebra"] = std::string(to_string(report.algebra));
  doc["level"] = report.level;
  doc["bound"] = report.bound;
  doc["outcome"] = report.pair ? "found" : "exhausted";
  doc["candidate_count"] = report.candidate_count;
  doc["candidates_tried"] = report.candidates_tried;
  doc["base_generators"] = poly_list(report.base_generators);
  doc["perturbations"] = poly_list(report.perturbations);
  doc["pair"] = report.pair ? Json::array({to_string(report.pair->first), to_string(report.pair->second)})
                            : Json(nullptr);
  doc["certificate"] = report.report ? ci_object(*report.report) : Json(nullptr);
  return doc.dump(2) + "\n";
}

}  // namespace fusion
