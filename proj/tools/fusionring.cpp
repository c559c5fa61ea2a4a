// fusionring: fusion tables, presentation certificates and the G2 pair search.
//
// Exit codes: 0 success or verified, 1 internal error, 2 usage or parse
// error, 3 verification or selftest failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fusion/certificate_io.hpp"
#include "fusion/certify.hpp"
#include "fusion/properties.hpp"
#include "fusion/table_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailed = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fusion::Algebra algebra_or_throw(const std::string& name) {
  const auto parsed = fusion::parse_algebra(name);
  if (!parsed) throw UsageError("unknown algebra '" + name + "' (expected a2, b2, c2 or g2)");
  return *parsed;
}

std::optional<fusion::TableCache> open_cache(const std::string& dir) {
  if (!dir.empty()) return fusion::TableCache(dir);
  if (auto env = fusion::TableCache::default_dir()) return fusion::TableCache(*env);
  return std::nullopt;
}

fusion::FusionTable load_table(const std::optional<fusion::TableCache>& cache, fusion::Algebra algebra, int level) {
  if (cache) return cache->load_or_compute(algebra, level);
  return fusion::fusion_table(fusion::Alcove(fusion::root_system(algebra), level));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("short write to " + path);
}

std::vector<fusion::IntPolynomial> read_generators(const std::vector<std::string>& inline_gens,
                                                    const std::string& gens_file) {
  std::vector<std::string> texts = inline_gens;
  if (!gens_file.empty()) {
    std::ifstream in(gens_file);
    if (!in) throw UsageError("cannot read generator file " + gens_file);
    for (std::string line; std::getline(in, line);) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      texts.push_back(line);
    }
  }
  std::vector<fusion::IntPolynomial> gens;
  for (const auto& t : texts) {
    try {
      gens.push_back(fusion::parse_polynomial(t));
    } catch (const std::invalid_argument& e) {
      throw UsageError("cannot parse generator '" + t + "': " + e.what());
    }
  }
  return gens;
}

int run_table(const std::optional<fusion::TableCache>& cache, const std::string& algebra, int level,
              const std::string& format) {
  const auto table = load_table(cache, algebra_or_throw(algebra), level);
  if (format == "json") {
    std::cout << fusion::table_to_json(table);
  } else if (format == "csv") {
    std::cout << fusion::table_to_csv(table);
  } else {
    std::cout << fusion::table_to_pretty(table);
  }
  return kExitOk;
}

int run_verify(const std::optional<fusion::TableCache>& cache, const std::string& algebra, int level,
               const std::vector<std::string>& inline_gens, const std::string& gens_file, bool known,
               const std::string& out) {
  const auto alg = algebra_or_throw(algebra);
  std::vector<fusion::IntPolynomial> gens;
  if (known) {
    try {
      gens = fusion::known_generators(fusion::root_system(alg), level);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    gens = read_generators(inline_gens, gens_file);
  }
  if (gens.empty()) throw UsageError("no generators given (use --gens, --gens-file or --known)");

  const auto table = load_table(cache, alg, level);
  std::string json;
  bool verified = false;
  if (gens.size() == 2) {
    const auto report = fusion::certify_complete_intersection(table, gens[0], gens[1]);
    verified = report.certificate.verified;
    json = fusion::certificate_to_json(report);
  } else {
    const auto cert = fusion::verify_presentation(table, gens);
    verified = cert.verified;
    json = fusion::certificate_to_json(cert);
  }
  write_output(out, json);
  if (!out.empty() && out != "-") std::cerr << (verified ? "verified" : "failed") << ": certificate written to " << out << '\n';
  return verified ? kExitOk : kExitFailed;
}

int run_search(const std::optional<fusion::TableCache>& cache, int level, int bound, const std::string& out,
               const std::string& cert_out) {
  const auto table = load_table(cache, fusion::Algebra::G2, level);
  const auto report = fusion::search_two_generators(table, bound);
  write_output(out, fusion::search_report_to_json(report));
  if (report.pair && !cert_out.empty()) {
    write_output(cert_out, fusion::certificate_to_json(*report.report));
    std::cerr << "certificate written to " << cert_out << '\n';
  }
  if (!report.pair) std::cerr << "exhausted after " << report.candidates_tried << " of " << report.candidate_count << " candidates\n";
  return kExitOk;
}

// First index triple where two tables disagree, as a witness string.
std::string first_difference(const fusion::FusionTable& a, const fusion::FusionTable& b) {
  const std::size_t n = a.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v)
        if (a.N(l, m, v) != b.N(l, m, v))
          return "N(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(v) + ") cached " +
                 std::to_string(a.N(l, m, v)) + " recomputed " + std::to_string(b.N(l, m, v));
  return {};
}

int run_selftest(const std::optional<fusion::TableCache>& cache, int max_level) {
  std::size_t checks = 0, failures = 0;
  const auto report = [&](std::string_view algebra, int level, const fusion::PropertyResult& r) {
    ++checks;
    if (r.passed) return;
    ++failures;
    std::cout << "FAIL " << algebra << " k=" << level << ' ' << r.name << ": " << r.witness << '\n';
  };

  for (auto alg : {fusion::Algebra::A2, fusion::Algebra::C2, fusion::Algebra::G2}) {
    const auto& rs = fusion::root_system(alg);
    const auto name = fusion::to_string(alg);
    for (int k = 0; k <= max_level; ++k) {
      const auto fresh = fusion::fusion_table(fusion::Alcove(rs, k));
      std::optional<fusion::FusionTable> cached;
      if (cache) {
        try {
          cached = cache->load_or_compute(alg, k);
        } catch (const std::exception& e) {
          report(name, k, fusion::PropertyResult{"cache_readable", false, cache->path_for(alg, k).string() + ": " + e.what()});
          continue;
        }
        report(name, k, fusion::PropertyResult{"cache_matches_recompute", *cached == fresh, first_difference(*cached, fresh)});
      }
      for (const auto& r : fusion::run_table_properties(cached ? *cached : fresh)) report(name, k, r);
    }
    report(name, max_level, fusion::check_dimension_homomorphism(rs, max_level + 4));
  }
  std::cout << "selftest: " << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion rings of A2, C2 and G2: tables, presentation certificates, generator search"};
  app.set_version_flag("--version", std::string(fusion::code_version()));
  app.require_subcommand(1);

  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "Fusion table cache directory (default: $FUSIONRING_CACHE_DIR)");

  std::string algebra, format = "pretty", out, cert_out, gens_file;
  int level = 0, bound = 0, max_level = 0;
  std::vector<std::string> gens;
  bool known = false;

  auto* table = app.add_subcommand("table", "Print the fusion structure constants");
  table->add_option("--algebra", algebra, "a2, b2 (= c2), c2 or g2")->required();
  table->add_option("--level", level, "Level k >= 0")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* verify = app.add_subcommand("verify", "Certify that generators present the fusion ring");
  verify->add_option("--algebra", algebra, "a2, b2 (= c2), c2 or g2")->required();
  verify->add_option("--level", level, "Level k >= 0")->required()->check(CLI::NonNegativeNumber);
  auto* gens_opt = verify->add_option("--gens", gens, "Generator polynomial, e.g. \"X^2 - Y\" (repeatable)");
  auto* file_opt = verify->add_option("--gens-file", gens_file, "File with one polynomial per line");
  auto* known_opt = verify->add_flag("--known", known, "Use the published generating set");
  known_opt->excludes(gens_opt)->excludes(file_opt);
  verify->add_option("--out", out, "Certificate path (default: stdout)");

  auto* search = app.add_subcommand("search", "Search for a two-element generating set (G2)");
  search->add_option("--level", level, "Level k >= 0")->required()->check(CLI::NonNegativeNumber);
  search->add_option("--bound", bound, "Coefficient bound >= 0")->required()->check(CLI::NonNegativeNumber);
  search->add_option("--out", out, "Report path (default: stdout)");
  search->add_option("--cert-out", cert_out, "Where to write the certificate of a found pair");

  auto* selftest = app.add_subcommand("selftest", "Run the property suite on every algebra up to a level");
  selftest->add_option("--max-level", max_level, "Largest level")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto cache = open_cache(cache_dir);
    if (table->parsed()) return run_table(cache, algebra, level, format);
    if (verify->parsed()) return run_verify(cache, algebra, level, gens, gens_file, known, out);
    if (search->parsed()) return run_search(cache, level, bound, out, cert_out);
    if (selftest->parsed()) return run_selftest(cache, max_level);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
