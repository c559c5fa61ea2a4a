#include "fusion/table_io.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

#ifndef FUSIONRING_VERSION
#define FUSIONRING_VERSION "dev"
#endif

namespace fusion {

std::string_view code_version() { return FUSIONRING_VERSION; }

std::string cache_key(Algebra algebra, int level) {
  std::ostringstream material;
  material << "fusionring|" << to_string(algebra) << '|' << level << '|' << code_version();
  std::uint64_t hash = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : material.str()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << hash;
  return hex.str();
}

std::string weight_label(Weight w) {
  return std::to_string(w.a) + "·ω1+" + std::to_string(w.b) + "·ω2";
}

std::string table_to_json(const FusionTable& table) {
  const Alcove& alc = table.alcove();
  const std::size_t n = table.size();
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"fusionring-table\",\n";
  out << "  \"cache_key\": \"" << cache_key(alc.algebra(), alc.k()) << "\",\n";
  out << "  \"code_version\": \"" << code_version() << "\",\n";
  out << "  \"algebra\": \"" << to_string(alc.algebra()) << "\",\n";
  out << "  \"level\": " << alc.k() << ",\n";
  out << "  \"h_dual\": " << alc.root_system().dual_coxeter() << ",\n";
  out << "  \"alcove\": [";
  for (std::size_t i = 0; i < n; ++i) out << (i ? ", " : "") << '[' << alc[i].a << ", " << alc[i].b << ']';
  out << "],\n";
  out << "  \"N\": [";
  bool first = true;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) {
        const auto c = table.N(l, m, v);
        if (c == 0) continue;
        out << (first ? "\n    " : ",\n    ") << '[' << l << ", " << m << ", " << v << ", " << c << ']';
        first = false;
      }
  out << (first ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

std::string table_to_csv(const FusionTable& table) {
  const std::size_t n = table.size();
  std::ostringstream out;
  out << "lambda,mu,nu,N\n";
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) out << l << ',' << m << ',' << v << ',' << table.N(l, m, v) << '\n';
  return out.str();
}

std::string table_to_pretty(const FusionTable& table) {
  const Alcove& alc = table.alcove();
  const std::size_t n = table.size();
  std::ostringstream out;
  out << to_string(alc.algebra()) << " level " << alc.k() << ": h_dual = " << alc.root_system().dual_coxeter()
      << ", |P_k| = " << n << '\n';
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = l; m < n; ++m) {
      out << '[' << weight_label(alc[l]) << "] x [" << weight_label(alc[m]) << "] =";
      bool any = false;
      for (std::size_t v = 0; v < n; ++v) {
        const auto c = table.N(l, m, v);
        if (c == 0) continue;
        out << (any ? " + " : " ");
        if (c != 1) out << c << ' ';
        out << '[' << weight_label(alc[v]) << ']';
        any = true;
      }
      if (!any) out << " 0";
      out << '\n';
    }
  return out.str();
}

ParsedTable table_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("fusion table: invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != "fusionring-table")
      throw std::runtime_error("fusion table: unexpected format tag");
    const auto algebra = parse_algebra(doc.at("algebra").get<std::string>());
    if (!algebra) throw std::runtime_error("fusion table: unknown algebra");
    const int level = doc.at("level").get<int>();
    const Alcove alc(root_system(*algebra), level);
    const auto& weights = doc.at("alcove");
    if (weights.size() != alc.size()) throw std::runtime_error("fusion table: alcove size mismatch");
    for (std::size_t i = 0; i < alc.size(); ++i)
      if (Weight{weights[i].at(0).get<int>(), weights[i].at(1).get<int>()} != alc[i])
        throw std::runtime_error("fusion table: alcove order mismatch");
    const std::size_t n = alc.size();
    std::vector<std::int64_t> constants(n * n * n, 0);
    for (const auto& entry : doc.at("N")) {
      const auto l = entry.at(0).get<std::size_t>(), m = entry.at(1).get<std::size_t>(),
                 v = entry.at(2).get<std::size_t>();
      if (l >= n || m >= n || v >= n) throw std::runtime_error("fusion table: index out of range");
      constants[(l * n + m) * n + v] = entry.at(3).get<std::int64_t>();
    }
    return {doc.at("cache_key").get<std::string>(), FusionTable::from_constants(alc, std::move(constants))};
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("fusion table: bad schema: ") + e.what());
  }
}

std::optional<std::filesystem::path> TableCache::default_dir() {
  const char* env = std::getenv("FUSIONRING_CACHE_DIR");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::filesystem::path TableCache::path_for(Algebra algebra, int level) const {
  std::string name(to_string(algebra));
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return dir_ / (name + "_k" + std::to_string(level) + ".json");
}

std::optional<FusionTable> TableCache::load(Algebra algebra, int level) const {
  std::ifstream in(path_for(algebra, level), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  ParsedTable parsed = table_from_json(buffer.str());
  if (parsed.key != cache_key(algebra, level)) return std::nullopt;
  if (parsed.table.alcove().algebra() != algebra || parsed.table.alcove().k() != level) return std::nullopt;
  return std::move(parsed.table);
}

void TableCache::store(const FusionTable& table) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(table.alcove().algebra(), table.alcove().k());
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + temp.string());
    out << table_to_json(table);
    if (!out) throw std::runtime_error("short write to cache file " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

FusionTable TableCache::load_or_compute(Algebra algebra, int level) const {
  if (auto cached = load(algebra, level)) return std::move(*cached);
  FusionTable table = fusion_table(Alcove(root_system(algebra), level));
  store(table);
  return table;
}

}  // namespace fusion
