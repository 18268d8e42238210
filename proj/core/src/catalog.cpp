#include "sma/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "sma/grid_io.hpp"

namespace fs = std::filesystem;

namespace sma {

namespace {

// Builtin seeds: the 3x4 tight Heffter array and H(4;3) behind the worked
// examples, plus the 3x7 magic rectangle the SMA(3,7) ingredient uses.
struct BuiltinSeed {
  const char* key;
  const char* family;
  const char* text;
};

const BuiltinSeed kBuiltins[] = {
    {"tight_heffter-3x4", "tight_heffter",
     "# 3 4 4 3\n"
     "1 2 3 -6\n"
     "8 -12 -7 11\n"
     "-9 10 4 -5\n"},
    {"square_heffter-n4-k3", "square_heffter",
     "# 4 4 3 3\n"
     "4 8 . -12\n"
     "-9 3 6 .\n"
     ". -11 1 10\n"
     "5 . -7 2\n"},
    {"magic_rectangle-3x7", "magic_rectangle",
     "# 3 7 7 3\n"
     "0 19 8 13 4 9 17\n"
     "18 10 2 14 15 5 6\n"
     "12 1 20 3 11 16 7\n"},
};

bool heffter_valid(const GridFile& gf) {
  const auto& [grid, spec] = std::tie(gf.grid, gf.spec);
  if (grid.rows() != spec.m || grid.cols() != spec.n) return false;
  std::vector<long long> row_sum(spec.m, 0), col_sum(spec.n, 0);
  std::vector<int> row_cnt(spec.m, 0), col_cnt(spec.n, 0);
  const int max_mag = spec.m * spec.s;
  std::vector<int> seen(max_mag + 1, 0);
  for (const auto& [rc, v] : grid.cells()) {
    if (v == 0 || v < -max_mag || v > max_mag) return false;
    if (seen[std::abs(v)]++) return false;
    row_sum[rc.first - 1] += v;
    col_sum[rc.second - 1] += v;
    row_cnt[rc.first - 1]++;
    col_cnt[rc.second - 1]++;
  }
  for (int r = 0; r < spec.m; ++r) {
    if (row_sum[r] != 0 || row_cnt[r] != spec.s) return false;
  }
  for (int c = 0; c < spec.n; ++c) {
    if (col_sum[c] != 0 || col_cnt[c] != spec.t) return false;
  }
  for (int x = 1; x <= max_mag; ++x) {
    if (!seen[x]) return false;
  }
  return true;
}

bool magic_rectangle_valid(const GridFile& gf) {
  const auto& spec = gf.spec;
  const auto& grid = gf.grid;
  if (spec.s != spec.n || spec.t != spec.m) return false;
  if (grid.filled() != spec.m * spec.n) return false;
  const long long mn = 1LL * spec.m * spec.n;
  std::vector<char> seen(mn, 0);
  std::vector<long long> row_sum(spec.m, 0), col_sum(spec.n, 0);
  for (const auto& [rc, v] : grid.cells()) {
    if (v < 0 || v >= mn || seen[v]) return false;
    seen[v] = 1;
    row_sum[rc.first - 1] += v;
    col_sum[rc.second - 1] += v;
  }
  const long long c = spec.n * (mn - 1) / 2;  // per-row total
  const long long r = spec.m * (mn - 1) / 2;  // per-column total
  for (long long s : row_sum) {
    if (s != c) return false;
  }
  for (long long s : col_sum) {
    if (s != r) return false;
  }
  return true;
}

}  // namespace

std::optional<CatalogEntry> builtin_seed(const std::string& key) {
  for (const auto& seed : kBuiltins) {
    if (key != seed.key) continue;
    GridFile gf = from_text(seed.text);
    CatalogEntry e;
    e.key = seed.key;
    e.family = seed.family;
    e.spec = gf.spec;
    e.grid = gf.grid;
    e.provenance = "builtin";
    e.digest = content_digest(gf.spec, gf.grid);
    return e;
  }
  return std::nullopt;
}

std::string magic_rectangle_key(int m, int n) {
  return "magic_rectangle-" + std::to_string(m) + "x" + std::to_string(n);
}

std::string tight_heffter_key(int m, int n) {
  return "tight_heffter-" + std::to_string(m) + "x" + std::to_string(n);
}

std::string square_heffter_key(int n, int k) {
  return "square_heffter-n" + std::to_string(n) + "-k" + std::to_string(k);
}

bool family_valid(const std::string& family, const GridFile& gf) {
  if (!gf.spec.valid()) return false;
  if (family == "magic_rectangle") return magic_rectangle_valid(gf);
  if (family == "tight_heffter") {
    return gf.spec.s == gf.spec.n && gf.spec.t == gf.spec.m &&
           heffter_valid(gf);
  }
  if (family == "square_heffter") {
    return gf.spec.m == gf.spec.n && gf.spec.s == gf.spec.t &&
           heffter_valid(gf);
  }
  return false;
}

std::optional<std::string> infer_family(const GridFile& gf) {
  if (family_valid("magic_rectangle", gf)) return "magic_rectangle";
  if (family_valid("tight_heffter", gf)) return "tight_heffter";
  if (family_valid("square_heffter", gf)) return "square_heffter";
  return std::nullopt;
}

std::string content_digest(const ArraySpec& spec, const SignedGrid& grid) {
  std::ostringstream canon;
  canon << spec.m << " " << spec.n << " " << spec.s << " " << spec.t << ";";
  for (const auto& [rc, v] : grid.cells()) {
    canon << rc.first << ":" << rc.second << ":" << v << ";";
  }
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : canon.str()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

Catalog::Catalog(std::string dir) : dir_(std::move(dir)) {}

Catalog Catalog::from_env() {
  const char* env = std::getenv("SMA_CATALOG_DIR");
  return Catalog(env && *env ? env : "./catalog");
}

std::string Catalog::path_for(const std::string& key) const {
  return (fs::path(dir_) / (key + ".json")).string();
}

bool Catalog::has(const std::string& key) const {
  if (builtin_seed(key)) return true;
  std::error_code ec;
  return fs::exists(path_for(key), ec);
}

std::optional<CatalogEntry> Catalog::get(const std::string& key) const {
  if (auto e = builtin_seed(key)) return e;
  const std::string path = path_for(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;

  nlohmann::json j;
  GridFile gf;
  try {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();
    j = nlohmann::json::parse(content);
    gf = from_json(content);
  } catch (const std::exception& e) {
    throw integrity_error(key, std::string("unreadable: ") + e.what());
  }

  CatalogEntry entry;
  entry.key = key;
  entry.spec = gf.spec;
  entry.grid = gf.grid;
  entry.family = j.value("family", "");
  entry.provenance = j.value("provenance", "");
  entry.digest = j.value("digest", "");
  if (entry.digest != content_digest(entry.spec, entry.grid)) {
    throw integrity_error(key, "content digest mismatch");
  }
  if (!family_valid(entry.family, {entry.grid, entry.spec})) {
    throw integrity_error(key, "grid fails family verification");
  }
  return entry;
}

void Catalog::put(const CatalogEntry& entry) {
  if (!family_valid(entry.family, {entry.grid, entry.spec})) {
    throw integrity_error(entry.key, "grid fails family verification");
  }
  const std::string digest = content_digest(entry.spec, entry.grid);
  if (has(entry.key)) {
    auto existing = get(entry.key);
    if (existing && existing->digest == digest) return;  // idempotent
    throw integrity_error(entry.key, "conflicting content for existing key");
  }
  std::error_code ec;
  fs::create_directories(dir_, ec);

  nlohmann::ordered_json j =
      nlohmann::ordered_json::parse(to_json(entry.grid, entry.spec));
  j["family"] = entry.family;
  j["provenance"] = entry.provenance.empty() ? "searched" : entry.provenance;
  j["digest"] = digest;
  save_grid_file(path_for(entry.key), j.dump(2) + "\n");
}

std::vector<std::string> Catalog::keys() const {
  std::vector<std::string> out;
  for (const auto& seed : kBuiltins) out.push_back(seed.key);
  std::error_code ec;
  if (fs::exists(dir_, ec)) {
    for (const auto& de : fs::directory_iterator(dir_, ec)) {
      if (!de.is_regular_file()) continue;
      auto p = de.path();
      if (p.extension() != ".json") continue;
      out.push_back(p.stem().string());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Catalog::gc() {
  int removed = 0;
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return 0;
  std::vector<fs::path> doomed;
  for (const auto& de : fs::directory_iterator(dir_, ec)) {
    if (!de.is_regular_file() || de.path().extension() != ".json") continue;
    const std::string key = de.path().stem().string();
    try {
      (void)get(key);
    } catch (const integrity_error&) {
      doomed.push_back(de.path());
    }
  }
  for (const auto& p : doomed) {
    if (fs::remove(p, ec)) ++removed;
  }
  return removed;
}

}  // namespace sma
