#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sma/grid_io.hpp"
#include "sma/types.hpp"

namespace sma {

// Catalog families and their keys.
std::string magic_rectangle_key(int m, int n);
std::string tight_heffter_key(int m, int n);
std::string square_heffter_key(int n, int k);

/// Validates a grid against its family invariants ("magic_rectangle",
/// "tight_heffter" or "square_heffter").
bool family_valid(const std::string& family, const GridFile& gf);

/// Infers the family of a grid file, if any.
std::optional<std::string> infer_family(const GridFile& gf);

struct CatalogEntry {
  std::string key;
  std::string family;
  ArraySpec spec;
  SignedGrid grid;
  std::string provenance;  // searched | builtin | user-supplied
  std::string digest;
};

std::string content_digest(const ArraySpec& spec, const SignedGrid& grid);

/// Compiled-in seed entries (reference ingredients the worked examples
/// are assembled from); visible through every Catalog and with no store.
std::optional<CatalogEntry> builtin_seed(const std::string& key);

/// Directory-backed store, one JSON file per entry. A small set of builtin
/// reference entries is always visible read-only.
class Catalog {
 public:
  explicit Catalog(std::string dir);
  /// Uses SMA_CATALOG_DIR when set, ./catalog otherwise.
  static Catalog from_env();

  const std::string& dir() const { return dir_; }

  bool has(const std::string& key) const;
  std::optional<CatalogEntry> get(const std::string& key) const;

  /// Verifies the entry, then writes it. Re-putting identical content is a
  /// no-op; conflicting content for an existing key is an integrity error.
  void put(const CatalogEntry& entry);

  std::vector<std::string> keys() const;  // builtins plus directory

  /// Removes directory entries that fail to load or verify; returns the
  /// number removed.
  int gc();

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace sma
