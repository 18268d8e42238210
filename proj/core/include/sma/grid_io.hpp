#pragma once

#include <string>

#include "sma/types.hpp"

namespace sma {

struct GridFile {
  SignedGrid grid;
  ArraySpec spec;
};

/// Text format: a "# m n s t" header, then one row per line with "." for
/// empty cells and fixed-width, whitespace-separated columns.
std::string to_text(const SignedGrid& grid, const ArraySpec& spec);
GridFile from_text(const std::string& text);

/// JSON format: {"m":..,"n":..,"s":..,"t":..,"cells":[{"r":..,"c":..,"v":..}],
/// "meta":{..}} with 1-based row-major cells.
std::string to_json(const SignedGrid& grid, const ArraySpec& spec);
GridFile from_json(const std::string& text);

/// Reads either format, sniffing the leading character.
GridFile parse_grid_file(const std::string& content);
GridFile load_grid_file(const std::string& path);
void save_grid_file(const std::string& path, const std::string& content);

}  // namespace sma
