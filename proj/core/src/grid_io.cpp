#include "sma/grid_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace sma {

namespace {

std::string cell_token(const SignedGrid& grid, int r, int c) {
  auto v = grid.at(r, c);
  return v ? std::to_string(*v) : std::string(".");
}

}  // namespace

std::string to_text(const SignedGrid& grid, const ArraySpec& spec) {
  std::ostringstream out;
  out << "# " << spec.m << " " << spec.n << " " << spec.s << " " << spec.t
      << "\n";
  size_t width = 1;
  for (int r = 1; r <= grid.rows(); ++r) {
    for (int c = 1; c <= grid.cols(); ++c) {
      width = std::max(width, cell_token(grid, r, c).size());
    }
  }
  for (int r = 1; r <= grid.rows(); ++r) {
    for (int c = 1; c <= grid.cols(); ++c) {
      std::string tok = cell_token(grid, r, c);
      if (c > 1) out << " ";
      out << std::string(width - tok.size(), ' ') << tok;
    }
    out << "\n";
  }
  return out.str();
}

GridFile from_text(const std::string& text) {
  std::istringstream in(text);
  std::string hash;
  GridFile gf;
  if (!(in >> hash) || hash != "#") {
    throw parse_error("text grid must start with a '# m n s t' header");
  }
  if (!(in >> gf.spec.m >> gf.spec.n >> gf.spec.s >> gf.spec.t)) {
    throw parse_error("malformed grid header");
  }
  if (!gf.spec.valid()) throw parse_error("header spec is invalid");
  gf.grid = SignedGrid(gf.spec.m, gf.spec.n);
  for (int r = 1; r <= gf.spec.m; ++r) {
    for (int c = 1; c <= gf.spec.n; ++c) {
      std::string tok;
      if (!(in >> tok)) throw parse_error("grid body ended early");
      if (tok == ".") continue;
      try {
        gf.grid.set(r, c, std::stoi(tok));
      } catch (const std::invalid_argument&) {
        throw parse_error("bad cell token '" + tok + "'");
      } catch (const std::out_of_range&) {
        throw parse_error("cell value out of range: " + tok);
      }
    }
  }
  std::string rest;
  if (in >> rest) throw parse_error("trailing tokens after grid body");
  return gf;
}

std::string to_json(const SignedGrid& grid, const ArraySpec& spec) {
  nlohmann::ordered_json j;
  j["m"] = spec.m;
  j["n"] = spec.n;
  j["s"] = spec.s;
  j["t"] = spec.t;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& [rc, v] : grid.cells()) {
    cells.push_back({{"r", rc.first}, {"c", rc.second}, {"v", v}});
  }
  j["cells"] = std::move(cells);
  if (!grid.meta.empty()) {
    nlohmann::ordered_json meta;
    if (!grid.meta.method.empty()) meta["method"] = grid.meta.method;
    if (!grid.meta.provider_key.empty()) {
      meta["provider_key"] = grid.meta.provider_key;
    }
    j["meta"] = std::move(meta);
  }
  return j.dump(2) + "\n";
}

GridFile from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("bad JSON: ") + e.what());
  }
  GridFile gf;
  try {
    gf.spec.m = j.at("m").get<int>();
    gf.spec.n = j.at("n").get<int>();
    gf.spec.s = j.at("s").get<int>();
    gf.spec.t = j.at("t").get<int>();
    if (!gf.spec.valid()) throw parse_error("embedded spec is invalid");
    gf.grid = SignedGrid(gf.spec.m, gf.spec.n);
    for (const auto& cell : j.at("cells")) {
      gf.grid.set(cell.at("r").get<int>(), cell.at("c").get<int>(),
                  cell.at("v").get<value_t>());
    }
    if (j.contains("meta")) {
      const auto& meta = j.at("meta");
      if (meta.contains("method")) {
        gf.grid.meta.method = meta.at("method").get<std::string>();
      }
      if (meta.contains("provider_key")) {
        gf.grid.meta.provider_key =
            meta.at("provider_key").get<std::string>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad grid JSON: ") + e.what());
  } catch (const sma::error& e) {
    throw parse_error(std::string("bad grid JSON: ") + e.what());
  }
  return gf;
}

GridFile parse_grid_file(const std::string& content) {
  for (char ch : content) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') return from_json(content);
    if (ch == '#') return from_text(content);
    break;
  }
  throw parse_error("unrecognized grid file format");
}

GridFile load_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grid_file(buf.str());
}

void save_grid_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw error("cannot write file: " + path);
  out << content;
}

}  // namespace sma
