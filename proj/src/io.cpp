#include "golodtight/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "golodtight/errors.hpp"

namespace golodtight {

namespace {

SimplicialComplex parse_structured(const std::string& text, bool allow_isolated) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("bad structured complex: ") + e.what());
  }
  if (!doc.contains("m") || !doc.contains("facets"))
    fail(Errc::parse_error, "structured complex needs fields 'm' and 'facets'");
  int m = 0;
  std::vector<std::vector<int>> facets;
  try {
    m = doc.at("m").get<int>();
    facets = doc.at("facets").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("bad structured complex: ") + e.what());
  }
  return SimplicialComplex::build(m, facets, allow_isolated);
}

SimplicialComplex parse_facet_text(const std::string& text, bool allow_isolated) {
  std::istringstream in(text);
  std::string line;
  int m = -1;
  std::vector<std::vector<int>> facets;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (m < 0) {
      std::string kw;
      if (!(ls >> kw)) continue;  // blank/comment before header
      if (kw != "m") fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected header 'm <count>'");
      if (!(ls >> m) || m <= 0) fail(Errc::parse_error, "line " + std::to_string(lineno) + ": bad vertex count");
      continue;
    }
    std::vector<int> f;
    int v;
    while (ls >> v) f.push_back(v);
    if (!ls.eof()) fail(Errc::parse_error, "line " + std::to_string(lineno) + ": non-integer token");
    if (f.empty()) continue;
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i] <= f[i - 1])
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": vertex list not strictly increasing");
    facets.push_back(std::move(f));
  }
  if (m < 0) fail(Errc::parse_error, "missing 'm <count>' header");
  return SimplicialComplex::build(m, facets, allow_isolated);
}

}  // namespace

SimplicialComplex read_complex(std::istream& in, bool allow_isolated) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(Errc::parse_error, "empty input");
  if (text[first] == '{') return parse_structured(text, allow_isolated);
  return parse_facet_text(text, allow_isolated);
}

SimplicialComplex load_complex(const std::string& path, bool allow_isolated) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  return read_complex(in, allow_isolated);
}

std::string to_facet_text(const SimplicialComplex& k) {
  std::ostringstream out;
  out << "m " << k.m() << "\n";
  for (Mask f : k.facets()) {
    bool first = true;
    for (int v : to_vertices(f)) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string to_structured_text(const SimplicialComplex& k) {
  nlohmann::ordered_json doc;
  doc["m"] = k.m();
  auto facets = nlohmann::ordered_json::array();
  for (Mask f : k.facets()) facets.push_back(to_vertices(f));
  doc["facets"] = std::move(facets);
  return doc.dump(2) + "\n";
}

void save_complex(const SimplicialComplex& k, const std::string& path, bool structured) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << (structured ? to_structured_text(k) : to_facet_text(k));
}

}  // namespace golodtight
