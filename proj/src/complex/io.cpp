#include "complex/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "common/errors.hpp"

namespace hexcol {

namespace {

const char* facet_keyword(int dim) {
  switch (dim) {
    case 0: return "vertex";
    case 1: return "edge";
    case 2: return "triangle";
    case 3: return "tetrahedron";
    case 4: return "pentachoron";
    default: return "simplex";
  }
}

const std::map<std::string, int>& keyword_sizes() {
  static const std::map<std::string, int> m{{"vertex", 1},      {"edge", 2},        {"triangle", 3},
                                            {"tetrahedron", 4}, {"pentachoron", 5}, {"simplex", -1}};
  return m;
}

void require_all_vertices_used(int n, const std::vector<Simplex>& facets) {
  std::set<int> used;
  for (const auto& f : facets) used.insert(f.begin(), f.end());
  for (int v = 1; v <= n; ++v)
    if (!used.count(v)) throw InputError("vertex " + std::to_string(v) + " is not used by any facet");
}

}  // namespace

Triangulation parse_text(const std::string& document) {
  std::istringstream in(document);
  std::string line;
  int vertices = -1;
  std::vector<Simplex> facets;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    std::string word;
    ls >> word;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (word == "vertices") {
      if (vertices != -1) throw InputError("repeated 'vertices' line" + where);
      if (!(ls >> vertices) || vertices < 1) throw InputError("malformed 'vertices' line" + where);
      std::string extra;
      if (ls >> extra) throw InputError("trailing text on 'vertices' line" + where);
      continue;
    }
    auto kw = keyword_sizes().find(word);
    if (kw == keyword_sizes().end()) throw InputError("unknown keyword '" + word + "'" + where);
    if (vertices == -1) throw InputError("'vertices' line must come first" + where);
    Simplex s;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw InputError("");
        s.push_back(v);
      } catch (const std::exception&) {
        throw InputError("malformed vertex index '" + tok + "'" + where);
      }
    }
    if (kw->second != -1 && static_cast<int>(s.size()) != kw->second)
      throw InputError("'" + word + "' needs " + std::to_string(kw->second) + " vertices" + where);
    facets.push_back(std::move(s));
  }
  if (vertices == -1) throw InputError("missing 'vertices' line");
  Triangulation t(vertices, facets);
  require_all_vertices_used(vertices, t.facets());
  return t;
}

Triangulation parse_json(const std::string& document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices")) throw InputError("JSON triangulation needs a 'vertices' field");
  const char* key = j.contains("pentachora") ? "pentachora" : "facets";
  if (!j.contains(key) || !j[key].is_array()) throw InputError("JSON triangulation needs a 'pentachora' array");
  try {
    const int n = j["vertices"].get<int>();
    std::vector<Simplex> facets;
    for (const auto& f : j[key]) {
      facets.push_back(f.get<Simplex>());
      if (std::string(key) == "pentachora" && facets.back().size() != 5)
        throw InputError("every pentachoron needs 5 vertices");
    }
    Triangulation t(n, facets);
    require_all_vertices_used(n, t.facets());
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON triangulation: ") + e.what());
  }
}

Triangulation parse_triangulation(const std::string& document) {
  const auto start = document.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && document[start] == '{') return parse_json(document);
  return parse_text(document);
}

std::string serialize_text(const Triangulation& t) {
  std::ostringstream os;
  os << "vertices " << t.num_vertices() << "\n";
  const char* kw = facet_keyword(t.dim());
  for (const auto& f : t.facets()) {
    os << kw;
    for (int v : f) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

std::string serialize_json(const Triangulation& t) {
  nlohmann::ordered_json j;
  j["vertices"] = t.num_vertices();
  j[t.dim() == 4 ? "pentachora" : "facets"] = t.facets();
  return j.dump() + "\n";
}

Triangulation load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triangulation(ss.str());
}

std::string fingerprint(const Triangulation& t) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : serialize_text(t)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hexcol
