#include "uberdh/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "uberdh/errors.hpp"

namespace uberdh {

namespace {

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{';
  }
  return false;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v > 1000000) throw InputError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<std::vector<long long>> text_rows(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw InputError("not an integer: '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

Json big_json(const BigInt& x) {
  if (x <= BigInt(std::numeric_limits<long long>::max())) return Json(x.convert_to<long long>());
  return Json(x.str());
}

std::string bidegree(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

SimplicialComplex parse_complex(const std::string& text, std::optional<int> vertices) {
  std::vector<std::vector<int>> facets;
  int m = 0;
  if (looks_like_json(text)) {
    const Json j = parse_json(text);
    if (!j.contains("facets") || !j["facets"].is_array()) throw InputError("JSON complex needs a \"facets\" array");
    int largest = -1;
    for (const auto& f : j["facets"]) {
      if (!f.is_array()) throw InputError("each facet must be an array of vertices");
      std::vector<int> facet;
      for (const auto& v : f) {
        if (!v.is_number_integer()) throw InputError("vertices must be integers");
        const long long x = v.get<long long>();
        if (x < 0 || x >= kMaxVertices) throw VertexOutOfRange(static_cast<int>(std::clamp<long long>(x, -1, 1 << 30)), kMaxVertices);
        facet.push_back(static_cast<int>(x));
        largest = std::max(largest, static_cast<int>(x));
      }
      facets.push_back(std::move(facet));
    }
    m = j.contains("m") ? as_int(j["m"], "m") : largest + 1;
  } else {
    int largest = -1;
    for (const auto& row : text_rows(text)) {
      std::vector<int> facet;
      for (long long x : row) {
        if (x < 0 || x >= kMaxVertices) throw VertexOutOfRange(static_cast<int>(std::clamp<long long>(x, -1, 1 << 30)), kMaxVertices);
        facet.push_back(static_cast<int>(x));
        largest = std::max(largest, static_cast<int>(x));
      }
      facets.push_back(std::move(facet));
    }
    m = largest + 1;
  }
  if (vertices) m = *vertices;
  if (facets.empty()) throw InputError("the complex has no facets");
  for (const auto& f : facets)
    if (f.empty()) throw InputError("empty facet");
  if (m > kMaxVertices) throw InputError("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  return SimplicialComplex::from_facets(m, facets);
}

Graph parse_graph(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int n = -1, largest = -1;
  auto add = [&](long long u, long long v) {
    if (u < 0 || v < 0 || u >= 64 || v >= 64 || u == v) throw InputError("bad edge " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    largest = std::max<int>(largest, static_cast<int>(std::max(u, v)));
  };
  if (looks_like_json(text)) {
    const Json j = parse_json(text);
    if (j.contains("n")) n = as_int(j["n"], "n");
    if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("JSON graph needs an \"edges\" array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InputError("each edge must be a pair of integers");
      add(e[0].get<long long>(), e[1].get<long long>());
    }
  } else {
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string a, b;
      if (!(ls >> a)) continue;
      if (first && a == "n") {
        if (!(ls >> b)) throw InputError("'n' needs a count");
        n = as_int(Json(std::stoll(b)), "n");
        first = false;
        continue;
      }
      first = false;
      if (!(ls >> b)) throw InputError("edge line needs two vertices");
      try {
        add(std::stoll(a), std::stoll(b));
      } catch (const std::invalid_argument&) {
        throw InputError("not an edge: '" + line + "'");
      }
    }
  }
  if (n < 0) n = largest + 1;
  if (n > 64) throw InputError("graphs are limited to 64 vertices");
  if (largest >= n) throw VertexOutOfRange(largest, n);
  return Graph(n, edges);
}

Json complex_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (VertexSet f : k.facets()) facets.push_back(f.vertices());
  return Json{{"m", k.vertex_count()}, {"facets", facets}};
}

Json group_json(const GroupClass& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion()) torsion.push_back(big_json(d));
  return Json{{"rank", g.rank()}, {"torsion", torsion}};
}

Json graded_json(const GradedGroup& g) {
  Json out = Json::array();
  for (const auto& [deg, grp] : g) {
    Json e{{"degree", deg}};
    e.update(group_json(grp));
    out.push_back(e);
  }
  return out;
}

Json subsets_json(const std::vector<GradedGroup>& groups) {
  Json out = Json::array();
  for (std::size_t mask = 0; mask < groups.size(); ++mask) {
    if (groups[mask].empty()) continue;
    out.push_back(Json{{"subset", VertexSet(mask).vertices()}, {"homology", graded_json(groups[mask])}});
  }
  return out;
}

Json uber_json(const TriGradedTable& t) {
  Json out = Json::array();
  for (const auto& [jki, g] : t) {
    const auto [j, k, i] = jki;
    Json e{{"j", j}, {"k", k}, {"i", i}};
    e.update(group_json(g));
    out.push_back(e);
  }
  return out;
}

Json zero_degree_json(const BigradedTable& t) {
  Json out = Json::array();
  for (const auto& [ji, g] : t) {
    Json e{{"j", ji.first}, {"i", ji.second}};
    e.update(group_json(g));
    out.push_back(e);
  }
  return out;
}

Json double_json(const BigradedTable& dh) {
  Json out = Json::array();
  for (const auto& [kl, g] : dh) {
    Json e{{"k", kl.first}, {"l", kl.second}, {"display", {-kl.first, 2 * kl.second}}};
    e.update(group_json(g));
    out.push_back(e);
  }
  return out;
}

Json page_json(const std::string& variant, int page, const BigradedTable& entries) {
  Json list = Json::array();
  for (const auto& [pq, g] : entries) {
    Json e{{"p", pq.first}, {"q", pq.second}};
    e.update(group_json(g));
    list.push_back(e);
  }
  return Json{{"variant", variant}, {"page", page}, {"entries", list}};
}

Json polynomial_json(const IntPolynomial& p) {
  return Json{{"polynomial", p.to_string()}, {"coefficients", p.coefficients()}};
}

Json report_json(const VerificationReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    claims.push_back(Json{{"id", c.id},
                          {"statement", c.statement},
                          {"hypotheses", c.hypotheses},
                          {"status", to_string(c.status)},
                          {"details", c.details},
                          {"notes", c.notes}});
  }
  return Json{{"coefficients", r.coefficients.name()}, {"claims", claims}, {"failures", r.failures()}};
}

std::string graded_text(const GradedGroup& g) {
  std::ostringstream os;
  for (const auto& [deg, grp] : g) os << "H_" << deg << " = " << grp.to_string() << "\n";
  if (g.empty()) os << "all groups vanish\n";
  return os.str();
}

std::string subsets_text(const std::vector<GradedGroup>& groups) {
  std::ostringstream os;
  for (std::size_t mask = 0; mask < groups.size(); ++mask) {
    if (groups[mask].empty()) continue;
    os << VertexSet(mask).to_string() << ":";
    for (const auto& [deg, grp] : groups[mask]) os << "  H_" << deg << " = " << grp.to_string();
    os << "\n";
  }
  return os.str();
}

std::string uber_text(const TriGradedTable& t) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "j" << std::setw(6) << "k" << std::setw(6) << "i" << "group\n";
  for (const auto& [jki, g] : t) {
    const auto [j, k, i] = jki;
    os << std::setw(6) << j << std::setw(6) << k << std::setw(6) << i << g.to_string() << "\n";
  }
  return os.str();
}

std::string zero_degree_text(const BigradedTable& t) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "j" << std::setw(6) << "i" << "group\n";
  for (const auto& [ji, g] : t) os << std::setw(6) << ji.first << std::setw(6) << ji.second << g.to_string() << "\n";
  return os.str();
}

std::string double_text(const BigradedTable& dh) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "(-k,2l)" << "group\n";
  for (const auto& [kl, g] : dh) os << std::setw(12) << bidegree(-kl.first, 2 * kl.second) << g.to_string() << "\n";
  return os.str();
}

std::string page_text(const std::string& variant, int page, const BigradedTable& entries) {
  std::ostringstream os;
  os << variant << " E" << page << "\n" << std::left << std::setw(12) << "(p,q)" << "group\n";
  for (const auto& [pq, g] : entries) os << std::setw(12) << bidegree(pq.first, pq.second) << g.to_string() << "\n";
  return os.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "coefficients " << r.coefficients.name() << "\n";
  for (const auto& c : r.claims) {
    os << std::left << std::setw(9) << to_string(c.status) << c.id << "  " << c.statement << "\n";
    for (const auto& d : c.details) os << "         " << d << "\n";
    for (const auto& n : c.notes) os << "         note: " << n << "\n";
  }
  os << r.failures() << " failed\n";
  return os.str();
}

std::uint64_t complex_hash(const SimplicialComplex& k) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFFu;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(k.vertex_count()));
  for (VertexSet f : k.facets()) mix(f.bits());
  return h;
}

std::string cache_file(const std::string& directory, const SimplicialComplex& k, Coefficients coeffs, bool reduced) {
  std::ostringstream name;
  std::string c = coeffs.name();
  c.erase(std::remove(c.begin(), c.end(), ':'), c.end());
  name << std::hex << std::setw(16) << std::setfill('0') << complex_hash(k) << '-' << c << '-'
       << (reduced ? "reduced" : "unreduced") << ".cache";
  return (std::filesystem::path(directory) / name.str()).string();
}

namespace {

std::string cache_header(const SimplicialComplex& k, Coefficients coeffs, bool reduced) {
  std::ostringstream os;
  os << "uberdh-cache " << kSchemaVersion << " " << std::hex << complex_hash(k) << std::dec << " m=" << k.vertex_count()
     << " coeffs=" << coeffs.name() << " " << (reduced ? "reduced" : "unreduced");
  return os.str();
}

}  // namespace

void save_cache(const std::string& path, const SimplicialComplex& k, Coefficients coeffs, bool reduced,
                const SubsetGroups& groups) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write cache file " + path);
    out << cache_header(k, coeffs, reduced) << "\n";
    for (std::size_t mask = 0; mask < groups.size(); ++mask) {
      for (const auto& [deg, g] : groups[mask]) {
        out << std::hex << mask << std::dec << " " << deg << " " << g.rank() << " ";
        if (g.torsion().empty()) {
          out << "-";
        } else {
          for (std::size_t i = 0; i < g.torsion().size(); ++i) out << (i ? "," : "") << g.torsion()[i].str();
        }
        out << "\n";
      }
    }
    out << "end\n";
  }
  std::filesystem::rename(tmp, path);
}

std::optional<SubsetGroups> load_cache(const std::string& path, const SimplicialComplex& k, Coefficients coeffs,
                                       bool reduced) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != cache_header(k, coeffs, reduced)) return std::nullopt;
  SubsetGroups groups(std::size_t{1} << k.vertex_count());
  bool complete = false;
  while (std::getline(in, line)) {
    if (line == "end") {
      complete = true;
      break;
    }
    std::istringstream ls(line);
    std::string mask_hex, torsion;
    int deg = 0;
    std::size_t rank = 0;
    if (!(ls >> mask_hex >> deg >> rank >> torsion)) return std::nullopt;
    const std::size_t mask = std::stoull(mask_hex, nullptr, 16);
    if (mask >= groups.size()) return std::nullopt;
    std::vector<BigInt> tors;
    if (torsion != "-") {
      std::istringstream ts(torsion);
      std::string item;
      while (std::getline(ts, item, ',')) tors.emplace_back(item);
    }
    groups[mask][deg] = GroupClass(coeffs, rank, std::move(tors));
  }
  if (!complete) return std::nullopt;
  return groups;
}

}  // namespace uberdh
