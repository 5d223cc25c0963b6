#include "skein/triangulation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace skein {

namespace {

std::array<int, 3> sorted(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::string triple_str(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

// Reads exactly n integers after the keyword; anything else is a parse error.
template <std::size_t N>
std::array<int, N> read_ints(std::istringstream& in, int line, const std::string& keyword) {
  std::array<int, N> out{};
  for (auto& x : out) {
    if (!(in >> x)) throw ParseError(line, "'" + keyword + "' expects " + std::to_string(N) + " integers");
  }
  std::string extra;
  if (in >> extra) throw ParseError(line, "trailing token '" + extra + "' after '" + keyword + "'");
  return out;
}

void read_metadata(const std::string& comment, std::map<std::string, std::string>& meta) {
  std::istringstream in(comment);
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq != std::string::npos && eq > 0) meta[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
}

}  // namespace

std::array<std::array<int, 3>, 4> tetra_faces(const std::array<int, 6>& e) {
  return {{{e[0], e[1], e[2]}, {e[2], e[3], e[4]}, {e[0], e[4], e[5]}, {e[1], e[3], e[5]}}};
}

Triangulation parse_triangulation(const std::string& text) {
  Triangulation tri;
  std::istringstream stream(text);
  std::string raw;
  int line = 0;
  bool header = false, have_name = false, have_vertices = false, have_edges = false;

  while (std::getline(stream, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) {
      read_metadata(raw.substr(hash + 1), tri.metadata);
      raw.erase(hash);
    }
    std::istringstream in(raw);
    std::string key;
    if (!(in >> key)) continue;

    if (!header) {
      int version = 0;
      if (key != "tvtri" || !(in >> version)) throw ParseError(line, "expected header 'tvtri 1'");
      if (version != 1) throw ParseError(line, "unsupported tvtri version " + std::to_string(version));
      header = true;
      continue;
    }
    if (key == "name") {
      std::string rest;
      std::getline(in, rest);
      const auto b = rest.find_first_not_of(" \t");
      if (b == std::string::npos) throw ParseError(line, "'name' needs a value");
      tri.name = rest.substr(b, rest.find_last_not_of(" \t") - b + 1);
      have_name = true;
    } else if (key == "vertices") {
      tri.num_interior_vertices = read_ints<1>(in, line, key)[0];
      if (tri.num_interior_vertices < 0) throw ParseError(line, "vertex count must be >= 0");
      have_vertices = true;
    } else if (key == "edges") {
      tri.num_edges = read_ints<1>(in, line, key)[0];
      if (tri.num_edges < 0) throw ParseError(line, "edge count must be >= 0");
      have_edges = true;
    } else if (key == "face") {
      tri.faces.push_back(read_ints<3>(in, line, key));
    } else if (key == "tet") {
      tri.tetrahedra.push_back(read_ints<6>(in, line, key));
    } else {
      throw ParseError(line, "unknown keyword '" + key + "'");
    }
  }
  if (!header) throw ParseError(line, "missing 'tvtri 1' header");
  if (!have_name) throw ParseError(line, "missing 'name'");
  if (!have_vertices) throw ParseError(line, "missing 'vertices'");
  if (!have_edges) throw ParseError(line, "missing 'edges'");
  validate(tri);
  return tri;
}

Triangulation load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open triangulation file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_triangulation(ss.str());
}

std::string serialize(const Triangulation& tri) {
  std::ostringstream out;
  out << "tvtri 1\n";
  if (!tri.metadata.empty()) {
    out << "#";
    for (const auto& [k, v] : tri.metadata) out << ' ' << k << '=' << v;
    out << '\n';
  }
  out << "name " << tri.name << '\n'
      << "vertices " << tri.num_interior_vertices << '\n'
      << "edges " << tri.num_edges << '\n';
  for (const auto& f : tri.faces) out << "face " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  for (const auto& t : tri.tetrahedra) {
    out << "tet";
    for (int e : t) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

void validate(const Triangulation& tri) {
  if (tri.tetrahedra.empty()) throw ValidationError("triangulation '" + tri.name + "' has no tetrahedra");
  if (tri.num_edges <= 0) throw ValidationError("triangulation '" + tri.name + "' has no edges");
  auto check_edge = [&](int e, const std::string& where) {
    if (e < 0 || e >= tri.num_edges)
      throw ValidationError(where + " references edge " + std::to_string(e) + " but only " +
                            std::to_string(tri.num_edges) + " edges exist");
  };
  for (std::size_t f = 0; f < tri.faces.size(); ++f)
    for (int e : tri.faces[f]) check_edge(e, "face " + std::to_string(f));
  for (std::size_t t = 0; t < tri.tetrahedra.size(); ++t)
    for (int e : tri.tetrahedra[t]) check_edge(e, "tetrahedron " + std::to_string(t));

  // Every tetrahedron face slot must be one side of a listed face, and every
  // listed face must be glued to exactly two slots.
  std::map<std::array<int, 3>, int> listed;
  for (const auto& f : tri.faces) ++listed[sorted(f)];
  std::map<std::array<int, 3>, int> slots;
  for (std::size_t t = 0; t < tri.tetrahedra.size(); ++t) {
    for (const auto& f : tetra_faces(tri.tetrahedra[t])) {
      const auto key = sorted(f);
      if (!listed.count(key))
        throw ValidationError("tetrahedron " + std::to_string(t) + " face " + triple_str(f) +
                              " matches no listed face");
      ++slots[key];
    }
  }
  for (const auto& [key, n] : listed) {
    if (slots[key] != 2 * n)
      throw ValidationError("face " + triple_str(key) + " is listed " + std::to_string(n) + " time(s) but meets " +
                            std::to_string(slots[key]) + " tetrahedron slot(s)");
  }
  const auto val = edge_valence(tri);
  for (int e = 0; e < tri.num_edges; ++e)
    if (val[e] == 0) throw ValidationError("edge " + std::to_string(e) + " lies in no tetrahedron");
}

bool operator==(const Triangulation& a, const Triangulation& b) {
  return a.name == b.name && a.num_interior_vertices == b.num_interior_vertices && a.num_edges == b.num_edges &&
         a.faces == b.faces && a.tetrahedra == b.tetrahedra && a.metadata == b.metadata;
}

std::map<int, std::array<int, 3>> face_edge_incidence(const Triangulation& tri) {
  std::map<int, std::array<int, 3>> out;
  for (std::size_t f = 0; f < tri.faces.size(); ++f) out[static_cast<int>(f)] = tri.faces[f];
  return out;
}

std::array<int, 6> tetra_edge_labels(const Triangulation& tri, int tet) {
  return tri.tetrahedra.at(static_cast<std::size_t>(tet));
}

std::vector<int> edge_valence(const Triangulation& tri) {
  std::vector<int> v(static_cast<std::size_t>(std::max(tri.num_edges, 0)), 0);
  for (const auto& t : tri.tetrahedra)
    for (int e : t)
      if (e >= 0 && e < tri.num_edges) ++v[static_cast<std::size_t>(e)];
  return v;
}

int euler_characteristic(const Triangulation& tri) {
  return tri.num_interior_vertices - tri.num_edges + static_cast<int>(tri.faces.size()) -
         static_cast<int>(tri.tetrahedra.size());
}

int metadata_int(const Triangulation& tri, const std::string& key, int fallback) {
  const auto it = tri.metadata.find(key);
  if (it == tri.metadata.end()) return fallback;
  return std::stoi(it->second);
}

}  // namespace skein
