#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

/// Closed or ideal triangulation reduced to edge-class incidences.  Each
/// tetrahedron lists its six edge classes as (e12, e13, e23, e34, e24, e14).
struct Triangulation {
  std::string name;
  int num_interior_vertices = 0;  // 0 for ideal triangulations
  int num_edges = 0;
  std::vector<std::array<int, 3>> faces;
  std::vector<std::array<int, 6>> tetrahedra;
  /// Free-form `key value` metadata kept from `# key value` comment lines
  /// (fixtures record b0 and b2 this way).
  std::map<std::string, std::string> metadata;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses tvtri v1 text and validates the result.
Triangulation parse_triangulation(const std::string& text);
Triangulation load_triangulation(const std::string& path);
/// Canonical tvtri v1 text; parse(serialize(t)) == t.
std::string serialize(const Triangulation& tri);
/// Throws ValidationError naming the offending simplex.
void validate(const Triangulation& tri);

bool operator==(const Triangulation& a, const Triangulation& b);

/// The four faces of a tetrahedron as edge-class triples, in the slot order
/// (e12,e13,e23), (e23,e34,e24), (e12,e24,e14), (e13,e34,e14).
std::array<std::array<int, 3>, 4> tetra_faces(const std::array<int, 6>& tet);

std::map<int, std::array<int, 3>> face_edge_incidence(const Triangulation& tri);
std::array<int, 6> tetra_edge_labels(const Triangulation& tri, int tet);
/// Number of tetrahedron edge slots carrying each edge class.
std::vector<int> edge_valence(const Triangulation& tri);
/// V - E + F - T.
int euler_characteristic(const Triangulation& tri);

/// Optional integer metadata (e.g. "b2"); returns fallback when absent.
int metadata_int(const Triangulation& tri, const std::string& key, int fallback);

}  // namespace skein
