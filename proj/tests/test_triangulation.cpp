#include "doctest.h"
#include "oracle.hpp"
#include "skein/triangulation.hpp"

using namespace skein;

namespace {

const char* kFig8 = R"(tvtri 1
# isosig=cPcbbbiht b0=1 b2=0
name fig8
vertices 0
edges 2
face 0 1 0
face 1 0 0
face 1 0 1
face 1 1 0
tet 0 1 0 1 1 0
tet 0 1 0 1 1 0
)";

int parse_error_line(const std::string& text) {
  try {
    parse_triangulation(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parse the figure-eight fixture") {
  const auto tri = load_triangulation(oracle::fixture("fig8.tvtri"));
  CHECK(tri.name == "fig8");
  CHECK(tri.num_interior_vertices == 0);
  CHECK(tri.num_edges == 2);
  CHECK(tri.faces.size() == 4);
  CHECK(tri.tetrahedra.size() == 2);
  CHECK(edge_valence(tri) == std::vector<int>{6, 6});
  CHECK(metadata_int(tri, "b2", -1) == 0);
  CHECK(metadata_int(tri, "missing", 7) == 7);
  CHECK(tri == parse_triangulation(kFig8));
  CHECK(tetra_edge_labels(tri, 1) == std::array<int, 6>{0, 1, 0, 1, 1, 0});
  CHECK(face_edge_incidence(tri).at(2) == std::array<int, 3>{1, 0, 1});
}

TEST_CASE("shipped fixtures are closed or ideal and round-trip") {
  for (const char* name : {"fig8", "s3", "trefoil", "unknot", "borromean"}) {
    CAPTURE(name);
    const auto tri = load_triangulation(oracle::fixture(std::string(name) + ".tvtri"));
    CHECK(euler_characteristic(tri) == 0);
    CHECK(tri.faces.size() == 2 * tri.tetrahedra.size());
    const auto again = parse_triangulation(serialize(tri));
    CHECK(again == tri);
    CHECK(serialize(again) == serialize(tri));
  }
  const auto s3 = load_triangulation(oracle::fixture("s3.tvtri"));
  CHECK(s3.num_interior_vertices == 1);
  CHECK(s3.tetrahedra.size() == 2);
  CHECK(metadata_int(load_triangulation(oracle::fixture("borromean.tvtri")), "b2", -1) == 2);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("") >= 0);
  CHECK(parse_error_line("tvtri 2\n") == 1);
  CHECK(parse_error_line("hello\n") == 1);
  CHECK(parse_error_line("tvtri 1\nname x\nvertices 0\nedges 1\nface 0 0\n") == 5);
  CHECK(parse_error_line("tvtri 1\nname x\nvertices 0\nedges 1\nface 0 0 0 0\n") == 5);
  CHECK(parse_error_line("tvtri 1\nname x\nvertices zero\n") == 3);
  CHECK(parse_error_line("tvtri 1\nname x\n\n# c\nwidget 3\n") == 5);
  CHECK(parse_error_line("tvtri 1\nvertices 0\nedges 1\n") > 0);
}

TEST_CASE("validation rejects broken triangulations") {
  CHECK_THROWS_AS(parse_triangulation("tvtri 1\nname e\nvertices 0\nedges 1\n"), ValidationError);

  std::string bad_edge = kFig8;
  bad_edge.replace(bad_edge.find("tet 0 1 0 1 1 0"), 15, "tet 0 1 0 1 1 2");
  CHECK_THROWS_WITH_AS(parse_triangulation(bad_edge), doctest::Contains("tetrahedron 0"), ValidationError);

  std::string missing_face = kFig8;
  missing_face.replace(missing_face.find("face 1 1 0"), 10, "face 0 0 0");
  CHECK_THROWS_AS(parse_triangulation(missing_face), ValidationError);

  Triangulation t = parse_triangulation(kFig8);
  t.faces.pop_back();
  CHECK_THROWS_AS(validate(t), ValidationError);
}
