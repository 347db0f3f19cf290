#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "surfcode/errors.hpp"
#include "surfcode/text_io.hpp"

using namespace surfcode;

namespace {

HomogPoly sample_poly() {
  auto F4 = Field::make(2, 2);
  HomogPoly f(F4, 4, 3);
  f.set({3, 0, 0, 0}, 1);
  f.set({0, 3, 0, 0}, 2);      // coefficient t
  f.set({1, 1, 1, 0}, 3);      // coefficient t+1
  f.set({0, 0, 0, 3}, 1);
  return f;
}

}  // namespace

TEST_CASE("whole-file round trip and missing files") {
  namespace fs = std::filesystem;
  const std::string path = (fs::temp_directory_path() / "surfcode_io_test.txt").string();
  write_text_file(path, "hello\nworld\n");
  CHECK(read_text_file(path) == "hello\nworld\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file(path), ParseError);
  CHECK_THROWS_AS(write_text_file("/nonexistent-dir-xyz/f.txt", "x"), ParseError);
}

TEST_CASE("polynomial text round trip") {
  HomogPoly f = sample_poly();
  const std::string text = poly_to_text(f);
  HomogPoly g = poly_from_text(text);
  CHECK(g.field()->same(*f.field()));
  CHECK(g.degree() == f.degree());
  CHECK(g.nvars() == f.nvars());
  CHECK(g.terms() == f.terms());

  // three-variable (plane curve) polynomials round trip too
  auto F3 = Field::make(3, 1);
  HomogPoly conic(F3, 3, 2);
  conic.set({2, 0, 0, 0}, 1);
  conic.set({0, 1, 1, 0}, 2);
  HomogPoly back = poly_from_text(poly_to_text(conic));
  CHECK(back.nvars() == 3);
  CHECK(back.terms() == conic.terms());
}

TEST_CASE("polynomial parsing accepts comments and accumulates repeats") {
  const std::string text =
      "# a quadric over GF(2)\n"
      "field: GF(2)\n"
      "degree: 2\n"
      "\n"
      "1 0 0 1 1   # x0 x3\n"
      "0 1 1 0 1\n"
      "0 1 1 0 1\n"   // repeated term cancels in characteristic 2
      "2 0 0 0 1\n";
  HomogPoly f = poly_from_text(text);
  CHECK(f.terms().size() == 2);  // x0 x3 and x0^2 survive
  CHECK(f.terms().count({1, 0, 0, 1}) == 1);
  CHECK(f.terms().count({2, 0, 0, 0}) == 1);
}

TEST_CASE("polynomial parsing rejects malformed input") {
  CHECK_THROWS_AS(poly_from_text("degree: 2\n1 0 0 1 1\n"), ParseError);  // no field
  CHECK_THROWS_AS(poly_from_text("field: GF(2)\n1 0 0 1 1\n"), ParseError);  // no degree
  CHECK_THROWS_AS(poly_from_text("field: GF(2)\ndegree: 2\n"), ParseError);  // zero poly
  CHECK_THROWS_AS(poly_from_text("field: GF(2)\ndegree: 2\n1 0 1 1\n2 0 0 0 1\n"),
                  ParseError);  // 3-var and 4-var lines mixed
  CHECK_THROWS_AS(poly_from_text("field: GF(2)\ndegree: 2\n1 0 0 0 1\n"),
                  ParseError);  // term degree 1 != 2
  CHECK_THROWS_AS(poly_from_text("field: GF(2)\ndegree: 2\nx y z w 1\n"), ParseError);
  CHECK_THROWS_AS(poly_from_text("field: GF(6)\ndegree: 2\n2 0 0 0 1\n"), ParseError);
}

TEST_CASE("generator matrix text round trip over a prime field") {
  auto F2 = Field::make(2, 1);
  std::vector<gfe> rows{1, 0, 1, 1, 0, 1, 0, 1};
  LinearCode C = LinearCode::from_rows(F2, 4, rows, 2);
  const std::string text = matrix_to_text(C);
  // prime field: no "field:" line needed
  CHECK(text.find("field:") == std::string::npos);
  CHECK(text.find("4 2 2") == 0);
  LinearCode back = matrix_from_text(text);
  CHECK(back.n() == 4);
  CHECK(back.k() == 2);
  CHECK(back.matrix() == C.matrix());
}

TEST_CASE("generator matrix text round trip over an extension field") {
  auto F9 = Field::make(3, 2);
  std::vector<gfe> rows{1, 0, 3, 4, 0, 1, 5, 2};  // includes t, t+1, t+2 entries
  LinearCode C = LinearCode::from_rows(F9, 4, rows, 2);
  const std::string text = matrix_to_text(C);
  CHECK(text.find("field: GF(9;") != std::string::npos);
  LinearCode back = matrix_from_text(text);
  CHECK(back.field()->same(*F9));
  CHECK(back.matrix() == C.matrix());
}

TEST_CASE("matrix parsing validates header against content") {
  // rank below the declared k
  CHECK_THROWS_AS(matrix_from_text("3 2 2\n1 0 1\n1 0 1\n"), ParseError);
  // wrong number of rows
  CHECK_THROWS_AS(matrix_from_text("3 2 2\n1 0 1\n"), ParseError);
  // entry outside the field
  CHECK_THROWS_AS(matrix_from_text("3 1 2\n1 0 2\n"), ParseError);
  // field line disagreeing with q in the header
  CHECK_THROWS_AS(matrix_from_text("3 1 4\nfield: GF(9;t^2+1)\n1 0 1\n"), ParseError);
  // q not a prime power
  CHECK_THROWS_AS(matrix_from_text("3 1 6\n1 0 1\n"), ParseError);
  // malformed header
  CHECK_THROWS_AS(matrix_from_text("3 2\n1 0 1\n1 1 1\n"), ParseError);
  // extension q without a field line defaults to the canonical modulus
  LinearCode C = matrix_from_text("3 1 4\n1 t t+1\n");
  CHECK(C.field()->q() == 4);
  CHECK(C.field()->modulus_str() == "t^2+t+1");
}

TEST_CASE("point list text round trip") {
  auto F4 = Field::make(2, 2);
  std::vector<Point> pts;
  pts.push_back(make_point(F4, {1, 2, 3, 0}));
  pts.push_back(make_point(F4, {0, 1, 2, 3}));
  pts.push_back(make_point(F4, {1, 0, 0, 1}));
  const std::string text = points_to_text(*F4, pts);
  auto back = points_from_text(text);
  REQUIRE(back.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(back[i] == pts[i]);
  CHECK_THROWS_AS(points_from_text("1:0:0:1\n"), ParseError);  // missing field line
  CHECK_THROWS_AS(points_from_text("field: GF(2)\n0:0:0:0\n"), ParseError);
}

TEST_CASE("file-based loading reports the failing path") {
  CHECK_THROWS_AS(poly_from_file("/no/such/file.poly"), ParseError);
  CHECK_THROWS_AS(matrix_from_file("/no/such/file.mat"), ParseError);
  namespace fs = std::filesystem;
  const std::string path = (fs::temp_directory_path() / "surfcode_poly_test.txt").string();
  write_text_file(path, poly_to_text(sample_poly()));
  HomogPoly f = poly_from_file(path);
  CHECK(f.terms() == sample_poly().terms());
  std::remove(path.c_str());
}
