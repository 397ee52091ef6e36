#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <chabauty/generators.hpp>
#include <chabauty/io.hpp>

using namespace chabauty;

TEST_CASE("documents round-trip through text exactly") {
  std::mt19937_64 rng(8801);
  for (int t = 0; t < 50; ++t) {
    const int dim = 1 + t % 3;
    const PointSet original = random_cloud(8800 + t, t % 7, dim, 4.0);
    const std::string text =
        write_point_set(from_set(original, dim, t % 2 ? "cloud" : ""));
    const PointSetDocument parsed = parse_point_set(text);
    REQUIRE(parsed.dim == dim);
    REQUIRE(to_set(parsed) == original);
  }
}

TEST_CASE("empty documents represent the empty set") {
  const PointSetDocument doc = parse_point_set(R"({"dim": 2, "points": []})");
  CHECK(doc.dim == 2);
  CHECK(to_set(doc) == PointSet{});
}

TEST_CASE("labels survive and stay optional") {
  const auto doc =
      parse_point_set(R"({"dim": 1, "points": [[0.5]], "label": "probe"})");
  CHECK(doc.label == "probe");
  CHECK(parse_point_set(R"({"dim": 1, "points": []})").label.empty());
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_point_set("not json"), DocumentError);
  CHECK_THROWS_AS(parse_point_set("[1,2,3]"), DocumentError);
  CHECK_THROWS_AS(parse_point_set(R"({"points": []})"), DocumentError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim": 0, "points": []})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim": 1.5, "points": []})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim": 2})"), DocumentError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim": 2, "points": [[1.0]]})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim": 1, "points": [["a"]]})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim": 1, "points": [[1e999]]})"),
                  DocumentError);
  CHECK_THROWS_AS(
      parse_point_set(R"({"dim": 1, "points": [], "label": 7})"),
      DocumentError);
}
