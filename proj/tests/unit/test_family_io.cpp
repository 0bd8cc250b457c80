#include <doctest.h>

#include <filesystem>

#include "bercong/family_io.hpp"

using namespace bercong;

TEST_CASE("parse and serialize") {
  const std::string text = R"j({"name": "k", "N": 2, "g0": "0",
    "terms": [{"f": "t+1", "g": "1/(t+1)"}, {"f": "t^2+1", "g": "-1/(t^2+1)"}]})j";
  const FamilyFile file = parse_family_json(text);
  CHECK(file.name == "k");
  CHECK(file.N == 2);
  REQUIRE(file.terms.size() == 2);
  CHECK(file.terms[1].f == "t^2+1");
  const FamilyFile again = parse_family_json(to_json(file));
  CHECK(again.N == file.N);
  CHECK(again.g0 == file.g0);
  CHECK(again.terms[0].g == file.terms[0].g);
  const CongruenceFamily fam = to_family(file);
  CHECK(fam.terms().size() == 2);
  CHECK(fam.index_class(1) == 2);
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(parse_family_json("{"), FamilyFormatError);
  CHECK_THROWS_AS(parse_family_json("[]"), FamilyFormatError);
  CHECK_THROWS_AS(parse_family_json(R"j({"g0": "0", "terms": []})j"), FamilyFormatError);
  CHECK_THROWS_AS(parse_family_json(R"j({"N": 1.5, "g0": "0", "terms": []})j"), FamilyFormatError);
  CHECK_THROWS_AS(parse_family_json(R"j({"N": 1, "g0": 0, "terms": []})j"), FamilyFormatError);
  CHECK_THROWS_AS(parse_family_json(R"j({"N": 1, "g0": "0", "terms": [{"f": "t"}]})j"), FamilyFormatError);
  CHECK_THROWS_AS(to_family(parse_family_json(R"j({"N": 1, "g0": "0", "terms": [{"f": "1/t", "g": "1"}]})j")),
                  FamilyFormatError);
  CHECK_THROWS_AS(to_family(parse_family_json(R"j({"N": 1, "g0": "0", "terms": [{"f": "t/2", "g": "1"}]})j")),
                  FamilyFormatError);
  CHECK_THROWS_AS(to_family(parse_family_json(R"j({"N": 1, "g0": "t+", "terms": []})j")), FamilyFormatError);
  CHECK_THROWS_AS(load_family_file("/nonexistent/family.json"), FamilyFormatError);
}

TEST_CASE("shipped corpus loads") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(BERCONG_FAMILIES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    CHECK_NOTHROW(to_family(load_family_file(entry.path())));
  }
  CHECK(count >= 7);
}
