#include <doctest.h>

#include <string>

#include "mirig/error.hpp"
#include "mirig/json_io.hpp"

using namespace mirig;

TEST_CASE("replete subsemigroups survive a JSON roundtrip") {
  for (int n = 0; n <= 3; ++n) {
    for (auto const& r : enumerate_replete(n)) {
      Json const j = to_json(r);
      REQUIRE(replete_from_json(j) == r);
      REQUIRE(replete_from_json(parse_json(j.dump())) == r);
    }
  }
}

TEST_CASE("triples survive a JSON roundtrip") {
  for (int n = 0; n <= 2; ++n) {
    for (auto const& c : enumerate_triples(n)) {
      REQUIRE(triple_from_json(parse_json(to_json(c).dump())) == c);
    }
  }
}

TEST_CASE("malformed JSON documents are rejected") {
  std::string const too_wide  = R"({"n": 9, "alphabets": [], "left": [], "right": []})";
  std::string const bad_parity =
      R"j({"n": 1, "S": {"n": 1, "alphabets": [], "left": [], "right": []}, "D": ["(() a a ())"], "p": [5]})j";
  CHECK_THROWS_AS(parse_json("{\"n\": "), ParseError);
  CHECK_THROWS_AS(replete_from_json(Json::array()), PreconditionError);
  CHECK_THROWS_AS(replete_from_json(parse_json(too_wide)), CapacityError);
  CHECK_THROWS_AS(triple_from_json(parse_json(bad_parity)), Error);
  auto const sample = enumerate_triples(1).back();
  Json       j      = to_json(sample);
  j["n"]            = "one";
  CHECK_THROWS_AS(triple_from_json(j), PreconditionError);
}
