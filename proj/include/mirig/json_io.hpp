#pragma once

#include <string_view>

#include <json.hpp>

#include "mirig/subsemigroup.hpp"
#include "mirig/triple.hpp"

namespace mirig {

  using Json = nlohmann::ordered_json;

  inline constexpr int kFormatVersion = 1;

  // {"n": 2, "alphabets": [1, 3], "left": ["(a)", "(a,b)"], "right": [...]}
  // Alphabets are bitmasks (bit i for letter i), paths are listed in
  // canonical order.
  Json                to_json(RepleteSubsemigroup const& r);
  RepleteSubsemigroup replete_from_json(Json const& j);

  // {"n": 2, "S": <replete>, "D": ["(() a a ())"], "p": [1]}
  Json                to_json(ComplementaryTriple const& c);
  ComplementaryTriple triple_from_json(Json const& j);

  // nlohmann parse errors become ParseError with their byte offset
  Json parse_json(std::string_view text);

}  // namespace mirig
