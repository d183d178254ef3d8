#include "mirig/json_io.hpp"

#include "mirig/error.hpp"

namespace mirig {

  namespace {
    [[noreturn]] void schema_error(std::string const& what) {
      throw PreconditionError("invalid JSON document: " + what);
    }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        schema_error(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    Json const& array_field(Json const& j, char const* key) {
      Json const& a = field(j, key);
      if (!a.is_array()) {
        schema_error(std::string("field \"") + key + "\" is not an array");
      }
      return a;
    }

    int generator_count(Json const& j) {
      Json const& n = field(j, "n");
      if (!n.is_number_integer() || n.get<int>() < 0 || n.get<int>() > kMaxGenerators) {
        schema_error("\"n\" must be an integer in 0..26");
      }
      return n.get<int>();
    }

    std::uint32_t alphabet_bits(Json const& a, int n) {
      if (!a.is_number_unsigned() || a.get<std::uint64_t>() >= (std::uint64_t{1} << n)) {
        schema_error("alphabet " + a.dump() + " is not a bitmask over " + std::to_string(n)
                     + " generators");
      }
      return static_cast<std::uint32_t>(a.get<std::uint64_t>());
    }

    AlphabetFamily family_of(Json const& a, int n) {
      AlphabetFamily f;
      for (Json const& x : a) {
        f.insert(Alphabet(alphabet_bits(x, n)));
      }
      return f;
    }

    Json family_json(AlphabetFamily f) {
      Json out = Json::array();
      for (Alphabet a : f.members()) {
        out.push_back(a.bits());
      }
      return out;
    }

    PathMask paths_of(Json const& a, int n, Side side) {
      std::vector<ExtremalPath> ps;
      for (Json const& x : a) {
        if (!x.is_string()) {
          schema_error("path " + x.dump() + " is not a string");
        }
        ps.push_back(parse_path(x.get<std::string>(), side));
      }
      return PathUniverse::get(n).mask_of(ps);
    }
  }  // namespace

  Json to_json(RepleteSubsemigroup const& r) {
    Json j;
    j["n"]         = r.n();
    j["alphabets"] = family_json(r.alphabets());
    Json left      = Json::array();
    for (auto const& p : r.left_paths()) {
      left.push_back(to_string(p));
    }
    Json right = Json::array();
    for (auto const& p : r.right_paths()) {
      right.push_back(to_string(p));
    }
    j["left"]  = std::move(left);
    j["right"] = std::move(right);
    return j;
  }

  RepleteSubsemigroup replete_from_json(Json const& j) {
    int const n = generator_count(j);
    if (n > PathUniverse::kMaxN) {
      throw CapacityError("replete subsemigroups are represented for n <= "
                          + std::to_string(PathUniverse::kMaxN));
    }
    return RepleteSubsemigroup(n, family_of(array_field(j, "alphabets"), n),
                               paths_of(array_field(j, "left"), n, Side::left),
                               paths_of(array_field(j, "right"), n, Side::right));
  }

  Json to_json(ComplementaryTriple const& c) {
    auto const& uni = Universe::get(c.n());
    Json        j;
    j["n"]  = c.n();
    j["S"]  = to_json(c.replete());
    Json d  = Json::array();
    for (int i : members(c.d())) {
      d.push_back(to_sexpr(uni.tree(i)));
    }
    j["D"] = std::move(d);
    j["p"] = family_json(c.odd());
    return j;
  }

  ComplementaryTriple triple_from_json(Json const& j) {
    int const n = generator_count(j);
    if (n > kMaxTreeSetN) {
      throw CapacityError("complementary triples are represented for n <= "
                          + std::to_string(kMaxTreeSetN));
    }
    RepleteSubsemigroup const s = replete_from_json(field(j, "S"));
    if (s.n() != n) {
      schema_error("\"S\" is over a different generator count");
    }
    auto const&       uni = Universe::get(n);
    std::vector<Tree> d;
    for (Json const& x : array_field(j, "D")) {
      if (!x.is_string()) {
        schema_error("tree " + x.dump() + " is not a string");
      }
      Tree t = parse_tree(x.get<std::string>());
      if (!t.alphabet().subset_of(Alphabet::full(n))) {
        schema_error("tree " + x.get<std::string>() + " is not over " + std::to_string(n)
                     + " generators");
      }
      d.push_back(std::move(t));
    }
    return ComplementaryTriple(n, s.expand(), uni.set_of(d), family_of(array_field(j, "p"), n));
  }

  Json parse_json(std::string_view text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(),
                       e.byte > 0 ? e.byte - 1 : 0);
    }
  }

}  // namespace mirig
