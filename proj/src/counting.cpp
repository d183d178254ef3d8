#include "mirig/counting.hpp"

#include "mirig/error.hpp"
#include "mirig/triple.hpp"

namespace mirig {

  namespace {
    void check_enumerable(int n, char const* what) {
      if (n < 0) {
        throw PreconditionError(std::string(what) + ": negative generator count");
      }
      if (n > kMaxTreeSetN) {
        throw CapacityError(std::string(what) + ": evaluated for n <= "
                            + std::to_string(kMaxTreeSetN));
      }
    }

    BigInt pow2(int k) {
      return BigInt(1) << k;
    }
  }  // namespace

  AlphabetFamily single_path_minimal_alphabets(RepleteSubsemigroup const& s) {
    auto const&    pu = PathUniverse::get(s.n());
    AlphabetFamily out;
    for (Alphabet a : s.alphabets().minimal_elements().members()) {
      PathMask const m = pu.with_support(a);
      if (a.empty()
          || (std::popcount(s.left_mask() & m) == 1 && std::popcount(s.right_mask() & m) == 1)) {
        out.insert(a);
      }
    }
    return out;
  }

  BigInt straggler_choices(AlphabetFamily e) {
    BigInt q = 1;
    for (Alphabet a : e.members()) {
      BigInt const c = path_class_size(a.size());
      q *= c * c;
    }
    return q;
  }

  namespace {
    // sum over E subset of m of weight(E)
    template <class F>
    BigInt sum_over_subfamilies(AlphabetFamily m, F weight) {
      auto const members = m.members();
      BigInt     total   = 0;
      for (std::uint32_t bits = 0; bits < (1U << members.size()); ++bits) {
        AlphabetFamily e;
        for (std::size_t i = 0; i < members.size(); ++i) {
          if ((bits >> i) & 1U) {
            e.insert(members[i]);
          }
        }
        total += weight(e);
      }
      return total;
    }
  }  // namespace

  BigInt count_free_mirig(int n, CountStrategy strategy) {
    check_enumerable(n, "count_free_mirig");
    BigInt total = 0;
    for (auto const& r : enumerate_replete(n)) {
      int const f = r.alphabets().size();
      if (strategy == CountStrategy::triples) {
        total += BigInt(dominated_sets(n, r.expand()).size()) * pow2(f);
      } else if (!r.contains_identity()) {
        total += 3 * pow2(f);
        total += sum_over_subfamilies(single_path_minimal_alphabets(r), [&](AlphabetFamily e) {
          return pow2(f - e.size()) * straggler_choices(e);
        });
      }
    }
    return total;
  }

  UpperBounds mirig_upper_bounds(int n) {
    if (n < 0) {
      throw PreconditionError("mirig_upper_bounds: negative generator count");
    }
    if (n > 4) {
      throw CapacityError("mirig_upper_bounds: evaluated for n <= 4");
    }
    auto const m = static_cast<unsigned>(count_free_monoid(n));
    BigInt const p3 = boost::multiprecision::pow(BigInt(3), m - 1);
    return UpperBounds{BigInt(1) << (2 * m), (BigInt(1) << (2 * (m - 1))) + 3 * p3};
  }

  Variant parse_variant(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (c != '(' && c != ')' && c != ' ') {
        s += c;
      }
    }
    if (s == "1,1") {
      return Variant::c11;
    }
    if (s == "2,1") {
      return Variant::c21;
    }
    if (s == "1,2") {
      return Variant::c12;
    }
    if (s == "0,2" || s == "2,0") {
      return Variant::c02;
    }
    if (s == "boolean" || s == "boolean_semiring") {
      return Variant::boolean_semiring;
    }
    throw PreconditionError("unsupported variant '" + std::string(text)
                            + "'; expected 1,1 2,1 1,2 0,2 or boolean");
  }

  std::string to_string(Variant v) {
    switch (v) {
      case Variant::c11:
        return "(1,1)";
      case Variant::c21:
        return "(2,1)";
      case Variant::c12:
        return "(1,2)";
      case Variant::c02:
        return "(0,2)";
      case Variant::boolean_semiring:
        return "boolean";
    }
    return "?";
  }

  BigInt count_characteristic_variant(int n, Variant v) {
    if (n < 0) {
      throw PreconditionError("count_characteristic_variant: negative generator count");
    }
    switch (v) {
      case Variant::c02:
        if (n > 20) {
          throw CapacityError("count_characteristic_variant: (0,2) evaluated for n <= 20");
        }
        return BigInt(1) << (1U << n);
      case Variant::boolean_semiring: {
        if (n > 4) {
          throw CapacityError("count_characteristic_variant: boolean evaluated for n <= 4");
        }
        // sum over upward-closed families U of subsets of [n] of 2^|U|
        std::uint32_t const subsets = 1U << n;
        BigInt              total   = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << subsets); ++mask) {
          AlphabetFamily const u(mask);
          if (u.upward_closed(n)) {
            total += pow2(u.size());
          }
        }
        return total;
      }
      default:
        break;
    }
    check_enumerable(n, "count_characteristic_variant");
    BigInt total = 0;
    for (auto const& r : enumerate_replete(n)) {
      if (v == Variant::c11) {
        total += 1;
      } else if (!r.contains_identity()) {
        if (v == Variant::c21) {
          total += 2;
          total += sum_over_subfamilies(single_path_minimal_alphabets(r),
                                        [](AlphabetFamily e) { return straggler_choices(e); });
        } else {
          total += 3 * pow2(r.alphabets().size());
        }
      }
    }
    return total;
  }

}  // namespace mirig
