#pragma once

#include <string>
#include <string_view>

#include "mirig/subsemigroup.hpp"
#include "mirig/tree.hpp"

namespace mirig {

  enum class CountStrategy {
    triples,  // sum over replete S of #{D dominated by S} * 2^|alphabets(S)|
    grouped,  // sum over replete S without the identity, grouped by <S + D>_r
  };

  // |R_n| for n <= 3.
  BigInt count_free_mirig(int n, CountStrategy strategy = CountStrategy::grouped);

  // The minimal alphabets A of S with exactly one leftmost and one rightmost
  // path among the trees of S_A.
  AlphabetFamily single_path_minimal_alphabets(RepleteSubsemigroup const& s);

  // Number of ways to choose one straggler on each alphabet of e whose
  // replete closure is the uniform part of S on that alphabet.
  BigInt straggler_choices(AlphabetFamily e);

  struct UpperBounds {
    BigInt crude;    // 4^|M_n|
    BigInt refined;  // 4^(|M_n|-1) + 3 * 3^(|M_n|-1)
  };
  UpperBounds mirig_upper_bounds(int n);

  enum class Variant { c11, c21, c12, c02, boolean_semiring };

  // "1,1", "(2,1)", "boolean", ...; throws PreconditionError
  Variant     parse_variant(std::string_view text);
  std::string to_string(Variant v);

  // Size of the free mirig of the given characteristic, or of the free
  // Boolean semiring (idempotent addition as well).
  BigInt count_characteristic_variant(int n, Variant v);

}  // namespace mirig
