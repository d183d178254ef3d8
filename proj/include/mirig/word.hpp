#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mirig/alphabet.hpp"

namespace mirig {

  // An element of the free monoid F_n: a raw, unreduced word.
  using Word = std::vector<Generator>;

  // Text form: one ASCII letter a-z per generator; the empty word is "".
  Word        parse_word(std::string_view text);
  std::string to_string(Word const& w);

  Alphabet word_alphabet(Word const& w);

  // Green-Rees form (p, a, b, q) of a non-empty word w: p is the longest
  // prefix missing exactly one generator of alpha(w), and a is that
  // generator; dually q is the longest such suffix and b is the generator
  // it misses.
  struct GrfDecomposition {
    Word      prefix;
    Generator prefix_missing;
    Generator suffix_missing;
    Word      suffix;

    bool operator==(GrfDecomposition const&) const = default;
  };

  GrfDecomposition grf(Word const& w);  // throws PreconditionError on ""

}  // namespace mirig
