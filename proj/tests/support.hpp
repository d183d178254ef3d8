#pragma once

#include <random>
#include <string>

#include "mirig/tree.hpp"
#include "mirig/word.hpp"

namespace testing_support {

  inline mirig::Word W(std::string const& s) {
    return mirig::parse_word(s);
  }

  inline mirig::Tree T(std::string const& s) {
    return mirig::tree_of_word(mirig::parse_word(s));
  }

  inline mirig::Word random_word(std::mt19937_64& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, n - 1);
    mirig::Word                        w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) {
      g = static_cast<mirig::Generator>(gen(rng));
    }
    return w;
  }

  inline mirig::Tree random_tree(std::mt19937_64& rng, int n, int max_len = 12) {
    return mirig::tree_of_word(random_word(rng, n, max_len));
  }

}  // namespace testing_support
