#pragma once

#include <bitset>
#include <cstdint>
#include <vector>

#include "mirig/alphabet.hpp"
#include "mirig/tree.hpp"

namespace mirig {

  // Explicit sets of trees of M_n for n <= 3 (|M_3| = 160).
  inline constexpr int kMaxTreeSetN    = 3;
  inline constexpr int kMaxTreeSetSize = 160;
  using TreeSet                        = std::bitset<kMaxTreeSetSize>;

  // The trees of M_n in canonical order with a product table and cached
  // alphabets and extremal path indices (into PathUniverse::get(n)).
  class Universe {
   public:
    static Universe const& get(int n);  // throws CapacityError for n > 3

    int n() const noexcept {
      return n_;
    }
    int size() const noexcept {
      return static_cast<int>(trees_.size());
    }
    Tree const& tree(int i) const {
      return trees_.at(static_cast<std::size_t>(i));
    }
    // throws PreconditionError if t is not over [n]
    int index(Tree const& t) const;

    int product(int i, int j) const noexcept {
      return table_[static_cast<std::size_t>(i * size() + j)];
    }
    Alphabet alphabet(int i) const noexcept {
      return alphabets_[static_cast<std::size_t>(i)];
    }
    // -1 for the leaf
    int lmp(int i) const noexcept {
      return lmp_[static_cast<std::size_t>(i)];
    }
    int rmp(int i) const noexcept {
      return rmp_[static_cast<std::size_t>(i)];
    }

    TreeSet fiber(Alphabet a) const;
    TreeSet all() const;

    TreeSet          set_of(std::vector<Tree> const& ts) const;
    std::vector<Tree> trees_of(TreeSet const& s) const;

   private:
    explicit Universe(int n);

    int                          n_;
    std::vector<Tree>            trees_;
    std::vector<std::uint8_t>    table_;
    std::vector<Alphabet>        alphabets_;
    std::vector<int>             lmp_;
    std::vector<int>             rmp_;
  };

  // indices of the members of s, ascending
  std::vector<int> members(TreeSet const& s);

  AlphabetFamily alphabets_of(int n, TreeSet const& s);

}  // namespace mirig
