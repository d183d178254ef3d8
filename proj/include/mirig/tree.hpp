#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mirig/alphabet.hpp"
#include "mirig/word.hpp"

namespace mirig {

  using BigInt = boost::multiprecision::cpp_int;

  class Tree;
  namespace detail {
    Tree make_node(Tree left, Generator a0, Generator a1, Tree right);
  }

  // An element of the free idempotent monoid, as a labelled rooted binary
  // tree. Leaf is the identity; Node(left, a0, a1, right) requires
  //   a0 not in alpha(left), a1 not in alpha(right),
  //   alpha(left) + {a0} == alpha(right) + {a1}.
  // Trees are immutable and share structure; copying is cheap.
  class Tree {
   public:
    Tree() = default;  // Leaf

    // throws PreconditionError if the invariants do not hold
    static Tree node(Tree left, Generator a0, Generator a1, Tree right);
    // the height-1 tree (a) == ((), a, a, ())
    static Tree generator(Generator a);

    bool is_leaf() const noexcept {
      return node_ == nullptr;
    }

    // Accessors for the root; precondition !is_leaf().
    Tree const& left() const;
    Tree const& right() const;
    Generator   left_generator() const;   // a0
    Generator   right_generator() const;  // a1

    Alphabet alphabet() const noexcept;
    int      height() const noexcept {
      return alphabet().size();
    }
    std::size_t hash() const noexcept;

    friend bool operator==(Tree const& x, Tree const& y) noexcept;
    // Canonical order: alphabet bits, then (left, a0, a1, right); Leaf least.
    friend std::strong_ordering operator<=>(Tree const& x, Tree const& y) noexcept;

   private:
    friend Tree detail::make_node(Tree, Generator, Generator, Tree);

    struct Node;
    std::shared_ptr<Node const> node_;
  };

  Tree tree_of_word(Word const& w);
  Word word_of_tree(Tree const& t);
  bool words_equivalent(Word const& w1, Word const& w2);

  // The monoid operation, computed recursively on the trees.
  Tree tree_product(Tree const& s, Tree const& t);
  inline Tree operator*(Tree const& s, Tree const& t) {
    return tree_product(s, t);
  }

  // s is a left factor of t iff s*t == t; dually for right factors.
  bool is_left_factor(Tree const& s, Tree const& t);
  bool is_right_factor(Tree const& s, Tree const& t);

  // Image under the anti-automorphism induced by word reversal.
  Tree reversed(Tree const& t);

  // All trees with alphabet exactly `a`, in canonical order.
  // Throws CapacityError for |a| > 4.
  std::vector<Tree> enumerate_trees(Alphabet a);
  inline constexpr int kMaxEnumerableHeight = 4;

  // Number of trees on a fixed k-letter alphabet, and |M_n|.
  BigInt count_trees_of_height(int k);
  BigInt count_free_monoid(int n);

  // Shortest word representing t, least in lexicographic order among those.
  // Searches the submonoid on alpha(t); throws CapacityError for height > 4.
  Word shortest_word(Tree const& t);

  // S-expression text form: Leaf = "()", Node = "(L x y R)". Output always
  // uses the expanded form with single spaces; input also accepts the
  // height-1 shorthand "(a)" and arbitrary whitespace between tokens.
  std::string to_sexpr(Tree const& t);
  Tree        parse_tree(std::string_view text);

}  // namespace mirig

template <>
struct std::hash<mirig::Tree> {
  std::size_t operator()(mirig::Tree const& t) const noexcept {
    return t.hash();
  }
};
