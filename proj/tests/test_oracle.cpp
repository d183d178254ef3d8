#include <doctest.h>

#include <map>
#include <set>

#include "mirig/error.hpp"
#include "mirig/oracle.hpp"
#include "support.hpp"

using namespace mirig;
using testing_support::W;

namespace {

  // words of the table grouped by tree
  std::map<Tree, std::set<Word>> fibers(WordClassTable const& table) {
    std::map<Tree, std::set<Word>> out;
    for (auto const& c : table.classes) {
      for (Word const& w : c.words) {
        out[tree_of_word(w)].insert(w);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("word closure on two letters") {
  auto const table = word_closure(2, 6);
  std::set<std::string> reps;
  for (auto const& c : table.classes) {
    reps.insert(to_string(c.words.front()));
    CHECK(c.stable);
  }
  CHECK(reps == std::set<std::string>{"", "a", "b", "ab", "ba", "aba", "bab"});
  CHECK(table.class_of(W("abab")) == table.class_of(W("ab")));
  CHECK(table.class_of(W("abba")) == table.class_of(W("aba")));
  CHECK(table.class_of(W("ab")) != table.class_of(W("ba")));
  CHECK_THROWS_AS(table.class_of(W("abababa")), PreconditionError);
  CHECK_THROWS_AS(table.class_of(W("c")), PreconditionError);
}

TEST_CASE("word closure on one letter") {
  auto const table = word_closure(1, 5);
  REQUIRE(table.classes.size() == 2);
  CHECK(table.classes[0].words == std::vector<Word>{Word{}});
  CHECK(table.classes[1].words.size() == 5);
  CHECK(word_closure(0, 3).classes.size() == 1);
}

TEST_CASE("word closure reaches abcbabc") {
  auto const table = word_closure(3, 7);
  CHECK(table.budget == 9);
  CHECK(table.class_of(W("abc")) == table.class_of(W("abcbabc")));
  CHECK_THROWS_AS(word_closure(4, 3), CapacityError);
  CHECK_THROWS_AS(word_closure(3, 9), CapacityError);
}

TEST_CASE("stable word classes are the tree fibers") {
  for (int n = 1; n <= 3; ++n) {
    auto const table = word_closure(n, 7);
    auto const by_tree = fibers(table);
    int        stable  = 0;
    for (auto const& c : table.classes) {
      Tree const t = tree_of_word(c.words.front());
      for (Word const& w : c.words) {
        REQUIRE(tree_of_word(w) == t);
      }
      if (c.stable) {
        ++stable;
        CHECK(std::set<Word>(c.words.begin(), c.words.end()) == by_tree.at(t));
      }
    }
    // one class per tree reached by a word of length <= 7
    CHECK(table.classes.size() == by_tree.size());
    CHECK(stable == static_cast<int>(table.classes.size()));
  }
}

TEST_CASE("stable classes biject with trees") {
  for (int n = 1; n <= 2; ++n) {
    auto const table = word_closure(n, 8);
    std::set<Tree> trees;
    for (auto const& c : table.classes) {
      CHECK(c.stable);
      trees.insert(tree_of_word(c.words.front()));
    }
    std::size_t total = 0;
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
      total += enumerate_trees(Alphabet(bits)).size();
    }
    CHECK(trees.size() == total);
    CHECK(table.classes.size() == total);
  }
}
