#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mirig/error.hpp"
#include "mirig/paths.hpp"
#include "mirig/tree.hpp"
#include "support.hpp"

using namespace mirig;
using testing_support::T;
using testing_support::W;

namespace {

  // Longest prefix whose alphabet misses exactly one letter of alpha(w),
  // found by trying every prefix.
  GrfDecomposition naive_grf(Word const& w) {
    int const        k = word_alphabet(w).size();
    GrfDecomposition d{};
    for (std::size_t i = 0; i <= w.size(); ++i) {
      Word p(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      if (word_alphabet(p).size() == k - 1) {
        d.prefix         = p;
        d.prefix_missing = w[i];
      }
      Word q(w.end() - static_cast<std::ptrdiff_t>(i), w.end());
      if (word_alphabet(q).size() == k - 1) {
        d.suffix         = q;
        d.suffix_missing = w[w.size() - i - 1];
      }
    }
    return d;
  }

  bool well_formed(Tree const& t) {
    if (t.is_leaf()) {
      return true;
    }
    Alphabet const la = t.left().alphabet();
    Alphabet const ra = t.right().alphabet();
    return !la.contains(t.left_generator()) && !ra.contains(t.right_generator())
           && la.with(t.left_generator()) == ra.with(t.right_generator())
           && well_formed(t.left()) && well_formed(t.right());
  }

  Tree G(char c) {
    return Tree::generator(parse_letter(c));
  }

  ExtremalPath P(std::string const& s, Side side = Side::right) {
    return parse_path(s, side);
  }

}  // namespace

TEST_CASE("word alphabets") {
  CHECK(word_alphabet(W("bcac")) == Alphabet(0b111));
  CHECK(word_alphabet(W("")).empty());
  CHECK(word_alphabet(W("aaa")) == Alphabet::singleton(0));
}

TEST_CASE("word parsing reports the offending byte") {
  try {
    parse_word("ab1c");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("green-rees decomposition") {
  CHECK(grf(W("bcac")) == GrfDecomposition{W("bc"), 0, 1, W("cac")});
  CHECK(grf(W("ab")) == GrfDecomposition{W("a"), 1, 0, W("b")});
  CHECK(grf(W("aba")) == naive_grf(W("aba")));
  CHECK(grf(W("aba")) == GrfDecomposition{W("a"), 1, 1, W("a")});
  CHECK(grf(W("aaa")) == GrfDecomposition{W(""), 0, 0, W("")});
  CHECK_THROWS_AS(grf(W("")), PreconditionError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Word w = testing_support::random_word(rng, 4, 14);
    if (w.empty()) {
      continue;
    }
    CHECK(grf(w) == naive_grf(w));
  }
}

TEST_CASE("tree of a word") {
  Tree const expected = Tree::node(Tree::node(G('b'), 2, 1, G('c')), 0, 1,
                                   Tree::node(G('c'), 0, 0, G('c')));
  CHECK(T("bcac") == expected);
  CHECK(T("abab") == T("ab"));
  CHECK(T("").is_leaf());
  CHECK(T("bcac").height() == 3);
}

TEST_CASE("word of a tree") {
  CHECK(to_string(word_of_tree(T("bcac"))) == "bbcbccabccaacc");
  CHECK(word_of_tree(Tree()).empty());
  CHECK(to_string(word_of_tree(G('a'))) == "aa");
}

TEST_CASE("word equivalence") {
  CHECK(words_equivalent(W("abc"), W("abcbabc")));
  CHECK_FALSE(words_equivalent(W("ab"), W("ba")));
  CHECK(words_equivalent(W("cab"), W("cab")));
}

TEST_CASE("tree node constructor enforces the invariants") {
  CHECK_THROWS_AS(Tree::node(G('a'), 0, 1, Tree()), PreconditionError);
  CHECK_THROWS_AS(Tree::node(Tree(), 0, 1, Tree()), PreconditionError);
  CHECK_NOTHROW(Tree::node(G('a'), 1, 0, G('b')));
}

TEST_CASE("tree product") {
  CHECK(G('a') * G('b') == T("ab"));
  CHECK(T("ab") * T("ba") == Tree::node(G('a'), 1, 1, G('a')));
  CHECK(T("ab") * T("ba") == T("aba"));
  Tree const t = T("bcac");
  CHECK(t * t == t);
}

TEST_CASE("tree product agrees with concatenation of words") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    Tree const s = testing_support::random_tree(rng, 4);
    Tree const t = testing_support::random_tree(rng, 4);
    Word       w = word_of_tree(s);
    Word const v = word_of_tree(t);
    w.insert(w.end(), v.begin(), v.end());
    CHECK(s * t == tree_of_word(w));
    CHECK((s * t).alphabet() == (s.alphabet() | t.alphabet()));
    CHECK(well_formed(s * t));
  }
}

TEST_CASE("monoid laws") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    Tree const r = testing_support::random_tree(rng, 3);
    Tree const s = testing_support::random_tree(rng, 3);
    Tree const t = testing_support::random_tree(rng, 3);
    CHECK((r * s) * t == r * (s * t));
    CHECK(Tree() * t == t);
    CHECK(t * Tree() == t);
    CHECK(t * t == t);
    CHECK(well_formed(t));
  }
}

TEST_CASE("fibers are rectangular bands") {
  auto const trees = enumerate_trees(Alphabet::full(3));
  std::mt19937_64                        rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
  for (int i = 0; i < 3000; ++i) {
    Tree const& u = trees[pick(rng)];
    Tree const& v = trees[pick(rng)];
    Tree const& w = trees[pick(rng)];
    CHECK(u * v * w == u * w);
    if (u * v == v * u) {
      CHECK(u == v);
    }
  }
}

TEST_CASE("left factors") {
  CHECK(is_left_factor(G('a'), T("ab")));
  CHECK_FALSE(is_left_factor(G('b'), T("ab")));
  CHECK(G('b') * T("ab") == T("bab"));
  CHECK(is_left_factor(Tree(), T("bcac")));
  CHECK(is_right_factor(G('b'), T("ab")));
  CHECK_FALSE(is_right_factor(G('a'), T("ab")));

  // within one fiber, s is a left factor of t iff their left branches agree
  auto const trees = enumerate_trees(Alphabet::full(3));
  for (Tree const& s : trees) {
    for (Tree const& t : trees) {
      bool const branch_match
          = s.left() == t.left() && s.left_generator() == t.left_generator();
      CHECK(is_left_factor(s, t) == branch_match);
    }
  }
}

TEST_CASE("reversal is an anti-automorphism") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    Word w = testing_support::random_word(rng, 4, 12);
    Word r(w.rbegin(), w.rend());
    CHECK(reversed(tree_of_word(w)) == tree_of_word(r));
    Tree const s = testing_support::random_tree(rng, 3);
    Tree const t = testing_support::random_tree(rng, 3);
    CHECK(reversed(s * t) == reversed(t) * reversed(s));
  }
}

TEST_CASE("extremal paths") {
  CHECK(rmp(T("bcac")) == P("(b,a,c)"));
  CHECK(lmp(T("bcac")) == P("(b,c,a)", Side::left));
  CHECK(rmp(Tree()).seq.empty());

  // first and last occurrences
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    Word const             w = testing_support::random_word(rng, 4, 12);
    std::vector<Generator> firsts;
    for (Generator g : w) {
      if (std::find(firsts.begin(), firsts.end(), g) == firsts.end()) {
        firsts.push_back(g);
      }
    }
    std::vector<Generator> lasts;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (std::find(lasts.begin(), lasts.end(), *it) == lasts.end()) {
        lasts.insert(lasts.begin(), *it);
      }
    }
    CHECK(lmp(tree_of_word(w)).seq == firsts);
    CHECK(rmp(tree_of_word(w)).seq == lasts);
  }
}

TEST_CASE("path operations") {
  CHECK(path_star(P("(a,b,c)"), P("(c)")) == P("(a,b,c)"));
  CHECK(path_star(P("(a,b)"), P("(b,a)")) == P("(b,a)"));
  CHECK(path_star(P("(a,c,b)"), P("(c,b,a)"), 3) == P("(c,b,a)"));
  CHECK(path_star(P("(a,b,c)"), P("(c,a,b)"), 5) == P("(a,b,c)"));
  CHECK_THROWS_AS(path_star(P("(a)"), P("(a)", Side::left)), PreconditionError);
  CHECK_THROWS_AS(path_star(P("(a)"), P("(a)"), 0), PreconditionError);

  // equal support, j in {1, 2}: the right operation returns the second
  // argument and the left one the first
  for (Side side : {Side::left, Side::right}) {
    auto const& pu = PathUniverse::get(3);
    for (int i = 0; i < pu.size(); ++i) {
      for (int k = 0; k < pu.size(); ++k) {
        if (pu.support(i) != pu.support(k)) {
          continue;
        }
        for (int j : {1, 2}) {
          ExtremalPath const expected = side == Side::right ? pu.path(k, side) : pu.path(i, side);
          CHECK(path_star(pu.path(i, side), pu.path(k, side), j) == expected);
        }
      }
    }
  }
}

TEST_CASE("extremal paths of products") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    Tree const s = testing_support::random_tree(rng, 4);
    Tree const t = testing_support::random_tree(rng, 4);
    CHECK(rmp(s * t) == path_star(rmp(s), rmp(t)));
    CHECK(lmp(s * t) == path_star(lmp(s), lmp(t)));
    CHECK(rmp(t * s * t) == rmp(s * t));
    CHECK(lmp(t * s * t) == lmp(t * s));
  }
}

TEST_CASE("the left operation is the mirror of the right one") {
  auto const& pu = PathUniverse::get(4);
  auto        rev = [](ExtremalPath p, Side side) {
    std::reverse(p.seq.begin(), p.seq.end());
    p.side = side;
    return p;
  };
  for (int i = 0; i < pu.size(); ++i) {
    for (int k = 0; k < pu.size(); ++k) {
      for (int j = 1; j <= 5; ++j) {
        ExtremalPath const l = path_star(pu.path(i, Side::left), pu.path(k, Side::left), j);
        ExtremalPath const r
            = path_star(rev(pu.path(k, Side::left), Side::right),
                        rev(pu.path(i, Side::left), Side::right), j);
        CHECK(l == rev(r, Side::left));
      }
    }
  }
}

TEST_CASE("tree enumeration") {
  auto const two = enumerate_trees(Alphabet(0b11));
  CHECK(two.size() == 4);
  std::set<Tree> expected{T("ab"), T("ba"), T("aba"), T("bab")};
  CHECK(std::set<Tree>(two.begin(), two.end()) == expected);
  CHECK(enumerate_trees(Alphabet()).size() == 1);
  CHECK(enumerate_trees(Alphabet()).front().is_leaf());
  auto const three = enumerate_trees(Alphabet::full(3));
  CHECK(three.size() == 144);
  CHECK(std::is_sorted(three.begin(), three.end()));
  CHECK(enumerate_trees(Alphabet::full(4)).size() == 331776);
  CHECK_THROWS_AS(enumerate_trees(Alphabet::full(5)), CapacityError);

  for (Tree const& t : three) {
    CHECK(tree_of_word(word_of_tree(t)) == t);
    CHECK(well_formed(t));
  }
}

TEST_CASE("free idempotent monoid sizes") {
  CHECK(count_free_monoid(0) == 1);
  CHECK(count_free_monoid(1) == 2);
  CHECK(count_free_monoid(2) == 7);
  CHECK(count_free_monoid(3) == 160);
  CHECK(count_free_monoid(4) == 332381);
  for (int n = 0; n <= 4; ++n) {
    std::size_t total = 0;
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
      total += enumerate_trees(Alphabet(bits)).size();
    }
    CHECK(BigInt(total) == count_free_monoid(n));
  }
  for (int k = 1; k <= 8; ++k) {
    CHECK(count_trees_of_height(k) == k * k * count_trees_of_height(k - 1) * count_trees_of_height(k - 1));
  }
}

TEST_CASE("shortest words") {
  CHECK(to_string(shortest_word(T("bcac"))) == "bcac");
  CHECK(to_string(shortest_word(T("abcbabc"))) == "abc");
  CHECK(to_string(shortest_word(T("abab"))) == "ab");
  CHECK(shortest_word(Tree()).empty());
  for (Tree const& t : enumerate_trees(Alphabet::full(3))) {
    Word const w = shortest_word(t);
    CHECK(tree_of_word(w) == t);
  }
}

TEST_CASE("s-expressions") {
  Tree const t = T("bcac");
  CHECK(to_sexpr(t) == "(((() b b ()) c b (() c c ())) a b ((() c c ()) a a (() c c ())))");
  CHECK(parse_tree(to_sexpr(t)) == t);
  CHECK(parse_tree("( ((b) c b (c)) a b ((c) a a (c)) )") == t);
  CHECK(parse_tree("()").is_leaf());
  CHECK(to_sexpr(G('a')) == "(() a a ())");
  CHECK_THROWS_AS(parse_tree("((a) a b (b))"), ParseError);
  try {
    parse_tree("(() a a ()) x");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.offset() == 12);
  }
  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    Tree const s = testing_support::random_tree(rng, 5);
    CHECK(parse_tree(to_sexpr(s)) == s);
  }
}
