#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mirig/error.hpp"
#include "mirig/subsemigroup.hpp"
#include "support.hpp"

using namespace mirig;
using testing_support::T;

namespace {

  TreeSet set_of(int n, std::vector<std::string> const& words) {
    std::vector<Tree> ts;
    for (auto const& w : words) {
      ts.push_back(T(w));
    }
    return Universe::get(n).set_of(ts);
  }

  // Every subset of M_n (n <= 2) that is closed under the product.
  std::vector<TreeSet> all_subsemigroups(int n) {
    auto const&          uni = Universe::get(n);
    std::vector<TreeSet> out;
    for (std::uint32_t m = 0; m < (1U << uni.size()); ++m) {
      TreeSet s(m);
      if (is_subsemigroup(n, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  TreeSet random_subset(std::mt19937_64& rng, int n, int count) {
    auto const&                        uni = Universe::get(n);
    std::uniform_int_distribution<int> pick(0, uni.size() - 1);
    TreeSet                            s;
    for (int i = 0; i < count; ++i) {
      s.set(static_cast<std::size_t>(pick(rng)));
    }
    return s;
  }

  std::size_t left_branch_count(int n, TreeSet const& s, Alphabet a) {
    return branch_sets(n, s, a).first.branches.size();
  }

  std::size_t right_branch_count(int n, TreeSet const& s, Alphabet a) {
    return branch_sets(n, s, a).second.branches.size();
  }

  void check_branch_inequalities(int n, TreeSet const& s) {
    auto const& uni = Universe::get(n);
    auto const  fam = alphabets_of(n, s).members();
    for (auto count : {left_branch_count, right_branch_count}) {
      for (Alphabet a : fam) {
        for (Alphabet b : fam) {
          if (a.subset_of(b)) {
            CHECK(count(n, s, a) <= count(n, s, b));
          }
          if (!a.subset_of(b) && !b.subset_of(a)) {
            CHECK(count(n, s, a | b) >= count(n, s, a) + count(n, s, b));
            if ((a & b).empty()) {
              auto const sa = (s & uni.fiber(a)).count();
              auto const sb = (s & uni.fiber(b)).count();
              CHECK(count(n, s, a | b) >= sa * count(n, s, b) + count(n, s, a) * sb);
            }
          }
        }
      }
    }
  }

}  // namespace

TEST_CASE("product closure") {
  TreeSet const s = close_under_product(3, set_of(3, {"ab", "ac"}));
  CHECK(s == set_of(3, {"ab", "ac", "abac", "acab", "acabac", "abacab"}));
  TreeSet const one = set_of(3, {"bcac"});
  CHECK(close_under_product(3, one) == one);
  CHECK(close_under_product(3, TreeSet()).none());
}

TEST_CASE("xy factors") {
  TreeSet const s = close_under_product(3, set_of(3, {"ab", "ac"}));
  TreeSet const f = xy_factor(3, s, T("a"), Tree());
  auto const&   u = Universe::get(3);
  CHECK(f.test(static_cast<std::size_t>(u.index(T("b")))));
  CHECK(f.test(static_cast<std::size_t>(u.index(T("c")))));
  CHECK_FALSE(f.test(static_cast<std::size_t>(u.index(T("bc")))));
  CHECK_FALSE(is_subsemigroup(3, f));
  CHECK(xy_factor(3, s, Tree(), Tree()) == s);
  CHECK(xy_factor(3, TreeSet(), T("ab"), T("c")).none());
}

TEST_CASE("xy factors distribute over unions and intersections") {
  std::mt19937_64 rng(23);
  auto const&     uni = Universe::get(3);
  std::uniform_int_distribution<int> pick(0, uni.size() - 1);
  for (int i = 0; i < 200; ++i) {
    TreeSet const u = random_subset(rng, 3, 40);
    TreeSet const v = random_subset(rng, 3, 40);
    Tree const    x = uni.tree(pick(rng));
    Tree const    y = uni.tree(pick(rng));
    CHECK(xy_factor(3, u & v, x, y) == (xy_factor(3, u, x, y) & xy_factor(3, v, x, y)));
    CHECK(xy_factor(3, u | v, x, y) == (xy_factor(3, u, x, y) | xy_factor(3, v, x, y)));
  }
}

TEST_CASE("branch sets") {
  auto const [lb, rb] = branch_sets(2, set_of(2, {"ab", "aba"}), Alphabet(0b11));
  CHECK(lb.branches == std::set<Branch>{Branch{T("a"), 1}});
  CHECK(rb.branches == std::set<Branch>{Branch{T("b"), 0}, Branch{T("a"), 1}});

  TreeSet const all2 = Universe::get(2).fiber(Alphabet(0b11));
  auto const [l2, r2] = branch_sets(2, all2, Alphabet(0b11));
  CHECK(l2.branches.size() == 2);
  CHECK(r2.branches.size() == 2);

  auto const [l0, r0] = branch_sets(2, set_of(2, {""}), Alphabet());
  CHECK(l0.branches == std::set<Branch>{Branch{Tree(), std::nullopt}});
  CHECK(r0.branches == std::set<Branch>{Branch{Tree(), std::nullopt}});
  CHECK(reconstruct_uniform(l0, r0) == std::vector<Tree>{Tree()});

  CHECK_THROWS_AS(branch_sets(2, set_of(2, {"a"}), Alphabet(0b11)), PreconditionError);
}

TEST_CASE("uniform subsemigroups are products of their branch sets") {
  for (int n = 0; n <= 2; ++n) {
    auto const& uni = Universe::get(n);
    for (TreeSet const& s : all_subsemigroups(n)) {
      auto const fam = alphabets_of(n, s);
      if (fam.size() != 1) {
        continue;
      }
      Alphabet const a = fam.members().front();
      auto const [lb, rb] = branch_sets(n, s, a);
      CHECK(uni.set_of(reconstruct_uniform(lb, rb)) == s);
    }
  }
  // on {a,b,c}: the product closure of any set of trees is the full branch product
  std::mt19937_64 rng(29);
  auto const&     uni   = Universe::get(3);
  TreeSet const   fiber = uni.fiber(Alphabet::full(3));
  for (int i = 0; i < 300; ++i) {
    TreeSet const u = random_subset(rng, 3, 6) & fiber;
    if (u.none()) {
      continue;
    }
    TreeSet const s = close_under_product(3, u);
    auto const [lb, rb] = branch_sets(3, u, Alphabet::full(3));
    CHECK(uni.set_of(reconstruct_uniform(lb, rb)) == s);
  }
}

TEST_CASE("uniform subsemigroup counts") {
  CHECK(count_uniform(0) == 1);
  CHECK(count_uniform(1) == 2);
  CHECK(count_uniform_of_height(2) == 9);
  CHECK(count_uniform_of_height(3) == BigInt(4095) * 4095);

  // direct enumeration
  for (int n = 0; n <= 2; ++n) {
    int uniform = 0;
    for (TreeSet const& s : all_subsemigroups(n)) {
      if (alphabets_of(n, s).size() == 1) {
        ++uniform;
      }
    }
    CHECK(BigInt(uniform) == count_uniform(n));
  }
  CHECK(count_uniform(2) == 12);
  CHECK_THROWS_AS(count_uniform(6), CapacityError);
}

TEST_CASE("subsemigroups of T_2 are all replete") {
  auto const subs = all_subsemigroups(2);
  CHECK(subs.size() == 42);
  for (TreeSet const& s : subs) {
    CHECK(is_replete(2, s));
    CHECK(is_replete_by_definition(2, s));
  }
  CHECK(all_subsemigroups(1).size() == 4);
  CHECK(all_subsemigroups(0).size() == 2);
}

TEST_CASE("a non-replete subsemigroup of T_3") {
  TreeSet const s = close_under_product(3, set_of(3, {"ab", "ac"}));
  CHECK_FALSE(is_replete(3, s));
  CHECK_FALSE(is_replete_by_definition(3, s));
  CHECK_THROWS_AS(is_replete(3, set_of(3, {"a", "b"})), PreconditionError);
}

TEST_CASE("a single tree of height 3 generates 4 trees") {
  auto const& uni = Universe::get(3);
  for (Tree const& t : enumerate_trees(Alphabet::full(3))) {
    TreeSet const single = uni.set_of({t});
    CHECK(is_subsemigroup(3, single));
    CHECK_FALSE(is_replete(3, single));
    CHECK(replete_closure_set(3, single).count() == 4);
  }
}

TEST_CASE("fiber criterion agrees with the definition") {
  std::mt19937_64 rng(31);
  int             replete = 0;
  for (int i = 0; i < 60; ++i) {
    TreeSet const u = random_subset(rng, 3, 1 + i % 4);
    TreeSet const s = i % 2 == 0 ? close_under_product(3, u) : replete_closure_set(3, u);
    bool const    r = is_replete(3, s);
    replete += r ? 1 : 0;
    CHECK(r == is_replete_by_definition(3, s));
  }
  CHECK(replete > 0);
  CHECK(replete < 60);
}

TEST_CASE("replete closure") {
  RepleteSubsemigroup const r = replete_closure(3, set_of(3, {"ab", "ac"}));
  TreeSet const             s = r.expand();
  CHECK(s.test(static_cast<std::size_t>(Universe::get(3).index(T("abc")))));
  AlphabetFamily expected;
  expected.insert(Alphabet(0b011));
  expected.insert(Alphabet(0b101));
  expected.insert(Alphabet(0b111));
  CHECK(r.alphabets() == expected);
  CHECK(replete_closure_set(3, TreeSet()).none());

  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    TreeSet const u = random_subset(rng, 3, 1 + i % 5);
    TreeSet const v = u | random_subset(rng, 3, 2);
    TreeSet const c = replete_closure_set(3, u);
    CHECK((u & ~c).none());
    CHECK(replete_closure_set(3, c) == c);
    CHECK((c & ~replete_closure_set(3, v)).none());
    CHECK(alphabets_of(3, c) == alphabets_of(3, close_under_product(3, u)));
    CHECK(is_replete(3, c));
    CHECK(RepleteSubsemigroup::from_trees(3, c) == replete_closure(3, u));
  }
}

TEST_CASE("replete closure is least among replete supersets") {
  auto const all = enumerate_replete(2);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    TreeSet const u = random_subset(rng, 2, 1 + i % 3);
    TreeSet       meet = Universe::get(2).all();
    for (auto const& r : all) {
      TreeSet const s = r.expand();
      if ((u & ~s).none()) {
        meet &= s;
      }
    }
    CHECK(replete_closure_set(2, u) == meet);
  }
}

TEST_CASE("path classes") {
  for (int k = 0; k <= 4; ++k) {
    auto const& pu      = PathUniverse::get(4);
    std::size_t covered = 0;
    for (int i = 0; i < pu.size(); ++i) {
      if (pu.support(i) != Alphabet::full(k)) {
        continue;
      }
      for (Side side : {Side::left, Side::right}) {
        PathClass const c = path_class(pu.path(i, side));
        CHECK(BigInt(c.branches.size()) == c.count);
        for (Branch const& b : c.branches) {
          CHECK(extremal_path(b, side) == pu.path(i, side));
        }
        if (side == Side::right) {
          covered += c.branches.size();
        }
      }
    }
    if (k >= 1) {
      // every right branch of height k lies in exactly one class
      CHECK(BigInt(covered) == k * count_trees_of_height(k - 1));
    }
  }
  CHECK(path_class(parse_path("(a,b,c)", Side::right)).count == 2);
  CHECK(path_class(parse_path("(a,b)", Side::right)).count == 1);
  CHECK(path_class(parse_path("(a)", Side::right)).count == 1);
}

TEST_CASE("replete enumeration for n <= 2 matches exhaustive search") {
  for (int n = 0; n <= 2; ++n) {
    auto const     rs = enumerate_replete(n);
    std::set<std::string> expanded;
    for (auto const& r : rs) {
      expanded.insert(r.expand().to_string());
    }
    std::set<std::string> direct;
    for (TreeSet const& s : all_subsemigroups(n)) {
      direct.insert(s.to_string());
    }
    CHECK(expanded == direct);
    CHECK(expanded.size() == rs.size());
  }
}

TEST_CASE("replete subsemigroups of T_3") {
  auto const rs = enumerate_replete(3);
  CHECK(rs.size() == 18030);
  CHECK(std::is_sorted(rs.begin(), rs.end()));
  std::set<std::string> seen;
  std::size_t           low = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    TreeSet const s = rs[i].expand();
    seen.insert(s.to_string());
    CHECK(is_replete(3, s));
    CHECK(RepleteSubsemigroup::from_trees(3, s) == rs[i]);
    bool small = true;
    for (Alphabet a : rs[i].alphabets().members()) {
      small = small && a.size() <= 2;
    }
    low += small ? 1 : 0;
    if (i % 40 == 0) {
      check_branch_inequalities(3, s);
    }
  }
  CHECK(seen.size() == rs.size());
  CHECK(low == 116);

  // closures of random sets land in the enumeration
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    TreeSet const c = replete_closure_set(3, random_subset(rng, 3, 1 + i % 4));
    CHECK(seen.contains(c.to_string()));
  }
  // a few members checked against the definition directly
  for (std::size_t i = 0; i < rs.size(); i += 2003) {
    CHECK(is_replete_by_definition(3, rs[i].expand()));
  }
}

TEST_CASE("replete counts") {
  CHECK(enumerate_replete(0).size() == 2);
  CHECK(enumerate_replete(1).size() == 4);
  CHECK(enumerate_replete(2).size() == 42);
  CHECK_THROWS_AS(enumerate_replete(4), CapacityError);
}

TEST_CASE("branch inequalities on T_2") {
  for (TreeSet const& s : all_subsemigroups(2)) {
    check_branch_inequalities(2, s);
  }
}

TEST_CASE("bounded height counts") {
  CHECK(count_replete_bounded_height(2, 2) == 42);
  CHECK(count_replete_bounded_height(3, 2) == 116);
  CHECK(count_replete_bounded_height(3, 3) == 18030);
  for (int n = 0; n <= 3; ++n) {
    CHECK(count_replete_bounded_height(n, 3) == enumerate_replete(n).size());
  }
  for (int n = 0; n <= 2; ++n) {
    CHECK(count_replete_bounded_height(n, 2) == enumerate_replete(n).size());
  }
  CHECK_THROWS_AS(count_replete_bounded_height(3, 4), PreconditionError);
}

TEST_CASE("replete height-3 branch sets") {
  auto const sets = height3_replete_branch_sets();
  CHECK(sets.size() == 22);
  auto const& pu = PathUniverse::get(3);
  for (PathMask m : sets) {
    CHECK(pu.support_family(m).members() == std::vector<Alphabet>{Alphabet::full(3)});
  }
}

TEST_CASE("replete representation validation") {
  AlphabetFamily f;
  f.insert(Alphabet(0b11));
  auto const& pu = PathUniverse::get(2);
  CHECK_THROWS_AS(RepleteSubsemigroup(2, f, 0, pu.with_support(Alphabet(0b11))),
                  PreconditionError);
  CHECK_NOTHROW(RepleteSubsemigroup(2, f, pu.with_support(Alphabet(0b11)),
                                    pu.with_support(Alphabet(0b11))));
  AlphabetFamily bad;
  bad.insert(Alphabet(0b01));
  bad.insert(Alphabet(0b10));
  CHECK_THROWS_AS(RepleteSubsemigroup(2, bad, 0b11, 0b11), PreconditionError);
}
