#pragma once

#include <compare>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mirig/paths.hpp"
#include "mirig/universe.hpp"

namespace mirig {

  // All operations on explicit tree sets take the ambient generator count n
  // (n <= 3); the sets index Universe::get(n).

  TreeSet close_under_product(int n, TreeSet const& u);
  bool    is_subsemigroup(int n, TreeSet const& s);

  // x\U/y = {t : x*t*y in U}
  TreeSet xy_factor(int n, TreeSet const& u, Tree const& x, Tree const& y);

  // A left branch (t_0, a_0) or right branch (a_1, t_1) of a tree. The
  // branch of the leaf has no generator.
  struct Branch {
    Tree                     tree;
    std::optional<Generator> generator;

    friend bool operator==(Branch const&, Branch const&) = default;
    friend auto operator<=>(Branch const&, Branch const&) = default;
  };

  struct BranchSet {
    Side             side   = Side::right;
    int              height = 0;
    std::set<Branch> branches;

    friend bool operator==(BranchSet const&, BranchSet const&) = default;
  };

  Branch branch(Tree const& t, Side side);
  ExtremalPath extremal_path(Branch const& b, Side side);

  // Left and right branch sets of the fiber S_A. Throws PreconditionError
  // if S_A is empty.
  std::pair<BranchSet, BranchSet> branch_sets(int n, TreeSet const& s, Alphabet a);
  // The uniform subsemigroup with the given branch sets: all trees
  // (l, a0, a1, r) with (l, a0) in lb and (a1, r) in rb.
  std::vector<Tree> reconstruct_uniform(BranchSet const& lb, BranchSet const& rb);

  // Repleteness through the fiber decomposition: S is replete iff every
  // fiber S_A consists of all trees of alphabet A whose leftmost and
  // rightmost paths occur in S_A. Throws PreconditionError if s is not a
  // subsemigroup.
  bool is_replete(int n, TreeSet const& s);
  // Direct check that every x\S/y is a subsemigroup, for x, y over M_n.
  bool is_replete_by_definition(int n, TreeSet const& s);

  // A replete subsemigroup stored as its alphabet family together with the
  // sets of leftmost and rightmost paths of its trees. The empty alphabet
  // stands for the identity tree.
  class RepleteSubsemigroup {
   public:
    RepleteSubsemigroup() = default;
    // throws PreconditionError unless both path sets are closed and their
    // supports are exactly the non-empty members of the family
    RepleteSubsemigroup(int n, AlphabetFamily alphabets, PathMask left, PathMask right);

    // throws PreconditionError if s is not a replete subsemigroup
    static RepleteSubsemigroup from_trees(int n, TreeSet const& s);

    int n() const noexcept {
      return n_;
    }
    AlphabetFamily alphabets() const noexcept {
      return alphabets_;
    }
    PathMask left_mask() const noexcept {
      return left_;
    }
    PathMask right_mask() const noexcept {
      return right_;
    }
    std::vector<ExtremalPath> left_paths() const;
    std::vector<ExtremalPath> right_paths() const;
    bool                      contains_identity() const noexcept {
      return alphabets_.contains(Alphabet());
    }

    // {t : alpha(t) in family, lmp(t) in left, rmp(t) in right}
    TreeSet expand() const;

    friend bool operator==(RepleteSubsemigroup const&, RepleteSubsemigroup const&) = default;
    friend auto operator<=>(RepleteSubsemigroup const&, RepleteSubsemigroup const&) = default;

   private:
    int            n_ = 0;
    AlphabetFamily alphabets_;
    PathMask       left_  = 0;
    PathMask       right_ = 0;
  };

  // Least replete subsemigroup containing u.
  RepleteSubsemigroup replete_closure(int n, TreeSet const& u);
  TreeSet             replete_closure_set(int n, TreeSet const& u);

  // The branches whose extremal path is p, with the closed-form count.
  struct PathClass {
    std::vector<Branch> branches;
    BigInt              count;
  };
  PathClass path_class(ExtremalPath const& p);
  BigInt    path_class_size(int k);

  // Every replete subsemigroup of T_n, each once, ordered by (family, left,
  // right). Throws CapacityError for n > 3.
  std::vector<RepleteSubsemigroup> enumerate_replete(int n);

  // Number of inhabited uniform subsemigroups of T_n, plus the identity.
  BigInt count_uniform(int n);
  // Inhabited uniform subsemigroups of a fixed k-letter alphabet.
  BigInt count_uniform_of_height(int k);

  // Replete subsemigroups of T_n all of whose trees have height <= h, h in {2, 3}.
  BigInt count_replete_bounded_height(int n, int h);

  // The non-empty sets of height-3 rightmost paths over {a,b,c} closed
  // under the path operations, as masks over PathUniverse::get(3).
  std::vector<PathMask> height3_replete_branch_sets();

}  // namespace mirig
