#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mirig/subsemigroup.hpp"
#include "mirig/thicket.hpp"
#include "mirig/universe.hpp"

namespace mirig {

  // Canonical form (S, D, p) of an element of the free mirig R_n, n <= 3:
  // S a replete subsemigroup, D a sparse set of stragglers dominated by S,
  // and p the parity function, stored as the family of alphabets where it
  // is 1.
  class ComplementaryTriple {
   public:
    ComplementaryTriple() = default;  // zero over no generators
    // throws PreconditionError naming the first violated condition
    ComplementaryTriple(int n, TreeSet s, TreeSet d, AlphabetFamily odd);

    static ComplementaryTriple zero(int n);
    static ComplementaryTriple one(int n);
    static ComplementaryTriple gen(int n, Generator g);

    int n() const noexcept {
      return n_;
    }
    TreeSet const& s() const noexcept {
      return s_;
    }
    TreeSet const& d() const noexcept {
      return d_;
    }
    AlphabetFamily odd() const noexcept {
      return odd_;
    }
    int parity(Alphabet a) const noexcept {
      return odd_.contains(a) ? 1 : 0;
    }
    RepleteSubsemigroup replete() const {
      return RepleteSubsemigroup::from_trees(n_, s_);
    }

    friend bool operator==(ComplementaryTriple const&, ComplementaryTriple const&) = default;
    // an arbitrary but fixed total order
    friend bool operator<(ComplementaryTriple const& x, ComplementaryTriple const& y);

   private:
    int            n_ = 0;
    TreeSet        s_;
    TreeSet        d_;
    AlphabetFamily odd_;
  };

  // nullopt if (s, d, odd) is a complementary triple, else the reason
  std::optional<std::string> triple_violation(int n, TreeSet const& s, TreeSet const& d,
                                              AlphabetFamily odd);

  bool is_sparse(int n, TreeSet const& d);
  bool dominates(int n, TreeSet const& s, TreeSet const& d);

  // Least replete S containing u with S + d closed under the product.
  TreeSet dominating_closure(int n, TreeSet const& u, TreeSet const& d);

  ComplementaryTriple operator+(ComplementaryTriple const& x, ComplementaryTriple const& y);
  ComplementaryTriple operator*(ComplementaryTriple const& x, ComplementaryTriple const& y);

  ComplementaryTriple normalize_thicket(Thicket const& f);
  // Stragglers with coefficient 1, trees of S with coefficient 2, except the
  // least tree of each S_A with p(A) = 1, which gets 3.
  Thicket canonical_thicket(ComplementaryTriple const& c);

  // All D dominated by the replete subsemigroup s.
  std::vector<TreeSet> dominated_sets(int n, TreeSet const& s);

  // Every complementary triple, sorted; n <= 3.
  std::vector<ComplementaryTriple> enumerate_triples(int n);

  // A random triple: S uniform among replete subsemigroups, D uniform among
  // the sets S dominates, p uniform among parity functions.
  class TripleSampler {
   public:
    explicit TripleSampler(int n);
    ComplementaryTriple operator()(std::mt19937_64& rng) const;

   private:
    int                              n_;
    std::vector<RepleteSubsemigroup> replete_;
  };

  // JSON-free text summary "S=[...] D=[...] p=[...]" with trees as words
  std::string to_string(ComplementaryTriple const& c);

}  // namespace mirig
