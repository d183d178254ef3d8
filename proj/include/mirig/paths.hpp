#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mirig/alphabet.hpp"
#include "mirig/tree.hpp"

namespace mirig {

  enum class Side { left, right };

  // Leftmost or rightmost path of a tree: the order of first (resp. last)
  // occurrences of its generators. Entries are distinct.
  struct ExtremalPath {
    Side                   side = Side::right;
    std::vector<Generator> seq;

    Alphabet support() const;
    int      length() const noexcept {
      return static_cast<int>(seq.size());
    }

    friend bool operator==(ExtremalPath const&, ExtremalPath const&) = default;
    friend auto operator<=>(ExtremalPath const&, ExtremalPath const&) = default;
  };

  ExtremalPath extremal_path(Tree const& t, Side side);
  inline ExtremalPath lmp(Tree const& t) {
    return extremal_path(t, Side::left);
  }
  inline ExtremalPath rmp(Tree const& t) {
    return extremal_path(t, Side::right);
  }

  // rmp(s*t) = path_star(rmp(s), rmp(t)) and lmp(s*t) = path_star(lmp(s), lmp(t)).
  // With j given, the right operation first drops the first j-1 entries of
  // the second argument; the left operation drops the last j-1 entries of
  // the first argument. j = 1 is the plain operation.
  // Throws PreconditionError on mixed sides, repeated entries or j < 1.
  ExtremalPath path_star(ExtremalPath const& x, ExtremalPath const& y,
                         std::optional<int> j = std::nullopt);

  // "(b,a,c)"
  std::string to_string(ExtremalPath const& p);
  ExtremalPath parse_path(std::string_view text, Side side);

  using PathMask = std::uint64_t;

  // All non-empty duplicate-free sequences over [n] (n <= 4, so at most 64),
  // with precomputed operation tables. Path sets are bitmasks over this
  // indexing; the order is by length, then lexicographic.
  class PathUniverse {
   public:
    static constexpr int kMaxN = 4;

    static PathUniverse const& get(int n);

    int n() const noexcept {
      return n_;
    }
    int size() const noexcept {
      return static_cast<int>(seqs_.size());
    }
    std::vector<Generator> const& sequence(int i) const {
      return seqs_.at(static_cast<std::size_t>(i));
    }
    ExtremalPath path(int i, Side side) const {
      return ExtremalPath{side, sequence(i)};
    }
    Alphabet support(int i) const {
      return supports_.at(static_cast<std::size_t>(i));
    }
    int index(std::vector<Generator> const& seq) const;

    // index of path_star(i, k, j)
    int star(Side side, int i, int k, int j = 1) const;

    // Least superset of m closed under the full operation on all pairs and
    // under every j-operation on pairs with equal support.
    PathMask closure(Side side, PathMask m) const;
    bool     is_closed(Side side, PathMask m) const {
      return closure(side, m) == m;
    }

    AlphabetFamily support_family(PathMask m) const;
    PathMask       with_support(Alphabet a) const;
    std::vector<ExtremalPath> paths(PathMask m, Side side) const;
    PathMask                  mask_of(std::vector<ExtremalPath> const& ps) const;

   private:
    explicit PathUniverse(int n);

    int                                 n_;
    std::vector<std::vector<Generator>> seqs_;
    std::vector<Alphabet>               supports_;
    // closure step generators: results of all admissible operations on (i, k)
    std::vector<PathMask> step_[2];
  };

}  // namespace mirig
