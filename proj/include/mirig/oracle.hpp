#pragma once

#include <cstdint>
#include <vector>

#include "mirig/thicket.hpp"
#include "mirig/word.hpp"

namespace mirig {

  struct WordClass {
    std::vector<Word> words;  // shortlex order; words.front() is the representative
    // unchanged by the last length layer of the search
    bool stable = false;
  };

  // Words of length <= max_length over n letters, partitioned by the
  // congruence generated by w ~ ww. The search joins every word of length
  // <= budget to the words reached by uu -> u and by xyz -> xz with
  // c(y) contained in c(x) = c(z), a consequence of w ~ ww.
  struct WordClassTable {
    int                    n          = 0;
    int                    max_length = 0;
    int                    budget     = 0;
    std::vector<WordClass> classes;  // ordered by representative

    // index of the class holding w; throws PreconditionError if w is out of range
    int class_of(Word const& w) const;
  };

  inline constexpr int kWordClosureSlack = 2;

  // n <= 3, max_length <= 8; budget defaults to max_length + 2.
  WordClassTable word_closure(int n, int max_length, int budget = -1);

  // Thickets over M_n with coefficients in N_{2,2} as base-4 node ids, digit
  // i being the coefficient of the i-th tree of the universe, connected by
  // the expansion moves.
  class ExpansionGraph {
   public:
    static ExpansionGraph const& get(int n);  // n <= 2, cached

    int n() const noexcept {
      return n_;
    }
    std::uint32_t node_count() const noexcept {
      return static_cast<std::uint32_t>(component_.size());
    }
    int component_count() const noexcept {
      return components_;
    }
    std::uint32_t node_of(Thicket const& f) const;
    Thicket       thicket_of(std::uint32_t node) const;
    // dense component label in 0..component_count()-1
    int component(std::uint32_t node) const {
      return component_.at(node);
    }
    // every thicket of the component is a summand of this one
    bool is_maximal(std::uint32_t node) const;
    std::vector<std::uint32_t> moves(std::uint32_t node) const;

   private:
    explicit ExpansionGraph(int n);

    struct Move {
      int p, q, r, s;  // x u y, x v y, x u v y, x v u y
    };

    int                n_;
    int                trees_;
    std::vector<Move>  moves_;
    std::vector<int>   component_;
    int                components_ = 0;
    // per component and tree: 0, 1, or 2 for a coefficient of 2 or 3
    std::vector<std::vector<int>> top_level_;
  };

  inline ExpansionGraph const& thicket_components(int n) {
    return ExpansionGraph::get(n);
  }

  bool oracle_equivalent(Thicket const& f, Thicket const& g);

}  // namespace mirig
