#include "mirig/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "mirig/error.hpp"
#include "mirig/universe.hpp"

namespace mirig {

  namespace {
    constexpr int kMaxClosureGenerators = 3;
    constexpr int kMaxClosureLength     = 8;
    constexpr int kMaxGraphGenerators   = 2;

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent_[std::max(x, y)] = std::min(x, y);
        }
      }

     private:
      std::vector<std::size_t> parent_;
    };

    // Words are indexed by length, then lexicographically (shortlex).
    struct WordIndex {
      int                      n;
      std::vector<std::size_t> offset;  // first index of each length

      WordIndex(int n, int max_len) : n(n) {
        std::size_t count = 0;
        std::size_t layer = 1;
        for (int l = 0; l <= max_len + 1; ++l) {
          offset.push_back(count);
          count += layer;
          layer *= static_cast<std::size_t>(n);
        }
      }
      std::size_t size(int max_len) const {
        return offset[static_cast<std::size_t>(max_len) + 1];
      }
      std::size_t index(Word const& w) const {
        std::size_t v = 0;
        for (Generator g : w) {
          v = v * static_cast<std::size_t>(n) + g;
        }
        return offset[w.size()] + v;
      }
      Word word(std::size_t i) const {
        std::size_t len = 0;
        while (offset[len + 1] <= i) {
          ++len;
        }
        std::size_t v = i - offset[len];
        Word        w(len);
        for (std::size_t k = len; k-- > 0;) {
          w[k] = static_cast<Generator>(v % static_cast<std::size_t>(n));
          v /= static_cast<std::size_t>(n);
        }
        return w;
      }
    };

    Word without(Word const& w, std::size_t begin, std::size_t end) {
      Word v = w;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(begin),
              v.begin() + static_cast<std::ptrdiff_t>(end));
      return v;
    }

    // Union w with every word reached by one shortening move: uu -> u, and
    // xyz -> xz whenever c(y) is contained in c(x) = c(z).
    void unite_shortenings(Word const& w, WordIndex const& idx, UnionFind& uf) {
      std::size_t const self = idx.index(w);
      for (std::size_t l = 1; 2 * l <= w.size(); ++l) {
        for (std::size_t i = 0; i + 2 * l <= w.size(); ++i) {
          if (std::equal(w.begin() + static_cast<std::ptrdiff_t>(i),
                         w.begin() + static_cast<std::ptrdiff_t>(i + l),
                         w.begin() + static_cast<std::ptrdiff_t>(i + l))) {
            uf.unite(self, idx.index(without(w, i, i + l)));
          }
        }
      }
      // ending[j]: contents of the non-empty factors ending at j;
      // starting[k]: contents of the non-empty factors starting at k
      std::size_t const               m = w.size();
      std::vector<std::vector<Alphabet>> ending(m + 1), starting(m + 1);
      for (std::size_t j = 1; j <= m; ++j) {
        Alphabet c;
        for (std::size_t i = j; i-- > 0;) {
          c = c.with(w[i]);
          if (ending[j].empty() || ending[j].back() != c) {
            ending[j].push_back(c);
          }
        }
      }
      for (std::size_t k = 0; k < m; ++k) {
        Alphabet c;
        for (std::size_t i = k; i < m; ++i) {
          c = c.with(w[i]);
          if (starting[k].empty() || starting[k].back() != c) {
            starting[k].push_back(c);
          }
        }
      }
      for (std::size_t j = 1; j < m; ++j) {
        Alphabet y;
        for (std::size_t k = j + 1; k < m; ++k) {
          y = y.with(w[k - 1]);
          bool found = false;
          for (Alphabet cx : ending[j]) {
            for (Alphabet cz : starting[k]) {
              found = found || (cx == cz && y.subset_of(cx));
            }
          }
          if (found) {
            uf.unite(self, idx.index(without(w, j, k)));
          }
        }
      }
    }
    // position of a coefficient in the summand order 0 < 1 < {2, 3}
    int level(std::uint32_t node, int tree) {
      return std::min(2, static_cast<int>((node >> (2 * tree)) & 3U));
    }
  }  // namespace

  int WordClassTable::class_of(Word const& w) const {
    if (static_cast<int>(w.size()) > max_length) {
      throw PreconditionError("word longer than the closure bound "
                              + std::to_string(max_length));
    }
    for (Generator g : w) {
      if (g >= n) {
        throw PreconditionError("letter " + std::string(1, letter(g))
                                + " outside the closure alphabet");
      }
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      auto const& ws = classes[c].words;
      auto const  shortlex = [](Word const& x, Word const& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
      };
      if (std::binary_search(ws.begin(), ws.end(), w, shortlex)) {
        return static_cast<int>(c);
      }
    }
    throw Error("word_closure: word not classified");  // unreachable
  }

  WordClassTable word_closure(int n, int max_length, int budget) {
    if (n < 0 || max_length < 0) {
      throw PreconditionError("word_closure: negative argument");
    }
    if (budget < 0) {
      budget = max_length + kWordClosureSlack;
    }
    if (n > kMaxClosureGenerators || max_length > kMaxClosureLength
        || budget > kMaxClosureLength + kWordClosureSlack) {
      throw CapacityError("word_closure: limited to n <= 3, max_length <= 8, budget <= 10");
    }
    budget = std::max(budget, max_length);
    WordIndex const   idx(std::max(n, 1), budget);
    std::size_t const total = n == 0 ? 1 : idx.size(budget);
    std::size_t const kept  = n == 0 ? 1 : idx.size(max_length);
    UnionFind         uf(total);

    auto roots = [&] {
      std::vector<std::size_t> r(kept);
      for (std::size_t i = 0; i < kept; ++i) {
        r[i] = uf.find(i);
      }
      return r;
    };
    std::vector<std::size_t> before;
    if (n > 0) {
      for (std::size_t i = 0; i < total; ++i) {
        if (i == idx.offset[static_cast<std::size_t>(budget)]) {
          before = roots();
        }
        unite_shortenings(idx.word(i), idx, uf);
      }
    }
    std::vector<std::size_t> after = roots();
    if (before.empty()) {
      before = after;
    }

    WordClassTable table{n, max_length, budget, {}};
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t i = 0; i < kept; ++i) {
      auto [it, fresh] = class_of_root.try_emplace(after[i], table.classes.size());
      if (fresh) {
        table.classes.emplace_back();
      }
      table.classes[it->second].words.push_back(n == 0 ? Word{} : idx.word(i));
    }
    // a class is stable when the last layer merged nothing into it
    for (auto& c : table.classes) {
      std::set<std::size_t> earlier;
      for (Word const& w : c.words) {
        earlier.insert(before[n == 0 ? 0 : idx.index(w)]);
      }
      c.stable = earlier.size() == 1;
    }
    return table;
  }

  ExpansionGraph::ExpansionGraph(int n) : n_(n) {
    auto const& uni = Universe::get(n);
    trees_          = uni.size();
    std::set<std::array<int, 4>> seen;
    for (int x = 0; x < trees_; ++x) {
      for (int y = 0; y < trees_; ++y) {
        for (int u = 0; u < trees_; ++u) {
          for (int v = u; v < trees_; ++v) {
            int const xu = uni.product(x, u);
            int const xv = uni.product(x, v);
            int const p  = uni.product(xu, y);
            int const q  = uni.product(xv, y);
            int const r  = uni.product(uni.product(xu, v), y);
            int const s  = uni.product(uni.product(xv, u), y);
            std::array<int, 4> key{std::min(p, q), std::max(p, q), std::min(r, s),
                                   std::max(r, s)};
            if (seen.insert(key).second) {
              moves_.push_back(Move{key[0], key[1], key[2], key[3]});
            }
          }
        }
      }
    }

    std::uint32_t const nodes = 1U << (2 * trees_);
    UnionFind           uf(nodes);
    for (std::uint32_t f = 0; f < nodes; ++f) {
      for (std::uint32_t g : moves(f)) {
        uf.unite(f, g);
      }
    }
    component_.assign(nodes, -1);
    std::vector<int> label(nodes, -1);
    for (std::uint32_t f = 0; f < nodes; ++f) {
      std::size_t const root = uf.find(f);
      if (label[root] < 0) {
        label[root] = components_++;
      }
      component_[f] = label[root];
    }
    top_level_.assign(static_cast<std::size_t>(components_),
                      std::vector<int>(static_cast<std::size_t>(trees_), 0));
    for (std::uint32_t f = 0; f < nodes; ++f) {
      auto& top = top_level_[static_cast<std::size_t>(component_[f])];
      for (int i = 0; i < trees_; ++i) {
        top[i] = std::max(top[i], level(f, i));
      }
    }
  }

  std::vector<std::uint32_t> ExpansionGraph::moves(std::uint32_t node) const {
    auto digit = [node](int i) { return (node >> (2 * i)) & 3U; };
    auto bump  = [](std::uint32_t f, int i) {
      std::uint32_t const k = (f >> (2 * i)) & 3U;
      std::uint32_t const r = static_cast<std::uint32_t>(QuotientNat::reduce(2, 2, k + 1));
      return (f & ~(3U << (2 * i))) | (r << (2 * i));
    };
    std::vector<std::uint32_t> out;
    for (Move const& m : moves_) {
      bool const ok = m.p == m.q ? digit(m.p) >= 2 : digit(m.p) >= 1 && digit(m.q) >= 1;
      if (ok) {
        out.push_back(bump(bump(node, m.r), m.s));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool ExpansionGraph::is_maximal(std::uint32_t node) const {
    auto const& top = top_level_.at(static_cast<std::size_t>(component_.at(node)));
    for (int i = 0; i < trees_; ++i) {
      if (level(node, i) != top[i]) {
        return false;
      }
    }
    return true;
  }

  std::uint32_t ExpansionGraph::node_of(Thicket const& f) const {
    if (f.n() != n_) {
      throw PreconditionError("thicket over " + std::to_string(f.n())
                              + " generators given to the graph over " + std::to_string(n_));
    }
    auto const&   uni = Universe::get(n_);
    std::uint32_t id  = 0;
    for (auto const& [t, k] : f.terms()) {
      id |= static_cast<std::uint32_t>(k) << (2 * uni.index(t));
    }
    return id;
  }

  Thicket ExpansionGraph::thicket_of(std::uint32_t node) const {
    if (node >= node_count()) {
      throw PreconditionError("node id out of range");
    }
    auto const& uni = Universe::get(n_);
    Thicket     f(n_);
    for (int i = 0; i < trees_; ++i) {
      f.add_term(uni.tree(i), (node >> (2 * i)) & 3U);
    }
    return f;
  }

  ExpansionGraph const& ExpansionGraph::get(int n) {
    if (n < 0) {
      throw PreconditionError("negative generator count");
    }
    if (n > kMaxGraphGenerators) {
      throw CapacityError("the expansion graph is built for n <= 2 only");
    }
    static std::once_flag                  flags[kMaxGraphGenerators + 1];
    static std::unique_ptr<ExpansionGraph> graphs[kMaxGraphGenerators + 1];
    std::call_once(flags[n], [n] { graphs[n].reset(new ExpansionGraph(n)); });
    return *graphs[n];
  }

  bool oracle_equivalent(Thicket const& f, Thicket const& g) {
    if (f.n() != g.n()) {
      throw PreconditionError("thickets over different generator counts");
    }
    auto const& graph = ExpansionGraph::get(f.n());
    return graph.component(graph.node_of(f)) == graph.component(graph.node_of(g));
  }

}  // namespace mirig
