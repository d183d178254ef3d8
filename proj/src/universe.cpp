#include "mirig/universe.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>

#include "mirig/error.hpp"
#include "mirig/paths.hpp"

namespace mirig {

  Universe::Universe(int n) : n_(n) {
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
      auto ts = enumerate_trees(Alphabet(bits));
      trees_.insert(trees_.end(), ts.begin(), ts.end());
    }
    std::sort(trees_.begin(), trees_.end());

    auto const  sz = trees_.size();
    auto const& pu = PathUniverse::get(n);
    table_.resize(sz * sz);
    for (std::size_t i = 0; i < sz; ++i) {
      alphabets_.push_back(trees_[i].alphabet());
      if (trees_[i].is_leaf()) {
        lmp_.push_back(-1);
        rmp_.push_back(-1);
      } else {
        lmp_.push_back(pu.index(mirig::lmp(trees_[i]).seq));
        rmp_.push_back(pu.index(mirig::rmp(trees_[i]).seq));
      }
      for (std::size_t j = 0; j < sz; ++j) {
        table_[i * sz + j] = static_cast<std::uint8_t>(index(trees_[i] * trees_[j]));
      }
    }
  }

  Universe const& Universe::get(int n) {
    if (n < 0 || n > kMaxTreeSetN) {
      throw CapacityError("explicit tree sets are supported for n <= "
                          + std::to_string(kMaxTreeSetN));
    }
    static std::array<std::unique_ptr<Universe>, kMaxTreeSetN + 1> cache;
    static std::mutex                                               mtx;
    std::lock_guard<std::mutex>                                     lock(mtx);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) {
      slot.reset(new Universe(n));
    }
    return *slot;
  }

  int Universe::index(Tree const& t) const {
    auto it = std::lower_bound(trees_.begin(), trees_.end(), t);
    if (it == trees_.end() || *it != t) {
      throw PreconditionError("tree " + to_sexpr(t) + " is not over "
                              + std::to_string(n_) + " generators");
    }
    return static_cast<int>(it - trees_.begin());
  }

  TreeSet Universe::fiber(Alphabet a) const {
    TreeSet s;
    for (std::size_t i = 0; i < trees_.size(); ++i) {
      if (alphabets_[i] == a) {
        s.set(i);
      }
    }
    return s;
  }

  TreeSet Universe::all() const {
    TreeSet s;
    for (std::size_t i = 0; i < trees_.size(); ++i) {
      s.set(i);
    }
    return s;
  }

  TreeSet Universe::set_of(std::vector<Tree> const& ts) const {
    TreeSet s;
    for (auto const& t : ts) {
      s.set(static_cast<std::size_t>(index(t)));
    }
    return s;
  }

  std::vector<Tree> Universe::trees_of(TreeSet const& s) const {
    std::vector<Tree> out;
    for (int i : members(s)) {
      out.push_back(tree(i));
    }
    return out;
  }

  std::vector<int> members(TreeSet const& s) {
    std::vector<int> out;
    for (std::size_t i = s._Find_first(); i < s.size(); i = s._Find_next(i)) {
      out.push_back(static_cast<int>(i));
    }
    return out;
  }

  AlphabetFamily alphabets_of(int n, TreeSet const& s) {
    auto const&    u = Universe::get(n);
    AlphabetFamily f;
    for (int i : members(s)) {
      f.insert(u.alphabet(i));
    }
    return f;
  }

}  // namespace mirig
