#include "mirig/subsemigroup.hpp"

#include <algorithm>
#include <map>

#include "mirig/error.hpp"

namespace mirig {

  TreeSet close_under_product(int n, TreeSet const& u) {
    auto const&      uni = Universe::get(n);
    TreeSet          s   = u;
    std::vector<int> queue = members(u);
    while (!queue.empty()) {
      int const x = queue.back();
      queue.pop_back();
      for (int y : members(s)) {
        for (int p : {uni.product(x, y), uni.product(y, x)}) {
          if (!s.test(static_cast<std::size_t>(p))) {
            s.set(static_cast<std::size_t>(p));
            queue.push_back(p);
          }
        }
      }
    }
    return s;
  }

  bool is_subsemigroup(int n, TreeSet const& s) {
    auto const& uni = Universe::get(n);
    auto const  ms  = members(s);
    for (int x : ms) {
      for (int y : ms) {
        if (!s.test(static_cast<std::size_t>(uni.product(x, y)))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    TreeSet xy_factor(Universe const& uni, TreeSet const& u, int x, int y) {
      TreeSet out;
      for (int t = 0; t < uni.size(); ++t) {
        if (u.test(static_cast<std::size_t>(uni.product(uni.product(x, t), y)))) {
          out.set(static_cast<std::size_t>(t));
        }
      }
      return out;
    }
  }  // namespace

  TreeSet xy_factor(int n, TreeSet const& u, Tree const& x, Tree const& y) {
    auto const& uni = Universe::get(n);
    return xy_factor(uni, u, uni.index(x), uni.index(y));
  }

  Branch branch(Tree const& t, Side side) {
    if (t.is_leaf()) {
      return Branch{Tree(), std::nullopt};
    }
    if (side == Side::left) {
      return Branch{t.left(), t.left_generator()};
    }
    return Branch{t.right(), t.right_generator()};
  }

  ExtremalPath extremal_path(Branch const& b, Side side) {
    ExtremalPath p = extremal_path(b.tree, side);
    if (b.generator) {
      if (side == Side::left) {
        p.seq.push_back(*b.generator);
      } else {
        p.seq.insert(p.seq.begin(), *b.generator);
      }
    }
    return p;
  }

  std::pair<BranchSet, BranchSet> branch_sets(int n, TreeSet const& s, Alphabet a) {
    auto const&   uni   = Universe::get(n);
    TreeSet const fiber = s & uni.fiber(a);
    if (fiber.none()) {
      throw PreconditionError("branch_sets: no tree of alphabet " + a.to_string());
    }
    BranchSet lb{Side::left, a.size(), {}};
    BranchSet rb{Side::right, a.size(), {}};
    for (int i : members(fiber)) {
      lb.branches.insert(branch(uni.tree(i), Side::left));
      rb.branches.insert(branch(uni.tree(i), Side::right));
    }
    return {lb, rb};
  }

  std::vector<Tree> reconstruct_uniform(BranchSet const& lb, BranchSet const& rb) {
    if (lb.side != Side::left || rb.side != Side::right || lb.height != rb.height) {
      throw PreconditionError("reconstruct_uniform: expects left and right branch sets of equal height");
    }
    std::vector<Tree> out;
    if (lb.height == 0) {
      out.emplace_back();
      return out;
    }
    for (auto const& l : lb.branches) {
      for (auto const& r : rb.branches) {
        out.push_back(Tree::node(l.tree, *l.generator, *r.generator, r.tree));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_replete(int n, TreeSet const& s) {
    if (!is_subsemigroup(n, s)) {
      throw PreconditionError("is_replete: the set is not a subsemigroup");
    }
    auto const& uni = Universe::get(n);
    for (Alphabet a : alphabets_of(n, s).members()) {
      if (a.empty()) {
        continue;
      }
      TreeSet const whole = uni.fiber(a);
      PathMask      left  = 0;
      PathMask      right = 0;
      for (int i : members(s & whole)) {
        left |= PathMask{1} << uni.lmp(i);
        right |= PathMask{1} << uni.rmp(i);
      }
      for (int i : members(whole)) {
        if (((left >> uni.lmp(i)) & 1U) && ((right >> uni.rmp(i)) & 1U)
            && !s.test(static_cast<std::size_t>(i))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_replete_by_definition(int n, TreeSet const& s) {
    auto const& uni = Universe::get(n);
    for (int x = 0; x < uni.size(); ++x) {
      for (int y = 0; y < uni.size(); ++y) {
        if (!is_subsemigroup(n, xy_factor(uni, s, x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  RepleteSubsemigroup::RepleteSubsemigroup(int n, AlphabetFamily alphabets,
                                           PathMask left, PathMask right)
      : n_(n), alphabets_(alphabets), left_(left), right_(right) {
    if (n < 0 || n > kMaxTreeSetN) {
      throw CapacityError("replete subsemigroups are represented for n <= "
                          + std::to_string(kMaxTreeSetN));
    }
    auto const& pu = PathUniverse::get(n);
    if (pu.size() < 64 && ((left | right) >> pu.size()) != 0) {
      throw PreconditionError("path index out of range");
    }
    for (Alphabet a : alphabets.members()) {
      if (!a.subset_of(Alphabet::full(n))) {
        throw PreconditionError("alphabet " + a.to_string() + " is not over "
                                + std::to_string(n) + " generators");
      }
    }
    if (!alphabets.union_closed()) {
      throw PreconditionError("the alphabet family is not closed under union");
    }
    if (!pu.is_closed(Side::left, left) || !pu.is_closed(Side::right, right)) {
      throw PreconditionError("the path sets are not closed under the path operations");
    }
    AlphabetFamily nonempty = alphabets;
    nonempty.erase(Alphabet());
    if (pu.support_family(left) != nonempty || pu.support_family(right) != nonempty) {
      throw PreconditionError("path supports do not match the alphabet family");
    }
  }

  RepleteSubsemigroup RepleteSubsemigroup::from_trees(int n, TreeSet const& s) {
    if (!is_replete(n, s)) {
      throw PreconditionError("the set is not a replete subsemigroup");
    }
    auto const& uni   = Universe::get(n);
    PathMask    left  = 0;
    PathMask    right = 0;
    for (int i : members(s)) {
      if (uni.lmp(i) >= 0) {
        left |= PathMask{1} << uni.lmp(i);
        right |= PathMask{1} << uni.rmp(i);
      }
    }
    return RepleteSubsemigroup(n, alphabets_of(n, s), left, right);
  }

  std::vector<ExtremalPath> RepleteSubsemigroup::left_paths() const {
    return PathUniverse::get(n_).paths(left_, Side::left);
  }

  std::vector<ExtremalPath> RepleteSubsemigroup::right_paths() const {
    return PathUniverse::get(n_).paths(right_, Side::right);
  }

  TreeSet RepleteSubsemigroup::expand() const {
    auto const& uni = Universe::get(n_);
    TreeSet     s;
    for (int i = 0; i < uni.size(); ++i) {
      if (!alphabets_.contains(uni.alphabet(i))) {
        continue;
      }
      if (uni.lmp(i) < 0
          || (((left_ >> uni.lmp(i)) & 1U) && ((right_ >> uni.rmp(i)) & 1U))) {
        s.set(static_cast<std::size_t>(i));
      }
    }
    return s;
  }

  RepleteSubsemigroup replete_closure(int n, TreeSet const& u) {
    auto const&   uni   = Universe::get(n);
    auto const&   pu    = PathUniverse::get(n);
    TreeSet const s     = close_under_product(n, u);
    PathMask      left  = 0;
    PathMask      right = 0;
    for (int i : members(s)) {
      if (uni.lmp(i) >= 0) {
        left |= PathMask{1} << uni.lmp(i);
        right |= PathMask{1} << uni.rmp(i);
      }
    }
    return RepleteSubsemigroup(n, alphabets_of(n, s), pu.closure(Side::left, left),
                               pu.closure(Side::right, right));
  }

  TreeSet replete_closure_set(int n, TreeSet const& u) {
    return replete_closure(n, u).expand();
  }

  namespace {
    constexpr int kMaxClosedFormK = 20;
  }

  BigInt path_class_size(int k) {
    if (k < 0 || k > kMaxClosedFormK) {
      throw CapacityError("path_class_size: k must lie in 0.." + std::to_string(kMaxClosedFormK));
    }
    BigInt c = 1;
    for (int j = 1; j <= k - 1; ++j) {
      c *= boost::multiprecision::pow(BigInt(j), (1U << (k - j)) - 1);
    }
    return c;
  }

  PathClass path_class(ExtremalPath const& p) {
    if (p.support().size() != p.length()) {
      throw PreconditionError("path " + to_string(p) + " repeats a generator");
    }
    PathClass out;
    out.count = path_class_size(p.length());
    if (p.seq.empty()) {
      out.branches.push_back(Branch{Tree(), std::nullopt});
      return out;
    }
    Generator const g    = p.side == Side::right ? p.seq.front() : p.seq.back();
    auto const      rest = p.side == Side::right
                               ? std::vector<Generator>(p.seq.begin() + 1, p.seq.end())
                               : std::vector<Generator>(p.seq.begin(), p.seq.end() - 1);
    for (Tree const& t : enumerate_trees(p.support().without(g))) {
      if (extremal_path(t, p.side).seq == rest) {
        out.branches.push_back(Branch{t, g});
      }
    }
    return out;
  }

  std::vector<RepleteSubsemigroup> enumerate_replete(int n) {
    if (n < 0 || n > kMaxTreeSetN) {
      throw CapacityError("enumerate_replete: supported for n <= "
                          + std::to_string(kMaxTreeSetN));
    }
    auto const& pu = PathUniverse::get(n);
    std::map<std::uint64_t, std::vector<PathMask>> lefts;
    std::map<std::uint64_t, std::vector<PathMask>> rights;
    PathMask const                                 end = PathMask{1} << pu.size();
    for (PathMask m = 0; m < end; ++m) {
      if (pu.is_closed(Side::left, m)) {
        lefts[pu.support_family(m).mask()].push_back(m);
      }
      if (pu.is_closed(Side::right, m)) {
        rights[pu.support_family(m).mask()].push_back(m);
      }
    }
    std::vector<RepleteSubsemigroup> out;
    for (auto const& [family, rs] : rights) {
      auto it = lefts.find(family);
      if (it == lefts.end()) {
        continue;
      }
      for (bool identity : {false, true}) {
        AlphabetFamily f(family);
        if (identity) {
          f.insert(Alphabet());
        }
        for (PathMask l : it->second) {
          for (PathMask r : rs) {
            out.emplace_back(n, f, l, r);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {
    constexpr int kMaxUniformN = 5;
  }

  BigInt count_uniform_of_height(int k) {
    if (k < 0) {
      throw PreconditionError("count_uniform_of_height: negative height");
    }
    if (k > kMaxUniformN) {
      throw CapacityError("count_uniform_of_height: heights above "
                          + std::to_string(kMaxUniformN) + " are not evaluated");
    }
    if (k == 0) {
      return 1;
    }
    // b = k * c_{k-1} right branches; (2^b - 1)^2 = 2^{2b} - 2^{b+1} + 1
    auto const b = static_cast<unsigned>(k * count_trees_of_height(k - 1));
    BigInt     r = BigInt(1) << (2 * b);
    r -= BigInt(1) << (b + 1);
    return r + 1;
  }

  BigInt count_uniform(int n) {
    if (n < 0) {
      throw PreconditionError("count_uniform: negative generator count");
    }
    if (n > kMaxUniformN) {
      throw CapacityError("count_uniform: evaluated for n <= " + std::to_string(kMaxUniformN));
    }
    BigInt total    = 0;
    BigInt binomial = 1;
    for (int k = 0; k <= n; ++k) {
      total += binomial * count_uniform_of_height(k);
      binomial = binomial * (n - k) / (k + 1);
    }
    return total;
  }

  BigInt count_replete_bounded_height(int n, int h) {
    if (n < 0) {
      throw PreconditionError("count_replete_bounded_height: negative generator count");
    }
    BigInt const bn = n;
    if (h == 2) {
      return 18 * bn * bn - 16 * bn + 2;
    }
    if (h == 3) {
      BigInt const c2 = bn * (bn - 1) / 2;
      BigInt const c3 = bn * (bn - 1) * (bn - 2) / 6;
      return 2 * (1 + bn + 18 * c2 + 8957 * c3);
    }
    throw PreconditionError("count_replete_bounded_height: h must be 2 or 3");
  }

  std::vector<PathMask> height3_replete_branch_sets() {
    auto const&    pu   = PathUniverse::get(3);
    PathMask const full = pu.with_support(Alphabet::full(3));
    std::vector<PathMask> out;
    // iterate the non-empty submasks of full in increasing order
    for (PathMask m = full & (~full + 1); m != 0; m = (m - full) & full) {
      if (pu.is_closed(Side::right, m)) {
        out.push_back(m);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace mirig
