#include "mirig/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "mirig/error.hpp"

namespace mirig {

  struct Tree::Node {
    Tree        left;
    Tree        right;
    Generator   a0;
    Generator   a1;
    Alphabet    alphabet;
    std::size_t hash;
  };

  namespace {
    std::size_t mix(std::size_t h, std::size_t v) noexcept {
      return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
  }  // namespace

  Tree Tree::node(Tree left, Generator a0, Generator a1, Tree right) {
    Alphabet const la = left.alphabet();
    Alphabet const ra = right.alphabet();
    if (la.contains(a0) || ra.contains(a1) || la.with(a0) != ra.with(a1)) {
      throw PreconditionError("tree invariant violated: alpha(left)+{"
                              + std::string(1, letter(a0)) + "} != {"
                              + std::string(1, letter(a1)) + "}+alpha(right)");
    }
    return detail::make_node(std::move(left), a0, a1, std::move(right));
  }

  // Trusted construction; callers guarantee the invariants.
  Tree detail::make_node(Tree left, Generator a0, Generator a1, Tree right) {
    Alphabet const a = left.alphabet().with(a0);
    std::size_t    h = mix(left.hash(), a0);
    h                = mix(h, a1 + 64);
    h                = mix(h, right.hash());
    Tree t;
    t.node_ = std::make_shared<Tree::Node const>(
        Tree::Node{std::move(left), std::move(right), a0, a1, a, h});
    return t;
  }

  Tree Tree::generator(Generator a) {
    return detail::make_node(Tree(), a, a, Tree());
  }

  Tree const& Tree::left() const {
    if (!node_) {
      throw PreconditionError("the leaf has no left subtree");
    }
    return node_->left;
  }

  Tree const& Tree::right() const {
    if (!node_) {
      throw PreconditionError("the leaf has no right subtree");
    }
    return node_->right;
  }

  Generator Tree::left_generator() const {
    if (!node_) {
      throw PreconditionError("the leaf has no generators");
    }
    return node_->a0;
  }

  Generator Tree::right_generator() const {
    if (!node_) {
      throw PreconditionError("the leaf has no generators");
    }
    return node_->a1;
  }

  Alphabet Tree::alphabet() const noexcept {
    return node_ ? node_->alphabet : Alphabet();
  }

  std::size_t Tree::hash() const noexcept {
    return node_ ? node_->hash : 0x51ed27;
  }

  bool operator==(Tree const& x, Tree const& y) noexcept {
    if (x.node_ == y.node_) {
      return true;
    }
    if (!x.node_ || !y.node_ || x.node_->hash != y.node_->hash) {
      return false;
    }
    return x.node_->a0 == y.node_->a0 && x.node_->a1 == y.node_->a1
           && x.node_->left == y.node_->left && x.node_->right == y.node_->right;
  }

  std::strong_ordering operator<=>(Tree const& x, Tree const& y) noexcept {
    if (x.node_ == y.node_) {
      return std::strong_ordering::equal;
    }
    if (auto c = x.alphabet().bits() <=> y.alphabet().bits(); c != 0) {
      return c;
    }
    // equal non-empty alphabets, so both are nodes
    auto const& xn = *x.node_;
    auto const& yn = *y.node_;
    if (auto c = xn.left <=> yn.left; c != 0) {
      return c;
    }
    if (auto c = xn.a0 <=> yn.a0; c != 0) {
      return c;
    }
    if (auto c = xn.a1 <=> yn.a1; c != 0) {
      return c;
    }
    return xn.right <=> yn.right;
  }

  Tree tree_of_word(Word const& w) {
    if (w.empty()) {
      return Tree();
    }
    GrfDecomposition d = grf(w);
    return detail::make_node(tree_of_word(d.prefix),
                             d.prefix_missing,
                             d.suffix_missing,
                             tree_of_word(d.suffix));
  }

  namespace {
    void append_word(Tree const& t, Word& out) {
      if (t.is_leaf()) {
        return;
      }
      append_word(t.left(), out);
      out.push_back(t.left_generator());
      out.push_back(t.right_generator());
      append_word(t.right(), out);
    }
  }  // namespace

  Word word_of_tree(Tree const& t) {
    Word w;
    append_word(t, w);
    return w;
  }

  bool words_equivalent(Word const& w1, Word const& w2) {
    return tree_of_word(w1) == tree_of_word(w2);
  }

  Tree tree_product(Tree const& s, Tree const& t) {
    if (s.is_leaf()) {
      return t;
    }
    if (t.is_leaf()) {
      return s;
    }
    Alphabet const sa = s.alphabet();
    Alphabet const ta = t.alphabet();

    // Left branch: walk down t's left spine past generators already in s.
    Tree      new_left;
    Generator a0 = 0;
    for (Tree const* cur = &t;; cur = &cur->left()) {
      if (cur->is_leaf()) {
        new_left = s.left();
        a0       = s.left_generator();
        break;
      }
      if (!sa.contains(cur->left_generator())) {
        new_left = tree_product(s, cur->left());
        a0       = cur->left_generator();
        break;
      }
    }
    // Right branch, dually along s's right spine.
    Tree      new_right;
    Generator a1 = 0;
    for (Tree const* cur = &s;; cur = &cur->right()) {
      if (cur->is_leaf()) {
        new_right = t.right();
        a1        = t.right_generator();
        break;
      }
      if (!ta.contains(cur->right_generator())) {
        new_right = tree_product(cur->right(), t);
        a1        = cur->right_generator();
        break;
      }
    }
    return detail::make_node(std::move(new_left), a0, a1, std::move(new_right));
  }

  bool is_left_factor(Tree const& s, Tree const& t) {
    return s * t == t;
  }

  bool is_right_factor(Tree const& s, Tree const& t) {
    return t * s == t;
  }

  Tree reversed(Tree const& t) {
    if (t.is_leaf()) {
      return t;
    }
    return detail::make_node(reversed(t.right()),
                             t.right_generator(),
                             t.left_generator(),
                             reversed(t.left()));
  }

  namespace {
    std::vector<Tree> const& trees_on(Alphabet a,
                                      std::map<std::uint32_t, std::vector<Tree>>& memo) {
      if (auto it = memo.find(a.bits()); it != memo.end()) {
        return it->second;
      }
      std::vector<Tree> out;
      if (a.empty()) {
        out.emplace_back();
      } else {
        for (Generator a0 : a.members()) {
          for (Generator a1 : a.members()) {
            // copies: the memo may rehash while recursing
            std::vector<Tree> const lefts  = trees_on(a.without(a0), memo);
            std::vector<Tree> const rights = trees_on(a.without(a1), memo);
            for (Tree const& l : lefts) {
              for (Tree const& r : rights) {
                out.push_back(detail::make_node(l, a0, a1, r));
              }
            }
          }
        }
        std::sort(out.begin(), out.end());
      }
      return memo.emplace(a.bits(), std::move(out)).first->second;
    }
  }  // namespace

  std::vector<Tree> enumerate_trees(Alphabet a) {
    if (a.size() > kMaxEnumerableHeight) {
      throw CapacityError("enumerate_trees: alphabets of more than "
                          + std::to_string(kMaxEnumerableHeight)
                          + " generators are not enumerated");
    }
    std::map<std::uint32_t, std::vector<Tree>> memo;
    return trees_on(a, memo);
  }

  namespace {
    constexpr int kMaxCountedGenerators = 20;
  }

  BigInt count_trees_of_height(int k) {
    if (k < 0) {
      throw PreconditionError("count_trees_of_height: negative height");
    }
    if (k > kMaxCountedGenerators) {
      throw CapacityError("count_trees_of_height: heights above "
                          + std::to_string(kMaxCountedGenerators) + " are not evaluated");
    }
    // c_k = prod_{i=1}^{k} (k-i+1)^(2^i)
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
      c *= boost::multiprecision::pow(BigInt(k - i + 1), 1U << i);
    }
    return c;
  }

  BigInt count_free_monoid(int n) {
    if (n < 0) {
      throw PreconditionError("count_free_monoid: negative generator count");
    }
    BigInt total    = 0;
    BigInt binomial = 1;  // C(n, k)
    for (int k = 0; k <= n; ++k) {
      total += binomial * count_trees_of_height(k);
      binomial = binomial * (n - k) / (k + 1);
    }
    return total;
  }

  Word shortest_word(Tree const& t) {
    Alphabet const a = t.alphabet();
    if (a.size() > kMaxEnumerableHeight) {
      throw CapacityError("shortest_word: trees of height above "
                          + std::to_string(kMaxEnumerableHeight) + " are not searched");
    }
    // Breadth-first over the submonoid on alpha(t), appending letters in
    // increasing order; the first visit is the shortlex-least word.
    std::vector<Generator> const letters = a.members();
    std::vector<Tree>            gens;
    for (Generator g : letters) {
      gens.push_back(Tree::generator(g));
    }
    std::unordered_map<Tree, Word> seen;
    std::deque<Tree>               queue;
    seen.emplace(Tree(), Word{});
    queue.push_back(Tree());
    while (!queue.empty()) {
      Tree const u = queue.front();
      queue.pop_front();
      if (u == t) {
        return seen.at(u);
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Tree v = u * gens[i];
        if (!seen.contains(v)) {
          Word w = seen.at(u);
          w.push_back(letters[i]);
          seen.emplace(v, std::move(w));
          queue.push_back(std::move(v));
        }
      }
    }
    throw Error("shortest_word: tree not reached");  // unreachable
  }

  std::string to_sexpr(Tree const& t) {
    if (t.is_leaf()) {
      return "()";
    }
    std::string s = "(";
    s += to_sexpr(t.left());
    s += ' ';
    s += letter(t.left_generator());
    s += ' ';
    s += letter(t.right_generator());
    s += ' ';
    s += to_sexpr(t.right());
    s += ')';
    return s;
  }

  namespace {
    class SexprParser {
     public:
      explicit SexprParser(std::string_view text) : text_(text) {}

      Tree parse_all() {
        Tree t = parse();
        skip_space();
        if (pos_ != text_.size()) {
          throw ParseError("trailing characters after tree", pos_);
        }
        return t;
      }

     private:
      void skip_space() {
        while (pos_ < text_.size()
               && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n'
                   || text_[pos_] == '\r')) {
          ++pos_;
        }
      }

      void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
          throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
      }

      bool peek_letter() {
        skip_space();
        return pos_ < text_.size() && is_generator_letter(text_[pos_]);
      }

      Generator parse_generator() {
        if (!peek_letter()) {
          throw ParseError("expected a generator letter", pos_);
        }
        return static_cast<Generator>(text_[pos_++] - 'a');
      }

      Tree parse() {
        skip_space();
        std::size_t const start = pos_;
        expect('(');
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          return Tree();
        }
        if (peek_letter()) {
          Generator g = parse_generator();
          expect(')');
          return Tree::generator(g);
        }
        Tree      left  = parse();
        Generator a0    = parse_generator();
        Generator a1    = parse_generator();
        Tree      right = parse();
        expect(')');
        try {
          return Tree::node(std::move(left), a0, a1, std::move(right));
        } catch (PreconditionError const& e) {
          throw ParseError(e.what(), start);
        }
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  Tree parse_tree(std::string_view text) {
    return SexprParser(text).parse_all();
  }

}  // namespace mirig
