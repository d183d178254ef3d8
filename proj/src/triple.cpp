#include "mirig/triple.hpp"

#include <algorithm>

#include "mirig/error.hpp"

namespace mirig {

  namespace {
    TreeSet products(Universe const& uni, TreeSet const& x, TreeSet const& y) {
      TreeSet out;
      auto const ys = members(y);
      for (int i : members(x)) {
        for (int j : ys) {
          out.set(static_cast<std::size_t>(uni.product(i, j)));
        }
      }
      return out;
    }

    // trees of x whose alphabet is contained in a
    TreeSet below(Universe const& uni, TreeSet const& x, Alphabet a) {
      TreeSet out;
      for (int i : members(x)) {
        if (uni.alphabet(i).subset_of(a)) {
          out.set(static_cast<std::size_t>(i));
        }
      }
      return out;
    }

    void check_same(ComplementaryTriple const& x, ComplementaryTriple const& y) {
      if (x.n() != y.n()) {
        throw PreconditionError("triples over different generator counts ("
                                + std::to_string(x.n()) + " and " + std::to_string(y.n()) + ")");
      }
    }

    std::string words_of(Universe const& uni, TreeSet const& s) {
      std::string out = "{";
      bool        first = true;
      for (int i : members(s)) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += uni.tree(i).is_leaf() ? std::string("1") : to_string(shortest_word(uni.tree(i)));
      }
      return out + "}";
    }
  }  // namespace

  bool is_sparse(int n, TreeSet const& d) {
    auto const& uni = Universe::get(n);
    auto const  ds  = members(d);
    for (int i : ds) {
      for (int j : ds) {
        if (i != j && uni.alphabet(i).subset_of(uni.alphabet(j))) {
          return false;
        }
      }
    }
    return true;
  }

  bool dominates(int n, TreeSet const& s, TreeSet const& d) {
    AlphabetFamily const fs = alphabets_of(n, s);
    AlphabetFamily const fd = alphabets_of(n, d);
    if (!(fs & fd).empty() || !is_subsemigroup(n, s | d)) {
      return false;
    }
    AlphabetFamily const all = fs | fd;
    for (Alphabet a : fd.members()) {
      if (!all.is_minimal(a)) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::string> triple_violation(int n, TreeSet const& s, TreeSet const& d,
                                              AlphabetFamily odd) {
    if (!is_subsemigroup(n, s)) {
      return "S is not a subsemigroup";
    }
    if (!is_replete(n, s)) {
      return "S is not replete";
    }
    if (!is_sparse(n, d)) {
      return "D is not sparse";
    }
    if (!dominates(n, s, d)) {
      return "S does not dominate D";
    }
    AlphabetFamily const fd = alphabets_of(n, d);
    if ((fd & odd) != fd) {
      return "the parity function is not 1 on the alphabets of D";
    }
    if ((odd & (alphabets_of(n, s) | fd)) != odd) {
      return "the parity function is 1 outside the alphabets of S and D";
    }
    return std::nullopt;
  }

  ComplementaryTriple::ComplementaryTriple(int n, TreeSet s, TreeSet d, AlphabetFamily odd)
      : n_(n), s_(s), d_(d), odd_(odd) {
    if (auto why = triple_violation(n, s, d, odd)) {
      throw PreconditionError("invalid complementary triple: " + *why);
    }
  }

  ComplementaryTriple ComplementaryTriple::zero(int n) {
    Universe::get(n);
    ComplementaryTriple c;
    c.n_ = n;
    return c;
  }

  ComplementaryTriple ComplementaryTriple::one(int n) {
    auto const&    uni = Universe::get(n);
    TreeSet        d;
    d.set(static_cast<std::size_t>(uni.index(Tree())));
    AlphabetFamily odd;
    odd.insert(Alphabet());
    return ComplementaryTriple(n, TreeSet(), d, odd);
  }

  ComplementaryTriple ComplementaryTriple::gen(int n, Generator g) {
    if (g >= n) {
      throw PreconditionError("generator " + std::string(1, letter(g)) + " out of range for n="
                              + std::to_string(n));
    }
    auto const&    uni = Universe::get(n);
    TreeSet        d;
    d.set(static_cast<std::size_t>(uni.index(Tree::generator(g))));
    AlphabetFamily odd;
    odd.insert(Alphabet::singleton(g));
    return ComplementaryTriple(n, TreeSet(), d, odd);
  }

  bool operator<(ComplementaryTriple const& x, ComplementaryTriple const& y) {
    if (x.n_ != y.n_) {
      return x.n_ < y.n_;
    }
    for (auto [a, b] : {std::pair{&x.s_, &y.s_}, std::pair{&x.d_, &y.d_}}) {
      TreeSet const diff = *a ^ *b;
      if (diff.any()) {
        return b->test(diff._Find_first());
      }
    }
    return x.odd_ < y.odd_;
  }

  TreeSet dominating_closure(int n, TreeSet const& u, TreeSet const& d) {
    auto const& uni = Universe::get(n);
    TreeSet     s   = u;
    while (true) {
      s                 = replete_closure_set(n, s);
      TreeSet const all = s | d;
      TreeSet const x   = products(uni, all, all) & ~all;
      if (x.none()) {
        return s;
      }
      s |= x;
    }
  }

  ComplementaryTriple operator+(ComplementaryTriple const& x, ComplementaryTriple const& y) {
    check_same(x, y);
    int const   n   = x.n();
    auto const& uni = Universe::get(n);
    TreeSet const xs = x.s() | x.d();
    TreeSet const ys = y.s() | y.d();

    TreeSet e;
    for (auto [d, other] : {std::pair{&x.d(), &ys}, std::pair{&y.d(), &xs}}) {
      for (int t : members(*d)) {
        if (below(uni, *other, uni.alphabet(t)).none()) {
          e.set(static_cast<std::size_t>(t));
        }
      }
    }
    TreeSet const u = (xs | ys) & ~e;
    return ComplementaryTriple(n, dominating_closure(n, u, e), e,
                               AlphabetFamily(x.odd().mask() ^ y.odd().mask()));
  }

  ComplementaryTriple operator*(ComplementaryTriple const& x, ComplementaryTriple const& y) {
    check_same(x, y);
    int const   n   = x.n();
    auto const& uni = Universe::get(n);
    TreeSet const xs = x.s() | x.d();
    TreeSet const ys = y.s() | y.d();

    // tt' survives as a straggler iff t and t' are the only trees of their
    // factors whose alphabets lie inside alpha(tt')
    TreeSet b;
    for (int t : members(x.d())) {
      for (int tp : members(y.d())) {
        int const      p = uni.product(t, tp);
        Alphabet const a = uni.alphabet(p);
        if (below(uni, xs, a).count() == 1 && below(uni, ys, a).count() == 1) {
          b.set(static_cast<std::size_t>(p));
        }
      }
    }
    TreeSet const u = products(uni, xs, ys) & ~b;

    std::uint64_t odd = 0;
    for (Alphabet a1 : x.odd().members()) {
      for (Alphabet a2 : y.odd().members()) {
        odd ^= std::uint64_t{1} << (a1 | a2).bits();
      }
    }
    return ComplementaryTriple(n, dominating_closure(n, u, b), b, AlphabetFamily(odd));
  }

  ComplementaryTriple normalize_thicket(Thicket const& f) {
    int const   n   = f.n();
    auto const& uni = Universe::get(n);
    TreeSet     supp;
    std::uint64_t odd = 0;
    for (auto const& [t, k] : f.terms()) {
      supp.set(static_cast<std::size_t>(uni.index(t)));
      if (k % 2 == 1) {
        odd ^= std::uint64_t{1} << t.alphabet().bits();
      }
    }
    TreeSet d;
    for (auto const& [t, k] : f.terms()) {
      if (k != 1) {
        continue;
      }
      int const i = uni.index(t);
      if (below(uni, supp, t.alphabet()).count() == 1) {
        d.set(static_cast<std::size_t>(i));
      }
    }
    return ComplementaryTriple(n, dominating_closure(n, supp & ~d, d), d, AlphabetFamily(odd));
  }

  Thicket canonical_thicket(ComplementaryTriple const& c) {
    auto const& uni = Universe::get(c.n());
    Thicket     f(c.n());
    for (int i : members(c.d())) {
      f.add_term(uni.tree(i), 1);
    }
    AlphabetFamily bumped;
    for (int i : members(c.s())) {
      Alphabet const a    = uni.alphabet(i);
      bool const     bump = c.parity(a) == 1 && !bumped.contains(a);
      if (bump) {
        bumped.insert(a);
      }
      f.add_term(uni.tree(i), bump ? 3 : 2);
    }
    return f;
  }

  std::vector<TreeSet> dominated_sets(int n, TreeSet const& s) {
    auto const&          uni = Universe::get(n);
    AlphabetFamily const fs  = alphabets_of(n, s);

    std::vector<int> cand;
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
      Alphabet const a(bits);
      bool           blocked = false;
      for (Alphabet b : fs.members()) {
        blocked = blocked || b.subset_of(a);
      }
      if (blocked) {
        continue;
      }
      for (int t : members(uni.fiber(a))) {
        bool ok = true;
        for (int x : members(s)) {
          ok = ok && s.test(static_cast<std::size_t>(uni.product(t, x)))
               && s.test(static_cast<std::size_t>(uni.product(x, t)));
          if (!ok) {
            break;
          }
        }
        if (ok) {
          cand.push_back(t);
        }
      }
    }

    std::vector<TreeSet> out;
    TreeSet              chosen;
    auto compatible = [&](int t) {
      for (int c : members(chosen)) {
        Alphabet const a = uni.alphabet(c);
        Alphabet const b = uni.alphabet(t);
        if (a.subset_of(b) || b.subset_of(a)
            || !s.test(static_cast<std::size_t>(uni.product(t, c)))
            || !s.test(static_cast<std::size_t>(uni.product(c, t)))) {
          return false;
        }
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == cand.size()) {
        out.push_back(chosen);
        return;
      }
      self(self, i + 1);
      int const t = cand[i];
      if (compatible(t)) {
        chosen.set(static_cast<std::size_t>(t));
        self(self, i + 1);
        chosen.reset(static_cast<std::size_t>(t));
      }
    };
    rec(rec, 0);
    return out;
  }

  std::vector<ComplementaryTriple> enumerate_triples(int n) {
    std::vector<ComplementaryTriple> out;
    for (auto const& r : enumerate_replete(n)) {
      TreeSet const s    = r.expand();
      auto const    free = alphabets_of(n, s).members();
      for (TreeSet const& d : dominated_sets(n, s)) {
        std::uint64_t const forced = alphabets_of(n, d).mask();
        for (std::uint32_t m = 0; m < (1U << free.size()); ++m) {
          std::uint64_t odd = forced;
          for (std::size_t i = 0; i < free.size(); ++i) {
            if ((m >> i) & 1U) {
              odd |= std::uint64_t{1} << free[i].bits();
            }
          }
          out.emplace_back(n, s, d, AlphabetFamily(odd));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  TripleSampler::TripleSampler(int n) : n_(n), replete_(enumerate_replete(n)) {}

  ComplementaryTriple TripleSampler::operator()(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick_s(0, replete_.size() - 1);
    TreeSet const s  = replete_[pick_s(rng)].expand();
    auto const    ds = dominated_sets(n_, s);
    std::uniform_int_distribution<std::size_t> pick_d(0, ds.size() - 1);
    TreeSet const d   = ds[pick_d(rng)];
    std::uint64_t odd = alphabets_of(n_, d).mask();
    std::bernoulli_distribution coin(0.5);
    for (Alphabet a : alphabets_of(n_, s).members()) {
      if (coin(rng)) {
        odd |= std::uint64_t{1} << a.bits();
      }
    }
    return ComplementaryTriple(n_, s, d, AlphabetFamily(odd));
  }

  std::string to_string(ComplementaryTriple const& c) {
    auto const& uni = Universe::get(c.n());
    std::string p   = "{";
    bool        first = true;
    for (Alphabet a : c.odd().members()) {
      if (!first) {
        p += ',';
      }
      first = false;
      p += a.to_string();
    }
    p += "}";
    return "S=" + words_of(uni, c.s()) + " D=" + words_of(uni, c.d()) + " p=" + p;
  }

}  // namespace mirig
