#include "mirig/paths.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "mirig/error.hpp"

namespace mirig {

  Alphabet ExtremalPath::support() const {
    Alphabet a;
    for (Generator g : seq) {
      a = a.with(g);
    }
    return a;
  }

  ExtremalPath extremal_path(Tree const& t, Side side) {
    ExtremalPath p{side, {}};
    if (side == Side::right) {
      for (Tree const* cur = &t; !cur->is_leaf(); cur = &cur->right()) {
        p.seq.push_back(cur->right_generator());
      }
    } else {
      for (Tree const* cur = &t; !cur->is_leaf(); cur = &cur->left()) {
        p.seq.push_back(cur->left_generator());
      }
      std::reverse(p.seq.begin(), p.seq.end());
    }
    return p;
  }

  namespace {
    void require_distinct(ExtremalPath const& p) {
      if (p.support().size() != p.length()) {
        throw PreconditionError("path " + to_string(p) + " repeats a generator");
      }
    }
  }  // namespace

  ExtremalPath path_star(ExtremalPath const& x, ExtremalPath const& y,
                         std::optional<int> j) {
    if (x.side != y.side) {
      throw PreconditionError("path_star: paths on different sides");
    }
    require_distinct(x);
    require_distinct(y);
    int const jj = j.value_or(1);
    if (jj < 1) {
      throw PreconditionError("path_star: j must be at least 1");
    }
    auto const drop = static_cast<std::size_t>(jj - 1);

    ExtremalPath out{x.side, {}};
    if (x.side == Side::right) {
      std::vector<Generator> tail;
      if (drop < y.seq.size()) {
        tail.assign(y.seq.begin() + static_cast<std::ptrdiff_t>(drop), y.seq.end());
      }
      Alphabet const ta = ExtremalPath{Side::right, tail}.support();
      for (Generator g : x.seq) {
        if (!ta.contains(g)) {
          out.seq.push_back(g);
        }
      }
      out.seq.insert(out.seq.end(), tail.begin(), tail.end());
    } else {
      if (drop < x.seq.size()) {
        out.seq.assign(x.seq.begin(), x.seq.end() - static_cast<std::ptrdiff_t>(drop));
      }
      Alphabet const pa = out.support();
      for (Generator g : y.seq) {
        if (!pa.contains(g)) {
          out.seq.push_back(g);
        }
      }
    }
    return out;
  }

  std::string to_string(ExtremalPath const& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.seq.size(); ++i) {
      if (i != 0) {
        s += ',';
      }
      s += letter(p.seq[i]);
    }
    return s + ")";
  }

  ExtremalPath parse_path(std::string_view text, Side side) {
    ExtremalPath p{side, {}};
    std::size_t  i = 0;
    if (text.empty() || text[0] != '(') {
      throw ParseError("expected '('", 0);
    }
    ++i;
    if (i < text.size() && text[i] == ')') {
      ++i;
    } else {
      while (true) {
        if (i >= text.size() || !is_generator_letter(text[i])) {
          throw ParseError("expected a generator letter", i);
        }
        p.seq.push_back(static_cast<Generator>(text[i] - 'a'));
        ++i;
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("expected ',' or ')'", i);
      }
    }
    if (i != text.size()) {
      throw ParseError("trailing characters after path", i);
    }
    if (p.support().size() != p.length()) {
      throw ParseError("path repeats a generator", 0);
    }
    return p;
  }

  namespace {
    void extend(int n, std::vector<Generator>& cur, int len,
                std::vector<std::vector<Generator>>& out) {
      if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
      }
      for (int g = 0; g < n; ++g) {
        if (std::find(cur.begin(), cur.end(), g) == cur.end()) {
          cur.push_back(static_cast<Generator>(g));
          extend(n, cur, len, out);
          cur.pop_back();
        }
      }
    }

    std::size_t side_index(Side s) {
      return s == Side::left ? 0 : 1;
    }
  }  // namespace

  PathUniverse::PathUniverse(int n) : n_(n) {
    for (int len = 1; len <= n; ++len) {
      std::vector<Generator> cur;
      extend(n, cur, len, seqs_);
    }
    for (auto const& s : seqs_) {
      supports_.push_back(ExtremalPath{Side::right, s}.support());
    }
    auto const sz = seqs_.size();
    for (Side side : {Side::left, Side::right}) {
      auto& table = step_[side_index(side)];
      table.assign(sz * sz, 0);
      for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t k = 0; k < sz; ++k) {
          PathMask m = PathMask{1} << star(side, static_cast<int>(i), static_cast<int>(k));
          if (supports_[i] == supports_[k]) {
            for (int j = 2; j <= supports_[i].size(); ++j) {
              m |= PathMask{1} << star(side, static_cast<int>(i), static_cast<int>(k), j);
            }
          }
          table[i * sz + k] = m;
        }
      }
    }
  }

  PathUniverse const& PathUniverse::get(int n) {
    if (n < 0 || n > kMaxN) {
      throw CapacityError("path universes are built for n <= " + std::to_string(kMaxN));
    }
    static std::array<std::unique_ptr<PathUniverse>, kMaxN + 1> cache;
    static std::mutex                                           mtx;
    std::lock_guard<std::mutex>                                 lock(mtx);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) {
      slot.reset(new PathUniverse(n));
    }
    return *slot;
  }

  int PathUniverse::index(std::vector<Generator> const& seq) const {
    auto it = std::find(seqs_.begin(), seqs_.end(), seq);
    if (it == seqs_.end()) {
      throw PreconditionError("path " + to_string(ExtremalPath{Side::right, seq})
                              + " is not a non-empty path over " + std::to_string(n_)
                              + " generators");
    }
    return static_cast<int>(it - seqs_.begin());
  }

  int PathUniverse::star(Side side, int i, int k, int j) const {
    return index(path_star(path(i, side), path(k, side), j).seq);
  }

  PathMask PathUniverse::closure(Side side, PathMask m) const {
    auto const& table = step_[side_index(side)];
    auto const  sz    = seqs_.size();
    while (true) {
      PathMask next = m;
      for (PathMask a = m; a != 0; a &= a - 1) {
        auto const i = static_cast<std::size_t>(std::countr_zero(a));
        for (PathMask b = m; b != 0; b &= b - 1) {
          next |= table[i * sz + static_cast<std::size_t>(std::countr_zero(b))];
        }
      }
      if (next == m) {
        return m;
      }
      m = next;
    }
  }

  AlphabetFamily PathUniverse::support_family(PathMask m) const {
    AlphabetFamily f;
    for (; m != 0; m &= m - 1) {
      f.insert(supports_[static_cast<std::size_t>(std::countr_zero(m))]);
    }
    return f;
  }

  PathMask PathUniverse::with_support(Alphabet a) const {
    PathMask m = 0;
    for (std::size_t i = 0; i < seqs_.size(); ++i) {
      if (supports_[i] == a) {
        m |= PathMask{1} << i;
      }
    }
    return m;
  }

  std::vector<ExtremalPath> PathUniverse::paths(PathMask m, Side side) const {
    std::vector<ExtremalPath> out;
    for (; m != 0; m &= m - 1) {
      out.push_back(path(std::countr_zero(m), side));
    }
    return out;
  }

  PathMask PathUniverse::mask_of(std::vector<ExtremalPath> const& ps) const {
    PathMask m = 0;
    for (auto const& p : ps) {
      m |= PathMask{1} << index(p.seq);
    }
    return m;
  }

}  // namespace mirig
