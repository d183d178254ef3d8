#include "mirig/rig_table.hpp"

#include "mirig/error.hpp"
#include "mirig/qnat.hpp"
#include "mirig/universe.hpp"

namespace mirig {

  RigAxiomReport verify_rig_axioms(FiniteRigTable const& t, bool require_mirig) {
    RigAxiomReport r;
    int const      n = t.size();
    auto const&    a = t.add;
    auto const&    m = t.mul;
    auto fail = [&](char const* axiom, std::vector<int> w) {
      r.violations.push_back(AxiomViolation{axiom, std::move(w)});
    };
    auto shape_ok = [n](OperationTable const& op) {
      if (static_cast<int>(op.size()) != n) {
        return false;
      }
      for (auto const& row : op) {
        if (static_cast<int>(row.size()) != n) {
          return false;
        }
        for (int v : row) {
          if (v < 0 || v >= n) {
            return false;
          }
        }
      }
      return true;
    };
    if (!shape_ok(a) || !shape_ok(m) || t.zero < 0 || t.zero >= n || t.one < 0 || t.one >= n) {
      fail("well-formed tables", {});
      return r;
    }
    int const z = t.zero;
    int const o = t.one;
    for (int x = 0; x < n; ++x) {
      if (a[x][z] != x) {
        fail("x + 0 = x", {x});
      }
      if (a[z][x] != x) {
        fail("0 + x = x", {x});
      }
      if (m[x][o] != x) {
        fail("x * 1 = x", {x});
      }
      if (m[o][x] != x) {
        fail("1 * x = x", {x});
      }
      if (m[x][z] != z) {
        fail("x * 0 = 0", {x});
      }
      if (m[z][x] != z) {
        fail("0 * x = 0", {x});
      }
      if (require_mirig && m[x][x] != x) {
        fail("x * x = x", {x});
      }
      for (int y = 0; y < n; ++y) {
        if (a[x][y] != a[y][x]) {
          fail("x + y = y + x", {x, y});
        }
        if (m[x][y] != m[y][x]) {
          r.commutative = false;
        }
        for (int w = 0; w < n; ++w) {
          if (a[a[x][y]][w] != a[x][a[y][w]]) {
            fail("(x + y) + z = x + (y + z)", {x, y, w});
          }
          if (m[m[x][y]][w] != m[x][m[y][w]]) {
            fail("(x * y) * z = x * (y * z)", {x, y, w});
          }
          if (m[x][a[y][w]] != a[m[x][y]][m[x][w]]) {
            fail("x * (y + z) = x * y + x * z", {x, y, w});
          }
          if (m[a[x][y]][w] != a[m[x][w]][m[y][w]]) {
            fail("(x + y) * z = x * z + y * z", {x, y, w});
          }
        }
      }
    }
    return r;
  }

  FiniteRigTable quotient_nat_table(int m, int n) {
    QuotientNat::reduce(m, n, 0);
    int const      size = m + n;
    FiniteRigTable t;
    t.add.assign(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
    t.mul = t.add;
    for (int x = 0; x < size; ++x) {
      t.names.push_back(std::to_string(x));
      for (int y = 0; y < size; ++y) {
        auto const ux = static_cast<std::uint64_t>(x);
        auto const uy = static_cast<std::uint64_t>(y);
        t.add[x][y]   = static_cast<int>(QuotientNat::reduce(m, n, ux + uy));
        t.mul[x][y]   = static_cast<int>(QuotientNat::reduce(m, n, ux * uy));
      }
    }
    t.zero = 0;
    t.one  = size > 1 ? 1 : 0;
    return t;
  }

  void check_idempotent_monoid(FiniteMonoid const& mon) {
    auto const n = static_cast<int>(mon.names.size());
    if (n == 0 || static_cast<int>(mon.mul.size()) != n || mon.identity < 0
        || mon.identity >= n) {
      throw PreconditionError("monoid table has the wrong shape");
    }
    for (auto const& row : mon.mul) {
      if (static_cast<int>(row.size()) != n) {
        throw PreconditionError("monoid table has the wrong shape");
      }
      for (int v : row) {
        if (v < 0 || v >= n) {
          throw PreconditionError("monoid table entry out of range");
        }
      }
    }
    auto const& m = mon.mul;
    for (int x = 0; x < n; ++x) {
      if (m[x][x] != x) {
        throw PreconditionError("not idempotent: " + mon.names[x] + "^2 != " + mon.names[x]);
      }
      if (m[x][mon.identity] != x || m[mon.identity][x] != x) {
        throw PreconditionError("not a unit: " + mon.names[mon.identity]);
      }
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (m[m[x][y]][z] != m[x][m[y][z]]) {
            throw PreconditionError("not associative at (" + mon.names[x] + ", " + mon.names[y]
                                    + ", " + mon.names[z] + ")");
          }
        }
      }
    }
  }

  FiniteRigTable campion_mirig(FiniteMonoid const& mon) {
    check_idempotent_monoid(mon);
    int const      k    = static_cast<int>(mon.names.size());
    int const      zero = k;
    int const      two  = k + 1;
    int const      size = k + 2;
    FiniteRigTable t;
    t.names = mon.names;
    t.names.push_back("0");
    t.names.push_back("2");
    t.add.assign(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
    t.mul = t.add;
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        if (x == zero) {
          t.add[x][y] = y;
        } else if (y == zero) {
          t.add[x][y] = x;
        } else {
          t.add[x][y] = two;
        }
        if (x == zero || y == zero) {
          t.mul[x][y] = zero;
        } else if (x == two || y == two) {
          t.mul[x][y] = two;
        } else {
          t.mul[x][y] = mon.mul[x][y];
        }
      }
    }
    t.zero = zero;
    t.one  = mon.identity;
    return t;
  }

  FiniteMonoid trivial_monoid() {
    return FiniteMonoid{{"1"}, {{0}}, 0};
  }

  FiniteMonoid free_idempotent_monoid(int n) {
    auto const&  uni = Universe::get(n);
    FiniteMonoid m;
    for (int i = 0; i < uni.size(); ++i) {
      m.names.push_back(uni.tree(i).is_leaf() ? std::string("1")
                                              : to_string(shortest_word(uni.tree(i))));
      std::vector<int> row;
      for (int j = 0; j < uni.size(); ++j) {
        row.push_back(uni.product(i, j));
      }
      m.mul.push_back(std::move(row));
    }
    m.identity = uni.index(Tree());
    return m;
  }

  std::pair<int, int> characteristic(FiniteRigTable const& t) {
    // multiples k*1 for k = 0, 1, 2, ... until the first repeat
    std::vector<int> seen;
    int              cur = t.zero;
    while (true) {
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] == cur) {
          int const m = static_cast<int>(i);
          return {m, static_cast<int>(seen.size()) - m};
        }
      }
      seen.push_back(cur);
      cur = t.add[cur][t.one];
    }
  }

}  // namespace mirig
