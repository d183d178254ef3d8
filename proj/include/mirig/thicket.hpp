#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mirig/error.hpp"
#include "mirig/qnat.hpp"
#include "mirig/tree.hpp"

namespace mirig {

  // Coefficients in N_{M,N}, stored as their canonical value.
  template <int M, int N>
  struct QuotientCoefficients {
    using value_type = std::uint64_t;

    static value_type from_uint(std::uint64_t k) {
      return QuotientNat::reduce(M, N, k);
    }
    static value_type add(value_type x, value_type y) {
      return from_uint(x + y);
    }
    static value_type mul(value_type x, value_type y) {
      return from_uint(x * y);
    }
    static bool is_zero(value_type x) {
      return x == 0;
    }
  };

  struct NaturalCoefficients {
    using value_type = BigInt;

    static value_type from_uint(std::uint64_t k) {
      return BigInt(k);
    }
    static value_type add(value_type const& x, value_type const& y) {
      return x + y;
    }
    static value_type mul(value_type const& x, value_type const& y) {
      return x * y;
    }
    static bool is_zero(value_type const& x) {
      return x == 0;
    }
  };

  // A finite formal sum of trees over n generators with coefficients in the
  // rig described by Coeff. Zero coefficients are never stored; terms are
  // kept in canonical tree order.
  template <class Coeff>
  class BasicThicket {
   public:
    using coefficient_type = typename Coeff::value_type;

    explicit BasicThicket(int n = 0) : n_(n) {
      if (n < 0 || n > kMaxGenerators) {
        throw PreconditionError("generator count must lie in 0..26");
      }
    }

    static BasicThicket term(int n, Tree const& t, std::uint64_t k = 1) {
      BasicThicket f(n);
      f.add_term(t, Coeff::from_uint(k));
      return f;
    }

    int n() const noexcept {
      return n_;
    }

    void add_term(Tree const& t, coefficient_type const& raw) {
      if (!t.alphabet().subset_of(Alphabet::full(n_))) {
        throw PreconditionError("tree " + to_sexpr(t) + " is not over " + std::to_string(n_)
                                + " generators");
      }
      coefficient_type const k = Coeff::add(Coeff::from_uint(0), raw);
      if (Coeff::is_zero(k)) {
        return;
      }
      auto [it, inserted] = terms_.try_emplace(t, k);
      if (!inserted) {
        it->second = Coeff::add(it->second, k);
        if (Coeff::is_zero(it->second)) {
          terms_.erase(it);
        }
      }
    }

    coefficient_type coefficient(Tree const& t) const {
      auto it = terms_.find(t);
      return it == terms_.end() ? Coeff::from_uint(0) : it->second;
    }

    std::map<Tree, coefficient_type> const& terms() const noexcept {
      return terms_;
    }

    std::vector<Tree> support() const {
      std::vector<Tree> out;
      for (auto const& [t, k] : terms_) {
        out.push_back(t);
      }
      return out;
    }

    bool is_zero() const noexcept {
      return terms_.empty();
    }

    friend BasicThicket operator+(BasicThicket const& f, BasicThicket const& g) {
      check_same(f, g);
      BasicThicket h = f;
      for (auto const& [t, k] : g.terms_) {
        h.add_term(t, k);
      }
      return h;
    }

    friend BasicThicket operator*(BasicThicket const& f, BasicThicket const& g) {
      check_same(f, g);
      BasicThicket h(f.n_);
      for (auto const& [s, j] : f.terms_) {
        for (auto const& [t, k] : g.terms_) {
          h.add_term(s * t, Coeff::mul(j, k));
        }
      }
      return h;
    }

    friend bool operator==(BasicThicket const&, BasicThicket const&) = default;

   private:
    static void check_same(BasicThicket const& f, BasicThicket const& g) {
      if (f.n_ != g.n_) {
        throw PreconditionError("thickets over different generator counts");
      }
    }

    int                              n_;
    std::map<Tree, coefficient_type> terms_;
  };

  using Thicket = BasicThicket<QuotientCoefficients<2, 2>>;
  using Forest  = BasicThicket<NaturalCoefficients>;

  // Sum of all coefficients in N_{2,2}.
  QuotientNat apparity(Thicket const& f);
  // Sum of the coefficients of the trees with alphabet exactly a.
  QuotientNat apparity(Thicket const& f, Alphabet a);

  // The expansion move on the context x(-)y: requires x*u*y and x*v*y in f
  // (coefficient 2 or more when they coincide) and adds x*u*v*y and
  // x*v*u*y. Throws PreconditionError otherwise.
  Thicket expansion_step(Thicket const& f, Tree const& x, Tree const& u, Tree const& v,
                         Tree const& y);

  // Text form "k*w + k*w + ...", k in 0..3, w the shortest word of the tree
  // and "1" for the identity; the zero thicket is "0". Letters must be < n.
  std::string to_string(Thicket const& f);
  Thicket     parse_thicket(std::string_view text, int n);

}  // namespace mirig
