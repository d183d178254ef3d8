#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace mirig {

  // An element of N_{m,n} = {0, ..., m+n-1}: natural arithmetic with any
  // result above m+n-1 folded back into [m, m+n-1] modulo n.
  class QuotientNat {
   public:
    // throws PreconditionError unless m >= 0 and n >= 1
    QuotientNat(int m, int n, std::uint64_t k);

    static std::uint64_t reduce(int m, int n, std::uint64_t k);

    int m() const noexcept {
      return m_;
    }
    int n() const noexcept {
      return n_;
    }
    std::uint64_t value() const noexcept {
      return value_;
    }

    // throw PreconditionError when the parameters differ
    friend QuotientNat operator+(QuotientNat const& x, QuotientNat const& y);
    friend QuotientNat operator*(QuotientNat const& x, QuotientNat const& y);

    friend bool operator==(QuotientNat const&, QuotientNat const&) = default;

    std::string to_string() const {
      return std::to_string(value_);
    }

   private:
    int           m_;
    int           n_;
    std::uint64_t value_;
  };

}  // namespace mirig
