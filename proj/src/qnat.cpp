#include "mirig/qnat.hpp"

#include "mirig/error.hpp"

namespace mirig {

  namespace {
    void check_parameters(int m, int n) {
      if (m < 0 || n < 1) {
        throw PreconditionError("N_{m,n} needs m >= 0 and n >= 1, got m=" + std::to_string(m)
                                + " n=" + std::to_string(n));
      }
    }

    void check_same(QuotientNat const& x, QuotientNat const& y) {
      if (x.m() != y.m() || x.n() != y.n()) {
        throw PreconditionError("mismatched quotient parameters: N_{" + std::to_string(x.m())
                                + "," + std::to_string(x.n()) + "} and N_{"
                                + std::to_string(y.m()) + "," + std::to_string(y.n()) + "}");
      }
    }
  }  // namespace

  std::uint64_t QuotientNat::reduce(int m, int n, std::uint64_t k) {
    check_parameters(m, n);
    auto const mm = static_cast<std::uint64_t>(m);
    auto const nn = static_cast<std::uint64_t>(n);
    if (k <= mm + nn - 1) {
      return k;
    }
    return mm + (k - mm) % nn;
  }

  QuotientNat::QuotientNat(int m, int n, std::uint64_t k)
      : m_(m), n_(n), value_(reduce(m, n, k)) {}

  QuotientNat operator+(QuotientNat const& x, QuotientNat const& y) {
    check_same(x, y);
    return QuotientNat(x.m_, x.n_, x.value_ + y.value_);
  }

  QuotientNat operator*(QuotientNat const& x, QuotientNat const& y) {
    check_same(x, y);
    return QuotientNat(x.m_, x.n_, x.value_ * y.value_);
  }

}  // namespace mirig
