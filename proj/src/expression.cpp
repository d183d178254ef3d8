#include "mirig/expression.hpp"

#include <limits>

#include "mirig/error.hpp"

namespace mirig {

  namespace {
    using Ptr = std::shared_ptr<Expression const>;

    class ExpressionParser {
     public:
      explicit ExpressionParser(std::string_view text) : text_(text) {}

      Expression parse_all() {
        Ptr e = expr();
        skip_space();
        if (pos_ != text_.size()) {
          throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return *e;
      }

     private:
      void skip_space() {
        while (pos_ < text_.size()
               && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n'
                   || text_[pos_] == '\r')) {
          ++pos_;
        }
      }

      bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      Ptr expr() {
        Ptr e = term();
        while (accept('+')) {
          e = std::make_shared<Expression const>(Expression{Expression::Sum{e, term()}});
        }
        return e;
      }

      Ptr term() {
        Ptr e = factor();
        while (accept('*')) {
          e = std::make_shared<Expression const>(Expression{Expression::Product{e, factor()}});
        }
        return e;
      }

      Ptr factor() {
        skip_space();
        if (pos_ >= text_.size()) {
          throw ParseError("unexpected end of expression", pos_);
        }
        char const c = text_[pos_];
        if (c == '(') {
          ++pos_;
          Ptr e = expr();
          if (!accept(')')) {
            throw ParseError("expected ')'", pos_);
          }
          return e;
        }
        if (is_generator_letter(c)) {
          ++pos_;
          return std::make_shared<Expression const>(
              Expression{Expression::Atom{static_cast<Generator>(c - 'a')}});
        }
        if (c >= '0' && c <= '9') {
          constexpr auto kMax  = std::numeric_limits<std::uint64_t>::max();
          std::uint64_t  value = 0;
          while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            auto const d = static_cast<std::uint64_t>(text_[pos_] - '0');
            // saturate, keeping the parity of the true value
            value = value > (kMax - d) / 10 ? kMax - 1 + (d & 1U) : value * 10 + d;
            ++pos_;
          }
          return std::make_shared<Expression const>(Expression{Expression::Nat{value}});
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  Expression parse_expression(std::string_view text) {
    return ExpressionParser(text).parse_all();
  }

  std::string to_string(Expression const& e) {
    return std::visit(
        [](auto const& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Expression::Nat>) {
            return std::to_string(x.value);
          } else if constexpr (std::is_same_v<T, Expression::Atom>) {
            return std::string(1, letter(x.generator));
          } else if constexpr (std::is_same_v<T, Expression::Sum>) {
            return "(" + to_string(*x.lhs) + " + " + to_string(*x.rhs) + ")";
          } else {
            return "(" + to_string(*x.lhs) + " * " + to_string(*x.rhs) + ")";
          }
        },
        e.node);
  }

  int max_generator(Expression const& e) {
    return std::visit(
        [](auto const& x) -> int {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Expression::Nat>) {
            return -1;
          } else if constexpr (std::is_same_v<T, Expression::Atom>) {
            return x.generator;
          } else {
            return std::max(max_generator(*x.lhs), max_generator(*x.rhs));
          }
        },
        e.node);
  }

  ComplementaryTriple natural(int n, std::uint64_t k) {
    if (k == 0) {
      return ComplementaryTriple::zero(n);
    }
    auto const one = ComplementaryTriple::one(n);
    if (k == 1) {
      return one;
    }
    auto const two = one + one;
    return k % 2 == 0 ? two : two + one;
  }

  namespace {
    ComplementaryTriple fold(Expression const& e, int n) {
      return std::visit(
          [n](auto const& x) -> ComplementaryTriple {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Expression::Nat>) {
              return natural(n, x.value);
            } else if constexpr (std::is_same_v<T, Expression::Atom>) {
              return ComplementaryTriple::gen(n, x.generator);
            } else if constexpr (std::is_same_v<T, Expression::Sum>) {
              return fold(*x.lhs, n) + fold(*x.rhs, n);
            } else {
              return fold(*x.lhs, n) * fold(*x.rhs, n);
            }
          },
          e.node);
    }
  }  // namespace

  ComplementaryTriple eval(Expression const& e, int n) {
    if (int const g = max_generator(e); g >= n) {
      throw PreconditionError("generator " + std::string(1, letter(static_cast<Generator>(g)))
                              + " out of range for n=" + std::to_string(n));
    }
    return fold(e, n);
  }

}  // namespace mirig
