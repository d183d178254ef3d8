#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "mirig/triple.hpp"

namespace mirig {

  // Rig expressions over generator letters:
  //   expr   := term ('+' term)*
  //   term   := factor ('*' factor)*
  //   factor := NAT | LETTER | '(' expr ')'
  // Whitespace between tokens is ignored.
  struct Expression {
    struct Nat {
      std::uint64_t value;  // saturates at 2^64 - 1 while parsing
    };
    struct Atom {
      Generator generator;
    };
    struct Sum {
      std::shared_ptr<Expression const> lhs, rhs;
    };
    struct Product {
      std::shared_ptr<Expression const> lhs, rhs;
    };
    std::variant<Nat, Atom, Sum, Product> node;
  };

  Expression  parse_expression(std::string_view text);  // throws ParseError
  std::string to_string(Expression const& e);           // fully parenthesized

  // Highest generator index used, or -1.
  int max_generator(Expression const& e);

  // Value in R_n; throws PreconditionError when a letter is >= n.
  ComplementaryTriple eval(Expression const& e, int n);

  // Image of k in R_n: only k = 0, 1 and the parity of larger k matter.
  ComplementaryTriple natural(int n, std::uint64_t k);

}  // namespace mirig
