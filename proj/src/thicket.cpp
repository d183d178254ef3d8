#include "mirig/thicket.hpp"

#include <cctype>

namespace mirig {

  QuotientNat apparity(Thicket const& f) {
    QuotientNat p(2, 2, 0);
    for (auto const& [t, k] : f.terms()) {
      p = p + QuotientNat(2, 2, k);
    }
    return p;
  }

  QuotientNat apparity(Thicket const& f, Alphabet a) {
    QuotientNat p(2, 2, 0);
    for (auto const& [t, k] : f.terms()) {
      if (t.alphabet() == a) {
        p = p + QuotientNat(2, 2, k);
      }
    }
    return p;
  }

  Thicket expansion_step(Thicket const& f, Tree const& x, Tree const& u, Tree const& v,
                         Tree const& y) {
    Tree const xuy = x * u * y;
    Tree const xvy = x * v * y;
    bool const ok  = xuy == xvy ? f.coefficient(xuy) >= 2
                                : f.coefficient(xuy) >= 1 && f.coefficient(xvy) >= 1;
    if (!ok) {
      throw PreconditionError("expansion_step: x*u*y and x*v*y are not both present");
    }
    Thicket g = f;
    g.add_term(x * u * v * y, 1);
    g.add_term(x * v * u * y, 1);
    return g;
  }

  std::string to_string(Thicket const& f) {
    if (f.is_zero()) {
      return "0";
    }
    std::string s;
    for (auto const& [t, k] : f.terms()) {
      if (!s.empty()) {
        s += " + ";
      }
      s += std::to_string(k);
      s += '*';
      s += t.is_leaf() ? std::string("1") : to_string(shortest_word(t));
    }
    return s;
  }

  namespace {
    class ThicketParser {
     public:
      ThicketParser(std::string_view text, int n) : text_(text), f_(n) {}

      Thicket parse() {
        skip_space();
        if (peek() == '0' && only_zero()) {
          return f_;
        }
        term();
        skip_space();
        while (peek() == '+') {
          ++pos_;
          term();
          skip_space();
        }
        if (pos_ != text_.size()) {
          throw ParseError("expected '+' or end of input", pos_);
        }
        return f_;
      }

     private:
      char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      void skip_space() {
        while (std::isspace(static_cast<unsigned char>(peek())) != 0) {
          ++pos_;
        }
      }

      bool only_zero() {
        std::size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])) != 0) {
          ++p;
        }
        if (p == text_.size()) {
          pos_ = p;
          return true;
        }
        return false;
      }

      // natural numbers fold into N_{2,2} by size and parity
      std::uint64_t natural() {
        std::size_t const start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
          ++pos_;
        }
        std::string_view digits = text_.substr(start, pos_ - start);
        while (digits.size() > 1 && digits.front() == '0') {
          digits.remove_prefix(1);
        }
        if (digits.size() == 1) {
          return static_cast<std::uint64_t>(digits[0] - '0');
        }
        std::uint64_t const last = static_cast<std::uint64_t>(digits.back() - '0');
        return QuotientNat::reduce(2, 2, 10 + last);
      }

      void term() {
        skip_space();
        std::uint64_t k = 1;
        if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
          std::size_t const start = pos_;
          k                       = natural();
          bool const bare_one     = pos_ - start == 1 && text_[start] == '1';
          skip_space();
          if (peek() != '*') {
            // a bare "1" is the identity with coefficient 1
            if (bare_one) {
              f_.add_term(Tree(), 1);
              return;
            }
            throw ParseError("expected '*'", pos_);
          }
          ++pos_;
          skip_space();
        }
        if (peek() == '1') {
          ++pos_;
          f_.add_term(Tree(), k);
          return;
        }
        std::size_t const start = pos_;
        Word              w;
        while (is_generator_letter(peek())) {
          auto const g = static_cast<Generator>(peek() - 'a');
          if (g >= f_.n()) {
            throw ParseError(std::string("generator '") + peek() + "' out of range for n="
                                 + std::to_string(f_.n()),
                             pos_);
          }
          w.push_back(g);
          ++pos_;
        }
        if (pos_ == start) {
          throw ParseError("expected a word or '1'", pos_);
        }
        f_.add_term(tree_of_word(w), k);
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
      Thicket          f_;
    };
  }  // namespace

  Thicket parse_thicket(std::string_view text, int n) {
    return ThicketParser(text, n).parse();
  }

}  // namespace mirig
