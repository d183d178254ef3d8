#include "mirig/alphabet.hpp"

#include "mirig/error.hpp"

namespace mirig {

  char letter(Generator g) {
    if (g >= kMaxGenerators) {
      throw PreconditionError("generator " + std::to_string(g)
                              + " has no letter rendering");
    }
    return static_cast<char>('a' + g);
  }

  bool is_generator_letter(char c) noexcept {
    return c >= 'a' && c <= 'z';
  }

  Generator parse_letter(char c) {
    if (!is_generator_letter(c)) {
      throw PreconditionError(std::string("not a generator letter: '") + c + "'");
    }
    return static_cast<Generator>(c - 'a');
  }

  std::vector<Generator> Alphabet::members() const {
    std::vector<Generator> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Generator>(std::countr_zero(b)));
    }
    return out;
  }

  std::string Alphabet::to_string() const {
    std::string s = "{";
    bool        first = true;
    for (Generator g : members()) {
      if (!first) {
        s += ',';
      }
      s += letter(g);
      first = false;
    }
    return s + "}";
  }

  std::vector<Alphabet> AlphabetFamily::members() const {
    std::vector<Alphabet> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.emplace_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    }
    return out;
  }

  bool AlphabetFamily::union_closed() const {
    auto const ms = members();
    for (Alphabet a : ms) {
      for (Alphabet b : ms) {
        if (!contains(a | b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool AlphabetFamily::upward_closed(int n) const {
    Alphabet const all = Alphabet::full(n);
    for (Alphabet a : members()) {
      if (!a.subset_of(all)) {
        return false;
      }
      for (Generator g : all.members()) {
        if (!contains(a.with(g))) {
          return false;
        }
      }
    }
    return true;
  }

  bool AlphabetFamily::is_minimal(Alphabet a) const {
    if (!contains(a)) {
      return false;
    }
    for (Alphabet b : members()) {
      if (b != a && b.subset_of(a)) {
        return false;
      }
    }
    return true;
  }

  AlphabetFamily AlphabetFamily::minimal_elements() const {
    AlphabetFamily out;
    for (Alphabet a : members()) {
      if (is_minimal(a)) {
        out.insert(a);
      }
    }
    return out;
  }

}  // namespace mirig
