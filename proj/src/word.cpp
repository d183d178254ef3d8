#include "mirig/word.hpp"

#include "mirig/error.hpp"

namespace mirig {

  Word parse_word(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!is_generator_letter(text[i])) {
        throw ParseError(std::string("expected a letter a-z, found '") + text[i]
                             + "'",
                         i);
      }
      w.push_back(static_cast<Generator>(text[i] - 'a'));
    }
    return w;
  }

  std::string to_string(Word const& w) {
    std::string s;
    s.reserve(w.size());
    for (Generator g : w) {
      s += letter(g);
    }
    return s;
  }

  Alphabet word_alphabet(Word const& w) {
    Alphabet a;
    for (Generator g : w) {
      a = a.with(g);
    }
    return a;
  }

  GrfDecomposition grf(Word const& w) {
    if (w.empty()) {
      throw PreconditionError("grf: the empty word has no Green-Rees form");
    }
    int const k = word_alphabet(w).size();

    GrfDecomposition out{};
    // The prefix ends right before the first occurrence of the last new
    // letter, i.e. the position where the running alphabet reaches size k.
    Alphabet seen;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!seen.contains(w[i]) && seen.size() == k - 1) {
        out.prefix.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        out.prefix_missing = w[i];
        break;
      }
      seen = seen.with(w[i]);
    }
    seen = Alphabet();
    for (std::size_t i = w.size(); i-- > 0;) {
      if (!seen.contains(w[i]) && seen.size() == k - 1) {
        out.suffix.assign(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
        out.suffix_missing = w[i];
        break;
      }
      seen = seen.with(w[i]);
    }
    return out;
  }

}  // namespace mirig
