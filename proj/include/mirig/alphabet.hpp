#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mirig {

  // Generators are dense indices 0..n-1; letters are only a rendering.
  using Generator = std::uint8_t;

  inline constexpr int kMaxGenerators = 26;

  char        letter(Generator g);
  Generator   parse_letter(char c);  // throws PreconditionError
  bool        is_generator_letter(char c) noexcept;

  // A subset of [n] as a fixed-width bitset (bit i <=> generator i).
  class Alphabet {
   public:
    constexpr Alphabet() noexcept = default;
    constexpr explicit Alphabet(std::uint32_t bits) noexcept : bits_(bits) {}

    static constexpr Alphabet singleton(Generator g) noexcept {
      return Alphabet(std::uint32_t{1} << g);
    }
    static constexpr Alphabet full(int n) noexcept {
      return Alphabet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    }

    constexpr std::uint32_t bits() const noexcept {
      return bits_;
    }
    constexpr bool empty() const noexcept {
      return bits_ == 0;
    }
    constexpr int size() const noexcept {
      return std::popcount(bits_);
    }
    constexpr bool contains(Generator g) const noexcept {
      return (bits_ >> g) & 1U;
    }
    constexpr bool subset_of(Alphabet other) const noexcept {
      return (bits_ & ~other.bits_) == 0;
    }
    constexpr Alphabet with(Generator g) const noexcept {
      return Alphabet(bits_ | (std::uint32_t{1} << g));
    }
    constexpr Alphabet without(Generator g) const noexcept {
      return Alphabet(bits_ & ~(std::uint32_t{1} << g));
    }
    constexpr Alphabet operator|(Alphabet other) const noexcept {
      return Alphabet(bits_ | other.bits_);
    }
    constexpr Alphabet operator&(Alphabet other) const noexcept {
      return Alphabet(bits_ & other.bits_);
    }

    std::vector<Generator> members() const;

    // "{a,b}" style rendering
    std::string to_string() const;

    friend constexpr bool operator==(Alphabet, Alphabet) noexcept = default;
    friend constexpr auto operator<=>(Alphabet, Alphabet) noexcept = default;

   private:
    std::uint32_t bits_ = 0;
  };

  // A family of alphabets over [n], i.e. a subset of P([n]), stored as a
  // bitmask indexed by Alphabet::bits(). Supports n <= 6.
  class AlphabetFamily {
   public:
    static constexpr int kMaxN = 6;

    constexpr AlphabetFamily() noexcept = default;
    constexpr explicit AlphabetFamily(std::uint64_t mask) noexcept : mask_(mask) {}

    constexpr std::uint64_t mask() const noexcept {
      return mask_;
    }
    constexpr bool empty() const noexcept {
      return mask_ == 0;
    }
    constexpr int size() const noexcept {
      return std::popcount(mask_);
    }
    constexpr bool contains(Alphabet a) const noexcept {
      return (mask_ >> a.bits()) & 1U;
    }
    constexpr void insert(Alphabet a) noexcept {
      mask_ |= std::uint64_t{1} << a.bits();
    }
    constexpr void erase(Alphabet a) noexcept {
      mask_ &= ~(std::uint64_t{1} << a.bits());
    }
    constexpr AlphabetFamily operator|(AlphabetFamily o) const noexcept {
      return AlphabetFamily(mask_ | o.mask_);
    }
    constexpr AlphabetFamily operator&(AlphabetFamily o) const noexcept {
      return AlphabetFamily(mask_ & o.mask_);
    }

    std::vector<Alphabet> members() const;
    bool                  union_closed() const;
    bool                  upward_closed(int n) const;
    AlphabetFamily        minimal_elements() const;
    bool                  is_minimal(Alphabet a) const;

    friend constexpr bool operator==(AlphabetFamily, AlphabetFamily) noexcept = default;
    friend constexpr auto operator<=>(AlphabetFamily, AlphabetFamily) noexcept = default;

   private:
    std::uint64_t mask_ = 0;
  };

}  // namespace mirig
