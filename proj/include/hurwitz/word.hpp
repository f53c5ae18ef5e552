#pragma once

// Free-group words in syllable (run-length) normal form.
//
// A basic_word<Sym> is a sequence of (generator, exponent) syllables with no
// zero exponents and no two adjacent syllables over the same generator, so
// every value is freely reduced by construction. The symbol type only needs
// to be totally ordered; user-facing words use Generator, the rewriting
// engine instantiates the same template over Schreier letters.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hurwitz {

  ////////////////////////////////////////////////////////////////////////
  // Generator
  ////////////////////////////////////////////////////////////////////////

  // A named free generator. Names match [A-Za-z][A-Za-z0-9_]*.
  class Generator {
   public:
    Generator() = default;

    explicit Generator(std::string name) : _name(std::move(name)) {
      if (!is_valid_name(_name)) {
        throw error("invalid generator name '" + _name + "'");
      }
    }

    [[nodiscard]] std::string const& name() const noexcept { return _name; }

    static bool is_valid_name(std::string_view s) noexcept {
      if (s.empty() || !is_alpha(s.front())) {
        return false;
      }
      return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return is_alpha(c) || (c >= '0' && c <= '9') || c == '_';
      });
    }

    friend bool operator==(Generator const&, Generator const&) = default;
    friend auto operator<=>(Generator const&, Generator const&) = default;

    friend std::ostream& operator<<(std::ostream& os, Generator const& g) {
      return os << g._name;
    }

   private:
    static constexpr bool is_alpha(char c) noexcept {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }

    std::string _name;
  };

  ////////////////////////////////////////////////////////////////////////
  // basic_word
  ////////////////////////////////////////////////////////////////////////

  template <typename Sym>
  struct syllable {
    Sym          gen;
    std::int64_t exp;

    friend bool operator==(syllable const&, syllable const&) = default;
    friend auto operator<=>(syllable const&, syllable const&) = default;
  };

  // A single letter g^{+1} or g^{-1}.
  template <typename Sym>
  struct letter {
    Sym gen;
    int sign;

    [[nodiscard]] letter inverse() const { return {gen, -sign}; }

    friend bool operator==(letter const&, letter const&) = default;
    friend auto operator<=>(letter const&, letter const&) = default;
  };

  template <typename Sym>
  class basic_word {
   public:
    using symbol_type   = Sym;
    using syllable_type = syllable<Sym>;
    using letter_type   = letter<Sym>;
    using const_iterator =
        typename std::vector<syllable_type>::const_iterator;

    basic_word() = default;

    explicit basic_word(Sym g, std::int64_t exp = 1) {
      push_back(std::move(g), exp);
    }

    template <typename Range>
    static basic_word from_syllables(Range const& syllables) {
      basic_word w;
      for (auto const& s : syllables) {
        w.push_back(s.gen, s.exp);
      }
      return w;
    }

    template <typename Range>
    static basic_word from_letters(Range const& letters) {
      basic_word w;
      for (auto const& l : letters) {
        w.push_back(l.gen, l.sign);
      }
      return w;
    }

    // Appends g^exp and freely reduces against the tail.
    void push_back(Sym g, std::int64_t exp) {
      if (exp == 0) {
        return;
      }
      if (!_syl.empty() && _syl.back().gen == g) {
        _syl.back().exp += exp;
        if (_syl.back().exp == 0) {
          _syl.pop_back();
        }
        return;
      }
      _syl.push_back({std::move(g), exp});
    }

    basic_word& operator*=(basic_word const& that) {
      for (auto const& s : that._syl) {
        push_back(s.gen, s.exp);
      }
      return *this;
    }

    friend basic_word operator*(basic_word lhs, basic_word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    [[nodiscard]] basic_word inverse() const {
      basic_word out;
      out._syl.reserve(_syl.size());
      for (auto it = _syl.rbegin(); it != _syl.rend(); ++it) {
        out._syl.push_back({it->gen, -it->exp});
      }
      return out;
    }

    [[nodiscard]] std::vector<syllable_type> const& syllables() const noexcept {
      return _syl;
    }

    [[nodiscard]] bool empty() const noexcept { return _syl.empty(); }

    // Number of syllables.
    [[nodiscard]] std::size_t size() const noexcept { return _syl.size(); }

    // Number of letters, i.e. the free-group length.
    [[nodiscard]] std::size_t length() const noexcept {
      std::size_t n = 0;
      for (auto const& s : _syl) {
        n += static_cast<std::size_t>(std::llabs(s.exp));
      }
      return n;
    }

    [[nodiscard]] std::vector<letter_type> letters() const {
      std::vector<letter_type> out;
      out.reserve(length());
      for (auto const& s : _syl) {
        int const sign = s.exp > 0 ? 1 : -1;
        for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) {
          out.push_back({s.gen, sign});
        }
      }
      return out;
    }

    [[nodiscard]] bool contains(Sym const& g) const {
      return std::any_of(_syl.begin(), _syl.end(), [&g](auto const& s) {
        return s.gen == g;
      });
    }

    const_iterator begin() const noexcept { return _syl.begin(); }
    const_iterator end() const noexcept { return _syl.end(); }

    friend bool operator==(basic_word const&, basic_word const&) = default;
    friend auto operator<=>(basic_word const&, basic_word const&) = default;

   private:
    std::vector<syllable_type> _syl;
  };

  using Word = basic_word<Generator>;

  ////////////////////////////////////////////////////////////////////////
  // Free-group arithmetic
  ////////////////////////////////////////////////////////////////////////

  // Free reduction of an arbitrary letter (or syllable) sequence.
  template <typename Sym>
  basic_word<Sym> free_reduce(std::vector<letter<Sym>> const& letters) {
    return basic_word<Sym>::from_letters(letters);
  }

  template <typename Sym>
  basic_word<Sym> multiply(basic_word<Sym> const& u, basic_word<Sym> const& v) {
    return u * v;
  }

  template <typename Sym>
  basic_word<Sym> invert(basic_word<Sym> const& u) {
    return u.inverse();
  }

  // conjugate(u, g) = g u g^-1, so that x_i^{x_j} = conjugate(x_i, x_j).
  template <typename Sym>
  basic_word<Sym> conjugate(basic_word<Sym> const& u, basic_word<Sym> const& g) {
    return g * u * g.inverse();
  }

  // [u, v] = u v u^-1 v^-1
  template <typename Sym>
  basic_word<Sym> commutator(basic_word<Sym> const& u,
                             basic_word<Sym> const& v) {
    return u * v * u.inverse() * v.inverse();
  }

  template <typename Sym>
  basic_word<Sym> power(basic_word<Sym> const& u, std::int64_t k) {
    if (u.size() == 1) {
      auto const& s = u.syllables().front();
      return basic_word<Sym>(s.gen, s.exp * k);
    }
    basic_word<Sym> const base = k >= 0 ? u : u.inverse();
    basic_word<Sym>       out;
    for (std::int64_t i = 0; i < std::llabs(k); ++i) {
      out *= base;
    }
    return out;
  }

  // Homomorphic image of w under a generator map. `image` is called once per
  // syllable and must return the image of the bare generator.
  template <typename Sym, typename F>
  auto substitute_with(basic_word<Sym> const& w, F&& image)
      -> std::decay_t<decltype(image(std::declval<Sym const&>()))> {
    using out_type = std::decay_t<decltype(image(std::declval<Sym const&>()))>;
    out_type out;
    for (auto const& s : w) {
      out *= power(image(s.gen), s.exp);
    }
    return out;
  }

  // Throws alphabet_error when w mentions a generator the map does not cover.
  template <typename Sym, typename Out>
  basic_word<Out> substitute(basic_word<Sym> const&                     w,
                             std::map<Sym, basic_word<Out>> const& map) {
    return substitute_with(w, [&map](Sym const& g) -> basic_word<Out> {
      auto it = map.find(g);
      if (it == map.end()) {
        if constexpr (std::is_same_v<Sym, Generator>) {
          throw alphabet_error(g.name());
        } else {
          throw error("substitute: unmapped generator");
        }
      }
      return it->second;
    });
  }

  template <typename Sym>
  std::int64_t exponent_sum(basic_word<Sym> const& w, Sym const& g) {
    std::int64_t total = 0;
    for (auto const& s : w) {
      if (s.gen == g) {
        total += s.exp;
      }
    }
    return total;
  }

  // Sum of weight(g) * exponent over all syllables. Generators missing from
  // the map weigh 0.
  template <typename Sym>
  std::int64_t total_degree(basic_word<Sym> const&               w,
                            std::map<Sym, std::int64_t> const& weights) {
    std::int64_t total = 0;
    for (auto const& s : w) {
      auto it = weights.find(s.gen);
      if (it != weights.end()) {
        total += it->second * s.exp;
      }
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  // Ordered list of distinct generators. Order matters: the product
  // x_1 ... x_m of a Hurwitz presentation is read off from it.
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<Generator> gens) : _gens(std::move(gens)) {
      for (std::size_t i = 0; i < _gens.size(); ++i) {
        if (!_index.emplace(_gens[i], i).second) {
          throw error("duplicate generator '" + _gens[i].name() + "'");
        }
      }
    }

    [[nodiscard]] std::vector<Generator> const& generators() const noexcept {
      return _gens;
    }
    [[nodiscard]] std::size_t size() const noexcept { return _gens.size(); }
    [[nodiscard]] Generator const& operator[](std::size_t i) const {
      return _gens.at(i);
    }
    [[nodiscard]] bool contains(Generator const& g) const {
      return _index.count(g) != 0;
    }
    // 0-based position; throws alphabet_error for foreign generators.
    [[nodiscard]] std::size_t index(Generator const& g) const {
      auto it = _index.find(g);
      if (it == _index.end()) {
        throw alphabet_error(g.name());
      }
      return it->second;
    }

    void check(Word const& w) const {
      for (auto const& s : w) {
        if (!contains(s.gen)) {
          throw alphabet_error(s.gen.name());
        }
      }
    }

   private:
    std::vector<Generator>           _gens;
    std::map<Generator, std::size_t> _index;
  };

  // Checked variants for callers that carry an alphabet around.
  inline Word multiply(Word const& u, Word const& v, Alphabet const& alphabet) {
    alphabet.check(u);
    alphabet.check(v);
    return u * v;
  }

  inline Word conjugate(Word const&     u,
                        Word const&     by,
                        Alphabet const& alphabet) {
    alphabet.check(u);
    alphabet.check(by);
    return conjugate(u, by);
  }

  inline Word invert(Word const& u, Alphabet const& alphabet) {
    alphabet.check(u);
    return u.inverse();
  }

  // Shorthand used throughout: the one-letter word g.
  inline Word word(Generator const& g, std::int64_t exp = 1) {
    return Word(g, exp);
  }

  inline Word word(std::string const& name, std::int64_t exp = 1) {
    return Word(Generator(name), exp);
  }

  // Product g_1 g_2 ... g_k of the given generators.
  inline Word product_of(std::vector<Generator> const& gens) {
    Word w;
    for (auto const& g : gens) {
      w.push_back(g, 1);
    }
    return w;
  }

}  // namespace hurwitz
