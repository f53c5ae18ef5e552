#pragma once

// Reidemeister rewriting relative to the transversal {t^k} of powers of a
// single letter t, for the kernel of a degree map sending each generator to
// a weight in Z or Z/d.
//
// A Schreier letter (c, g) stands for t^c g t^-(c + weight(g)), where the
// coset arithmetic comes from the Cosets policy:
//
//   struct Cosets {
//     std::int64_t step(std::int64_t coset, std::int64_t weight) const;
//     std::int64_t power(std::int64_t coset) const;  // exponent of t
//   };
//
// IntegerCosets gives the infinite cyclic quotient, CyclicCosets the finite
// one; the rewriting itself is shared.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "error.hpp"
#include "word.hpp"
#include "word_io.hpp"

namespace hurwitz {

  struct SchreierLetter {
    std::int64_t coset;
    // Caller-defined generator label. The affine pipeline uses the original
    // 1-based index j, and 0 for the central generator y.
    std::size_t source;

    friend bool operator==(SchreierLetter const&,
                           SchreierLetter const&) = default;
    friend auto operator<=>(SchreierLetter const&,
                            SchreierLetter const&) = default;
  };

  using SchreierWord = basic_word<SchreierLetter>;

  struct IntegerCosets {
    [[nodiscard]] std::int64_t step(std::int64_t c, std::int64_t w) const {
      return c + w;
    }
    [[nodiscard]] std::int64_t power(std::int64_t c) const { return c; }
  };

  struct CyclicCosets {
    std::int64_t modulus;

    [[nodiscard]] std::int64_t step(std::int64_t c, std::int64_t w) const {
      std::int64_t r = (c + w) % modulus;
      return r < 0 ? r + modulus : r;
    }
    [[nodiscard]] std::int64_t power(std::int64_t c) const { return c; }
  };

  struct RewriteLetter {
    std::size_t  source;
    std::int64_t weight;
  };

  template <typename Cosets>
  class SchreierRewriter {
   public:
    SchreierRewriter(std::map<Generator, RewriteLetter> letters,
                     Generator                          transversal,
                     Cosets                             cosets)
        : _letters(std::move(letters)),
          _transversal(std::move(transversal)),
          _cosets(cosets) {
      for (auto const& [g, info] : _letters) {
        _by_source.emplace(info.source, g);
      }
      auto it = _letters.find(_transversal);
      if (it == _letters.end() || it->second.weight != 1) {
        throw error("transversal letter must be a weight-1 generator");
      }
    }

    [[nodiscard]] Cosets const& cosets() const noexcept { return _cosets; }
    [[nodiscard]] Generator const& transversal() const noexcept {
      return _transversal;
    }
    [[nodiscard]] std::map<Generator, RewriteLetter> const&
    letters() const noexcept {
      return _letters;
    }

    [[nodiscard]] Generator const& generator(std::size_t source) const {
      auto it = _by_source.find(source);
      if (it == _by_source.end()) {
        throw error("unknown Schreier source " + std::to_string(source));
      }
      return it->second;
    }

    [[nodiscard]] std::int64_t weight(std::size_t source) const {
      return _letters.at(generator(source)).weight;
    }

    [[nodiscard]] std::int64_t degree(Word const& w) const {
      std::int64_t d = 0;
      for (auto const& s : w) {
        d += info(s.gen).weight * s.exp;
      }
      return d;
    }

    // t^c g = t^{c+1} literally, so the Schreier generator is the identity.
    [[nodiscard]] bool is_trivial(SchreierLetter const& l) const {
      return generator(l.source) == _transversal
             && _cosets.power(l.coset) + 1
                    == _cosets.power(_cosets.step(l.coset, 1));
    }

    [[nodiscard]] Word expand(SchreierLetter const& l) const {
      Generator const& g   = generator(l.source);
      std::int64_t const to = _cosets.step(l.coset, weight(l.source));
      return Word(_transversal, _cosets.power(l.coset)) * Word(g)
             * Word(_transversal, -_cosets.power(to));
    }

    [[nodiscard]] Word expand(SchreierWord const& w) const {
      return substitute_with(
          w, [this](SchreierLetter const& l) { return expand(l); });
    }

    struct Rewritten {
      SchreierWord word;
      std::int64_t end_coset;
    };

    // Scans w from coset `start`, emitting (c, g) for g and (c - wt, g)^-1
    // for g^-1, and skipping trivial letters.
    [[nodiscard]] Rewritten rewrite(Word const& w, std::int64_t start = 0) const {
      Rewritten out{{}, start};
      std::int64_t& c = out.end_coset;
      for (auto const& s : w) {
        RewriteLetter const& li = info(s.gen);
        if (s.exp > 0) {
          for (std::int64_t e = 0; e < s.exp; ++e) {
            SchreierLetter const l{c, li.source};
            if (!is_trivial(l)) {
              out.word.push_back(l, 1);
            }
            c = _cosets.step(c, li.weight);
          }
        } else {
          for (std::int64_t e = 0; e < -s.exp; ++e) {
            c = _cosets.step(c, -li.weight);
            SchreierLetter const l{c, li.source};
            if (!is_trivial(l)) {
              out.word.push_back(l, -1);
            }
          }
        }
      }
      return out;
    }

   private:
    RewriteLetter const& info(Generator const& g) const {
      auto it = _letters.find(g);
      if (it == _letters.end()) {
        throw alphabet_error(g.name());
      }
      return it->second;
    }

    std::map<Generator, RewriteLetter> _letters;
    std::map<std::size_t, Generator>   _by_source;
    Generator                          _transversal;
    Cosets                             _cosets;
  };

}  // namespace hurwitz
