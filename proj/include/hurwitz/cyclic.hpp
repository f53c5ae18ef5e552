#pragma once

// Cyclic words: relators are only meaningful up to cyclic permutation and
// inversion, so matching and certificate construction go through here.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "word.hpp"

namespace hurwitz {

  template <typename Sym>
  struct cyclic_decomposition {
    basic_word<Sym>          conjugator;  // w = conjugator * core * conjugator^-1
    std::vector<letter<Sym>> core;        // cyclically reduced
  };

  template <typename Sym>
  cyclic_decomposition<Sym> cyclically_reduce(basic_word<Sym> const& w) {
    auto        letters = w.letters();
    std::size_t lo      = 0;
    std::size_t hi      = letters.size();
    while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
      ++lo;
      --hi;
    }
    cyclic_decomposition<Sym> out;
    for (std::size_t i = 0; i < lo; ++i) {
      out.conjugator.push_back(letters[i].gen, letters[i].sign);
    }
    out.core.assign(letters.begin() + lo, letters.begin() + hi);
    return out;
  }

  template <typename Sym>
  std::vector<letter<Sym>> rotate_letters(std::vector<letter<Sym>> const& v,
                                          std::size_t                     p) {
    std::vector<letter<Sym>> out;
    out.reserve(v.size());
    out.insert(out.end(), v.begin() + p, v.end());
    out.insert(out.end(), v.begin(), v.begin() + p);
    return out;
  }

  template <typename Sym>
  std::vector<letter<Sym>> invert_letters(std::vector<letter<Sym>> const& v) {
    std::vector<letter<Sym>> out;
    out.reserve(v.size());
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return out;
  }

  // Canonical representative of the class of w under cyclic permutation and
  // (if allow_inverse) inversion: the lexicographically least rotation.
  template <typename Sym>
  std::vector<letter<Sym>> cyclic_key(basic_word<Sym> const& w,
                                      bool allow_inverse = true) {
    auto core = cyclically_reduce(w).core;
    auto best = core;
    auto consider = [&best](std::vector<letter<Sym>> const& v) {
      for (std::size_t p = 0; p < v.size(); ++p) {
        auto r = rotate_letters(v, p);
        if (r < best) {
          best = std::move(r);
        }
      }
    };
    consider(core);
    if (allow_inverse) {
      consider(invert_letters(core));
    }
    return best;
  }

  template <typename Sym>
  bool cyclically_equivalent(basic_word<Sym> const& u,
                             basic_word<Sym> const& v,
                             bool                   allow_inverse = true) {
    return cyclic_key(u, allow_inverse) == cyclic_key(v, allow_inverse);
  }

  template <typename Sym>
  struct conjugacy_witness {
    basic_word<Sym> conjugator;
    int             sign;
  };

  // Finds (g, e) with g * relator^e * g^-1 == target in the free group, if
  // target is a conjugate of relator or of its inverse.
  template <typename Sym>
  std::optional<conjugacy_witness<Sym>>
  find_conjugacy(basic_word<Sym> const& target, basic_word<Sym> const& relator) {
    if (target.empty() || relator.empty()) {
      return std::nullopt;
    }
    auto const rel = cyclically_reduce(relator);
    auto const tgt = cyclically_reduce(target);
    if (rel.core.size() != tgt.core.size()) {
      return std::nullopt;
    }
    for (int sign : {1, -1}) {
      auto const base = sign == 1 ? rel.core : invert_letters(rel.core);
      for (std::size_t p = 0; p < base.size(); ++p) {
        if (rotate_letters(base, p) != tgt.core) {
          continue;
        }
        // base = P Q and tgt.core = Q P = P^-1 base P, with P the first p
        // letters; relator^sign = a base a^-1 for a = rel.conjugator^sign'.
        basic_word<Sym> prefix;
        for (std::size_t i = 0; i < p; ++i) {
          prefix.push_back(base[i].gen, base[i].sign);
        }
        basic_word<Sym> g
            = tgt.conjugator * prefix.inverse() * rel.conjugator.inverse();
        auto const check
            = g * power(relator, sign) * g.inverse();
        if (check != target) {
          throw internal_error("find_conjugacy: witness failed to verify");
        }
        return conjugacy_witness<Sym>{std::move(g), sign};
      }
    }
    return std::nullopt;
  }

}  // namespace hurwitz
