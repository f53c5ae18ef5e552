#pragma once

// Projective Hurwitz quotients G / <(x_1...x_m)^k> and presentations of the
// kernel of nu mod mk, by finite-index Reidemeister rewriting over the
// transversal {x_m^c : 0 <= c < mk}. Also a deterministic Tietze simplifier.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "error.hpp"
#include "presentation.hpp"
#include "reidemeister.hpp"
#include "tietze.hpp"
#include "word.hpp"
#include "word_io.hpp"

namespace hurwitz {

  struct ProjectivePresentation {
    HurwitzPresentation base;
    std::int64_t        k;
    Presentation        presentation;  // base relators, then c^k

    [[nodiscard]] std::int64_t modulus() const {
      return static_cast<std::int64_t>(base.degree()) * k;
    }
  };

  inline ProjectivePresentation projective_quotient(HurwitzPresentation hp,
                                                    std::int64_t        k) {
    if (k < 1) {
      throw validation_error("projective quotient needs k >= 1, got "
                             + std::to_string(k));
    }
    Presentation p = hp.presentation();
    p.add_relator(power(hp.central_element(), k));
    return ProjectivePresentation{std::move(hp), k, std::move(p)};
  }

  struct ProjectiveRelatorSource {
    std::size_t  relator;  // index in ProjectivePresentation::presentation
    std::int64_t shift;    // c in x_m^c r x_m^-c
  };

  struct FiniteIndexKernelPresentation {
    Presentation                         presentation;
    std::vector<ProjectiveRelatorSource> provenance;
    // kernel generator -> word over the original generators
    std::map<Generator, Word>            dictionary;
    std::int64_t                         modulus = 1;
    Generator                            transversal;
    // coset_table[c][g] = coset reached from c along generator g
    std::vector<std::vector<std::int64_t>> coset_table;
  };

  inline Generator projective_generator(std::int64_t c, std::size_t j) {
    return Generator("b_" + std::to_string(c) + "_" + std::to_string(j));
  }

  inline FiniteIndexKernelPresentation
  derive_projective_kernel(ProjectivePresentation const& pp) {
    Presentation const& p = pp.presentation;
    std::int64_t const  d = pp.modulus();
    auto const&         gens = p.generators();
    std::size_t const   m    = pp.base.degree();

    std::map<Generator, RewriteLetter> letters;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      letters.emplace(gens[j], RewriteLetter{j + 1, 1});
    }
    SchreierRewriter<CyclicCosets> const rw(std::move(letters), gens[m - 1],
                                            CyclicCosets{d});

    FiniteIndexKernelPresentation out;
    out.modulus     = d;
    out.transversal = gens[m - 1];

    // Index 1 needs no renaming: every letter is its own Schreier generator.
    auto name = [&](SchreierLetter const& l) {
      return d == 1 ? gens[l.source - 1] : projective_generator(l.coset, l.source);
    };

    std::vector<Generator> kgens;
    for (std::int64_t c = 0; c < d; ++c) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 1; j <= gens.size(); ++j) {
        SchreierLetter const l{c, j};
        row.push_back(rw.cosets().step(c, 1));
        if (rw.is_trivial(l)) {
          continue;
        }
        Generator g = name(l);
        out.dictionary.emplace(g, rw.expand(l));
        kgens.push_back(std::move(g));
      }
      out.coset_table.push_back(std::move(row));
    }

    std::vector<Word> rels;
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
      Word const& rel = p.relators()[r];
      if (rw.cosets().step(0, rw.degree(rel)) != 0) {
        throw validation_error("relator " + to_string(rel) + " has degree "
                               + std::to_string(rw.degree(rel))
                               + ", not divisible by " + std::to_string(d));
      }
      for (std::int64_t c = 0; c < d; ++c) {
        Word const w   = Word(out.transversal, c) * rel
                       * Word(out.transversal, -c);
        auto const got = rw.rewrite(w);
        if (got.end_coset != 0 || rw.expand(got.word) != w) {
          throw internal_error("finite-index rewriting failed to round-trip "
                               + to_string(w));
        }
        Word k = substitute_with(
            got.word, [&](SchreierLetter const& l) { return Word(name(l)); });
        if (!k.empty()) {
          rels.push_back(std::move(k));
          out.provenance.push_back({r, c});
        }
      }
    }
    out.presentation = Presentation(std::move(kgens), std::move(rels));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // simplify
  ////////////////////////////////////////////////////////////////////////

  struct SimplifyResult {
    Presentation presentation;
    TietzeChain  chain;
    TietzeResult result;  // dictionaries between input and output
  };

  namespace detail {

    inline std::size_t letter_count(Word const& w, Generator const& g) {
      std::size_t n = 0;
      for (auto const& s : w) {
        if (s.gen == g) {
          n += static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp);
        }
      }
      return n;
    }

    // Cyclic conjugate of r, or of r^-1, reading g^-1 w; g occurs once in r.
    inline Word isolate(Word const& r, Generator const& g) {
      auto core = cyclically_reduce(r).core;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t p = 0; p < core.size(); ++p) {
          if (core[p].gen == g && core[p].sign == -1) {
            return Word::from_letters(rotate_letters(core, p));
          }
        }
        core = invert_letters(core);
      }
      throw internal_error("isolate: " + g.name() + " not found in "
                           + to_string(r));
    }

    // Removes a relator cyclically equivalent to an earlier one; returns
    // whether anything changed.
    inline bool drop_duplicate(TietzeBuilder& b) {
      auto const& rels = b.current().relators();
      std::map<std::vector<letter<Generator>>, std::size_t> seen;
      for (std::size_t k = 0; k < rels.size(); ++k) {
        auto key = cyclic_key(rels[k]);
        auto it  = seen.find(key);
        if (it != seen.end()) {
          Word const dup = rels[k];
          Word const rep = rels[it->second];
          auto const w   = find_conjugacy(dup, rep);
          b.step(RemoveRelator{k, {{it->second, w->conjugator, w->sign}}});
          return true;
        }
        seen.emplace(std::move(key), k);
      }
      return false;
    }

    inline bool eliminate_one(TietzeBuilder& b) {
      auto const& p = b.current();
      for (std::size_t gi = p.generator_count(); gi-- > 0;) {
        Generator const          g = p.generators()[gi];
        std::optional<std::size_t> best;
        for (std::size_t k = 0; k < p.relator_count(); ++k) {
          Word const& r = p.relators()[k];
          if (letter_count(r, g) != 1) {
            continue;
          }
          if (!best || r.length() < p.relators()[*best].length()) {
            best = k;
          }
        }
        if (!best) {
          continue;
        }
        Word const old    = p.relators()[*best];
        Word const target = isolate(old, g);
        b.replace_relator(old, target);
        b.remove_generator(g, target);
        return true;
      }
      return false;
    }

  }  // namespace detail

  // To fixpoint: drop relators cyclically equivalent to an earlier one, then
  // eliminate the highest-index generator occurring exactly once in some
  // relator, using the shortest such relator (lowest index on ties).
  inline SimplifyResult simplify_with_chain(Presentation const& p) {
    TietzeBuilder b(p);
    while (detail::drop_duplicate(b) || detail::eliminate_one(b)) {
    }
    return SimplifyResult{b.current(), b.chain(), b.result()};
  }

  inline Presentation simplify(Presentation const& p) {
    return simplify_with_chain(p).presentation;
  }

}  // namespace hurwitz
