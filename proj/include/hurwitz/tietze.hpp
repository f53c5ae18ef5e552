#pragma once

// Certified Tietze transformations.
//
// Every move that changes the relator set carries a certificate: a list of
// (relator index, conjugator g, sign e) whose product of g r^e g^-1 must
// freely reduce to the relator being added or removed. apply_tietze checks
// each certificate, so any presentation produced through this module is
// machine-checked to present the same group as its input.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "cyclic.hpp"
#include "error.hpp"
#include "presentation.hpp"
#include "word.hpp"
#include "word_io.hpp"

namespace hurwitz {

  struct CertificateTerm {
    std::size_t relator;
    Word        conjugator;
    int         sign;
  };

  using Certificate = std::vector<CertificateTerm>;

  // New generator g together with the relator g^-1 * definition.
  struct AddGenerator {
    Generator generator;
    Word      definition;
  };

  // The cited relator must read g^-1 w with g absent from w; every other
  // relator is rewritten by g -> w.
  struct RemoveGenerator {
    Generator   generator;
    std::size_t defining_relator;
  };

  struct AddRelator {
    Word        relator;
    Certificate certificate;
  };

  // The certificate may not cite the relator being removed.
  struct RemoveRelator {
    std::size_t relator;
    Certificate certificate;
  };

  using TietzeStep  = std::variant<AddGenerator, RemoveGenerator, AddRelator,
                                  RemoveRelator>;
  using TietzeChain = std::vector<TietzeStep>;

  struct TietzeResult {
    Presentation presentation;
    // original generator -> word over the final generators
    std::map<Generator, Word> forward;
    // final generator -> word over the original generators
    std::map<Generator, Word> backward;
  };

  inline Word evaluate_certificate(Presentation const& p,
                                   Certificate const&  cert) {
    Word out;
    for (auto const& t : cert) {
      if (t.relator >= p.relator_count()) {
        throw validation_error("certificate cites relator "
                               + std::to_string(t.relator)
                               + " but only "
                               + std::to_string(p.relator_count())
                               + " exist");
      }
      if (t.sign != 1 && t.sign != -1) {
        throw validation_error("certificate sign must be +1 or -1");
      }
      out *= conjugate(power(p.relators()[t.relator], t.sign), t.conjugator);
    }
    return out;
  }

  namespace detail {

    inline Presentation without_relator(Presentation const& p, std::size_t k) {
      auto rels = p.relators();
      rels.erase(rels.begin() + static_cast<long>(k));
      return Presentation(p.generators(), std::move(rels));
    }

    inline void apply_step(TietzeResult&     state,
                           TietzeStep const& step,
                           std::size_t       n) {
      Presentation const& p = state.presentation;
      auto evaluate_at = [&p, n](Certificate const& cert) {
        try {
          return evaluate_certificate(p, cert);
        } catch (tietze_error const&) {
          throw;
        } catch (validation_error const& e) {
          throw tietze_error(n, e.what());
        }
      };
      std::visit(
          [&](auto const& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AddGenerator>) {
              if (p.alphabet().contains(s.generator)) {
                throw tietze_error(n, "generator '" + s.generator.name()
                                          + "' already present");
              }
              try {
                p.alphabet().check(s.definition);
              } catch (alphabet_error const& e) {
                throw tietze_error(n, e.what());
              }
              auto gens = p.generators();
              gens.push_back(s.generator);
              auto rels = p.relators();
              rels.push_back(Word(s.generator).inverse() * s.definition);
              state.backward[s.generator]
                  = substitute(s.definition, state.backward);
              state.presentation
                  = Presentation(std::move(gens), std::move(rels));
            } else if constexpr (std::is_same_v<T, RemoveGenerator>) {
              if (s.defining_relator >= p.relator_count()) {
                throw tietze_error(n, "no relator "
                                          + std::to_string(s.defining_relator));
              }
              Word const& def = p.relators()[s.defining_relator];
              auto const& syl = def.syllables();
              if (syl.front().gen != s.generator || syl.front().exp != -1) {
                throw tietze_error(n, "relator " + to_string(def)
                                          + " does not start with "
                                          + s.generator.name() + "^-1");
              }
              Word const value = Word::from_syllables(
                  std::vector(syl.begin() + 1, syl.end()));
              if (value.contains(s.generator)) {
                throw tietze_error(n, "relator " + to_string(def)
                                          + " does not isolate "
                                          + s.generator.name());
              }
              std::map<Generator, Word> image;
              std::vector<Generator>    gens;
              for (auto const& g : p.generators()) {
                if (g == s.generator) {
                  image.emplace(g, value);
                } else {
                  image.emplace(g, Word(g));
                  gens.push_back(g);
                }
              }
              std::vector<Word> rels;
              for (std::size_t k = 0; k < p.relator_count(); ++k) {
                if (k != s.defining_relator) {
                  rels.push_back(substitute(p.relators()[k], image));
                }
              }
              for (auto& [orig, w] : state.forward) {
                w = substitute(w, image);
              }
              state.backward.erase(s.generator);
              state.presentation
                  = Presentation(std::move(gens), std::move(rels));
            } else if constexpr (std::is_same_v<T, AddRelator>) {
              Word const got = evaluate_at(s.certificate);
              if (got != s.relator) {
                throw tietze_error(n, "certificate reduces to " + to_string(got)
                                          + ", expected "
                                          + to_string(s.relator));
              }
              Presentation next = p;
              next.add_relator(s.relator);
              state.presentation = std::move(next);
            } else {
              if (s.relator >= p.relator_count()) {
                throw tietze_error(n, "no relator " + std::to_string(s.relator));
              }
              for (auto const& t : s.certificate) {
                if (t.relator == s.relator) {
                  throw tietze_error(n, "certificate cites the removed relator");
                }
              }
              Word const got = evaluate_at(s.certificate);
              if (got != p.relators()[s.relator]) {
                throw tietze_error(n, "certificate reduces to " + to_string(got)
                                          + ", expected "
                                          + to_string(p.relators()[s.relator]));
              }
              state.presentation = without_relator(p, s.relator);
            }
          },
          step);
    }

    inline TietzeResult identity_result(Presentation const& p) {
      TietzeResult r{p, {}, {}};
      for (auto const& g : p.generators()) {
        r.forward.emplace(g, Word(g));
        r.backward.emplace(g, Word(g));
      }
      return r;
    }

  }  // namespace detail

  // Applies and verifies every step; throws tietze_error naming the first
  // step whose certificate fails.
  inline TietzeResult apply_tietze(Presentation const& p,
                                   TietzeChain const&  chain) {
    auto state = detail::identity_result(p);
    for (std::size_t n = 0; n < chain.size(); ++n) {
      detail::apply_step(state, chain[n], n);
    }
    return state;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates by relator value
  ////////////////////////////////////////////////////////////////////////

  // Certificate term that names its relator by value rather than position;
  // resolved against the presentation at the moment the step is taken.
  struct RelatorTerm {
    Word relator;
    Word conjugator;
    int  sign;
  };

  using WordCertificate = std::vector<RelatorTerm>;

  inline Word evaluate(WordCertificate const& cert) {
    Word out;
    for (auto const& t : cert) {
      out *= conjugate(power(t.relator, t.sign), t.conjugator);
    }
    return out;
  }

  inline WordCertificate cert_inverse(WordCertificate const& cert) {
    WordCertificate out;
    for (auto it = cert.rbegin(); it != cert.rend(); ++it) {
      out.push_back({it->relator, it->conjugator, -it->sign});
    }
    return out;
  }

  inline WordCertificate cert_conjugate(WordCertificate const& cert,
                                        Word const&            by) {
    WordCertificate out;
    for (auto const& t : cert) {
      out.push_back({t.relator, by * t.conjugator, t.sign});
    }
    return out;
  }

  inline WordCertificate cert_power(WordCertificate const& cert, int sign) {
    return sign == 1 ? cert : cert_inverse(cert);
  }

  inline WordCertificate operator+(WordCertificate a,
                                   WordCertificate const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  // Single-term certificate exhibiting `target` as a conjugate of `relator`
  // or of its inverse.
  inline WordCertificate conjugacy_certificate(Word const& target,
                                               Word const& relator) {
    auto w = find_conjugacy(target, relator);
    if (!w) {
      throw validation_error(to_string(target) + " is not a conjugate of "
                             + to_string(relator) + " or its inverse");
    }
    return {{relator, w->conjugator, w->sign}};
  }

  // Certificate whose product is s * phi(s)^-1, where phi substitutes
  // g -> g * d_g for every defined generator and d_g = g^-1 W_g is its
  // defining relator. Telescoping over prefixes P of s gives
  //   s phi(s)^-1 = prod_{p = L..1} P_{p-1} (l_p phi(l_p)^-1) P_{p-1}^-1.
  inline WordCertificate
  substitution_certificate(Word const&                      s,
                           std::map<Generator, Word> const& definitions) {
    std::vector<WordCertificate> pieces;
    Word                         prefix;
    for (auto const& l : s.letters()) {
      auto it = definitions.find(l.gen);
      if (it != definitions.end()) {
        if (l.sign == 1) {
          pieces.push_back({{it->second, prefix * Word(l.gen), -1}});
        } else {
          pieces.push_back({{it->second, prefix, 1}});
        }
      }
      prefix.push_back(l.gen, l.sign);
    }
    WordCertificate out;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
      out = out + *it;
    }
    return out;
  }

  // The substitution phi used by substitution_certificate.
  inline Word substitute_definitions(
      Word const&                      s,
      std::map<Generator, Word> const& definitions) {
    return substitute_with(s, [&definitions](Generator const& g) {
      auto it = definitions.find(g);
      return it == definitions.end() ? Word(g) : Word(g) * it->second;
    });
  }

  // Certificate for [y, u] built from certificates for [y, g] per letter g
  // of u, via [y, ab] = [y, a] a [y, b] a^-1 and [y, g^-1] = g^-1 [y, g]^-1 g.
  inline WordCertificate commutator_certificate(
      Word const&                                          y,
      Word const&                                          u,
      std::function<WordCertificate(Generator const&)> const& basic) {
    WordCertificate out;
    Word            prefix;
    for (auto const& l : u.letters()) {
      if (!commutator(y, Word(l.gen)).empty()) {
        if (l.sign == 1) {
          out = out + cert_conjugate(basic(l.gen), prefix);
        } else {
          out = out
                + cert_conjugate(cert_inverse(basic(l.gen)),
                                 prefix * Word(l.gen, -1));
        }
      }
      prefix.push_back(l.gen, l.sign);
    }
    if (evaluate(out) != commutator(y, u)) {
      throw internal_error("commutator certificate failed for [" + to_string(y)
                           + ", " + to_string(u) + "]");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // TietzeBuilder
  ////////////////////////////////////////////////////////////////////////

  // Records a chain while applying (and so verifying) each step against the
  // running presentation.
  class TietzeBuilder {
   public:
    explicit TietzeBuilder(Presentation start)
        : _start(start), _state(detail::identity_result(start)) {}

    [[nodiscard]] Presentation const& current() const noexcept {
      return _state.presentation;
    }
    [[nodiscard]] Presentation const& start() const noexcept { return _start; }
    [[nodiscard]] TietzeChain const& chain() const noexcept { return _chain; }
    [[nodiscard]] TietzeResult const& result() const noexcept {
      return _state;
    }

    // Position of the first relator equal to r, skipping `exclude`.
    [[nodiscard]] std::optional<std::size_t>
    find(Word const& r, std::optional<std::size_t> exclude = {}) const {
      auto const& rels = current().relators();
      for (std::size_t k = 0; k < rels.size(); ++k) {
        if (rels[k] == r && (!exclude || *exclude != k)) {
          return k;
        }
      }
      return std::nullopt;
    }

    [[nodiscard]] Certificate
    resolve(WordCertificate const&    cert,
            std::optional<std::size_t> exclude = {}) const {
      Certificate out;
      for (auto const& t : cert) {
        auto k = find(t.relator, exclude);
        if (!k) {
          throw validation_error("certificate cites " + to_string(t.relator)
                                 + ", which is not a relator");
        }
        out.push_back({*k, t.conjugator, t.sign});
      }
      return out;
    }

    void step(TietzeStep s) {
      detail::apply_step(_state, s, _chain.size());
      _chain.push_back(std::move(s));
    }

    void add_generator(Generator g, Word definition) {
      step(AddGenerator{std::move(g), std::move(definition)});
    }

    // Uses the first relator of the form g^-1 w.
    void remove_generator(Generator const& g) {
      auto const& rels = current().relators();
      for (std::size_t k = 0; k < rels.size(); ++k) {
        auto const& syl = rels[k].syllables();
        if (syl.front().gen == g && syl.front().exp == -1
            && std::none_of(syl.begin() + 1, syl.end(),
                            [&g](auto const& x) { return x.gen == g; })) {
          step(RemoveGenerator{g, k});
          return;
        }
      }
      throw validation_error("no relator defines " + g.name());
    }

    void remove_generator(Generator const& g, Word const& defining) {
      auto k = find(defining);
      if (!k) {
        throw validation_error(to_string(defining) + " is not a relator");
      }
      step(RemoveGenerator{g, *k});
    }

    void add_relator(Word r, WordCertificate const& cert) {
      step(AddRelator{std::move(r), resolve(cert)});
    }

    void remove_relator(Word const& r, WordCertificate const& cert) {
      auto k = find(r);
      if (!k) {
        throw validation_error(to_string(r) + " is not a relator");
      }
      step(RemoveRelator{*k, resolve(cert, k)});
    }

    // Replaces relator `old` by the conjugate (of it or its inverse) `r`.
    void replace_relator(Word const& old, Word r) {
      if (old == r) {
        return;
      }
      add_relator(r, conjugacy_certificate(r, old));
      remove_relator(old, conjugacy_certificate(old, r));
    }

   private:
    Presentation _start;
    TietzeResult _state;
    TietzeChain  _chain;
  };

  ////////////////////////////////////////////////////////////////////////
  // Reversal
  ////////////////////////////////////////////////////////////////////////

  // A chain taking apply_tietze(p, chain).presentation back to p, up to the
  // order of generators and relators.
  inline TietzeChain invert_chain(Presentation const& p,
                                  TietzeChain const&  chain) {
    std::vector<Presentation> states{p};
    {
      auto state = detail::identity_result(p);
      for (std::size_t n = 0; n < chain.size(); ++n) {
        detail::apply_step(state, chain[n], n);
        states.push_back(state.presentation);
      }
    }
    auto by_value = [](Presentation const& at, Certificate const& cert) {
      WordCertificate out;
      for (auto const& t : cert) {
        out.push_back({at.relators().at(t.relator), t.conjugator, t.sign});
      }
      return out;
    };

    TietzeBuilder b(states.back());
    for (std::size_t n = chain.size(); n-- > 0;) {
      Presentation const& before = states[n];
      std::visit(
          [&](auto const& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AddGenerator>) {
              b.remove_generator(s.generator);
            } else if constexpr (std::is_same_v<T, RemoveGenerator>) {
              Word const& def = before.relators()[s.defining_relator];
              Word const  value
                  = Word(s.generator) * def;  // g^-1 w  =>  w
              b.add_generator(s.generator, value);
              std::map<Generator, Word> defs{{s.generator, def}};
              for (std::size_t k = 0; k < before.relator_count(); ++k) {
                Word const& q = before.relators()[k];
                if (k == s.defining_relator || !q.contains(s.generator)) {
                  continue;
                }
                Word const image = substitute_definitions(q, defs);
                auto const sub   = substitution_certificate(q, defs);
                if (image.empty()) {
                  b.add_relator(q, sub);
                } else {
                  b.add_relator(q, sub + WordCertificate{{image, Word{}, 1}});
                  b.remove_relator(image,
                                   cert_inverse(sub)
                                       + WordCertificate{{q, Word{}, 1}});
                }
              }
            } else if constexpr (std::is_same_v<T, AddRelator>) {
              if (!s.relator.empty()) {
                b.remove_relator(s.relator, by_value(before, s.certificate));
              }
            } else {
              b.add_relator(before.relators()[s.relator],
                            by_value(before, s.certificate));
            }
          },
          chain[n]);
    }
    return b.chain();
  }

}  // namespace hurwitz
