#pragma once

// Finite presentations, their text grammar, and the C-group / Hurwitz shape
// checks.
//
//   presentation := "<" [gens] "|" [rels] ">"
//   gens         := gen ("," gen)*        ("x1, ..., x5" expands a range)
//   rels         := rel ("," rel)*
//   rel          := word | word "=" word  (stored as lhs * rhs^-1)

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "error.hpp"
#include "word.hpp"
#include "word_io.hpp"

namespace hurwitz {

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  class Presentation {
   public:
    Presentation() = default;

    // Empty relators are dropped; foreign generators throw alphabet_error.
    Presentation(std::vector<Generator> generators, std::vector<Word> relators)
        : _alphabet(std::move(generators)) {
      for (auto& r : relators) {
        add_relator(std::move(r));
      }
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<Generator> const& generators() const noexcept {
      return _alphabet.generators();
    }
    [[nodiscard]] std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    [[nodiscard]] std::size_t generator_count() const noexcept {
      return _alphabet.size();
    }
    [[nodiscard]] std::size_t relator_count() const noexcept {
      return _relators.size();
    }

    void add_relator(Word r) {
      _alphabet.check(r);
      if (!r.empty()) {
        _relators.push_back(std::move(r));
      }
    }

    friend bool operator==(Presentation const& a, Presentation const& b) {
      return a.generators() == b.generators() && a._relators == b._relators;
    }

   private:
    Alphabet          _alphabet;
    std::vector<Word> _relators;
  };

  // Same generator set and same relator multiset, ignoring order.
  inline bool equal_up_to_order(Presentation const& a, Presentation const& b) {
    auto ga = a.generators();
    auto gb = b.generators();
    auto ra = a.relators();
    auto rb = b.relators();
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ga == gb && ra == rb;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing and printing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Splits "x12" into ("x", 12); nullopt when there is no numeric suffix.
    inline std::optional<std::pair<std::string, std::int64_t>>
    numbered_name(std::string const& s) {
      std::size_t k = s.size();
      while (k > 0 && s[k - 1] >= '0' && s[k - 1] <= '9') {
        --k;
      }
      if (k == s.size() || k == 0 || s.size() - k > 9) {
        return std::nullopt;
      }
      return std::make_pair(s.substr(0, k), std::stoll(s.substr(k)));
    }

    inline std::vector<Generator> parse_generators(text_cursor& in) {
      std::vector<Generator> gens;
      if (in.peek() == '|') {
        return gens;
      }
      while (true) {
        if (in.starts_with("...")) {
          if (gens.empty()) {
            in.fail("range '...' needs a first generator");
          }
          in.advance(3);
          in.expect(',');
          auto const lo = numbered_name(gens.back().name());
          auto const hi = numbered_name(in.identifier());
          if (!lo || !hi || lo->first != hi->first || hi->second <= lo->second) {
            in.fail("malformed generator range");
          }
          for (auto k = lo->second + 1; k <= hi->second; ++k) {
            gens.emplace_back(lo->first + std::to_string(k));
          }
        } else {
          gens.emplace_back(in.identifier());
        }
        if (!in.accept(',')) {
          break;
        }
      }
      return gens;
    }

  }  // namespace detail

  inline Presentation parse_presentation(std::string_view text) {
    text_cursor in(text);
    in.expect('<');
    std::size_t const gline = in.line();
    std::size_t const gcol  = in.column();
    auto              gens  = detail::parse_generators(in);
    Alphabet          alphabet;
    try {
      alphabet = Alphabet(gens);
    } catch (error const& e) {
      throw parse_error(e.what(), gline, gcol);
    }
    in.expect('|');
    std::vector<Word> relators;
    if (in.peek() != '>') {
      while (true) {
        Word lhs = detail::parse_word(in, &alphabet);
        if (in.accept('=')) {
          Word rhs = detail::parse_word(in, &alphabet);
          lhs *= rhs.inverse();
        }
        relators.push_back(std::move(lhs));
        if (!in.accept(',')) {
          break;
        }
      }
    }
    in.expect('>');
    if (!in.at_end()) {
      in.fail("unexpected trailing input after '>'");
    }
    return Presentation(std::move(gens), std::move(relators));
  }

  // Multi-line rendering in the grammar accepted by parse_presentation.
  inline std::string to_text(Presentation const& p) {
    std::string out = "<";
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      out += (i == 0 ? " " : ", ") + p.generators()[i].name();
    }
    out += " |";
    if (p.relators().empty()) {
      return out + " >\n";
    }
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
      out += "\n  " + to_string(p.relators()[i]);
      if (i + 1 < p.relator_count()) {
        out += ",";
      }
    }
    return out + "\n>\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // C-presentations
  ////////////////////////////////////////////////////////////////////////

  // The relation x_i = w^-1 x_j w, i.e. the relator x_i^-1 w^-1 x_j w.
  // Indices are 0-based positions in the alphabet.
  struct CRelation {
    std::size_t i;
    std::size_t j;
    Word        w;

    friend bool operator==(CRelation const&, CRelation const&) = default;
  };

  inline Word relator_of(CRelation const& c, Alphabet const& alphabet) {
    Word const xi(alphabet[c.i]);
    Word const xj(alphabet[c.j]);
    return xi.inverse() * c.w.inverse() * xj * c.w;
  }

  class CPresentation {
   public:
    CPresentation(Presentation base, std::vector<CRelation> crelations)
        : _base(std::move(base)), _crel(std::move(crelations)) {
      if (_crel.size() != _base.relator_count()) {
        throw internal_error("C-relations and relators out of bijection");
      }
    }

    [[nodiscard]] Presentation const& base() const noexcept { return _base; }
    [[nodiscard]] std::vector<CRelation> const& crelations() const noexcept {
      return _crel;
    }

   private:
    Presentation           _base;
    std::vector<CRelation> _crel;
  };

  namespace detail {

    // All (i, j, w) with x_i^-1 w^-1 x_j w cyclically equal to `core`, read
    // off the rotation that starts at a negative letter and is a
    // palindrome-like v^-1 x_j v afterwards.
    inline void collect_c_matches(std::vector<letter<Generator>> const& core,
                                  Alphabet const&                       alphabet,
                                  std::vector<CRelation>&               out) {
      std::size_t const len = core.size();
      if (len < 2 || len % 2 != 0) {
        return;
      }
      std::size_t const half = (len - 2) / 2;  // |v|
      for (std::size_t p = 0; p < len; ++p) {
        auto const s = rotate_letters(core, p);
        if (s[0].sign != -1 || s[1 + half].sign != 1) {
          continue;
        }
        // s = x_i^-1 . v^-1 . x_j . v with v = s[2 + half ..]
        bool ok = true;
        for (std::size_t q = 0; q < half && ok; ++q) {
          ok = s[1 + q] == s[len - 1 - q].inverse();
        }
        if (!ok) {
          continue;
        }
        Word v;
        for (std::size_t q = 2 + half; q < len; ++q) {
          v.push_back(s[q].gen, s[q].sign);
        }
        out.push_back({alphabet.index(s[0].gen), alphabet.index(s[1 + half].gen),
                       std::move(v)});
      }
    }

  }  // namespace detail

  // Best C-shape match of a single relator under the tie-break: smallest i,
  // then smallest j, then shortest w, then lexicographically least w.
  inline std::optional<CRelation> match_c_relator(Word const&     relator,
                                                  Alphabet const& alphabet) {
    auto const             core = cyclically_reduce(relator).core;
    std::vector<CRelation> found;
    detail::collect_c_matches(core, alphabet, found);
    detail::collect_c_matches(invert_letters(core), alphabet, found);
    if (found.empty()) {
      return std::nullopt;
    }
    return *std::min_element(
        found.begin(), found.end(), [](CRelation const& a, CRelation const& b) {
          auto key = [](CRelation const& c) {
            return std::make_tuple(c.i, c.j, c.w.length());
          };
          if (key(a) != key(b)) {
            return key(a) < key(b);
          }
          return a.w < b.w;
        });
  }

  inline CPresentation validate_c(Presentation const& p) {
    std::vector<CRelation>   crel;
    std::vector<std::string> failures;
    for (std::size_t k = 0; k < p.relator_count(); ++k) {
      auto m = match_c_relator(p.relators()[k], p.alphabet());
      if (m) {
        crel.push_back(std::move(*m));
      } else {
        failures.push_back("relator " + std::to_string(k + 1) + " ("
                           + to_string(p.relators()[k])
                           + ") is not of the form x_i^-1 w^-1 x_j w");
      }
    }
    if (!failures.empty()) {
      throw validation_error("not a C-presentation", std::move(failures));
    }
    return CPresentation(p, std::move(crel));
  }

  ////////////////////////////////////////////////////////////////////////
  // Hurwitz presentations
  ////////////////////////////////////////////////////////////////////////

  class HurwitzPresentation {
   public:
    HurwitzPresentation(CPresentation                           base,
                        std::size_t                             degree,
                        std::vector<std::optional<std::size_t>> centrality)
        : _base(std::move(base)),
          _degree(degree),
          _centrality(std::move(centrality)) {
      std::vector<bool> used(presentation().relator_count(), false);
      for (auto const& c : _centrality) {
        if (c) {
          used.at(*c) = true;
        }
      }
      for (std::size_t k = 0; k < used.size(); ++k) {
        if (!used[k]) {
          _extra.push_back(k);
        }
      }
    }

    [[nodiscard]] CPresentation const& cpresentation() const noexcept {
      return _base;
    }
    [[nodiscard]] Presentation const& presentation() const noexcept {
      return _base.base();
    }
    [[nodiscard]] std::size_t degree() const noexcept { return _degree; }

    // Index of the relator certifying [x_1...x_m, x_i]; nullopt when that
    // commutator is freely trivial (m = 1).
    [[nodiscard]] std::vector<std::optional<std::size_t>> const&
    centrality() const noexcept {
      return _centrality;
    }

    // Indices of the relators that are not centrality relators (the set R).
    [[nodiscard]] std::vector<std::size_t> const& extra() const noexcept {
      return _extra;
    }

    [[nodiscard]] Word central_element() const {
      auto const& g = presentation().generators();
      return product_of({g.begin(), g.begin() + static_cast<long>(_degree)});
    }

   private:
    CPresentation                           _base;
    std::size_t                             _degree;
    std::vector<std::optional<std::size_t>> _centrality;
    std::vector<std::size_t>                _extra;
  };

  // Syntactic check that [x_1...x_m, x_i] is among the relators (up to
  // cyclic permutation and inversion) for every i in 1..m.
  inline HurwitzPresentation validate_hurwitz(CPresentation const& cp,
                                              std::size_t          degree) {
    auto const& p = cp.base();
    if (degree == 0 || degree > p.generator_count()) {
      throw validation_error("degree " + std::to_string(degree)
                             + " out of range 1.."
                             + std::to_string(p.generator_count()));
    }
    Word const central
        = product_of({p.generators().begin(),
                      p.generators().begin() + static_cast<long>(degree)});
    std::vector<std::optional<std::size_t>> found(degree);
    std::vector<bool>                       used(p.relator_count(), false);
    std::vector<std::string>                missing;
    std::vector<std::vector<letter<Generator>>> keys;
    keys.reserve(p.relator_count());
    for (auto const& r : p.relators()) {
      keys.push_back(cyclic_key(r));
    }
    for (std::size_t i = 0; i < degree; ++i) {
      Word const target = commutator(central, Word(p.generators()[i]));
      if (target.empty()) {
        continue;
      }
      auto const key = cyclic_key(target);
      for (std::size_t k = 0; k < keys.size(); ++k) {
        if (!used[k] && keys[k] == key) {
          found[i] = k;
          used[k]  = true;
          break;
        }
      }
      if (!found[i]) {
        missing.push_back("missing centrality relator ["
                          + to_string(central) + ", "
                          + p.generators()[i].name() + "]");
      }
    }
    if (!missing.empty()) {
      throw validation_error("not a Hurwitz presentation of degree "
                                 + std::to_string(degree),
                             std::move(missing));
    }
    return HurwitzPresentation(cp, degree, std::move(found));
  }

  ////////////////////////////////////////////////////////////////////////
  // The C-graph
  ////////////////////////////////////////////////////////////////////////

  struct CGraph {
    std::size_t                                      vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
  };

  inline CGraph c_graph(CPresentation const& cp) {
    CGraph g;
    g.vertices = cp.base().generator_count();
    for (auto const& c : cp.crelations()) {
      g.edges.emplace_back(std::min(c.i, c.j), std::max(c.i, c.j));
    }
    return g;
  }

  // Connected and acyclic; loops and parallel edges are cycles.
  inline bool is_tree(CGraph const& g) {
    if (g.vertices == 0) {
      return false;
    }
    if (g.edges.size() + 1 != g.vertices) {
      return false;
    }
    std::vector<std::size_t> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v         = parent[v];
      }
      return v;
    };
    for (auto const& [a, b] : g.edges) {
      auto ra = find(a);
      auto rb = find(b);
      if (ra == rb) {
        return false;
      }
      parent[ra] = rb;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  struct DirectProduct {
    Presentation                presentation;
    std::map<Generator, Generator> renamed;  // second factor: old -> new
  };

  // P1 x P2: generators and relators of both factors plus [g2, g1] for
  // every g1 of P1 and g2 of P2. Clashing names in P2 get a "_2" suffix.
  inline DirectProduct direct_product(Presentation const& p1,
                                      Presentation const& p2) {
    DirectProduct          out;
    std::vector<Generator> gens = p1.generators();
    std::map<Generator, Word> rename;
    std::vector<Generator> second;
    for (auto const& g : p2.generators()) {
      std::string name = g.name();
      auto taken = [&](std::string const& n) {
        return p1.alphabet().contains(Generator(n))
               || p2.alphabet().contains(Generator(n))
               || std::find(gens.begin(), gens.end(), Generator(n))
                      != gens.end();
      };
      if (p1.alphabet().contains(g)) {
        do {
          name += "_2";
        } while (taken(name));
        out.renamed.emplace(g, Generator(name));
      }
      gens.emplace_back(name);
      second.emplace_back(name);
      rename.emplace(g, Word(Generator(name)));
    }
    std::vector<Word> relators = p1.relators();
    for (auto const& r : p2.relators()) {
      relators.push_back(substitute(r, rename));
    }
    for (auto const& g1 : p1.generators()) {
      for (auto const& g2 : second) {
        relators.push_back(commutator(Word(g2), Word(g1)));
      }
    }
    out.presentation = Presentation(std::move(gens), std::move(relators));
    return out;
  }

  // Adds generators x_{m+1}, ..., x_{total} with relations x_i = x_{i+m}
  // (cyclically through the first m generators). The result presents the
  // same group, and stays a C-presentation since x_i = x_j is a C-relation.
  inline Presentation pad_generators(Presentation const& p, std::size_t total) {
    std::size_t const m = p.generator_count();
    if (m == 0 || total < m) {
      throw validation_error("cannot pad " + std::to_string(m)
                             + " generators to " + std::to_string(total));
    }
    auto              gens     = p.generators();
    std::vector<Word> relators = p.relators();
    auto const        numbered = detail::numbered_name(gens.front().name());
    std::string const stem     = numbered ? numbered->first : "x";
    for (std::size_t k = m; k < total; ++k) {
      Generator fresh(stem + std::to_string(k + 1));
      if (p.alphabet().contains(fresh)) {
        throw validation_error("padding generator '" + fresh.name()
                               + "' already exists");
      }
      gens.push_back(fresh);
      relators.push_back(Word(gens[k - m]) * Word(fresh).inverse());
    }
    return Presentation(std::move(gens), std::move(relators));
  }

}  // namespace hurwitz
