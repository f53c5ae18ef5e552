#pragma once

// Finite presentation of N = ker(nu) for a Hurwitz C-group G of degree n,
// where nu sends every C-generator to 1 in Z.
//
// Pipeline:
//   1. hurwitz_normalize: introduce y = x_1...x_n, make y central, and
//      eliminate x_1 = y (x_2...x_n)^-1 (all certified Tietze moves);
//   2. schreier_rewrite: Reidemeister rewriting over the transversal
//      {x_n^k : k in Z}, giving letters a_{k,j} = x_n^k x_j x_n^-(k+1) and
//      a_{k,y} = x_n^k y x_n^-(k+n);
//   3. normalize_indices: a_{k,y} -> a0 and
//      a_{i+qn,j} -> a0^-q a_{i,j} a0^q, which consumes every relator coming
//      from the centrality relations;
//   4. derive_kernel: conjugates x_n^j r x_n^-j for r in R-bar and
//      j = 0..n-1 only; the other shifts are conjugates of these by powers
//      of a0.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "presentation.hpp"
#include "reidemeister.hpp"
#include "tietze.hpp"
#include "word.hpp"
#include "word_io.hpp"

namespace hurwitz {

  ////////////////////////////////////////////////////////////////////////
  // Normalization
  ////////////////////////////////////////////////////////////////////////

  struct NormalizedHurwitz {
    std::size_t            n = 0;
    std::vector<Generator> originals;  // x_1, ..., x_n
    Generator              y;
    // generators x_2..x_n, y; relators [y, x_j] (j = 2..n) then R-bar
    Presentation           presentation;
    std::vector<Word>      rbar;
    std::vector<std::size_t> rbar_source;  // relator index in the input
    TietzeChain            chain;          // from the input presentation
    Presentation           chain_result;   // what the chain produces

    [[nodiscard]] Generator const& last() const { return originals.back(); }

    [[nodiscard]] std::map<Generator, std::int64_t> weights() const {
      std::map<Generator, std::int64_t> w;
      for (std::size_t j = 1; j < n; ++j) {
        w.emplace(originals[j], 1);
      }
      w.emplace(y, static_cast<std::int64_t>(n));
      return w;
    }
  };

  namespace detail {

    inline Generator fresh_generator(Alphabet const& alphabet,
                                     std::string     name) {
      while (alphabet.contains(Generator(name))) {
        name += "_";
      }
      return Generator(name);
    }

  }  // namespace detail

  inline NormalizedHurwitz hurwitz_normalize(HurwitzPresentation const& hp) {
    Presentation const& p = hp.presentation();
    std::size_t const   n = hp.degree();
    if (n != p.generator_count()) {
      throw validation_error(
          "kernel derivation needs the degree to equal the generator count ("
          + std::to_string(n) + " != " + std::to_string(p.generator_count())
          + ")");
    }
    NormalizedHurwitz out;
    out.n         = n;
    out.originals = p.generators();
    out.y         = detail::fresh_generator(p.alphabet(), "y");

    auto const& x = out.originals;
    Word const  Y(out.y);
    Word const  c = hp.central_element();
    Word const  u = product_of({x.begin() + 1, x.end()});  // x_2 ... x_n
    Word const  rho = Y.inverse() * c;                      // y^-1 x_1...x_n

    TietzeBuilder b(p);
    b.add_generator(out.y, c);

    // [y, x_j] = (y c^-1) [c, x_j] (x_j c y^-1 x_j^-1)
    std::vector<Word> kc(n);
    for (std::size_t j = 0; j < n; ++j) {
      Word const xj(x[j]);
      kc[j] = commutator(c, xj);
      WordCertificate cert{{rho, Y, -1}};
      if (hp.centrality()[j]) {
        cert = cert
               + conjugacy_certificate(kc[j],
                                       p.relators()[*hp.centrality()[j]]);
      }
      cert = cert + WordCertificate{{rho, xj * Y, 1}};
      b.add_relator(commutator(Y, xj), cert);
    }
    // and back: [c, x_j] = (c y^-1) [y, x_j] (x_j y c^-1 x_j^-1)
    for (std::size_t j = 0; j < n; ++j) {
      if (!hp.centrality()[j]) {
        continue;
      }
      Word const      xj(x[j]);
      Word const&     z = p.relators()[*hp.centrality()[j]];
      WordCertificate kcert{{rho, Y, 1}, {commutator(Y, xj), Word{}, 1},
                            {rho, xj * Y, -1}};
      auto const      back = find_conjugacy(z, kc[j]);
      if (!back) {
        throw internal_error("centrality relator lost its conjugacy witness");
      }
      b.remove_relator(z, cert_conjugate(cert_power(kcert, back->sign),
                                         back->conjugator));
    }

    // x_1 = y u^-1 replaces y = x_1 u
    Word const sigma = Word(x[0]).inverse() * Y * u.inverse();
    b.add_relator(sigma, {{rho, u, -1}});
    b.remove_relator(rho, {{sigma, u.inverse(), -1}});
    b.remove_generator(x[0], sigma);

    // [y, x_1] became y [y, u^-1] y^-1, a consequence of [y, x_j], j >= 2
    Word const tau
        = substitute_with(commutator(Y, Word(x[0])), [&](Generator const& g) {
            return g == x[0] ? Y * u.inverse() : Word(g);
          });
    if (!tau.empty()) {
      auto const basic = [&Y](Generator const& g) -> WordCertificate {
        return {{commutator(Y, Word(g)), Word{}, 1}};
      };
      b.remove_relator(
          tau, cert_conjugate(commutator_certificate(Y, u.inverse(), basic), Y));
    }

    std::map<Generator, Word> eliminate{{x[0], Y * u.inverse()}};
    for (std::size_t j = 1; j < n; ++j) {
      eliminate.emplace(x[j], Word(x[j]));
    }
    std::vector<Generator> gens(x.begin() + 1, x.end());
    gens.push_back(out.y);
    std::vector<Word> rels;
    for (std::size_t j = 1; j < n; ++j) {
      rels.push_back(commutator(Y, Word(x[j])));
    }
    for (std::size_t k : hp.extra()) {
      Word r = substitute(p.relators()[k], eliminate);
      if (!r.empty()) {
        out.rbar.push_back(r);
        out.rbar_source.push_back(k);
        rels.push_back(std::move(r));
      }
    }
    out.presentation = Presentation(std::move(gens), std::move(rels));
    out.chain        = b.chain();
    out.chain_result = b.current();
    if (!equal_up_to_order(out.presentation, out.chain_result)) {
      throw internal_error("hurwitz_normalize: Tietze chain result differs");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting over {x_n^k}
  ////////////////////////////////////////////////////////////////////////

  // Source label of the central generator y in Schreier letters.
  inline constexpr std::size_t kCentralSource = 0;

  // Rewriter for the normalized alphabet {x_2..x_n, y}; x_j has source j
  // (1-based), y has source kCentralSource.
  inline SchreierRewriter<IntegerCosets>
  affine_rewriter(std::vector<Generator> const& originals, Generator const& y) {
    std::size_t const                  n = originals.size();
    std::map<Generator, RewriteLetter> letters;
    for (std::size_t j = 2; j <= n; ++j) {
      letters.emplace(originals[j - 1], RewriteLetter{j, 1});
    }
    letters.emplace(y, RewriteLetter{kCentralSource,
                                     static_cast<std::int64_t>(n)});
    return SchreierRewriter<IntegerCosets>(std::move(letters), originals.back(),
                                           IntegerCosets{});
  }

  inline SchreierRewriter<IntegerCosets>
  affine_rewriter(NormalizedHurwitz const& nh) {
    return affine_rewriter(nh.originals, nh.y);
  }

  // Requires nu(w) = 0; the result expands back to exactly w.
  inline SchreierWord
  schreier_rewrite(Word const& w, SchreierRewriter<IntegerCosets> const& rw) {
    std::int64_t const d = rw.degree(w);
    if (d != 0) {
      throw validation_error("word " + to_string(w) + " has degree "
                             + std::to_string(d) + ", expected 0");
    }
    return rw.rewrite(w).word;
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernel generators
  ////////////////////////////////////////////////////////////////////////

  inline Generator kernel_a0() { return Generator("a0"); }

  inline Generator kernel_generator(std::int64_t i, std::size_t j) {
    return Generator("a_" + std::to_string(i) + "_" + std::to_string(j));
  }

  inline std::string to_string(SchreierLetter const& l) {
    std::string src
        = l.source == kCentralSource ? "y" : std::to_string(l.source);
    return "a(" + std::to_string(l.coset) + "," + src + ")";
  }

  inline std::string to_string(SchreierWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : w) {
      if (!out.empty()) {
        out += '*';
      }
      out += to_string(s.gen);
      if (s.exp != 1) {
        out += "^" + std::to_string(s.exp);
      }
    }
    return out;
  }

  inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
      --q;
    }
    return q;
  }

  // a_{k,y} -> a0, a_{i+qn,j} -> a0^-q a_{i,j} a0^q with 0 <= i < n.
  inline Word normalize_indices(SchreierWord const& w, std::size_t n) {
    auto const sn = static_cast<std::int64_t>(n);
    return substitute_with(w, [sn](SchreierLetter const& l) {
      if (l.source == kCentralSource) {
        return Word(kernel_a0());
      }
      std::int64_t const q = floor_div(l.coset, sn);
      std::int64_t const i = l.coset - q * sn;
      Word const         a0(kernel_a0());
      return power(a0, -q) * Word(kernel_generator(i, l.source)) * power(a0, q);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // derive_kernel
  ////////////////////////////////////////////////////////////////////////

  struct KernelRelatorSource {
    std::size_t  rbar_index;   // position in NormalizedHurwitz::rbar
    std::size_t  input_index;  // relator index in the input presentation
    std::int64_t shift;        // j in x_n^j r x_n^-j
  };

  struct KernelPresentation {
    Presentation                     presentation;
    std::vector<KernelRelatorSource> provenance;
    // kernel generator -> word over {x_2..x_n, y}
    std::map<Generator, Word>        dictionary;
    NormalizedHurwitz                normalized;
    std::vector<std::string>         notices;
  };

  struct KernelOptions {
    // Also rewrite the conjugates of [y, x_j] and require them to vanish.
    bool strict = false;
  };

  inline KernelPresentation derive_kernel(HurwitzPresentation const& hp,
                                          KernelOptions const& opts = {}) {
    KernelPresentation out;
    if (hp.degree() != hp.presentation().generator_count()) {
      throw validation_error(
          "kernel derivation needs the degree to equal the generator count");
    }
    out.normalized = hurwitz_normalize(hp);
    std::size_t const n  = hp.degree();
    auto const        sn = static_cast<std::int64_t>(n);
    if (n == 1) {
      out.notices.emplace_back(
          "degree 1: nu is an isomorphism onto Z, so the kernel is trivial");
      return out;
    }
    auto const&       nh = out.normalized;
    auto const        rw = affine_rewriter(nh);
    Generator const&  xn = nh.last();

    std::vector<Generator> gens{kernel_a0()};
    out.dictionary.emplace(kernel_a0(), Word(nh.y) * Word(xn, -sn));
    for (std::int64_t i = 0; i < sn; ++i) {
      for (std::size_t j = 2; j < n; ++j) {
        Generator g = kernel_generator(i, j);
        out.dictionary.emplace(g, rw.expand(SchreierLetter{i, j}));
        gens.push_back(std::move(g));
      }
    }

    auto rewrite_checked = [&](Word const& w) {
      SchreierWord const sw = schreier_rewrite(w, rw);
      if (rw.expand(sw) != w) {
        throw internal_error("Schreier rewriting failed to round-trip "
                             + to_string(w));
      }
      return normalize_indices(sw, n);
    };

    std::vector<Word> rels;
    for (std::size_t r = 0; r < nh.rbar.size(); ++r) {
      for (std::int64_t j = 0; j < sn; ++j) {
        Word const w = Word(xn, j) * nh.rbar[r] * Word(xn, -j);
        Word       k = rewrite_checked(w);
        if (!k.empty()) {
          rels.push_back(std::move(k));
          out.provenance.push_back({r, nh.rbar_source[r], j});
        }
      }
    }
    if (opts.strict) {
      for (std::size_t j = 2; j <= n; ++j) {
        Word const cj = commutator(Word(nh.y), Word(nh.originals[j - 1]));
        for (std::int64_t k = 0; k < sn; ++k) {
          Word const got = rewrite_checked(Word(xn, k) * cj * Word(xn, -k));
          if (!got.empty()) {
            throw internal_error("centrality relator [y, x" + std::to_string(j)
                                 + "] did not normalize away: "
                                 + to_string(got));
          }
        }
      }
    }
    out.presentation = Presentation(std::move(gens), std::move(rels));
    return out;
  }

}  // namespace hurwitz
