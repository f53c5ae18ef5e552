#pragma once

// Baumslag-Solitar groups BS(m, n) = < a, t | t^-1 a^m t = a^n >: Britton
// reduction (word problem), the endomorphism a -> a^2, t -> t of BS(2, 3),
// and a checked proof that it is surjective but not injective.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "report.hpp"
#include "word.hpp"
#include "word_io.hpp"

namespace hurwitz {

  struct BSParams {
    std::int64_t m = 2;
    std::int64_t n = 3;
  };

  // a^{k_0} t^{e_1} a^{k_1} ... t^{e_l} a^{k_l}
  struct BrittonForm {
    std::vector<std::int64_t> powers{0};  // k_0..k_l
    std::vector<int>          signs;      // e_1..e_l

    [[nodiscard]] std::size_t t_length() const noexcept { return signs.size(); }
    [[nodiscard]] bool        is_trivial() const noexcept {
      return signs.empty() && powers.front() == 0;
    }

    [[nodiscard]] Word to_word(Generator const& a, Generator const& t) const {
      Word w(a, powers[0]);
      for (std::size_t i = 0; i < signs.size(); ++i) {
        w.push_back(t, signs[i]);
        w.push_back(a, powers[i + 1]);
      }
      return w;
    }

    friend bool operator==(BrittonForm const&, BrittonForm const&) = default;
  };

  // Picks one of the currently applicable pinch positions; the default is
  // the leftmost.
  using PinchChooser
      = std::function<std::size_t(std::vector<std::size_t> const&)>;

  namespace detail {

    inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_add_overflow(x, y, &r)) {
        throw error("Britton reduction: exponent overflow");
      }
      return r;
    }

    inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_mul_overflow(x, y, &r)) {
        throw error("Britton reduction: exponent overflow");
      }
      return r;
    }

    // Pinches at interior power i: t^-1 a^{mj} t or t a^{nj} t^-1.
    inline bool is_pinch(BrittonForm const& f, std::size_t i, BSParams p) {
      int const         left  = f.signs[i - 1];
      int const         right = f.signs[i];
      std::int64_t const k    = f.powers[i];
      if (left == -1 && right == 1) {
        return k % p.m == 0;
      }
      if (left == 1 && right == -1) {
        return k % p.n == 0;
      }
      return false;
    }

    inline void apply_pinch(BrittonForm& f, std::size_t i, BSParams p) {
      std::int64_t const k  = f.powers[i];
      std::int64_t const to = f.signs[i - 1] == -1 ? checked_mul(k / p.m, p.n)
                                                   : checked_mul(k / p.n, p.m);
      std::int64_t const merged
          = checked_add(checked_add(f.powers[i - 1], to), f.powers[i + 1]);
      f.powers[i - 1] = merged;
      f.powers.erase(f.powers.begin() + static_cast<long>(i),
                     f.powers.begin() + static_cast<long>(i) + 2);
      f.signs.erase(f.signs.begin() + static_cast<long>(i) - 1,
                    f.signs.begin() + static_cast<long>(i) + 1);
    }

  }  // namespace detail

  inline BrittonForm britton_reduce(Word const&         w,
                                    BSParams            p,
                                    Generator const&    a = Generator("a"),
                                    Generator const&    t = Generator("t"),
                                    PinchChooser const& choose = {}) {
    if (p.m == 0 || p.n == 0) {
      throw error("BS(m, n) needs m, n != 0");
    }
    BrittonForm f;
    for (auto const& s : w) {
      if (s.gen == a) {
        f.powers.back() = detail::checked_add(f.powers.back(), s.exp);
      } else if (s.gen == t) {
        int const sign = s.exp > 0 ? 1 : -1;
        for (std::int64_t e = 0; e < (s.exp > 0 ? s.exp : -s.exp); ++e) {
          f.signs.push_back(sign);
          f.powers.push_back(0);
        }
      } else {
        throw alphabet_error(s.gen.name());
      }
    }
    while (true) {
      std::vector<std::size_t> found;
      for (std::size_t i = 1; i < f.signs.size(); ++i) {
        if (detail::is_pinch(f, i, p)) {
          found.push_back(i);
          if (!choose) {
            break;
          }
        }
      }
      if (found.empty()) {
        return f;
      }
      std::size_t const pick = choose ? found.at(choose(found)) : found.front();
      detail::apply_pinch(f, pick, p);
    }
  }

  inline bool bs_is_trivial(Word const& w, BSParams p = {}) {
    return britton_reduce(w, p).is_trivial();
  }

  // a -> a^2, t -> t
  inline Word bs_endomorphism(Word const&      w,
                              Generator const& a = Generator("a"),
                              Generator const& t = Generator("t")) {
    return substitute(w, std::map<Generator, Word>{{a, Word(a, 2)},
                                                   {t, Word(t)}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Non-Hopfian data
  ////////////////////////////////////////////////////////////////////////

  // The classical choice for BS(2, 3); the group-theoretic facts are
  // re-derived by verify_non_hopfian rather than trusted.
  //
  //   psi(t^-1 a t a^-1) = t^-1 a^2 t a^-2 = a^3 a^-2 = a
  //   psi(witness)       = t^-1 a^2 t a^2 t^-1 a^-2 t a^-2 = a^3 a^2 a^-3 a^-2
  //   witness is pinch-free: a^{+-1} between t^-1..t (2 does not divide 1)
  //   and a between t..t^-1 (3 does not divide 1), so it has t-length 4.
  struct NonHopfianData {
    Word preimage_a;
    Word preimage_t;
    Word witness;
  };

  inline constexpr std::string_view kBS23NonHopfian = R"(# BS(2,3) = < a, t | t^-1 a^2 t = a^3 >, endomorphism a -> a^2, t -> t
preimage_a = t^-1*a*t*a^-1
preimage_t = t
witness    = t^-1*a*t*a*t^-1*a^-1*t*a^-1
)";

  // Parses "key = word" lines; # starts a comment.
  inline NonHopfianData parse_non_hopfian_data(std::string_view text) {
    std::map<std::string, Word> values;
    std::size_t                 line_no = 0;
    std::size_t                 pos     = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string line(text.substr(pos, end - pos));
      ++line_no;
      pos = end + 1;
      if (auto h = line.find('#'); h != std::string::npos) {
        line.erase(h);
      }
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw parse_error("expected 'key = word'", line_no, 1);
      }
      std::string key = line.substr(0, eq);
      key.erase(key.find_last_not_of(" \t") + 1);
      key.erase(0, key.find_first_not_of(" \t"));
      values[key] = parse_word(line.substr(eq + 1));
    }
    auto get = [&values](std::string const& k) {
      auto it = values.find(k);
      if (it == values.end()) {
        throw validation_error("non-Hopfian data lacks '" + k + "'");
      }
      return it->second;
    };
    return {get("preimage_a"), get("preimage_t"), get("witness")};
  }

  inline NonHopfianData default_non_hopfian_data() {
    return parse_non_hopfian_data(kBS23NonHopfian);
  }

  inline Report verify_non_hopfian(BSParams              p    = {},
                                   NonHopfianData const& data
                                   = default_non_hopfian_data()) {
    Report r{"non-Hopfian BS(" + std::to_string(p.m) + ","
                 + std::to_string(p.n) + ")",
             {}};
    if (p.m != 2 || p.n != 3) {
      r.checks.push_back({"non-Hopfian", Status::not_verified,
                          "only BS(2,3) is covered; no claim either way", {}});
      return r;
    }
    Generator const a("a");
    Generator const t("t");
    Word const      rel = parse_word("t^-1*a^2*t*a^-3");

    r.add("relator maps to 1", bs_is_trivial(bs_endomorphism(rel), p),
          "psi(" + to_string(rel) + ") = " + to_string(bs_endomorphism(rel)));

    auto preimage = [&](std::string const& name, Word const& pre,
                        Word const& target) {
      Word const img = bs_endomorphism(pre);
      bool const ok  = bs_is_trivial(img * target.inverse(), p);
      r.add("surjective: " + name + " has a preimage", ok,
            "psi(" + to_string(pre) + ") = " + to_string(img) + " = "
                + to_string(target));
    };
    preimage("a", data.preimage_a, Word(a));
    preimage("t", data.preimage_t, Word(t));

    auto const form = britton_reduce(data.witness, p);
    r.add("witness is nontrivial", !form.is_trivial(),
          to_string(data.witness) + " is pinch-free with t-length "
              + std::to_string(form.t_length()));
    Word const img = bs_endomorphism(data.witness);
    r.add("witness lies in the kernel", bs_is_trivial(img, p),
          "psi(witness) = " + to_string(img) + " = 1");
    return r;
  }

}  // namespace hurwitz
