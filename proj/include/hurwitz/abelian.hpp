#pragma once

// Abelianization through the Smith normal form of the relation matrix.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace hurwitz {

  using Integer = boost::multiprecision::cpp_int;

  // Dense row-major integer matrix.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    IntMatrix(std::vector<std::vector<Integer>> const& rows) {
      _rows = rows.size();
      _cols = rows.empty() ? 0 : rows.front().size();
      _data.reserve(_rows * _cols);
      for (auto const& r : rows) {
        if (r.size() != _cols) {
          throw error("IntMatrix: ragged rows");
        }
        _data.insert(_data.end(), r.begin(), r.end());
      }
    }

    static IntMatrix identity(std::size_t n) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return _rows; }
    [[nodiscard]] std::size_t cols() const noexcept { return _cols; }

    Integer& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    Integer const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    void swap_rows(std::size_t a, std::size_t b) {
      for (std::size_t c = 0; c < _cols; ++c) {
        std::swap((*this)(a, c), (*this)(b, c));
      }
    }
    void swap_cols(std::size_t a, std::size_t b) {
      for (std::size_t r = 0; r < _rows; ++r) {
        std::swap((*this)(r, a), (*this)(r, b));
      }
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, Integer const& k) {
      for (std::size_t c = 0; c < _cols; ++c) {
        (*this)(dst, c) += k * (*this)(src, c);
      }
    }
    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, Integer const& k) {
      for (std::size_t r = 0; r < _rows; ++r) {
        (*this)(r, dst) += k * (*this)(r, src);
      }
    }
    void negate_row(std::size_t r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        (*this)(r, c) = -(*this)(r, c);
      }
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
      if (a._cols != b._rows) {
        throw error("IntMatrix: dimension mismatch in product");
      }
      IntMatrix out(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          if (a(i, k) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            out(i, j) += a(i, k) * b(k, j);
          }
        }
      }
      return out;
    }

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t          _rows = 0;
    std::size_t          _cols = 0;
    std::vector<Integer> _data;
  };

  // Row-major, space-separated, one row per line.
  inline std::string dump(IntMatrix const& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) {
          os << ' ';
        }
        os << m(r, c);
      }
      os << '\n';
    }
    return os.str();
  }

  // Row per relator, column per generator, entry = exponent sum.
  inline IntMatrix relation_matrix(Presentation const& p) {
    IntMatrix m(p.relator_count(), p.generator_count());
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
      for (auto const& s : p.relators()[r]) {
        m(r, p.alphabet().index(s.gen)) += s.exp;
      }
    }
    return m;
  }

  struct SnfResult {
    IntMatrix            U;
    IntMatrix            D;
    IntMatrix            V;
    std::vector<Integer> invariant_factors;  // nonzero diagonal, d1 | d2 | ...

    [[nodiscard]] std::size_t rank() const noexcept {
      return invariant_factors.size();
    }
  };

  namespace detail {

    // Smallest |entry| among nonzero entries of the trailing block starting
    // at (t, t); ties go to the first in row-major order.
    inline std::optional<std::pair<std::size_t, std::size_t>>
    snf_pivot(IntMatrix const& d, std::size_t t) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      Integer                                             best_abs;
      for (std::size_t r = t; r < d.rows(); ++r) {
        for (std::size_t c = t; c < d.cols(); ++c) {
          if (d(r, c) == 0) {
            continue;
          }
          Integer a = abs(d(r, c));
          if (!best || a < best_abs) {
            best     = {r, c};
            best_abs = std::move(a);
          }
        }
      }
      return best;
    }

  }  // namespace detail

  // U * A * V = D with U, V unimodular and D diagonal with a divisibility
  // chain. Deterministic: the pivot is always the smallest nonzero entry of
  // the remaining block, ties by row-major position.
  inline SnfResult smith_normal_form(IntMatrix const& a) {
    std::size_t const rows = a.rows();
    std::size_t const cols = a.cols();
    SnfResult         res{IntMatrix::identity(rows), a, IntMatrix::identity(cols),
                  {}};
    IntMatrix&        U = res.U;
    IntMatrix&        D = res.D;
    IntMatrix&        V = res.V;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      bool settled = false;
      while (!settled) {
        auto piv = detail::snf_pivot(D, t);
        if (!piv) {
          break;
        }
        if (piv->first != t) {
          D.swap_rows(t, piv->first);
          U.swap_rows(t, piv->first);
        }
        if (piv->second != t) {
          D.swap_cols(t, piv->second);
          V.swap_cols(t, piv->second);
        }
        Integer const p        = D(t, t);
        bool          residual = false;
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (D(r, t) != 0) {
            Integer const q = D(r, t) / p;
            D.add_row(r, t, -q);
            U.add_row(r, t, -q);
            residual = residual || D(r, t) != 0;
          }
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (D(t, c) != 0) {
            Integer const q = D(t, c) / p;
            D.add_col(c, t, -q);
            V.add_col(c, t, -q);
            residual = residual || D(t, c) != 0;
          }
        }
        if (residual) {
          continue;
        }
        settled = true;
        for (std::size_t r = t + 1; r < rows && settled; ++r) {
          for (std::size_t c = t + 1; c < cols; ++c) {
            if (D(r, c) % p != 0) {
              D.add_row(t, r, 1);
              U.add_row(t, r, 1);
              settled = false;
              break;
            }
          }
        }
      }
      if (D(t, t) == 0) {
        break;
      }
      if (D(t, t) < 0) {
        D.negate_row(t);
        U.negate_row(t);
      }
      res.invariant_factors.push_back(D(t, t));
    }
#ifdef HURWITZ_CHECK_INVARIANTS
    if (U * a * V != D) {
      throw internal_error("smith_normal_form: U*A*V != D");
    }
#endif
    return res;
  }

  struct AbelianDescription {
    std::size_t          free_rank = 0;
    std::vector<Integer> torsion;  // entries > 1, d1 | d2 | ...

    friend bool operator==(AbelianDescription const&,
                           AbelianDescription const&) = default;
  };

  // "Z^2 + Z/2 + Z/6"; the trivial group prints as "1".
  inline std::string to_string(AbelianDescription const& a) {
    std::string out;
    if (a.free_rank == 1) {
      out = "Z";
    } else if (a.free_rank > 1) {
      out = "Z^" + std::to_string(a.free_rank);
    }
    for (auto const& t : a.torsion) {
      out += (out.empty() ? "Z/" : " + Z/") + t.str();
    }
    return out.empty() ? "1" : out;
  }

  inline AbelianDescription abelian_invariants(IntMatrix const& relations) {
    auto const         snf = smith_normal_form(relations);
    AbelianDescription out;
    out.free_rank = relations.cols() - snf.rank();
    for (auto const& d : snf.invariant_factors) {
      if (d > 1) {
        out.torsion.push_back(d);
      }
    }
    return out;
  }

  inline AbelianDescription abelianization(Presentation const& p) {
    return abelian_invariants(relation_matrix(p));
  }

  inline bool is_irreducible_c(CPresentation const& cp) {
    auto const ab = abelianization(cp.base());
    return ab.free_rank == 1 && ab.torsion.empty();
  }

}  // namespace hurwitz
