#pragma once

// Exception hierarchy shared by every module. The CLI maps these onto exit
// codes: parse_error -> 1, validation_error -> 2, internal_error -> 3.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class parse_error : public error {
   public:
    parse_error(std::string const& msg, std::size_t line, std::size_t column)
        : error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + msg),
          _line(line),
          _column(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return _line; }
    [[nodiscard]] std::size_t column() const noexcept { return _column; }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  // Raised when a word mentions a generator outside the expected alphabet.
  class alphabet_error : public error {
   public:
    explicit alphabet_error(std::string generator)
        : error("generator '" + generator + "' is not in the alphabet"),
          _generator(std::move(generator)) {}

    [[nodiscard]] std::string const& generator() const noexcept {
      return _generator;
    }

   private:
    std::string _generator;
  };

  // A structural check failed; reasons() itemizes every failure found.
  class validation_error : public error {
   public:
    explicit validation_error(std::string summary,
                              std::vector<std::string> reasons = {})
        : error(compose(summary, reasons)), _reasons(std::move(reasons)) {}

    [[nodiscard]] std::vector<std::string> const& reasons() const noexcept {
      return _reasons;
    }

   private:
    static std::string compose(std::string const&              summary,
                               std::vector<std::string> const& reasons) {
      std::string out = summary;
      for (auto const& r : reasons) {
        out += "\n  - " + r;
      }
      return out;
    }

    std::vector<std::string> _reasons;
  };

  // A Tietze certificate did not reduce to its claimed target.
  class tietze_error : public validation_error {
   public:
    tietze_error(std::size_t step, std::string const& what)
        : validation_error("Tietze step " + std::to_string(step) + ": " + what),
          _step(step) {}

    [[nodiscard]] std::size_t step() const noexcept { return _step; }

   private:
    std::size_t _step;
  };

  // An internal invariant (round-trip law, SNF identity, ...) was violated.
  class internal_error : public error {
   public:
    using error::error;
  };

}  // namespace hurwitz
