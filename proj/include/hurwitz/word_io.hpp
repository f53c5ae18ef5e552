#pragma once

// Text syntax for words:
//
//   word    := term ( ["*"] term )*
//   term    := factor [ "^" ["+"|"-"] digits ]
//   factor  := name | "1" | "(" word ")" | "[" word "," word "]"
//
// "1" is the identity and [u, v] is u v u^-1 v^-1. Whitespace and "#"
// line comments are ignored.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "error.hpp"
#include "word.hpp"

namespace hurwitz {

  // Character cursor with line/column tracking, shared with the presentation
  // parser.
  class text_cursor {
   public:
    explicit text_cursor(std::string_view text) : _text(text) {}

    void skip_space() {
      while (_pos < _text.size()) {
        char c = _text[_pos];
        if (c == '#') {
          while (_pos < _text.size() && _text[_pos] != '\n') {
            advance();
          }
        } else if (std::isspace(static_cast<unsigned char>(c))) {
          advance();
        } else {
          break;
        }
      }
    }

    [[nodiscard]] bool at_end() {
      skip_space();
      return _pos >= _text.size();
    }

    // Next significant character, or '\0' at end of input.
    [[nodiscard]] char peek() {
      skip_space();
      return _pos < _text.size() ? _text[_pos] : '\0';
    }

    [[nodiscard]] bool starts_with(std::string_view s) {
      skip_space();
      return _text.substr(_pos, s.size()) == s;
    }

    void advance(std::size_t n = 1) {
      for (std::size_t i = 0; i < n && _pos < _text.size(); ++i) {
        if (_text[_pos] == '\n') {
          ++_line;
          _column = 1;
        } else {
          ++_column;
        }
        ++_pos;
      }
    }

    void expect(char c) {
      if (peek() != c) {
        fail(std::string("expected '") + c + "'" + found());
      }
      advance();
    }

    bool accept(char c) {
      if (peek() == c) {
        advance();
        return true;
      }
      return false;
    }

    std::string identifier() {
      skip_space();
      std::size_t const start = _pos;
      if (_pos >= _text.size()
          || !std::isalpha(static_cast<unsigned char>(_text[_pos]))) {
        fail("expected a generator name" + found());
      }
      while (_pos < _text.size()
             && (std::isalnum(static_cast<unsigned char>(_text[_pos]))
                 || _text[_pos] == '_')) {
        advance();
      }
      return std::string(_text.substr(start, _pos - start));
    }

    std::int64_t integer() {
      skip_space();
      bool negative = false;
      if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) {
        negative = _text[_pos] == '-';
        advance();
      }
      if (_pos >= _text.size()
          || !std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        fail("expected an integer exponent" + found());
      }
      std::int64_t value = 0;
      while (_pos < _text.size()
             && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        int const d = _text[_pos] - '0';
        if (value > (std::numeric_limits<std::int64_t>::max() - d) / 10) {
          fail("exponent out of range");
        }
        value = value * 10 + d;
        advance();
      }
      return negative ? -value : value;
    }

    [[noreturn]] void fail(std::string const& msg) const {
      throw parse_error(msg, _line, _column);
    }

    [[nodiscard]] std::size_t line() const noexcept { return _line; }
    [[nodiscard]] std::size_t column() const noexcept { return _column; }

   private:
    std::string found() const {
      if (_pos >= _text.size()) {
        return ", found end of input";
      }
      return std::string(", found '") + _text[_pos] + "'";
    }

    std::string_view _text;
    std::size_t      _pos    = 0;
    std::size_t      _line   = 1;
    std::size_t      _column = 1;
  };

  namespace detail {

    inline bool starts_factor(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '('
             || c == '[' || c == '1';
    }

    inline Word parse_word(text_cursor& in, Alphabet const* alphabet);

    inline Word parse_factor(text_cursor& in, Alphabet const* alphabet) {
      char const c = in.peek();
      if (c == '(') {
        in.advance();
        Word w = parse_word(in, alphabet);
        in.expect(')');
        return w;
      }
      if (c == '[') {
        in.advance();
        Word u = parse_word(in, alphabet);
        in.expect(',');
        Word v = parse_word(in, alphabet);
        in.expect(']');
        return commutator(u, v);
      }
      if (c == '1') {
        in.advance();
        return Word{};
      }
      std::size_t const line   = in.line();
      std::size_t const column = in.column();
      Generator         g(in.identifier());
      if (alphabet != nullptr && !alphabet->contains(g)) {
        throw parse_error("unknown generator '" + g.name() + "'", line, column);
      }
      return Word(g);
    }

    inline Word parse_word(text_cursor& in, Alphabet const* alphabet) {
      Word w;
      bool first = true;
      while (true) {
        bool const star = !first && in.accept('*');
        if (!starts_factor(in.peek())) {
          if (star || first) {
            in.fail("expected a word");
          }
          break;
        }
        Word f = parse_factor(in, alphabet);
        if (in.accept('^')) {
          f = power(f, in.integer());
        }
        w *= f;
        first = false;
      }
      return w;
    }

  }  // namespace detail

  // Parses a complete word; when alphabet is given, unknown generators are a
  // parse error.
  inline Word parse_word(std::string_view text,
                         Alphabet const*  alphabet = nullptr) {
    text_cursor in(text);
    Word        w = detail::parse_word(in, alphabet);
    if (!in.at_end()) {
      in.fail("unexpected trailing input");
    }
    return w;
  }

  inline std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : w) {
      if (!out.empty()) {
        out += '*';
      }
      out += s.gen.name();
      if (s.exp != 1) {
        out += '^';
        out += std::to_string(s.exp);
      }
    }
    return out;
  }

  inline std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << to_string(w);
  }

}  // namespace hurwitz
