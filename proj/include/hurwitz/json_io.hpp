#pragma once

// JSON form of presentations:
//
//   { "generators": ["x1", ...], "relators": ["x1^-1*x2", ...],
//     "c_relations": [{"i": 1, "j": 2, "w": "1"}, ...], "degree": 3 }
//
// Words use the ordinary text syntax; c_relations use 1-based generator
// positions and may be null when the presentation is not a C-presentation.
// Extra fields (dictionary, provenance, ...) are ignored on input.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "presentation.hpp"
#include "word.hpp"
#include "word_io.hpp"

namespace hurwitz {

  using json = nlohmann::ordered_json;

  inline json to_json(Presentation const&                p,
                      std::optional<CPresentation> const& cp     = {},
                      std::optional<std::size_t>          degree = {}) {
    json out;
    out["generators"] = json::array();
    for (auto const& g : p.generators()) {
      out["generators"].push_back(g.name());
    }
    out["relators"] = json::array();
    for (auto const& r : p.relators()) {
      out["relators"].push_back(to_string(r));
    }
    if (cp) {
      out["c_relations"] = json::array();
      for (auto const& c : cp->crelations()) {
        out["c_relations"].push_back(
            {{"i", c.i + 1}, {"j", c.j + 1}, {"w", to_string(c.w)}});
      }
    } else {
      out["c_relations"] = nullptr;
    }
    out["degree"] = degree ? json(*degree) : json(nullptr);
    return out;
  }

  inline Presentation presentation_from_json(json const& j) {
    try {
      std::vector<Generator> gens;
      for (auto const& g : j.at("generators")) {
        gens.emplace_back(g.get<std::string>());
      }
      Alphabet const    alphabet(gens);
      std::vector<Word> rels;
      for (auto const& r : j.at("relators")) {
        rels.push_back(parse_word(r.get<std::string>(), &alphabet));
      }
      return Presentation(std::move(gens), std::move(rels));
    } catch (json::exception const& e) {
      throw parse_error(std::string("malformed JSON presentation: ") + e.what(),
                        1, 1);
    } catch (parse_error const&) {
      throw;
    } catch (error const& e) {
      throw parse_error(e.what(), 1, 1);
    }
  }

  inline Presentation parse_json_presentation(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw parse_error(std::string("invalid JSON: ") + e.what(), 1,
                        e.byte);
    }
    return presentation_from_json(j);
  }

  // JSON if the first significant character is '{', otherwise the
  // presentation grammar.
  inline Presentation parse_any_presentation(std::string_view text) {
    auto const k = text.find_first_not_of(" \t\r\n");
    if (k != std::string_view::npos && text[k] == '{') {
      return parse_json_presentation(text);
    }
    return parse_presentation(text);
  }

}  // namespace hurwitz
