#pragma once

// The hurwitz command line tool. run() does all the work on explicit
// streams so that tests can drive it in-process.
//
// stdout carries the result (a presentation, or one JSON document with
// --json); stderr carries the human-readable report. Exit codes: 0 success,
// 1 usage or parse error, 2 validation failure, 3 internal invariant
// violation.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hurwitz/abelian.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/kernel.hpp"
#include "hurwitz/presentation.hpp"
#include "hurwitz/projective.hpp"
#include "hurwitz/report.hpp"
#include "hurwitz/section2.hpp"

namespace hurwitz::cli {

  enum exit_code : int { ok = 0, usage = 1, invalid = 2, internal = 3 };

  inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
  }

  struct Options {
    std::string                 file;
    bool                        as_json = false;
    bool                        timing  = false;
    std::optional<std::size_t>  degree;
    bool                        affine = false;
    std::optional<std::int64_t> projective;
    bool                        simplify = false;
    bool                        strict   = false;
    bool                        matrix   = false;
    bool                        section2 = false;
  };

  class Session {
   public:
    Session(std::istream& in, std::ostream& out, std::ostream& err)
        : _in(in), _out(out), _err(err) {}

    std::string read_input(std::string const& file) {
      std::string text;
      if (file == "-") {
        text.assign(std::istreambuf_iterator<char>(_in), {});
      } else {
        std::ifstream f(file, std::ios::binary);
        if (!f) {
          throw usage_error("cannot read '" + file + "'");
        }
        text.assign(std::istreambuf_iterator<char>(f), {});
      }
      _err << "input: " << file << " (fnv1a64 " << hex64(fnv1a64(text))
           << ")\n";
      return text;
    }

    Presentation load(std::string const& file) {
      return parse_any_presentation(read_input(file));
    }

    struct usage_error : error {
      using error::error;
    };

    std::istream& in() { return _in; }
    std::ostream& out() { return _out; }
    std::ostream& err() { return _err; }

   private:
    std::istream& _in;
    std::ostream& _out;
    std::ostream& _err;
  };

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  inline std::optional<CPresentation> try_validate_c(Presentation const& p) {
    try {
      return validate_c(p);
    } catch (validation_error const&) {
      return std::nullopt;
    }
  }

  inline int cmd_validate(Session& s, Options const& o) {
    auto const p  = s.load(o.file);
    auto const cp = validate_c(p);
    s.err() << "valid C-presentation: " << p.generator_count()
            << " generators, " << cp.crelations().size() << " C-relations\n";
    std::optional<std::size_t> degree;
    if (o.degree) {
      auto const hp = validate_hurwitz(cp, *o.degree);
      degree        = hp.degree();
      s.err() << "valid Hurwitz C-presentation of degree " << *degree << "\n";
    }
    if (o.as_json) {
      s.out() << to_json(p, cp, degree).dump(2) << "\n";
    } else {
      s.out() << to_text(p);
    }
    return ok;
  }

  inline int cmd_abelianize(Session& s, Options const& o) {
    auto const p  = s.load(o.file);
    auto const ab = abelianization(p);
    auto const cp = try_validate_c(p);
    std::string verdict = to_string(ab);
    if (cp) {
      verdict += is_irreducible_c(*cp) ? " (irreducible C-group)"
                                       : " (reducible C-group)";
    }
    if (o.as_json) {
      json j;
      j["free_rank"] = ab.free_rank;
      j["torsion"]   = json::array();
      for (auto const& t : ab.torsion) {
        j["torsion"].push_back(t.str());
      }
      j["description"] = to_string(ab);
      j["c_group"]     = cp.has_value();
      j["irreducible"] = cp ? json(is_irreducible_c(*cp)) : json(nullptr);
      if (o.matrix) {
        j["matrix"] = dump(relation_matrix(p));
      }
      s.out() << j.dump(2) << "\n";
    } else {
      if (o.matrix) {
        s.out() << dump(relation_matrix(p));
      }
      s.out() << verdict << "\n";
    }
    s.err() << "abelianization: " << verdict << "\n";
    return ok;
  }

  inline HurwitzPresentation load_hurwitz(Session& s, Options const& o) {
    auto const        p = s.load(o.file);
    std::size_t const m = o.degree.value_or(p.generator_count());
    return validate_hurwitz(validate_c(p), m);
  }

  inline void emit_simplified(Session&             s,
                              Options const&       o,
                              Presentation const&  p,
                              json&                j) {
    auto const res = simplify_with_chain(p);
    s.err() << "simplified: " << p.generator_count() << " -> "
            << res.presentation.generator_count() << " generators, "
            << p.relator_count() << " -> " << res.presentation.relator_count()
            << " relators\n";
    if (o.as_json) {
      json elim = json::object();
      for (auto const& [g, w] : res.result.forward) {
        if (w != Word(g)) {
          elim[g.name()] = to_string(w);
        }
      }
      j["eliminated"] = elim;
      json const base = to_json(res.presentation);
      j["generators"] = base["generators"];
      j["relators"]   = base["relators"];
    } else {
      s.out() << to_text(res.presentation);
    }
  }

  inline int cmd_kernel(Session& s, Options const& o) {
    if (o.affine && o.projective) {
      throw Session::usage_error("--affine and --projective are exclusive");
    }
    auto const hp = load_hurwitz(s, o);
    json       j;
    Presentation kp;
    if (o.projective) {
      auto const pp = projective_quotient(hp, *o.projective);
      auto const fk = derive_projective_kernel(pp);
      kp            = fk.presentation;
      s.err() << "projective quotient by (" << to_string(hp.central_element())
              << ")^" << pp.k << ", nu modulo " << pp.modulus() << "\n"
              << "kernel: " << kp.generator_count() << " generators, "
              << kp.relator_count() << " relators\n";
      if (o.as_json) {
        j = to_json(kp);
        j["modulus"]     = pp.modulus();
        j["transversal"] = fk.transversal.name();
        json dict        = json::object();
        for (auto const& g : kp.generators()) {
          dict[g.name()] = to_string(fk.dictionary.at(g));
        }
        j["dictionary"] = dict;
        j["provenance"] = json::array();
        for (auto const& pr : fk.provenance) {
          j["provenance"].push_back({{"relator", pr.relator + 1},
                                     {"shift", pr.shift}});
        }
        j["coset_table"] = fk.coset_table;
      }
    } else {
      auto const k = derive_kernel(hp, {o.strict});
      kp           = k.presentation;
      for (auto const& n : k.notices) {
        s.err() << "notice: " << n << "\n";
      }
      s.err() << "kernel: " << kp.generator_count() << " generators, "
              << kp.relator_count() << " relators\n";
      if (o.as_json) {
        j         = to_json(kp);
        json dict = json::object();
        for (auto const& g : kp.generators()) {
          dict[g.name()] = to_string(k.dictionary.at(g));
        }
        j["dictionary"] = dict;
        j["provenance"] = json::array();
        for (auto const& pr : k.provenance) {
          j["provenance"].push_back({{"relator", pr.input_index + 1},
                                     {"shift", pr.shift}});
        }
        j["notices"] = k.notices;
      }
    }
    if (o.simplify) {
      emit_simplified(s, o, kp, j);
    } else if (!o.as_json) {
      s.out() << to_text(kp);
    }
    if (o.as_json) {
      s.out() << j.dump(2) << "\n";
    }
    return ok;
  }

  inline int cmd_graph(Session& s, Options const& o) {
    auto const p    = s.load(o.file);
    auto const cp   = validate_c(p);
    auto const g    = c_graph(cp);
    bool const tree = is_tree(g);
    if (o.as_json) {
      json j;
      j["vertices"] = p.generators().size();
      j["edges"]    = json::array();
      for (auto const& [a, b] : g.edges) {
        j["edges"].push_back({a + 1, b + 1});
      }
      j["tree"] = tree;
      s.out() << j.dump(2) << "\n";
    } else {
      for (auto const& [a, b] : g.edges) {
        s.out() << p.generators()[a] << " -- " << p.generators()[b] << "\n";
      }
      s.out() << "tree: " << (tree ? "yes" : "no") << "\n";
    }
    s.err() << "C-graph: " << g.vertices << " vertices, " << g.edges.size()
            << " edges\n";
    return ok;
  }

  inline int cmd_simplify(Session& s, Options const& o) {
    auto const p = s.load(o.file);
    json       j;
    emit_simplified(s, o, p, j);
    if (o.as_json) {
      s.out() << j.dump(2) << "\n";
    }
    return ok;
  }

  inline int cmd_verify(Session& s, Options const& o) {
    if (!o.section2) {
      throw Session::usage_error("verify needs --section2");
    }
    auto const r = verify_section2();
    if (o.as_json) {
      json j;
      j["passed"] = r.passed();
      j["checks"] = json::array();
      for (auto const& c : r.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"status", to_string(c.status)},
                               {"detail", c.detail},
                               {"flags", c.flags}});
      }
      s.out() << j.dump(2) << "\n";
    } else {
      s.out() << to_text(r);
    }
    s.err() << (r.passed() ? "all checks passed" : "some checks FAILED")
            << "\n";
    for (auto const& f : r.flags()) {
      s.err() << "flag: " << f << "\n";
    }
    return r.passed() ? ok : invalid;
  }

  ////////////////////////////////////////////////////////////////////////
  // Entry point
  ////////////////////////////////////////////////////////////////////////

  // args excludes the program name.
  inline int run(std::vector<std::string> args,
                 std::istream&            in,
                 std::ostream&            out,
                 std::ostream&            err) {
    CLI::App app{"Kernels of degree maps of Hurwitz C-groups", "hurwitz"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub, bool needs_file) {
      if (needs_file) {
        sub->add_option("file", o.file, "presentation file, or - for stdin")
            ->required();
      }
      sub->add_flag("--json", o.as_json, "emit one JSON document on stdout");
      sub->add_flag("--timing", o.timing, "report elapsed time on stderr");
    };

    auto* validate = app.add_subcommand("validate", "check C and Hurwitz shape");
    add_common(validate, true);
    validate->add_option("--degree", o.degree, "check Hurwitz shape of degree m")
        ->check(CLI::PositiveNumber);

    auto* abel = app.add_subcommand("abelianize", "compute G/G'");
    add_common(abel, true);
    abel->add_flag("--matrix", o.matrix, "also print the relation matrix");

    auto* kernel = app.add_subcommand("kernel", "presentation of ker nu");
    add_common(kernel, true);
    kernel->add_flag("--affine", o.affine, "kernel of nu onto Z (default)");
    kernel->add_option("--projective", o.projective,
                       "kernel of nu mod mk in the quotient by c^k")
        ->check(CLI::PositiveNumber);
    kernel->add_option("--degree", o.degree, "degree m (default: all generators)")
        ->check(CLI::PositiveNumber);
    kernel->add_flag("--simplify", o.simplify, "apply Tietze simplification");
    kernel->add_flag("--strict", o.strict,
                     "also rewrite the centrality relators and check they vanish");

    auto* graph = app.add_subcommand("graph", "C-graph and tree check");
    add_common(graph, true);

    auto* simp = app.add_subcommand("simplify", "Tietze simplification");
    add_common(simp, true);

    auto* verify = app.add_subcommand("verify", "replay the BS(2,3) examples");
    add_common(verify, false);
    verify->add_flag("--section2", o.section2,
                     "non-Hopfian examples and their Tietze chains");

    std::string echo = "hurwitz";
    for (auto const& a : args) {
      echo += " " + a;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const          code = app.exit(e, out, err);
      return code == 0 ? ok : usage;
    }

    Session    s(in, out, err);
    auto const start = std::chrono::steady_clock::now();
    int        code  = ok;
    err << "command: " << echo << "\n";
    try {
      if (*validate) {
        code = cmd_validate(s, o);
      } else if (*abel) {
        code = cmd_abelianize(s, o);
      } else if (*kernel) {
        code = cmd_kernel(s, o);
      } else if (*graph) {
        code = cmd_graph(s, o);
      } else if (*simp) {
        code = cmd_simplify(s, o);
      } else {
        code = cmd_verify(s, o);
      }
    } catch (parse_error const& e) {
      err << "parse error: " << e.what() << "\n";
      code = usage;
    } catch (Session::usage_error const& e) {
      err << "error: " << e.what() << "\n";
      code = usage;
    } catch (validation_error const& e) {
      err << "invalid: " << e.what() << "\n";
      code = invalid;
    } catch (alphabet_error const& e) {
      err << "invalid: " << e.what() << "\n";
      code = invalid;
    } catch (internal_error const& e) {
      err << "internal error: " << e.what() << "\n";
      code = internal;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << "\n";
      code = internal;
    }
    if (o.timing) {
      auto const ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      err << "time: " << std::fixed << std::setprecision(3) << ms << " ms\n";
    }
    return code;
  }

}  // namespace hurwitz::cli
