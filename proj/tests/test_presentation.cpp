#include <random>

#include "catch_amalgamated.hpp"

#include "hurwitz/abelian.hpp"
#include "hurwitz/presentation.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {
  Word w(char const* s) { return parse_word(s); }

  std::map<Generator, std::int64_t> unit_weights(Presentation const& p) {
    std::map<Generator, std::int64_t> m;
    for (auto const& g : p.generators()) {
      m.emplace(g, 1);
    }
    return m;
  }

  // The relator of a Hurwitz presentation without extra relations.
  Presentation free_hurwitz(std::size_t n) {
    std::vector<Generator> gens;
    for (std::size_t i = 1; i <= n; ++i) {
      gens.emplace_back("x" + std::to_string(i));
    }
    Word const        c = product_of(gens);
    std::vector<Word> rels;
    for (auto const& g : gens) {
      rels.push_back(commutator(c, Word(g)));
    }
    return Presentation(gens, rels);
  }
}  // namespace

TEST_CASE("parse_presentation", "[presentation][io]") {
  auto const bs = parse_presentation("< a, t | t^-1*a^2*t = a^3 >");
  CHECK(bs.generator_count() == 2);
  REQUIRE(bs.relator_count() == 1);
  CHECK(bs.relators()[0] == w("t^-1*a^2*t*a^-3"));

  auto const free1 = parse_presentation("< x | >");
  CHECK(free1.generator_count() == 1);
  CHECK(free1.relator_count() == 0);

  auto const c5 = parse_presentation(oracle::fixture("bs23_c5.pres"));
  CHECK(c5.generator_count() == 5);
  CHECK(c5.relator_count() == 4);
  CHECK(c5.generators()[4] == Generator("x5"));

  // empty relators are dropped, declaration order kept
  auto const p = parse_presentation("< b, a | a*a^-1, b = b >");
  CHECK(p.relator_count() == 0);
  CHECK(p.generators()[0] == Generator("b"));
}

TEST_CASE("parse errors carry a location", "[presentation][io]") {
  try {
    (void) parse_presentation(oracle::fixture("bad_exponent.pres"));
    FAIL("expected parse_error");
  } catch (parse_error const& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_presentation("< a | b >"), parse_error);
  CHECK_THROWS_AS(parse_presentation("< a | a "), parse_error);
  CHECK_THROWS_AS(parse_presentation("< a, a | >"), error);
  CHECK_THROWS_AS(parse_presentation("< a | a > junk"), parse_error);
}

TEST_CASE("to_text round trips", "[presentation][io]") {
  for (auto const* f : {"bs23.pres", "bs23_c5.pres", "hurwitz_deg3.pres",
                        "free_n4.pres"}) {
    auto const p = parse_presentation(oracle::fixture(f));
    CHECK(parse_presentation(to_text(p)) == p);
  }
}

TEST_CASE("validate_c", "[presentation][c]") {
  auto const c5 = parse_presentation(oracle::fixture("bs23_c5.pres"));
  auto const cp = validate_c(c5);
  CHECK(cp.crelations().size() == 4);

  CHECK_THROWS_AS(validate_c(parse_presentation("< x1, x2 | x1*x2 >")),
                  validation_error);

  auto const eq = validate_c(parse_presentation("< x1, x2 | x2^-1*x1 >"));
  REQUIRE(eq.crelations().size() == 1);
  CHECK(eq.crelations()[0].w.empty());

  // every failing relator is listed
  try {
    (void) validate_c(parse_presentation("< x, y | x*y, x^2, x*y^-1 >"));
    FAIL("expected validation_error");
  } catch (validation_error const& e) {
    CHECK(e.reasons().size() == 2);
  }
}

TEST_CASE("validate_c tie-break", "[presentation][c]") {
  // x1 = x2^-1 x1 x2 is a loop at x1
  auto const cp
      = validate_c(parse_presentation("< x1, x2 | x1 = x2^-1*x1*x2 >"));
  auto const& c = cp.crelations()[0];
  CHECK(c.i == 0);
  CHECK(c.j == 0);
}

TEST_CASE("validate_c is sound", "[presentation][c][property]") {
  std::mt19937_64 rng(11);
  std::vector<Generator> gens{Generator("x1"), Generator("x2"),
                              Generator("x3")};
  Alphabet const         al(gens);
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  for (int n = 0; n < 300; ++n) {
    Word const wd = Word::from_letters(oracle::random_letters(rng, gens, 6));
    Word const rel
        = Word(gens[pick(rng)]).inverse() * wd.inverse() * Word(gens[pick(rng)]) * wd;
    Word const conj = Word::from_letters(oracle::random_letters(rng, gens, 3));
    Word const shown = conjugate(rel, conj);
    if (shown.empty()) {
      continue;
    }
    auto const m = match_c_relator(shown, al);
    REQUIRE(m);
    // equal up to rotation and inversion, so same normal closure
    REQUIRE(cyclically_equivalent(relator_of(*m, al), shown));
    REQUIRE(total_degree(shown, std::map<Generator, std::int64_t>{
                                    {gens[0], 1}, {gens[1], 1}, {gens[2], 1}})
            == 0);
  }
}

TEST_CASE("C-relators have degree zero", "[presentation][c][property]") {
  for (auto const* f : {"bs23_c5.pres", "hurwitz_deg3.pres", "free_n4.pres",
                        "missing_centrality.pres"}) {
    auto const p  = parse_presentation(oracle::fixture(f));
    auto const cp = validate_c(p);
    for (auto const& r : cp.base().relators()) {
      CHECK(total_degree(r, unit_weights(p)) == 0);
    }
  }
}

TEST_CASE("validate_hurwitz", "[presentation][hurwitz]") {
  auto const deg3 = parse_presentation(oracle::fixture("hurwitz_deg3.pres"));
  auto const hp   = validate_hurwitz(validate_c(deg3), 3);
  CHECK(hp.degree() == 3);
  CHECK(hp.extra() == std::vector<std::size_t>{0});
  CHECK(hp.central_element() == w("x1*x2*x3"));

  auto const free2 = parse_presentation("< x1, x2 | >");
  try {
    (void) validate_hurwitz(validate_c(free2), 2);
    FAIL("expected validation_error");
  } catch (validation_error const& e) {
    CHECK(e.reasons().size() == 2);
  }

  auto const miss
      = parse_presentation(oracle::fixture("missing_centrality.pres"));
  try {
    (void) validate_hurwitz(validate_c(miss), 3);
    FAIL("expected validation_error");
  } catch (validation_error const& e) {
    REQUIRE(e.reasons().size() == 1);
    CHECK(e.reasons()[0].find("x3]") != std::string::npos);
  }

  // degree 1: [x1, x1] is trivially present
  auto const one = validate_hurwitz(validate_c(parse_presentation("< x1 | >")), 1);
  CHECK(one.degree() == 1);

  // centrality relators match up to rotation and inversion
  auto const rotated = parse_presentation(
      "< x1, x2 | x2*x1*x2^-1*x1^-1, x1*x2*x1^-1*x2^-1 >");
  CHECK(validate_hurwitz(validate_c(rotated), 2).degree() == 2);

  CHECK_THROWS_AS(validate_hurwitz(validate_c(deg3), 4), validation_error);
}

TEST_CASE("C-graph and trees", "[presentation][graph]") {
  auto const c5 = validate_c(parse_presentation(oracle::fixture("bs23_c5.pres")));
  auto const g  = c_graph(c5);
  CHECK(g.vertices == 5);
  CHECK(is_tree(g));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : g.edges) {
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  CHECK(edges
        == std::set<std::pair<std::size_t, std::size_t>>{
            {0, 2}, {2, 3}, {3, 4}, {1, 4}});

  CHECK(is_tree(c_graph(validate_c(parse_presentation("< x | >")))));

  // two C-relations joining x1 and x2
  Presentation const two(std::vector<Generator>{Generator("x1"), Generator("x2")},
                         {w("x1^-1*x2"), w("x1^-1*x1^-1*x2*x1")});
  auto const cp2 = validate_c(two);
  CHECK(c_graph(cp2).edges.size() == 2);
  CHECK_FALSE(is_tree(c_graph(cp2)));

  CHECK_FALSE(is_tree(c_graph(
      validate_c(parse_presentation(oracle::fixture("double_edge.pres"))))));
  // disconnected
  CHECK_FALSE(is_tree(c_graph(validate_c(parse_presentation("< x, y | >")))));
}

TEST_CASE("direct_product", "[presentation]") {
  auto const bs = parse_presentation("< a, t | t^-1*a^2*t = a^3 >");
  auto const z  = parse_presentation("< y | >");
  auto const d  = direct_product(bs, z).presentation;
  CHECK(d.generator_count() == 3);
  CHECK(equal_up_to_order(
      d, Presentation(d.generators(), {bs.relators()[0], w("[y, a]"),
                                       w("[y, t]")})));

  Presentation const empty;
  CHECK(direct_product(bs, empty).presentation == bs);

  auto const zz = direct_product(parse_presentation("< x | >"), z).presentation;
  CHECK(abelianization(zz) == AbelianDescription{2, {}});

  auto const clash = direct_product(parse_presentation("< x | x^2 >"),
                                    parse_presentation("< x | x^3 >"));
  CHECK(clash.renamed.at(Generator("x")) == Generator("x_2"));
  CHECK(abelianization(clash.presentation).torsion
        == std::vector<Integer>{6});
}

TEST_CASE("padding keeps the group and the C-shape", "[presentation]") {
  auto const p   = parse_presentation(oracle::fixture("bs23_c5.pres"));
  auto const pad = pad_generators(p, 8);
  CHECK(pad.generator_count() == 8);
  CHECK(pad.relator_count() == 7);
  auto const cp = validate_c(pad);
  CHECK(is_irreducible_c(cp));
  CHECK(is_tree(c_graph(cp)));
  CHECK_THROWS_AS(pad_generators(p, 3), validation_error);
}

TEST_CASE("free Hurwitz presentations validate", "[presentation][hurwitz]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const hp = validate_hurwitz(validate_c(free_hurwitz(n)), n);
    CHECK(hp.extra().empty());
  }
}
