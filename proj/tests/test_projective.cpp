#include <random>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "audit.hpp"
#include "hurwitz/abelian.hpp"
#include "hurwitz/projective.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {
  Word w(char const* s) { return parse_word(s); }

  HurwitzPresentation fixture_hurwitz(char const* name) {
    return audit::hurwitz_of(parse_presentation(oracle::fixture(name)));
  }

  std::string counts(std::string const& label, Presentation const& p) {
    return label + ": " + std::to_string(p.generator_count()) + " generators, "
           + std::to_string(p.relator_count()) + " relators, abelianization "
           + to_string(abelianization(p)) + "\n";
  }

  Presentation random_presentation(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> gd(1, 4), rd(0, 4), ld(1, 6);
    std::vector<Generator> gens;
    std::size_t const      g = gd(rng);
    for (std::size_t i = 0; i < g; ++i) {
      gens.emplace_back(std::string(1, static_cast<char>('a' + i)));
    }
    std::vector<Word> rels;
    std::size_t const r = rd(rng);
    for (std::size_t i = 0; i < r; ++i) {
      rels.push_back(Word::from_letters(oracle::random_letters(rng, gens, ld(rng))));
    }
    return Presentation(gens, rels);
  }
}  // namespace

TEST_CASE("projective_quotient", "[projective]") {
  auto const hp = fixture_hurwitz("hurwitz_deg3.pres");
  auto const p1 = projective_quotient(hp, 1);
  CHECK(p1.modulus() == 3);
  CHECK(p1.presentation.relators().back() == w("x1*x2*x3"));
  CHECK(projective_quotient(hp, 2).modulus() == 6);
  CHECK_THROWS_AS(projective_quotient(hp, 0), validation_error);
  for (auto const& r : p1.presentation.relators()) {
    CHECK(total_degree(r, std::map<Generator, std::int64_t>{
                              {Generator("x1"), 1},
                              {Generator("x2"), 1},
                              {Generator("x3"), 1}})
              % 3
          == 0);
  }
}

TEST_CASE("index one leaves the presentation alone", "[projective]") {
  auto const pp = projective_quotient(audit::hurwitz_of(audit::free_hurwitz(1)), 1);
  auto const fk = derive_projective_kernel(pp);
  CHECK(fk.modulus == 1);
  CHECK(fk.presentation == pp.presentation);
}

TEST_CASE("Schreier generator count", "[projective][property]") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      auto const hp = audit::hurwitz_of(audit::free_hurwitz(m));
      auto const pp = projective_quotient(hp, k);
      auto const fk = derive_projective_kernel(pp);
      auto const d  = static_cast<std::size_t>(pp.modulus());
      CHECK(fk.presentation.generator_count() == d * m - d + 1);
      CHECK(fk.coset_table.size() == d);
      for (std::size_t i = 0; i < fk.presentation.relator_count(); ++i) {
        REQUIRE(audit::audit_projective_relator(pp, fk, i));
      }
    }
  }
}

TEST_CASE("m = 2 free case", "[projective]") {
  auto const pp = projective_quotient(fixture_hurwitz("free_n2.pres"), 1);
  auto const fk = derive_projective_kernel(pp);
  auto const s  = simplify(fk.presentation);
  CHECK(s.generator_count() < fk.presentation.generator_count());
  // relation-matrix oracle against the SNF
  auto const m = relation_matrix(fk.presentation);
  CHECK(abelian_invariants(m).free_rank
        == m.cols() - oracle::invariant_factors_by_minors(m).size());
  CHECK(abelianization(s) == abelianization(fk.presentation));
  CHECK(counts("before", fk.presentation) + counts("after", s)
        == oracle::read_file(oracle::golden_path("projective_free_n2.txt")));
}

TEST_CASE("degree-3 projective kernels", "[projective]") {
  auto const hp = fixture_hurwitz("hurwitz_deg3.pres");
  std::string got;
  for (std::int64_t k = 1; k <= 2; ++k) {
    auto const pp = projective_quotient(hp, k);
    auto const fk = derive_projective_kernel(pp);
    CHECK(fk.presentation.relator_count()
          <= static_cast<std::size_t>(pp.modulus()) * pp.presentation.relator_count());
    for (std::size_t i = 0; i < fk.presentation.relator_count(); ++i) {
      REQUIRE(audit::audit_projective_relator(pp, fk, i));
    }
    got += counts("k=" + std::to_string(k), fk.presentation);
  }
  CHECK(got == oracle::read_file(oracle::golden_path("projective_deg3.txt")));
}

TEST_CASE("degree mismatch is rejected", "[projective]") {
  auto const hp = fixture_hurwitz("hurwitz_deg3.pres");
  auto       pp = projective_quotient(hp, 2);
  pp.presentation.add_relator(w("x1^2"));
  CHECK_THROWS_AS(derive_projective_kernel(pp), validation_error);
}

TEST_CASE("simplify examples", "[projective][simplify]") {
  auto const ab = parse_presentation("< a, b | a*b^-1 >");
  CHECK(simplify(ab) == parse_presentation("< a | >"));

  auto const fixed = parse_presentation("< a, b | a^2*b^2, [a, b] >");
  CHECK(simplify(fixed) == fixed);

  // cyclic duplicates go
  auto const dup = parse_presentation("< a, b | a^2*b^2, b^2*a^2, a^-2*b^-2 >");
  CHECK(simplify(dup).relator_count() == 1);
}

TEST_CASE("simplify is certified and keeps the abelianization",
          "[projective][simplify][property]") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    auto const p = random_presentation(rng);
    auto const s = simplify_with_chain(p);
    REQUIRE(abelianization(s.presentation) == abelianization(p));
    REQUIRE(equal_up_to_order(apply_tietze(p, s.chain).presentation,
                              s.presentation));
    REQUIRE(s.presentation.generator_count() <= p.generator_count());
  }
}
