#include <random>

#include "catch_amalgamated.hpp"

#include "audit.hpp"
#include "hurwitz/abelian.hpp"
#include "hurwitz/kernel.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {
  Word w(char const* s) { return parse_word(s); }

  Generator const x2("x2"), x3("x3"), y("y");

  SchreierRewriter<IntegerCosets> rewriter(std::size_t n) {
    std::vector<Generator> originals;
    for (std::size_t i = 1; i <= n; ++i) {
      originals.emplace_back("x" + std::to_string(i));
    }
    return affine_rewriter(originals, y);
  }

  SchreierWord sletter(std::int64_t k, std::size_t src, int sign = 1) {
    SchreierWord out;
    out.push_back(SchreierLetter{k, src}, sign);
    return out;
  }

  SchreierWord shifted(SchreierWord const& sw, std::int64_t k) {
    SchreierWord out;
    for (auto const& s : sw) {
      out.push_back(SchreierLetter{s.gen.coset + k, s.gen.source}, s.exp);
    }
    return out;
  }

  KernelPresentation deg3_kernel(KernelOptions opts = {}) {
    auto const hp = audit::hurwitz_of(
        parse_presentation(oracle::fixture("hurwitz_deg3.pres")));
    return derive_kernel(hp, opts);
  }
}  // namespace

TEST_CASE("hurwitz_normalize", "[kernel]") {
  auto const nh = hurwitz_normalize(audit::hurwitz_of(audit::free_hurwitz(2)));
  CHECK(nh.presentation.generators() == std::vector<Generator>{x2, y});
  CHECK(nh.presentation.relators() == std::vector<Word>{w("[y, x2]")});
  CHECK(nh.rbar.empty());

  auto const deg3 = hurwitz_normalize(audit::hurwitz_of(
      parse_presentation(oracle::fixture("hurwitz_deg3.pres"))));
  REQUIRE(deg3.rbar.size() == 1);
  Word const bs = parse_presentation(oracle::fixture("hurwitz_deg3.pres")).relators()[0];
  std::map<Generator, Word> x1_out{
      {Generator("x1"), w("y*x3^-1*x2^-1")}, {x2, w("x2")}, {x3, w("x3")}};
  CHECK(deg3.rbar[0] == substitute(bs, x1_out));
  for (auto const& r : deg3.presentation.relators()) {
    CHECK(total_degree(r, deg3.weights()) == 0);
  }
}

TEST_CASE("schreier_rewrite examples", "[kernel]") {
  auto const rw = rewriter(3);
  CHECK(schreier_rewrite(w("x2*x3^-1"), rw) == sletter(0, 2));
  CHECK(schreier_rewrite(w("y*x3^-3"), rw) == sletter(0, kCentralSource));
  CHECK(schreier_rewrite(w("x3*x2*x3^-2"), rw) == sletter(1, 2));
  CHECK(to_string(sletter(1, 2)) == "a(1,2)");
  try {
    (void) schreier_rewrite(w("x2*y"), rw);
    FAIL("expected validation_error");
  } catch (validation_error const& e) {
    CHECK(std::string(e.what()).find("degree 4") != std::string::npos);
  }
}

TEST_CASE("normalize_indices examples", "[kernel]") {
  CHECK(normalize_indices(sletter(3, 2), 3) == w("a0^-1*a_0_2*a0"));
  CHECK(normalize_indices(sletter(-1, 2), 3) == w("a0*a_2_2*a0^-1"));
  CHECK(normalize_indices(sletter(5, kCentralSource), 3) == w("a0"));
  CHECK(floor_div(-1, 3) == -1);
  CHECK(floor_div(-3, 3) == -1);
  CHECK(floor_div(5, 3) == 1);
}

TEST_CASE("rewriting round trips", "[kernel][property]") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const nh = hurwitz_normalize(audit::hurwitz_of(audit::free_hurwitz(n)));
    auto const rw = affine_rewriter(nh);
    for (int trial = 0; trial < 1000; ++trial) {
      Word const wd = audit::random_zero_degree(rng, nh.originals, nh.y, 12);
      SchreierWord const sw = schreier_rewrite(wd, rw);
      REQUIRE(rw.expand(sw) == wd);
      // and through the formula, independently of the rewriter
      Word expanded;
      for (auto const& s : sw) {
        bool const is_y = s.gen.source == kCentralSource;
        Generator const& g = is_y ? nh.y : nh.originals[s.gen.source - 1];
        REQUIRE(g != nh.last());
        expanded *= power(audit::affine_expansion(s.gen.coset, g, is_y, n,
                                                  nh.last()),
                          s.exp);
      }
      REQUIRE(expanded == wd);
    }
  }
}

TEST_CASE("displayed identities", "[kernel][property]") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> kd(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const n = 3 + static_cast<std::size_t>(trial % 4);
    auto const        rw = rewriter(n);
    Word const        t(rw.transversal());
    std::int64_t const k = kd(rng);
    std::uniform_int_distribution<std::size_t> jd(2, n - 1);
    std::size_t const  j = jd(rng);
    Word const         xj(rw.generator(j));
    Word const         Y(y);
    auto const         sn = static_cast<std::int64_t>(n);

    SchreierWord one = sletter(k, kCentralSource) * sletter(k + sn, j)
                       * sletter(k + 1, kCentralSource, -1) * sletter(k, j, -1);
    REQUIRE(rw.expand(one)
            == power(t, k) * Y * xj * Y.inverse() * xj.inverse() * power(t, -k));

    SchreierWord two
        = sletter(k, kCentralSource) * sletter(k + 1, kCentralSource, -1);
    REQUIRE(rw.expand(two)
            == power(t, k) * Y * t * Y.inverse() * t.inverse() * power(t, -k));
  }
}

TEST_CASE("rewriting is shift-equivariant", "[kernel][property]") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::int64_t> kd(-10, 10);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const nh = hurwitz_normalize(audit::hurwitz_of(audit::free_hurwitz(n)));
    auto const rw = affine_rewriter(nh);
    Word const t(nh.last());
    for (int trial = 0; trial < 200; ++trial) {
      Word const         r = audit::random_zero_degree(rng, nh.originals, nh.y, 10);
      std::int64_t const k = kd(rng);
      REQUIRE(schreier_rewrite(power(t, k) * r * power(t, -k), rw)
              == shifted(schreier_rewrite(r, rw), k));
    }
  }
}

TEST_CASE("free case has rank (n-1)^2", "[kernel]") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto const kp = derive_kernel(audit::hurwitz_of(audit::free_hurwitz(n)),
                                  {.strict = true});
    CHECK(kp.presentation.generator_count() == (n - 1) * (n - 1));
    CHECK(kp.presentation.generator_count() == 1 + n * (n - 2));
    CHECK(kp.presentation.relator_count() == 0);
    CHECK(audit::audit_kernel_dictionary(kp));
  }
  auto const three = derive_kernel(audit::hurwitz_of(audit::free_hurwitz(3)));
  CHECK(three.presentation.generators()
        == std::vector<Generator>{Generator("a0"), Generator("a_0_2"),
                                  Generator("a_1_2"), Generator("a_2_2")});
}

TEST_CASE("degree 1 has a trivial kernel", "[kernel]") {
  auto const kp = derive_kernel(audit::hurwitz_of(audit::free_hurwitz(1)));
  CHECK(kp.presentation.generator_count() == 0);
  CHECK_FALSE(kp.notices.empty());
}

TEST_CASE("degree must use every generator", "[kernel]") {
  auto const p = parse_presentation(
      "< x1, x2, x3 | [x1*x2, x1], [x1*x2, x2], x3 = x1 >");
  auto const hp = validate_hurwitz(validate_c(p), 2);
  CHECK_THROWS_AS(derive_kernel(hp), validation_error);
}

TEST_CASE("degree-3 kernel", "[kernel]") {
  auto const kp = deg3_kernel({.strict = true});
  CHECK(kp.presentation.generator_count() == 4);
  REQUIRE(kp.presentation.relator_count() == 3);
  CHECK(audit::audit_kernel_dictionary(kp));
  for (std::size_t i = 0; i < 3; ++i) {
    std::string why;
    CHECK(audit::audit_kernel_relator(kp, i, &why));
    INFO(why);
    CHECK(kp.provenance[i].shift == static_cast<std::int64_t>(i));
  }
  CHECK(kp.dictionary.at(Generator("a_1_2")) == w("x3*x2*x3^-2"));

  // stable across runs
  auto const again = deg3_kernel();
  CHECK(again.presentation == kp.presentation);
  CHECK(to_string(abelianization(kp.presentation)) + "\n"
        == oracle::read_file(oracle::golden_path("kernel_deg3_abelian.txt")));
}

TEST_CASE("the audit rejects a tampered relator", "[kernel]") {
  auto kp   = deg3_kernel();
  auto rels = kp.presentation.relators();
  rels[1]   = rels[1] * w("a0");
  kp.presentation = Presentation(kp.presentation.generators(), rels);
  CHECK_FALSE(audit::audit_kernel_relator(kp, 1));
}
