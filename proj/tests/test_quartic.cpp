#include <doctest.h>

#include "gfdiff/error.hpp"
#include "gfdiff/quartic.hpp"
#include "support.hpp"

using namespace gfdiff;
using testing::all_elems;
using testing::Gen;

namespace {

Field f16() { return Field::make(4, 0x19); }

Degree10Coeffs klein_family(const Field& F, Elem a2, Elem a4, Elem a5, Elem a6, Elem a7, Elem a8, Elem a9, Elem a10) {
  return {F, {Elem(1), Elem(), a2, Elem(), a4, a5, a6, a7, a8, a9, a10}};
}

Degree10Coeffs x10_x3(const Field& F) {
  return klein_family(F, Elem(), Elem(), Elem(), Elem(), Elem(1), Elem(), Elem(), Elem());
}

CubicPattern brute_pattern(const Field& F, Elem b, Elem c) {
  const Poly z3(F, {F.sqr(c), F.sqr(b), Elem(), Elem(1)});
  switch (testing::count_roots(z3)) {
    case 0: return CubicPattern::Irreducible;
    case 1: return CubicPattern::OneRoot;
    default: return CubicPattern::ThreeRoots;
  }
}

}  // namespace

TEST_CASE("reduce_quartic") {
  const Field F = f16();
  for (Elem alpha : all_elems(F)) {
    if (alpha.is_zero()) continue;
    const QuarticNormal q = reduce_quartic(x10_x3(F), alpha);
    CHECK(q.b == F.pow(alpha, 4));
    CHECK(q.c == F.inv(alpha));
  }
  const QuarticNormal one = reduce_quartic(x10_x3(F), Elem(1));
  CHECK(one.b == Elem(1));
  CHECK(one.c == Elem(1));

  Gen g(31);
  for (int i = 0; i < 100; ++i) {
    const Elem a5 = g.elem(F), alpha = g.nonzero(F);
    const auto co = klein_family(F, Elem(), Elem(), a5, Elem(), Elem(1), Elem(), Elem(), Elem());
    const QuarticNormal q = reduce_quartic(co, alpha);
    CHECK(q.c == F.div(F.mul(F.sqr(alpha), a5) + Elem(1), alpha));
    CHECK(q.to_poly() == l_alpha(co.to_poly(), alpha).l_poly.scaled(F.inv(F.sqr(alpha))));
  }

  Degree10Coeffs bad = x10_x3(F);
  bad.a[3] = Elem(1);
  try {
    reduce_quartic(bad, Elem(1));
    FAIL("a_3 != 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
    CHECK(std::string(e.what()).find("a_3") != std::string::npos);
  }
}

TEST_CASE("resolvents") {
  const Field F = f16();
  SUBCASE("b = 0, c = 1") {
    const ResolventSet r = resolvents({F, Elem(), Elem(1), Elem(9)});
    CHECK(r.r2 == testing::from_low(F, {1, 1, 1}));
    CHECK(r.r3 == testing::from_low(F, {1, 0, 0, 1}));
    CHECK(r.q == testing::from_low(F, {0, 1, 1}));
  }
  SUBCASE("worked F_16 instance") {
    const Elem alpha = F.pow(F.theta(), 10);
    const ResolventSet r = resolvents(reduce_quartic(x10_x3(F), alpha));
    CHECK(r.q == Poly(F, {Elem(1), alpha, Elem(1)}));
    CHECK(roots_in_field(r.q).roots == std::vector<Elem>{F.pow(F.theta(), 9), F.pow(F.theta(), 6)});
  }
  SUBCASE("depressed cubic and independence of d") {
    Gen g(32);
    const Field F8 = Field::make(3);
    for (int i = 0; i < 100; ++i) {
      const Elem b = g.elem(F8), c = g.nonzero(F8);
      const ResolventSet r = resolvents({F8, b, c, g.elem(F8)});
      CHECK(compose(r.r3, Poly(F8, {b, Elem(1)})) == r.depressed_cubic);
      CHECK(r.depressed_cubic == Poly(F8, {F8.sqr(c), F8.sqr(b), Elem(), Elem(1)}));
      const ResolventSet s = resolvents({F8, b, c, g.elem(F8)});
      CHECK(r.r2 == s.r2);
      CHECK(r.r3 == s.r3);
      CHECK(r.q == s.q);
    }
  }
  SUBCASE("inseparable") {
    try {
      resolvents({F, Elem(1), Elem(), Elem(1)});
      FAIL("c = 0 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Precondition);
    }
  }
}

TEST_CASE("Williams pattern") {
  const Field F = f16();
  const Elem alpha = F.pow(F.theta(), 10);
  CHECK(cubic_pattern_williams(F, F.pow(alpha, 4), F.inv(alpha)) == CubicPattern::ThreeRoots);
  for (Elem c : all_elems(F)) {
    if (c.is_zero()) continue;
    const auto p = cubic_pattern_williams(F, Elem(), c);
    CHECK((p == CubicPattern::ThreeRoots) == F.is_cube(F.sqr(c), false));
  }
  CHECK_THROWS_AS(cubic_pattern_williams(F, Elem(1), Elem()), Error);
}

TEST_CASE("Williams pattern matches root counting for n <= 6") {
  for (unsigned n = 1; n <= 6; ++n) {
    const Field F = Field::make(n);
    for (Elem b : all_elems(F)) {
      for (Elem c : all_elems(F)) {
        if (c.is_zero()) continue;
        REQUIRE(cubic_pattern_williams(F, b, c) == brute_pattern(F, b, c));
        const Elem c2 = F.sqr(c);
        REQUIRE(F.trace(F.div(F.pow(b, 6), F.sqr(c2))) == F.trace(F.div(F.pow(b, 3), c2)));
      }
    }
  }
}

TEST_CASE("Williams pattern matches root counting on random pairs") {
  Gen g(33);
  for (unsigned n : {7u, 8u, 11u, 14u, 16u}) {
    const Field F = Field::make(n);
    for (int i = 0; i < 2000; ++i) {
      const Elem b = g.elem(F), c = g.nonzero(F);
      const Poly z3(F, {F.sqr(c), F.sqr(b), Elem(), Elem(1)});
      const std::size_t k = roots_in_field(z3, RootMethod::Frobenius).roots.size();
      const auto want = k == 0 ? CubicPattern::Irreducible : k == 1 ? CubicPattern::OneRoot : CubicPattern::ThreeRoots;
      REQUIRE(cubic_pattern_williams(F, b, c) == want);
    }
  }
}

TEST_CASE("morse_check") {
  const Field F = Field::make(13);
  const Degree10Coeffs f{F, {Elem(1), Elem(1), Elem(), Elem(1), Elem(), Elem(), Elem(), Elem(1), Elem(), Elem(), Elem()}};
  const MorseReport m = morse_check(f);
  CHECK(m.applicable);
  CHECK(m.is_morse);
  CHECK(m.nondegeneracy_value == Elem(1));

  Degree10Coeffs no_a3 = f;
  no_a3.a[3] = Elem();
  CHECK_FALSE(morse_check(no_a3).applicable);
  CHECK_FALSE(morse_check(no_a3).is_morse);

  Gen g(34);
  for (int i = 0; i < 200; ++i) {
    auto a = g.monic10(F);
    a[1] = g.nonzero(F);
    a[3] = g.nonzero(F);
    a[4] = a[5] = Elem();
    a[7] = F.pow(a[1], 7) + F.mul(F.pow(a[1], 4), a[3]);
    const MorseReport r = morse_check({F, a});
    CHECK(r.applicable);
    CHECK(r.nondegeneracy_value.is_zero());
    CHECK_FALSE(r.is_morse);
  }
}

TEST_CASE("Morse formula and critical-point test agree over F_4") {
  // morse_check throws if its two paths disagree, so running it is the check.
  const Field F = Field::make(2);
  std::array<Elem, 11> a{};
  a[0] = Elem(1);
  std::size_t applicable = 0;
  for (std::uint32_t code = 0; code < (1u << 20); ++code) {
    for (int k = 1; k <= 10; ++k) a[static_cast<std::size_t>(k)] = Elem((code >> (2 * (k - 1))) & 3);
    if (a[1].is_zero() || a[3].is_zero()) continue;
    const MorseReport r = morse_check({F, a});
    applicable += r.applicable ? 1 : 0;
    REQUIRE(r.is_morse == !r.nondegeneracy_value.is_zero());
  }
  CHECK(applicable == 9u * (1u << 16));
}

TEST_CASE("klein_check") {
  const Field F = f16();
  const Elem alpha = F.pow(F.theta(), 10);
  const KleinReport k = klein_check(x10_x3(F), alpha);
  CHECK(k.verdict);
  CHECK(k.c_nonzero);
  CHECK(k.trace_condition);
  CHECK(k.q_roots_are_cubes);
  CHECK(k.r3_roots.size() == 3);

  SUBCASE("c = 0") {
    Gen g(35);
    const Elem al = g.nonzero(F), a5 = g.nonzero(F);
    const auto co = klein_family(F, Elem(), Elem(), a5, Elem(), F.mul(F.sqr(al), a5), Elem(), Elem(), Elem());
    const KleinReport r = klein_check(co, al);
    CHECK_FALSE(r.c_nonzero);
    CHECK_FALSE(r.verdict);
  }
  SUBCASE("sweep agrees with root counting") {
    for (Elem al : all_elems(F)) {
      if (al.is_zero()) continue;
      const KleinReport r = klein_check(x10_x3(F), al);
      const ResolventSet rs = resolvents(r.quartic);
      CHECK(r.verdict == (testing::count_roots(rs.r3) == 3));
    }
  }
}

TEST_CASE("klein_check on random Klein-family inputs") {
  Gen g(36);
  for (unsigned n : {5u, 6u, 8u, 9u}) {
    const Field F = Field::make(n);
    for (int i = 0; i < 300; ++i) {
      const auto co = klein_family(F, g.elem(F), g.elem(F), g.elem(F), g.elem(F), g.elem(F), g.elem(F), g.elem(F),
                                   g.elem(F));
      const Elem al = g.nonzero(F);
      const KleinReport r = klein_check(co, al);
      REQUIRE(r.c_nonzero == r.quartic.separable());
      if (!r.c_nonzero) continue;
      const ResolventSet rs = resolvents(r.quartic);
      REQUIRE(r.r3_split == (testing::count_roots(rs.r3) == 3));
      REQUIRE(r.verdict == r.r3_split);
      REQUIRE(r.r2_reducible == (testing::count_roots(rs.r2) > 0));
    }
  }
}
