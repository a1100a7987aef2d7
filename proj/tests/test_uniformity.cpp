#include <doctest.h>

#include <sstream>

#include "gfdiff/error.hpp"
#include "gfdiff/theorems.hpp"
#include "gfdiff/uniformity.hpp"
#include "support.hpp"

using namespace gfdiff;
using testing::all_elems;
using testing::Gen;

namespace {

Poly monomial(const Field& F, std::size_t k) { return Poly::monomial(F, Elem(1), k); }

void check_row_invariants(const Poly& f, const SpectrumRow& row) {
  std::uint64_t total = 0;
  for (const auto& [beta, cnt] : row.counts) {
    REQUIRE(cnt % 2 == 0);
    total += cnt;
  }
  REQUIRE(total == f.field().size());
  if (row.d_degree > 0) REQUIRE(row.delta_alpha <= static_cast<std::uint64_t>(row.d_degree));
}

}  // namespace

TEST_CASE("ddt_row") {
  SUBCASE("Gold cube") {
    const Field F = Field::make(3);
    CHECK(ddt_row(monomial(F, 3), Elem(1)).delta_alpha == 2);
  }
  SUBCASE("additive monomial") {
    const Field F = Field::make(5);
    const SpectrumRow r = ddt_row(monomial(F, 2), Elem(7));
    REQUIRE(r.counts.size() == 1);
    CHECK(r.counts[0].first == F.sqr(Elem(7)));
    CHECK(r.delta_alpha == 32);
  }
  SUBCASE("theorem witnesses") {
    const Field F13 = Field::make(13);
    const SpectrumRow a = ddt_row(parse_poly(F13, "1,1,0,1,0,0,0,1,0,0,0"), Elem(1));
    CHECK(a.d_degree == 6);
    CHECK_FALSE(a.split_betas.empty());
    CHECK(a.delta_alpha == 6);
    const Field F16 = Field::make(16);
    const Poly f = parse_poly(F16, "1,0,0,0,0,0,0,1,0,0,0");
    // L_alpha f is affine-linearized here, so every row is uniform. The first
    // alpha passing the Klein conditions has a kernel element of trace 1 and
    // stops at 4; alpha = 1e is the first row reaching 8.
    const SpectrumRow b = ddt_row(f, Elem(0xf));
    CHECK(b.d_degree == 8);
    CHECK(b.split_betas.empty());
    CHECK(b.delta_alpha == 4);
    CHECK(b.counts.size() == 16384);
    const SpectrumRow c = ddt_row(f, Elem(0x1e));
    CHECK(c.delta_alpha == 8);
    CHECK(c.split_betas.size() == 8192);
    for (std::size_t i = 0; i < c.split_betas.size(); i += 1024) CHECK(count_preimages(f, Elem(0x1e), c.split_betas[i]) == 8);
  }
  SUBCASE("guard") {
    const Field F = Field::make(25);
    try {
      ddt_row(monomial(F, 3), Elem(1));
      FAIL("guard not applied");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Resource);
      CHECK(std::string(e.what()).find("--allow-large") != std::string::npos);
    }
  }
}

TEST_CASE("row invariants and backward counting") {
  Gen g(51);
  for (unsigned n : {4u, 7u, 10u}) {
    const Field F = Field::make(n);
    for (int i = 0; i < 40; ++i) {
      const Poly f = g.poly(F, 2 + static_cast<int>(g.below(9)));
      const Elem alpha = g.nonzero(F);
      const SpectrumRow row = ddt_row(f, alpha);
      check_row_invariants(f, row);
      for (int k = 0; k < 5; ++k) {
        const Elem beta = g.elem(F);
        std::uint64_t want = 0;
        for (const auto& [b, c] : row.counts) want = b == beta ? c : want;
        REQUIRE(count_preimages(f, alpha, beta) == want);
      }
    }
  }
}

TEST_CASE("delta_full") {
  CHECK(delta_full(monomial(Field::make(5), 3)).delta == 2);
  CHECK(delta_full(monomial(Field::make(7), 3)).delta == 2);
  const Field F = Field::make(6);
  const Poly affine = monomial(F, 4) + monomial(F, 1) + Poly::constant(F, Elem(9));
  CHECK(delta_full(affine).delta == 64);
  try {
    delta_full(monomial(Field::make(15), 3));
    FAIL("guard not applied");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Resource);
  }
  SUBCASE("witness is the smallest maximizer") {
    Gen g(52);
    const Field K = Field::make(5);
    for (int i = 0; i < 20; ++i) {
      const Poly f = g.poly(K, 10);
      const DeltaResult r = delta_full(f);
      std::uint64_t best = 0;
      Elem ba, bb;
      for (Elem a : all_elems(K)) {
        if (a.is_zero()) continue;
        for (const auto& [beta, cnt] : ddt_row(f, a).counts) {
          if (cnt > best) best = cnt, ba = a, bb = beta;
        }
      }
      REQUIRE(r.delta == best);
      REQUIRE(r.alpha == ba);
      REQUIRE(r.beta == bb);
      REQUIRE(delta_full(f, false, 1).alpha == r.alpha);
    }
  }
}

TEST_CASE("delta_full invariances for n <= 6") {
  Gen g(53);
  for (unsigned n = 2; n <= 6; ++n) {
    const Field F = Field::make(n);
    for (int i = 0; i < 15; ++i) {
      const Poly f = g.poly(F, 10);
      const std::uint64_t d = delta_full(f).delta;
      REQUIRE(delta_full(f.scaled(g.nonzero(F))).delta == d);
      Poly additive = Poly::constant(F, g.elem(F));
      for (std::size_t k = 1; k <= 8; k *= 2) additive = additive + Poly::monomial(F, g.elem(F), k);
      REQUIRE(delta_full(f + additive).delta == d);
    }
  }
}

TEST_CASE("a_1 = 0 pins delta to 8") {
  Gen g(54);
  const Field F = Field::make(6);
  for (int i = 0; i < 20; ++i) {
    auto a = g.monic10(F);
    a[1] = Elem();
    const Poly f = Degree10Coeffs{F, a}.to_poly();
    for (Elem al : all_elems(F)) {
      if (!al.is_zero()) REQUIRE(d_alpha(f, al).degree() == 8);
    }
    REQUIRE(delta_full(f).delta <= 8);
  }
}

TEST_CASE("csv export") {
  const Field F = Field::make(3);
  std::ostringstream os;
  write_ddt_csv(os, monomial(F, 3));
  const std::string s = os.str();
  CHECK(s.rfind("alpha_hex,beta_hex,count\n", 0) == 0);
  // 7 alphas, each with 4 attained values of count 2.
  CHECK(std::count(s.begin(), s.end(), '\n') == 1 + 7 * 4);
}
