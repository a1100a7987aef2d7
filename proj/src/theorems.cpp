#include "gfdiff/theorems.hpp"

#include <cmath>
#include <random>

namespace gfdiff {

const char* to_string(TheoremId id) { return id == TheoremId::Main ? "main" : "a1a3zero"; }

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::DeltaGe6: return "delta_ge_6";
    case Conclusion::DeltaEq8: return "delta_eq_8";
    case Conclusion::Inapplicable: return "inapplicable";
  }
  return "?";
}

const char* to_string(MonodromyMode m) { return m == MonodromyMode::CubicS3 ? "cubic_s3" : "quartic_klein"; }

bool ConditionReport::all_conditions_pass() const {
  for (const auto& c : conditions) {
    if (!c.pass) return false;
  }
  return !conditions.empty();
}

namespace {

unsigned fixed_min_n(TheoremId id) {
  const unsigned fixed = id == TheoremId::Main ? kMainTheoremMinN : kKleinTheoremMinN;
  const ChebotarevParams p = id == TheoremId::Main ? chebotarev_threshold(kMainDOmega, 6) : chebotarev_threshold(kKleinDOmega, 8);
  if (p.min_n != fixed) fail(ErrorCode::Internal, "Chebotarev threshold no longer matches the fixed constant");
  return fixed;
}

}  // namespace

ConditionReport thm_main_check(const Degree10Coeffs& coeffs) {
  const Degree10Coeffs mc = coeffs.monic();
  const Field& F = mc.field;
  const auto& a = mc.a;
  ConditionReport rep{TheoremId::Main, F, {}, std::nullopt, fixed_min_n(TheoremId::Main)};

  const bool cond1 = !a[1].is_zero() && !a[3].is_zero();
  rep.conditions.push_back({"i_a1a3_nonzero", cond1, F.to_hex(F.mul(a[1], a[3]))});

  Condition cond2{"ii_trace", false, std::nullopt};
  Condition cond3{"iii_nondegenerate", false, std::nullopt};
  if (cond1) {
    rep.alpha_used = a[1];
    const Elem arg = F.div(F.mul(a[1], a[4]) + a[5], F.mul(F.sqr(a[1]), a[3]));
    cond2.pass = F.trace(arg) == 0;
    cond2.witness = F.to_hex(arg);
    // Hilbert 90: the trace condition is solvability of x^2 + a1 x = (a1 a4 + a5)/a3.
    const bool solvable = F.solve_artin_schreier(a[1], F.div(F.mul(a[1], a[4]) + a[5], a[3])).has_value();
    if (solvable != cond2.pass) fail(ErrorCode::Internal, "trace condition disagrees with Artin-Schreier solvability");

    const Elem expr = F.mul(F.sqr(a[1]), F.sqr(a[4])) + F.sqr(a[5]) + F.mul(F.pow(a[1], 7), a[3]) +
                      F.mul(F.pow(a[1], 4), F.sqr(a[3])) + F.mul(F.mul(F.sqr(a[1]), a[3]), a[5]) + F.mul(a[3], a[7]);
    cond3.pass = !expr.is_zero();
    cond3.witness = F.to_hex(expr);
    const MorseReport morse = morse_check(mc);
    if (morse.nondegeneracy_value != expr) fail(ErrorCode::Internal, "monic Morse expression differs from condition (iii)");
  }
  rep.conditions.push_back(cond2);
  rep.conditions.push_back(cond3);

  if (rep.all_conditions_pass() && F.n() >= rep.min_n) rep.conclusion = Conclusion::DeltaGe6;
  return rep;
}

ConditionReport thm2_check(const Degree10Coeffs& coeffs, std::optional<Elem> alpha, std::uint64_t sweep_cap) {
  const Degree10Coeffs mc = coeffs.monic();
  const Field& F = mc.field;
  const auto& a = mc.a;
  if (!a[1].is_zero() || !a[3].is_zero()) {
    fail(ErrorCode::Precondition, "the Klein-group theorem needs a_1 = a_3 = 0; use the a_1 a_3 != 0 checker");
  }
  ConditionReport rep{TheoremId::A1A3Zero, F, {}, std::nullopt, fixed_min_n(TheoremId::A1A3Zero)};

  // Argument of condition (ii): (alpha^5 + alpha a4 + a5) / alpha^3.
  auto trace_arg = [&](Elem al) {
    return F.div(F.pow(al, 5) + F.mul(al, a[4]) + a[5], F.pow(al, 3));
  };
  auto evaluate = [&](Elem al) {
    const Elem arg = trace_arg(al);
    const bool cond2 = F.trace(arg) == 0;
    const KleinReport k = klein_check(mc, al);
    const bool cond1 = k.verdict;
    if (cond2) {
      // Condition (ii) is solvability of x^2 + alpha x = (alpha^5 + alpha a4 + a5)/alpha.
      const Elem rhs = F.div(F.pow(al, 5) + F.mul(al, a[4]) + a[5], al);
      if (!F.solve_artin_schreier(al, rhs)) fail(ErrorCode::Internal, "trace condition holds but x^2 + alpha x = b has no root");
    }
    std::string w1 = "b=" + F.to_hex(k.quartic.b) + ",c=" + F.to_hex(k.quartic.c);
    rep.conditions = {{"i_klein", cond1, w1}, {"ii_trace", cond2, F.to_hex(arg)}};
    rep.alpha_used = al;
    rep.klein = k;
    return cond1 && cond2;
  };

  bool found = false;
  if (alpha) {
    if (alpha->is_zero() || !F.contains(*alpha)) fail(ErrorCode::Precondition, "alpha must be a nonzero field element");
    rep.alphas_tried = 1;
    found = evaluate(*alpha);
  } else {
    const std::uint64_t last = std::min<std::uint64_t>(F.mask(), sweep_cap);
    for (std::uint64_t v = 1; v <= last && !found; ++v) {
      const Elem al(static_cast<std::uint32_t>(v));
      ++rep.alphas_tried;
      // Cheap filters first: condition (ii) and c != 0.
      if (F.trace(trace_arg(al)) != 0) continue;
      if ((F.mul(F.sqr(al), a[5]) + a[7]).is_zero()) continue;
      found = evaluate(al);
    }
    if (!found) {
      rep.conditions = {{"i_klein", false, std::nullopt}, {"ii_trace", false, std::nullopt}};
      rep.alpha_used.reset();
      rep.klein.reset();
    }
  }

  if (found && F.n() >= rep.min_n) rep.conclusion = Conclusion::DeltaEq8;
  return rep;
}

ConditionReport check_degree10(const Degree10Coeffs& coeffs, std::optional<Elem> alpha, std::uint64_t sweep_cap) {
  const Degree10Coeffs mc = coeffs.monic();
  if (mc.a[1].is_zero() && mc.a[3].is_zero()) return thm2_check(mc, alpha, sweep_cap);
  if (alpha && *alpha != mc.a[1]) {
    fail(ErrorCode::Precondition, "the a_1 a_3 != 0 checker always uses alpha = a_1/a_0 = " + mc.field.to_hex(mc.a[1]));
  }
  return thm_main_check(mc);
}

bool chebotarev_positive(unsigned n, std::uint64_t g_bound, unsigned d_omega) {
  using u128 = unsigned __int128;
  if (n > 60) fail(ErrorCode::Range, "threshold search is limited to n <= 60");
  if (g_bound >= (std::uint64_t{1} << 30)) fail(ErrorCode::Range, "genus bound too large for exact comparison");
  const u128 q = u128{1} << n;
  const u128 sub = u128{2} * g_bound + u128{3} * d_omega;
  if (q <= sub) return false;
  const u128 A = q - sub;
  // A > 2 g 2^(n/2)  <=>  A^2 > 4 g^2 2^n, valid for odd n as well.
  return A * A > u128{4} * g_bound * g_bound * q;
}

ChebotarevParams chebotarev_threshold(unsigned d_omega, unsigned deg_d_poly) {
  if (d_omega < 1) fail(ErrorCode::Precondition, "d_omega must be at least 1");
  if (deg_d_poly < 3) fail(ErrorCode::Precondition, "deg D_alpha f must be at least 3");
  ChebotarevParams p{d_omega, deg_d_poly};
  // Genus is an integer, so the bound (deg - 3) d / 2 + 1 is floored.
  p.g_bound = static_cast<std::uint64_t>(deg_d_poly - 3) * d_omega / 2 + 1;
  for (unsigned n = 1; n <= 60; ++n) {
    if (chebotarev_positive(n, p.g_bound, d_omega)) {
      p.min_n = n;
      const double q = std::ldexp(1.0, static_cast<int>(n));
      const double g = static_cast<double>(p.g_bound);
      const double d = d_omega;
      p.v_lower_bound = q / d - (2.0 / d) * (g * std::sqrt(q) + g + d);
      return p;
    }
  }
  fail(ErrorCode::Range, "no n <= 60 satisfies the Chebotarev bound");
}

std::map<Pattern, double> expected_densities(MonodromyMode mode) {
  if (mode == MonodromyMode::CubicS3) return {{{1, 1, 1}, 1.0 / 6}, {{1, 2}, 1.0 / 2}, {{3}, 1.0 / 3}};
  return {{{1, 1, 1, 1}, 1.0 / 4}, {{2, 2}, 3.0 / 4}};
}

MonodromyStats monodromy_stats(const Degree10Coeffs& coeffs, Elem alpha, MonodromyMode mode, std::uint64_t samples,
                               std::uint64_t seed) {
  const Degree10Coeffs mc = coeffs.monic();
  const Field& F = mc.field;
  if (alpha.is_zero() || !F.contains(alpha)) fail(ErrorCode::Precondition, "alpha must be a nonzero field element");

  Poly base(F);
  if (mode == MonodromyMode::CubicS3) {
    if (mc.a[1].is_zero() || mc.a[3].is_zero()) fail(ErrorCode::Precondition, "cubic_s3 mode needs a_1 a_3 != 0");
    if (alpha != mc.a[1]) fail(ErrorCode::Precondition, "cubic_s3 mode needs alpha = a_1/a_0");
    base = l_alpha(mc.to_poly(), alpha).l_poly;
  } else {
    if (!klein_check(mc, alpha).verdict) fail(ErrorCode::Precondition, "quartic_klein mode needs a passing Klein check at alpha");
    base = l_alpha(mc.to_poly(), alpha).l_poly.scaled(F.inv(F.sqr(alpha)));
  }

  MonodromyStats st{mode, F, alpha, seed};
  const auto expected = expected_densities(mode);
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // 2^n is a power of two, so masking the raw draw is exactly uniform.
    const Elem t0(static_cast<std::uint32_t>(rng() & F.mask()));
    ++st.histogram.samples;
    const Poly spec = base + Poly::constant(F, t0);
    if (!is_squarefree(spec)) {
      ++st.histogram.excluded;
      continue;
    }
    Pattern pat = factorization_type(spec).degrees;
    if (mode == MonodromyMode::QuarticKlein && !expected.contains(pat)) {
      std::string shape;
      for (unsigned d : pat) shape += (shape.empty() ? "" : ",") + std::to_string(d);
      fail(ErrorCode::Internal, "factorization pattern (" + shape + ") is impossible for Klein monodromy at t0 = " + F.to_hex(t0));
    }
    ++st.histogram.counts[pat];
  }

  const std::uint64_t effective = st.histogram.samples - st.histogram.excluded;
  auto stat_for = [&](const Pattern& pat, double p) {
    PatternStat ps{pat};
    auto it = st.histogram.counts.find(pat);
    ps.count = it == st.histogram.counts.end() ? 0 : it->second;
    ps.expected = p;
    ps.observed = effective == 0 ? 0.0 : static_cast<double>(ps.count) / static_cast<double>(effective);
    const double sigma = effective == 0 ? 0.0 : std::sqrt(p * (1 - p) / static_cast<double>(effective));
    ps.tolerance = std::max(3 * sigma, kToleranceFloor);
    ps.within = effective > 0 && std::abs(ps.observed - ps.expected) <= ps.tolerance;
    return ps;
  };
  for (const auto& [pat, p] : expected) st.patterns.push_back(stat_for(pat, p));
  for (const auto& [pat, cnt] : st.histogram.counts) {
    if (!expected.contains(pat)) st.patterns.push_back(stat_for(pat, 0.0));
  }
  const Pattern split(mode == MonodromyMode::CubicS3 ? 3 : 4, 1u);
  for (const auto& ps : st.patterns) {
    if (ps.pattern == split) st.split_fraction = ps.observed;
  }
  return st;
}

}  // namespace gfdiff
