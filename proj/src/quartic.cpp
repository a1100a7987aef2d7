#include "gfdiff/quartic.hpp"

#include <string>

namespace gfdiff {

namespace {

void require_klein_setting(const Degree10Coeffs& coeffs, Elem alpha) {
  if (coeffs.a[0] != Elem(1)) fail(ErrorCode::Precondition, "quartic reduction needs a monic f (a_0 = 1)");
  if (!coeffs.a[1].is_zero()) fail(ErrorCode::Precondition, "quartic reduction needs a_1 = 0");
  if (!coeffs.a[3].is_zero()) fail(ErrorCode::Precondition, "quartic reduction needs a_3 = 0");
  if (alpha.is_zero()) fail(ErrorCode::Precondition, "quartic reduction needs alpha != 0");
}

unsigned trace_of_one(const Field& F) { return F.n() % 2; }

// Roots of Q(T) = T^2 + c^2 T + b^6 and whether both are cubes: in the base
// field when n is even, in GF(2^2n) when n is odd.
struct QRoots {
  std::array<ExtElem, 2> roots;
  bool cubes = false;
};

QRoots q_roots_and_cubes(const Field& F, Elem b, Elem c) {
  const QuadraticExtension E(F);
  QRoots out{E.quadratic_roots(F.sqr(c), F.pow(b, 6)), true};
  for (const ExtElem& r : out.roots) {
    bool cube = false;
    if (F.n() % 2 == 0) {
      cube = E.in_base(r) && F.is_cube(r.re, false);
    } else {
      cube = E.is_cube(r);
    }
    out.cubes = out.cubes && cube;
  }
  return out;
}

}  // namespace

const char* to_string(CubicPattern p) {
  switch (p) {
    case CubicPattern::Irreducible: return "irreducible";
    case CubicPattern::OneRoot: return "one_root";
    case CubicPattern::ThreeRoots: return "three_roots";
  }
  return "?";
}

Poly QuarticNormal::to_poly() const { return Poly(field, {d, c, b, Elem(), Elem(1)}); }

QuarticNormal reduce_quartic(const Degree10Coeffs& coeffs, Elem alpha) {
  require_klein_setting(coeffs, alpha);
  const Field& F = coeffs.field;
  const auto& a = coeffs.a;
  const Elem ainv = F.inv(alpha);
  auto p = [&](unsigned k) { return F.pow(alpha, k); };

  QuarticNormal q{F, Elem(), Elem(), Elem(), alpha};
  q.b = F.mul(p(5) + F.mul(alpha, a[4]) + a[5], ainv);
  q.c = F.mul(F.mul(p(2), a[5]) + a[7], ainv);
  q.d = F.mul(p(9) + F.mul(p(7), a[2]) + F.mul(p(5), a[4]) + F.mul(p(4), a[5]) + F.mul(p(3), a[6]) +
                  F.mul(p(2), a[7]) + F.mul(alpha, a[8]) + a[9],
              ainv);

  const Poly via_companion = l_alpha(coeffs.to_poly(), alpha).l_poly.scaled(F.inv(F.sqr(alpha)));
  if (via_companion != q.to_poly()) fail(ErrorCode::Internal, "reduced quartic disagrees with L_alpha f / alpha^2");
  return q;
}

ResolventSet resolvents(const QuarticNormal& q) {
  if (!q.separable()) fail(ErrorCode::Precondition, "quartic is inseparable (c = 0)");
  const Field& F = q.field;
  const Elem b = q.b;
  const Elem c2 = F.sqr(q.c);
  const Elem b2 = F.sqr(b);
  const Elem b3 = F.mul(b2, b);
  ResolventSet r{
      Poly(F, {F.mul(b3 + c2, c2), c2, Elem(1)}),
      Poly(F, {c2, Elem(), b, Elem(1)}),
      Poly(F, {F.sqr(b3), c2, Elem(1)}),
      Poly(F, {c2, b2, Elem(), Elem(1)}),
  };
  if (compose(r.r3, Poly(F, {b, Elem(1)})) != r.depressed_cubic) {
    fail(ErrorCode::Internal, "R_3(z + b) is not the depressed cubic");
  }
  return r;
}

CubicPattern cubic_pattern_williams(const Field& F, Elem b, Elem c) {
  if (c.is_zero()) fail(ErrorCode::Precondition, "cubic pattern needs c != 0");
  const Elem ratio = F.div(F.pow(b, 6), F.pow(c, 4));
  if (F.trace(ratio) != trace_of_one(F)) return CubicPattern::OneRoot;
  return q_roots_and_cubes(F, b, c).cubes ? CubicPattern::ThreeRoots : CubicPattern::Irreducible;
}

MorseReport morse_check(const Degree10Coeffs& coeffs) {
  const Field& F = coeffs.field;
  const auto& a = coeffs.a;
  auto m = [&](std::initializer_list<Elem> xs) {
    Elem acc(1);
    for (Elem x : xs) acc = F.mul(acc, x);
    return acc;
  };
  auto p = [&](Elem x, unsigned k) { return F.pow(x, k); };

  MorseReport rep;
  rep.applicable = !a[1].is_zero() && !a[3].is_zero();
  if (!rep.applicable) return rep;

  rep.nondegeneracy_value = m({p(a[0], 4), p(a[1], 2), p(a[4], 2)}) + m({p(a[0], 6), p(a[5], 2)}) +
                            m({p(a[1], 7), a[3]}) + m({p(a[0], 2), p(a[1], 4), p(a[3], 2)}) +
                            m({p(a[0], 4), p(a[1], 2), a[3], a[5]}) + m({p(a[0], 6), a[3], a[7]});
  rep.is_morse = !rep.nondegeneracy_value.is_zero();

  // Critical points are degenerate iff the root of g^[2] is also a root of g'.
  const Poly f = coeffs.to_poly();
  const DerivedPair g = l_alpha(f, F.div(a[1], a[0]));
  if (g.d != 3) fail(ErrorCode::Internal, "L_{a1/a0} f does not have degree 3");
  const Poly g1 = hasse_schmidt(g.l_poly, 1);
  const Poly g2 = hasse_schmidt(g.l_poly, 2);
  const Elem root = F.div(g2.coeff(0), g2.coeff(1));
  const bool analytic = !g1.eval(root).is_zero();
  if (analytic != rep.is_morse) fail(ErrorCode::Internal, "Morse formula and critical-point test disagree");
  return rep;
}

KleinReport klein_check(const Degree10Coeffs& coeffs, Elem alpha) {
  const QuarticNormal q = reduce_quartic(coeffs, alpha);
  const Field& F = q.field;
  KleinReport rep{.quartic = q};
  rep.c_nonzero = q.separable();
  if (!rep.c_nonzero) return rep;

  const ResolventSet res = resolvents(q);
  const Elem c2 = F.sqr(q.c);
  rep.trace_condition = F.trace(F.div(F.pow(q.b, 3), c2)) == trace_of_one(F);
  const QRoots qr = q_roots_and_cubes(F, q.b, q.c);
  rep.q_roots = {qr.roots[0], qr.roots[1]};
  rep.q_roots_are_cubes = qr.cubes;
  rep.r2_reducible = F.trace(F.div(F.mul(F.pow(q.b, 3) + c2, c2), F.sqr(c2))) == 0;

  rep.r3_roots = roots_in_field(res.r3, RootMethod::Frobenius).roots;
  rep.r3_split = rep.r3_roots.size() == 3;

  const bool williams = cubic_pattern_williams(F, q.b, q.c) == CubicPattern::ThreeRoots;
  if (williams != rep.r3_split) fail(ErrorCode::Internal, "Williams criterion disagrees with R_3 root count");
  if (rep.r3_split != (rep.trace_condition && rep.q_roots_are_cubes)) {
    fail(ErrorCode::Internal, "R_3 splitting disagrees with the trace and cube conditions");
  }
  if (rep.r3_split && !rep.r2_reducible) fail(ErrorCode::Internal, "R_3 splits but R_2 is irreducible");
  rep.verdict = rep.c_nonzero && rep.r3_split;
  return rep;
}

}  // namespace gfdiff
