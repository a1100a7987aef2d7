#pragma once

#include <optional>
#include <vector>

#include "gfdiff/gf2n.hpp"
#include "gfdiff/poly.hpp"

namespace gfdiff {

// x^4 + b x^2 + c x + d. When built from a degree-10 f with a_0 = 1 and
// a_1 = a_3 = 0, this is (1/alpha^2) L_alpha f and d is its t-free constant.
struct QuarticNormal {
  Field field;
  Elem b;
  Elem c;
  Elem d;
  std::optional<Elem> alpha;

  bool separable() const { return !c.is_zero(); }
  Poly to_poly() const;
};

struct ResolventSet {
  Poly r2;              // x^2 + c^2 x + (b^3 + c^2) c^2
  Poly r3;              // x^3 + b x^2 + c^2
  Poly q;               // T^2 + c^2 T + b^6
  Poly depressed_cubic; // z^3 + b^2 z + c^2 = r3(z + b)
};

enum class CubicPattern { Irreducible, OneRoot, ThreeRoots };

const char* to_string(CubicPattern p);

struct MorseReport {
  bool applicable = false;        // a_1 a_3 != 0
  Elem nondegeneracy_value;       // zero when not applicable
  bool is_morse = false;
};

struct KleinReport {
  bool c_nonzero = false;
  bool r3_split = false;
  bool trace_condition = false;   // Tr(b^3/c^2) = Tr(1)
  bool q_roots_are_cubes = false;
  bool r2_reducible = false;
  bool verdict = false;
  QuarticNormal quartic;
  std::vector<ExtElem> q_roots;   // empty when c = 0
  std::vector<Elem> r3_roots;
};

QuarticNormal reduce_quartic(const Degree10Coeffs& coeffs, Elem alpha);

// Built from b and c only; d never enters. Throws Precondition when c = 0.
ResolventSet resolvents(const QuarticNormal& q);

// Root pattern of z^3 + b^2 z + c^2 over the base field via the trace and
// cube criteria. Throws Precondition when c = 0.
CubicPattern cubic_pattern_williams(const Field& field, Elem b, Elem c);

MorseReport morse_check(const Degree10Coeffs& coeffs);

KleinReport klein_check(const Degree10Coeffs& coeffs, Elem alpha);

}  // namespace gfdiff
