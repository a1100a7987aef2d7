#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gfdiff {

// Element of GF(2^n) in polynomial-basis coordinates: bit i is the
// coordinate of theta^i, theta being a root of the field modulus.
struct Elem {
  std::uint32_t bits = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }

  friend constexpr Elem operator+(Elem a, Elem b) { return Elem(a.bits ^ b.bits); }
  constexpr Elem& operator+=(Elem o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr unsigned kMaxDegree = 32;

// Smallest (as an integer) irreducible polynomial of degree n over GF(2),
// 1 <= n <= 32. Bit i is the coefficient of X^i.
std::uint64_t default_modulus(unsigned n);

// Irreducibility over GF(2) by gcd with X^(2^k) - X for k <= deg/2. On
// failure, *factor_degree (when non-null) receives the degree of an
// irreducible factor.
bool is_irreducible_gf2(std::uint64_t modulus, unsigned* factor_degree = nullptr);

// Modulus text is hex, most significant bit first: X^4+X^3+1 is "19".
std::uint64_t parse_modulus_hex(std::string_view text);
std::string modulus_to_hex(std::uint64_t modulus);

// A concrete GF(2^n). Immutable after construction and cheap to copy; copies
// share the precomputed tables.
class Field {
 public:
  static Field make(unsigned n);
  static Field make(unsigned n, std::uint64_t modulus);

  unsigned n() const { return impl_->n; }
  std::uint64_t modulus() const { return impl_->modulus; }
  std::uint64_t size() const { return std::uint64_t{1} << impl_->n; }
  std::uint32_t mask() const { return static_cast<std::uint32_t>(size() - 1); }
  Elem generator() const { return impl_->generator; }
  Elem one() const { return Elem(1); }
  // The class of X modulo the modulus.
  Elem theta() const;

  bool contains(Elem a) const { return (a.bits & ~mask()) == 0; }
  bool has_log_tables() const { return !impl_->exp.empty(); }

  Elem mul(Elem a, Elem b) const;
  // Shift-xor carryless product followed by reduction; never touches tables.
  Elem mul_reference(Elem a, Elem b) const;
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem sqrt(Elem a) const;

  // Absolute trace to GF(2). trace() uses the precomputed linear form,
  // trace_reference() sums the Frobenius orbit.
  unsigned trace(Elem a) const;
  unsigned trace_reference(Elem a) const;

  // Both solutions {x, x + alpha} of x^2 + alpha x = b, or nothing when
  // Tr(b / alpha^2) = 1. Throws Precondition for alpha = 0.
  std::optional<std::pair<Elem, Elem>> solve_artin_schreier(Elem alpha, Elem b) const;

  // Cube test. Base-field mode needs 3 | 2^n - 1 (n even) and throws
  // Unsupported otherwise; extension mode lifts a into GF(2^2n).
  bool is_cube(Elem a, bool in_quadratic_extension) const;

  std::uint64_t multiplicative_order(Elem a) const;

  std::string to_hex(Elem a) const;
  Elem parse_hex(std::string_view text) const;
  std::string modulus_hex() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.n() == b.n() && a.modulus() == b.modulus();
  }

 private:
  struct Impl {
    unsigned n = 0;
    std::uint64_t modulus = 0;
    Elem generator;
    std::uint32_t trace_mask = 0;
    // exp has 2(2^n - 1) entries so log sums need no reduction.
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// GF(2^2n) = GF(2^n)[w] / (w^2 + w + delta) with Tr(delta) = 1.
struct ExtElem {
  Elem re;  // coefficient of 1
  Elem im;  // coefficient of w

  friend constexpr ExtElem operator+(ExtElem a, ExtElem b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr bool operator==(ExtElem, ExtElem) = default;
};

class QuadraticExtension {
 public:
  explicit QuadraticExtension(Field base);

  const Field& base() const { return base_; }
  // Constant term of the defining quadratic w^2 + w + delta.
  Elem delta() const { return delta_; }

  ExtElem lift(Elem a) const { return {a, Elem()}; }
  bool in_base(ExtElem a) const { return a.im.is_zero(); }
  ExtElem one() const { return {Elem(1), Elem()}; }

  ExtElem mul(ExtElem a, ExtElem b) const;
  ExtElem sqr(ExtElem a) const { return mul(a, a); }
  ExtElem inv(ExtElem a) const;
  ExtElem pow(ExtElem a, std::uint64_t e) const;

  // True iff a = y^3 for some y in GF(2^2n); 0 counts as a cube.
  bool is_cube(ExtElem a) const;

  // Roots of T^2 + B T + C (base coefficients). Both roots are returned even
  // when they coincide (B = 0).
  std::array<ExtElem, 2> quadratic_roots(Elem B, Elem C) const;

  std::string to_hex(ExtElem a) const;

 private:
  Field base_;
  Elem delta_;
};

}  // namespace gfdiff
