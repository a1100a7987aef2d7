#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfdiff/error.hpp"
#include "gfdiff/gf2n.hpp"

namespace gfdiff {

// Dense univariate polynomial over a Field. coeffs()[k] is the coefficient
// of x^k; the stored leading coefficient is never zero.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> low_first);

  static Poly constant(Field field, Elem c);
  static Poly monomial(Field field, Elem c, std::size_t k);
  // x^2 + alpha x, the substitution variable of the half-degree companion.
  static Poly artin_schreier_var(Field field, Elem alpha);

  const Field& field() const { return field_; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Elem(); }
  Elem leading() const { return coeffs_.empty() ? Elem() : coeffs_.back(); }

  Elem eval(Elem x) const;
  Poly scaled(Elem c) const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  Field field_;
  std::vector<Elem> coeffs_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
// f(inner(x)).
Poly compose(const Poly& f, const Poly& inner);

// k-th Hasse-Schmidt derivative: the coefficient of u^k in f(x + u).
Poly hasse_schmidt(const Poly& f, unsigned k);
inline Poly derivative(const Poly& f) { return hasse_schmidt(f, 1); }

// Raised when an operation needs a squarefree input.
class NotSquarefreeError : public Error {
 public:
  NotSquarefreeError(const std::string& what, Poly repeated)
      : Error(ErrorCode::NotSquarefree, what), repeated_(std::move(repeated)) {}
  const Poly& repeated_factor() const { return repeated_; }

 private:
  Poly repeated_;
};

// gcd(f, f') when f' != 0, and f itself when f is a square (f' = 0). A
// squarefree f of positive degree yields the constant 1.
Poly squarefree_obstruction(const Poly& f);
bool is_squarefree(const Poly& f);

// Coefficients of a degree-10 polynomial in the a_0-first convention:
// f = sum_{i=0}^{10} a[i] x^(10 - i), a[0] != 0.
struct Degree10Coeffs {
  Field field;
  std::array<Elem, 11> a;

  static Degree10Coeffs from_poly(const Poly& f);
  Poly to_poly() const;
  Degree10Coeffs monic() const;
  Degree10Coeffs scaled(Elem c) const;
};

// D_alpha f together with its half-degree companion L_alpha f, where
// L_alpha f(x^2 + alpha x) = D_alpha f(x).
struct DerivedPair {
  Elem alpha;
  Poly d_poly;
  Poly l_poly;
  int d = 0;  // degree of l_poly
};

// f(x + alpha) + f(x) by binomial expansion mod 2. Degree-10 inputs are
// cross-checked against the closed form.
Poly d_alpha(const Poly& f, Elem alpha);
// Greedy reduction of D_alpha f in powers of x^2 + alpha x.
DerivedPair l_alpha(const Poly& f, Elem alpha);

// Closed forms for degree 10, coefficient by coefficient.
Poly d_alpha_closed_form(const Degree10Coeffs& c, Elem alpha);
Poly l_alpha_closed_form(const Degree10Coeffs& c, Elem alpha);

enum class RootMethod { Auto, Exhaustive, Frobenius };

struct RootSet {
  std::vector<Elem> roots;              // distinct, ascending bit order
  std::vector<unsigned> multiplicities; // parallel to roots
};

// Exhaustive scan up to 2^20 elements under Auto, otherwise the roots of
// gcd(f, x^(2^n) - x) extracted by trace splitting.
RootSet roots_in_field(const Poly& f, RootMethod method = RootMethod::Auto);

inline constexpr std::uint64_t kExhaustiveRootLimit = std::uint64_t{1} << 20;

struct FactorPattern {
  std::vector<unsigned> degrees;  // ascending
  // parts[k - 1] is the product of the irreducible factors of degree k.
  std::vector<Poly> parts;
};

// Distinct-degree factorization of a squarefree f with 1 <= deg f <= 8.
FactorPattern factorization_type(const Poly& f);

// x^(2^(n k)) mod f, i.e. the k-fold Frobenius of x.
Poly frobenius_power_of_x(const Poly& f, unsigned k);

// Image of small.theta() under an embedding GF(2^m) -> GF(2^n), m | n: the
// smallest root (bit order) of small's modulus in big.
Elem subfield_embedding(const Field& small, const Field& big);

// "a0,a1,...,ad" hex, leading coefficient first.
Poly parse_poly(const Field& field, std::string_view text);
std::string format_poly(const Poly& f);

}  // namespace gfdiff
