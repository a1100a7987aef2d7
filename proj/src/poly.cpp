#include "gfdiff/poly.hpp"

#include <algorithm>

namespace gfdiff {

Poly::Poly(Field field, std::vector<Elem> low_first) : field_(std::move(field)), coeffs_(std::move(low_first)) {
  for (Elem c : coeffs_) {
    if (!field_.contains(c)) fail(ErrorCode::Range, "coefficient outside the field");
  }
  trim();
}

Poly Poly::constant(Field field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(Field field, Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::artin_schreier_var(Field field, Elem alpha) { return Poly(std::move(field), {Elem(), alpha, Elem(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Elem Poly::eval(Elem x) const {
  Elem acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.mul(acc, x) + *it;
  return acc;
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Field& F = a.field_;
  std::vector<Elem> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += F.mul(a.coeffs_[i], b.coeffs_[j]);
  }
  return Poly(F, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& F = a.field();
  std::vector<Elem> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {Poly(F), a};
  std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Elem lead_inv = F.inv(b.leading());
  for (int d = a.degree(); d >= db; --d) {
    const Elem top = rem[static_cast<std::size_t>(d)];
    if (top.is_zero()) continue;
    const Elem q = F.mul(top, lead_inv);
    quot[static_cast<std::size_t>(d - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(d - db + j)] += F.mul(q, b.coeff(static_cast<std::size_t>(j)));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return mod(a * b, m); }

Poly compose(const Poly& f, const Poly& inner) {
  Poly acc(f.field());
  for (int k = f.degree(); k >= 0; --k) acc = acc * inner + Poly::constant(f.field(), f.coeff(static_cast<std::size_t>(k)));
  return acc;
}

Poly hasse_schmidt(const Poly& f, unsigned k) {
  if (f.degree() < static_cast<int>(k)) return Poly(f.field());
  std::vector<Elem> v(static_cast<std::size_t>(f.degree()) - k + 1);
  for (std::size_t m = k; m <= static_cast<std::size_t>(f.degree()); ++m) {
    // Lucas: binomial(m, k) is odd iff the bits of k are a subset of those of m.
    if ((m & k) == k) v[m - k] = f.coeff(m);
  }
  return Poly(f.field(), std::move(v));
}

Poly squarefree_obstruction(const Poly& f) {
  const Poly df = derivative(f);
  if (df.is_zero()) return f.monic();
  return gcd(f, df);
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  return squarefree_obstruction(f).degree() <= 0;
}

Degree10Coeffs Degree10Coeffs::from_poly(const Poly& f) {
  if (f.degree() != 10) fail(ErrorCode::Precondition, "expected a polynomial of degree 10, got degree " + std::to_string(f.degree()));
  Degree10Coeffs c{f.field(), {}};
  for (std::size_t i = 0; i <= 10; ++i) c.a[i] = f.coeff(10 - i);
  return c;
}

Poly Degree10Coeffs::to_poly() const {
  std::vector<Elem> v(11);
  for (std::size_t i = 0; i <= 10; ++i) v[10 - i] = a[i];
  return Poly(field, std::move(v));
}

Degree10Coeffs Degree10Coeffs::scaled(Elem c) const {
  Degree10Coeffs out = *this;
  for (auto& x : out.a) x = field.mul(x, c);
  return out;
}

Degree10Coeffs Degree10Coeffs::monic() const {
  if (a[0].is_zero()) fail(ErrorCode::Precondition, "a_0 must be nonzero");
  return scaled(field.inv(a[0]));
}

namespace {

// p[k] = alpha^k for k <= 10.
std::array<Elem, 11> alpha_powers(const Field& F, Elem alpha) {
  std::array<Elem, 11> p;
  p[0] = Elem(1);
  for (std::size_t k = 1; k < p.size(); ++k) p[k] = F.mul(p[k - 1], alpha);
  return p;
}

Elem closed_constant_term(const Degree10Coeffs& c, const std::array<Elem, 11>& p) {
  Elem acc;
  for (std::size_t i = 0; i <= 9; ++i) acc += c.field.mul(c.a[i], p[10 - i]);
  return acc;
}

}  // namespace

Poly d_alpha_closed_form(const Degree10Coeffs& c, Elem alpha) {
  const Field& F = c.field;
  const auto p = alpha_powers(F, alpha);
  const auto& a = c.a;
  auto m = [&](Elem x, std::size_t k) { return F.mul(x, p[k]); };
  std::vector<Elem> v(9);
  v[8] = m(a[0], 2) + m(a[1], 1);
  v[6] = m(a[3], 1);
  v[5] = m(a[3], 2);
  v[4] = m(a[3], 3) + m(a[4], 2) + m(a[5], 1);
  v[3] = m(a[3], 4);
  v[2] = m(a[0], 8) + m(a[3], 5) + m(a[4], 4) + m(a[7], 1);
  v[1] = m(a[1], 8) + m(a[3], 6) + m(a[5], 4) + m(a[7], 2);
  v[0] = closed_constant_term(c, p);
  return Poly(F, std::move(v));
}

Poly l_alpha_closed_form(const Degree10Coeffs& c, Elem alpha) {
  const Field& F = c.field;
  const auto p = alpha_powers(F, alpha);
  const auto& a = c.a;
  auto m = [&](Elem x, std::size_t k) { return F.mul(x, p[k]); };
  std::vector<Elem> v(5);
  v[4] = m(a[0], 2) + m(a[1], 1);
  v[3] = m(a[3], 1);
  v[2] = m(a[0], 6) + m(a[1], 5) + m(a[4], 2) + m(a[5], 1);
  v[1] = m(a[1], 7) + m(a[3], 5) + m(a[5], 3) + m(a[7], 1);
  v[0] = closed_constant_term(c, p);
  return Poly(F, std::move(v));
}

Poly d_alpha(const Poly& f, Elem alpha) {
  if (alpha.is_zero()) fail(ErrorCode::Precondition, "directional derivative needs alpha != 0");
  const Field& F = f.field();
  const int deg = f.degree();
  if (deg <= 0) return Poly(F);

  std::vector<Elem> apow(static_cast<std::size_t>(deg) + 1);
  apow[0] = Elem(1);
  for (std::size_t k = 1; k < apow.size(); ++k) apow[k] = F.mul(apow[k - 1], alpha);

  // (x + alpha)^m + x^m = sum over proper submasks j of m of alpha^(m - j) x^j.
  std::vector<Elem> v(static_cast<std::size_t>(deg));
  for (std::size_t m = 1; m <= static_cast<std::size_t>(deg); ++m) {
    const Elem am = f.coeff(m);
    if (am.is_zero()) continue;
    for (std::size_t j = (m - 1) & m;; j = (j - 1) & m) {
      v[j] += F.mul(am, apow[m - j]);
      if (j == 0) break;
    }
  }
  Poly out(F, std::move(v));

  if (deg == 10 && out != d_alpha_closed_form(Degree10Coeffs::from_poly(f), alpha)) {
    fail(ErrorCode::Internal, "D_alpha f disagrees with its degree-10 closed form");
  }
  return out;
}

DerivedPair l_alpha(const Poly& f, Elem alpha) {
  const Field& F = f.field();
  Poly rem = d_alpha(f, alpha);
  if (rem.is_zero()) fail(ErrorCode::Precondition, "D_alpha f is zero; no half-degree companion");
  if (rem.degree() % 2 != 0) fail(ErrorCode::Internal, "D_alpha f has odd degree");

  const std::size_t top = static_cast<std::size_t>(rem.degree()) / 2;
  const Poly y = Poly::artin_schreier_var(F, alpha);
  std::vector<Poly> ypow{Poly::constant(F, Elem(1))};
  for (std::size_t k = 1; k <= top; ++k) ypow.push_back(ypow.back() * y);

  std::vector<Elem> l(top + 1);
  while (rem.degree() > 0) {
    if (rem.degree() % 2 != 0) fail(ErrorCode::Internal, "odd-degree remainder while reducing D_alpha f in x^2 + alpha x");
    const std::size_t k = static_cast<std::size_t>(rem.degree()) / 2;
    l[k] = rem.leading();
    rem = rem + ypow[k].scaled(l[k]);
  }
  l[0] = rem.coeff(0);

  DerivedPair out{alpha, d_alpha(f, alpha), Poly(F, std::move(l)), 0};
  out.d = out.l_poly.degree();
  if (f.degree() == 10 && out.l_poly != l_alpha_closed_form(Degree10Coeffs::from_poly(f), alpha)) {
    fail(ErrorCode::Internal, "L_alpha f disagrees with its degree-10 closed form");
  }
  return out;
}

Poly frobenius_power_of_x(const Poly& f, unsigned k) {
  const Field& F = f.field();
  Poly h = mod(Poly::monomial(F, Elem(1), 1), f);
  const unsigned squarings = k * F.n();
  for (unsigned i = 0; i < squarings; ++i) h = mulmod(h, h, f);
  return h;
}

namespace {

// Splits a squarefree product of distinct linear factors into its roots.
void split_linear(const Poly& g, std::vector<Elem>& out) {
  const Field& F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(F.div(g.coeff(0), g.coeff(1)));
    return;
  }
  // Tr(beta x) mod g takes values in GF(2) on the roots; varying beta
  // eventually separates any two distinct roots.
  Elem beta(1);
  for (std::uint64_t attempt = 0; attempt < F.size(); ++attempt) {
    Poly term = mod(Poly::monomial(F, beta, 1), g);
    Poly tr(F);
    for (unsigned i = 0; i < F.n(); ++i) {
      tr = tr + term;
      term = mulmod(term, term, g);
    }
    const Poly h = gcd(g, tr);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, out);
      split_linear(divmod(g, h).first, out);
      return;
    }
    beta = F.mul(beta, F.generator());
  }
  fail(ErrorCode::Internal, "trace splitting failed to separate roots");
}

}  // namespace

RootSet roots_in_field(const Poly& f, RootMethod method) {
  if (f.is_zero()) fail(ErrorCode::Precondition, "roots of the zero polynomial are undefined");
  const Field& F = f.field();
  if (method == RootMethod::Auto) method = F.size() <= kExhaustiveRootLimit ? RootMethod::Exhaustive : RootMethod::Frobenius;

  std::vector<Elem> roots;
  if (method == RootMethod::Exhaustive) {
    for (std::uint64_t v = 0; v < F.size(); ++v) {
      const Elem x(static_cast<std::uint32_t>(v));
      if (f.eval(x).is_zero()) roots.push_back(x);
    }
  } else if (f.degree() > 0) {
    const Poly x = Poly::monomial(F, Elem(1), 1);
    const Poly split_part = gcd(f, frobenius_power_of_x(f, 1) + mod(x, f));
    split_linear(split_part, roots);
    std::sort(roots.begin(), roots.end());
  }

  RootSet rs;
  for (Elem r : roots) {
    unsigned mult = 0;
    Poly q = f;
    const Poly lin(F, {r, Elem(1)});
    for (;;) {
      auto [quot, rem] = divmod(q, lin);
      if (!rem.is_zero()) break;
      ++mult;
      q = std::move(quot);
    }
    rs.roots.push_back(r);
    rs.multiplicities.push_back(mult);
  }
  return rs;
}

FactorPattern factorization_type(const Poly& f) {
  if (f.degree() < 1 || f.degree() > 8) {
    fail(ErrorCode::Precondition, "factorization type needs 1 <= degree <= 8, got " + std::to_string(f.degree()));
  }
  const Poly obstruction = squarefree_obstruction(f);
  if (obstruction.degree() > 0) throw NotSquarefreeError("polynomial is not squarefree", obstruction);

  const Field& F = f.field();
  const Poly x = Poly::monomial(F, Elem(1), 1);
  FactorPattern out;
  Poly rest = f.monic();
  Poly h = mod(x, rest);  // x^(q^k) mod rest
  for (unsigned k = 1; k <= static_cast<unsigned>(f.degree()); ++k) {
    if (rest.degree() <= 0) {
      out.parts.push_back(Poly::constant(F, Elem(1)));
      continue;
    }
    for (unsigned i = 0; i < F.n(); ++i) h = mulmod(h, h, rest);
    const Poly g = gcd(rest, h + mod(x, rest));
    out.parts.push_back(g.degree() > 0 ? g : Poly::constant(F, Elem(1)));
    if (g.degree() > 0) {
      if (g.degree() % static_cast<int>(k) != 0) fail(ErrorCode::Internal, "distinct-degree part has inconsistent degree");
      for (int c = 0; c < g.degree() / static_cast<int>(k); ++c) out.degrees.push_back(k);
      rest = divmod(rest, g).first;
      if (rest.degree() > 0) h = mod(h, rest);
    }
  }
  if (rest.degree() > 0) fail(ErrorCode::Internal, "distinct-degree factorization left a remainder");
  return out;
}

Elem subfield_embedding(const Field& small, const Field& big) {
  if (big.n() % small.n() != 0) {
    fail(ErrorCode::Precondition, "GF(2^" + std::to_string(small.n()) + ") is not a subfield of GF(2^" + std::to_string(big.n()) + ")");
  }
  std::vector<Elem> v;
  for (unsigned i = 0; i <= small.n(); ++i) v.push_back(Elem((small.modulus() >> i) & 1u ? 1u : 0u));
  const RootSet rs = roots_in_field(Poly(big, std::move(v)));
  if (rs.roots.empty()) fail(ErrorCode::Internal, "subfield modulus has no root in the larger field");
  return rs.roots.front();
}

Poly parse_poly(const Field& field, std::string_view text) {
  std::vector<Elem> leading_first;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    leading_first.push_back(field.parse_hex(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::reverse(leading_first.begin(), leading_first.end());
  return Poly(field, std::move(leading_first));
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return f.field().to_hex(Elem());
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    if (!out.empty()) out += ',';
    out += f.field().to_hex(f.coeff(static_cast<std::size_t>(k)));
  }
  return out;
}

}  // namespace gfdiff
