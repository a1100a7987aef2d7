#include "gfdiff/gf2n.hpp"

#include <bit>
#include <cctype>
#include <cstdio>
#include <vector>

#include "gfdiff/error.hpp"

namespace gfdiff {

namespace {

constexpr std::uint64_t kDefaultModuli[kMaxDegree + 1] = {
    0x0,        0x2,         0x7,         0xb,         0x13,
    0x25,       0x43,        0x83,        0x11b,       0x203,
    0x409,      0x805,       0x1009,      0x201b,      0x4021,
    0x8003,     0x1002b,     0x20009,     0x40009,     0x80027,
    0x100009,   0x200005,    0x400003,    0x800021,    0x100001b,
    0x2000009,  0x400001b,   0x8000027,   0x10000003,  0x20000005,
    0x40000003, 0x80000009,  0x10000008d,
};

// Log/antilog tables are built up to this degree.
constexpr unsigned kTableMaxDegree = 16;

int degree_of(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  std::uint64_t aa = a;
  while (b != 0) {
    if (b & 1u) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  return acc;
}

std::uint64_t reduce(std::uint64_t p, std::uint64_t m) {
  const int dm = degree_of(m);
  for (int d = degree_of(p); d >= dm; d = degree_of(p)) p ^= m << (d - dm);
  return p;
}

std::uint64_t mulmod_gf2(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return reduce(clmul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), m);
}

std::uint64_t gcd_gf2(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = reduce(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    out.push_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
  return out;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

std::uint64_t parse_hex_u64(std::string_view text, const char* what) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty()) fail(ErrorCode::Parse, std::string("empty hex ") + what);
  std::uint64_t v = 0;
  for (char c : s) {
    const int d = hex_digit(c);
    if (d < 0) fail(ErrorCode::Parse, std::string("invalid hex digit in ") + what + ": '" + std::string(text) + "'");
    if (v >> 60) fail(ErrorCode::Parse, std::string(what) + " too wide: '" + std::string(text) + "'");
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return v;
}

}  // namespace

std::uint64_t default_modulus(unsigned n) {
  if (n < 1 || n > kMaxDegree) fail(ErrorCode::Range, "field degree must be in [1, 32], got " + std::to_string(n));
  return kDefaultModuli[n];
}

bool is_irreducible_gf2(std::uint64_t modulus, unsigned* factor_degree) {
  const int n = degree_of(modulus);
  if (n < 1) return false;
  const std::uint64_t x = reduce(0x2, modulus);
  std::uint64_t h = x;
  for (int k = 1; k <= n / 2; ++k) {
    h = mulmod_gf2(h, h, modulus);
    const std::uint64_t g = gcd_gf2(modulus, h ^ x);
    if (degree_of(g) > 0) {
      // The smallest k with a nontrivial gcd is the degree of some factor.
      if (factor_degree != nullptr) *factor_degree = static_cast<unsigned>(k);
      return false;
    }
  }
  return true;
}

std::uint64_t parse_modulus_hex(std::string_view text) { return parse_hex_u64(text, "modulus"); }

std::string modulus_to_hex(std::uint64_t modulus) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(modulus));
  return buf;
}

Field Field::make(unsigned n) { return make(n, default_modulus(n)); }

Field Field::make(unsigned n, std::uint64_t modulus) {
  if (n < 1 || n > kMaxDegree) fail(ErrorCode::Range, "field degree must be in [1, 32], got " + std::to_string(n));
  if (degree_of(modulus) != static_cast<int>(n)) {
    fail(ErrorCode::Range, "modulus " + modulus_to_hex(modulus) + " does not have degree " + std::to_string(n));
  }
  unsigned factor = 0;
  if (!is_irreducible_gf2(modulus, &factor)) {
    fail(ErrorCode::Reducible, "modulus " + modulus_to_hex(modulus) + " is reducible: it has a factor of degree " +
                                   std::to_string(factor));
  }

  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->modulus = modulus;
  Field probe(impl);

  std::uint32_t tmask = 0;
  Elem basis(1);
  for (unsigned i = 0; i < n; ++i) {
    if (probe.trace_reference(basis)) tmask |= 1u << i;
    basis = probe.mul_reference(basis, probe.theta());
  }
  impl->trace_mask = tmask;

  const std::uint64_t group = probe.size() - 1;
  const auto primes = prime_factors(group);
  for (std::uint64_t g = 1; g <= probe.mask(); ++g) {
    const Elem cand(static_cast<std::uint32_t>(g));
    bool primitive = true;
    for (auto p : primes) {
      if (probe.pow(cand, group / p) == Elem(1)) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      impl->generator = cand;
      break;
    }
  }
  if (impl->generator.is_zero()) fail(ErrorCode::Internal, "no multiplicative generator found");

  if (n <= kTableMaxDegree) {
    impl->exp.resize(2 * group);
    impl->log.assign(probe.size(), 0);
    Elem acc(1);
    for (std::uint64_t i = 0; i < group; ++i) {
      impl->exp[i] = impl->exp[i + group] = acc.bits;
      impl->log[acc.bits] = static_cast<std::uint32_t>(i);
      acc = probe.mul_reference(acc, impl->generator);
    }
  }
  return Field(std::move(impl));
}

Elem Field::theta() const { return Elem(static_cast<std::uint32_t>(reduce(0x2, modulus()))); }

Elem Field::mul_reference(Elem a, Elem b) const {
  return Elem(static_cast<std::uint32_t>(reduce(clmul(a.bits, b.bits), modulus())));
}

Elem Field::mul(Elem a, Elem b) const {
  if (!has_log_tables()) return mul_reference(a, b);
  if (a.is_zero() || b.is_zero()) return Elem();
  return Elem(impl_->exp[impl_->log[a.bits] + impl_->log[b.bits]]);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result(1);
  Elem base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (has_log_tables()) {
    const std::uint64_t group = size() - 1;
    return Elem(impl_->exp[group - impl_->log[a.bits]]);
  }
  return pow(a, size() - 2);
}

Elem Field::sqrt(Elem a) const {
  for (unsigned i = 1; i < n(); ++i) a = sqr(a);
  return a;
}

unsigned Field::trace(Elem a) const {
  return static_cast<unsigned>(std::popcount(a.bits & impl_->trace_mask) & 1);
}

unsigned Field::trace_reference(Elem a) const {
  Elem acc;
  Elem cur = a;
  for (unsigned k = 0; k < n(); ++k) {
    acc += cur;
    cur = mul_reference(cur, cur);
  }
  if (acc.bits > 1) fail(ErrorCode::Internal, "trace left the prime field");
  return acc.bits;
}

std::optional<std::pair<Elem, Elem>> Field::solve_artin_schreier(Elem alpha, Elem b) const {
  if (alpha.is_zero()) fail(ErrorCode::Precondition, "Artin-Schreier equation needs alpha != 0");
  const Elem c = div(b, sqr(alpha));
  if (trace(c) != 0) return std::nullopt;

  // Solve y^2 + y = c as a GF(2)-linear system, then x = alpha * y.
  struct Row {
    std::uint32_t image;
    std::uint32_t combo;
  };
  std::vector<Row> pivots(n(), Row{0, 0});
  Elem basis(1);
  for (unsigned i = 0; i < n(); ++i) {
    Row r{(sqr(basis) + basis).bits, 1u << i};
    while (r.image != 0) {
      const int top = 31 - std::countl_zero(r.image);
      if (pivots[top].image == 0) {
        pivots[top] = r;
        break;
      }
      r.image ^= pivots[top].image;
      r.combo ^= pivots[top].combo;
    }
    basis = mul(basis, theta());
  }
  std::uint32_t residual = c.bits;
  std::uint32_t y = 0;
  while (residual != 0) {
    const int top = 31 - std::countl_zero(residual);
    if (pivots[top].image == 0) fail(ErrorCode::Internal, "trace-zero element outside the image of y^2 + y");
    residual ^= pivots[top].image;
    y ^= pivots[top].combo;
  }
  const Elem x = mul(alpha, Elem(y));
  if (sqr(x) + mul(alpha, x) != b) fail(ErrorCode::Internal, "Artin-Schreier solution failed substitution");
  return std::make_pair(x, x + alpha);
}

bool Field::is_cube(Elem a, bool in_quadratic_extension) const {
  if (in_quadratic_extension) return QuadraticExtension(*this).is_cube(QuadraticExtension(*this).lift(a));
  const std::uint64_t group = size() - 1;
  if (group % 3 != 0) {
    fail(ErrorCode::Unsupported,
         "cube test in GF(2^" + std::to_string(n()) + ") needs n even; use the quadratic extension test");
  }
  if (a.is_zero()) return true;
  return pow(a, group / 3) == Elem(1);
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a.is_zero()) fail(ErrorCode::Precondition, "zero has no multiplicative order");
  std::uint64_t order = size() - 1;
  for (auto p : prime_factors(order)) {
    while (order % p == 0 && pow(a, order / p) == Elem(1)) order /= p;
  }
  return order;
}

std::string Field::to_hex(Elem a) const {
  const int width = static_cast<int>((n() + 3) / 4);
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(static_cast<std::size_t>(width), '0');
  std::uint32_t v = a.bits;
  for (int i = width - 1; i >= 0 && v != 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = kDigits[v & 0xf];
  return out;
}

Elem Field::parse_hex(std::string_view text) const {
  const std::uint64_t v = parse_hex_u64(text, "field element");
  if (v > mask()) {
    fail(ErrorCode::Parse, "element '" + std::string(text) + "' does not fit in GF(2^" + std::to_string(n()) + ")");
  }
  return Elem(static_cast<std::uint32_t>(v));
}

std::string Field::modulus_hex() const { return modulus_to_hex(modulus()); }

QuadraticExtension::QuadraticExtension(Field base) : base_(std::move(base)) {
  for (std::uint64_t v = 1; v <= base_.mask(); ++v) {
    const Elem cand(static_cast<std::uint32_t>(v));
    if (base_.trace(cand) == 1) {
      delta_ = cand;
      return;
    }
  }
  fail(ErrorCode::Internal, "no trace-one element");
}

ExtElem QuadraticExtension::mul(ExtElem a, ExtElem b) const {
  const Field& F = base_;
  const Elem hh = F.mul(a.im, b.im);
  return {F.mul(a.re, b.re) + F.mul(hh, delta_), F.mul(a.re, b.im) + F.mul(a.im, b.re) + hh};
}

ExtElem QuadraticExtension::inv(ExtElem a) const {
  const Field& F = base_;
  const ExtElem conj{a.re + a.im, a.im};
  const Elem norm = F.mul(a.re, a.re + a.im) + F.mul(F.sqr(a.im), delta_);
  const Elem ninv = F.inv(norm);
  return {F.mul(conj.re, ninv), F.mul(conj.im, ninv)};
}

ExtElem QuadraticExtension::pow(ExtElem a, std::uint64_t e) const {
  ExtElem result = one();
  while (e != 0) {
    if (e & 1u) result = mul(result, a);
    a = sqr(a);
    e >>= 1;
  }
  return result;
}

bool QuadraticExtension::is_cube(ExtElem a) const {
  if (a.re.is_zero() && a.im.is_zero()) return true;
  const unsigned bits = 2 * base_.n();
  const std::uint64_t group = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  return pow(a, group / 3) == one();
}

std::array<ExtElem, 2> QuadraticExtension::quadratic_roots(Elem B, Elem C) const {
  const Field& F = base_;
  std::array<ExtElem, 2> roots;
  if (B.is_zero()) {
    const Elem r = F.sqrt(C);
    roots = {lift(r), lift(r)};
  } else if (auto sol = F.solve_artin_schreier(B, C)) {
    roots = {lift(sol->first), lift(sol->second)};
  } else {
    // T = B y with y^2 + y = C/B^2; take y = w + z, then z^2 + z = C/B^2 + delta.
    const Elem c = F.div(C, F.sqr(B));
    const auto z = F.solve_artin_schreier(Elem(1), c + delta_);
    if (!z) fail(ErrorCode::Internal, "quadratic has no root in the extension");
    roots = {ExtElem{F.mul(B, z->first), B}, ExtElem{F.mul(B, z->second), B}};
  }
  for (const auto& r : roots) {
    if (sqr(r) + mul(lift(B), r) + lift(C) != ExtElem{}) fail(ErrorCode::Internal, "quadratic root check failed");
  }
  return roots;
}

std::string QuadraticExtension::to_hex(ExtElem a) const {
  if (in_base(a)) return base_.to_hex(a.re);
  return base_.to_hex(a.re) + "+" + base_.to_hex(a.im) + "w";
}

}  // namespace gfdiff
