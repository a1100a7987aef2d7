#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "gfdiff/gf2n.hpp"
#include "gfdiff/poly.hpp"

namespace testing {

using gfdiff::Elem;
using gfdiff::Field;
using gfdiff::Poly;

// Hand-rolled generators; every test seeds its own stream.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Elem elem(const Field& F) { return Elem(static_cast<std::uint32_t>(rng_() & F.mask())); }
  Elem nonzero(const Field& F) {
    for (;;) {
      const Elem e = elem(F);
      if (!e.is_zero()) return e;
    }
  }
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  // Random polynomial of exact degree deg with leading coefficient lead (random nonzero if zero).
  Poly poly(const Field& F, int deg, Elem lead = Elem()) {
    std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
    for (auto& e : c) e = elem(F);
    c.back() = lead.is_zero() ? nonzero(F) : lead;
    return Poly(F, c);
  }

  // Degree-10 coefficient array a_0..a_10 with a_0 = 1.
  std::array<Elem, 11> monic10(const Field& F) {
    std::array<Elem, 11> a;
    for (auto& e : a) e = elem(F);
    a[0] = Elem(1);
    return a;
  }

 private:
  std::mt19937_64 rng_;
};

inline gfdiff::Degree10Coeffs coeffs10(const Field& F, std::array<Elem, 11> a) { return {F, a}; }

inline std::vector<Elem> all_elems(const Field& F) {
  std::vector<Elem> out;
  for (std::uint64_t v = 0; v < F.size(); ++v) out.emplace_back(static_cast<std::uint32_t>(v));
  return out;
}

inline unsigned count_roots(const Poly& f) {
  unsigned k = 0;
  for (Elem x : all_elems(f.field())) k += f.eval(x).is_zero() ? 1 : 0;
  return k;
}

inline bool brute_cube(const Field& F, Elem a) {
  for (Elem y : all_elems(F)) {
    if (F.mul(F.sqr(y), y) == a) return true;
  }
  return false;
}

// x^2 + alpha x = b by exhaustive search.
inline bool brute_artin_schreier(const Field& F, Elem alpha, Elem b) {
  for (Elem x : all_elems(F)) {
    if (F.sqr(x) + F.mul(alpha, x) == b) return true;
  }
  return false;
}

inline Poly from_low(const Field& F, std::initializer_list<std::uint32_t> low_first) {
  std::vector<Elem> c;
  for (auto v : low_first) c.emplace_back(v);
  return Poly(F, c);
}

}  // namespace testing
