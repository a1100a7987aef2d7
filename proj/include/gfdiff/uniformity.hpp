#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "gfdiff/gf2n.hpp"
#include "gfdiff/poly.hpp"

namespace gfdiff {

// Default scale guards; exceeding them without an override is a Resource
// error, never a partial answer.
inline constexpr unsigned kRowGuardMaxN = 24;
inline constexpr unsigned kFullGuardMaxN = 14;

struct SpectrumRow {
  Elem alpha;
  int d_degree = 0;  // degree of D_alpha f; -1 for the zero polynomial
  // (beta, #{x : D_alpha f(x) = beta}) for nonzero counts, ascending beta.
  std::vector<std::pair<Elem, std::uint64_t>> counts;
  std::uint64_t delta_alpha = 0;
  // Values reached by exactly deg D_alpha f distinct x (non-constant rows).
  std::vector<Elem> split_betas;
};

SpectrumRow ddt_row(const Poly& f, Elem alpha, bool allow_large = false);

struct DeltaResult {
  std::uint64_t delta = 0;
  Elem alpha;
  Elem beta;
};

// max over alpha != 0 of the row maximum; ties go to the smallest alpha,
// then the smallest beta. threads = 0 picks the hardware concurrency.
DeltaResult delta_full(const Poly& f, bool allow_large = false, unsigned threads = 0);

// Number of x with D_alpha f(x) = beta, by direct evaluation.
std::uint64_t count_preimages(const Poly& f, Elem alpha, Elem beta);

// CSV with header alpha_hex,beta_hex,count; zero counts are omitted.
void write_spectrum_csv(std::ostream& out, const Field& field, const std::vector<SpectrumRow>& rows);
// Full table for every alpha != 0, streamed row by row.
void write_ddt_csv(std::ostream& out, const Poly& f, bool allow_large = false);

}  // namespace gfdiff
