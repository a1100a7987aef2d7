#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfdiff/gf2n.hpp"
#include "gfdiff/poly.hpp"
#include "gfdiff/quartic.hpp"

namespace gfdiff {

enum class TheoremId { Main, A1A3Zero };
enum class Conclusion { DeltaGe6, DeltaEq8, Inapplicable };

const char* to_string(TheoremId id);
const char* to_string(Conclusion c);

// Fixed thresholds; chebotarev_threshold() must reproduce them.
inline constexpr unsigned kMainTheoremMinN = 13;
inline constexpr unsigned kKleinTheoremMinN = 15;
// Degree of the Galois closure over F_q(t): |S_3| * 2^2 and |V_4| * 2^3.
inline constexpr unsigned kMainDOmega = 24;
inline constexpr unsigned kKleinDOmega = 32;

inline constexpr std::uint64_t kDefaultSweepCap = std::uint64_t{1} << 20;

struct Condition {
  std::string name;
  bool pass = false;
  std::optional<std::string> witness;
};

struct ConditionReport {
  TheoremId theorem;
  Field field;
  std::vector<Condition> conditions;
  std::optional<Elem> alpha_used;
  unsigned min_n = 0;
  Conclusion conclusion = Conclusion::Inapplicable;
  std::optional<KleinReport> klein;  // a1a3zero only, for the alpha used
  std::uint64_t alphas_tried = 0;    // a1a3zero sweeps only

  bool all_conditions_pass() const;
};

// Conditions (i)-(iii) with alpha = a_1 after monic normalization.
ConditionReport thm_main_check(const Degree10Coeffs& coeffs);

// Klein-group conditions at alpha, or the first passing alpha in increasing
// bit order among the first sweep_cap nonzero elements.
ConditionReport thm2_check(const Degree10Coeffs& coeffs, std::optional<Elem> alpha = std::nullopt,
                           std::uint64_t sweep_cap = kDefaultSweepCap);

// Chooses the checker from the coefficient pattern of the monic form.
ConditionReport check_degree10(const Degree10Coeffs& coeffs, std::optional<Elem> alpha = std::nullopt,
                               std::uint64_t sweep_cap = kDefaultSweepCap);

struct ChebotarevParams {
  unsigned d_omega = 0;
  unsigned deg_d_poly = 0;
  std::uint64_t g_bound = 0;
  unsigned min_n = 0;
  // Lower bound on totally split degree-one places, evaluated at min_n.
  double v_lower_bound = 0.0;
};

ChebotarevParams chebotarev_threshold(unsigned d_omega, unsigned deg_d_poly);

// 2^n - 2 g 2^(n/2) - 2 g - 3 d > 0, decided in exact integer arithmetic.
bool chebotarev_positive(unsigned n, std::uint64_t g_bound, unsigned d_omega);

enum class MonodromyMode { CubicS3, QuarticKlein };

const char* to_string(MonodromyMode m);

using Pattern = std::vector<unsigned>;

struct TypeHistogram {
  std::map<Pattern, std::uint64_t> counts;
  std::uint64_t samples = 0;
  std::uint64_t excluded = 0;
};

struct PatternStat {
  Pattern pattern;
  std::uint64_t count = 0;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool within = false;
};

struct MonodromyStats {
  MonodromyMode mode;
  Field field;
  Elem alpha;
  std::uint64_t seed = 0;
  TypeHistogram histogram;
  std::vector<PatternStat> patterns;
  // Fraction of squarefree specializations that split into linear factors.
  double split_fraction = 0.0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240521;
inline constexpr std::uint64_t kDefaultSamples = 4096;
inline constexpr double kToleranceFloor = 0.05;

// Chebotarev densities of the two monodromy groups on their natural points.
std::map<Pattern, double> expected_densities(MonodromyMode mode);

// Samples t0 uniformly, factors the specialization L_alpha f(x) - t0 (scaled
// by 1/alpha^2 in Klein mode) and tallies degree patterns. A Klein-mode
// pattern outside {(1,1,1,1), (2,2)} throws.
MonodromyStats monodromy_stats(const Degree10Coeffs& coeffs, Elem alpha, MonodromyMode mode,
                               std::uint64_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed);

}  // namespace gfdiff
