// Command-line front end. Talks to the library only through gfdiff.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfdiff/gfdiff.h"

#ifndef GFDIFF_EXPECTED_DIR
#define GFDIFF_EXPECTED_DIR "data/expected"
#endif

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInapplicable = 2;

// Thrown for any failed library call; carries the message for stderr.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(gfd_status st, const char* what) {
  if (st != GFD_OK) {
    throw CliError(std::string(what) + ": " + gfd_status_name(st) + ": " + gfd_last_error());
  }
}

struct FieldDeleter {
  void operator()(gfd_field* f) const { gfd_field_destroy(f); }
};
struct PolyDeleter {
  void operator()(gfd_poly* p) const { gfd_poly_destroy(p); }
};
using FieldPtr = std::unique_ptr<gfd_field, FieldDeleter>;
using PolyPtr = std::unique_ptr<gfd_poly, PolyDeleter>;

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  gfd_string_free(s);
  return out;
}

FieldPtr make_field(unsigned n, const std::string& modulus) {
  gfd_field* f = nullptr;
  check(gfd_field_create(n, modulus.empty() ? nullptr : modulus.c_str(), &f), "field");
  return FieldPtr(f);
}

PolyPtr make_poly(const gfd_field* field, const std::string& text) {
  gfd_poly* p = nullptr;
  check(gfd_poly_parse(field, text.c_str(), &p), "polynomial");
  return PolyPtr(p);
}

std::string read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open polynomial file '" + path + "'");
  std::string text, line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    }
  }
  return text;
}

struct Common {
  unsigned n = 0;
  std::string modulus;
  std::string poly;
  std::string poly_file;
  bool json = false;
  std::string out;

  std::string poly_text() const {
    if (!poly_file.empty()) return read_poly_file(poly_file);
    if (poly.empty()) throw CliError("one of --poly or --poly-file is required");
    return poly;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_poly = true) {
  cmd->add_option("--n", c.n, "extension degree n of GF(2^n)")->required()->check(CLI::Range(1, 32));
  cmd->add_option("--modulus", c.modulus, "irreducible modulus as hex, most significant bit first (e.g. 19)");
  if (with_poly) {
    auto* p = cmd->add_option("--poly", c.poly, "coefficients a_0 (leading) first, comma-separated hex");
    auto* pf = cmd->add_option("--poly-file", c.poly_file, "file holding the coefficient string");
    p->excludes(pf);
  }
  cmd->add_flag("--json", c.json, "machine-readable JSON output");
  cmd->add_option("--out", c.out, "write the report to PATH instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(c.out);
  if (!os) throw CliError("cannot write '" + c.out + "'");
  os << text;
  if (!text.empty() && text.back() != '\n') os << '\n';
}

std::string pretty(const std::string& compact) { return Json::parse(compact).dump(2); }

std::string conditions_text(const Json& rep) {
  std::ostringstream os;
  os << "theorem     " << rep["theorem"].get<std::string>() << "\n";
  os << "field       GF(2^" << rep["field"]["n"].get<unsigned>() << "), modulus " << rep["field"]["modulus"].get<std::string>()
     << "\n";
  for (const auto& c : rep["conditions"]) {
    os << "  [" << (c["pass"].get<bool>() ? "pass" : "fail") << "] " << c["name"].get<std::string>();
    if (!c["witness"].is_null()) os << "  (" << c["witness"].get<std::string>() << ")";
    os << "\n";
  }
  os << "alpha       " << (rep["alpha"].is_null() ? std::string("-") : rep["alpha"].get<std::string>()) << "\n";
  os << "min_n       " << rep["min_n"].get<unsigned>() << "\n";
  os << "conclusion  " << rep["conclusion"].get<std::string>() << "\n";
  return os.str();
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  Common c;
  std::string alpha;
  std::uint64_t sweep_cap = 0;
};

int run_check(const CheckArgs& a) {
  auto field = make_field(a.c.n, a.c.modulus);
  auto poly = make_poly(field.get(), a.c.poly_text());
  gfd_conclusion concl = GFD_CONCLUSION_INAPPLICABLE;
  char* js = nullptr;
  check(gfd_check(poly.get(), a.alpha.empty() ? nullptr : a.alpha.c_str(), a.sweep_cap, &concl, &js), "check");
  const std::string report = take(js);
  emit(a.c, a.c.json ? pretty(report) : conditions_text(Json::parse(report)));
  return concl == GFD_CONCLUSION_INAPPLICABLE ? kExitInapplicable : kExitOk;
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  Common c;
  std::string alpha;
  std::string csv;
  bool allow_large = false;
  bool no_timing = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw CliError("cannot write '" + path + "'");
  os << text;
}

int run_analyze(const AnalyzeArgs& a) {
  auto field = make_field(a.c.n, a.c.modulus);
  auto poly = make_poly(field.get(), a.c.poly_text());
  if (!a.alpha.empty()) {
    char* js = nullptr;
    char* csv = nullptr;
    check(gfd_ddt_row(poly.get(), a.alpha.c_str(), a.allow_large, &js, a.csv.empty() ? nullptr : &csv), "ddt_row");
    const std::string summary = take(js);
    if (!a.csv.empty()) write_file(a.csv, take(csv));
    if (a.c.json) {
      emit(a.c, pretty(summary));
    } else {
      const Json j = Json::parse(summary);
      std::ostringstream os;
      os << "alpha        " << j["alpha"].get<std::string>() << "\n";
      os << "deg D_alpha  " << j["d_degree"].get<int>() << "\n";
      os << "delta_alpha  " << j["delta_alpha"].get<std::uint64_t>() << "\n";
      os << "split betas  " << j["split_betas"].size();
      for (const auto& b : j["split_betas"]) os << " " << b.get<std::string>();
      os << "\n";
      emit(a.c, os.str());
    }
    return kExitOk;
  }
  std::uint64_t delta = 0;
  char* js = nullptr;
  check(gfd_delta_full(poly.get(), a.allow_large, a.no_timing ? 0 : 1, &delta, &js), "delta_full");
  const std::string summary = take(js);
  if (!a.csv.empty()) {
    char* csv = nullptr;
    check(gfd_ddt_csv(poly.get(), a.allow_large, &csv), "ddt_csv");
    write_file(a.csv, take(csv));
  }
  if (a.c.json) {
    emit(a.c, pretty(summary));
  } else {
    const Json j = Json::parse(summary);
    std::ostringstream os;
    os << "delta  " << j["delta"].get<std::uint64_t>() << "  at alpha " << j["alpha"].get<std::string>() << ", beta "
       << j["beta"].get<std::string>() << "\n";
    if (j.contains("runtime_ms")) os << "time   " << j["runtime_ms"].get<double>() << " ms\n";
    emit(a.c, os.str());
  }
  return kExitOk;
}

// --- stats -----------------------------------------------------------------

struct StatsArgs {
  Common c;
  std::string alpha;
  std::string mode = "quartic_klein";
  std::uint64_t samples = 4096;
  std::uint64_t seed = 20240521;
};

int run_stats(const StatsArgs& a) {
  auto field = make_field(a.c.n, a.c.modulus);
  auto poly = make_poly(field.get(), a.c.poly_text());
  const gfd_monodromy_mode mode = a.mode == "cubic_s3" ? GFD_MODE_CUBIC_S3 : GFD_MODE_QUARTIC_KLEIN;
  char* js = nullptr;
  check(gfd_monodromy_stats(poly.get(), a.alpha.c_str(), mode, a.samples, a.seed, &js), "stats");
  const std::string report = take(js);
  if (a.c.json) {
    emit(a.c, pretty(report));
    return kExitOk;
  }
  const Json j = Json::parse(report);
  std::ostringstream os;
  os << "mode " << j["mode"].get<std::string>() << ", samples " << j["samples"].get<std::uint64_t>() << ", excluded "
     << j["excluded"].get<std::uint64_t>() << ", seed " << j["seed"].get<std::uint64_t>() << "\n";
  for (const auto& p : j["patterns"]) {
    std::string pat;
    for (const auto& d : p["pattern"]) pat += (pat.empty() ? "" : ",") + std::to_string(d.get<unsigned>());
    char line[160];
    std::snprintf(line, sizeof line, "  (%s)  count %llu  observed %.4f  expected %.4f  +/- %.4f  %s\n", pat.c_str(),
                  static_cast<unsigned long long>(p["count"].get<std::uint64_t>()), p["observed"].get<double>(),
                  p["expected"].get<double>(), p["tolerance"].get<double>(), p["within"].get<bool>() ? "ok" : "OUT");
    os << line;
  }
  emit(a.c, os.str());
  return kExitOk;
}

// --- bounds ----------------------------------------------------------------

struct BoundsArgs {
  unsigned d_omega = 24;
  unsigned deg_d = 6;
  bool json = false;
  std::string out;
};

int run_bounds(const BoundsArgs& a) {
  char* js = nullptr;
  check(gfd_chebotarev_threshold(a.d_omega, a.deg_d, &js), "bounds");
  const std::string report = take(js);
  Common c;
  c.out = a.out;
  if (a.json) {
    emit(c, pretty(report));
  } else {
    const Json j = Json::parse(report);
    std::ostringstream os;
    os << "g_bound " << j["g_bound"].get<std::uint64_t>() << "\nmin_n   " << j["min_n"].get<unsigned>() << "\n";
    emit(c, os.str());
  }
  return kExitOk;
}

// --- reproduce -------------------------------------------------------------

const char* kDegree10Klein = "1,0,0,0,0,0,0,1,0,0,0";  // x^10 + x^3
const char* kDegree10Main = "1,1,0,1,0,0,0,1,0,0,0";   // x^10 + x^9 + x^7 + x^3

Json scenario_klein_f16() {
  auto field = make_field(4, "19");
  auto poly = make_poly(field.get(), kDegree10Klein);
  uint32_t alpha = 0, a7 = 0, a2 = 0;
  check(gfd_elem_pow(field.get(), 0x2, 10, &alpha), "theta^10");
  check(gfd_elem_pow(field.get(), alpha, 7, &a7), "alpha^7");
  check(gfd_elem_pow(field.get(), alpha, 2, &a2), "alpha^2");
  int t7 = 0, t2 = 0;
  check(gfd_elem_trace(field.get(), a7, &t7), "trace");
  check(gfd_elem_trace(field.get(), a2, &t2), "trace");
  const std::string alpha_hex = take([&] {
    char* s = nullptr;
    check(gfd_elem_format(field.get(), alpha, &s), "format");
    return s;
  }());
  int verdict = 0;
  char* js = nullptr;
  check(gfd_klein_check(poly.get(), alpha_hex.c_str(), &verdict, &js), "klein_check");
  Json out;
  out["scenario"] = "klein_f16";
  out["alpha"] = alpha_hex;
  out["trace_alpha7"] = t7;
  out["trace_alpha2"] = t2;
  out["klein"] = Json::parse(take(js));
  return out;
}

Json scenario_check(unsigned n, const char* poly_text, const char* name) {
  auto field = make_field(n, "");
  auto poly = make_poly(field.get(), poly_text);
  gfd_conclusion concl = GFD_CONCLUSION_INAPPLICABLE;
  char* js = nullptr;
  check(gfd_check(poly.get(), nullptr, 0, &concl, &js), name);
  Json out;
  out["scenario"] = name;
  out["report"] = Json::parse(take(js));
  return out;
}

struct ReproduceArgs {
  std::string expected_dir = GFDIFF_EXPECTED_DIR;
  std::string write_dir;
  bool json = false;
};

int run_reproduce(const ReproduceArgs& a) {
  const std::vector<std::pair<std::string, Json>> scenarios = {
      {"klein_f16", scenario_klein_f16()},
      {"thm_main_n13", scenario_check(13, kDegree10Main, "thm_main_n13")},
      {"thm2_n16", scenario_check(16, kDegree10Klein, "thm2_n16")},
  };
  if (!a.write_dir.empty()) {
    std::filesystem::create_directories(a.write_dir);
    for (const auto& [name, j] : scenarios) write_file(a.write_dir + "/" + name + ".json", j.dump(2) + "\n");
  }
  bool all = true;
  Json summary = Json::array();
  for (const auto& [name, got] : scenarios) {
    const std::string path = a.expected_dir + "/" + name + ".json";
    std::ifstream in(path);
    Json entry;
    entry["scenario"] = name;
    if (!in) {
      entry["pass"] = false;
      entry["error"] = "missing expected report " + path;
    } else {
      const Json want = Json::parse(in);
      const bool same = want == got;
      entry["pass"] = same;
      if (!same) entry["diff"] = Json::diff(want, got);
    }
    all = all && entry["pass"].get<bool>();
    summary.push_back(entry);
  }
  if (a.json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    for (const auto& e : summary) {
      std::cout << (e["pass"].get<bool>() ? "PASS  " : "FAIL  ") << e["scenario"].get<std::string>() << "\n";
      if (e.contains("diff")) std::cout << e["diff"].dump(2) << "\n";
      if (e.contains("error")) std::cout << "      " << e["error"].get<std::string>() << "\n";
    }
  }
  return all ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential uniformity toolkit for degree-10 polynomials over GF(2^n)"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "evaluate the theorem conditions for a degree-10 polynomial");
  add_common(check_cmd, check_args.c);
  check_cmd->add_option("--alpha", check_args.alpha, "alpha as hex (a_1 = a_3 = 0 case; omitted = sweep)");
  check_cmd->add_option("--sweep-cap", check_args.sweep_cap, "maximum number of alphas tried by the sweep");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "differential spectrum: one row (--alpha) or the full uniformity");
  add_common(analyze_cmd, analyze_args.c);
  analyze_cmd->add_option("--alpha", analyze_args.alpha, "restrict to the row of this alpha (hex)");
  analyze_cmd->add_option("--csv", analyze_args.csv, "export the spectrum as CSV");
  analyze_cmd->add_flag("--allow-large", analyze_args.allow_large, "lift the default field-size guard");
  analyze_cmd->add_flag("--no-timing", analyze_args.no_timing, "omit runtime_ms from the summary");

  StatsArgs stats_args;
  auto* stats_cmd = app.add_subcommand("stats", "factorization-type statistics of specializations");
  add_common(stats_cmd, stats_args.c);
  stats_cmd->add_option("--alpha", stats_args.alpha, "alpha (hex)")->required();
  stats_cmd->add_option("--mode", stats_args.mode, "cubic_s3 or quartic_klein")
      ->check(CLI::IsMember({"cubic_s3", "quartic_klein"}));
  stats_cmd->add_option("--samples", stats_args.samples, "number of sampled t0");
  stats_cmd->add_option("--seed", stats_args.seed, "PRNG seed");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "effective Chebotarev threshold");
  bounds_cmd->add_option("--d-omega", bounds_args.d_omega, "degree of the Galois closure")->required();
  bounds_cmd->add_option("--deg-d", bounds_args.deg_d, "degree of D_alpha f")->required();
  bounds_cmd->add_flag("--json", bounds_args.json, "machine-readable JSON output");
  bounds_cmd->add_option("--out", bounds_args.out, "write the report to PATH instead of stdout");

  ReproduceArgs reproduce_args;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "rerun the reference scenarios and diff against stored reports");
  reproduce_cmd->add_option("--expected-dir", reproduce_args.expected_dir, "directory of expected reports");
  reproduce_cmd->add_option("--write-expected", reproduce_args.write_dir, "also write the fresh reports here");
  reproduce_cmd->add_flag("--json", reproduce_args.json, "machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (check_cmd->parsed()) return run_check(check_args);
    if (analyze_cmd->parsed()) return run_analyze(analyze_args);
    if (stats_cmd->parsed()) return run_stats(stats_args);
    if (bounds_cmd->parsed()) return run_bounds(bounds_args);
    if (reproduce_cmd->parsed()) return run_reproduce(reproduce_args);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
