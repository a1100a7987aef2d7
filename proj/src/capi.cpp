#include "gfdiff/gfdiff.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "gfdiff/report.hpp"

struct gfd_field {
  gfdiff::Field field;
};

struct gfd_poly {
  gfdiff::Poly poly;
};

namespace {

thread_local std::string g_last_error;

gfd_status to_status(gfdiff::ErrorCode code) {
  using gfdiff::ErrorCode;
  switch (code) {
    case ErrorCode::Range: return GFD_ERR_RANGE;
    case ErrorCode::Reducible: return GFD_ERR_REDUCIBLE;
    case ErrorCode::Parse: return GFD_ERR_PARSE;
    case ErrorCode::Precondition: return GFD_ERR_PRECONDITION;
    case ErrorCode::DivisionByZero: return GFD_ERR_DIVISION_BY_ZERO;
    case ErrorCode::Unsupported: return GFD_ERR_UNSUPPORTED;
    case ErrorCode::Resource: return GFD_ERR_RESOURCE;
    case ErrorCode::NotSquarefree: return GFD_ERR_NOT_SQUAREFREE;
    case ErrorCode::Internal: return GFD_ERR_INTERNAL;
  }
  return GFD_ERR_UNKNOWN;
}

// Runs body, translating exceptions into status codes at the ABI boundary.
template <typename Body>
gfd_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return GFD_OK;
  } catch (const gfdiff::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GFD_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GFD_ERR_UNKNOWN;
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw gfdiff::Error(gfdiff::ErrorCode::Precondition, std::string(name) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gfdiff::Elem checked_elem(const gfdiff::Field& F, std::uint32_t a) {
  if (!F.contains(gfdiff::Elem(a))) fail(gfdiff::ErrorCode::Range, "element does not belong to the field");
  return gfdiff::Elem(a);
}

std::optional<gfdiff::Elem> optional_alpha(const gfdiff::Field& F, const char* hex) {
  if (hex == nullptr || *hex == '\0') return std::nullopt;
  return F.parse_hex(hex);
}

gfdiff::Elem required_alpha(const gfdiff::Field& F, const char* hex) {
  require(hex, "alpha");
  return F.parse_hex(hex);
}

}  // namespace

extern "C" {

const char* gfd_version(void) { return "1.0.0"; }

const char* gfd_last_error(void) { return g_last_error.c_str(); }

const char* gfd_status_name(gfd_status status) {
  switch (status) {
    case GFD_OK: return "ok";
    case GFD_ERR_RANGE: return "range";
    case GFD_ERR_REDUCIBLE: return "reducible";
    case GFD_ERR_PARSE: return "parse";
    case GFD_ERR_PRECONDITION: return "precondition";
    case GFD_ERR_DIVISION_BY_ZERO: return "division_by_zero";
    case GFD_ERR_UNSUPPORTED: return "unsupported";
    case GFD_ERR_RESOURCE: return "resource";
    case GFD_ERR_NOT_SQUAREFREE: return "not_squarefree";
    case GFD_ERR_INTERNAL: return "internal";
    case GFD_ERR_NULL_ARGUMENT: return "null_argument";
    case GFD_ERR_UNKNOWN: return "unknown";
  }
  return "unknown";
}

void gfd_string_free(char* s) { std::free(s); }

gfd_status gfd_field_create(unsigned n, const char* modulus_hex, gfd_field** out) {
  if (out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    gfdiff::Field F = modulus_hex == nullptr || *modulus_hex == '\0'
                          ? gfdiff::Field::make(n)
                          : gfdiff::Field::make(n, gfdiff::parse_modulus_hex(modulus_hex));
    *out = new gfd_field{std::move(F)};
  });
}

void gfd_field_destroy(gfd_field* field) { delete field; }

unsigned gfd_field_degree(const gfd_field* field) { return field == nullptr ? 0 : field->field.n(); }

gfd_status gfd_field_modulus_hex(const gfd_field* field, char** out) {
  if (field == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(field->field.modulus_hex()); });
}

gfd_status gfd_field_generator(const gfd_field* field, uint32_t* out) {
  if (field == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  *out = field->field.generator().bits;
  return GFD_OK;
}

gfd_status gfd_elem_parse(const gfd_field* field, const char* hex, uint32_t* out) {
  if (field == nullptr || hex == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = field->field.parse_hex(hex).bits; });
}

gfd_status gfd_elem_format(const gfd_field* field, uint32_t a, char** out) {
  if (field == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(field->field.to_hex(checked_elem(field->field, a))); });
}

gfd_status gfd_elem_mul(const gfd_field* field, uint32_t a, uint32_t b, uint32_t* out) {
  if (field == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto& F = field->field;
    *out = F.mul(checked_elem(F, a), checked_elem(F, b)).bits;
  });
}

gfd_status gfd_elem_inv(const gfd_field* field, uint32_t a, uint32_t* out) {
  if (field == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = field->field.inv(checked_elem(field->field, a)).bits; });
}

gfd_status gfd_elem_pow(const gfd_field* field, uint32_t a, uint64_t e, uint32_t* out) {
  if (field == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = field->field.pow(checked_elem(field->field, a), e).bits; });
}

gfd_status gfd_elem_trace(const gfd_field* field, uint32_t a, int* out) {
  if (field == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = static_cast<int>(field->field.trace(checked_elem(field->field, a))); });
}

gfd_status gfd_elem_is_cube(const gfd_field* field, uint32_t a, int in_quadratic_extension, int* out) {
  if (field == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = field->field.is_cube(checked_elem(field->field, a), in_quadratic_extension != 0) ? 1 : 0; });
}

gfd_status gfd_solve_artin_schreier(const gfd_field* field, uint32_t alpha, uint32_t b, int* solvable, uint32_t roots[2]) {
  if (field == nullptr || solvable == nullptr || roots == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto& F = field->field;
    const auto sol = F.solve_artin_schreier(checked_elem(F, alpha), checked_elem(F, b));
    *solvable = sol ? 1 : 0;
    if (sol) {
      roots[0] = sol->first.bits;
      roots[1] = sol->second.bits;
    }
  });
}

gfd_status gfd_poly_parse(const gfd_field* field, const char* text, gfd_poly** out) {
  if (field == nullptr || text == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new gfd_poly{gfdiff::parse_poly(field->field, text)}; });
}

void gfd_poly_destroy(gfd_poly* poly) { delete poly; }

int gfd_poly_degree(const gfd_poly* poly) { return poly == nullptr ? -1 : poly->poly.degree(); }

gfd_status gfd_poly_format(const gfd_poly* poly, char** out) {
  if (poly == nullptr || out == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(gfdiff::format_poly(poly->poly)); });
}

gfd_status gfd_check(const gfd_poly* poly, const char* alpha_hex, uint64_t sweep_cap, gfd_conclusion* conclusion,
                     char** json) {
  if (poly == nullptr || conclusion == nullptr || json == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto& f = poly->poly;
    const auto coeffs = gfdiff::Degree10Coeffs::from_poly(f);
    const auto rep = gfdiff::check_degree10(coeffs, optional_alpha(f.field(), alpha_hex),
                                            sweep_cap == 0 ? gfdiff::kDefaultSweepCap : sweep_cap);
    switch (rep.conclusion) {
      case gfdiff::Conclusion::DeltaGe6: *conclusion = GFD_CONCLUSION_DELTA_GE_6; break;
      case gfdiff::Conclusion::DeltaEq8: *conclusion = GFD_CONCLUSION_DELTA_EQ_8; break;
      case gfdiff::Conclusion::Inapplicable: *conclusion = GFD_CONCLUSION_INAPPLICABLE; break;
    }
    *json = dup_string(gfdiff::to_json(rep).dump());
  });
}

gfd_status gfd_klein_check(const gfd_poly* poly, const char* alpha_hex, int* verdict, char** json) {
  if (poly == nullptr || verdict == nullptr || json == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto& f = poly->poly;
    const auto rep = gfdiff::klein_check(gfdiff::Degree10Coeffs::from_poly(f).monic(), required_alpha(f.field(), alpha_hex));
    *verdict = rep.verdict ? 1 : 0;
    *json = dup_string(gfdiff::to_json(rep).dump());
  });
}

gfd_status gfd_morse_check(const gfd_poly* poly, int* is_morse, char** json) {
  if (poly == nullptr || is_morse == nullptr || json == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto& f = poly->poly;
    const auto rep = gfdiff::morse_check(gfdiff::Degree10Coeffs::from_poly(f));
    *is_morse = rep.is_morse ? 1 : 0;
    *json = dup_string(gfdiff::to_json(rep, f.field()).dump());
  });
}

gfd_status gfd_ddt_row(const gfd_poly* poly, const char* alpha_hex, int allow_large, char** summary_json, char** csv) {
  if (poly == nullptr || summary_json == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto& f = poly->poly;
    const auto row = gfdiff::ddt_row(f, required_alpha(f.field(), alpha_hex), allow_large != 0);
    std::string js = gfdiff::row_summary_json(f.field(), row).dump();
    std::string table;
    if (csv != nullptr) {
      std::ostringstream os;
      gfdiff::write_spectrum_csv(os, f.field(), {row});
      table = os.str();
    }
    *summary_json = dup_string(js);
    if (csv != nullptr) *csv = dup_string(table);
  });
}

gfd_status gfd_delta_full(const gfd_poly* poly, int allow_large, int with_timing, uint64_t* delta, char** json) {
  if (poly == nullptr || delta == nullptr || json == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto& f = poly->poly;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = gfdiff::delta_full(f, allow_large != 0);
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - t0;
    *delta = r.delta;
    *json = dup_string(
        gfdiff::delta_summary_json(f.field(), r, with_timing ? std::optional<double>(ms.count()) : std::nullopt).dump());
  });
}

gfd_status gfd_ddt_csv(const gfd_poly* poly, int allow_large, char** csv) {
  if (poly == nullptr || csv == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] {
    std::ostringstream os;
    gfdiff::write_ddt_csv(os, poly->poly, allow_large != 0);
    *csv = dup_string(os.str());
  });
}

gfd_status gfd_monodromy_stats(const gfd_poly* poly, const char* alpha_hex, gfd_monodromy_mode mode, uint64_t samples,
                               uint64_t seed, char** json) {
  if (poly == nullptr || json == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto& f = poly->poly;
    const auto m = mode == GFD_MODE_CUBIC_S3 ? gfdiff::MonodromyMode::CubicS3 : gfdiff::MonodromyMode::QuarticKlein;
    const auto st = gfdiff::monodromy_stats(gfdiff::Degree10Coeffs::from_poly(f), required_alpha(f.field(), alpha_hex), m,
                                            samples, seed);
    *json = dup_string(gfdiff::to_json(st).dump());
  });
}

gfd_status gfd_chebotarev_threshold(unsigned d_omega, unsigned deg_d_poly, char** json) {
  if (json == nullptr) return GFD_ERR_NULL_ARGUMENT;
  return guarded([&] { *json = dup_string(gfdiff::to_json(gfdiff::chebotarev_threshold(d_omega, deg_d_poly)).dump()); });
}

}  // extern "C"
