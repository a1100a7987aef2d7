#include "gfdiff/report.hpp"

#include <cmath>

namespace gfdiff {

namespace {

Json pattern_json(const Pattern& p) {
  Json arr = Json::array();
  for (unsigned d : p) arr.push_back(d);
  return arr;
}

Json hex_or_null(const Field& F, const std::optional<Elem>& e) {
  if (!e) return nullptr;
  return F.to_hex(*e);
}

// Frequencies are rounded so reports do not depend on printf-level noise.
double round6(double v) { return std::round(v * 1e6) / 1e6; }

}  // namespace

Json field_json(const Field& field) {
  Json j;
  j["n"] = field.n();
  j["modulus"] = field.modulus_hex();
  return j;
}

Json to_json(const KleinReport& rep) {
  const Field& F = rep.quartic.field;
  Json j;
  j["c_nonzero"] = rep.c_nonzero;
  j["r3_split"] = rep.r3_split;
  j["trace_condition"] = rep.trace_condition;
  j["q_roots_are_cubes"] = rep.q_roots_are_cubes;
  j["r2_reducible"] = rep.r2_reducible;
  j["verdict"] = rep.verdict;
  Json w;
  w["alpha"] = hex_or_null(F, rep.quartic.alpha);
  w["b"] = F.to_hex(rep.quartic.b);
  w["c"] = F.to_hex(rep.quartic.c);
  w["d"] = F.to_hex(rep.quartic.d);
  if (rep.c_nonzero) {
    const ResolventSet res = resolvents(rep.quartic);
    w["q_poly"] = format_poly(res.q);
    w["r3_poly"] = format_poly(res.r3);
    const QuadraticExtension E(F);
    Json qr = Json::array();
    for (const auto& r : rep.q_roots) qr.push_back(E.to_hex(r));
    w["q_roots"] = qr;
  } else {
    w["q_poly"] = nullptr;
    w["r3_poly"] = nullptr;
    w["q_roots"] = Json::array();
  }
  Json rr = Json::array();
  for (Elem r : rep.r3_roots) rr.push_back(F.to_hex(r));
  w["r3_roots"] = rr;
  j["witness"] = w;
  return j;
}

Json to_json(const ConditionReport& rep) {
  const Field& F = rep.field;
  Json j;
  j["theorem"] = to_string(rep.theorem);
  j["field"] = field_json(F);
  Json conds = Json::array();
  for (const auto& c : rep.conditions) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (c.witness) {
      cj["witness"] = *c.witness;
    } else {
      cj["witness"] = nullptr;
    }
    conds.push_back(cj);
  }
  j["conditions"] = conds;
  j["alpha"] = hex_or_null(F, rep.alpha_used);
  j["min_n"] = rep.min_n;
  j["conclusion"] = to_string(rep.conclusion);
  if (rep.theorem == TheoremId::A1A3Zero) {
    j["alphas_tried"] = rep.alphas_tried;
    if (rep.klein) {
      j["klein"] = to_json(*rep.klein);
    } else {
      j["klein"] = nullptr;
    }
  }
  return j;
}

Json to_json(const MorseReport& rep, const Field& field) {
  Json j;
  j["applicable"] = rep.applicable;
  j["nondegeneracy_value"] = field.to_hex(rep.nondegeneracy_value);
  j["is_morse"] = rep.is_morse;
  return j;
}

Json to_json(const ChebotarevParams& p) {
  Json j;
  j["d_omega"] = p.d_omega;
  j["deg_d_poly"] = p.deg_d_poly;
  j["g_bound"] = p.g_bound;
  j["min_n"] = p.min_n;
  j["v_lower_bound"] = round6(p.v_lower_bound);
  return j;
}

Json to_json(const MonodromyStats& st) {
  const Field& F = st.field;
  Json j;
  j["mode"] = to_string(st.mode);
  j["field"] = field_json(F);
  j["alpha"] = F.to_hex(st.alpha);
  j["seed"] = st.seed;
  j["samples"] = st.histogram.samples;
  j["excluded"] = st.histogram.excluded;
  Json pats = Json::array();
  for (const auto& ps : st.patterns) {
    Json pj;
    pj["pattern"] = pattern_json(ps.pattern);
    pj["count"] = ps.count;
    pj["expected"] = round6(ps.expected);
    pj["observed"] = round6(ps.observed);
    pj["tolerance"] = round6(ps.tolerance);
    pj["within"] = ps.within;
    pats.push_back(pj);
  }
  j["patterns"] = pats;
  j["split_fraction"] = round6(st.split_fraction);
  return j;
}

Json row_summary_json(const Field& field, const SpectrumRow& row) {
  Json j;
  j["alpha"] = field.to_hex(row.alpha);
  j["d_degree"] = row.d_degree;
  j["delta_alpha"] = row.delta_alpha;
  j["distinct_values"] = row.counts.size();
  Json sb = Json::array();
  for (Elem b : row.split_betas) sb.push_back(field.to_hex(b));
  j["split_betas"] = sb;
  return j;
}

Json delta_summary_json(const Field& field, const DeltaResult& r, std::optional<double> runtime_ms) {
  Json j;
  j["delta"] = r.delta;
  j["alpha"] = field.to_hex(r.alpha);
  j["beta"] = field.to_hex(r.beta);
  if (runtime_ms) j["runtime_ms"] = std::round(*runtime_ms * 1000) / 1000;
  return j;
}

}  // namespace gfdiff
