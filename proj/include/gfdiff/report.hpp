#pragma once

#include <optional>

#include <json.hpp>

#include "gfdiff/quartic.hpp"
#include "gfdiff/theorems.hpp"
#include "gfdiff/uniformity.hpp"

namespace gfdiff {

// Key order is insertion order so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json field_json(const Field& field);
Json to_json(const ConditionReport& rep);
Json to_json(const KleinReport& rep);
Json to_json(const MorseReport& rep, const Field& field);
Json to_json(const ChebotarevParams& p);
Json to_json(const MonodromyStats& st);
Json row_summary_json(const Field& field, const SpectrumRow& row);
// {delta, alpha, beta[, runtime_ms]}
Json delta_summary_json(const Field& field, const DeltaResult& r, std::optional<double> runtime_ms);

}  // namespace gfdiff
