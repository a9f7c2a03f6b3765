#include "mekr/json_io.hpp"

#include <stdexcept>

namespace mekr {

Json multiset_to_json(const Multiset& f) {
  return Json(f.to_elements());
}

Multiset multiset_from_json(const Json& j, int m) {
  if (!j.is_array()) throw std::invalid_argument("multiset: expected a JSON array");
  std::vector<int> elements;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw std::invalid_argument("multiset: elements must be integers");
    elements.push_back(e.get<int>());
  }
  return Multiset::from_elements(m, elements);
}

Json family_to_json(const Family& fam) {
  Json out = Json::array();
  for (const Multiset& f : fam.members()) out.push_back(multiset_to_json(f));
  return out;
}

Family family_from_json(const Json& j, const Universe& u) {
  if (!j.is_array()) throw std::invalid_argument("family: expected a JSON array");
  Family out(u);
  for (const auto& member : j) out.insert(multiset_from_json(member, u.ground_size()));
  return out;
}

Json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(UINT64_MAX)) return Json(static_cast<std::uint64_t>(v));
  if (v < 0 && v >= BigInt(INT64_MIN)) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json form_to_json(const PairCanonicalForm& form) {
  auto [f, g] = realize_pair(form);
  Json out;
  out["F"] = family_to_json(f);
  out["G"] = family_to_json(g);
  return out;
}

Json report_to_json(const SearchReport& rep) {
  Json out;
  out["m"] = rep.m;
  out["k"] = rep.k;
  out["t"] = rep.t;
  out["engine"] = rep.engine;
  out["optimum"] = rep.optimum;
  out["bound"] = bigint_to_json(rep.bound);
  out["bound_applicable"] = rep.bound_applicable;
  out["classes"] = Json::array();
  for (const PairCanonicalForm& form : rep.classes)
    out["classes"].push_back(form_to_json(form));
  out["verdict"] = rep.verdict.str();
  out["elapsed_ms"] = rep.elapsed_ms;
  out["seed"] = rep.seed;
  if (!rep.raw_families.empty()) {
    Universe u(rep.m, rep.k);
    Json raw = Json::array();
    for (const auto& ranks : rep.raw_families) {
      Json fam = Json::array();
      for (std::uint64_t r : ranks) fam.push_back(multiset_to_json(u.unrank(r)));
      raw.push_back(std::move(fam));
    }
    out["raw"] = std::move(raw);
  }
  return out;
}

Json pipeline_to_json(const PipelineReport& rep) {
  Json out;
  out["m"] = rep.m;
  out["k"] = rep.k;
  out["t"] = rep.t;
  out["samples"] = rep.samples;
  out["seed"] = rep.seed;
  out["passed"] = rep.passed;
  out["failures"] = Json::array();
  for (const PipelineFailure& f : rep.failures) {
    Json j;
    j["sample"] = f.sample;
    j["seed"] = f.sample_seed;
    j["reason"] = f.reason;
    out["failures"].push_back(std::move(j));
  }
  out["elapsed_ms"] = rep.elapsed_ms;
  return out;
}

Json trace_to_json(const CompressionTrace& trace) {
  Json out = Json::array();
  for (const ShiftRecord& rec : trace.shifts) {
    Json j;
    j["i"] = rec.i;
    j["s"] = rec.s;
    j["j"] = rec.j;
    j["changed_count"] = rec.changed;
    j["kernel_cells"] = rec.kernel_cells;
    out.push_back(std::move(j));
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace mekr
