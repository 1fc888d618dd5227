#include "conjugate/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include "conjugate/errors.hpp"

namespace conjugate {

namespace {

Json optional_number(const std::optional<double>& value) { return value ? Json(*value) : Json(nullptr); }

void dump_into(std::string& out, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        out += Json(key).dump();
        out += ": ";
        dump_into(out, item, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        dump_into(out, item, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = value.get<double>();
      out += std::isfinite(d) ? format_number(d) : "null";
      return;
    }
    default:
      out += value.dump();
      return;
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string dump(const Json& document) {
  std::string out;
  dump_into(out, document, 0);
  out += '\n';
  return out;
}

Json to_json(const WidthReport& report) {
  Json j;
  j["mean_ordinate"] = report.mean_ordinate;
  j["effective_width"] = report.effective_width;
  j["energy"] = report.energy;
  j["width_reliable"] = report.reliable;
  return j;
}

Json to_json(const UncertaintyReport& report) {
  Json j;
  j["convention"] = to_string(report.convention);
  j["bound_constant"] = report.bound_constant;
  j["product"] = report.product;
  j["satisfied"] = report.satisfied;
  j["width_reliable"] = report.width_reliable;
  j["signal"] = to_json(report.signal_report);
  j["transform"] = to_json(report.transform_report);
  j["warnings"] = report.warnings;
  return j;
}

Json to_json(const CorpusAudit& audit) {
  Json j;
  j["convention"] = to_string(audit.convention);
  Json entries = Json::array();
  for (const auto& entry : audit.entries) {
    Json e;
    e["family"] = entry.family;
    if (entry.report) {
      e["report"] = to_json(*entry.report);
    } else {
      e["error"] = entry.error;
    }
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  j["minimum_product"] = optional_number(audit.minimum_product);
  j["minimum_family"] = audit.minimum_family;
  return j;
}

Json to_json(const std::vector<BoundCheck>& sweep) {
  Json rows = Json::array();
  for (const auto& row : sweep) {
    Json r;
    r["label"] = row.label;
    r["convention"] = to_string(row.convention);
    r["bound"] = row.bound;
    r["product"] = row.product;
    r["satisfied"] = row.satisfied;
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const SamplingScenario& scenario) {
  Json j;
  j["sample_interval"] = scenario.sample_interval;
  j["truncation_limit"] = optional_number(scenario.truncation_limit);
  j["nyquist_conjugate_limit"] = scenario.nyquist_conjugate_limit;
  j["conjugate_sample_interval"] = optional_number(scenario.conjugate_sample_interval);
  return j;
}

Json to_json(const AliasReport& report) {
  Json j;
  j["true_frequency"] = report.true_frequency;
  j["sampling_rate"] = report.sampling_rate;
  j["apparent_frequency"] = report.apparent_frequency;
  j["aliased"] = report.aliased;
  return j;
}

Json to_json(const PhysicalLimits& limits) {
  Json j;
  j["position_sample_interval"] = limits.position_sample_interval;
  j["nyquist_wavenumber"] = limits.nyquist_wavenumber;
  j["nyquist_momentum"] = limits.nyquist_momentum;
  j["truncation_limit"] = optional_number(limits.truncation_limit);
  j["wavenumber_sample_interval"] = optional_number(limits.wavenumber_sample_interval);
  j["momentum_sample_interval"] = optional_number(limits.momentum_sample_interval);
  return j;
}

Json to_json(const ConjugatePair& pair) {
  Json j;
  j["kind"] = to_string(pair.kind);
  j["width_a"] = pair.width_a;
  j["width_b"] = pair.width_b;
  j["product"] = pair.product;
  j["bound_choice"] = to_string(pair.bound_choice);
  j["bound"] = pair.bound;
  j["satisfied"] = pair.satisfied;
  j["bound_h_over_2"] = pair.bound_h_over_2;
  j["satisfied_h_over_2"] = pair.satisfied_h_over_2;
  j["bound_hbar_over_2"] = pair.bound_hbar_over_2;
  j["satisfied_hbar_over_2"] = pair.satisfied_hbar_over_2;
  j["width_reliable"] = pair.width_reliable;
  return j;
}

Json to_json(const ReducedWavenumber& reduced, const BrillouinZone& zone) {
  Json j;
  j["lattice_spacing_a"] = zone.lattice_spacing();
  j["boundary"] = zone.boundary();
  j["reduced_k"] = reduced.reduced_k;
  j["zone_index"] = reduced.zone_index;
  return j;
}

Json to_json(const HydrogenicTransition& t) {
  Json j;
  j["n"] = t.n;
  j["m"] = t.m;
  j["Z"] = t.z;
  j["lifetime_tau_n"] = t.lifetime_tau_n;
  j["rate_constant_k"] = t.rate_constant_k;
  j["transition_energy_E_mn"] = t.transition_energy_E_mn;
  j["transition_energy_E_mn_eV"] = t.transition_energy_E_mn / kElectronVolt;
  j["min_resolvable_energy"] = t.min_resolvable_energy;
  j["min_resolvable_energy_eV"] = t.min_resolvable_energy / kElectronVolt;
  j["observable"] = t.observable;
  j["margin"] = t.margin;
  return j;
}

Json to_json(const PhysicalConstants& c) {
  Json j;
  j["version"] = c.version;
  j["planck_h"] = c.planck_h;
  j["hbar"] = c.hbar;
  j["fine_structure_alpha"] = c.fine_structure_alpha;
  j["light_speed_c"] = c.light_speed_c;
  j["rydberg_R_H"] = c.rydberg_R_H;
  return j;
}

PhysicalConstants constants_from_json(const nlohmann::json& document, PhysicalConstants base) {
  if (!document.is_object()) {
    throw ParameterError("constants document must be a JSON object");
  }
  bool hbar_given = false;
  bool h_given = false;
  for (const auto& [key, value] : document.items()) {
    if (key == "version") {
      if (!value.is_string()) throw ParameterError("constants field 'version' must be a string");
      base.version = value.get<std::string>();
      continue;
    }
    if (!value.is_number()) {
      throw ParameterError("constants field '" + key + "' must be a number");
    }
    const double v = value.get<double>();
    if (key == "planck_h") {
      base.planck_h = v;
      h_given = true;
    } else if (key == "hbar") {
      base.hbar = v;
      hbar_given = true;
    } else if (key == "fine_structure_alpha") {
      base.fine_structure_alpha = v;
    } else if (key == "light_speed_c") {
      base.light_speed_c = v;
    } else if (key == "rydberg_R_H") {
      base.rydberg_R_H = v;
    } else {
      throw ParameterError("unknown constants field '" + key + "'");
    }
  }
  if (h_given && !hbar_given) {
    base.hbar = base.planck_h / (2.0 * std::numbers::pi);
  }
  if (!document.contains("version")) {
    base.version += "+override";
  }
  validate(base);
  return base;
}

}  // namespace conjugate
